#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "weylq/error.hpp"
#include "weylq/weight.hpp"

namespace weylq {

/**
 * Polynomial in one variable q with exact integer coefficients,
 * coeffs[k] = coefficient of q^k, no trailing zeros.
 */
class QPoly {
public:
    QPoly() = default;
    QPoly(i64 c) { // NOLINT(google-explicit-constructor): scalars embed naturally
        if (c != 0) coeffs_.push_back(c);
    }
    static QPoly monomial(i64 c, std::size_t deg) {
        QPoly p;
        if (c != 0) {
            p.coeffs_.assign(deg + 1, 0);
            p.coeffs_[deg] = c;
        }
        return p;
    }

    const std::vector<i64>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /** Degree of the polynomial; -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    i64 coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

    i64 at_one() const {
        i64 s = 0;
        for (i64 c : coeffs_) s += c;
        return s;
    }

    bool nonnegative() const {
        for (i64 c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    QPoly& operator+=(const QPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        QPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }
    QPoly operator-() const {
        QPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    /** Multiply by c*q^deg in place. */
    QPoly& shift_scale(i64 c, std::size_t deg) {
        if (c == 0 || is_zero()) { coeffs_.clear(); return *this; }
        coeffs_.insert(coeffs_.begin(), deg, 0);
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            i64 c = coeffs_[k];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            i64 a = c > 0 ? c : -c;
            if (k == 0) os << a;
            else {
                if (a != 1) os << a << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<i64> coeffs_;
};

/**
 * A Kazhdan-Lusztig-side polynomial re-expressed in the partition-function
 * variable q = v^2, where v is the Hecke parameter of the T_s relations.
 * Every such polynomial has uniform v-parity; when the parity is odd the
 * exact value is q^(1/2) * poly(q), recorded by half_power.  Evaluation at
 * q = 1 is parity-insensitive.
 */
struct QPolyHalf {
    QPoly poly;            // coefficients of q^k (k integer)
    bool half_power = false; // true: multiply by q^(1/2)

    i64 at_one() const { return poly.at_one(); }
    bool is_zero() const { return poly.is_zero(); }
    std::string str() const {
        if (!half_power || poly.is_zero()) return poly.str();
        return "q^(1/2) * (" + poly.str() + ")";
    }
    friend bool operator==(const QPolyHalf& a, const QPolyHalf& b) {
        if (a.poly.is_zero() && b.poly.is_zero()) return true;
        return a.half_power == b.half_power && a.poly == b.poly;
    }
};

/**
 * Split a polynomial in the Hecke variable v into the q = v^2 form.
 * Requires uniform parity of the exponents (which holds for every
 * Kazhdan-Lusztig-positive combination produced here); mixed parity
 * signals an internal bug.
 */
inline QPolyHalf v_to_q(const QPoly& v_poly) {
    QPolyHalf out;
    if (v_poly.is_zero()) return out;
    int par = -1;
    for (int k = 0; k <= v_poly.degree(); ++k) {
        if (v_poly.coeff(k) == 0) continue;
        if (par < 0) par = k % 2;
        require_internal(k % 2 == par, "v_to_q: mixed-parity polynomial");
    }
    out.half_power = (par == 1);
    std::vector<i64> cs;
    for (int k = par; k <= v_poly.degree(); k += 2) cs.push_back(v_poly.coeff(k));
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    for (std::size_t k = 0; k < cs.size(); ++k) out.poly += QPoly::monomial(cs[k], k);
    return out;
}

} // namespace weylq
