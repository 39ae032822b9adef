#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylq/error.hpp"
#include "weylq/qpoly.hpp"
#include "weylq/weight.hpp"

namespace weylq {

namespace detail {
inline bool coeff_is_zero(i64 c) { return c == 0; }
inline bool coeff_is_zero(const QPoly& c) { return c.is_zero(); }
} // namespace detail

/**
 * Sparse exact Laurent polynomial over the weight lattice: a finite map
 * exponent weight -> coefficient, with no stored zeros.  Coefficients are
 * plain integers or integer polynomials in q; all exponents share one rank.
 * Term order (and hence serialization) is lexicographic on coordinates.
 */
template <class C>
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

    static LaurentPoly one(std::size_t rank) {
        LaurentPoly p(rank);
        p.add_term(Weight(rank), C(1));
        return p;
    }
    static LaurentPoly monomial(const Weight& expo, C coeff) {
        LaurentPoly p(expo.size());
        p.add_term(expo, std::move(coeff));
        return p;
    }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t n_terms() const { return t_.size(); }
    const std::map<Weight, C>& terms() const { return t_; }

    C coefficient(const Weight& expo) const {
        auto it = t_.find(expo);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(const Weight& expo, C coeff) {
        require_internal(expo.size() == rank_, "exponent rank mismatch");
        if (detail::coeff_is_zero(coeff)) return;
        auto it = t_.find(expo);
        if (it == t_.end()) {
            t_.emplace(expo, std::move(coeff));
        } else {
            it->second += coeff;
            if (detail::coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_internal(rank_ == o.rank_, "polynomial rank mismatch");
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_internal(rank_ == o.rank_, "polynomial rank mismatch");
        for (const auto& [e, c] : o.t_) add_term(e, negate(c));
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly& scale(const C& k) {
        if (detail::coeff_is_zero(k)) {
            t_.clear();
            return *this;
        }
        for (auto it = t_.begin(); it != t_.end();) {
            it->second = it->second * k;
            it = detail::coeff_is_zero(it->second) ? t_.erase(it) : std::next(it);
        }
        return *this;
    }

    /** The polynomial with every exponent shifted by delta. */
    LaurentPoly shifted(const Weight& delta) const {
        LaurentPoly out(rank_);
        for (const auto& [e, c] : t_) out.t_.emplace(e + delta, c);
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        require_internal(a.rank_ == b.rank_, "polynomial rank mismatch");
        LaurentPoly out(a.rank_);
        if (a.is_zero() || b.is_zero()) return out;
        if constexpr (std::is_same_v<C, i64>) {
            if (packed_multiply(a, b, out)) return out;
        }
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.t_ == b.t_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /**
     * Canonical text form, one term per line in lexicographic exponent
     * order: "<coeff> * x1^<a1> ... xn^<an>" (all variables listed).
     */
    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (!first) os << "\n";
            first = false;
            os << coeff_str(c) << " *";
            for (std::size_t i = 0; i < rank_; ++i) {
                os << " x" << (i + 1) << "^";
                i64 d = e.d(i);
                if (d % 2 == 0) os << d / 2;
                else os << d << "/2";
            }
        }
        return os.str();
    }

private:
    static i64 negate(i64 c) { return -c; }
    static QPoly negate(const QPoly& c) { return -c; }
    static std::string coeff_str(i64 c) { return std::to_string(c); }
    static std::string coeff_str(const QPoly& c) { return "(" + c.str() + ")"; }

    /**
     * Hot path for integer coefficients at small rank: pack doubled
     * exponents into 16-bit fields of one 64-bit key and accumulate in a
     * hash map.  Falls back (returns false) when exponents do not fit.
     */
    static bool packed_multiply(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& out) {
        if (a.rank_ > 4) return false;
        if (a.t_.size() * b.t_.size() < 4096) return false; // not worth the setup
        // Offset 2^14 per 16-bit lane: a lane sum of two packed fields stays
        // below 2^16, so adding keys never carries across lanes.
        constexpr i64 kOffset = 1 << 14;
        constexpr i64 kLim = 8000;
        auto fits = [&](const LaurentPoly& p) {
            for (const auto& [e, c] : p.t_)
                for (std::size_t i = 0; i < p.rank_; ++i)
                    if (e.d(i) < -kLim || e.d(i) > kLim) return false;
            return true;
        };
        if (!fits(a) || !fits(b)) return false;
        auto pack = [&](const Weight& e) {
            std::uint64_t k = 0;
            for (std::size_t i = 0; i < e.size(); ++i)
                k |= static_cast<std::uint64_t>(e.d(i) + kOffset) << (16 * i);
            return k;
        };
        std::vector<std::pair<std::uint64_t, i64>> av, bv;
        av.reserve(a.t_.size());
        bv.reserve(b.t_.size());
        for (const auto& [e, c] : a.t_) av.emplace_back(pack(e), c);
        for (const auto& [e, c] : b.t_) bv.emplace_back(pack(e), c);
        std::uint64_t base = 0;
        for (std::size_t i = 0; i < a.rank_; ++i)
            base |= static_cast<std::uint64_t>(kOffset) << (16 * i);
        std::unordered_map<std::uint64_t, i64> acc;
        acc.reserve(av.size() + bv.size());
        for (const auto& [ka, ca] : av)
            for (const auto& [kb, cb] : bv) acc[ka + kb - base] += ca * cb;
        const std::size_t n = a.rank_;
        for (const auto& [k, c] : acc) {
            if (c == 0) continue;
            Weight e(n);
            for (std::size_t i = 0; i < n; ++i)
                e.d(i) = static_cast<i64>((k >> (16 * i)) & 0xffffu) - kOffset;
            out.t_.emplace(e, c);
        }
        return true;
    }

    std::size_t rank_;
    std::map<Weight, C> t_;
};

using ZPoly = LaurentPoly<i64>;
using ZqPoly = LaurentPoly<QPoly>;

/** Fully expanded product of (1 - x^a) over the given roots. */
inline ZPoly delta_product(const std::vector<Weight>& roots, std::size_t rank) {
    ZPoly p = ZPoly::one(rank);
    for (const Weight& a : roots) {
        require_internal(a.size() == rank, "root rank mismatch");
        p -= p.shifted(a);
    }
    return p;
}

/** Monomial plethysm x^beta -> x^{l beta}; a ring homomorphism. */
template <class C>
LaurentPoly<C> psi_l(const LaurentPoly<C>& p, int ell) {
    require_user(ell >= 1, "ell must be a positive integer");
    LaurentPoly<C> out(p.rank());
    for (const auto& [e, c] : p.terms()) out.add_term(e.scaled(ell), c);
    return out;
}

/**
 * Adjoint monomial operator: keeps exactly the monomials whose exponents
 * lie in (l Z)^n, dividing the exponents by l.
 */
template <class C>
LaurentPoly<C> phi_l(const LaurentPoly<C>& p, int ell) {
    require_user(ell >= 1, "ell must be a positive integer");
    LaurentPoly<C> out(p.rank());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (std::size_t i = 0; i < e.size() && keep; ++i)
            keep = (e.d(i) % (2 * ell) == 0);
        if (!keep) continue;
        Weight q(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) q.d(i) = e.d(i) / ell;
        out.add_term(q, c);
    }
    return out;
}

} // namespace weylq
