#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "weylq/error.hpp"

namespace weylq {

using i64 = long long;

/**
 * A vector in (1/2)Z^n on the epsilon basis.  Coordinates are stored doubled
 * so that the half-integral weights of the odd orthogonal groups (rho has
 * coordinates 1/2, 3/2, ...) stay exact integers internally.
 *
 * All arithmetic is componentwise and exact; comparison is lexicographic on
 * the doubled coordinates, which makes Weight usable as an ordered map key
 * with a deterministic order.
 */
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t n) : c2_(n, 0) {}

    /** Build from integer coordinates. */
    static Weight of_ints(std::vector<i64> v) {
        Weight w;
        w.c2_ = std::move(v);
        for (auto& c : w.c2_) c *= 2;
        return w;
    }

    /** Build from already-doubled coordinates (exact half-integers). */
    static Weight of_doubled(std::vector<i64> v) {
        Weight w;
        w.c2_ = std::move(v);
        return w;
    }

    std::size_t size() const { return c2_.size(); }

    /** Doubled coordinate (2 * beta_i), 0-based index. */
    i64 d(std::size_t i) const { return c2_[i]; }
    i64& d(std::size_t i) { return c2_[i]; }

    const std::vector<i64>& doubled() const { return c2_; }

    bool integral() const {
        for (i64 c : c2_)
            if (c % 2 != 0) return false;
        return true;
    }

    /** Integer coordinate; requires integrality. */
    i64 at(std::size_t i) const {
        require_internal(c2_[i] % 2 == 0, "Weight::at on half-integral coordinate");
        return c2_[i] / 2;
    }

    std::vector<i64> ints() const {
        std::vector<i64> v(size());
        for (std::size_t i = 0; i < size(); ++i) v[i] = at(i);
        return v;
    }

    /** Sum of the doubled coordinates (2 * |beta|). */
    i64 sum2() const { return std::accumulate(c2_.begin(), c2_.end(), i64{0}); }

    bool is_zero() const {
        for (i64 c : c2_)
            if (c != 0) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        require_internal(size() == o.size(), "Weight rank mismatch");
        for (std::size_t i = 0; i < size(); ++i) c2_[i] += o.c2_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        require_internal(size() == o.size(), "Weight rank mismatch");
        for (std::size_t i = 0; i < size(); ++i) c2_[i] -= o.c2_[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const {
        Weight r = *this;
        for (auto& c : r.c2_) c = -c;
        return r;
    }
    Weight scaled(i64 k) const {
        Weight r = *this;
        for (auto& c : r.c2_) c *= k;
        return r;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c2_ == b.c2_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c2_ != b.c2_; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c2_ < b.c2_; }

    /** Pairing 2*(a,b) where (,) is the standard inner product. */
    friend i64 dot2(const Weight& a, const Weight& b) {
        require_internal(a.size() == b.size(), "Weight rank mismatch");
        i64 s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a.c2_[i] * b.c2_[i];
        require_internal(s % 2 == 0, "dot2: pairing is not half-integral");
        return s / 2;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < size(); ++i) {
            if (i) os << ',';
            if (c2_[i] % 2 == 0) os << c2_[i] / 2;
            else os << c2_[i] << "/2";
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<i64> c2_;
};

/** True when v is weakly increasing. */
inline bool weakly_increasing(const std::vector<i64>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] > v[i]) return false;
    return true;
}

/**
 * A partition in the weakly increasing convention: parts[0] <= parts[1] <= ...,
 * all parts nonnegative.  Kept as a plain vector with a validator so that
 * callers can also feed weakly increasing GL weights (possibly negative)
 * through the same plumbing when a block permits it.
 */
inline void require_partition(const std::vector<i64>& parts) {
    require_user(weakly_increasing(parts), "partition parts must be weakly increasing");
    require_user(parts.empty() || parts.front() >= 0, "partition parts must be nonnegative");
}

inline i64 vec_sum(const std::vector<i64>& v) {
    return std::accumulate(v.begin(), v.end(), i64{0});
}

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t h = 1469598103934665603ull;
        for (i64 c : w.doubled()) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace weylq
