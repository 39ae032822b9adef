#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "weylq/error.hpp"
#include "weylq/qpoly.hpp"
#include "weylq/rootsys.hpp"
#include "weylq/weight.hpp"

namespace weylq {

/**
 * Kostant-style vector partition function for a fixed list of roots:
 * count(gamma) is the number of multisets of the roots summing to gamma,
 * count_q weights a multiset of total multiplicity m by q^m.
 *
 * Every admitted root must have all coordinate suffix sums >= 0 (true for
 * the positive systems used here and for every embedded Levi root written
 * in global coordinates); this both guarantees finiteness and justifies
 * the suffix-sum pruning.  Memoization is per root index with packed keys;
 * instances are not thread-safe — use one per worker.
 */
class PartitionFn {
public:
    PartitionFn(std::vector<Weight> roots, std::size_t rank)
        : rank_(rank), roots_(std::move(roots)) {
        require_internal(rank_ >= 1 && rank_ <= 8, "partition function supports rank 1..8");
        field_bits_ = 64 / static_cast<unsigned>(rank_);
        offset_ = i64{1} << (field_bits_ - 1);
        all_sum_zero_ = true;
        for (const Weight& r : roots_) {
            require_internal(r.size() == rank_, "root rank mismatch");
            i64 suffix = 0;
            for (std::size_t i = rank_; i-- > 0;) {
                require_internal(r.d(i) % 2 == 0, "roots must be integral");
                suffix += r.d(i) / 2;
                require_internal(suffix >= 0, "root violates the suffix-sum property");
            }
            if (suffix != 0) all_sum_zero_ = false;
        }
        memo_z_.resize(roots_.size());
        memo_q_.resize(roots_.size());
    }

    const std::vector<Weight>& roots() const { return roots_; }

    i64 count(const Weight& gamma) {
        require_internal(gamma.size() == rank_, "weight rank mismatch");
        if (!gamma.integral()) return 0;
        return eval<i64>(0, gamma, memo_z_);
    }

    QPoly count_q(const Weight& gamma) {
        require_internal(gamma.size() == rank_, "weight rank mismatch");
        if (!gamma.integral()) return QPoly(0);
        return eval<QPoly>(0, gamma, memo_q_);
    }

private:
    template <class V>
    V eval(std::size_t i, const Weight& g,
           std::vector<std::unordered_map<std::uint64_t, V>>& memo) {
        // Necessary conditions: all suffix sums >= 0 (and total = 0 when
        // every root has coordinate sum zero).
        i64 suffix = 0;
        for (std::size_t k = rank_; k-- > 0;) {
            suffix += g.d(k) / 2;
            if (suffix < 0) return V(0);
        }
        if (all_sum_zero_ && suffix != 0) return V(0);
        if (g.is_zero()) return V(1);
        if (i == roots_.size()) return V(0);
        std::uint64_t key = pack(g);
        auto& table = memo[i];
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        V value = eval<V>(i + 1, g, memo);
        V used = eval<V>(i, g - roots_[i], memo);
        if constexpr (std::is_same_v<V, QPoly>) {
            value += QPoly::monomial(1, 1) * used; // one more copy of root i
        } else {
            value += used;
        }
        table.emplace(key, value);
        return value;
    }

    std::uint64_t pack(const Weight& g) const {
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < rank_; ++k) {
            i64 v = g.d(k) / 2 + offset_;
            require_internal(v >= 0 && v < (i64{1} << field_bits_),
                             "partition function argument out of packing range");
            key |= static_cast<std::uint64_t>(v) << (field_bits_ * k);
        }
        return key;
    }

    std::size_t rank_;
    std::vector<Weight> roots_;
    unsigned field_bits_ = 0;
    i64 offset_ = 0;
    bool all_sum_zero_ = false;
    std::vector<std::unordered_map<std::uint64_t, i64>> memo_z_;
    std::vector<std::unordered_map<std::uint64_t, QPoly>> memo_q_;
};

/**
 * Lusztig q-analogue K_{lam,mu}(q) = sum_w eps(w) P_q(w o lam - mu), with
 * P_q the q-partition function of the full positive system.  The caller
 * supplies the PartitionFn built on rs.positive_roots() so the memo is
 * shared across invocations.
 */
inline QPoly lusztig_q(const RootSystem& rs, const std::vector<SignedPerm>& group,
                       PartitionFn& pf, const Weight& lam, const Weight& mu) {
    require_user(rs.dominant(lam) && rs.dominant(mu), "lusztig_q requires dominant weights");
    QPoly out;
    for (const auto& w : group) {
        QPoly term = pf.count_q(rs.dot(w, lam) - mu);
        if (w.det() < 0) out -= term;
        else out += term;
    }
    return out;
}

} // namespace weylq
