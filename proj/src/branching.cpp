#include "weylq/branching.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

namespace weylq {

std::vector<Weight> complement_positive_roots(const RootSystem& rs, const LeviDatum& datum) {
    require_user(datum.ambient == rs.type() && datum.rank == rs.rank(),
                 "subgroup datum does not match the group");
    std::set<Weight> levi;
    for (const Weight& r : levi_positive_roots(datum))
        require_internal(levi.insert(r).second, "subgroup positive root repeated");
    std::vector<Weight> out;
    std::size_t seen = 0;
    for (const Weight& r : rs.positive_roots()) {
        if (levi.count(r)) {
            ++seen;
            continue;
        }
        out.push_back(r);
    }
    require_internal(seen == levi.size(), "subgroup root outside the ambient positive system");
    return out;
}

BranchingContext::BranchingContext(RootSystem rs, LeviDatum datum)
    : rs_(std::move(rs)), datum_(std::move(datum)), group_(rs_.weyl_group()),
      pf_(complement_positive_roots(rs_, datum_), static_cast<std::size_t>(rs_.rank())) {}

i64 BranchingContext::branching_coeff(const Weight& lam, const LeviWeight& mu) {
    require_user(lam.size() == static_cast<std::size_t>(rs_.rank()),
                 "highest weight rank does not match the group");
    require_user(lam.integral(), "highest weight must be integral");
    require_user(rs_.dominant(lam), "highest weight must be dominant for the ambient group");
    validate_levi_weight(datum_, mu);
    require_user(levi_dominant(datum_, mu), "weight must be dominant for the subgroup");
    const Weight target = embed_weight(datum_, mu);
    i64 total = 0;
    for (const auto& w : group_) {
        const i64 c = pf_.count(rs_.dot(w, lam) - target);
        total += w.det() < 0 ? -c : c;
    }
    require_internal(total >= 0, "branching multiplicity came out negative");
    return total;
}

CharExpansionZ s_mu_I_truncated(const RootSystem& rs, const LeviDatum& datum,
                                const LeviWeight& mu, int bound) {
    validate_levi_weight(datum, mu);
    require_user(levi_dominant(datum, mu), "weight must be dominant for the subgroup");
    BranchingContext ctx(rs, datum);
    CharExpansionZ out;
    out.type = rs.type();
    out.rank = rs.rank();
    std::vector<Weight> lams;
    if (rs.type() == Type::A) {
        // Coordinate sums are conserved, so the expansion is finite and exact.
        const i64 total = embed_weight(datum, mu).sum2() / 2;
        if (total < 0) return out;
        lams = partitions_exact(rs.rank(), static_cast<int>(total));
    } else {
        require_user(bound >= 0, "truncation bound must be nonnegative");
        out.truncation_bound = bound;
        lams = partitions_up_to(rs.rank(), bound);
    }
    for (const Weight& lam : lams) {
        const i64 c = ctx.branching_coeff(lam, mu);
        if (c != 0) out.terms.emplace(lam, c);
    }
    return out;
}

RestrictionOracle::RestrictionOracle(CharacterRing& ambient, LeviDatum datum)
    : ambient_(ambient), datum_(std::move(datum)) {
    const RootSystem& rs = ambient_.root_system();
    require_user(datum_.ambient == rs.type() && datum_.rank == rs.rank(),
                 "subgroup datum does not match the group");
    for (const LeviBlock& b : datum_.blocks) {
        if (b.size() == 0) {
            block_rings_.push_back(nullptr);
            continue;
        }
        block_rings_.push_back(
            std::make_unique<CharacterRing>(RootSystem::build(block_type(b.kind), b.size())));
    }
}

const ZPoly& RestrictionOracle::levi_character(const LeviWeight& mu) {
    validate_levi_weight(datum_, mu);
    require_user(levi_dominant(datum_, mu), "weight must be dominant for the subgroup");
    auto it = char_cache_.find(mu);
    if (it != char_cache_.end()) return it->second;
    const std::size_t n = static_cast<std::size_t>(datum_.rank);
    ZPoly prod = ZPoly::one(n);
    for (std::size_t b = 0; b < datum_.blocks.size(); ++b) {
        const LeviBlock& block = datum_.blocks[b];
        if (block.size() == 0) continue;
        const ZPoly& ch = block_rings_[b]->character(Weight::of_ints(mu.comps[b]));
        ZPoly embedded(n);
        for (const auto& [e, c] : ch.terms()) {
            Weight g(n);
            for (int a = 0; a < block.size(); ++a) {
                const int x = block.indices[static_cast<std::size_t>(a)];
                const i64 v = e.d(static_cast<std::size_t>(a));
                g.d(static_cast<std::size_t>(std::abs(x) - 1)) = x > 0 ? v : -v;
            }
            embedded.add_term(g, c);
        }
        prod = prod * embedded;
    }
    return char_cache_.emplace(mu, std::move(prod)).first->second;
}

i64 RestrictionOracle::levi_dim(const LeviWeight& mu) {
    i64 d = 0;
    for (const auto& [e, c] : levi_character(mu).terms()) d += c;
    return d;
}

std::map<LeviWeight, i64> RestrictionOracle::restrict_character(const Weight& lam) {
    ZPoly rem = ambient_.character(lam);
    std::map<LeviWeight, i64> out;
    while (!rem.is_zero()) {
        // A remaining weight maximizing sum_i i * e_i is maximal for the
        // subgroup root order (every embedded positive root has positive
        // value), hence the highest weight of a remaining constituent.
        const Weight* best = nullptr;
        i64 best_f = 0;
        for (const auto& [e, c] : rem.terms()) {
            i64 f = 0;
            for (std::size_t i = 0; i < e.size(); ++i) f += static_cast<i64>(i + 1) * e.d(i);
            if (!best || f > best_f || (f == best_f && *best < e)) {
                best = &e;
                best_f = f;
            }
        }
        LeviWeight top;
        top.comps.resize(datum_.blocks.size());
        for (std::size_t b = 0; b < datum_.blocks.size(); ++b) {
            const LeviBlock& block = datum_.blocks[b];
            top.comps[b].reserve(block.indices.size());
            for (int x : block.indices) {
                const i64 v = best->at(static_cast<std::size_t>(std::abs(x) - 1));
                top.comps[b].push_back(x > 0 ? v : -v);
            }
        }
        require_internal(levi_dominant(datum_, top),
                         "restriction oracle: maximal weight is not dominant for the subgroup");
        const i64 mult = rem.coefficient(*best);
        require_internal(mult > 0, "restriction oracle: nonpositive multiplicity (signals a bug)");
        ZPoly piece = levi_character(top);
        piece.scale(mult);
        rem -= piece;
        require_internal(out.emplace(std::move(top), mult).second,
                         "restriction oracle: highest weight peeled twice");
    }
    return out;
}

} // namespace weylq
