#pragma once

#include <map>
#include <memory>
#include <vector>

#include "weylq/characters.hpp"
#include "weylq/levi.hpp"
#include "weylq/partition.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

/** Positive roots of the ambient group that the subgroup does not use. */
std::vector<Weight> complement_positive_roots(const RootSystem& rs, const LeviDatum& datum);

/**
 * State for branching computations against one subgroup datum: the ambient
 * group enumeration and the Kostant partition function over the
 * complementary positive roots.  The partition-function memo is per
 * instance and unguarded; shard one context per worker and add the
 * partial results.
 */
class BranchingContext {
public:
    BranchingContext(RootSystem rs, LeviDatum datum);

    const RootSystem& root_system() const { return rs_; }
    const LeviDatum& datum() const { return datum_; }

    /**
     * Multiplicity of the subgroup irreducible with highest weight mu
     * inside the restriction of the ambient irreducible with highest
     * weight lam: the alternating sum over the ambient group of the
     * complementary partition function at w o lam - mu, with mu taken in
     * global coordinates.  Always nonnegative.
     */
    i64 branching_coeff(const Weight& lam, const LeviWeight& mu);

private:
    RootSystem rs_;
    LeviDatum datum_;
    std::vector<SignedPerm> group_;
    PartitionFn pf_;
};

/**
 * Expansion of the subgroup character series S_{mu,I} in the ambient
 * irreducible basis: the coefficient of s_lam is the branching
 * multiplicity of mu in lam.  The expansion runs over partition-indexed
 * characters; in type A the coordinate-sum grading makes it finite and
 * exact (no bound emitted), otherwise it is exact for |lam| <= bound.
 */
CharExpansionZ s_mu_I_truncated(const RootSystem& rs, const LeviDatum& datum,
                                const LeviWeight& mu, int bound);

/**
 * Brute-force restriction oracle, independent of the alternating-sum
 * formula: works directly in the monomial ring, repeatedly peeling a
 * maximal remaining weight and subtracting the matching subgroup
 * character.  Holds one character ring per block, so an instance is
 * reusable across calls with the same datum.  Not thread-safe.
 */
class RestrictionOracle {
public:
    RestrictionOracle(CharacterRing& ambient, LeviDatum datum);

    const LeviDatum& datum() const { return datum_; }

    /** Character of the subgroup irreducible, in the ambient variables. */
    const ZPoly& levi_character(const LeviWeight& mu);
    /** Dimension of the subgroup irreducible. */
    i64 levi_dim(const LeviWeight& mu);

    /**
     * Complete decomposition of the restriction of the ambient
     * irreducible: subgroup highest weights with multiplicities.
     */
    std::map<LeviWeight, i64> restrict_character(const Weight& lam);

private:
    CharacterRing& ambient_;
    LeviDatum datum_;
    std::vector<std::unique_ptr<CharacterRing>> block_rings_;
    std::map<LeviWeight, ZPoly> char_cache_;
};

} // namespace weylq
