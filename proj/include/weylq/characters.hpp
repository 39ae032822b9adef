#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "weylq/laurent.hpp"
#include "weylq/partition.hpp"
#include "weylq/qpoly.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

/**
 * Finite expansion in the irreducible-character basis, integer
 * coefficients.  truncation_bound is present exactly when the represented
 * series is infinite (the expansion is then exact for |lam| <= bound and
 * makes no claim beyond).
 */
struct CharExpansionZ {
    Type type = Type::A;
    int rank = 0;
    std::optional<int> truncation_bound;
    std::map<Weight, i64> terms;
};

/** Same with q-polynomial coefficients (possibly carrying a q^(1/2) marker). */
struct CharExpansionQ {
    Type type = Type::A;
    int rank = 0;
    std::optional<int> truncation_bound;
    std::map<Weight, QPolyHalf> terms;
};

/** All partitions (weakly increasing, nonnegative) of total <= max_sum. */
std::vector<Weight> partitions_up_to(int rank, int max_sum);
/** All partitions of exactly the given total. */
std::vector<Weight> partitions_exact(int rank, int sum);

/** Action of a group element on a polynomial, term by term. */
ZPoly weyl_act(const SignedPerm& w, const ZPoly& p);

/**
 * Character computations for one ambient group.  Characters are cached;
 * the cache fill is idempotent and guarded, so a ring may be shared by
 * several workers.
 */
class CharacterRing {
public:
    explicit CharacterRing(RootSystem rs);

    const RootSystem& root_system() const { return rs_; }
    const std::vector<SignedPerm>& group() const { return group_; }
    const ZPoly& a_rho() const { return a_rho_; }

    /** Alternating orbit sum sum_w eps(w) x^{w gamma} for regular dominant gamma. */
    ZPoly alternant(const Weight& gamma) const;
    /** Weyl character by exact division a_{lam+rho} / a_rho. */
    ZPoly character_uncached(const Weight& lam) const;
    const ZPoly& character(const Weight& lam);

    /**
     * Exact finite expansion of a W-invariant polynomial in characters:
     * multiply by a_rho, read the coefficients at regular dominant
     * exponents, and verify the full reconstruction (which simultaneously
     * certifies W-invariance).
     */
    std::map<Weight, i64> decompose(const ZPoly& p) const;
    /** Reference decomposition by leading-term subtraction (slow path). */
    std::map<Weight, i64> decompose_by_subtraction(ZPoly p);

    i64 weight_multiplicity(const Weight& lam, const Weight& mu);
    /** dim V(lam): coefficient sum of the character. */
    i64 dim(const Weight& lam);

    /** Finite exact expansion of Psi_ell(s_lam) — the master plethysm oracle. */
    std::map<Weight, i64> psi_plethysm_schur(const Weight& lam, int ell);

private:
    RootSystem rs_;
    std::vector<SignedPerm> group_;
    ZPoly a_rho_;
    std::map<Weight, ZPoly> char_cache_;
    std::mutex cache_mutex_;
};

/**
 * The tables lam -> full expansion of Psi_ell(s_lam), for all lam in the
 * given list, optionally computed by several workers.
 */
std::map<Weight, std::map<Weight, i64>> psi_table(CharacterRing& ring, int ell,
                                                  const std::vector<Weight>& lams, int jobs = 1);

/**
 * Truncated expansion of the adjoint plethysm phi_ell(s_mu)
 * = sum_lam n_{lam,mu} s_lam with n_{lam,mu} read from the psi tables.
 * Type A is exact (the grading forces ell |lam| = |mu|, no bound emitted);
 * other types truncate at |lam| <= bound.
 */
CharExpansionZ phi_plethysm_truncated(CharacterRing& ring, const Weight& mu, int ell, int bound,
                                      int jobs = 1);

/**
 * Truncated Hall-Littlewood expansion Q'_mu = sum_lam K_{lam,mu}(q) s_lam
 * via the Lusztig q-analogue; exact for type A, truncated otherwise.
 */
CharExpansionQ hall_littlewood_truncated(CharacterRing& ring, const Weight& mu, int bound);

} // namespace weylq
