#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylq/characters.hpp"
#include "weylq/qpoly.hpp"
#include "weylq/rootsys.hpp"
#include "weylq/weight.hpp"

namespace weylq {

/**
 * Element w * t_beta of the extended affine group (W acting on the lattice
 * of translations t_P), with w a signed permutation and beta an integral
 * translation.  Composition follows
 * t_beta * w = w * t_{w^{-1} beta}, so
 * (w1 t_b1)(w2 t_b2) = (w1 w2) t_{w2^{-1} b1 + b2}.
 */
struct AffineElement {
    SignedPerm w;
    Weight beta;

    bool is_identity() const { return w.is_identity() && beta.is_zero(); }

    AffineElement inverse() const { return {w.inverse(), -(w.act(beta))}; }

    friend AffineElement operator*(const AffineElement& a, const AffineElement& b) {
        return {a.w * b.w, b.w.inverse().act(a.beta) + b.beta};
    }

    friend bool operator==(const AffineElement& a, const AffineElement& b) {
        return a.w == b.w && a.beta == b.beta;
    }
    friend bool operator!=(const AffineElement& a, const AffineElement& b) { return !(a == b); }
    friend bool operator<(const AffineElement& a, const AffineElement& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.beta < b.beta;
    }

    std::string str() const { return w.str() + " t" + beta.str(); }
};

AffineElement affine_identity(int rank);
AffineElement pure_translation(const Weight& beta);

/** Scaled affine action (w t_beta) . gamma = w.gamma - ell * w.beta. */
Weight affine_act(const AffineElement& e, const Weight& gamma, int ell);

/** Unscaled affine action x -> w.(x + beta), used by the geometric oracle. */
Weight natural_act(const AffineElement& e, const Weight& x);

/**
 * Length of an extended affine element:
 * sum over positive roots alpha of |(beta, alpha^v) + [w.alpha negative]|.
 */
i64 affine_length(const RootSystem& rs, const AffineElement& e);

/**
 * Independent geometric length oracle: the number of affine hyperplanes
 * (x, alpha^v) = k separating the fundamental alcove from its image under
 * the unscaled action.  Exact rational arithmetic throughout.
 */
i64 separation_count(const RootSystem& rs, const AffineElement& e);

/**
 * Label of the coset of the translation part in (weight lattice)/(root
 * lattice): coordinate sum for type A (and the rank-1 degenerate D), the
 * sum modulo 2 for C and D, always 0 for B.  Two elements can be related
 * by a length-zero factor exactly when their labels agree.
 */
i64 omega_label(const RootSystem& rs, const Weight& beta);

/** A length-zero element carrying the given label (identity for label 0). */
AffineElement omega_rep(const RootSystem& rs, i64 label);

/**
 * Canonical representative of the orbit of beta under the scaled action of
 * the full extended group: coordinates folded into [-ell/2, 0] (types B, C,
 * D) or (-ell, 0] (type A), sorted decreasingly; for type D a leftover odd
 * flip count with no coordinate on 0 or -ell/2 turns the smallest absolute
 * coordinate positive.
 */
Weight alcove_fold(const RootSystem& rs, const Weight& beta, int ell);

/** Normal form of a weight under the scaled affine action. */
struct AlcoveNormalForm {
    /** The canonical orbit representative (== alcove_fold of the input). */
    Weight nu;
    /** Minimal-length e with e . nu = input (unique up to length-0 factors). */
    AffineElement min_rep;
    /** Full stabilizer of nu in the extended group (may contain affine
     *  reflections when nu sits on the far wall). */
    std::vector<AffineElement> stabilizer;
};

AlcoveNormalForm alcove_normalize(const RootSystem& rs, const Weight& beta, int ell);

/** True iff ell*beta + rho has trivial stabilizer under the scaled action. */
bool check_regularity(const RootSystem& rs, const Weight& beta, int ell);

/**
 * Kazhdan-Lusztig data for one affine group up to a length bound, plus the
 * parabolic / generalized Hall-Littlewood evaluations built on it.
 *
 * The table stores the polynomials p_{y,w} of the canonical basis
 * C'_w = sum_y p_{y,w} T_y in the Hecke variable v of the defining
 * relations T_s^2 = (v^{-1} - v) T_s + 1; the classical normalization is
 * p_{y,w}(v) = v^{l(w)-l(y)} P_{y,w}(v^{-2}).  Output-facing results are
 * re-expressed in q = v^2 (a QPolyHalf marks genuinely half-integral
 * powers).  Construction is a staged fixpoint over length levels; within a
 * level rows only read lower levels, so they may fill in parallel.  A
 * completed context is immutable and safe to share across threads.
 *
 * When the environment variable WEYLQ_CACHE_DIR names a directory, tables
 * are persisted there in a versioned binary format keyed by
 * (type, rank, bound) and reloaded on the next construction.
 */
class HeckeContext {
public:
    static constexpr int default_length_bound = 14;
    static constexpr int max_length_bound = 24;

    explicit HeckeContext(RootSystem rs, int length_bound = default_length_bound, int jobs = 1);

    const RootSystem& root_system() const { return rs_; }
    int length_bound() const { return bound_; }

    std::size_t size() const { return elems_.size(); }
    const std::vector<AffineElement>& elements() const { return elems_; }
    i64 element_length(std::size_t idx) const { return len_[idx]; }
    std::optional<std::size_t> index_of(const AffineElement& e) const;
    /** Row of the table: y-index -> p_{y,w} for all y below w. */
    const std::map<std::size_t, QPoly>& row(std::size_t w_idx) const { return rows_[w_idx]; }

    /**
     * p_{y,w} for extended elements, reduced by a common length-zero
     * factor.  Returns 0 across distinct cosets or when y is not below w;
     * raises user_error when w falls outside the length bound.
     */
    QPoly kl_entry(const AffineElement& y, const AffineElement& w) const;

    /**
     * Parabolic polynomial of the pair (lower, top), both taken to their
     * alcove normal forms: sum over z in the stabilizer of
     * (-v)^{l(z)} p_{w(lower) z, w(top)}, re-expressed in q = v^2.
     * Requires both weights in one orbit; coefficients are asserted >= 0.
     */
    QPolyHalf parabolic_kl(const Weight& lower, const Weight& top, int ell) const;

    /**
     * Generalized Hall-Littlewood series of a partition mu: the expansion
     * sum_lam parabolic_kl(mu + rho, ell*lam + rho) s_lam over partitions
     * with |lam| <= bound (exact in that range; zero coefficients omitted).
     * In type A the grading forces ell * |lam| = |mu|, so the expansion is
     * exact and the bound is not consulted.
     */
    CharExpansionQ g_function(const Weight& mu, int ell, int bound) const;

    /** h_function(mu, ell, B) = g_function(ell*mu, ell, B). */
    CharExpansionQ h_function(const Weight& mu, int ell, int bound) const;

    /** Deterministic digest of the whole table (for determinism and cache tests). */
    std::size_t digest() const;

private:
    void build(int jobs);
    void compute_row(std::size_t w_idx, const std::vector<std::vector<std::size_t>>& left_mult);
    QPolyHalf parabolic_from(const AlcoveNormalForm& lower, const AlcoveNormalForm& top) const;
    std::string cache_path() const;
    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;

    RootSystem rs_;
    int bound_ = default_length_bound;
    std::vector<AffineElement> gens_;
    std::vector<AffineElement> elems_;
    std::map<std::vector<i64>, std::size_t> index_;
    std::vector<i64> len_;
    std::vector<std::vector<std::size_t>> levels_;
    std::vector<std::map<std::size_t, QPoly>> rows_;
};

} // namespace weylq
