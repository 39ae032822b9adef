#pragma once

#include <string>
#include <vector>

#include "weylq/laurent.hpp"
#include "weylq/levi.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

/**
 * Result of the residue-class decomposition of a partition mu with respect
 * to a step ell: either the adjoint plethysm image of s_mu vanishes
 * identically (zero == true), or it equals sign times the character of a
 * Levi-type subgroup at the per-block quotient weight.
 */
struct QuotientResult {
    bool zero = false;
    /** Determinant of the distinguished group element below; +1 when zero. */
    int sign = 1;
    /**
     * The element realizing the factorization, materialized so its defining
     * index equations stay assertable.  Identity when zero.
     */
    SignedPerm w0{1};
    LeviDatum datum;
    LeviWeight quotient;
};

/**
 * Residue-class decomposition.  Types A and B accept every ell >= 1 (the
 * even and odd branches of type B differ in shape); types C and D require
 * odd ell.  For even ell in type C the image factors only up to a block
 * whose roots leave the ambient root lattice, and in type D it need not
 * factor at all, so both are rejected as user errors; the exploratory path
 * for those lives in verify_quotient_factorization.
 */
QuotientResult ell_quotient(Type type, int rank, const std::vector<i64>& mu,
                            int ell);

/**
 * Coordinate shift used by the type-B algorithm: a bijection from the
 * nonzero signed indices {-n..-1, 1..n} onto {-(n-1)..n}, compressing the
 * negative side by one.
 */
i64 to_shifted_b(i64 x);
/** Inverse of to_shifted_b. */
i64 from_shifted_b(i64 y);
/**
 * Collapse used by the type-D algorithm: signed indices onto
 * {-(n-1)..n-1}, two-to-one over 0 (both +1 and -1 map there); every
 * other value has the unique preimage y + sign(y).
 */
i64 to_shifted_d(i64 x);

/** Outcome of expanding both sides of the product identity. */
struct FactorizationReport {
    enum class Status {
        zero,             ///< the adjoint image vanishes
        factorized,       ///< equals sign * (subgroup Delta) * monomial, exactly
        quasi_factorized, ///< same, but one factor is a non-Levi odd-orthogonal block
        not_factorizable, ///< certified not of any signed product-times-monomial form
        inconclusive      ///< no certificate either way
    };
    Status status = Status::zero;
    /** True when the claim carried by `status` was verified exactly. */
    bool ok = false;
    std::string detail;
    /** Adjoint image of the positive-root product times x^mu. */
    ZPoly lhs;
    /** The product form it is compared against, when one is defined. */
    ZPoly rhs;
};

/**
 * Expands the adjoint image of Delta * x^mu monomial-by-monomial and
 * compares it with the product predicted by the residue data.  Accepts
 * even ell in types C and D, unlike ell_quotient: type C even checks the
 * product form including the extra odd-orthogonal factor, and type D even
 * searches for a coefficient-count certificate that no signed product
 * form exists (any product of factors (1 - x^a) over the positive roots
 * of a root system expands with equally many +1 and -1 coefficients, or
 * is the single monomial 1).  The expansion has one term per group
 * element, so rank is capped.
 */
FactorizationReport verify_quotient_factorization(Type type, int rank,
                                                  const std::vector<i64>& mu,
                                                  int ell);

} // namespace weylq
