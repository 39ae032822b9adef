#include "weylq/quotient.hpp"

#include <algorithm>
#include <cstdlib>

#include "weylq/error.hpp"

namespace weylq {

i64 to_shifted_b(i64 x) { return x > 0 ? x : x + 1; }

i64 from_shifted_b(i64 y) { return y > 0 ? y : y - 1; }

i64 to_shifted_d(i64 x) { return x > 0 ? x - 1 : x + 1; }

namespace {

i64 exact_div(i64 a, i64 b) {
    require_internal(b != 0 && a % b == 0, "quotient component not divisible by ell");
    return a / b;
}

int residue(i64 v, int ell) {
    int r = static_cast<int>(v % ell);
    return r < 0 ? r + ell : r;
}

struct RawBlock {
    BlockKind kind = BlockKind::GL;
    std::vector<int> indices; // classical: positive; GL: signed, increasing
    std::vector<i64> comp;
};

struct RawResult {
    bool zero = false;
    SignedPerm w0;
    std::vector<RawBlock> blocks;
    std::vector<int> alphas; // one per GL block
};

/** mu_i + i + shift for the 1-based part index i. */
i64 key_of(const std::vector<i64>& mu, int i, int shift) {
    return mu[static_cast<std::size_t>(i - 1)] + i + shift;
}

/** Indices grouped by the residue class of their key, classes 0..ell-1. */
std::vector<std::vector<int>> residue_classes(const std::vector<i64>& mu, int n,
                                              int ell, int shift) {
    std::vector<std::vector<int>> cls(static_cast<std::size_t>(ell));
    for (int i = 1; i <= n; ++i)
        cls[static_cast<std::size_t>(residue(key_of(mu, i, shift), ell))].push_back(i);
    return cls;
}

/** Signed union {-i : i in neg} + {i : i in pos}, increasing as integers. */
std::vector<int> signed_union(const std::vector<int>& neg, const std::vector<int>& pos) {
    std::vector<int> x;
    x.reserve(neg.size() + pos.size());
    for (int i : neg) x.push_back(-i);
    for (int i : pos) x.push_back(i);
    std::sort(x.begin(), x.end());
    return x;
}

/**
 * The values of one residue class inside an integer interval [lo, hi]
 * (possibly minus {0}), sorted increasingly.  These are the target classes
 * the distinguished element fills in order.
 */
std::vector<i64> class_in_range(i64 lo, i64 hi, bool drop_zero, int k, int ell) {
    std::vector<i64> v;
    for (i64 x = lo; x <= hi; ++x)
        if ((!drop_zero || x != 0) && residue(x, ell) == k) v.push_back(x);
    return v;
}

/** Finishes a window into a group element, asserting it is one. */
SignedPerm finish(std::vector<int> win) { return SignedPerm::from_window(std::move(win)); }

RawResult quotient_a(int n, const std::vector<i64>& mu, int ell) {
    RawResult out;
    auto I = residue_classes(mu, n, ell, 0);
    std::vector<std::vector<i64>> J(static_cast<std::size_t>(ell));
    for (int k = 0; k < ell; ++k) J[static_cast<std::size_t>(k)] = class_in_range(1, n, false, k, ell);
    for (int k = 0; k < ell; ++k)
        if (I[static_cast<std::size_t>(k)].size() != J[static_cast<std::size_t>(k)].size()) {
            out.zero = true;
            return out;
        }
    std::vector<int> win(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < ell; ++k) {
        RawBlock blk;
        for (std::size_t a = 0; a < I[static_cast<std::size_t>(k)].size(); ++a) {
            const int i = I[static_cast<std::size_t>(k)][a];
            const i64 j = J[static_cast<std::size_t>(k)][a];
            win[static_cast<std::size_t>(i - 1)] = static_cast<int>(j);
            blk.indices.push_back(i);
            blk.comp.push_back(exact_div(key_of(mu, i, 0) - j, ell));
        }
        out.blocks.push_back(std::move(blk));
    }
    out.w0 = finish(std::move(win));
    return out;
}

/**
 * Type C, both parities of ell.  For even ell the last block is the
 * self-paired odd-orthogonal one; callers decide whether to accept it.
 */
RawResult quotient_c(int n, const std::vector<i64>& mu, int ell) {
    RawResult out;
    const int p = (ell + 1) / 2;
    auto I = residue_classes(mu, n, ell, 0);
    auto jn = [&](int k) { return class_in_range(-n, n, true, k, ell); };

    const auto J0 = jn(0);
    if (2 * I[0].size() != J0.size()) {
        out.zero = true;
        return out;
    }
    for (int k = 1; k < p; ++k) {
        const std::size_t sz =
            I[static_cast<std::size_t>(k)].size() + I[static_cast<std::size_t>(ell - k)].size();
        if (sz != jn(k).size()) {
            out.zero = true;
            return out;
        }
    }
    if (ell % 2 == 0 && 2 * I[static_cast<std::size_t>(p)].size() != jn(p).size()) {
        out.zero = true;
        return out;
    }

    std::vector<int> win(static_cast<std::size_t>(n), 0);
    {
        RawBlock blk;
        blk.kind = BlockKind::Sp;
        for (std::size_t a = 0; a < I[0].size(); ++a) {
            const int i = I[0][a];
            win[static_cast<std::size_t>(i - 1)] = static_cast<int>(a + 1) * ell;
            blk.indices.push_back(i);
            blk.comp.push_back(exact_div(key_of(mu, i, 0), ell) - static_cast<i64>(a + 1));
        }
        out.blocks.push_back(std::move(blk));
    }
    for (int k = 1; k < p; ++k) {
        RawBlock blk;
        const auto X = signed_union(I[static_cast<std::size_t>(k)],
                                    I[static_cast<std::size_t>(ell - k)]);
        const auto targets = jn(residue(-k, ell));
        require_internal(targets.size() == X.size(), "paired classes must match");
        const int alpha =
            X.empty() ? 0 : static_cast<int>(exact_div(-k - targets.front(), ell));
        for (std::size_t a = 0; a < X.size(); ++a) {
            const int x = X[a];
            const i64 y = targets[a];
            win[static_cast<std::size_t>(std::abs(x) - 1)] =
                static_cast<int>(x > 0 ? y : -y);
            const i64 nu = x > 0 ? exact_div(key_of(mu, x, 0) + k, ell)
                                 : -exact_div(key_of(mu, -x, 0) - k, ell);
            blk.comp.push_back(nu - static_cast<i64>(a + 1) + alpha + 1);
        }
        blk.indices = X;
        out.blocks.push_back(std::move(blk));
        out.alphas.push_back(alpha);
    }
    if (ell % 2 == 0) {
        RawBlock blk;
        blk.kind = BlockKind::SOodd;
        for (std::size_t a = 0; a < I[static_cast<std::size_t>(p)].size(); ++a) {
            const int i = I[static_cast<std::size_t>(p)][a];
            win[static_cast<std::size_t>(i - 1)] = p + static_cast<int>(a) * ell;
            blk.indices.push_back(i);
            blk.comp.push_back(exact_div(key_of(mu, i, 0) + p, ell) - static_cast<i64>(a + 1));
        }
        out.blocks.push_back(std::move(blk));
    }
    out.w0 = finish(std::move(win));
    return out;
}

/** Type D, odd ell. */
RawResult quotient_d(int n, const std::vector<i64>& mu, int ell) {
    RawResult out;
    const int p = (ell + 1) / 2;
    auto I = residue_classes(mu, n, ell, -1);
    auto kn = [&](int k) { return class_in_range(-(n - 1), n - 1, false, k, ell); };

    if (2 * I[0].size() != kn(0).size() + 1) {
        out.zero = true;
        return out;
    }
    for (int k = 1; k < p; ++k) {
        const std::size_t sz =
            I[static_cast<std::size_t>(k)].size() + I[static_cast<std::size_t>(ell - k)].size();
        if (sz != kn(k).size()) {
            out.zero = true;
            return out;
        }
    }

    // Collapsed images first (the map to_shifted_d of the window values).
    std::vector<i64> collapsed(static_cast<std::size_t>(n), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(n), false);
    {
        RawBlock blk;
        blk.kind = BlockKind::SOeven;
        for (std::size_t a = 0; a < I[0].size(); ++a) {
            const int i = I[0][a];
            collapsed[static_cast<std::size_t>(i - 1)] = static_cast<i64>(a) * ell;
            assigned[static_cast<std::size_t>(i - 1)] = true;
            blk.indices.push_back(i);
            blk.comp.push_back(exact_div(key_of(mu, i, -1), ell) - static_cast<i64>(a));
        }
        out.blocks.push_back(std::move(blk));
    }
    for (int k = 1; k < p; ++k) {
        RawBlock blk;
        const auto X = signed_union(I[static_cast<std::size_t>(k)],
                                    I[static_cast<std::size_t>(ell - k)]);
        const auto targets = kn(residue(-k, ell));
        require_internal(targets.size() == X.size(), "paired classes must match");
        const int alpha =
            X.empty() ? 0 : static_cast<int>(exact_div(-k - targets.front(), ell));
        for (std::size_t a = 0; a < X.size(); ++a) {
            const int x = X[a];
            const i64 y = targets[a];
            collapsed[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? y : -y;
            assigned[static_cast<std::size_t>(std::abs(x) - 1)] = true;
            const i64 nu = x > 0 ? exact_div(key_of(mu, x, -1) + k, ell)
                                 : -exact_div(key_of(mu, -x, -1) - k, ell);
            blk.comp.push_back(nu - static_cast<i64>(a) + alpha);
        }
        blk.indices = X;
        out.blocks.push_back(std::move(blk));
        out.alphas.push_back(alpha);
    }
    for (bool b : assigned) require_internal(b, "every coordinate must be assigned");

    // Expand the collapsed images back to a group element: nonzero values
    // have a unique preimage, and the single zero slot takes the sign that
    // makes the number of sign changes even.
    std::vector<int> win(static_cast<std::size_t>(n), 0);
    int zero_slot = 0;
    int flips = 0;
    for (int i = 1; i <= n; ++i) {
        const i64 y = collapsed[static_cast<std::size_t>(i - 1)];
        if (y == 0) {
            require_internal(zero_slot == 0, "collapsed images may hit zero once");
            zero_slot = i;
        } else {
            const i64 w = y > 0 ? y + 1 : y - 1;
            win[static_cast<std::size_t>(i - 1)] = static_cast<int>(w);
            if (w < 0) ++flips;
        }
    }
    require_internal(zero_slot != 0, "type D decomposition needs a zero image");
    win[static_cast<std::size_t>(zero_slot - 1)] = flips % 2 == 0 ? 1 : -1;
    out.w0 = finish(std::move(win));
    for (int i = 1; i <= n; ++i)
        require_internal(to_shifted_d(out.w0.image(static_cast<std::size_t>(i))) ==
                             collapsed[static_cast<std::size_t>(i - 1)],
                         "collapse round-trip failed");
    return out;
}

/** Type B, both parities of ell. */
RawResult quotient_b(int n, const std::vector<i64>& mu, int ell) {
    RawResult out;
    const bool odd = ell % 2 == 1;
    const int p = odd ? (ell - 1) / 2 : ell / 2;
    // Classes are labeled 1..ell here; class of i is the residue of mu_i + i.
    std::vector<std::vector<int>> I(static_cast<std::size_t>(ell + 1));
    for (int i = 1; i <= n; ++i)
        I[static_cast<std::size_t>(residue(key_of(mu, i, -1), ell) + 1)].push_back(i);
    auto ln = [&](int k) { return class_in_range(-(n - 1), n, false, residue(k, ell), ell); };

    for (int k = 1; k <= p; ++k) {
        const std::size_t sz = I[static_cast<std::size_t>(k)].size() +
                               I[static_cast<std::size_t>(ell - k + 1)].size();
        if (sz != ln(k).size()) {
            out.zero = true;
            return out;
        }
    }
    if (odd && 2 * I[static_cast<std::size_t>(p + 1)].size() != ln(p + 1).size()) {
        out.zero = true;
        return out;
    }

    std::vector<i64> shifted(static_cast<std::size_t>(n), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(n), false);
    std::vector<RawBlock> gl_blocks;
    if (odd) {
        RawBlock blk;
        blk.kind = BlockKind::SOodd;
        for (std::size_t a = 0; a < I[static_cast<std::size_t>(p + 1)].size(); ++a) {
            const int i = I[static_cast<std::size_t>(p + 1)][a];
            shifted[static_cast<std::size_t>(i - 1)] = -p + static_cast<i64>(a + 1) * ell;
            assigned[static_cast<std::size_t>(i - 1)] = true;
            blk.indices.push_back(i);
            blk.comp.push_back(exact_div(key_of(mu, i, p), ell) - static_cast<i64>(a + 1));
        }
        out.blocks.push_back(std::move(blk));
    }
    for (int k = 1; k <= p; ++k) {
        RawBlock blk;
        const auto X = signed_union(I[static_cast<std::size_t>(k)],
                                    I[static_cast<std::size_t>(ell - k + 1)]);
        const auto targets = ln(1 - k);
        require_internal(targets.size() == X.size(), "paired classes must match");
        const int alpha =
            X.empty() ? 0 : static_cast<int>(exact_div(1 - k - targets.front(), ell));
        for (std::size_t a = 0; a < X.size(); ++a) {
            const int x = X[a];
            const i64 y = targets[a];
            // Record the shifted image at the positive coordinate; the
            // shifted map satisfies value(-x) = 1 - value(x).
            shifted[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? y : 1 - y;
            assigned[static_cast<std::size_t>(std::abs(x) - 1)] = true;
            const i64 nu = x > 0 ? exact_div(key_of(mu, x, k - 1), ell)
                                 : -exact_div(key_of(mu, -x, -k), ell);
            blk.comp.push_back(nu - static_cast<i64>(a + 1) + alpha + 1);
        }
        blk.indices = X;
        gl_blocks.push_back(std::move(blk));
        out.alphas.push_back(alpha);
    }
    for (auto& blk : gl_blocks) out.blocks.push_back(std::move(blk));
    for (bool b : assigned) require_internal(b, "every coordinate must be assigned");

    std::vector<int> win(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        win[static_cast<std::size_t>(i - 1)] =
            static_cast<int>(from_shifted_b(shifted[static_cast<std::size_t>(i - 1)]));
    out.w0 = finish(std::move(win));
    for (int i = 1; i <= n; ++i)
        require_internal(to_shifted_b(out.w0.image(static_cast<std::size_t>(i))) ==
                             shifted[static_cast<std::size_t>(i - 1)],
                         "shift round-trip failed");
    return out;
}

RawResult run_raw(Type type, int n, const std::vector<i64>& mu, int ell) {
    switch (type) {
        case Type::A: return quotient_a(n, mu, ell);
        case Type::B: return quotient_b(n, mu, ell);
        case Type::C: return quotient_c(n, mu, ell);
        case Type::D: return quotient_d(n, mu, ell);
    }
    throw internal_error("unknown type");
}

void check_input(int rank, const std::vector<i64>& mu, int ell) {
    require_user(rank >= 1 && rank <= 12, "rank must be between 1 and 12");
    require_user(static_cast<int>(mu.size()) == rank,
                 "mu must have exactly `rank` parts");
    require_partition(mu);
    require_user(ell >= 1, "ell must be a positive integer");
}

Weight embed_raw(const std::vector<RawBlock>& blocks, int n) {
    Weight g(static_cast<std::size_t>(n));
    for (const RawBlock& blk : blocks)
        for (std::size_t a = 0; a < blk.indices.size(); ++a) {
            const int x = blk.indices[a];
            g.d(static_cast<std::size_t>(std::abs(x) - 1)) =
                2 * (x > 0 ? blk.comp[a] : -blk.comp[a]);
        }
    return g;
}

ZPoly raw_rhs(const std::vector<RawBlock>& blocks, int n, int sign) {
    std::vector<Weight> roots;
    for (const RawBlock& blk : blocks) {
        auto part = embedded_block_roots(LeviBlock{blk.kind, blk.indices}, n);
        roots.insert(roots.end(), part.begin(), part.end());
    }
    ZPoly rhs = delta_product(roots, static_cast<std::size_t>(n))
                    .shifted(embed_raw(blocks, n));
    rhs.scale(sign);
    return rhs;
}

} // namespace

QuotientResult ell_quotient(Type type, int rank, const std::vector<i64>& mu, int ell) {
    check_input(rank, mu, ell);
    if (type == Type::C && ell % 2 == 0)
        throw user_error(
            "even ell in type C: the adjoint image retains a factor whose roots "
            "leave the ambient root lattice, so it is not a subgroup character "
            "and cannot be interpreted as branching data; "
            "verify_quotient_factorization exposes the product form");
    if (type == Type::D && ell % 2 == 0)
        throw user_error(
            "even ell in type D: the adjoint image need not factor at all "
            "(already at rank 2 it is a sum of two same-sign monomials), so no "
            "quotient data exists; verify_quotient_factorization inspects it");

    RawResult raw = run_raw(type, rank, mu, ell);
    QuotientResult out;
    if (raw.zero) {
        out.zero = true;
        return out;
    }
    out.sign = raw.w0.det();
    out.w0 = raw.w0;
    std::vector<LeviBlock> blocks;
    for (const RawBlock& rb : raw.blocks) {
        blocks.push_back(LeviBlock{rb.kind, rb.indices});
        out.quotient.comps.push_back(rb.comp);
    }
    out.datum = make_levi(type, rank, std::move(blocks), raw.alphas);
    require_internal(levi_dominant(out.datum, out.quotient),
                     "quotient weight must be dominant for the subgroup");
    return out;
}

FactorizationReport verify_quotient_factorization(Type type, int rank,
                                                  const std::vector<i64>& mu,
                                                  int ell) {
    check_input(rank, mu, ell);
    require_user(rank <= 6, "factorization expansion is limited to rank <= 6");
    const RootSystem rs = RootSystem::build(type, rank);
    FactorizationReport rep;
    rep.lhs = phi_l(delta_product(rs.positive_roots(), static_cast<std::size_t>(rank))
                        .shifted(Weight::of_ints(mu)),
                    ell);
    rep.rhs = ZPoly(static_cast<std::size_t>(rank));

    if (type == Type::D && ell % 2 == 0) {
        if (rep.lhs.is_zero()) {
            rep.status = FactorizationReport::Status::zero;
            rep.ok = true;
            rep.detail = "the adjoint image vanishes";
            return rep;
        }
        i64 plus = 0, minus = 0;
        bool unit = true;
        for (const auto& [e, c] : rep.lhs.terms()) {
            (void)e;
            if (c != 1 && c != -1) unit = false;
            (c > 0 ? plus : minus) += (c > 0 ? c : -c);
        }
        if (!unit || (plus + minus > 1 && plus != minus)) {
            rep.status = FactorizationReport::Status::not_factorizable;
            rep.ok = true;
            rep.detail = "certificate: the expansion has " + std::to_string(plus) +
                         " positive and " + std::to_string(minus) +
                         " negative unit coefficients; any signed product form has "
                         "equally many of each (or is a single monomial)";
        } else {
            rep.status = FactorizationReport::Status::inconclusive;
            rep.ok = false;
            rep.detail = "coefficient counts are consistent with a product form; "
                         "no block data is defined for even ell in this type";
        }
        return rep;
    }

    RawResult raw = run_raw(type, rank, mu, ell);
    if (raw.zero) {
        rep.status = FactorizationReport::Status::zero;
        rep.ok = rep.lhs.is_zero();
        rep.detail = rep.ok ? "both the residue data and the expansion vanish"
                            : "MISMATCH: residue data vanishes, expansion does not";
        return rep;
    }
    rep.rhs = raw_rhs(raw.blocks, rank, raw.w0.det());
    const bool equal = rep.lhs == rep.rhs;
    if (type == Type::C && ell % 2 == 0) {
        rep.status = FactorizationReport::Status::quasi_factorized;
        const RawBlock& extra = raw.blocks.back();
        rep.detail = "product form holds but the factor SO" +
                     std::to_string(2 * extra.indices.size() + 1) +
                     " on coordinates of the self-paired class is not a subgroup "
                     "of the ambient group";
    } else {
        rep.status = FactorizationReport::Status::factorized;
        rep.detail = "exact product form over the subgroup";
    }
    rep.ok = equal;
    if (!equal) rep.detail = "MISMATCH: " + rep.detail;
    return rep;
}

} // namespace weylq
