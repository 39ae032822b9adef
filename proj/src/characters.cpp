#include "weylq/characters.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

namespace weylq {

std::vector<Weight> partitions_up_to(int rank, int max_sum) {
    require_internal(rank >= 1 && max_sum >= 0, "bad partition enumeration bounds");
    std::vector<Weight> out;
    std::vector<i64> cur(static_cast<std::size_t>(rank), 0);
    std::function<void(int, i64, i64)> rec = [&](int i, i64 lo, i64 used) {
        if (i == rank) {
            out.push_back(Weight::of_ints(cur));
            return;
        }
        // every later part is >= v, so v*(rank-i) is the cheapest completion
        for (i64 v = lo; used + v * (rank - i) <= max_sum; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v, used + v);
        }
    };
    rec(0, 0, 0);
    return out;
}

std::vector<Weight> partitions_exact(int rank, int sum) {
    std::vector<Weight> out;
    for (Weight& w : partitions_up_to(rank, sum))
        if (w.sum2() == 2 * static_cast<i64>(sum)) out.push_back(std::move(w));
    return out;
}

ZPoly weyl_act(const SignedPerm& w, const ZPoly& p) {
    ZPoly out(p.rank());
    for (const auto& [e, c] : p.terms()) out.add_term(w.act(e), c);
    return out;
}

CharacterRing::CharacterRing(RootSystem rs) : rs_(std::move(rs)), group_(rs_.weyl_group()) {
    a_rho_ = alternant(rs_.rho());
}

ZPoly CharacterRing::alternant(const Weight& gamma) const {
    require_internal(rs_.regular_dominant(gamma), "alternant argument must be regular dominant");
    ZPoly p(gamma.size());
    for (const auto& w : group_) p.add_term(w.act(gamma), w.det());
    return p;
}

namespace {

/**
 * Exponent packing for the division loop.  Coordinate i occupies field i of
 * a 64-bit key, low to high, so unsigned comparison of keys is exactly the
 * reverse-lexicographic order (highest coordinate most significant).  The
 * offset is a quarter of the field span: adding two in-range packed keys
 * then never carries across fields, so key arithmetic mirrors weight
 * arithmetic.
 */
struct ExponentCodec {
    std::size_t rank;
    unsigned bits;
    i64 offset;

    explicit ExponentCodec(std::size_t n)
        : rank(n), bits(std::min<unsigned>(64u / static_cast<unsigned>(n), 21u)),
          offset(i64{1} << (bits - 2)) {}

    bool fits(i64 doubled_coord) const { return std::llabs(doubled_coord) < offset - 1; }

    std::uint64_t pack(const Weight& e) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < rank; ++i) {
            i64 v = e.d(i) + offset;
            require_internal(v >= 0 && v < (i64{1} << (bits - 1)),
                             "character arithmetic exponent out of packed range");
            k |= static_cast<std::uint64_t>(v) << (bits * i);
        }
        return k;
    }

    Weight unpack(std::uint64_t k) const {
        Weight e(rank);
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        for (std::size_t i = 0; i < rank; ++i)
            e.d(i) = static_cast<i64>((k >> (bits * i)) & mask) - offset;
        return e;
    }
};

} // namespace

ZPoly CharacterRing::character_uncached(const Weight& lam) const {
    require_user(lam.size() == static_cast<std::size_t>(rs_.rank()),
                 "highest weight rank does not match the group");
    require_user(rs_.dominant(lam), "highest weight must be dominant");
    const std::size_t n = lam.size();
    const Weight top = lam + rs_.rho();
    require_internal(rs_.regular_dominant(top), "lam + rho must be regular dominant");

    ExponentCodec codec(n);
    // Every exponent the division touches is (weight of V(lam)) + (w rho),
    // so coordinates stay within |top| + |rho| in absolute value.
    for (std::size_t i = 0; i < n; ++i)
        require_user(codec.fits(std::llabs(top.d(i)) + std::llabs(rs_.rho().d(i)) + 2),
                     "highest weight too large for character arithmetic");

    const std::uint64_t base = codec.pack(Weight(n));
    const std::uint64_t rho_key = codec.pack(rs_.rho());
    std::vector<std::pair<std::uint64_t, int>> den;
    den.reserve(group_.size());
    for (const auto& w : group_) den.emplace_back(codec.pack(w.act(rs_.rho())), w.det());

    std::map<std::uint64_t, i64> rem;
    for (const auto& w : group_) rem.emplace(codec.pack(w.act(top)), w.det());

    // Long division in the key order.  The leading remainder key gamma is
    // killed by the w = e denominator term, and every w rho is strictly
    // below rho in this order, so the maximum strictly decreases: the loop
    // terminates with an exact quotient by construction.
    ZPoly quot(n);
    std::uint64_t prev = ~std::uint64_t{0};
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        const std::uint64_t gkey = it->first;
        const i64 c = it->second;
        require_internal(gkey < prev, "character division failed to make progress");
        prev = gkey;
        const std::uint64_t nu_key = gkey - rho_key + base; // pack(gamma - rho)
        quot.add_term(codec.unpack(nu_key), c);
        for (const auto& [dk, ds] : den) {
            const std::uint64_t key = nu_key - base + dk; // pack(nu + w rho)
            auto jt = rem.find(key);
            if (jt == rem.end()) {
                rem.emplace(key, -c * ds);
            } else {
                jt->second -= c * ds;
                if (jt->second == 0) rem.erase(jt);
            }
        }
    }
    return quot;
}

const ZPoly& CharacterRing::character(const Weight& lam) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = char_cache_.find(lam);
        if (it != char_cache_.end()) return it->second;
    }
    ZPoly ch = character_uncached(lam);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    // std::map nodes are stable, so references stay valid across inserts.
    return char_cache_.emplace(lam, std::move(ch)).first->second;
}

std::map<Weight, i64> CharacterRing::decompose(const ZPoly& p) const {
    require_internal(p.rank() == static_cast<std::size_t>(rs_.rank()), "polynomial rank mismatch");
    std::map<Weight, i64> out;
    if (p.is_zero()) return out;
    const ZPoly q = p * a_rho_;
    for (const auto& [e, c] : q.terms()) {
        if (!rs_.regular_dominant(e)) continue;
        Weight nu = e - rs_.rho();
        require_internal(rs_.dominant(nu), "decomposition produced a non-dominant label");
        out.emplace(std::move(nu), c);
    }
    // Reconstructing q from the labels certifies that p was W-invariant
    // (multiplication by a_rho is injective).
    ZPoly recon(p.rank());
    for (const auto& [nu, c] : out) {
        ZPoly alt = alternant(nu + rs_.rho());
        alt.scale(c);
        recon += alt;
    }
    require_internal(recon == q, "decompose: input is not invariant");
    return out;
}

std::map<Weight, i64> CharacterRing::decompose_by_subtraction(ZPoly p) {
    for (const auto& s : rs_.simple_reflections())
        require_internal(weyl_act(s, p) == p, "subtraction oracle: input is not invariant");
    std::map<Weight, i64> out;
    while (!p.is_zero()) {
        // Order: total degree descending, then lexicographic ascending.
        const Weight* best = nullptr;
        i64 best_deg = 0;
        for (const auto& [e, c] : p.terms()) {
            if (!best || e.sum2() > best_deg || (e.sum2() == best_deg && e < *best)) {
                best = &e;
                best_deg = e.sum2();
            }
        }
        const Weight nu = *best;
        const i64 c = p.coefficient(nu);
        require_internal(rs_.dominant(nu), "subtraction oracle: leading weight is not dominant");
        require_internal(out.find(nu) == out.end(), "subtraction oracle: label repeated");
        out.emplace(nu, c);
        ZPoly ch = character(nu);
        ch.scale(c);
        p -= ch;
    }
    return out;
}

i64 CharacterRing::weight_multiplicity(const Weight& lam, const Weight& mu) {
    return character(lam).coefficient(mu);
}

i64 CharacterRing::dim(const Weight& lam) {
    i64 d = 0;
    for (const auto& [e, c] : character(lam).terms()) d += c;
    return d;
}

std::map<Weight, i64> CharacterRing::psi_plethysm_schur(const Weight& lam, int ell) {
    return decompose(psi_l(character(lam), ell));
}

std::map<Weight, std::map<Weight, i64>> psi_table(CharacterRing& ring, int ell,
                                                  const std::vector<Weight>& lams, int jobs) {
    std::vector<std::map<Weight, i64>> slots(lams.size());
    const std::size_t nthreads =
        std::min<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), lams.size());
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < lams.size(); ++i)
            slots[i] = ring.psi_plethysm_schur(lams[i], ell);
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= lams.size() || failed.load()) return;
                    slots[i] = ring.psi_plethysm_schur(lams[i], ell);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }
    std::map<Weight, std::map<Weight, i64>> out;
    for (std::size_t i = 0; i < lams.size(); ++i) out.emplace(lams[i], std::move(slots[i]));
    return out;
}

CharExpansionZ phi_plethysm_truncated(CharacterRing& ring, const Weight& mu, int ell, int bound,
                                      int jobs) {
    const RootSystem& rs = ring.root_system();
    require_user(mu.size() == static_cast<std::size_t>(rs.rank()),
                 "mu rank does not match the group");
    require_user(mu.integral(), "mu must be integral");
    require_partition(mu.ints());
    require_user(ell >= 1, "ell must be a positive integer");
    CharExpansionZ out;
    out.type = rs.type();
    out.rank = rs.rank();
    std::vector<Weight> lams;
    if (rs.type() == Type::A) {
        // The grading forces ell * |lam| = |mu|; the expansion is exact.
        const i64 mu_sum = mu.sum2() / 2;
        if (mu_sum % ell != 0) return out;
        lams = partitions_exact(rs.rank(), static_cast<int>(mu_sum / ell));
    } else {
        require_user(bound >= 0, "truncation bound must be nonnegative");
        out.truncation_bound = bound;
        lams = partitions_up_to(rs.rank(), bound);
    }
    auto table = psi_table(ring, ell, lams, jobs);
    for (const auto& [lam, expansion] : table) {
        auto it = expansion.find(mu);
        if (it != expansion.end() && it->second != 0) out.terms.emplace(lam, it->second);
    }
    return out;
}

CharExpansionQ hall_littlewood_truncated(CharacterRing& ring, const Weight& mu, int bound) {
    const RootSystem& rs = ring.root_system();
    require_user(mu.size() == static_cast<std::size_t>(rs.rank()),
                 "mu rank does not match the group");
    require_user(mu.integral(), "mu must be integral");
    require_partition(mu.ints());
    CharExpansionQ out;
    out.type = rs.type();
    out.rank = rs.rank();
    std::vector<Weight> lams;
    if (rs.type() == Type::A) {
        lams = partitions_exact(rs.rank(), static_cast<int>(mu.sum2() / 2));
    } else {
        require_user(bound >= 0, "truncation bound must be nonnegative");
        out.truncation_bound = bound;
        lams = partitions_up_to(rs.rank(), bound);
    }
    PartitionFn pf(rs.positive_roots(), static_cast<std::size_t>(rs.rank()));
    for (const Weight& lam : lams) {
        QPoly k = lusztig_q(rs, ring.group(), pf, lam, mu);
        if (!k.is_zero()) out.terms.emplace(lam, QPolyHalf{std::move(k), false});
    }
    return out;
}

} // namespace weylq
