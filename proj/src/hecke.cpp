#include "weylq/hecke.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <thread>

namespace weylq {

namespace {

i64 floor_div(i64 a, i64 b) {
    const i64 q = a / b;
    const i64 r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

i64 pos_mod(i64 a, i64 b) {
    const i64 r = a % b;
    return r < 0 ? r + b : r;
}

/** Roots in the increasing convention are positive iff the last nonzero
 *  coordinate is positive. */
bool root_negative(const Weight& root) {
    for (std::size_t i = root.size(); i-- > 0;) {
        if (root.d(i) > 0) return false;
        if (root.d(i) < 0) return true;
    }
    throw internal_error("zero vector is not a root");
}

std::vector<i64> elem_key(const AffineElement& e) {
    std::vector<i64> k;
    k.reserve(e.w.size() + e.beta.size());
    for (int v : e.w.window()) k.push_back(v);
    for (i64 v : e.beta.doubled()) k.push_back(v);
    return k;
}

/** Exact division by the table variable; the argument must lack a constant
 *  term (entries below the top element always do). */
QPoly shift_down(const QPoly& p) {
    if (p.is_zero()) return p;
    require_internal(p.coeff(0) == 0, "cannot divide a polynomial with constant term");
    QPoly r;
    for (int k = 1; k <= p.degree(); ++k)
        r += QPoly::monomial(p.coeff(static_cast<std::size_t>(k)), static_cast<std::size_t>(k) - 1);
    return r;
}

/**
 * Coxeter generators of the affine group: the finite simple reflections
 * plus, per irreducible component, the reflection through the wall
 * (x, eta^v) = 1 for the component's highest short root eta.  Among the
 * classical series only rank-2 type D splits into two components.
 */
std::vector<AffineElement> affine_generators(const RootSystem& rs) {
    const std::size_t n = static_cast<std::size_t>(rs.rank());
    std::vector<AffineElement> gens;
    for (const auto& s : rs.simple_reflections()) gens.push_back({s, Weight(n)});
    if (!rs.positive_roots().empty()) {
        std::vector<Weight> tops;
        if (rs.type() == Type::D && rs.rank() == 2) {
            tops.push_back(Weight::of_ints({-1, 1}));
            tops.push_back(Weight::of_ints({1, 1}));
        } else {
            tops.push_back(rs.highest_short_root());
        }
        for (const auto& eta : tops) gens.push_back({RootSystem::reflection(eta), -eta});
    }
    for (const auto& g : gens)
        require_internal(affine_length(rs, g) == 1, "affine generators must have length one");
    return gens;
}

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        buf.push_back(static_cast<char>(v & 0xFFu));
        v >>= 8;
    }
}

void put_i64(std::string& buf, i64 v) { put_u64(buf, static_cast<std::uint64_t>(v)); }

bool get_u64(const std::string& buf, std::size_t& pos, std::uint64_t& v) {
    if (pos + 8 > buf.size()) return false;
    v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | static_cast<unsigned char>(buf[pos + static_cast<std::size_t>(i)]);
    pos += 8;
    return true;
}

bool get_i64(const std::string& buf, std::size_t& pos, i64& v) {
    std::uint64_t u = 0;
    if (!get_u64(buf, pos, u)) return false;
    v = static_cast<i64>(u);
    return true;
}

constexpr std::uint64_t cache_magic = 0x314c4b5251594557ull; // "WEYQRKL1"

} // namespace

AffineElement affine_identity(int rank) {
    const std::size_t n = static_cast<std::size_t>(rank);
    return {SignedPerm(n), Weight(n)};
}

AffineElement pure_translation(const Weight& beta) {
    return {SignedPerm(beta.size()), beta};
}

Weight affine_act(const AffineElement& e, const Weight& gamma, int ell) {
    require_user(ell >= 1, "the scale ell must be at least 1");
    return e.w.act(gamma) - e.w.act(e.beta).scaled(ell);
}

Weight natural_act(const AffineElement& e, const Weight& x) {
    return e.w.act(x + e.beta);
}

i64 affine_length(const RootSystem& rs, const AffineElement& e) {
    require_user(e.w.size() == static_cast<std::size_t>(rs.rank()) &&
                     e.beta.size() == static_cast<std::size_t>(rs.rank()),
                 "affine element rank mismatch");
    require_user(e.beta.integral(), "affine translation parts must be integral");
    i64 total = 0;
    for (const auto& alpha : rs.positive_roots()) {
        const i64 pair2 = dot2(e.beta, RootSystem::coroot(alpha));
        require_internal(pair2 % 2 == 0, "integral weights pair integrally with coroots");
        const i64 term = pair2 / 2 + (root_negative(e.w.act(alpha)) ? 1 : 0);
        total += term < 0 ? -term : term;
    }
    return total;
}

i64 separation_count(const RootSystem& rs, const AffineElement& e) {
    require_user(e.w.size() == static_cast<std::size_t>(rs.rank()) &&
                     e.beta.size() == static_cast<std::size_t>(rs.rank()),
                 "affine element rank mismatch");
    require_user(e.beta.integral(), "affine translation parts must be integral");
    const Weight& rho = rs.rho();
    i64 maxp = 0;
    for (const auto& alpha : rs.positive_roots()) {
        const i64 a2 = dot2(rho, RootSystem::coroot(alpha));
        require_internal(a2 % 2 == 0, "rho pairs integrally with coroots");
        maxp = std::max(maxp, a2 / 2);
    }
    const i64 m = maxp + 1;
    // Base point rho/m sits strictly inside the fundamental alcove: every
    // coroot pairing lies in (0, 1), so the floor of its pairing is 0.  The
    // image under the unscaled action is (w.rho + m*w.beta)/m; walls for a
    // positive root sit at doubled pairing values 2*m*k, never hit exactly.
    const Weight img = e.w.act(rho) + e.w.act(e.beta).scaled(m);
    i64 count = 0;
    for (const auto& alpha : rs.positive_roots()) {
        const i64 b2 = dot2(img, RootSystem::coroot(alpha));
        require_internal(b2 % (2 * m) != 0, "interior points never land on a wall");
        count += std::llabs(floor_div(b2, 2 * m));
    }
    return count;
}

i64 omega_label(const RootSystem& rs, const Weight& beta) {
    require_user(beta.size() == static_cast<std::size_t>(rs.rank()), "weight rank mismatch");
    require_user(beta.integral(), "translation parts must be integral");
    const i64 s = beta.sum2() / 2;
    switch (rs.type()) {
        case Type::A: return s;
        case Type::B: return 0;
        case Type::C: return pos_mod(s, 2);
        case Type::D: return rs.rank() == 1 ? s : pos_mod(s, 2);
    }
    throw internal_error("unreachable");
}

AffineElement omega_rep(const RootSystem& rs, i64 label) {
    const int n = rs.rank();
    AffineElement om = affine_identity(n);
    switch (rs.type()) {
        case Type::A: {
            std::vector<int> win(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) win[static_cast<std::size_t>(i)] = i + 1 < n ? i + 2 : 1;
            std::vector<i64> eps(static_cast<std::size_t>(n), 0);
            eps[0] = 1;
            const AffineElement tau{SignedPerm::from_window(std::move(win)), Weight::of_ints(std::move(eps))};
            const AffineElement step = label >= 0 ? tau : tau.inverse();
            for (i64 k = 0; k < std::llabs(label); ++k) om = om * step;
            break;
        }
        case Type::B:
            require_user(label == 0, "type B admits only the trivial coset label");
            break;
        case Type::C:
        case Type::D: {
            if (rs.type() == Type::D && n == 1) {
                om = {SignedPerm(1), Weight::of_ints({label})};
                break;
            }
            require_user(label == 0 || label == 1, "coset label out of range");
            if (label == 1) {
                std::vector<int> win(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) win[static_cast<std::size_t>(i)] = i + 1;
                win[static_cast<std::size_t>(n - 1)] = -n;
                if (rs.type() == Type::D) win[0] = -1;
                std::vector<i64> tr(static_cast<std::size_t>(n), 0);
                tr[static_cast<std::size_t>(n - 1)] = -1;
                om = {SignedPerm::from_window(std::move(win)), Weight::of_ints(std::move(tr))};
            }
            break;
        }
    }
    require_internal(omega_label(rs, om.beta) == label,
                     "coset representative must carry the requested label");
    require_internal(affine_length(rs, om) == 0, "coset representatives must have zero length");
    return om;
}

Weight alcove_fold(const RootSystem& rs, const Weight& beta, int ell) {
    require_user(ell >= 1, "the scale ell must be at least 1");
    require_user(beta.size() == static_cast<std::size_t>(rs.rank()), "weight rank mismatch");
    const i64 l2 = 2LL * ell;
    const std::size_t n = beta.size();
    const bool shift_only = rs.type() == Type::A || (rs.type() == Type::D && rs.rank() == 1);
    std::vector<i64> out2(n);
    if (shift_only) {
        for (std::size_t i = 0; i < n; ++i) {
            const i64 m2 = pos_mod(beta.d(i), l2);
            out2[i] = m2 == 0 ? 0 : m2 - l2;
        }
    } else {
        std::vector<i64> f2(n);
        int flips = 0;
        bool free_slot = false;
        for (std::size_t i = 0; i < n; ++i) {
            const i64 m2 = pos_mod(beta.d(i), l2);
            f2[i] = std::min(m2, l2 - m2);
            if (m2 == 0 || 2 * m2 == l2) free_slot = true;
            else if (m2 < ell) ++flips;
        }
        for (std::size_t i = 0; i < n; ++i) out2[i] = -f2[i];
        if (rs.type() == Type::D && flips % 2 == 1 && !free_slot) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < n; ++i)
                if (f2[i] < f2[best]) best = i;
            out2[best] = f2[best];
        }
    }
    std::sort(out2.rbegin(), out2.rend());
    return Weight::of_doubled(std::move(out2));
}

AlcoveNormalForm alcove_normalize(const RootSystem& rs, const Weight& beta, int ell) {
    require_user(ell >= 1, "the scale ell must be at least 1");
    const Weight nu = alcove_fold(rs, beta, ell);
    const auto group = rs.weyl_group();
    const i64 l2 = 2LL * ell;
    const std::size_t n = beta.size();

    auto fiber = [&](const Weight& target) {
        std::vector<AffineElement> out;
        for (const auto& w : group) {
            const Weight x = w.inverse().act(target);
            std::vector<i64> d2(n);
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                const i64 diff = nu.d(i) - x.d(i);
                if (diff % l2 != 0) {
                    ok = false;
                    break;
                }
                d2[i] = diff / ell;
            }
            if (!ok) continue;
            AffineElement e{w, Weight::of_doubled(std::move(d2))};
            require_internal(affine_act(e, nu, ell) == target,
                             "fiber elements must map the normal form to the target");
            out.push_back(std::move(e));
        }
        return out;
    };

    const std::vector<AffineElement> reps = fiber(beta);
    require_internal(!reps.empty(), "the folded weight must lie in the orbit of the input");

    std::size_t best = 0;
    i64 best_len = affine_length(rs, reps[0]);
    std::vector<std::size_t> at_min{0};
    for (std::size_t i = 1; i < reps.size(); ++i) {
        const i64 li = affine_length(rs, reps[i]);
        if (li < best_len) {
            best = i;
            best_len = li;
            at_min.assign(1, i);
        } else if (li == best_len) {
            at_min.push_back(i);
        }
    }
    // The minimum is unique except for length-zero right factors (possible
    // only for even scales in types C/D, where the box has extra symmetry).
    for (std::size_t i : at_min)
        require_internal(affine_length(rs, reps[best].inverse() * reps[i]) == 0,
                         "distinct minimal representatives must differ by a length-zero factor");

    AlcoveNormalForm nf;
    nf.nu = nu;
    nf.min_rep = reps[best];
    nf.stabilizer = fiber(nu);
    require_internal(nf.stabilizer.size() == reps.size(),
                     "stabilizer and fiber of the orbit must have equal size");
    return nf;
}

bool check_regularity(const RootSystem& rs, const Weight& beta, int ell) {
    require_user(beta.size() == static_cast<std::size_t>(rs.rank()), "weight rank mismatch");
    require_user(beta.integral(), "the sampled weight must be integral");
    return alcove_normalize(rs, beta.scaled(ell) + rs.rho(), ell).stabilizer.size() == 1;
}

HeckeContext::HeckeContext(RootSystem rs, int length_bound, int jobs)
    : rs_(std::move(rs)), bound_(length_bound) {
    require_user(rs_.rank() >= 1 && rs_.rank() <= 3,
                 "length-bounded tables support rank 1 through 3");
    require_user(bound_ >= 0 && bound_ <= max_length_bound, "length bound out of range");
    gens_ = affine_generators(rs_);
    const std::string path = cache_path();
    if (!path.empty() && load_cache(path)) return;
    build(jobs < 1 ? 1 : jobs);
    if (!path.empty()) save_cache(path);
}

std::optional<std::size_t> HeckeContext::index_of(const AffineElement& e) const {
    auto it = index_.find(elem_key(e));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void HeckeContext::build(int jobs) {
    elems_.clear();
    index_.clear();
    len_.clear();
    levels_.clear();
    rows_.clear();

    elems_.push_back(affine_identity(rs_.rank()));
    index_.emplace(elem_key(elems_[0]), 0);
    len_.push_back(0);
    levels_.push_back({0});

    for (int l = 1; l <= bound_; ++l) {
        std::vector<std::size_t> level;
        for (std::size_t ei : levels_[static_cast<std::size_t>(l - 1)]) {
            const AffineElement e = elems_[ei];
            for (const auto& g : gens_) {
                AffineElement f = g * e;
                const i64 lf = affine_length(rs_, f);
                require_internal(lf == l || lf == l - 2,
                                 "generators must change the length by exactly one");
                if (lf != l) continue;
                auto key = elem_key(f);
                if (index_.count(key)) continue;
                index_.emplace(std::move(key), elems_.size());
                level.push_back(elems_.size());
                elems_.push_back(std::move(f));
                len_.push_back(l);
            }
        }
        levels_.push_back(std::move(level));
    }

    std::vector<std::vector<std::size_t>> left(
        elems_.size(), std::vector<std::size_t>(gens_.size(), SIZE_MAX));
    for (std::size_t ei = 0; ei < elems_.size(); ++ei)
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            auto it = index_.find(elem_key(gens_[g] * elems_[ei]));
            if (it != index_.end()) left[ei][g] = it->second;
        }

    rows_.assign(elems_.size(), {});
    rows_[0].emplace(0, QPoly(1));
    for (std::size_t l = 1; l < levels_.size(); ++l) {
        const auto& level = levels_[l];
        const std::size_t nthreads =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), level.size());
        if (nthreads <= 1) {
            for (std::size_t wi : level) compute_row(wi, left);
            continue;
        }
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= level.size() || failed.load()) return;
                    compute_row(level[i], left);
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
}

void HeckeContext::compute_row(std::size_t w_idx,
                               const std::vector<std::vector<std::size_t>>& left_mult) {
    std::size_t g = SIZE_MAX;
    std::size_t wp = SIZE_MAX;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        const std::size_t c = left_mult[w_idx][k];
        if (c != SIZE_MAX && len_[c] + 1 == len_[w_idx]) {
            g = k;
            wp = c;
            break;
        }
    }
    require_internal(g != SIZE_MAX, "every positive-length element has a descent");

    const auto& prev = rows_[wp];
    std::map<std::size_t, QPoly> out;
    for (const auto& [yp, h] : prev) {
        const std::size_t sy = left_mult[yp][g];
        require_internal(sy != SIZE_MAX, "descent images must stay inside the table");
        out[sy] += h;
        if (len_[sy] > len_[yp]) {
            out[yp] += QPoly(h).shift_scale(1, 1);
        } else {
            out[yp] += shift_down(h);
        }
    }
    for (const auto& [z, hz] : prev) {
        const std::size_t sz = left_mult[z][g];
        if (sz == SIZE_MAX || len_[sz] >= len_[z]) continue;
        const i64 mu = hz.coeff(1);
        if (mu == 0) continue;
        for (const auto& [y, hy] : rows_[z]) {
            QPoly t = hy;
            t.shift_scale(-mu, 0);
            out[y] += t;
        }
    }

    for (const auto& [y, h] : out) {
        const i64 delta = len_[w_idx] - len_[y];
        require_internal(!h.is_zero(), "table entries over the interval never vanish");
        require_internal(h.degree() == delta && h.coeff(static_cast<std::size_t>(delta)) == 1,
                         "table entries are monic of degree l(w)-l(y)");
        require_internal(h.nonnegative(), "table entries have nonnegative coefficients");
        if (y != w_idx)
            require_internal(h.coeff(0) == 0, "entries below the top carry no constant term");
        for (int k = 0; k <= h.degree(); ++k)
            if (h.coeff(static_cast<std::size_t>(k)) != 0)
                require_internal((k - delta) % 2 == 0, "table entries have uniform parity");
    }
    require_internal(out.count(0) == 1 && out.count(w_idx) == 1,
                     "rows span the full interval from the identity to the top");
    rows_[w_idx] = std::move(out);
}

QPoly HeckeContext::kl_entry(const AffineElement& y, const AffineElement& w) const {
    if (omega_label(rs_, y.beta) != omega_label(rs_, w.beta)) return {};
    const AffineElement om_inv = omega_rep(rs_, omega_label(rs_, w.beta)).inverse();
    const AffineElement yr = om_inv * y;
    const AffineElement wr = om_inv * w;
    const auto wi = index_.find(elem_key(wr));
    if (wi == index_.end()) {
        const i64 lw = affine_length(rs_, wr);
        require_internal(lw > bound_, "the table is missing an element inside its length bound");
        throw user_error("KL length bound exceeded: entry (y=" + y.str() + ", w=" + w.str() +
                         ") needs length " + std::to_string(lw) + " > bound " +
                         std::to_string(bound_));
    }
    const auto yi = index_.find(elem_key(yr));
    if (yi == index_.end()) return {};
    const auto& r = rows_[wi->second];
    const auto it = r.find(yi->second);
    return it == r.end() ? QPoly() : it->second;
}

QPolyHalf HeckeContext::parabolic_from(const AlcoveNormalForm& lower,
                                       const AlcoveNormalForm& top) const {
    QPoly acc;
    for (const auto& z : top.stabilizer) {
        QPoly p = kl_entry(lower.min_rep * z, top.min_rep);
        if (p.is_zero()) continue;
        const i64 lz = affine_length(rs_, z);
        p.shift_scale(lz % 2 == 0 ? 1 : -1, static_cast<std::size_t>(lz));
        acc += p;
    }
    QPolyHalf out = v_to_q(acc);
    require_internal(out.poly.nonnegative(),
                     "parabolic polynomials have nonnegative coefficients");
    return out;
}

QPolyHalf HeckeContext::parabolic_kl(const Weight& lower, const Weight& top, int ell) const {
    require_user(lower.size() == static_cast<std::size_t>(rs_.rank()) &&
                     top.size() == static_cast<std::size_t>(rs_.rank()),
                 "weight rank mismatch");
    const AlcoveNormalForm lo = alcove_normalize(rs_, lower, ell);
    const AlcoveNormalForm tp = alcove_normalize(rs_, top, ell);
    require_user(lo.nu == tp.nu, "weights lie in different orbits of the scaled affine action");
    return parabolic_from(lo, tp);
}

CharExpansionQ HeckeContext::g_function(const Weight& mu, int ell, int bound) const {
    require_user(mu.size() == static_cast<std::size_t>(rs_.rank()), "weight rank mismatch");
    require_user(mu.integral(), "the series is indexed by partitions");
    require_partition(mu.ints());
    require_user(ell >= 1, "the scale ell must be at least 1");
    require_user(bound >= 0, "the truncation bound must be nonnegative");
    if (rs_.type() != Type::A && ell % 2 == 0)
        std::cerr << "warning: even scale in types B/C/D: the series is computed, but its "
                     "coefficients have no subgroup-restriction reading\n";

    CharExpansionQ out;
    out.type = rs_.type();
    out.rank = rs_.rank();
    std::vector<Weight> lams;
    if (rs_.type() == Type::A) {
        // The grading forces ell * |lam| = |mu|; the expansion is exact.
        const i64 mu_sum = mu.sum2() / 2;
        if (mu_sum % ell != 0) return out;
        lams = partitions_exact(rs_.rank(), static_cast<int>(mu_sum / ell));
    } else {
        out.truncation_bound = bound;
        lams = partitions_up_to(rs_.rank(), bound);
    }
    const AlcoveNormalForm lo = alcove_normalize(rs_, mu + rs_.rho(), ell);
    for (const auto& lam : lams) {
        const AlcoveNormalForm tp = alcove_normalize(rs_, lam.scaled(ell) + rs_.rho(), ell);
        if (tp.nu != lo.nu) continue;
        QPolyHalf coeff = parabolic_from(lo, tp);
        if (!coeff.is_zero()) out.terms.emplace(lam, std::move(coeff));
    }
    return out;
}

CharExpansionQ HeckeContext::h_function(const Weight& mu, int ell, int bound) const {
    require_user(mu.integral(), "the series is indexed by partitions");
    require_partition(mu.ints());
    require_user(ell >= 1, "the scale ell must be at least 1");
    return g_function(mu.scaled(ell), ell, bound);
}

std::size_t HeckeContext::digest() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](i64 v) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<i64>(elems_.size()));
    for (std::size_t w = 0; w < rows_.size(); ++w)
        for (const auto& [y, p] : rows_[w]) {
            mix(static_cast<i64>(w));
            mix(static_cast<i64>(y));
            mix(p.degree());
            for (int k = 0; k <= p.degree(); ++k) mix(p.coeff(static_cast<std::size_t>(k)));
        }
    return h;
}

std::string HeckeContext::cache_path() const {
    const char* dir = std::getenv("WEYLQ_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::string(dir) + "/weylq_kl_" + type_to_string(rs_.type()) +
           std::to_string(rs_.rank()) + "_L" + std::to_string(bound_) + ".v1.bin";
}

void HeckeContext::save_cache(const std::string& path) const {
    std::string buf;
    put_u64(buf, cache_magic);
    put_u64(buf, static_cast<std::uint64_t>(rs_.type()));
    put_u64(buf, static_cast<std::uint64_t>(rs_.rank()));
    put_u64(buf, static_cast<std::uint64_t>(bound_));
    put_u64(buf, elems_.size());
    for (const auto& e : elems_) {
        for (int v : e.w.window()) put_i64(buf, v);
        for (i64 v : e.beta.doubled()) put_i64(buf, v);
    }
    for (const auto& row : rows_) {
        put_u64(buf, row.size());
        for (const auto& [y, p] : row) {
            put_u64(buf, y);
            put_u64(buf, static_cast<std::uint64_t>(p.degree() + 1));
            for (int k = 0; k <= p.degree(); ++k) put_i64(buf, p.coeff(static_cast<std::size_t>(k)));
        }
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            std::cerr << "warning: cannot write KL cache " << path << "\n";
            return;
        }
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (!os) {
            std::cerr << "warning: short write on KL cache " << path << "\n";
            return;
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        std::cerr << "warning: cannot move KL cache into place at " << path << "\n";
}

bool HeckeContext::load_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return false;
    std::string buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    std::uint64_t magic = 0, type = 0, rank = 0, bound = 0, nelems = 0;
    if (!get_u64(buf, pos, magic) || magic != cache_magic) return false;
    if (!get_u64(buf, pos, type) || type != static_cast<std::uint64_t>(rs_.type())) return false;
    if (!get_u64(buf, pos, rank) || rank != static_cast<std::uint64_t>(rs_.rank())) return false;
    if (!get_u64(buf, pos, bound) || bound != static_cast<std::uint64_t>(bound_)) return false;
    if (!get_u64(buf, pos, nelems) || nelems == 0) return false;

    const std::size_t n = static_cast<std::size_t>(rs_.rank());
    std::vector<AffineElement> elems;
    std::vector<i64> lens;
    std::map<std::vector<i64>, std::size_t> index;
    std::vector<std::vector<std::size_t>> levels(static_cast<std::size_t>(bound_) + 1);
    elems.reserve(nelems);
    for (std::uint64_t i = 0; i < nelems; ++i) {
        std::vector<int> win(n);
        std::vector<i64> d2(n);
        for (std::size_t j = 0; j < n; ++j) {
            i64 v = 0;
            if (!get_i64(buf, pos, v) || v == 0 || std::llabs(v) > static_cast<i64>(n))
                return false;
            win[j] = static_cast<int>(v);
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!get_i64(buf, pos, d2[j])) return false;
        AffineElement e{SignedPerm::from_window(std::move(win)), Weight::of_doubled(std::move(d2))};
        if (!e.beta.integral()) return false;
        const i64 le = affine_length(rs_, e);
        if (le > bound_) return false;
        auto key = elem_key(e);
        if (index.count(key)) return false;
        index.emplace(std::move(key), elems.size());
        levels[static_cast<std::size_t>(le)].push_back(elems.size());
        elems.push_back(std::move(e));
        lens.push_back(le);
    }
    // Closure: products with generators whose length stays in bound must be present.
    for (const auto& e : elems)
        for (const auto& g : gens_) {
            const AffineElement f = g * e;
            if (affine_length(rs_, f) <= bound_ && !index.count(elem_key(f))) return false;
        }

    std::vector<std::map<std::size_t, QPoly>> rows(elems.size());
    for (std::size_t w = 0; w < elems.size(); ++w) {
        std::uint64_t cnt = 0;
        if (!get_u64(buf, pos, cnt) || cnt == 0 || cnt > elems.size()) return false;
        for (std::uint64_t j = 0; j < cnt; ++j) {
            std::uint64_t y = 0, nc = 0;
            if (!get_u64(buf, pos, y) || y >= elems.size()) return false;
            if (!get_u64(buf, pos, nc) || nc == 0 || nc > 64) return false;
            QPoly p;
            for (std::uint64_t k = 0; k < nc; ++k) {
                i64 c = 0;
                if (!get_i64(buf, pos, c)) return false;
                if (c != 0) p += QPoly::monomial(c, static_cast<std::size_t>(k));
            }
            const i64 delta = lens[w] - lens[static_cast<std::size_t>(y)];
            if (p.is_zero() || !p.nonnegative()) return false;
            if (p.degree() != delta || p.coeff(static_cast<std::size_t>(delta)) != 1) return false;
            if (y != w && p.coeff(0) != 0) return false;
            for (int k = 0; k <= p.degree(); ++k)
                if (p.coeff(static_cast<std::size_t>(k)) != 0 && (k - delta) % 2 != 0) return false;
            rows[w].emplace(static_cast<std::size_t>(y), std::move(p));
        }
        if (rows[w].count(0) != 1 || rows[w].count(w) != 1) return false;
    }
    if (pos != buf.size()) return false;

    elems_ = std::move(elems);
    index_ = std::move(index);
    len_ = std::move(lens);
    levels_ = std::move(levels);
    rows_ = std::move(rows);
    return true;
}

} // namespace weylq
