#include "weylq/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "weylq/error.hpp"

namespace weylq {

Type type_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Type::A;
    if (s == "B" || s == "b") return Type::B;
    if (s == "C" || s == "c") return Type::C;
    if (s == "D" || s == "d") return Type::D;
    throw user_error("unknown type '" + s + "' (expected one of A, B, C, D)");
}

std::string type_to_string(Type t) {
    switch (t) {
        case Type::A: return "A";
        case Type::B: return "B";
        case Type::C: return "C";
        case Type::D: return "D";
    }
    throw internal_error("unreachable type");
}

SignedPerm::SignedPerm(std::size_t n) : w_(n) {
    std::iota(w_.begin(), w_.end(), 1);
}

SignedPerm SignedPerm::from_window(std::vector<int> w) {
    std::vector<bool> seen(w.size(), false);
    for (int v : w) {
        int a = v < 0 ? -v : v;
        require_internal(a >= 1 && a <= static_cast<int>(w.size()) && !seen[a - 1],
                         "invalid signed permutation window");
        seen[a - 1] = true;
    }
    SignedPerm p;
    p.w_ = std::move(w);
    return p;
}

int SignedPerm::image(std::size_t i) const {
    require_internal(i >= 1 && i <= w_.size(), "signed permutation slot out of range");
    return w_[i - 1];
}

bool SignedPerm::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) {
        int v = w_[i];
        int a = v < 0 ? -v : v;
        inv[a - 1] = v < 0 ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
    }
    return from_window(std::move(inv));
}

Weight SignedPerm::act(const Weight& beta) const {
    require_internal(beta.size() == w_.size(), "signed permutation / weight size mismatch");
    Weight out(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) {
        int v = w_[i];
        int a = v < 0 ? -v : v;
        out.d(i) = (v < 0 ? -1 : 1) * beta.d(static_cast<std::size_t>(a) - 1);
    }
    return out;
}

int SignedPerm::det() const {
    // Parity of the underlying permutation via cycle count, times (-1)^flips.
    int n = static_cast<int>(w_.size());
    std::vector<bool> vis(n, false);
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        if (vis[i]) continue;
        int len = 0;
        int j = i;
        while (!vis[j]) {
            vis[j] = true;
            j = (w_[j] < 0 ? -w_[j] : w_[j]) - 1;
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    int d = parity ? -1 : 1;
    return (n_flips() % 2 != 0) ? -d : d;
}

int SignedPerm::n_flips() const {
    int f = 0;
    for (int v : w_)
        if (v < 0) ++f;
    return f;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    require_internal(a.size() == b.size(), "signed permutation size mismatch");
    std::vector<int> w(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int v = a.w_[i];
        int bv = b.w_[(v < 0 ? -v : v) - 1];
        w[i] = v < 0 ? -bv : bv;
    }
    return SignedPerm::from_window(std::move(w));
}

std::string SignedPerm::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) os << ",";
        os << w_[i];
    }
    os << ")";
    return os.str();
}

namespace {

Weight unit(int n, int i, i64 coeff2) {
    Weight w(static_cast<std::size_t>(n));
    w.d(static_cast<std::size_t>(i)) = coeff2;
    return w;
}

} // namespace

RootSystem RootSystem::build(Type t, int rank) {
    require_user(rank >= 1, "rank must be at least 1");
    require_user(rank <= 12, "rank too large for exact enumeration (max 12)");
    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = rank;
    const int n = rank;

    // Positive roots in the increasing convention.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            Weight r = unit(n, j, 2);
            r.d(static_cast<std::size_t>(i)) = -2;
            rs.pos_roots_.push_back(r); // e_j - e_i
            if (t == Type::B || t == Type::C || t == Type::D) {
                Weight s = unit(n, j, 2);
                s.d(static_cast<std::size_t>(i)) = 2;
                rs.pos_roots_.push_back(s); // e_j + e_i
            }
        }
    }
    if (t == Type::B)
        for (int i = 0; i < n; ++i) rs.pos_roots_.push_back(unit(n, i, 2)); // e_i
    if (t == Type::C)
        for (int i = 0; i < n; ++i) rs.pos_roots_.push_back(unit(n, i, 4)); // 2 e_i

    // rho: half-sum of positive roots for B/C/D; for A the shifted
    // representative (1,...,n) is used throughout (alternant ratios and the
    // dot action only see rho modulo the invariant line (1,...,1), and the
    // shifted form is the one the residue algorithms are written against).
    rs.rho_ = Weight(static_cast<std::size_t>(n));
    if (t == Type::A) {
        for (int i = 0; i < n; ++i) rs.rho_.d(static_cast<std::size_t>(i)) = 2 * (i + 1);
    } else {
        for (const Weight& r : rs.pos_roots_)
            for (int i = 0; i < n; ++i)
                rs.rho_.d(static_cast<std::size_t>(i)) += r.d(static_cast<std::size_t>(i)) / 2;
    }

    // Highest short root.
    if (!rs.pos_roots_.empty()) {
        switch (t) {
            case Type::A: rs.eta_ = unit(n, n - 1, 2); rs.eta_.d(0) = -2; break;
            case Type::B: rs.eta_ = unit(n, n - 1, 2); break;
            case Type::C:
                if (n >= 2) {
                    rs.eta_ = unit(n, n - 1, 2);
                    rs.eta_.d(static_cast<std::size_t>(n - 2)) = 2;
                } else {
                    rs.eta_ = unit(n, 0, 4);
                }
                break;
            case Type::D:
                rs.eta_ = unit(n, n - 1, 2);
                rs.eta_.d(static_cast<std::size_t>(n - 2)) = 2;
                break;
        }
    }

    // Labeled simple reflections.
    auto chain = [&](int from) {
        for (int i = from; i < n; ++i) {
            Weight r = unit(n, i, 2);
            r.d(static_cast<std::size_t>(i - 1)) = -2;
            rs.simples_.push_back(reflection(r)); // e_{i+1} - e_i
        }
    };
    switch (t) {
        case Type::A:
            chain(1);
            break;
        case Type::B:
            rs.simples_.push_back(reflection(unit(n, 0, 2)));
            chain(1);
            break;
        case Type::C:
            rs.simples_.push_back(reflection(unit(n, 0, 4)));
            chain(1);
            break;
        case Type::D:
            if (n >= 2) {
                Weight r = unit(n, 1, 2);
                r.d(0) = 2;
                rs.simples_.push_back(reflection(r)); // e_1 + e_2
                chain(1);
            }
            break;
    }
    return rs;
}

SignedPerm RootSystem::reflection(const Weight& root) {
    const int n = static_cast<int>(root.size());
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
        if (root.d(static_cast<std::size_t>(i)) != 0) nz.push_back(i);
    SignedPerm id(static_cast<std::size_t>(n));
    std::vector<int> w = id.window();
    if (nz.size() == 1) {
        w[static_cast<std::size_t>(nz[0])] = -(nz[0] + 1); // e_i or 2 e_i
    } else if (nz.size() == 2) {
        int i = nz[0], j = nz[1];
        i64 a = root.d(static_cast<std::size_t>(i)), b = root.d(static_cast<std::size_t>(j));
        require_internal((a == b || a == -b) && (a == 2 || a == -2), "unsupported reflection root");
        if (a == -b) { // e_j - e_i: swap
            w[static_cast<std::size_t>(i)] = j + 1;
            w[static_cast<std::size_t>(j)] = i + 1;
        } else { // e_j + e_i: swap and flip both
            w[static_cast<std::size_t>(i)] = -(j + 1);
            w[static_cast<std::size_t>(j)] = -(i + 1);
        }
    } else {
        throw internal_error("unsupported reflection root shape");
    }
    return SignedPerm::from_window(std::move(w));
}

Weight RootSystem::coroot(const Weight& root) {
    i64 norm2 = dot2(root, root); // = 2 (a,a)
    require_internal(norm2 == 2 || norm2 == 4 || norm2 == 8, "unexpected root length");
    Weight cv(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
        i64 num = root.d(i) * 4;
        require_internal(num % norm2 == 0, "coroot not exactly representable");
        cv.d(i) = num / norm2;
    }
    return cv;
}

bool RootSystem::contains(const SignedPerm& w) const {
    if (w.size() != static_cast<std::size_t>(rank_)) return false;
    switch (type_) {
        case Type::A: return w.n_flips() == 0;
        case Type::B:
        case Type::C: return true;
        case Type::D: return w.n_flips() % 2 == 0;
    }
    return false;
}

int RootSystem::length(const SignedPerm& w) const {
    require_internal(contains(w), "length of element outside the group");
    std::set<Weight> pos(pos_roots_.begin(), pos_roots_.end());
    int l = 0;
    for (const Weight& a : pos_roots_) {
        Weight img = w.act(a);
        if (pos.count(img)) continue;
        Weight neg = -img;
        require_internal(pos.count(neg) > 0, "group element does not permute roots");
        ++l;
    }
    return l;
}

SignedPerm RootSystem::longest_element() const {
    const int n = rank_;
    std::vector<int> w(static_cast<std::size_t>(n));
    switch (type_) {
        case Type::A:
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
            break;
        case Type::B:
        case Type::C:
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = -(i + 1);
            break;
        case Type::D:
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = -(i + 1);
            if (n % 2 != 0) w[0] = 1;
            break;
    }
    return SignedPerm::from_window(std::move(w));
}

std::vector<SignedPerm> RootSystem::weyl_group() const {
    const int n = rank_;
    require_internal(type_ == Type::A ? n <= 8 : n <= 6, "group enumeration limited to small rank");
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<SignedPerm> out;
    do {
        if (type_ == Type::A) {
            out.push_back(SignedPerm::from_window(base));
            continue;
        }
        const unsigned masks = 1u << n;
        for (unsigned m = 0; m < masks; ++m) {
            if (type_ == Type::D && (__builtin_popcount(m) % 2) != 0) continue;
            std::vector<int> w = base;
            for (int i = 0; i < n; ++i)
                if (m & (1u << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.push_back(SignedPerm::from_window(std::move(w)));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

bool RootSystem::dominant(const Weight& beta) const {
    require_internal(beta.size() == static_cast<std::size_t>(rank_), "weight size mismatch");
    const auto& c = beta.doubled();
    std::size_t start = 0;
    if (type_ == Type::D && rank_ >= 2) {
        if (c[1] < std::abs(c[0])) return false;
        start = 1;
    } else if (type_ == Type::B || type_ == Type::C) {
        if (c[0] < 0) return false;
    }
    for (std::size_t i = start + 1; i < c.size(); ++i)
        if (c[i] < c[i - 1]) return false;
    return true;
}

bool RootSystem::singular(const Weight& gamma) const {
    require_internal(gamma.size() == static_cast<std::size_t>(rank_), "weight size mismatch");
    std::vector<i64> v = gamma.doubled();
    if (type_ == Type::A) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    }
    for (auto& x : v) x = std::abs(x);
    if ((type_ == Type::B || type_ == Type::C) &&
        std::find(v.begin(), v.end(), 0) != v.end())
        return true;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

bool RootSystem::regular_dominant(const Weight& gamma) const {
    return dominant(gamma) && !singular(gamma);
}

Weight RootSystem::dot(const SignedPerm& w, const Weight& beta) const {
    return w.act(beta + rho_) - rho_;
}

Straightened RootSystem::straighten(const Weight& beta) const {
    Weight gamma = beta + rho_;
    Straightened out;
    if (singular(gamma)) {
        out.zero = true;
        return out;
    }
    const int n = rank_;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    const auto& g = gamma.doubled();

    auto perm_sign = [&](const std::vector<std::size_t>& p) {
        std::vector<bool> vis(p.size(), false);
        int parity = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (vis[i]) continue;
            std::size_t j = i;
            int len = 0;
            while (!vis[j]) {
                vis[j] = true;
                j = p[j];
                ++len;
            }
            parity ^= (len - 1) & 1;
        }
        return parity ? -1 : 1;
    };

    Weight sorted(static_cast<std::size_t>(n));
    int sign = 1;
    if (type_ == Type::A) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return g[a] < g[b]; });
        for (int i = 0; i < n; ++i) sorted.d(static_cast<std::size_t>(i)) = g[idx[static_cast<std::size_t>(i)]];
        sign = perm_sign(idx);
    } else {
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return std::abs(g[a]) < std::abs(g[b]); });
        int flips = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            i64 v = g[idx[i]];
            if (v < 0) ++flips;
            sorted.d(i) = std::abs(v);
        }
        sign = perm_sign(idx);
        if (type_ == Type::B || type_ == Type::C) {
            if (flips % 2 != 0) sign = -sign;
        } else { // D: sign changes come in pairs and do not affect the determinant
            if (flips % 2 != 0) sorted.d(0) = -sorted.d(0);
        }
    }
    out.sign = sign;
    out.lam = sorted - rho_;
    require_internal(regular_dominant(sorted), "straighten produced a non-dominant weight");
    return out;
}

} // namespace weylq
