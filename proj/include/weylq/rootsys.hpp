#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylq/weight.hpp"

namespace weylq {

/** Classical series of the finite reflection group / character theory. */
enum class Type { A, B, C, D };

Type type_from_string(const std::string& s);
std::string type_to_string(Type t);

/**
 * Signed permutation of {1,...,n}: a bijection w of {±1,...,±n} with
 * w(-i) = -w(i), stored by its window (w(1),...,w(n)).  Type A elements
 * carry no sign changes.
 *
 * Action on weights: (w.beta)_i = sgn(w(i)) * beta_{|w(i)|}.
 * Composition is chosen so that act(a*b, x) = act(a, act(b, x)),
 * i.e. (a*b)(i) = b(a(i)).
 */
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::size_t n); // identity
    static SignedPerm from_window(std::vector<int> w);

    std::size_t size() const { return w_.size(); }
    int image(std::size_t i) const; // 1-based slot, signed value
    const std::vector<int>& window() const { return w_; }

    bool is_identity() const;
    SignedPerm inverse() const;
    Weight act(const Weight& beta) const;
    /** Determinant of the matrix of act(): sign(|w|) * (-1)^flips. */
    int det() const;
    int n_flips() const;

    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.w_ == b.w_; }
    friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return a.w_ != b.w_; }
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.w_ < b.w_; }

    std::string str() const;

private:
    std::vector<int> w_;
};

struct SignedPermHash {
    std::size_t operator()(const SignedPerm& w) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : w.window()) {
            h ^= static_cast<std::size_t>(v + (1 << 16));
            h *= 1099511628211ull;
        }
        return h;
    }
};

/** Result of moving a weight to the dominant chamber by the dot action. */
struct Straightened {
    bool zero = false; // beta + rho lies on a wall: alternant vanishes
    int sign = 1;      // det of the straightening group element
    Weight lam;        // dominant weight with w o beta = lam
};

/**
 * The ambient reflection group and root data for one classical type at a
 * fixed rank n (number of coordinates; type A means GL_n here).
 * Weights use the increasing convention: dominant = weakly increasing,
 * with nonnegativity for B/C and |beta_1| <= beta_2 for D.
 */
class RootSystem {
public:
    static RootSystem build(Type t, int rank);

    Type type() const { return type_; }
    int rank() const { return rank_; }

    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    const Weight& rho() const { return rho_; }
    /** Highest short root (all-roots-equal types: highest root). */
    const Weight& highest_short_root() const { return eta_; }
    /** Labeled simple reflections s_1..s_m generating the group. */
    const std::vector<SignedPerm>& simple_reflections() const { return simples_; }

    /** Orthogonal reflection in a root, as a signed permutation. */
    static SignedPerm reflection(const Weight& root);
    /** Coroot 2a/(a,a) of a root (exact; roots here have (a,a) in {1,2,4}). */
    static Weight coroot(const Weight& root);

    bool contains(const SignedPerm& w) const;
    int length(const SignedPerm& w) const;
    SignedPerm longest_element() const;
    /** Full group enumeration; guarded against accidental blowup. */
    std::vector<SignedPerm> weyl_group() const;

    bool dominant(const Weight& beta) const;
    /** Strictly inside the dominant chamber (trivial stabilizer). */
    bool regular_dominant(const Weight& gamma) const;
    /** True if some nontrivial group element fixes gamma. */
    bool singular(const Weight& gamma) const;

    /** Dot action w o beta = w.(beta + rho) - rho. */
    Weight dot(const SignedPerm& w, const Weight& beta) const;
    /**
     * Normalize beta + rho into the regular dominant cone: either the
     * alternant vanishes (zero) or returns the sign and the dominant lam
     * with w o beta = lam.
     */
    Straightened straighten(const Weight& beta) const;

private:
    RootSystem() = default;
    Type type_ = Type::A;
    int rank_ = 0;
    std::vector<Weight> pos_roots_;
    Weight rho_;
    Weight eta_;
    std::vector<SignedPerm> simples_;
};

} // namespace weylq
