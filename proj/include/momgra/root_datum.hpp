#ifndef MOMGRA_ROOT_DATUM_HPP
#define MOMGRA_ROOT_DATUM_HPP

#include <string>
#include <vector>

#include "momgra/common.hpp"

namespace momgra {

using Vec = std::vector<long>;  // integer vector in a fixed basis

// A root of the finite system, in three coordinate systems at once:
// the fundamental-weight basis of X, the simple-coroot basis of X^vee
// (for the coroot), and the simple-root basis (for heights).
struct Root {
    Vec x;       // coordinates in the fundamental-weight basis
    Vec coroot;  // coroot coordinates in the simple-coroot basis
    Vec simple;  // coordinates in the simple-root basis
    int height = 0;
};

// Element of X-hat = X + Z*delta. Nonzero elements sit in degree 2.
struct AffineWeight {
    Vec x;          // length = rank
    long delta = 0;

    bool is_zero() const;
    bool operator==(const AffineWeight& o) const { return x == o.x && delta == o.delta; }
    bool operator<(const AffineWeight& o) const {
        return x != o.x ? x < o.x : delta < o.delta;
    }
    AffineWeight operator-() const;
    AffineWeight operator+(const AffineWeight& o) const;
    AffineWeight operator-(const AffineWeight& o) const;
    // Full coordinate vector (x..., delta), e.g. for GKM minors.
    Vec coords() const;
};

class RootDatum;

// Real affine root alpha + m*delta with alpha in R, stored as a signed index
// into the positive system plus the delta coefficient.  In the hyperplane
// writing alpha_n = alpha - n*delta the level is n = -m.
struct AffineRoot {
    int root = 0;    // +-(i+1) for the i-th positive root; sign gives +-alpha
    long delta = 0;  // coefficient of delta

    long level() const { return -delta; }
    AffineRoot negated() const { return AffineRoot{-root, -delta}; }
    bool operator==(const AffineRoot& o) const { return root == o.root && delta == o.delta; }
    bool operator<(const AffineRoot& o) const {
        return root != o.root ? root < o.root : delta < o.delta;
    }
};

class RootDatum {
public:
    // Labels like "A1", "B2", "G2", "D4", "E6"; a trailing "~" is accepted
    // and ignored (the affinization is implicit throughout).
    static RootDatum build(const std::string& label);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    // cartan(i, j) = <alpha_i, alpha_j^vee>
    long cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<Root>& positive_roots() const { return pos_; }
    int num_positive() const { return static_cast<int>(pos_.size()); }
    const Root& root(int i) const { return pos_[i]; }
    int highest_root_index() const { return highest_; }
    int coxeter_number() const { return h_; }

    // Index into the positive system; -1 when the vector is not a root.
    int find_root(const Vec& x_coords) const;
    long pairing(const Vec& x_coords, const Vec& covector) const;

    // s_beta acting on X (fundamental-weight coordinates, dual action).
    Vec reflect_weight(int root_index, const Vec& lambda) const;
    // s_beta acting on V^* (simple-coroot coordinates).
    Vec reflect_covector(int root_index, const Vec& v) const;

    AffineWeight affine_root_value(const AffineRoot& ar) const;
    AffineWeight root_weight(int root_index) const;  // the root as an element of X-hat
    AffineWeight delta_weight() const;

    bool is_positive_affine(const AffineRoot& ar) const;
    // The unique positive element of {ar, -ar}.
    AffineRoot normalize_label(const AffineRoot& ar) const;
    // Height of a positive affine root: coefficient sum over the simple
    // affine roots. For alpha + m*delta this is ht(alpha) + m*h.
    long affine_height(const AffineRoot& ar) const;

    std::string affine_root_str(const AffineRoot& ar) const;

private:
    std::string label_;
    int rank_ = 0;
    std::vector<std::vector<long>> cartan_;
    std::vector<Root> pos_;
    int highest_ = -1;
    int h_ = 0;
};

}  // namespace momgra

#endif
