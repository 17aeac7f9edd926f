#ifndef MOMGRA_WEYL_HPP
#define MOMGRA_WEYL_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "momgra/root_datum.hpp"

namespace momgra {

// Element t_mu * wbar of the affine Weyl group, acting on V^* (simple-coroot
// coordinates) by v -> wbar(v) + mu.  Elements hash and compare by the pair
// (finite-part matrix, translation vector).
struct Elem {
    std::vector<Vec> m;  // finite part, row-major matrix on V^*
    Vec t;               // translation in the coroot lattice

    bool operator==(const Elem& o) const { return m == o.m && t == o.t; }
    bool operator<(const Elem& o) const { return m != o.m ? m < o.m : t < o.t; }
};

struct Alcove {
    Elem w;  // the alcove is w(A_e)
    bool operator==(const Alcove& o) const { return w == o.w; }
    bool operator<(const Alcove& o) const { return w < o.w; }
};

// Coset in W-hat / {1,s}, stored by its minimal-length representative.
struct WallCoset {
    Elem rep;
    int s = 0;  // simple affine reflection index (0 = s_{gamma,1})
    bool operator==(const WallCoset& o) const { return rep == o.rep && s == o.s; }
    bool operator<(const WallCoset& o) const { return s != o.s ? s < o.s : rep < o.rep; }
};

using Facet = std::variant<Alcove, WallCoset>;

enum class Order { Bruhat, Generic };

// Context for one affine Weyl group: group law, both partial orders, alcove
// and wall combinatorics. All queries are const; memo tables are guarded.
class Weyl {
public:
    explicit Weyl(const RootDatum& rd);

    const RootDatum& datum() const { return rd_; }
    int rank() const { return rd_.rank(); }
    int num_gens() const { return rd_.rank() + 1; }

    Elem identity() const;
    // Generator index: 0 is s_{gamma,1}, 1..r are the finite simples.
    Elem simple(int i) const;
    Elem reflection(int root_index, long n) const;  // s_{alpha,n}
    Elem translation(const Vec& mu) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    std::vector<Elem> simple_affine_reflections() const;

    // (root_index, n) with a = s_{alpha,n}, when a is a reflection.
    std::optional<std::pair<int, long>> as_reflection(const Elem& a) const;
    // Finite part as an index into the finite Weyl group enumeration.
    Vec finite_dual_weight(const Elem& a, const Vec& lambda) const;
    AffineWeight act_dual(const Elem& a, const AffineWeight& lam) const;

    // Label of the edge x --- y of the Bruhat graph, when yx^{-1} is a
    // reflection; always normalized into the positive affine roots.
    std::optional<AffineRoot> reflection_of_edge(const Elem& x, const Elem& y) const;

    // n with <alpha, A_w> in (n, n+1).
    long alcove_coord(const Elem& w, int root_index) const;
    long length(const Elem& w) const;
    long delta_length(const Elem& w) const;  // signed hyperplane count

    bool bruhat_leq(const Elem& x, const Elem& y) const;
    bool generic_leq(const Elem& x, const Elem& y) const;
    bool leq(Order o, const Elem& x, const Elem& y) const;
    std::vector<Elem> bruhat_ideal(const Elem& w) const;

    std::vector<int> reduced_word(const Elem& w) const;  // lex minimal
    std::vector<std::vector<int>> all_reduced_words(const Elem& w) const;
    std::string word_str(const Elem& w) const;
    Elem parse_word(const std::string& word) const;
    Elem word_product(const std::vector<int>& word) const;

    std::vector<Elem> ball(long max_length) const;  // all elements of length <= L

    // Alcove / wall geometry.
    Alcove alcove_of(const Elem& w) const { return Alcove{w}; }
    WallCoset wall_of(const Alcove& a, int s) const;
    Alcove wall_minus(const WallCoset& b) const;
    Alcove wall_plus(const WallCoset& b) const;
    // Positive root of the hyperplane containing the wall, and its level.
    std::pair<int, long> wall_hyperplane(const WallCoset& b) const;
    int wall_type(const WallCoset& b) const { return wall_hyperplane(b).first; }

    Facet beta_up(const Facet& f, int root_index) const;
    Facet beta_down(const Facet& f, int root_index) const;
    Alcove beta_up(const Alcove& a, int root_index) const;
    Alcove beta_down(const Alcove& a, int root_index) const;

    // Ordering on wall cosets: compare minimal representatives.
    Elem coset_min(Order o, const WallCoset& b) const;
    bool leq(Order o, const WallCoset& x, const WallCoset& y) const;

    // Anti-fundamental box and the restricted ideal.
    std::vector<Elem> antifundamental_box() const;
    Elem w_hat0() const;
    std::vector<Elem> w_circ() const;

private:
    RootDatum rd_;
    std::vector<std::vector<Vec>> refl_mats_;      // V^* matrices of s_alpha
    std::vector<Vec> dual_cache_;                  // per root: x-coords
    mutable std::mutex memo_mu_;
    mutable std::map<std::pair<Elem, Elem>, bool> bruhat_memo_;

    std::vector<Vec> mat_mul(const std::vector<Vec>& a, const std::vector<Vec>& b) const;
    std::vector<Vec> mat_inv(const std::vector<Vec>& a) const;
    Vec mat_apply(const std::vector<Vec>& a, const Vec& v) const;
    bool bruhat_leq_nomemo(Elem x, Elem y) const;
};

}  // namespace momgra

#endif
