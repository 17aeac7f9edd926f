#ifndef MOMGRA_AJS_HPP
#define MOMGRA_AJS_HPP

#include <map>
#include <memory>
#include <vector>

#include "momgra/gsheaf.hpp"
#include "momgra/weyl.hpp"

namespace momgra {

// Element of the quotient field of S_k with denominator a formal product of
// positive finite roots: num / prod alpha_i^{den_i}. Homogeneous throughout.
struct LocalElem {
    Poly num;                 // over the rank variables (no delta)
    std::map<int, int> den;   // positive-root index -> exponent > 0

    static LocalElem zero(int nvars) { return LocalElem{Poly(nvars), {}}; }
    static LocalElem one(int nvars, const Field& F) {
        return LocalElem{Poly::constant(nvars, Num(1), F), {}};
    }
    bool is_zero() const { return num.is_zero(); }
    int degree() const;  // paper units; 0 for zero

    LocalElem mul(const LocalElem& o, const RootDatum& rd, const Field& F) const;
    LocalElem add(const LocalElem& o, const RootDatum& rd, const Field& F) const;
    LocalElem neg(const Field& F) const;
    // multiply or divide by a single root, cancelling against the stored
    // denominator where possible
    LocalElem times_root(int root_index, const RootDatum& rd, const Field& F) const;
    LocalElem over_root(int root_index, const RootDatum& rd, const Field& F) const;
    LocalElem inverse(const RootDatum& rd, const Field& F) const;  // monomial-ish only
    bool eq(const LocalElem& o, const RootDatum& rd, const Field& F) const;

    std::string str(const RootDatum& rd) const;
};

Poly root_form_finite(const RootDatum& rd, int root_index, const Field& F);

// One generator of an (F, beta)-submodule: components in M(F) and, for a
// two-slot presentation, in M(beta-up F).
struct AjsGen {
    int degree = 0;
    std::vector<LocalElem> a;  // in M(F)
    std::vector<LocalElem> b;  // in M(beta-up F); unused when single-slot
};

struct AjsPres {
    bool two_slot = true;
    int rank_a = 0, rank_b = 0;  // ambient ranks
    std::vector<AjsGen> gens;
};

// Object of the combinatorial category over the alcove orbit or a wall
// orbit: a graded free generic stalk per facet and a generator-presented
// submodule per (facet, positive root).
struct AjsObject {
    std::shared_ptr<const Weyl> W;
    Field F;
    bool on_walls = false;
    int s = -1;  // wall orbit tag
    std::map<Facet, GradedFreeModule> stalk;
    std::map<std::pair<Facet, int>, AjsPres> sub;

    GradedFreeModule stalk_of(const Facet& f) const {
        auto it = stalk.find(f);
        return it == stalk.end() ? GradedFreeModule{} : it->second;
    }
    const AjsPres* sub_of(const Facet& f, int beta) const {
        auto it = sub.find({f, beta});
        return it == sub.end() ? nullptr : &it->second;
    }
    std::map<std::string, int> rank_vector() const;  // facet name -> rank
};

std::string facet_name(const Weyl& W, const Facet& f);

AjsObject ajs_p0(std::shared_ptr<const Weyl> w, const Field& F);
AjsObject ajs_t_on(const AjsObject& m, int s);
AjsObject ajs_t_out(const AjsObject& n);
AjsObject ajs_t(const AjsObject& m, int s);  // composition
AjsObject ajs_track(std::shared_ptr<const Weyl> w, const std::vector<int>& word,
                    const Field& F);

// The three-case constant of the original translation functors.
LocalElem a_const(const Weyl& W, const Alcove& A, int beta, int s, const Field& F);
// The hyperplane-product constant (alcoves and walls).
LocalElem d_const(const Weyl& W, const Facet& f, int beta, const Field& F);

// The original functors, and the conjugated versions built from d-constants.
AjsObject ajs_t_on_prime(const AjsObject& m, int s);
AjsObject ajs_t_out_prime(const AjsObject& n);
AjsObject ajs_gamma(const AjsObject& m, int sign);  // scale by (d_F^beta)^{sign}
AjsObject ajs_t_on_gamma(const AjsObject& m, int s);
AjsObject ajs_t_out_gamma(const AjsObject& n, int s);

enum class SubVerdict { Equal, Unequal, Inconclusive };

// Mutual-membership comparison of two generator presentations of
// S^beta-submodules of the same ambient space, with denominators cleared up
// to the given cap per inverted root.
SubVerdict submodule_equal(const Weyl& W, const Field& F, const AjsPres& X, const AjsPres& Y,
                           int beta, int cap = 3);

// Empirical invariant: the generic span of the generators has full rank.
bool check_generic_fullness(const Weyl& W, const Field& F, const AjsObject& m);

}  // namespace momgra

#endif
