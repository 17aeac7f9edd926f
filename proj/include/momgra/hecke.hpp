#ifndef MOMGRA_HECKE_HPP
#define MOMGRA_HECKE_HPP

#include <gmpxx.h>

#include <map>
#include <mutex>

#include "momgra/laurent.hpp"
#include "momgra/weyl.hpp"

namespace momgra {

// Finitely supported Z[v,v^{-1}]-combination of basis vectors indexed by
// group elements. Used for the T~ basis of H, for the W basis, and (as
// PeriodicElem) for the A basis of the periodic module M.
struct HeckeElem {
    std::map<Elem, LaurentPoly> c;

    bool is_zero() const { return c.empty(); }
    LaurentPoly coeff(const Elem& x) const {
        auto it = c.find(x);
        return it == c.end() ? LaurentPoly() : it->second;
    }
    void add_term(const Elem& x, const LaurentPoly& p) {
        if (p.is_zero()) return;
        LaurentPoly q = coeff(x) + p;
        if (q.is_zero())
            c.erase(x);
        else
            c[x] = q;
    }
    HeckeElem operator+(const HeckeElem& o) const {
        HeckeElem r = *this;
        for (auto& [x, p] : o.c) r.add_term(x, p);
        return r;
    }
    HeckeElem operator-(const HeckeElem& o) const {
        HeckeElem r = *this;
        for (auto& [x, p] : o.c) r.add_term(x, -p);
        return r;
    }
    HeckeElem scaled(const LaurentPoly& f) const {
        HeckeElem r;
        for (auto& [x, p] : c) r.add_term(x, p * f);
        return r;
    }
    bool operator==(const HeckeElem& o) const { return c == o.c; }
};

using PeriodicElem = HeckeElem;  // A_x basis; the module structure differs

struct BoundComponents {
    long r = 0;
    long d = 0;
    long N = 0;
    long l = 0;
};

// The affine Hecke algebra attached to a Weyl context, with the T~ basis,
// the Kazhdan-Lusztig self-dual basis (memoized), the periodic right module,
// and the explicit bound U.
class Hecke {
public:
    explicit Hecke(const Weyl& w) : W_(w) {}

    const Weyl& weyl() const { return W_; }

    HeckeElem unit() const;
    HeckeElem t_basis(const Elem& x) const;  // T~_x

    HeckeElem mult(const HeckeElem& a, const HeckeElem& b) const;
    HeckeElem mult_gen(const HeckeElem& a, int s) const;  // right mult by T~_s
    HeckeElem duality(const HeckeElem& a) const;

    HeckeElem kl_element(const Elem& x) const;  // H-bar_x
    LaurentPoly kl_poly(const Elem& y, const Elem& x) const;
    HeckeElem kl_gen(int s) const;  // H-bar_s

    HeckeElem bott_samelson(const std::vector<int>& word) const;

    // rho_{s,order} on the W basis.
    HeckeElem rho_action(const HeckeElem& a, int s, Order order) const;
    // Right H-module structure on M: A * H-bar_s = rho_{s,generic}.
    PeriodicElem periodic_act(const PeriodicElem& m, const HeckeElem& h) const;
    PeriodicElem periodic_act_gen(const PeriodicElem& m, int s) const;  // by T~_s

    BoundComponents bound_components(const std::vector<int>& word) const;
    mpz_class bound_U(const std::vector<int>& word) const;
    mpz_class bound_U_min(const Elem& w) const;

    // Checks properties (1)-(3) of the self-dual basis theorem.
    bool check_kl_axioms(const Elem& x, const HeckeElem& h, std::string* why = nullptr) const;

private:
    const Weyl& W_;
    mutable std::mutex mu_;
    mutable std::map<Elem, HeckeElem> kl_;
    mutable std::map<Elem, HeckeElem> dual_t_;  // d(T~_x)

    HeckeElem dual_t_basis(const Elem& x) const;
};

}  // namespace momgra

#endif
