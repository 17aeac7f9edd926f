#include "momgra/hecke.hpp"

#include <algorithm>
#include <set>

namespace momgra {

HeckeElem Hecke::unit() const {
    return t_basis(W_.identity());
}

HeckeElem Hecke::t_basis(const Elem& x) const {
    HeckeElem h;
    h.add_term(x, LaurentPoly(1));
    return h;
}

HeckeElem Hecke::mult_gen(const HeckeElem& a, int s) const {
    // T~_x T~_s = T~_{xs} if xs > x, and T~_{xs} + (v^{-1} - v) T~_x else.
    static const LaurentPoly vdiff =
        LaurentPoly::v_power(-1) - LaurentPoly::v_power(1);
    HeckeElem r;
    Elem gs = W_.simple(s);
    for (auto& [x, p] : a.c) {
        Elem xs = W_.mul(x, gs);
        if (W_.length(xs) > W_.length(x)) {
            r.add_term(xs, p);
        } else {
            r.add_term(xs, p);
            r.add_term(x, p * vdiff);
        }
    }
    return r;
}

HeckeElem Hecke::mult(const HeckeElem& a, const HeckeElem& b) const {
    HeckeElem r;
    for (auto& [y, q] : b.c) {
        HeckeElem term = a;
        for (int s : W_.reduced_word(y)) term = mult_gen(term, s);
        r = r + term.scaled(q);
    }
    return r;
}

HeckeElem Hecke::dual_t_basis(const Elem& x) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = dual_t_.find(x);
        if (it != dual_t_.end()) return it->second;
    }
    // d(T~_x) = v^{-l(x)} T_{x^{-1}}^{-1} and T_s^{-1} = v T~_s + (v^2-1) T~_e.
    std::vector<int> word = W_.reduced_word(x);
    HeckeElem r = unit();
    for (int s : word) {
        HeckeElem ts_inv;
        ts_inv.add_term(W_.simple(s), LaurentPoly::v_power(1));
        ts_inv.add_term(W_.identity(),
                        LaurentPoly::v_power(2) - LaurentPoly(1));
        r = mult(r, ts_inv);
    }
    r = r.scaled(LaurentPoly::v_power(-static_cast<int>(word.size())));
    std::lock_guard<std::mutex> lk(mu_);
    dual_t_.emplace(x, r);
    return r;
}

HeckeElem Hecke::duality(const HeckeElem& a) const {
    HeckeElem r;
    for (auto& [x, p] : a.c) r = r + dual_t_basis(x).scaled(p.bar());
    return r;
}

HeckeElem Hecke::kl_gen(int s) const {
    HeckeElem h;
    h.add_term(W_.simple(s), LaurentPoly(1));
    h.add_term(W_.identity(), LaurentPoly::v_power(1));
    return h;
}

HeckeElem Hecke::kl_element(const Elem& x) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = kl_.find(x);
        if (it != kl_.end()) return it->second;
    }
    HeckeElem h;
    if (x == W_.identity()) {
        h = unit();
    } else {
        // mu-correction recursion on H-bar_u H-bar_s with u = xs < x.
        int s = -1;
        long lx = W_.length(x);
        for (int i = 0; i <= W_.rank(); ++i)
            if (W_.length(W_.mul(x, W_.simple(i))) < lx) {
                s = i;
                break;
            }
        require(s >= 0, "no descent");
        Elem u = W_.mul(x, W_.simple(s));
        h = mult(kl_element(u), kl_gen(s));
        for (auto& [y, hy] : kl_element(u).c) {
            if (y == u) continue;
            if (W_.length(W_.mul(y, W_.simple(s))) > W_.length(y)) continue;
            std::int64_t mu = hy.coeff(1);
            if (mu == 0) continue;
            h = h - kl_element(y).scaled(LaurentPoly(mu));
        }
        std::string why;
        if (!check_kl_axioms(x, h, &why))
            throw Error("self-dual basis recursion produced a bad element: " + why);
    }
    std::lock_guard<std::mutex> lk(mu_);
    kl_.emplace(x, h);
    return h;
}

bool Hecke::check_kl_axioms(const Elem& x, const HeckeElem& h, std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (h.coeff(x) != LaurentPoly(1)) return fail("h_{x,x} != 1");
    for (auto& [y, p] : h.c) {
        if (!(y == x) && !p.in_v_times_Z_of_v()) return fail("h_{y,x} not in vZ[v]");
        if (!W_.bruhat_leq(y, x)) return fail("support outside the Bruhat ideal");
    }
    if (!(duality(h) == h)) return fail("not self-dual");
    return true;
}

LaurentPoly Hecke::kl_poly(const Elem& y, const Elem& x) const {
    return kl_element(x).coeff(y);
}

HeckeElem Hecke::bott_samelson(const std::vector<int>& word) const {
    HeckeElem h = unit();
    for (int s : word) h = mult(h, kl_gen(s));
    return h;
}

HeckeElem Hecke::rho_action(const HeckeElem& a, int s, Order order) const {
    HeckeElem r;
    Elem gs = W_.simple(s);
    for (auto& [x, p] : a.c) {
        Elem xs = W_.mul(x, gs);
        r.add_term(xs, p);
        if (W_.leq(order, xs, x))
            r.add_term(x, p * LaurentPoly::v_power(-1));
        else
            r.add_term(x, p * LaurentPoly::v_power(1));
    }
    return r;
}

PeriodicElem Hecke::periodic_act_gen(const PeriodicElem& m, int s) const {
    // A * T~_s = rho_{s,generic}(A) - v A.
    HeckeElem r = rho_action(m, s, Order::Generic);
    return r - m.scaled(LaurentPoly::v_power(1));
}

PeriodicElem Hecke::periodic_act(const PeriodicElem& m, const HeckeElem& h) const {
    PeriodicElem r;
    for (auto& [y, q] : h.c) {
        PeriodicElem term = m;
        for (int s : W_.reduced_word(y)) term = periodic_act_gen(term, s);
        r = r + term.scaled(q);
    }
    return r;
}

BoundComponents Hecke::bound_components(const std::vector<int>& word) const {
    require(!word.empty(), "bound components need a nonempty word");
    BoundComponents bc;
    bc.l = static_cast<long>(word.size());
    HeckeElem h = bott_samelson(word);
    for (auto& [x, a] : h.c) {
        bc.r = std::max(bc.r, static_cast<long>(a.eval_one()));
        bc.d = std::max(bc.d, static_cast<long>(a.derivative().eval_one()));
    }
    // All vertices below some subword product, then every label on the full
    // subgraph; N is the top height.
    std::set<Elem> verts;
    const size_t n = word.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        Elem p = W_.identity();
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) p = W_.mul(p, W_.simple(word[i]));
        verts.insert(p);
    }
    std::vector<Elem> vs(verts.begin(), verts.end());
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            auto lab = W_.reflection_of_edge(vs[i], vs[j]);
            if (lab) bc.N = std::max(bc.N, W_.datum().affine_height(*lab));
        }
    return bc;
}

static mpz_class factorial(long n) {
    mpz_class f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

mpz_class Hecke::bound_U(const std::vector<int>& word) const {
    if (word.empty()) return 1;
    BoundComponents bc = bound_components(word);
    mpz_class npow;
    mpz_class base(bc.N);
    mpz_pow_ui(npow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(bc.l + 2 * bc.d));
    mpz_class inner = factorial(bc.r) * factorial(bc.r - 1) * npow;
    mpz_class innerpow;
    mpz_pow_ui(innerpow.get_mpz_t(), inner.get_mpz_t(), static_cast<unsigned long>(bc.r));
    return factorial(bc.r) * innerpow;
}

mpz_class Hecke::bound_U_min(const Elem& w) const {
    if (w == W_.identity()) return 1;
    mpz_class best;
    bool first = true;
    for (auto& word : W_.all_reduced_words(w)) {
        mpz_class u = bound_U(word);
        if (first || u < best) {
            best = u;
            first = false;
        }
    }
    return best;
}

}  // namespace momgra
