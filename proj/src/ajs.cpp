#include "momgra/ajs.hpp"

#include <algorithm>
#include <set>

namespace momgra {

Poly root_form_finite(const RootDatum& rd, int root_index, const Field& F) {
    Poly p = Poly::linear(rd.root(root_index).x, F);
    require(!p.is_zero(), "finite root vanishes over " + F.str());
    return p;
}

int LocalElem::degree() const {
    if (num.is_zero()) return 0;
    int d = num.degree();
    for (auto& [r, e] : den) d -= 2 * e;
    return d;
}

LocalElem LocalElem::mul(const LocalElem& o, const RootDatum& rd, const Field& F) const {
    (void)rd;  // same shape as add, which lifts over the denominators
    LocalElem r;
    r.num = num.mul(o.num, F);
    if (r.num.is_zero()) return LocalElem::zero(num.nvars());
    r.den = den;
    for (auto& [k, e] : o.den) r.den[k] += e;
    return r;
}

LocalElem LocalElem::add(const LocalElem& o, const RootDatum& rd, const Field& F) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::map<int, int> common = den;
    for (auto& [k, e] : o.den) common[k] = std::max(common[k], e);
    auto lift = [&](const LocalElem& x) {
        Poly p = x.num;
        for (auto& [k, e] : common) {
            int have = x.den.count(k) ? x.den.at(k) : 0;
            for (int i = have; i < e; ++i) p = p.mul(root_form_finite(rd, k, F), F);
        }
        return p;
    };
    LocalElem r;
    r.num = lift(*this).add(lift(o), F);
    if (r.num.is_zero()) return LocalElem::zero(num.nvars());
    r.den = common;
    return r;
}

LocalElem LocalElem::neg(const Field& F) const {
    LocalElem r = *this;
    r.num = r.num.neg(F);
    return r;
}

LocalElem LocalElem::times_root(int k, const RootDatum& rd, const Field& F) const {
    if (is_zero()) return *this;
    LocalElem r = *this;
    auto it = r.den.find(k);
    if (it != r.den.end()) {
        if (--it->second == 0) r.den.erase(it);
    } else {
        r.num = r.num.mul(root_form_finite(rd, k, F), F);
    }
    return r;
}

LocalElem LocalElem::over_root(int k, const RootDatum& rd, const Field& F) const {
    if (is_zero()) return *this;
    LocalElem r = *this;
    Poly form = root_form_finite(rd, k, F);
    if (r.num.divisible_by(form, F))
        r.num = r.num.divide_exact(form, F);
    else
        r.den[k] += 1;
    return r;
}

LocalElem LocalElem::inverse(const RootDatum& rd, const Field& F) const {
    require(!is_zero(), "inverse of zero");
    // factor the numerator as a scalar times a product of root forms
    Poly rest = num;
    std::map<int, int> factors;
    bool progress = true;
    while (progress && rest.degree() > 0) {
        progress = false;
        for (int k = 0; k < rd.num_positive(); ++k) {
            Poly form = root_form_finite(rd, k, F);
            while (rest.divisible_by(form, F)) {
                rest = rest.divide_exact(form, F);
                ++factors[k];
                progress = true;
            }
        }
    }
    require(rest.degree() == 0, "inverse requires a monomial in the roots");
    Num c = rest.coeff(Mono(rest.nvars(), 0));
    LocalElem r;
    r.num = Poly::constant(num.nvars(), F.inv(c), F);
    for (auto& [k, e] : den)
        for (int i = 0; i < e; ++i) r.num = r.num.mul(root_form_finite(rd, k, F), F);
    r.den = factors;
    return r;
}

bool LocalElem::eq(const LocalElem& o, const RootDatum& rd, const Field& F) const {
    // cross multiply
    Poly l = num, r = o.num;
    for (auto& [k, e] : o.den)
        for (int i = 0; i < e; ++i) l = l.mul(root_form_finite(rd, k, F), F);
    for (auto& [k, e] : den)
        for (int i = 0; i < e; ++i) r = r.mul(root_form_finite(rd, k, F), F);
    return l.eq(r);
}

std::string LocalElem::str(const RootDatum& rd) const {
    std::vector<std::string> names;
    for (int i = 0; i < rd.rank(); ++i) names.push_back("w" + std::to_string(i + 1));
    std::string s = num.str(names);
    for (auto& [k, e] : den)
        s += "/(" + rd.affine_root_str(AffineRoot{k + 1, 0}) + ")^" + std::to_string(e);
    return s;
}

std::string facet_name(const Weyl& W, const Facet& f) {
    if (std::holds_alternative<Alcove>(f)) return W.word_str(std::get<Alcove>(f).w);
    const WallCoset& b = std::get<WallCoset>(f);
    return W.word_str(b.rep) + "|" + std::to_string(b.s);
}

std::map<std::string, int> AjsObject::rank_vector() const {
    std::map<std::string, int> out;
    for (auto& [f, m] : stalk)
        if (!m.is_zero()) out[facet_name(*W, f)] = m.rank();
    return out;
}

AjsObject ajs_p0(std::shared_ptr<const Weyl> w, const Field& F) {
    require(F.characteristic() != 2, "the combinatorial category needs 2 invertible");
    require(!(w->datum().label() == "G2" && F.characteristic() == 3),
            "characteristic 3 is excluded for type G2 here");
    AjsObject m;
    m.W = w;
    m.F = F;
    m.on_walls = false;
    const int nv = w->rank();
    Alcove ae = w->alcove_of(w->identity());
    m.stalk[ae] = GradedFreeModule::free({0});
    for (int beta = 0; beta < w->datum().num_positive(); ++beta) {
        AjsPres p1;  // (A_e, beta): S^beta inside M(A_e) + 0
        p1.two_slot = true;
        p1.rank_a = 1;
        p1.rank_b = 0;
        AjsGen g1;
        g1.degree = 0;
        g1.a = {LocalElem::one(nv, F)};
        p1.gens.push_back(g1);
        m.sub[{Facet(ae), beta}] = p1;

        Alcove down = w->beta_down(ae, beta);
        AjsPres p2;  // (beta-down A_e, beta): generator in the up slot
        p2.two_slot = true;
        p2.rank_a = 0;
        p2.rank_b = 1;
        AjsGen g2;
        g2.degree = 0;
        g2.b = {LocalElem::one(nv, F)};
        p2.gens.push_back(g2);
        m.sub[{Facet(down), beta}] = p2;
    }
    return m;
}

namespace {

// (sign, root index) of s_beta(alpha_k) in the finite system.
std::pair<int, int> s_beta_image(const RootDatum& rd, int beta, int k) {
    Vec img = rd.reflect_weight(beta, rd.root(k).x);
    int idx = rd.find_root(img);
    if (idx >= 0) return {+1, idx};
    Vec neg = img;
    for (long& c : neg) c = -c;
    idx = rd.find_root(neg);
    require(idx >= 0, "reflection image is not a root");
    return {-1, idx};
}

std::vector<LocalElem> zero_vec(int n, int nv) {
    return std::vector<LocalElem>(n, LocalElem::zero(nv));
}

std::vector<LocalElem> scale_vec(const std::vector<LocalElem>& v, const LocalElem& c,
                                 const RootDatum& rd, const Field& F) {
    std::vector<LocalElem> r;
    for (const LocalElem& x : v) r.push_back(x.mul(c, rd, F));
    return r;
}

std::vector<LocalElem> times_root_vec(const std::vector<LocalElem>& v, int beta,
                                      const RootDatum& rd, const Field& F) {
    std::vector<LocalElem> r;
    for (const LocalElem& x : v) r.push_back(x.times_root(beta, rd, F));
    return r;
}

}  // namespace

LocalElem a_const(const Weyl& W, const Alcove& A, int beta, int s, const Field& F) {
    const RootDatum& rd = W.datum();
    const int nv = rd.rank();
    WallCoset B = W.wall_of(A, s);
    int type = W.wall_type(B);
    auto [sign, idx] = s_beta_image(rd, beta, type);
    if (sign > 0) return LocalElem::one(nv, F);
    if (W.wall_plus(B) == A) {
        LocalElem r;
        r.num = root_form_finite(rd, type, F).neg(F);
        return r;
    }
    LocalElem r = LocalElem::one(nv, F);
    r.den[type] = 1;
    return r;
}

LocalElem d_const(const Weyl& W, const Facet& f, int beta, const Field& F) {
    const RootDatum& rd = W.datum();
    const int nv = rd.rank();
    if (std::holds_alternative<Alcove>(f)) {
        const Alcove& A = std::get<Alcove>(f);
        Alcove up = W.beta_up(A, beta);
        LocalElem r = LocalElem::one(nv, F);
        for (int k = 0; k < rd.num_positive(); ++k) {
            auto [sign, idx] = s_beta_image(rd, beta, k);
            if (sign > 0) continue;
            long diff = W.alcove_coord(up.w, k) - W.alcove_coord(A.w, k);
            for (long i = 0; i < diff; ++i) r = r.over_root(k, rd, F);
        }
        return r;
    }
    const WallCoset& B = std::get<WallCoset>(f);
    int type = W.wall_type(B);
    LocalElem r = d_const(W, Facet(W.wall_minus(B)), beta, F);
    auto [sign, idx] = s_beta_image(rd, beta, type);
    if (sign < 0) r = r.times_root(type, rd, F);
    return r;
}

namespace {

struct OnContext {
    const AjsObject& m;
    int s;
    bool primed;  // scale by the inverse a-constants
};

AjsObject t_on_impl(const OnContext& ctx) {
    const AjsObject& m = ctx.m;
    const Weyl& W = *m.W;
    const RootDatum& rd = W.datum();
    const Field& F = m.F;
    const int nv = rd.rank();
    require(!m.on_walls, "t_on expects an alcove object");
    AjsObject out;
    out.W = m.W;
    out.F = F;
    out.on_walls = true;
    out.s = ctx.s;

    auto wall_of_alcove = [&](const Alcove& a) { return W.wall_of(a, ctx.s); };

    // stalk at a wall: M(B_-) | M(B_+)
    std::set<WallCoset> walls;
    for (auto& [f, mod] : m.stalk) walls.insert(wall_of_alcove(std::get<Alcove>(f)));
    for (auto& [key, pres] : m.sub)
        walls.insert(wall_of_alcove(std::get<Alcove>(key.first)));
    for (const WallCoset& b : walls) {
        GradedFreeModule mm =
            m.stalk_of(Facet(W.wall_minus(b))).concat(m.stalk_of(Facet(W.wall_plus(b))));
        if (!mm.is_zero()) out.stalk[Facet(b)] = mm;
    }

    for (const WallCoset& b : walls) {
        for (int beta = 0; beta < rd.num_positive(); ++beta) {
            Alcove minus = W.wall_minus(b), plus = W.wall_plus(b);
            int rk_minus = m.stalk_of(Facet(minus)).rank();
            int rk_plus = m.stalk_of(Facet(plus)).rank();
            int type = W.wall_type(b);
            AjsPres pres;
            if (type == beta) {
                // beta-up fixes the wall: single-slot presentation from below
                const AjsPres* src = m.sub_of(Facet(minus), beta);
                if (!src) continue;
                pres.two_slot = false;
                pres.rank_a = rk_minus + rk_plus;
                pres.rank_b = 0;
                LocalElem c = ctx.primed
                                  ? a_const(W, minus, beta, ctx.s, F).inverse(rd, F)
                                  : LocalElem::one(nv, F);
                for (const AjsGen& g : src->gens) {
                    AjsGen ng;
                    ng.degree = g.degree + (ctx.primed ? c.degree() : 0);
                    ng.a = scale_vec(g.a, c, rd, F);
                    ng.a.insert(ng.a.end(), g.b.begin(), g.b.end());
                    require(static_cast<int>(ng.a.size()) == pres.rank_a,
                            "slot size mismatch (wall of type beta)");
                    pres.gens.push_back(std::move(ng));
                }
            } else {
                WallCoset bup = std::get<WallCoset>(W.beta_up(Facet(b), beta));
                Alcove up_minus = W.wall_minus(bup), up_plus = W.wall_plus(bup);
                int rk_um = m.stalk_of(Facet(up_minus)).rank();
                int rk_up = m.stalk_of(Facet(up_plus)).rank();
                pres.two_slot = true;
                pres.rank_a = rk_minus + rk_plus;
                pres.rank_b = rk_um + rk_up;
                auto route = [&](const Alcove& a0, const AjsPres* src, int a_off) {
                    if (!src) return;
                    Alcove target = W.beta_up(a0, beta);
                    int b_off = target == up_minus ? 0 : rk_um;
                    require(target == up_minus || target == up_plus,
                            "beta-up image is not adjacent to the up wall");
                    LocalElem c = ctx.primed
                                      ? a_const(W, a0, beta, ctx.s, F).inverse(rd, F)
                                      : LocalElem::one(nv, F);
                    for (const AjsGen& g : src->gens) {
                        AjsGen ng;
                        ng.degree = g.degree + (ctx.primed ? c.degree() : 0);
                        ng.a = zero_vec(pres.rank_a, nv);
                        ng.b = zero_vec(pres.rank_b, nv);
                        std::vector<LocalElem> ga = scale_vec(g.a, c, rd, F);
                        for (size_t i = 0; i < ga.size(); ++i) ng.a[a_off + i] = ga[i];
                        for (size_t i = 0; i < g.b.size(); ++i) ng.b[b_off + i] = g.b[i];
                        pres.gens.push_back(std::move(ng));
                    }
                };
                route(minus, m.sub_of(Facet(minus), beta), 0);
                route(plus, m.sub_of(Facet(plus), beta), rk_minus);
            }
            if (!pres.gens.empty()) out.sub[{Facet(b), beta}] = std::move(pres);
        }
    }
    return out;
}

AjsObject t_out_impl(const AjsObject& n, bool primed) {
    const Weyl& W = *n.W;
    const RootDatum& rd = W.datum();
    const Field& F = n.F;
    const int nv = rd.rank();
    require(n.on_walls, "t_out expects a wall object");
    const int s = n.s;
    AjsObject out;
    out.W = n.W;
    out.F = F;
    out.on_walls = false;

    std::set<WallCoset> walls;
    for (auto& [f, mod] : n.stalk) walls.insert(std::get<WallCoset>(f));
    for (auto& [key, pres] : n.sub) walls.insert(std::get<WallCoset>(key.first));

    std::set<Alcove> alcoves;
    for (const WallCoset& b : walls) {
        alcoves.insert(W.wall_minus(b));
        alcoves.insert(W.wall_plus(b));
    }
    for (const Alcove& a : alcoves) {
        WallCoset b = W.wall_of(a, s);
        GradedFreeModule mm = n.stalk_of(Facet(b));
        if (!mm.is_zero()) out.stalk[Facet(a)] = mm;
    }

    for (int beta = 0; beta < rd.num_positive(); ++beta) {
        std::set<Alcove> cands = alcoves;
        for (const Alcove& a : alcoves) cands.insert(W.beta_down(a, beta));
        for (const Alcove& a : cands) {
            WallCoset bar = W.wall_of(a, s);
            Alcove up = W.beta_up(a, beta);
            WallCoset upbar = W.wall_of(up, s);
            AjsPres pres;
            pres.two_slot = true;
            pres.rank_a = n.stalk_of(Facet(bar)).rank();
            pres.rank_b = n.stalk_of(Facet(upbar)).rank();
            if (W.wall_type(bar) == beta) {
                const AjsPres* src = n.sub_of(Facet(bar), beta);
                if (a == W.wall_minus(bar)) {
                    // {(beta x + y, y)}; primed: {(x + a y, y)}
                    if (!src) continue;
                    LocalElem ac = primed ? a_const(W, a, beta, s, F)
                                          : LocalElem::zero(nv);
                    for (const AjsGen& g : src->gens) {
                        AjsGen g1;  // (beta g, 0)   resp. (g, 0)
                        if (primed) {
                            g1.degree = g.degree;
                            g1.a = g.a;
                        } else {
                            g1.degree = g.degree + 2;
                            g1.a = times_root_vec(g.a, beta, rd, F);
                        }
                        g1.b = zero_vec(pres.rank_b, nv);
                        pres.gens.push_back(std::move(g1));
                        AjsGen g2;  // (g, g)        resp. (a g, g)
                        g2.degree = g.degree;
                        g2.a = primed ? scale_vec(g.a, ac, rd, F) : g.a;
                        g2.b = g.a;
                        pres.gens.push_back(std::move(g2));
                    }
                } else {
                    // A = plus side: beta N(bar,beta) + N(upbar,beta)
                    const AjsPres* src2 = n.sub_of(Facet(upbar), beta);
                    if (!src && !src2) continue;
                    if (src)
                        for (const AjsGen& g : src->gens) {
                            AjsGen g1;
                            if (primed) {
                                g1.degree = g.degree;
                                g1.a = g.a;
                            } else {
                                g1.degree = g.degree + 2;
                                g1.a = times_root_vec(g.a, beta, rd, F);
                            }
                            g1.b = zero_vec(pres.rank_b, nv);
                            pres.gens.push_back(std::move(g1));
                        }
                    if (src2)
                        for (const AjsGen& g : src2->gens) {
                            AjsGen g2;
                            g2.degree = g.degree;
                            g2.a = zero_vec(pres.rank_a, nv);
                            g2.b = g.a;
                            pres.gens.push_back(std::move(g2));
                        }
                }
            } else {
                const AjsPres* src = n.sub_of(Facet(bar), beta);
                if (!src) continue;
                LocalElem ac = primed ? a_const(W, a, beta, s, F) : LocalElem::one(nv, F);
                for (const AjsGen& g : src->gens) {
                    AjsGen ng;
                    ng.degree = g.degree + (primed ? ac.degree() : 0);
                    ng.a = primed ? scale_vec(g.a, ac, rd, F) : g.a;
                    ng.b = g.b;
                    pres.gens.push_back(std::move(ng));
                }
            }
            if (!pres.gens.empty()) out.sub[{Facet(a), beta}] = std::move(pres);
        }
    }
    return out;
}

}  // namespace

AjsObject ajs_t_on(const AjsObject& m, int s) { return t_on_impl({m, s, false}); }
AjsObject ajs_t_on_prime(const AjsObject& m, int s) { return t_on_impl({m, s, true}); }
AjsObject ajs_t_out(const AjsObject& n) { return t_out_impl(n, false); }
AjsObject ajs_t_out_prime(const AjsObject& n) { return t_out_impl(n, true); }

AjsObject ajs_t(const AjsObject& m, int s) { return ajs_t_out(ajs_t_on(m, s)); }

AjsObject ajs_track(std::shared_ptr<const Weyl> w, const std::vector<int>& word,
                    const Field& F) {
    AjsObject m = ajs_p0(w, F);
    for (int s : word) m = ajs_t(m, s);
    return m;
}

AjsObject ajs_gamma(const AjsObject& m, int sign) {
    const Weyl& W = *m.W;
    const RootDatum& rd = W.datum();
    const Field& F = m.F;
    AjsObject out = m;
    for (auto& [key, pres] : out.sub) {
        const Facet& f = key.first;
        int beta = key.second;
        if (!pres.two_slot) continue;  // wall of type beta: gamma = 1
        LocalElem d = d_const(W, f, beta, F);
        if (sign < 0) d = d.inverse(rd, F);
        for (AjsGen& g : pres.gens) {
            g.a = scale_vec(g.a, d, rd, F);
            g.degree += d.degree();
        }
    }
    return out;
}

AjsObject ajs_t_on_gamma(const AjsObject& m, int s) {
    return ajs_gamma(ajs_t_on_prime(ajs_gamma(m, +1), s), -1);
}

AjsObject ajs_t_out_gamma(const AjsObject& n, int s) {
    (void)s;
    return ajs_gamma(ajs_t_out_prime(ajs_gamma(n, +1)), -1);
}

/* ---------------- submodule comparison ---------------- */

namespace {

// Rational functions without gcd normalization; enough for tiny systems.
struct Frac {
    Poly num, den;
};

Frac frac_of(const Poly& p, const Field& F) {
    return Frac{p, Poly::constant(p.nvars(), Num(1), F)};
}

bool frac_zero(const Frac& f) { return f.num.is_zero(); }

Frac frac_mul(const Frac& a, const Frac& b, const Field& F) {
    return Frac{a.num.mul(b.num, F), a.den.mul(b.den, F)};
}

Frac frac_div(const Frac& a, const Frac& b, const Field& F) {
    require(!b.num.is_zero(), "division by zero fraction");
    return Frac{a.num.mul(b.den, F), a.den.mul(b.num, F)};
}

Frac frac_sub(const Frac& a, const Frac& b, const Field& F) {
    return Frac{a.num.mul(b.den, F).sub(b.num.mul(a.den, F), F), a.den.mul(b.den, F)};
}

// Clear denominators of a generator; returns the polynomial vector and the
// common denominator used (a product of root forms).
std::pair<std::vector<Poly>, Poly> cleared(const std::vector<LocalElem>& v,
                                           const std::map<int, int>& common,
                                           const RootDatum& rd, const Field& F, int nv) {
    Poly d = Poly::constant(nv, Num(1), F);
    for (auto& [k, e] : common)
        for (int i = 0; i < e; ++i) d = d.mul(root_form_finite(rd, k, F), F);
    std::vector<Poly> out;
    for (const LocalElem& x : v) {
        Poly p = x.num;
        for (auto& [k, e] : common) {
            int have = x.den.count(k) ? x.den.at(k) : 0;
            for (int i = have; i < e; ++i) p = p.mul(root_form_finite(rd, k, F), F);
        }
        out.push_back(p);
    }
    return {out, d};
}

std::map<int, int> den_union(const std::map<int, int>& a, const std::map<int, int>& b) {
    std::map<int, int> c = a;
    for (auto& [k, e] : b) c[k] = std::max(c[k], e);
    return c;
}

int beta_valuation(Poly p, const Poly& form, const Field& F) {
    int v = 0;
    while (!p.is_zero() && p.divisible_by(form, F)) {
        p = p.divide_exact(form, F);
        ++v;
    }
    return v;
}

std::vector<LocalElem> full_vector(const AjsGen& g, const AjsPres& p, int nv) {
    std::vector<LocalElem> v = g.a;
    if (p.two_slot) {
        require(static_cast<int>(g.a.size()) == p.rank_a, "bad a-slot size");
        require(static_cast<int>(g.b.size()) == p.rank_b, "bad b-slot size");
        v.insert(v.end(), g.b.begin(), g.b.end());
    } else {
        require(static_cast<int>(g.a.size()) == p.rank_a, "bad slot size");
    }
    return v;
}

// Solve the poly linear system A c = b over the fraction field; returns
// (solutions, consistent). A is n x m with full column rank expected.
std::pair<std::vector<Frac>, bool> frac_solve(const std::vector<std::vector<Poly>>& A,
                                              const std::vector<Poly>& b, const Field& F) {
    int n = static_cast<int>(A.size());
    int m = n == 0 ? 0 : static_cast<int>(A[0].size());
    std::vector<std::vector<Frac>> M(n, std::vector<Frac>(m + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) M[i][j] = frac_of(A[i][j], F);
        M[i][m] = frac_of(b[i], F);
    }
    std::vector<int> pivot_row(m, -1);
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (!frac_zero(M[i][col])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[row], M[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == row || frac_zero(M[i][col])) continue;
            Frac f = frac_div(M[i][col], M[row][col], F);
            for (int j = col; j <= m; ++j)
                M[i][j] = frac_sub(M[i][j], frac_mul(f, M[row][j], F), F);
        }
        pivot_row[col] = row;
        ++row;
    }
    // consistency: a nonzero rhs in a zero row
    for (int i = row; i < n; ++i)
        if (!frac_zero(M[i][m])) return {{}, false};
    std::vector<Frac> c(m);
    bool unique = true;
    for (int col = 0; col < m; ++col) {
        if (pivot_row[col] < 0) {
            unique = false;
            c[col] = frac_of(Poly(A.empty() ? 0 : A[0][0].nvars()), F);
        } else {
            c[col] = frac_div(M[pivot_row[col]][m], M[pivot_row[col]][col], F);
        }
    }
    return {c, unique};
}

}  // namespace

SubVerdict submodule_equal(const Weyl& W, const Field& F, const AjsPres& X, const AjsPres& Y,
                           int beta, int cap) {
    const RootDatum& rd = W.datum();
    const int nv = rd.rank();
    require(X.two_slot == Y.two_slot && X.rank_a == Y.rank_a && X.rank_b == Y.rank_b,
            "submodule comparison needs a common ambient space");
    const int n = X.rank_a + (X.two_slot ? X.rank_b : 0);
    Poly beta_form = root_form_finite(rd, beta, F);

    // common denominator across everything
    std::map<int, int> common;
    auto absorb = [&](const AjsPres& p) {
        for (const AjsGen& g : p.gens) {
            for (const LocalElem& x : g.a) common = den_union(common, x.den);
            for (const LocalElem& x : g.b) common = den_union(common, x.den);
        }
    };
    absorb(X);
    absorb(Y);

    auto clear_all = [&](const AjsPres& p) {
        std::vector<std::vector<Poly>> out;
        for (const AjsGen& g : p.gens)
            out.push_back(cleared(full_vector(g, p, nv), common, rd, F, nv).first);
        return out;
    };
    std::vector<std::vector<Poly>> Xp = clear_all(X), Yp = clear_all(Y);

    // inverted roots available in S^beta
    std::vector<int> allowed;
    for (int k = 0; k < rd.num_positive(); ++k)
        if (k != beta) allowed.push_back(k);

    // membership of target (cleared) in the S^beta-span of gens (cleared with
    // the same common denominator, so the coefficients are unchanged)
    auto member = [&](const std::vector<Poly>& t,
                      const std::vector<std::vector<Poly>>& gens) -> std::optional<bool> {
        if (gens.empty()) {
            for (const Poly& p : t)
                if (!p.is_zero()) return false;
            return true;
        }
        for (int e = 0; e <= cap; ++e) {
            Poly E = Poly::constant(nv, Num(1), F);
            for (int k : allowed) {
                Poly form = root_form_finite(rd, k, F);
                for (int i = 0; i < e; ++i) E = E.mul(form, F);
            }
            std::vector<Poly> rhs;
            int max_rhs_deg = -1;
            for (const Poly& p : t) {
                rhs.push_back(E.mul(p, F));
                if (!rhs.back().is_zero()) max_rhs_deg = std::max(max_rhs_deg, rhs.back().degree());
            }
            if (max_rhs_deg < 0) return true;  // zero target
            // unknown polynomial coefficients q_i, with a degree bound that
            // budgets for cancellations between inhomogeneous generators
            std::vector<int> glo, ghi;
            int spread = 0;
            for (const auto& g : gens) {
                int lo = -1, hi = -1;
                for (const Poly& p : g) {
                    if (p.is_zero()) continue;
                    lo = lo < 0 ? p.min_degree() : std::min(lo, p.min_degree());
                    hi = std::max(hi, p.degree());
                }
                glo.push_back(lo);
                ghi.push_back(hi);
                if (lo >= 0) spread += hi - lo;
            }
            std::vector<std::vector<Mono>> qmonos;
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int bound = glo[gi] < 0 ? -1 : (max_rhs_deg + spread - glo[gi]) / 2;
                std::vector<Mono> monos;
                std::vector<int> vars;
                for (int i = 0; i < nv; ++i) vars.push_back(i);
                for (int d = 0; d <= bound; ++d)
                    for (Mono& mo : monomials_of_degree(nv, vars, d)) monos.push_back(mo);
                qmonos.push_back(std::move(monos));
            }
            // assemble: coefficient equations of  sum q_i g_i - E t = 0
            std::map<std::pair<int, Mono>, int> rows;  // (component, monomial)
            auto row_of = [&](int comp, const Mono& mo) {
                auto it = rows.find({comp, mo});
                if (it != rows.end()) return it->second;
                int id = static_cast<int>(rows.size());
                rows[{comp, mo}] = id;
                return id;
            };
            std::vector<std::vector<std::pair<int, Num>>> cols;
            for (size_t gi = 0; gi < gens.size(); ++gi)
                for (const Mono& qm : qmonos[gi]) {
                    std::vector<std::pair<int, Num>> col;
                    Poly qp(nv);
                    Field QF = F;
                    qp.set_coeff(qm, Num(1), QF);
                    for (int comp = 0; comp < n; ++comp) {
                        if (gens[gi][comp].is_zero()) continue;
                        Poly prod = gens[gi][comp].mul(qp, F);
                        for (auto& [mo, c] : prod.terms()) col.push_back({row_of(comp, mo), c});
                    }
                    cols.push_back(std::move(col));
                }
            for (int comp = 0; comp < n; ++comp)
                for (auto& [mo, c] : rhs[comp].terms()) row_of(comp, mo);
            Matrix A(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (size_t j = 0; j < cols.size(); ++j)
                for (auto& [r, c] : cols[j]) A.at(r, static_cast<int>(j)) = F.add(A.at(r, static_cast<int>(j)), c);
            std::vector<Num> bvec(rows.size(), Num(0));
            for (int comp = 0; comp < n; ++comp)
                for (auto& [mo, c] : rhs[comp].terms()) bvec[rows[{comp, mo}]] = c;
            if (A.solve(bvec, F)) return true;
        }
        return std::nullopt;  // not found up to the cap
    };

    // certificate that t is NOT in the span: fraction-field failure, or a
    // negative beta-valuation in the unique fractional solution
    auto not_member_certificate = [&](const std::vector<Poly>& t,
                                      const std::vector<std::vector<Poly>>& gens) -> bool {
        if (gens.empty()) {
            for (const Poly& p : t)
                if (!p.is_zero()) return true;
            return false;
        }
        std::vector<std::vector<Poly>> A(n, std::vector<Poly>(gens.size(), Poly(nv)));
        for (size_t j = 0; j < gens.size(); ++j)
            for (int i = 0; i < n; ++i) A[i][j] = gens[j][i];
        auto [c, unique] = frac_solve(A, t, F);
        if (c.empty() && !unique) return true;  // inconsistent over Frac(S)
        if (!unique) return false;
        for (const Frac& f : c) {
            if (frac_zero(f)) continue;
            int v = beta_valuation(f.num, beta_form, F) - beta_valuation(f.den, beta_form, F);
            if (v < 0) return true;
        }
        return false;
    };

    bool all_found = true;
    for (auto [from, into] : {std::make_pair(&Xp, &Yp), std::make_pair(&Yp, &Xp)}) {
        for (const auto& t : *from) {
            auto r = member(t, *into);
            if (r.has_value() && *r) continue;
            if (not_member_certificate(t, *into)) return SubVerdict::Unequal;
            all_found = false;
        }
    }
    return all_found ? SubVerdict::Equal : SubVerdict::Inconclusive;
}

bool check_generic_fullness(const Weyl& W, const Field& F, const AjsObject& m) {
    const RootDatum& rd = W.datum();
    const int nv = rd.rank();
    for (auto& [key, pres] : m.sub) {
        int n = pres.rank_a + (pres.two_slot ? pres.rank_b : 0);
        if (n == 0) continue;
        std::map<int, int> common;
        for (const AjsGen& g : pres.gens) {
            for (const LocalElem& x : g.a) common = den_union(common, x.den);
            for (const LocalElem& x : g.b) common = den_union(common, x.den);
        }
        std::vector<std::vector<Poly>> mat(n);
        for (const AjsGen& g : pres.gens) {
            auto [vec, d] = cleared(full_vector(g, pres, nv), common, rd, F, nv);
            for (int i = 0; i < n; ++i) mat[i].push_back(vec[i]);
        }
        if (poly_matrix_rank(mat, F) != n) return false;
    }
    return true;
}

}  // namespace momgra
