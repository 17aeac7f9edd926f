#include "momgra/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "momgra/linalg.hpp"

namespace momgra {

MomentGraph::MomentGraph(std::shared_ptr<const Weyl> w, std::vector<Elem> vertices)
    : W_(std::move(w)), verts_(std::move(vertices)) {
    // Canonical vertex order: by length, then by canonical word.
    std::vector<std::pair<std::pair<long, std::string>, Elem>> keyed;
    for (const Elem& v : verts_)
        keyed.push_back({{W_->length(v), W_->word_str(v)}, v});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    verts_.clear();
    for (auto& [k, v] : keyed) {
        verts_.push_back(v);
        names_.push_back(k.second);
    }
    incidence_.assign(verts_.size(), {});
    for (int i = 0; i < num_vertices(); ++i)
        for (int j = i + 1; j < num_vertices(); ++j) {
            auto lab = W_->reflection_of_edge(verts_[i], verts_[j]);
            if (!lab) continue;
            int e = static_cast<int>(edges_.size());
            edges_.push_back(GraphEdge{i, j, *lab});
            incidence_[i].push_back(e);
            incidence_[j].push_back(e);
        }
}

MomentGraph::MomentGraph(std::shared_ptr<const Weyl> w, std::vector<Elem> vertices,
                         std::vector<GraphEdge> edges, bool presorted)
    : W_(std::move(w)), verts_(std::move(vertices)), edges_(std::move(edges)) {
    require(presorted, "explicit-edge constructor expects presorted vertices");
    for (const Elem& v : verts_) names_.push_back(W_->word_str(v));
    incidence_.assign(verts_.size(), {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        incidence_[edges_[e].u].push_back(e);
        incidence_[edges_[e].v].push_back(e);
    }
}

int MomentGraph::vertex_index(const Elem& w) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (verts_[i] == w) return i;
    return -1;
}

std::string MomentGraph::dot() const {
    std::string s = "graph momentgraph {\n";
    for (int i = 0; i < num_vertices(); ++i)
        s += "  \"" + (names_[i].empty() ? std::string("e") : names_[i]) + "\";\n";
    for (const GraphEdge& e : edges_) {
        s += "  \"" + (names_[e.u].empty() ? std::string("e") : names_[e.u]) + "\" -- \"" +
             (names_[e.v].empty() ? std::string("e") : names_[e.v]) + "\" [label=\"" +
             W_->datum().affine_root_str(e.label) + "\"];\n";
    }
    s += "}\n";
    return s;
}

MomentGraph build_graph_ideal(std::shared_ptr<const Weyl> w, const Elem& top) {
    std::vector<Elem> verts = w->bruhat_ideal(top);
    return MomentGraph(std::move(w), std::move(verts));
}

MomentGraph build_graph_circ(std::shared_ptr<const Weyl> w) {
    std::vector<Elem> verts = w->w_circ();
    return MomentGraph(std::move(w), std::move(verts));
}

MomentGraph build_graph(std::shared_ptr<const Weyl> w, std::vector<Elem> vertices) {
    return MomentGraph(std::move(w), std::move(vertices));
}

MomentGraph build_quotient(const MomentGraph& g, int s) {
    const Weyl& W = g.weyl();
    Elem gs = W.simple(s);
    std::set<Elem> seen;
    for (const Elem& v : g.vertices()) {
        Elem vs = W.mul(v, gs);
        seen.insert(W.length(v) <= W.length(vs) ? v : vs);
    }
    std::vector<std::pair<std::pair<long, std::string>, Elem>> keyed;
    for (const Elem& v : seen) keyed.push_back({{W.length(v), W.word_str(v)}, v});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Elem> reps;
    for (auto& [k, v] : keyed) reps.push_back(v);
    // Cosets are joined by an edge per reflection t with t.xbar = ybar; a
    // pair of cosets can be joined by two parallel edges.
    std::vector<GraphEdge> edges;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(reps.size()); ++j) {
            for (const Elem& target : {reps[j], W.mul(reps[j], gs)}) {
                auto lab = W.reflection_of_edge(reps[i], target);
                if (lab) edges.push_back(GraphEdge{i, j, *lab});
            }
        }
    return MomentGraph(g.weyl_ptr(), std::move(reps), std::move(edges), true);
}

Poly label_form(const MomentGraph& g, const AffineRoot& label, const Field& F) {
    AffineWeight w = g.weyl().datum().affine_root_value(label);
    std::vector<long> coords = w.coords();
    Poly p = Poly::linear(coords, F);
    require(!p.is_zero(), "edge label vanishes over " + F.str() + " (GKM failure)");
    return p;
}

bool ZElement::operator==(const ZElement& o) const {
    if (z.size() != o.z.size()) return false;
    for (size_t i = 0; i < z.size(); ++i)
        if (!z[i].eq(o.z[i])) return false;
    return true;
}

bool z_membership(const ZElement& z, const MomentGraph& g, const Field& F) {
    require(static_cast<int>(z.z.size()) == g.num_vertices(), "tuple size mismatch");
    for (const GraphEdge& e : g.edges()) {
        Poly diff = z.z[e.u].sub(z.z[e.v], F);
        if (diff.is_zero()) continue;
        if (!diff.divisible_by(label_form(g, e.label, F), F)) return false;
    }
    return true;
}

ZElement z_zero(const MomentGraph& g) {
    ZElement z;
    int nv = g.weyl().rank() + 1;
    z.z.assign(g.num_vertices(), Poly(nv));
    return z;
}

ZElement z_constant(const MomentGraph& g, const Poly& p) {
    ZElement z;
    z.z.assign(g.num_vertices(), p);
    return z;
}

ZElement z_add(const MomentGraph& g, const ZElement& a, const ZElement& b, const Field& F) {
    ZElement r = z_zero(g);
    for (int i = 0; i < g.num_vertices(); ++i) r.z[i] = a.z[i].add(b.z[i], F);
    return r;
}

ZElement z_mul(const MomentGraph& g, const ZElement& a, const ZElement& b, const Field& F) {
    ZElement r = z_zero(g);
    for (int i = 0; i < g.num_vertices(); ++i) r.z[i] = a.z[i].mul(b.z[i], F);
    return r;
}

ZElement c_lambda(const AffineWeight& lam, const MomentGraph& g, const Field& F) {
    ZElement z = z_zero(g);
    for (int i = 0; i < g.num_vertices(); ++i) {
        AffineWeight img = g.weyl().act_dual(g.vertex(i), lam);
        z.z[i] = Poly::linear(img.coords(), F);
    }
    return z;
}

ZElement dinz_element(int beta_index, const Elem& w, const MomentGraph& g, const Field& F) {
    require(F.characteristic() != 2, "dinz element needs 2 invertible");
    const Weyl& W = g.weyl();
    AffineWeight beta = W.datum().root_weight(beta_index);
    AffineWeight wib = W.act_dual(W.inv(w), beta);
    // coordinates (beta - x(w^{-1} beta))/2, so the w-coordinate vanishes
    ZElement c = c_lambda(wib, g, F);
    ZElement z = z_zero(g);
    Num half = F.div(F.from_long(1), F.from_long(2));
    Poly bpoly = Poly::linear(beta.coords(), F);
    for (int i = 0; i < g.num_vertices(); ++i)
        z.z[i] = bpoly.sub(c.z[i], F).scale(half, F);
    return z;
}

ZElement sigma_t(const ZElement& z, const MomentGraph& g, const Elem& t) {
    ZElement r = z;
    const Weyl& W = g.weyl();
    for (int i = 0; i < g.num_vertices(); ++i) {
        int j = g.vertex_index(W.mul(g.vertex(i), t));
        require(j >= 0, "vertex set is not stable under right multiplication by t");
        r.z[i] = z.z[j];
    }
    return r;
}

std::pair<ZElement, ZElement> sigma_decompose(const ZElement& z, const MomentGraph& g,
                                              const Elem& t, const Field& F) {
    require(F.characteristic() != 2, "sigma decomposition needs 2 invertible");
    auto refl = g.weyl().as_reflection(t);
    require(refl.has_value(), "t must be a reflection");
    AffineRoot alpha_t =
        g.weyl().datum().normalize_label(AffineRoot{refl->first + 1, -refl->second});
    ZElement zt = sigma_t(z, g, t);
    Num half = F.div(F.from_long(1), F.from_long(2));
    ZElement plus = z_zero(g), anti = z_zero(g);
    for (int i = 0; i < g.num_vertices(); ++i) {
        plus.z[i] = z.z[i].add(zt.z[i], F).scale(half, F);
        anti.z[i] = z.z[i].sub(zt.z[i], F).scale(half, F);
    }
    // anti = c(alpha_t) * prime, with exact division coordinatewise.
    ZElement calpha = c_lambda(g.weyl().datum().affine_root_value(alpha_t), g, F);
    ZElement prime = z_zero(g);
    for (int i = 0; i < g.num_vertices(); ++i) {
        if (anti.z[i].is_zero()) continue;
        require(!calpha.z[i].is_zero(),
                "c(alpha_t) vanishes at a vertex; not divisible (GKM failure)");
        prime.z[i] = anti.z[i].divide_exact(calpha.z[i], F);
    }
    return {plus, prime};
}

// Independence is measured in the affine root lattice (simple-root
// coordinates plus delta); over the full weight lattice the statement fails
// at the boundary p = h when p divides the index of the root lattice.
static Vec root_lattice_coords(const RootDatum& rd, const AffineRoot& ar) {
    int idx = std::abs(ar.root) - 1;
    int sign = ar.root > 0 ? 1 : -1;
    Vec v = rd.root(idx).simple;
    for (long& c : v) c *= sign;
    v.push_back(ar.delta);
    return v;
}

std::vector<GkmViolation> gkm_check(const MomentGraph& g, const Field& F) {
    std::vector<GkmViolation> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.edges_at(v);
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b) {
                Vec c1 = root_lattice_coords(g.weyl().datum(), g.edges()[inc[a]].label);
                Vec c2 = root_lattice_coords(g.weyl().datum(), g.edges()[inc[b]].label);
                Matrix m(2, static_cast<int>(c1.size()));
                for (size_t j = 0; j < c1.size(); ++j) {
                    m.at(0, static_cast<int>(j)) = F.from_long(c1[j]);
                    m.at(1, static_cast<int>(j)) = F.from_long(c2[j]);
                }
                if (m.rank(F) < 2) out.push_back({v, inc[a], inc[b]});
            }
    }
    return out;
}

std::set<long> gkm_prime_set(const MomentGraph& g) {
    std::set<long> primes;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.edges_at(v);
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b) {
                Vec c1 = root_lattice_coords(g.weyl().datum(), g.edges()[inc[a]].label);
                Vec c2 = root_lattice_coords(g.weyl().datum(), g.edges()[inc[b]].label);
                // gcd of all 2x2 minors; a prime violates iff it divides it
                long gcd = 0;
                for (size_t i = 0; i < c1.size(); ++i)
                    for (size_t j = i + 1; j < c1.size(); ++j) {
                        long minor = c1[i] * c2[j] - c1[j] * c2[i];
                        gcd = std::gcd(gcd, std::abs(minor));
                    }
                require(gcd != 0, "parallel labels at a common vertex");
                for (long p = 2; p * p <= gcd; ++p)
                    while (gcd % p == 0) {
                        primes.insert(p);
                        gcd /= p;
                    }
                if (gcd > 1) primes.insert(gcd);
            }
    }
    return primes;
}

}  // namespace momgra
