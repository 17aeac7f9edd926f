#ifndef MOMGRA_STRUCTURE_HPP
#define MOMGRA_STRUCTURE_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "momgra/poly.hpp"
#include "momgra/weyl.hpp"

namespace momgra {

struct GraphEdge {
    int u = 0, v = 0;          // vertex indices, u < v in the vertex ordering
    AffineRoot label;          // normalized positive affine root
};

// Finite full subgraph of the Bruhat graph: a vertex set closed under
// nothing in particular, edges wherever a reflection connects two vertices,
// labels normalized, Bruhat order restricted to the vertex set.
class MomentGraph {
public:
    MomentGraph(std::shared_ptr<const Weyl> w, std::vector<Elem> vertices);
    // Explicit edge list (for quotient graphs, where edges join cosets and
    // parallel edges can occur). Edge endpoints refer to the vertex order
    // AFTER canonical sorting; use the factory below instead.
    MomentGraph(std::shared_ptr<const Weyl> w, std::vector<Elem> vertices,
                std::vector<GraphEdge> edges, bool presorted);

    const Weyl& weyl() const { return *W_; }
    std::shared_ptr<const Weyl> weyl_ptr() const { return W_; }
    int num_vertices() const { return static_cast<int>(verts_.size()); }
    const Elem& vertex(int i) const { return verts_[i]; }
    const std::vector<Elem>& vertices() const { return verts_; }
    int vertex_index(const Elem& w) const;  // -1 when absent
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::vector<int>& edges_at(int v) const { return incidence_[v]; }
    const std::string& vertex_name(int i) const { return names_[i]; }

    bool bruhat_leq(int i, int j) const { return W_->bruhat_leq(verts_[i], verts_[j]); }

    std::string dot() const;

private:
    std::shared_ptr<const Weyl> W_;
    std::vector<Elem> verts_;
    std::vector<std::string> names_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<int>> incidence_;
};

MomentGraph build_graph_ideal(std::shared_ptr<const Weyl> w, const Elem& top);
MomentGraph build_graph_circ(std::shared_ptr<const Weyl> w);
MomentGraph build_graph(std::shared_ptr<const Weyl> w, std::vector<Elem> vertices);

// Quotient by {1,s}: vertices are cosets (named by minimal representatives),
// one edge per reflection connecting two cosets. Parallel edges can occur.
MomentGraph build_quotient(const MomentGraph& g, int s);

// Tuple of polynomials in S(X-hat), one per vertex.
struct ZElement {
    std::vector<Poly> z;  // indexed like the graph vertices

    bool operator==(const ZElement& o) const;
};

Poly label_form(const MomentGraph& g, const AffineRoot& label, const Field& F);

bool z_membership(const ZElement& z, const MomentGraph& g, const Field& F);
ZElement z_zero(const MomentGraph& g);
ZElement z_constant(const MomentGraph& g, const Poly& p);
ZElement z_add(const MomentGraph& g, const ZElement& a, const ZElement& b, const Field& F);
ZElement z_mul(const MomentGraph& g, const ZElement& a, const ZElement& b, const Field& F);

// c(lambda)_x = x(lambda), always a member of Z(Omega).
ZElement c_lambda(const AffineWeight& lam, const MomentGraph& g, const Field& F);

// The degree-2 element of Lemma dinZ: (beta*1 + c(w^{-1} beta))/2.
ZElement dinz_element(int beta_index, const Elem& w, const MomentGraph& g, const Field& F);

// sigma_t-invariant decomposition z = z_plus + c(alpha_t) z_prime, both parts
// sigma_t-invariant. The vertex set must be stable under right mult by t.
std::pair<ZElement, ZElement> sigma_decompose(const ZElement& z, const MomentGraph& g,
                                              const Elem& t, const Field& F);
ZElement sigma_t(const ZElement& z, const MomentGraph& g, const Elem& t);

struct GkmViolation {
    int vertex;
    int edge1, edge2;
};

// Violating triples over the given field (empty iff the pair is GKM).
std::vector<GkmViolation> gkm_check(const MomentGraph& g, const Field& F);
// Exactly the primes p for which some vertex has two F_p-dependent labels.
std::set<long> gkm_prime_set(const MomentGraph& g);

}  // namespace momgra

#endif
