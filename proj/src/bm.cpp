#include "momgra/bm.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

namespace momgra {

namespace {

// Degreewise span of a submodule of a product of edge-ring modules, grown
// from explicit generators; used to extract minimal generators of the image
// module at a vertex.
class ModuleSpan {
public:
    ModuleSpan(std::vector<ModuleRef> targets, const Field& F)
        : targets_(std::move(targets)), F_(F) {
        nv_ = targets_.empty() ? 0 : targets_[0].ring.nvars;
    }

    // A vector is one polyvec per target block.
    using Vecs = std::vector<std::vector<Poly>>;

    bool contains_at(const Vecs& v, int degree) {
        ensure(degree);
        auto& [span, basis] = levels_.at(degree);
        return span.contains(coords(v, degree), F_);
    }

    void add_gen(const Vecs& v, int degree) {
        gens_.push_back({degree, v});
        ensure(degree);
        auto& [span, basis] = levels_.at(degree);
        if (span.add(coords(v, degree), F_)) basis.push_back(v);
    }

private:
    struct Level {
        SpanBasis span;
        std::vector<Vecs> basis;  // polyvecs matching the accepted rows
        Level(int dim) : span(dim) {}
    };

    int dim_at(int degree) {
        int total = 0;
        for (auto& t : targets_)
            for (int d : t.mod.degs) total += t.ring.monomial_count(degree - d);
        return total;
    }

    std::vector<Num> coords(const Vecs& v, int degree) {
        std::vector<Num> out;
        for (size_t ti = 0; ti < targets_.size(); ++ti) {
            const ModuleRef& t = targets_[ti];
            for (int j = 0; j < t.mod.rank(); ++j) {
                int rest = degree - t.mod.degs[j];
                if (rest < 0 || rest % 2 != 0) {
                    require(v[ti][j].is_zero(), "component outside the graded piece");
                    continue;
                }
                for (const Mono& m :
                     monomials_of_degree(t.ring.nvars, t.ring.free_vars, rest / 2))
                    out.push_back(v[ti][j].coeff(m));
            }
        }
        return out;
    }

    void ensure(int degree) {
        for (int d = built_ + 1; d <= degree; ++d) {
            levels_.emplace(d, Level(dim_at(d)));
            auto prev = levels_.find(d - 2);
            auto& [span, basis] = levels_.at(d);
            if (prev != levels_.end()) {
                for (const Vecs& b : prev->second.basis)
                    for (int var = 0; var < nv_; ++var) {
                        Vecs mult;
                        Poly vp = Poly::variable(nv_, var);
                        for (size_t ti = 0; ti < targets_.size(); ++ti) {
                            std::vector<Poly> col;
                            for (const Poly& p : b[ti])
                                col.push_back(targets_[ti].ring.reduce(p.mul(vp, F_), F_));
                            mult.push_back(std::move(col));
                        }
                        if (span.add(coords(mult, d), F_)) basis.push_back(std::move(mult));
                    }
            }
            for (auto& [gd, gv] : gens_)
                if (gd == d && span.add(coords(gv, d), F_)) basis.push_back(gv);
        }
        built_ = std::max(built_, degree);
    }

    std::vector<ModuleRef> targets_;
    Field F_;
    int nv_ = 0;
    int built_ = -1000000;
    std::map<int, Level> levels_;
    std::vector<std::pair<int, Vecs>> gens_;

public:
    void init_floor(int degree) { built_ = degree - 1; }
};

}  // namespace

MGSheaf bm_sheaf(std::shared_ptr<const Weyl> w, const Elem& top, const Field& F,
                 const BMOptions& opt) {
    MomentGraph graph = build_graph_ideal(w, top);
    auto gptr = std::make_shared<MomentGraph>(graph);
    auto viol = gkm_check(*gptr, F);
    if (!viol.empty())
        throw GkmError("(G_{<=w}, " + F.str() + ") is not a GKM pair (" +
                       std::to_string(viol.size()) + " violating pairs)");

    const int n = gptr->num_vertices();
    const int nv = w->rank() + 1;
    MGSheaf s;
    s.graph = gptr;
    s.F = F;
    s.stalk.assign(n, GradedFreeModule{});
    s.edge_stalk.assign(gptr->edges().size(), GradedFreeModule{});
    s.rho_u.assign(gptr->edges().size(), PolyMap());
    s.rho_v.assign(gptr->edges().size(), PolyMap());

    // Vertices in canonical order are already sorted by length; process them
    // descending. Ties are broken by name, or reversed under the flag.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = n - 1 - i;
    if (opt.reverse_ties) {
        int i = 0;
        while (i < n) {
            int j = i;
            long li = w->length(gptr->vertex(order[i]));
            while (j < n && w->length(gptr->vertex(order[j])) == li) ++j;
            std::reverse(order.begin() + i, order.begin() + j);
            i = j;
        }
    }

    auto upper_of = [&](int e) { return gptr->edges()[e].v; };  // longer endpoint

    for (int x : order) {
        // up-edges within the ideal
        std::vector<int> delta_edges;
        for (int e : gptr->edges_at(x))
            if (upper_of(e) != x) delta_edges.push_back(e);
        std::sort(delta_edges.begin(), delta_edges.end());
        if (delta_edges.empty()) {
            // the top vertex
            s.stalk[x] = GradedFreeModule::free({0});
            continue;
        }
        // install the up-edge stalks B^E = B^y / label with the projection
        std::vector<ModuleRef> targets;
        for (int e : delta_edges) {
            int y = upper_of(e);
            s.edge_stalk[e] = s.stalk[y];
            s.rho_v[e] = PolyMap::projection(s.stalk[y].rank(), nv);
            targets.push_back(s.edge_ref(e));
        }
        // sections over the open set above x
        std::vector<int> upset;
        for (int y = 0; y < n; ++y)
            if (y != x && gptr->bruhat_leq(x, y)) upset.push_back(y);
        SectionSpace sp = sections(s, upset, opt.cutoff);

        // candidates: the projections of the section generators
        ModuleSpan span(targets, F);
        if (!sp.gens.empty()) span.init_floor(sp.gens.front().degree);
        std::vector<std::pair<int, ModuleSpan::Vecs>> cands;
        for (const SectionGen& g : sp.gens) {
            ModuleSpan::Vecs v;
            for (size_t ti = 0; ti < delta_edges.size(); ++ti) {
                int e = delta_edges[ti];
                int y = upper_of(e);
                std::vector<Poly> my = g.at.count(y)
                                           ? g.at.at(y)
                                           : std::vector<Poly>(s.stalk[y].rank(), Poly(nv));
                v.push_back(s.rho_v[e].apply(my, targets[ti].ring, F));
            }
            cands.push_back({g.degree, std::move(v)});
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (opt.reverse_ties) {
            size_t i = 0;
            while (i < cands.size()) {
                size_t j = i;
                while (j < cands.size() && cands[j].first == cands[i].first) ++j;
                std::reverse(cands.begin() + i, cands.begin() + j);
                i = j;
            }
        }
        std::vector<int> degs;
        std::vector<ModuleSpan::Vecs> chosen;
        for (auto& [deg, v] : cands) {
            if (span.contains_at(v, deg)) continue;
            span.add_gen(v, deg);
            degs.push_back(deg);
            chosen.push_back(v);
        }
        s.stalk[x] = GradedFreeModule::free(degs);
        // rho_{x,delta x}: generators map to the chosen generators
        for (size_t ti = 0; ti < delta_edges.size(); ++ti) {
            int e = delta_edges[ti];
            PolyMap pm = PolyMap::zero(s.edge_stalk[e].rank(), static_cast<int>(degs.size()), nv);
            for (size_t j = 0; j < chosen.size(); ++j)
                for (int i = 0; i < s.edge_stalk[e].rank(); ++i) pm.a[i][j] = chosen[j][ti][i];
            s.rho_u[e] = pm;  // x is the shorter endpoint
        }
    }
    s.validate();
    return s;
}

void check_bm_properties(const MGSheaf& s) {
    const MomentGraph& g = *s.graph;
    const Field& F = s.F;
    const int nv = s.nvars();
    // (1) rank-one top stalk in degree 0
    int top = g.num_vertices() - 1;
    require(s.stalk[top].degs == std::vector<int>{0}, "top stalk is not S in degree 0");
    // (2) each edge stalk is the upper stalk modulo the label, with the
    // canonical projection on the upper side
    for (size_t e = 0; e < g.edges().size(); ++e) {
        require(s.edge_stalk[e] == s.stalk[g.edges()[e].v], "edge stalk mismatch");
        PolyMap proj = PolyMap::projection(s.stalk[g.edges()[e].v].rank(), nv);
        RingSpec ring = s.edge_ring(static_cast<int>(e));
        for (size_t i = 0; i < proj.a.size(); ++i)
            for (size_t j = 0; j < proj.a.size(); ++j) {
                Poly diff = ring.reduce(s.rho_v[e].a[i][j].sub(proj.a[i][j], F), F);
                require(diff.is_zero(), "upper restriction is not the projection");
            }
    }
    // (3) rho_{x,delta x} maps generators to minimal generators: no chosen
    // generator lies in the span of the others plus S_+ times the image.
    for (int x = 0; x + 1 < g.num_vertices(); ++x) {
        std::vector<int> delta_edges;
        for (int e : g.edges_at(x))
            if (g.edges()[e].v != x) delta_edges.push_back(e);
        std::sort(delta_edges.begin(), delta_edges.end());
        if (delta_edges.empty()) continue;
        std::vector<ModuleRef> targets;
        for (int e : delta_edges) targets.push_back(s.edge_ref(e));
        for (int omit = 0; omit < s.stalk[x].rank(); ++omit) {
            ModuleSpan span(targets, F);
            span.init_floor(s.stalk[x].degs.empty() ? 0 : s.stalk[x].degs.front());
            for (int j = 0; j < s.stalk[x].rank(); ++j) {
                if (j == omit) continue;
                ModuleSpan::Vecs v;
                for (size_t ti = 0; ti < delta_edges.size(); ++ti) {
                    std::vector<Poly> col;
                    for (size_t i = 0; i < s.rho_u[delta_edges[ti]].a.size(); ++i)
                        col.push_back(s.rho_u[delta_edges[ti]].a[i][j]);
                    v.push_back(col);
                }
                span.add_gen(v, s.stalk[x].degs[j]);
            }
            ModuleSpan::Vecs v;
            for (size_t ti = 0; ti < delta_edges.size(); ++ti) {
                std::vector<Poly> col;
                for (size_t i = 0; i < s.rho_u[delta_edges[ti]].a.size(); ++i)
                    col.push_back(s.rho_u[delta_edges[ti]].a[i][omit]);
                v.push_back(col);
            }
            require(!span.contains_at(v, s.stalk[x].degs[omit]),
                    "a stalk generator is redundant in the image module");
        }
    }
}

BMResult verify_conjecture(std::shared_ptr<const Weyl> w, const Elem& top, const Field& F,
                           const BMOptions& opt) {
    BMResult r;
    r.sheaf = bm_sheaf(w, top, F, opt);
    r.field = F;
    r.w = w->word_str(top);
    Hecke H(*w);
    HeckeElem kl = H.kl_element(top);
    for (int v = 0; v < r.sheaf.graph->num_vertices(); ++v) {
        BMRow row;
        row.vertex = r.sheaf.graph->vertex_name(v);
        row.rank = r.sheaf.stalk[v].rank();
        row.degrees = r.sheaf.stalk[v].degs;
        LaurentPoly h = kl.coeff(r.sheaf.graph->vertex(v));
        row.kl_at_one = h.eval_one();
        row.kl = h.str();
        row.graded_rank = r.sheaf.stalk[v].graded_rank().str();
        row.match = (row.rank == row.kl_at_one);
        if (!row.match) r.match = false;
        r.table.push_back(std::move(row));
    }
    return r;
}

std::vector<Elem> smooth_locus(const MGSheaf& s) {
    std::vector<Elem> out;
    for (int v = 0; v < s.graph->num_vertices(); ++v)
        if (s.stalk[v].rank() == 1) out.push_back(s.graph->vertex(v));
    return out;
}

bool check_mone(const BMResult& r) {
    for (const BMRow& row : r.table)
        if ((row.rank == 1) != (row.kl_at_one == 1)) return false;
    return true;
}

std::map<long, PrimeScanEntry> prime_scan(std::shared_ptr<const Weyl> w, const Elem& top,
                                          const std::vector<long>& primes, int jobs,
                                          const BMOptions& opt) {
    std::map<std::string, int> rational;
    {
        MGSheaf s = bm_sheaf(w, top, Field::rationals(), opt);
        rational = s.stalk_ranks();
    }
    std::set<long> bad_primes;
    {
        MomentGraph g = build_graph_ideal(w, top);
        bad_primes = gkm_prime_set(g);
    }
    std::vector<long> ps = primes;
    std::map<long, PrimeScanEntry> out;
    std::mutex out_mu;
    auto work = [&](long p) {
        PrimeScanEntry entry;
        try {
            if (bad_primes.count(p)) {
                entry.gkm_rejected = true;
                entry.error = "GKM violation at p=" + std::to_string(p);
            } else {
                Field F = Field::prime(p);
                MGSheaf s = bm_sheaf(w, top, F, opt);
                entry.ran = true;
                entry.ranks = s.stalk_ranks();
                entry.matches_rational = (entry.ranks == rational);
            }
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        std::lock_guard<std::mutex> lk(out_mu);
        out[p] = std::move(entry);
    };
    if (jobs <= 1) {
        for (long p : ps) work(p);
    } else {
        std::vector<std::thread> pool;
        std::mutex idx_mu;
        size_t next = 0;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                while (true) {
                    size_t i;
                    {
                        std::lock_guard<std::mutex> lk(idx_mu);
                        if (next >= ps.size()) return;
                        i = next++;
                    }
                    work(ps[i]);
                }
            });
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace momgra
