#include "momgra/jobs.hpp"

#include <json.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

#include "momgra/ajs.hpp"
#include "momgra/bm.hpp"
#include "momgra/gsheaf.hpp"
#include "momgra/hecke.hpp"

namespace momgra {

using nlohmann::json;

namespace {

json laurent_json(const LaurentPoly& p) {
    json out = json::array();
    for (auto& [e, c] : p.terms()) out.push_back(json::array({e, c}));
    return out;
}

json hecke_json(const Weyl& W, const HeckeElem& h) {
    json out = json::object();
    for (auto& [x, p] : h.c) out[W.word_str(x)] = laurent_json(p);
    return out;
}

Field field_of(const JobSpec& job) {
    if (job.field == "Q" || job.field.empty()) return Field::rationals();
    require(job.field == "Fp", "unknown field tag: " + job.field);
    require(job.p > 0, "--field Fp needs --p");
    return Field::prime(job.p);
}

std::vector<int> word_of(const Weyl& W, const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
        if (c == ',' || c == ' ') continue;
        require(c >= '0' && c <= '9', "bad word character");
        int i = c - '0';
        require(i <= W.rank(), "generator index out of range");
        out.push_back(i);
    }
    return out;
}

std::vector<Elem> ideal_vertices(std::shared_ptr<const Weyl> W, const std::string& ideal) {
    if (ideal == "circ") return W->w_circ();
    return W->bruhat_ideal(W->parse_word(ideal));
}

json graph_json(const MomentGraph& g) {
    json out;
    out["vertices"] = json::array();
    for (int i = 0; i < g.num_vertices(); ++i) out["vertices"].push_back(g.vertex_name(i));
    out["edges"] = json::array();
    for (const GraphEdge& e : g.edges()) {
        json je;
        je["u"] = g.vertex_name(e.u);
        je["v"] = g.vertex_name(e.v);
        je["label"] = g.weyl().datum().affine_root_str(e.label);
        je["label_coords"] = g.weyl().datum().affine_root_value(e.label).coords();
        out["edges"].push_back(je);
    }
    return out;
}

json bm_json(const BMResult& r) {
    json out;
    out["w"] = r.w;
    out["field"] = r.field.str();
    json stalks = json::object(), kl = json::object();
    json klpoly = json::object(), graded = json::object();
    for (const BMRow& row : r.table) {
        stalks[row.vertex] = row.degrees;
        kl[row.vertex] = row.kl_at_one;
        klpoly[row.vertex] = row.kl;
        graded[row.vertex] = row.graded_rank;
    }
    out["stalks"] = stalks;
    out["kl"] = kl;
    out["kl_poly"] = klpoly;
    out["graded_rank"] = graded;
    out["match"] = r.match;
    return out;
}

std::vector<std::string> shat_var_names(int rank) {
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) names.push_back("w" + std::to_string(i + 1));
    names.push_back("d");
    return names;
}

json rho_json(const PolyMap& pm, const std::vector<std::string>& names) {
    json rows = json::array();
    for (const auto& row : pm.a) {
        json r = json::array();
        for (const Poly& p : row) r.push_back(p.str(names));
        rows.push_back(r);
    }
    return rows;
}

std::string bm_table(const BMResult& r) {
    std::ostringstream os;
    os << "w=" << r.w << " field=" << r.field.str() << "\n";
    os << "vertex\trank\th(1)\tmatch\th_{x,w}\tgraded rank\n";
    for (const BMRow& row : r.table)
        os << (row.vertex.empty() ? "e" : row.vertex) << "\t" << row.rank << "\t"
           << row.kl_at_one << "\t" << (row.match ? "yes" : "NO") << "\t" << row.kl
           << "\t" << row.graded_rank << "\n";
    return os.str();
}

}  // namespace

JobResult run_job(const JobSpec& job) {
    JobResult res;
    RootDatum rd = RootDatum::build(job.type);
    auto W = std::make_shared<Weyl>(rd);
    Field F = field_of(job);
    json out;

    if (job.command == "describe") {
        out["type"] = rd.label();
        out["rank"] = rd.rank();
        json cart = json::array();
        for (int i = 0; i < rd.rank(); ++i) {
            json row = json::array();
            for (int j = 0; j < rd.rank(); ++j) row.push_back(rd.cartan(i, j));
            cart.push_back(row);
        }
        out["cartan"] = cart;
        out["num_positive_roots"] = rd.num_positive();
        out["coxeter_number"] = rd.coxeter_number();
        out["highest_root"] = rd.root(rd.highest_root_index()).simple;
        if (rd.rank() <= 3) {
            // the box enumeration walks a length ball, feasible in low rank
            out["box_size"] = static_cast<long>(W->antifundamental_box().size());
            out["w_hat0"] = W->word_str(W->w_hat0());
            out["w_circ_size"] = static_cast<long>(W->w_circ().size());
        }
        res.output = out.dump(2) + "\n";
        return res;
    }
    if (job.command == "kl") {
        Hecke H(*W);
        Elem x = W->parse_word(job.x), y = W->parse_word(job.y);
        LaurentPoly h = H.kl_poly(x, y);
        if (job.format == "table")
            res.output = h.str() + "\n";
        else
            res.output = json(h.str()).dump() + "\n";
        return res;
    }
    if (job.command == "bs") {
        Hecke H(*W);
        HeckeElem h = H.bott_samelson(word_of(*W, job.word));
        res.output = hecke_json(*W, h).dump(2) + "\n";
        return res;
    }
    if (job.command == "graph") {
        MomentGraph g = build_graph(W, ideal_vertices(W, job.ideal.empty() ? job.w : job.ideal));
        if (job.format == "dot")
            res.output = g.dot();
        else
            res.output = graph_json(g).dump(2) + "\n";
        return res;
    }
    if (job.command == "gkm") {
        MomentGraph g = build_graph(W, ideal_vertices(W, job.ideal.empty() ? job.w : job.ideal));
        std::set<long> ps = gkm_prime_set(g);
        out["violating_primes"] = std::vector<long>(ps.begin(), ps.end());
        res.output = out.dump() + "\n";
        return res;
    }
    if (job.command == "bm") {
        BMOptions opt;
        opt.cutoff = job.cutoff;
        BMResult r = verify_conjecture(W, W->parse_word(job.w), F, opt);
        if (job.format == "table")
            res.output = bm_table(r);
        else if (job.format == "sheaf")
            res.output = sheaf_json_dump(r.sheaf);
        else
            res.output = bm_json(r).dump(2) + "\n";
        res.status = r.match ? 0 : 1;
        return res;
    }
    if (job.command == "verify") {
        BMOptions opt;
        opt.cutoff = job.cutoff;
        std::vector<Elem> ws;
        if (!job.w.empty()) {
            ws.push_back(W->parse_word(job.w));
        } else {
            require(job.lmax >= 0, "verify needs --w or --lmax");
            for (const Elem& v : W->ball(job.lmax)) ws.push_back(v);
        }
        // canonical output order regardless of worker scheduling
        std::sort(ws.begin(), ws.end(), [&](const Elem& a, const Elem& b) {
            long la = W->length(a), lb = W->length(b);
            return la != lb ? la < lb : W->word_str(a) < W->word_str(b);
        });
        std::vector<BMResult> results(ws.size());
        std::vector<std::string> errors(ws.size());
        auto work = [&](size_t i) {
            try {
                results[i] = verify_conjecture(W, ws[i], F, opt);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        };
        if (job.jobs <= 1) {
            for (size_t i = 0; i < ws.size(); ++i) work(i);
        } else {
            std::vector<std::thread> pool;
            std::mutex mu;
            size_t next = 0;
            for (int t = 0; t < job.jobs; ++t)
                pool.emplace_back([&] {
                    while (true) {
                        size_t i;
                        {
                            std::lock_guard<std::mutex> lk(mu);
                            if (next >= ws.size()) return;
                            i = next++;
                        }
                        work(i);
                    }
                });
            for (auto& t : pool) t.join();
        }
        json all = json::array();
        bool ok = true;
        std::ostringstream table;
        for (size_t i = 0; i < ws.size(); ++i) {
            if (!errors[i].empty()) {
                ok = false;
                json jr;
                jr["w"] = W->word_str(ws[i]);
                jr["error"] = errors[i];
                all.push_back(jr);
                table << "w=" << W->word_str(ws[i]) << " error: " << errors[i] << "\n";
                continue;
            }
            const BMResult& r = results[i];
            if (!r.match || !check_mone(r)) ok = false;
            json jr = bm_json(r);
            jr["mone"] = check_mone(r);
            all.push_back(jr);
            table << bm_table(r) << "\n";
        }
        res.output = job.format == "table" ? table.str() : all.dump(2) + "\n";
        res.status = ok ? 0 : 1;
        return res;
    }
    if (job.command == "scan") {
        BMOptions opt;
        opt.cutoff = job.cutoff;
        auto scan = prime_scan(W, W->parse_word(job.w), job.primes, job.jobs, opt);
        json jp = json::object();
        bool ok = true;
        for (auto& [p, entry] : scan) {
            json je;
            je["gkm_rejected"] = entry.gkm_rejected;
            je["ran"] = entry.ran;
            if (entry.ran) je["matches_rational"] = entry.matches_rational;
            if (!entry.error.empty()) je["error"] = entry.error;
            if (entry.ran) {
                json ranks = json::object();
                for (auto& [v, rk] : entry.ranks) ranks[v] = rk;
                je["ranks"] = ranks;
            }
            if (entry.gkm_rejected || !entry.error.empty() ||
                (entry.ran && !entry.matches_rational))
                ok = false;
            jp[std::to_string(p)] = je;
        }
        out["w"] = job.w;
        out["primes"] = jp;
        res.output = out.dump(2) + "\n";
        res.status = ok ? 0 : 1;
        return res;
    }
    if (job.command == "bound") {
        Hecke H(*W);
        if (!job.word.empty()) {
            std::vector<int> word = word_of(*W, job.word);
            out["word"] = job.word;
            if (!word.empty()) {
                BoundComponents bc = H.bound_components(word);
                out["r"] = bc.r;
                out["d"] = bc.d;
                out["N"] = bc.N;
                out["l"] = bc.l;
            }
            out["U"] = H.bound_U(word).get_str();
        } else {
            Elem v = W->parse_word(job.w);
            out["w"] = job.w;
            out["U_min"] = H.bound_U_min(v).get_str();
        }
        res.output = out.dump(2) + "\n";
        return res;
    }
    if (job.command == "ajs-track") {
        std::vector<int> word = word_of(*W, job.word);
        AjsObject m = ajs_track(W, word, F);
        MGSheaf s = bott_samelson_sheaf(W, word, F);
        json ranks = json::object();
        for (auto& [name, rk] : m.rank_vector()) ranks[name] = rk;
        json sranks = json::object();
        bool match = true;
        for (auto& [name, rk] : s.stalk_ranks()) {
            if (rk > 0) sranks[name] = rk;
            int ajs = m.rank_vector().count(name) ? m.rank_vector().at(name) : 0;
            if (ajs != rk) match = false;
        }
        for (auto& [name, rk] : m.rank_vector())
            if (!s.stalk_ranks().count(name) || s.stalk_ranks().at(name) != rk) match = false;
        out["word"] = job.word;
        out["ranks"] = ranks;
        out["sheaf_stalk_ranks"] = sranks;
        out["match"] = match;
        res.output = out.dump(2) + "\n";
        res.status = match ? 0 : 1;
        return res;
    }
    throw ParseError("unknown command: " + job.command);
}

std::string sheaf_json_dump(const MGSheaf& s) {
    std::vector<std::string> names = shat_var_names(s.graph->weyl().rank());
    json out;
    out["field"] = s.F.str();
    json stalks = json::object();
    for (int v = 0; v < s.graph->num_vertices(); ++v)
        stalks[s.graph->vertex_name(v)] = s.stalk[v].degs;
    out["stalks"] = stalks;
    json edges = json::array();
    for (int e = 0; e < static_cast<int>(s.graph->edges().size()); ++e) {
        const GraphEdge& ge = s.graph->edges()[e];
        json je;
        je["u"] = s.graph->vertex_name(ge.u);
        je["v"] = s.graph->vertex_name(ge.v);
        je["label"] = s.graph->weyl().datum().affine_root_str(ge.label);
        je["degrees"] = s.edge_stalk[e].degs;
        je["rho_u"] = rho_json(s.rho_u[e], names);
        je["rho_v"] = rho_json(s.rho_v[e], names);
        edges.push_back(je);
    }
    out["edges"] = edges;
    return out.dump(2) + "\n";
}

}  // namespace momgra
