#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "momgra/ajs.hpp"
#include "momgra/bm.hpp"
#include "momgra/gsheaf.hpp"
#include "momgra/hecke.hpp"
#include "momgra/jobs.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        default: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = to_py(it.value());
            return out;
        }
    }
}

py::object run(const momgra::JobSpec& job) {
    momgra::JobResult r = momgra::run_job(job);
    py::dict out;
    out["status"] = r.status;
    std::string text = r.output;
    try {
        out["data"] = to_py(json::parse(text));
    } catch (...) {
        out["data"] = py::str(text);
    }
    return out;
}

momgra::JobSpec base_job(const std::string& command, const std::string& type) {
    momgra::JobSpec j;
    j.command = command;
    j.type = type;
    return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact affine moment-graph computations";

    m.def("describe", [](const std::string& type) { return run(base_job("describe", type)); });

    m.def(
        "kl",
        [](const std::string& type, const std::string& x, const std::string& y) {
            momgra::RootDatum rd = momgra::RootDatum::build(type);
            momgra::Weyl W(rd);
            momgra::Hecke H(W);
            return H.kl_poly(W.parse_word(x), W.parse_word(y)).str();
        },
        py::arg("type"), py::arg("x"), py::arg("y"));

    m.def(
        "bott_samelson",
        [](const std::string& type, const std::string& word) {
            auto j = base_job("bs", type);
            j.word = word;
            return run(j);
        },
        py::arg("type"), py::arg("word"));

    m.def(
        "bott_samelson_sheaf",
        [](const std::string& type, const std::string& word) {
            auto W = std::make_shared<momgra::Weyl>(momgra::RootDatum::build(type));
            std::vector<int> letters;
            for (char c : word) {
                if (c == ',' || c == ' ') continue;
                letters.push_back(c - '0');
            }
            momgra::MGSheaf s =
                momgra::bott_samelson_sheaf(W, letters, momgra::Field::rationals());
            return to_py(json::parse(momgra::sheaf_json_dump(s)));
        },
        py::arg("type"), py::arg("word"));

    m.def(
        "graph",
        [](const std::string& type, const std::string& ideal) {
            auto j = base_job("graph", type);
            j.ideal = ideal;
            return run(j);
        },
        py::arg("type"), py::arg("ideal"));

    m.def(
        "gkm_primes",
        [](const std::string& type, const std::string& ideal) {
            auto j = base_job("gkm", type);
            j.ideal = ideal;
            return run(j);
        },
        py::arg("type"), py::arg("ideal"));

    m.def(
        "bm",
        [](const std::string& type, const std::string& w, const std::string& field, long p) {
            auto j = base_job("bm", type);
            j.w = w;
            j.field = field;
            j.p = p;
            return run(j);
        },
        py::arg("type"), py::arg("w"), py::arg("field") = "Q", py::arg("p") = 0);

    m.def(
        "verify",
        [](const std::string& type, long lmax, const std::string& field, long p) {
            auto j = base_job("verify", type);
            j.lmax = lmax;
            j.field = field;
            j.p = p;
            return run(j);
        },
        py::arg("type"), py::arg("lmax"), py::arg("field") = "Q", py::arg("p") = 0);

    m.def(
        "scan",
        [](const std::string& type, const std::string& w, const std::vector<long>& primes,
           int jobs) {
            auto j = base_job("scan", type);
            j.w = w;
            j.primes = primes;
            j.jobs = jobs;
            return run(j);
        },
        py::arg("type"), py::arg("w"), py::arg("primes"), py::arg("jobs") = 1);

    m.def(
        "bound_u",
        [](const std::string& type, const std::string& word) {
            auto j = base_job("bound", type);
            j.word = word;
            return run(j);
        },
        py::arg("type"), py::arg("word"));

    m.def(
        "ajs_track",
        [](const std::string& type, const std::string& word) {
            auto j = base_job("ajs-track", type);
            j.word = word;
            return run(j);
        },
        py::arg("type"), py::arg("word"));

    m.def("run_job", [](const py::dict& kw) {
        momgra::JobSpec j;
        auto get = [&](const char* key, auto& slot) {
            if (kw.contains(key)) slot = py::cast<std::decay_t<decltype(slot)>>(kw[key]);
        };
        get("command", j.command);
        get("type", j.type);
        get("x", j.x);
        get("y", j.y);
        get("w", j.w);
        get("word", j.word);
        get("ideal", j.ideal);
        get("field", j.field);
        get("p", j.p);
        get("primes", j.primes);
        get("lmax", j.lmax);
        get("cutoff", j.cutoff);
        get("jobs", j.jobs);
        get("format", j.format);
        return run(j);
    });
}
