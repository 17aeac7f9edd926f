#include <doctest.h>

#include <json.hpp>

#include "momgra/hecke.hpp"
#include "momgra/jobs.hpp"
#include "momgra/laurent.hpp"

using namespace momgra;
using nlohmann::json;

namespace {

JobSpec base(const std::string& cmd, const std::string& type) {
    JobSpec j;
    j.command = cmd;
    j.type = type;
    return j;
}

}  // namespace

TEST_CASE("the worked command-line examples") {
    JobSpec kl = base("kl", "A1~");
    kl.x = "";
    kl.y = "010";
    JobResult r = run_job(kl);
    CHECK(r.output == "\"v^3\"\n");
    CHECK(r.status == 0);

    JobSpec gkm = base("gkm", "A1~");
    gkm.ideal = "010";
    CHECK(run_job(gkm).output == "{\"violating_primes\":[2]}\n");

    JobSpec verify = base("verify", "A2~");
    verify.lmax = 3;
    JobResult vr = run_job(verify);
    CHECK(vr.status == 0);
    json tables = json::parse(vr.output);
    CHECK(tables.is_array());
    for (auto& t : tables) {
        CHECK(t["match"] == true);
        CHECK(t["mone"] == true);
    }
}

TEST_CASE("identical jobs produce byte-identical output") {
    for (const char* cmd : {"describe", "bm", "bound"}) {
        JobSpec j = base(cmd, "A1~");
        j.w = "010";
        j.word = "0,1";
        CHECK(run_job(j).output == run_job(j).output);
    }
    JobSpec scan = base("scan", "A1~");
    scan.w = "010";
    scan.primes = {2, 3, 5};
    std::string once = run_job(scan).output;
    scan.jobs = 3;
    CHECK(run_job(scan).output == once);
}

TEST_CASE("result schema of the stalk table") {
    JobSpec bm = base("bm", "A1~");
    bm.w = "010";
    JobResult r = run_job(bm);
    CHECK(r.status == 0);
    json out = json::parse(r.output);
    CHECK(out["w"] == "010");
    CHECK(out["field"] == "Q");
    CHECK(out["match"] == true);
    CHECK(out["stalks"].size() == 6);
    CHECK(out["kl"].size() == 6);
    for (auto& [k, v] : out["stalks"].items()) CHECK(v.is_array());
    // round trip
    CHECK(json::parse(out.dump()) == out);
}

TEST_CASE("bound output carries the exact big integer") {
    JobSpec b = base("bound", "A1~");
    b.word = "0,1";
    json out = json::parse(run_job(b).output);
    CHECK(out["U"] == "729");
    CHECK(out["N"] == 3);
    CHECK(out["r"] == 1);
    CHECK(out["d"] == 2);
    CHECK(out["l"] == 2);
    JobSpec bmin = base("bound", "A1~");
    bmin.w = "";
    json out2 = json::parse(run_job(bmin).output);
    CHECK(out2["U_min"] == "1");
}

TEST_CASE("graph export formats") {
    JobSpec g = base("graph", "A1~");
    g.ideal = "circ";
    json out = json::parse(run_job(g).output);
    CHECK(out["vertices"].size() == 2);
    CHECK(out["edges"].size() == 1);
    CHECK(out["edges"][0]["label"] == "a1");
    CHECK(json::parse(out.dump()) == out);

    g.format = "dot";
    std::string dot = run_job(g).output;
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("scan output records the gate and the comparisons") {
    JobSpec s = base("scan", "A1~");
    s.w = "010";
    s.primes = {2, 3};
    JobResult r = run_job(s);
    json out = json::parse(r.output);
    CHECK(out["primes"]["2"]["gkm_rejected"] == true);
    CHECK(out["primes"]["3"]["matches_rational"] == true);
    // a tripped gate is a nonzero exit
    CHECK(r.status == 1);
    s.primes = {3, 5};
    CHECK(run_job(s).status == 0);
}

TEST_CASE("serialized polynomials parse back") {
    for (const char* s : {"0", "1", "v", "v^3", "v^-2-1", "2*v^2+v^-1", "-v+3"}) {
        LaurentPoly p = LaurentPoly::parse(s);
        CHECK(LaurentPoly::parse(p.str()) == p);
    }
    LaurentPoly q = LaurentPoly::v_power(3) - LaurentPoly::v_power(-2, 4);
    CHECK(LaurentPoly::parse(q.str()) == q);
    // the bott-samelson JSON map uses (exponent, coefficient) pairs
    JobSpec bs = base("bs", "A1~");
    bs.word = "0,1";
    json out = json::parse(run_job(bs).output);
    CHECK(out[""].size() == 1);
    CHECK(out[""][0][0] == 2);
    CHECK(out[""][0][1] == 1);
    CHECK(out["01"][0][0] == 0);
}

TEST_CASE("ajs track command") {
    JobSpec a = base("ajs-track", "A1~");
    a.word = "0,1";
    JobResult r = run_job(a);
    CHECK(r.status == 0);
    json out = json::parse(r.output);
    CHECK(out["match"] == true);
    CHECK(out["ranks"].size() == 4);
}

TEST_CASE("unknown inputs fail loudly") {
    JobSpec bad = base("kl", "Q5~");
    bad.y = "0";
    CHECK_THROWS(run_job(bad));
    JobSpec badcmd = base("frobnicate", "A1~");
    CHECK_THROWS(run_job(badcmd));
    JobSpec badword = base("kl", "A1~");
    badword.y = "07";
    CHECK_THROWS(run_job(badword));
}

TEST_CASE("sheaf dump round trip and cutoff override") {
    JobSpec bm = base("bm", "A1~");
    bm.w = "010";
    bm.format = "sheaf";
    json out = json::parse(run_job(bm).output);
    CHECK(out["stalks"].size() == 6);
    CHECK(out["edges"].size() == 9);
    CHECK(json::parse(out.dump()) == out);
    for (auto& e : out["edges"]) {
        CHECK(e.contains("label"));
        CHECK(e.contains("rho_u"));
    }
    // a hopeless cutoff is a loud error, not a truncated answer
    JobSpec tight = base("bm", "A2~");
    tight.w = "1201";
    tight.cutoff = 0;
    CHECK_THROWS(run_job(tight));
}

TEST_CASE("graded diagnostic is reported next to the polynomial") {
    JobSpec bm = base("bm", "A2~");
    bm.w = "1201";
    json out = json::parse(run_job(bm).output);
    CHECK(out["kl_poly"][""] == "v^4+v^2");
    CHECK(out["graded_rank"].contains(""));
    CHECK(out["match"] == true);
}

TEST_CASE("hecke elements rebuild from their serialized form") {
    RootDatum rd = RootDatum::build("A1~");
    Weyl W(rd);
    Hecke H(W);
    HeckeElem b = H.bott_samelson({0, 1, 0});
    JobSpec bs = base("bs", "A1~");
    bs.word = "0,1,0";
    json out = json::parse(run_job(bs).output);
    HeckeElem rebuilt;
    for (auto& [word, pairs] : out.items()) {
        LaurentPoly p;
        for (auto& pair : pairs) p.set_coeff(pair[0], pair[1].get<std::int64_t>());
        rebuilt.add_term(W.parse_word(word), p);
    }
    CHECK(rebuilt == b);
}
