#include <doctest.h>

#include "momgra/bm.hpp"

using namespace momgra;

namespace {

std::shared_ptr<Weyl> make(const char* label) {
    return std::make_shared<Weyl>(RootDatum::build(label));
}

std::map<std::string, std::vector<int>> degree_table(const MGSheaf& s) {
    std::map<std::string, std::vector<int>> out;
    for (int v = 0; v < s.graph->num_vertices(); ++v)
        out[s.graph->vertex_name(v)] = s.stalk[v].multiset();
    return out;
}

}  // namespace

TEST_CASE("base cases of the canonical sheaf") {
    auto W = make("A1~");
    Field Q = Field::rationals();
    MGSheaf be = bm_sheaf(W, W->identity(), Q);
    CHECK(be.graph->num_vertices() == 1);
    CHECK(be.stalk[0].degs == std::vector<int>{0});

    MGSheaf bs = bm_sheaf(W, W->simple(1), Q);
    CHECK(bs.graph->num_vertices() == 2);
    for (int v = 0; v < 2; ++v) CHECK(bs.stalk[v].degs == std::vector<int>{0});
    check_bm_properties(bs);
}

TEST_CASE("the dihedral ideal is rank one everywhere") {
    auto W = make("A1~");
    BMResult r = verify_conjecture(W, W->parse_word("010"), Field::rationals());
    CHECK(r.match);
    CHECK(r.table.size() == 6);
    for (const BMRow& row : r.table) {
        CHECK(row.rank == 1);
        CHECK(row.kl_at_one == 1);
    }
    CHECK(check_mone(r));
    CHECK(smooth_locus(r.sheaf).size() == 6);
    check_bm_properties(r.sheaf);
}

TEST_CASE("stalk ranks match the self-dual basis in rank 2") {
    auto W = make("A2~");
    for (const Elem& w : W->ball(3)) {
        BMResult r = verify_conjecture(W, w, Field::rationals());
        CHECK(r.match);
        CHECK(check_mone(r));
    }
}

TEST_CASE("a genuine multiplicity-two stalk") {
    auto W = make("A2~");
    BMResult r = verify_conjecture(W, W->parse_word("1201"), Field::rationals());
    CHECK(r.match);
    bool saw_two = false;
    for (const BMRow& row : r.table)
        if (row.rank == 2) {
            saw_two = true;
            CHECK(row.kl_at_one == 2);
            CHECK(row.degrees.size() == 2);
        }
    CHECK(saw_two);
    CHECK(check_mone(r));
    check_bm_properties(r.sheaf);
}

TEST_CASE("determinism under a different tie-breaking order") {
    for (auto [label, w] : {std::make_pair("A1~", "010"), std::make_pair("A2~", "1201"),
                            std::make_pair("A2~", "0121")}) {
        auto W = make(label);
        BMOptions a, b;
        b.reverse_ties = true;
        MGSheaf sa = bm_sheaf(W, W->parse_word(w), Field::rationals(), a);
        MGSheaf sb = bm_sheaf(W, W->parse_word(w), Field::rationals(), b);
        CHECK(degree_table(sa) == degree_table(sb));
    }
}

TEST_CASE("the GKM gate rejects bad primes") {
    auto W = make("A1~");
    // the ideal over 01010 has labels alpha and 3delta-alpha at a common
    // vertex, so p = 3 violates GKM there
    MomentGraph g = build_graph_ideal(W, W->parse_word("01010"));
    std::set<long> ps = gkm_prime_set(g);
    CHECK(ps.count(3) == 1);
    CHECK_THROWS_AS(bm_sheaf(W, W->parse_word("01010"), Field::prime(3)), GkmError);
    // while p = 5 runs fine
    BMResult r5 = verify_conjecture(W, W->parse_word("01010"), Field::prime(5));
    CHECK(r5.match);
}

TEST_CASE("prime scans against the rational ranks") {
    auto W = make("A1~");
    auto scan = prime_scan(W, W->parse_word("010"), {2, 3, 5, 7});
    CHECK(scan[2].gkm_rejected);
    CHECK_FALSE(scan[2].ran);
    for (long p : {3L, 5L, 7L}) {
        CHECK(scan[p].ran);
        CHECK(scan[p].matches_rational);
    }
    // parallel workers give the same verdicts
    auto scan2 = prime_scan(W, W->parse_word("010"), {2, 3, 5, 7}, 4);
    for (long p : {2L, 3L, 5L, 7L}) {
        CHECK(scan2[p].gkm_rejected == scan[p].gkm_rejected);
        CHECK(scan2[p].ran == scan[p].ran);
        CHECK(scan2[p].ranks == scan[p].ranks);
    }
}

TEST_CASE("primes above the bound behave like the rationals") {
    auto W = make("A1~");
    Hecke H(*W);
    for (const char* word : {"0", "1", "01"}) {
        Elem w = W->parse_word(word);
        mpz_class u = H.bound_U_min(w);
        // pick a small prime above the bound and outside the bad set
        MomentGraph g = build_graph_ideal(W, w);
        std::set<long> bad = gkm_prime_set(g);
        auto is_prime = [](long n) {
            if (n < 2 || n % 2 == 0) return n == 2;
            for (long d = 3; d * d <= n; d += 2)
                if (n % d == 0) return false;
            return true;
        };
        long p = 3;
        while (mpz_class(p) <= u || bad.count(p) || !is_prime(p)) p += 2;
        auto scan = prime_scan(W, w, {p});
        CHECK(scan[p].ran);
        CHECK(scan[p].matches_rational);
    }
}

TEST_CASE("fields of characteristic two are never constructed") {
    CHECK_THROWS(Field::prime(2));
    CHECK_THROWS(Field::prime(9));
}

TEST_CASE("defining properties hold in finite characteristic") {
    auto W = make("A2~");
    MGSheaf s = bm_sheaf(W, W->parse_word("1201"), Field::prime(5));
    check_bm_properties(s);
    MGSheaf q = bm_sheaf(W, W->parse_word("1201"), Field::rationals());
    std::map<std::string, std::vector<int>> a, b;
    for (int v = 0; v < s.graph->num_vertices(); ++v) {
        a[s.graph->vertex_name(v)] = s.stalk[v].multiset();
        b[q.graph->vertex_name(v)] = q.stalk[v].multiset();
    }
    CHECK(a == b);
}
