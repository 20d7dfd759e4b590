#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <zetagraph/canon.hpp>
#include <zetagraph/generate.hpp>

using namespace zetagraph;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() % 1000) < p * 1000) g.add_edge(i, j);
    return g;
}

Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> p(g.order());
    for (int i = 0; i < g.order(); ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return g.relabeled(p);
}

bool brute_iso(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    int n = a.order();
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.edge(i, j) != b.edge(p[i], p[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("canonical form is label invariant") {
    std::mt19937_64 rng(5);
    std::vector<Graph> samples = {Graph::cycle(4), Graph::complete(5), Graph::star(6), Graph(5),
                                  g6_decode("ECZo"),  g6_decode("F?zPw")};
    for (int t = 0; t < 10; ++t) samples.push_back(random_graph(rng, 4 + static_cast<int>(rng() % 6)));
    for (const Graph& g : samples) {
        std::string canon = canonize(g, false).canonical_g6;
        for (int t = 0; t < 100; ++t) CHECK(canonize(random_relabel(rng, g), false).canonical_g6 == canon);
    }
}

TEST_CASE("is_isomorphic agrees with brute force on the full n=5 catalog") {
    GenOptions opt;
    auto cat = generate_all(5, opt);
    REQUIRE(cat.size() == 34);
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i; j < cat.size(); ++j)
            CHECK(is_isomorphic(cat[i], cat[j]) == brute_iso(cat[i], cat[j]));
}

TEST_CASE("automorphism group orders") {
    CHECK(canonical_form(Graph::cycle(5)).aut_order == 10);
    CHECK(canonical_form(Graph::complete(4)).aut_order == 24);
    CHECK(canonical_form(Graph(6)).aut_order == 720);
    CHECK(canonical_form(Graph::path(4)).aut_order == 2);
    CHECK(canonical_form(Graph::star(5)).aut_order == 24);
    CHECK(canonical_form(Graph(1)).aut_order == 1);
    // Petersen graph
    Graph pet = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK(canonical_form(pet).aut_order == 120);
}

TEST_CASE("crab and squid are non-isomorphic; complement pairing resolves to the 9-vertex pair") {
    Graph crab = g6_decode("K??CA?_FEcdk"), squid = g6_decode("K??CA?_ccWNk");
    CHECK(!is_isomorphic(crab, squid));
    CHECK(!is_isomorphic(crab, complement(squid)));  // 16 vs 50 edges
    Graph h1 = g6_decode("HheadXZ"), h2 = g6_decode("Hhf@eS|");
    CHECK(is_isomorphic(h1, complement(h2)));
}

TEST_CASE("generation matches the published totals") {
    const long long expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        GenOptions opt;
        opt.threads = 2;
        CHECK(static_cast<long long>(generate_all(n, opt).size()) == expected[n]);
    }
}

TEST_CASE("generation stream is deterministic, sorted and isomorph-free") {
    GenOptions opt;
    auto a = generate_catalog_g6(6, opt);
    opt.threads = 2;
    auto b = generate_catalog_g6(6, opt);
    CHECK(a == b);  // thread count cannot change the stream

    auto cat = generate_all(6, opt);
    for (std::size_t i = 0; i + 1 < cat.size(); ++i) {
        long long mi = cat[i].size(), mj = cat[i + 1].size();
        CHECK((mi < mj || (mi == mj && g6_encode(cat[i]) < g6_encode(cat[i + 1]))));
    }
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        std::size_t i = rng() % cat.size(), j = rng() % cat.size();
        if (i == j) continue;
        CHECK(!is_isomorphic(cat[i], cat[j]));
    }
}

TEST_CASE("generation filters") {
    GenOptions md2;
    md2.filter = GenFilter::md2;
    CHECK(generate_all(5, md2).size() == 11);
    GenOptions conn;
    conn.filter = GenFilter::connected;
    CHECK(generate_all(5, conn).size() == 21);
    GenOptions mr;
    mr.m_min = 4;
    mr.m_max = 4;
    auto cat = generate_all(5, mr);
    for (const Graph& g : cat) CHECK(g.size() == 4);
    CHECK(cat.size() == 6);  // graphs on 5 vertices with 4 edges
}

TEST_CASE("catalog file round trip") {
    GenOptions opt;
    auto cat = generate_catalog_g6(5, opt);
    std::string path = "test_catalog_tmp.g6";
    {
        std::ofstream out(path);
        for (const auto& s : cat) out << s << '\n';
    }
    auto back = read_catalog_file(path);
    REQUIRE(back.size() == cat.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(g6_encode(back[i]) == cat[i]);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_catalog_file("definitely_missing_file.g6"), std::runtime_error);
}
