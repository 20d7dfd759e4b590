#include <catch2/catch_amalgamated.hpp>

#include <zetagraph/generate.hpp>
#include <zetagraph/walk_oracle.hpp>

using namespace zetagraph;

TEST_CASE("geodesic oracle fixtures") {
    GeodesicCensus c3 = enumerate_geodesics(Graph::cycle(3), 9);
    CHECK(c3(3) == 2);
    for (int l = 4; l <= 9; ++l) CHECK(c3(l) == 0);

    GeodesicCensus k4 = enumerate_geodesics(Graph::complete(4), 5);
    CHECK(k4(3) == 8);
    CHECK(k4(4) == 6);
    CHECK(k4(5) == 0);

    GeodesicCensus tree = enumerate_geodesics(Graph::star(5), 8);
    for (int l = 3; l <= 8; ++l) CHECK(tree(l) == 0);

    Graph h1 = g6_decode("HheadXZ"), h2 = g6_decode("Hhf@eS|");
    GeodesicCensus a = enumerate_geodesics(h1, 8), b = enumerate_geodesics(h2, 8);
    for (int l = 3; l <= 8; ++l) CHECK(a(l) == b(l));
}

TEST_CASE("oracle equals trace inversion on all graphs n <= 5, L <= 10") {
    GenOptions opt;
    opt.threads = 2;
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : generate_all(n, opt)) {
            GeodesicCensus oracle = enumerate_geodesics(g, 10);
            GeodesicCensus traces = geodesic_census_from_traces(g, 10);
            for (int l = 3; l <= 10; ++l) CHECK(oracle(l) == traces(l));
        }
    }
}

TEST_CASE("cbc oracle fixtures") {
    BartholdiCensus k2 = enumerate_closed_walks_cbc(Graph::complete(2), 6);
    CHECK(k2(2, 2) == 1);  // the only primitive class: one backtrack plus a tail
    CHECK(k2(2, 1) == 0);
    for (int l = 3; l <= 6; ++l) CHECK(k2(l, 0) == 0);

    GenOptions opt;
    for (const Graph& g : generate_all(4, opt)) {
        BartholdiCensus c = enumerate_closed_walks_cbc(g, 6);
        CHECK(c(2, 2) == g.size());
        GeodesicCensus geo = enumerate_geodesics(g, 6);
        for (int l = 3; l <= 6; ++l) CHECK(c(l, 0) == geo(l));  // bump-free classes are geodesics
    }
}

TEST_CASE("cbc oracle equals the determinant series on all graphs n <= 4, degree 6") {
    GenOptions opt;
    opt.threads = 2;
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : generate_all(n, opt)) {
            TruncSeries2 s = bartholdi_series(g, 6);
            TruncSeries2 o = census_to_series(enumerate_closed_walks_cbc(g, 6), 6);
            CHECK(s.equal_up_to(o, 6));
        }
    }
}

TEST_CASE("oracle budget trap") {
    CHECK_THROWS_AS(enumerate_geodesics(Graph::complete(6), 10, 1000), std::runtime_error);
    CHECK_THROWS_AS(enumerate_closed_walks_cbc(Graph::complete(5), 8, 1000), std::runtime_error);
    CHECK_THROWS_AS(enumerate_geodesics(Graph::complete(4), 13), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_closed_walks_cbc(Graph::complete(4), 9), std::invalid_argument);
}
