#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <zetagraph/canon.hpp>
#include <zetagraph/generate.hpp>
#include <zetagraph/zeta.hpp>

using namespace zetagraph;

TEST_CASE("hashimoto matrix shape and row sums") {
    HashimotoMatrix k2 = hashimoto_matrix(Graph::complete(2));
    REQUIRE(k2.t.dim() == 2);
    CHECK(k2.t == IntMatrix(2));  // each oriented edge only reverses

    HashimotoMatrix c3 = hashimoto_matrix(Graph::cycle(3));
    REQUIRE(c3.t.dim() == 6);
    IntMatrix cube = c3.t * c3.t * c3.t;
    CHECK(cube.trace() == 6);

    GenOptions opt;
    for (const Graph& g : generate_all(5, opt)) {
        HashimotoMatrix h = hashimoto_matrix(g);
        for (int i = 0; i < h.t.dim(); ++i) {
            Int row = 0;
            for (int j = 0; j < h.t.dim(); ++j) row += h.t.at(i, j);
            CHECK(row == g.degree(h.oriented_edges[i].second) - 1);
        }
        CHECK(hashimoto_matrix(Graph(0)).t.dim() == 0);
    }
}

TEST_CASE("ihara reciprocal fixtures") {
    CHECK(ihara_reciprocal_bass(Graph::path(5)).r == IntPoly{1});   // forests are trivial
    CHECK((ihara_reciprocal_bass(Graph::cycle(3)).r == IntPoly{1, 0, 0, -2, 0, 0, 1}));
    IntPoly k4_expected = IntPoly{1, 0, -1}.pow(2) * IntPoly{1, -3, 2} * IntPoly{1, 1, 2}.pow(3);
    CHECK(ihara_reciprocal_bass(Graph::complete(4)).r == k4_expected);

    CHECK((ihara_reciprocal_hashimoto(Graph::complete(2)) == IntPoly{1}));
    CHECK((ihara_reciprocal_hashimoto(Graph::cycle(3)) == IntPoly{1, 0, 0, -2, 0, 0, 1}));
    CHECK(ihara_reciprocal_hashimoto(g6_decode("HheadXZ")) == ihara_reciprocal_hashimoto(g6_decode("Hhf@eS|")));

    ZetaProfile k3 = ihara_reciprocal_bass(Graph::complete(3));
    CHECK(k3.special_neg1 == 4);
    CHECK(k3.special_neg2 == 81);
}

TEST_CASE("bass = hashimoto, multiplicativity, degree and leading coefficient, exhaustive small orders") {
    GenOptions opt;
    opt.threads = 2;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : generate_all(n, opt)) {
            ZetaProfile z = ihara_reciprocal_bass(g);
            CHECK(z.r == ihara_reciprocal_hashimoto(g));
            CHECK(z.r.coeff(0) == 1);
            CHECK(std::max(z.r.degree(), 0) == 2 * z.m_dagger);
            // lead(R) = (-1)^(m-n) prod(d_i - 1) over the pruned graph
            Int lead = (z.m_dagger - z.n_dagger) % 2 ? Int(-1) : Int(1);
            PruneResult pr = prune(g);
            for (int v = 0; v < pr.graph.order(); ++v) lead *= pr.graph.degree(v) - 1;
            CHECK(z.r.lead() == lead);
        }
    }
    // multiplicativity over disjoint unions
    auto small = generate_all(4, opt);
    auto smaller = generate_all(3, opt);
    for (const Graph& a : small)
        for (const Graph& b : smaller)
            CHECK(ihara_reciprocal_bass(disjoint_union(a, b)).r ==
                  ihara_reciprocal_bass(a).r * ihara_reciprocal_bass(b).r);
}

TEST_CASE("zeta fingerprint") {
    ZetaFingerprint f = zeta_fingerprint(Graph::complete(3));
    CHECK(f.r_at_neg1() == 4);
    CHECK(f.r_at_neg2() == 81);
    CHECK(f.str() == "(3,6,4,81)");
    // bipartite md2 graphs have vanishing corrected value at -1
    for (const Graph& g : {Graph::cycle(6), Graph::cycle(4), join(Graph(3), Graph(3))}) {
        CHECK(zeta_fingerprint(g).special_neg1 == 0);
    }
    // fingerprint of a forest is trivial
    ZetaFingerprint t = zeta_fingerprint(Graph::star(5));
    CHECK((t.n_dagger == 0 && t.special_neg1 == 1 && t.special_neg2 == 1));
    // fingerprints agree with the profile's corrected specials on random graphs
    GenOptions opt;
    for (const Graph& g : generate_all(5, opt)) {
        ZetaProfile z = ihara_reciprocal_bass(g);
        ZetaFingerprint fp = zeta_fingerprint(g);
        CHECK(fp.n_dagger == z.n_dagger);
        CHECK(fp.m_dagger == z.m_dagger);
        CHECK(fp.special_neg1 == z.special_neg1);
        CHECK(fp.special_neg2 == z.special_neg2);
        CHECK(fp.r_at_neg2() == z.r.eval(Int(-2)));
        CHECK(fp.r_at_3() == z.r.eval(Int(3)));
    }
}

TEST_CASE("geodesic census from traces") {
    GeodesicCensus c3 = geodesic_census_from_traces(Graph::cycle(3), 9);
    CHECK(c3(3) == 2);
    for (int l = 4; l <= 9; ++l) CHECK(c3(l) == 0);
    CHECK(geodesic_census_from_traces(Graph::complete(4), 3)(3) == 8);
    GeodesicCensus tree = geodesic_census_from_traces(Graph::star(6), 8);
    for (int l = 3; l <= 8; ++l) CHECK(tree(l) == 0);
    // bipartite graphs have no odd classes
    GeodesicCensus c6 = geodesic_census_from_traces(Graph::cycle(6), 11);
    for (int l = 3; l <= 11; l += 2) CHECK(c6(l) == 0);
}

TEST_CASE("cycle counts from the census") {
    auto k4 = cycle_counts_from_zeta(geodesic_census_from_traces(Graph::complete(4), 5));
    CHECK(k4[0] == 4);
    CHECK(k4[1] == 3);
    CHECK(k4[2] == 0);
    auto c5 = cycle_counts_from_zeta(geodesic_census_from_traces(Graph::cycle(5), 5));
    CHECK((c5[0] == 0 && c5[1] == 0 && c5[2] == 1));
    auto k3 = cycle_counts_from_zeta(geodesic_census_from_traces(Graph::complete(3), 5));
    CHECK((k3[0] == 1 && k3[1] == 0 && k3[2] == 0));
}

TEST_CASE("structure recovered from the profile") {
    ZetaStructure c6 = structure_from_zeta(ihara_reciprocal_bass(Graph::cycle(6)));
    CHECK((c6.circuit && c6.bipartite && c6.n == 6 && c6.m == 6));
    CHECK(c6.kappa_residue_check == 0);

    ZetaStructure k4 = structure_from_zeta(ihara_reciprocal_bass(Graph::complete(4)));
    CHECK((!k4.circuit && !k4.bipartite && k4.n == 4 && k4.m == 6));
    // residue convention: lim R/(1-t)^{m-n+1} = 2^{m-n+1}(n-m) kappa
    CHECK(k4.kappa_residue_check == -256);

    CHECK_THROWS_AS(structure_from_zeta(ihara_reciprocal_bass(Graph::path(4))), std::invalid_argument);
}

TEST_CASE("residue relation across all connected md2 non-circuits with n <= 7") {
    GenOptions opt;
    opt.threads = 2;
    opt.filter = GenFilter::md2;
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : generate_all(n, opt)) {
            GraphClassification c = classify(g);
            if (!c.is_connected || c.is_circuit) continue;
            ZetaStructure s = structure_from_zeta(ihara_reciprocal_bass(g));
            long long m = g.size();
            Int expect = ipow(Int(2), static_cast<unsigned>(m - n + 1)) * Int(n - m) * spanning_tree_count(g);
            CHECK(s.kappa_residue_check == expect);
            CHECK(s.n == n);
            CHECK(s.m == m);
            CHECK(s.bipartite == c.is_bipartite);
        }
    }
}

TEST_CASE("spanning tree counts") {
    CHECK(spanning_tree_count(Graph::complete(4)) == 16);
    CHECK(spanning_tree_count(Graph::cycle(5)) == 5);
    CHECK(spanning_tree_count(Graph::complete(2)) == 1);
    CHECK_THROWS_AS(spanning_tree_count(disjoint_union(Graph::complete(2), Graph(1))), std::invalid_argument);
}

TEST_CASE("regular closed form matches the Bass route") {
    CHECK((regular_zeta_closed_form(Graph::complete(3)) == IntPoly{1, 0, 0, -2, 0, 0, 1}));
    CHECK(regular_zeta_closed_form(Graph::complete(4)) == ihara_reciprocal_bass(Graph::complete(4)).r);
    CHECK(regular_zeta_closed_form(Graph::cycle(4)) == ihara_reciprocal_bass(Graph::cycle(4)).r);
    GenOptions opt;
    for (const Graph& g : generate_all(6, opt)) {
        int d = g.order() ? g.degree(0) : 0;
        bool regular = true;
        for (int v = 0; v < g.order(); ++v) regular = regular && g.degree(v) == d;
        if (regular && d >= 2) CHECK(regular_zeta_closed_form(g) == ihara_reciprocal_bass(g).r);
    }
    CHECK_THROWS_AS(regular_zeta_closed_form(Graph::star(4)), std::invalid_argument);
    CHECK_THROWS_AS(regular_zeta_closed_form(Graph::complete(2)), std::invalid_argument);
}

TEST_CASE("phi_AD fixtures and specializations") {
    BiPoly k2 = bartholdi_phi_AD(Graph::complete(2));
    BiPoly want(2, 2);
    want.at(0, 0) = -1;
    want.at(0, 2) = 1;
    want.at(1, 1) = 2;
    want.at(2, 0) = 1;
    want.trim();
    CHECK(k2 == want);  // l^2 + 2lx + x^2 - 1

    GenOptions opt;
    opt.threads = 2;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : generate_all(n, opt)) {
            BiPoly p = bartholdi_phi_AD(g);
            CHECK(p.specialize_x(Int(0)) == charpoly(adjacency_matrix(g)));
            // x = 1: det(lI - A + D) = charpoly(A - D) = charpoly(-L)
            CHECK(p.specialize_x(Int(1)) == charpoly(adjacency_matrix(g) - degree_matrix(g)));
            // x = -1: det(lI - A - D) = charpoly(|L|)
            CHECK(p.specialize_x(Int(-1)) == charpoly(signless_laplacian(g)));
        }
    }
}

TEST_CASE("phi_AD determines the degree sequence on the n <= 7 catalogs") {
    GenOptions opt;
    opt.threads = 2;
    for (int n = 4; n <= 7; ++n) {
        std::map<std::string, DegreeSequence> seen;
        for (const Graph& g : generate_all(n, opt)) {
            std::string key = bartholdi_phi_AD(g).str();
            auto it = seen.find(key);
            if (it == seen.end())
                seen.emplace(key, degree_sequence(g));
            else
                CHECK(it->second == degree_sequence(g));
        }
    }
}

TEST_CASE("phi_ADJ fixtures, affineness, and the 9-vertex pair") {
    AffineTriPoly k2 = phi_ADJ(Graph::complete(2));
    BiPoly p1(1, 1);
    p1.at(0, 0) = 2;
    p1.at(0, 1) = 2;
    p1.at(1, 0) = 2;
    p1.trim();
    CHECK(k2.p1 == p1);

    std::mt19937_64 rng(13);
    GenOptions opt;
    auto cat = generate_all(5, opt);
    for (int t = 0; t < 20; ++t) {
        const Graph& g = cat[rng() % cat.size()];
        AffineTriPoly p = phi_ADJ(g);
        Int l = static_cast<long long>(rng() % 7) - 3, x = static_cast<long long>(rng() % 7) - 3;
        // affine in y: value at y=2 is twice the y=1 slice minus the y=0 slice
        CHECK(p.eval(l, x, Int(2)) == 2 * p.eval(l, x, Int(1)) - p.eval(l, x, Int(0)));
        // direct determinant comparison
        IntMatrix m = adjacency_matrix(g) * Int(-1) + degree_matrix(g) * x + IntMatrix::ones(g.order()) * Int(2) +
                      IntMatrix::identity(g.order()) * l;
        CHECK(p.eval(l, x, Int(2)) == det_exact(std::move(m)));
    }
    CHECK(phi_ADJ(g6_decode("HheadXZ")) == phi_ADJ(g6_decode("Hhf@eS|")));
    CHECK(!(bartholdi_phi_AD(g6_decode("K??CA?_FEcdk")) == bartholdi_phi_AD(g6_decode("K??CA?_ccWNk"))));
}

TEST_CASE("join/cone theorem for phi_ADJ-type invariants") {
    Graph g1 = g6_decode("HheadXZ"), g2 = g6_decode("Hhf@eS|");
    // forward: equal phi_ADJ propagates to cones (and to joins with K2)
    CHECK(phi_ADJ(cone(g1)) == phi_ADJ(cone(g2)));
    CHECK(phi_ADJ(join(g1, Graph::complete(2))) == phi_ADJ(join(g2, Graph::complete(2))));
    // reverse: cones of a differing pair differ
    Graph a = Graph::cycle(9), b = disjoint_union(Graph::cycle(5), Graph::cycle(4));
    CHECK(!(phi_ADJ(cone(a)) == phi_ADJ(cone(b))));
}

TEST_CASE("bartholdi series basics") {
    TruncSeries2 k1 = bartholdi_series(Graph(1), 6);
    CHECK(k1.equal_up_to(TruncSeries2::one(6), 6));
    // u = 0 section is the series of 1/R(t)
    TruncSeries2 s = bartholdi_series(Graph::complete(3), 8);
    // 1/R = 1/(1-t^3)^2 = 1 + 2t^3 + 3t^6 + ...
    CHECK(s.coeff(0, 0) == 1);
    CHECK(s.coeff(3, 0) == 2);
    CHECK(s.coeff(6, 0) == 3);
    // the t^2 u^2 coefficient counts the edges
    for (const Graph& g : {Graph::complete(2), Graph::path(3), Graph::complete(3), Graph::star(4)}) {
        TruncSeries2 z = bartholdi_series(g, 4);
        CHECK(z.coeff(2, 2) == g.size());
        CHECK(z.coeff(2, 1) == 0);
    }
    CHECK_THROWS_AS(bartholdi_series(Graph(2), 11), std::invalid_argument);
}

TEST_CASE("recover degree sequence from join observations") {
    auto observe = [](const Graph& g, std::initializer_list<Graph> hs) {
        std::vector<JoinObservation> obs;
        for (const Graph& h : hs) {
            JoinObservation ob;
            ob.h_order = h.order();
            for (int v = 0; v < h.order(); ++v) ob.h_degrees.push_back(h.degree(v));
            ob.profile = ihara_reciprocal_bass(join(g, h));
            obs.push_back(std::move(ob));
        }
        return obs;
    };

    Graph e1 = g6_decode("ECZo"), e2 = g6_decode("EEr_");
    auto obs1 = observe(e1, {Graph(1), Graph::complete(2), Graph::complete(3)});
    CHECK((recover_degree_sequence_from_joins(obs1) == DegreeSequence({4, 2, 2, 2, 2, 2})));
    auto obs2 = observe(e2, {Graph(1), Graph::complete(2), Graph::complete(3)});
    CHECK((recover_degree_sequence_from_joins(obs2) == DegreeSequence({3, 3, 3, 2, 2, 1})));

    // regular and empty graphs
    CHECK(recover_degree_sequence_from_joins(observe(Graph::cycle(5), {Graph::complete(2), Graph::complete(3)})) ==
          DegreeSequence({2, 2, 2, 2, 2}));
    CHECK(recover_degree_sequence_from_joins(observe(Graph(5), {Graph::complete(2), Graph::complete(3)})) ==
          DegreeSequence({0, 0, 0, 0, 0}));

    // mixing observations of two different graphs is inconsistent
    auto mixed = observe(e1, {Graph::complete(2)});
    auto wrong = observe(e2, {Graph::complete(3)});
    mixed.insert(mixed.end(), wrong.begin(), wrong.end());
    CHECK_THROWS_AS(recover_degree_sequence_from_joins(mixed), std::runtime_error);
    CHECK_THROWS_AS((recover_degree_sequence_from_joins(observe(e1, {Graph(1)}))), std::invalid_argument);
}
