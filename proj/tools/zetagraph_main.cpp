// Command-line frontend: invariants, catalogs, censuses, switching searches
// and the verification suites, over graph6 input.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <zetagraph/census.hpp>
#include <zetagraph/generate.hpp>
#include <zetagraph/switching.hpp>
#include <zetagraph/walk_oracle.hpp>
#include <zetagraph/zeta.hpp>

using namespace zetagraph;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

std::vector<Graph> graphs_from(const std::string& file, const std::vector<std::string>& inline_g6) {
    std::vector<Graph> out;
    for (const auto& s : inline_g6) out.push_back(g6_decode(s));
    if (!file.empty()) {
        if (file == "-") {
            auto more = read_catalog(std::cin);
            out.insert(out.end(), more.begin(), more.end());
        } else {
            auto more = read_catalog_file(file);
            out.insert(out.end(), more.begin(), more.end());
        }
    }
    if (out.empty()) throw std::invalid_argument("no input graphs (use positional graph6 strings, --file, or '-')");
    return out;
}

std::string series_str(const TruncSeries2& s) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i <= s.bound(); ++i) {
        if (i) os << ';';
        for (int j = 0; i + j <= s.bound(); ++j) {
            if (j) os << ',';
            os << s.coeff(i, j);
        }
    }
    os << ')';
    return os.str();
}

struct InvariantFlags {
    bool ihara = false, hashimoto = false, fingerprint = false, phi_ad = false, phi_adj = false;
    bool degrees = false, classify_flag = false, structure = false, spanning = false;
    int geodesic_len = 0, cycles_len = 0, bartholdi_deg = -1;
};

void print_invariants(std::ostream& os, const Graph& g, const InvariantFlags& f) {
    os << "graph " << g6_encode(g) << " n=" << g.order() << " m=" << g.size() << '\n';
    if (f.ihara) {
        ZetaProfile z = ihara_reciprocal_bass(g);
        os << "ihara d=" << (z.r.degree() < 0 ? 0 : z.r.degree()) << ' ' << z.r.str() << '\n';
    }
    if (f.hashimoto) {
        IntPoly r = ihara_reciprocal_hashimoto(g);
        os << "hashimoto d=" << (r.degree() < 0 ? 0 : r.degree()) << ' ' << r.str() << '\n';
    }
    if (f.fingerprint) os << "zfp " << zeta_fingerprint(g).str() << '\n';
    if (f.phi_ad) {
        BiPoly p = bartholdi_phi_AD(g);
        os << "phi_ad dl=" << p.lambda_degree() << " dx=" << p.x_degree() << ' ' << p.str() << '\n';
    }
    if (f.phi_adj) {
        AffineTriPoly p = phi_ADJ(g);
        os << "phi_adj dl=" << p.p0.lambda_degree() << " dx=" << p.p0.x_degree() << ' ' << p.str() << '\n';
    }
    if (f.geodesic_len >= 3) {
        GeodesicCensus c = geodesic_census_from_traces(g, f.geodesic_len);
        os << "geodesic L=" << f.geodesic_len << " (";
        for (int l = 3; l <= f.geodesic_len; ++l) os << (l > 3 ? "," : "") << c(l);
        os << ")\n";
    }
    if (f.cycles_len >= 3) {
        auto counts = count_short_cycles(g, f.cycles_len);
        os << "cycles L=" << f.cycles_len << " (";
        for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
        os << ")\n";
    }
    if (f.bartholdi_deg >= 0) os << "bartholdi D=" << f.bartholdi_deg << ' ' << series_str(bartholdi_series(g, f.bartholdi_deg)) << '\n';
    if (f.degrees) {
        os << "degrees (";
        auto d = degree_sequence(g);
        for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
        os << ")\n";
    }
    if (f.classify_flag) {
        GraphClassification c = classify(g);
        os << "classify md1=" << c.is_md1 << " md2=" << c.is_md2 << " connected=" << c.is_connected
           << " bipartite=" << c.is_bipartite << " circuit=" << c.is_circuit << " components=" << c.component_count
           << " bipartite_components=" << c.bipartite_component_count << '\n';
    }
    if (f.structure) {
        ZetaStructure s = structure_from_zeta(ihara_reciprocal_bass(g));
        os << "structure n=" << s.n << " m=" << s.m << " bipartite=" << s.bipartite << " circuit=" << s.circuit
           << " residue=" << s.kappa_residue_check << '\n';
    }
    if (f.spanning) os << "spanning_trees " << spanning_tree_count(g) << '\n';
}

std::string partition_witness(const SwitchingPartition& p) {
    std::ostringstream os;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (b) os << '|';
        os << 'B' << b + 1 << '=';
        for (std::size_t i = 0; i < p.blocks[b].size(); ++i) os << (i ? "," : "") << p.blocks[b][i];
    }
    return os.str();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

struct SuiteResult {
    long long checked = 0, failed = 0;
};

SuiteResult verify_bass_hashimoto(int nmax, unsigned threads) {
    SuiteResult r;
    for (int n = 1; n <= nmax; ++n) {
        GenOptions go;
        go.threads = threads;
        auto cat = generate_all(n, go);
        std::vector<char> ok(cat.size(), 1);
        parallel_for(cat.size(), threads, [&](std::size_t i) {
            ok[i] = ihara_reciprocal_bass(cat[i]).r == ihara_reciprocal_hashimoto(cat[i]);
        });
        for (std::size_t i = 0; i < cat.size(); ++i) {
            ++r.checked;
            if (!ok[i]) {
                ++r.failed;
                std::cerr << "bass != hashimoto for " << g6_encode(cat[i]) << '\n';
            }
        }
    }
    return r;
}

SuiteResult verify_oracle(int nmax, int len, unsigned threads) {
    SuiteResult r;
    for (int n = 3; n <= nmax; ++n) {
        GenOptions go;
        go.threads = threads;
        auto cat = generate_all(n, go);
        std::vector<char> ok(cat.size(), 1);
        parallel_for(cat.size(), threads, [&](std::size_t i) {
            GeodesicCensus a = enumerate_geodesics(cat[i], len);
            GeodesicCensus b = geodesic_census_from_traces(cat[i], len);
            for (int l = 3; l <= len; ++l)
                if (a(l) != b(l)) ok[i] = 0;
        });
        for (std::size_t i = 0; i < cat.size(); ++i) {
            ++r.checked;
            if (!ok[i]) {
                ++r.failed;
                std::cerr << "geodesic oracle mismatch for " << g6_encode(cat[i]) << '\n';
            }
        }
    }
    return r;
}

SuiteResult verify_cbc(int nmax, int deg, unsigned threads) {
    SuiteResult r;
    for (int n = 1; n <= nmax; ++n) {
        GenOptions go;
        go.threads = threads;
        auto cat = generate_all(n, go);
        std::vector<char> ok(cat.size(), 1);
        parallel_for(cat.size(), threads, [&](std::size_t i) {
            TruncSeries2 s = bartholdi_series(cat[i], deg);
            TruncSeries2 o = census_to_series(enumerate_closed_walks_cbc(cat[i], std::min(deg, 8)), deg);
            if (!s.equal_up_to(o, deg)) ok[i] = 0;
        });
        for (std::size_t i = 0; i < cat.size(); ++i) {
            ++r.checked;
            if (!ok[i]) {
                ++r.failed;
                std::cerr << "bartholdi series mismatch for " << g6_encode(cat[i]) << '\n';
            }
        }
    }
    return r;
}

SuiteResult verify_paper_examples() {
    SuiteResult r;
    auto check = [&](bool cond, const std::string& what) {
        ++r.checked;
        if (!cond) {
            ++r.failed;
            std::cerr << "fixture failed: " << what << '\n';
        }
    };

    check(ihara_reciprocal_bass(Graph::complete(3)).r == IntPoly{1, 0, 0, -2, 0, 0, 1}, "R(K3) = (1-t^3)^2");
    Graph h1 = g6_decode("HheadXZ"), h2 = g6_decode("Hhf@eS|");
    check(ihara_reciprocal_bass(h1).r == ihara_reciprocal_bass(h2).r, "9-vertex pair shares Z");
    check(phi_ADJ(h1) == phi_ADJ(h2), "9-vertex pair shares phi_ADJ");
    check(count_short_cycles(h1, 6)[3] == 46 && count_short_cycles(h2, 6)[3] == 50, "six-cycle counts 46/50");
    check(!is_isomorphic(h1, h2), "9-vertex pair is non-isomorphic");
    check(is_isomorphic(h1, complement(h2)), "G1 iso to complement of G2");

    Graph crab = g6_decode("K??CA?_FEcdk"), squid = g6_decode("K??CA?_ccWNk");
    check(ihara_reciprocal_bass(crab).r == ihara_reciprocal_bass(squid).r, "crab and squid share Z");
    check(degree_sequence(crab) == DegreeSequence({5, 5, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2}), "crab degrees");
    check(degree_sequence(squid) == DegreeSequence({7, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2}), "squid degrees");
    check(!(bartholdi_phi_AD(crab) == bartholdi_phi_AD(squid)), "crab/squid differ in phi_AD");

    Graph draw = Graph::from_edges(11, {{0, 2}, {0, 8}, {0, 10}, {1, 5}, {1, 8}, {1, 10}, {2, 6}, {2, 10},
                                        {3, 4}, {3, 7}, {3, 9}, {4, 7}, {4, 9}, {5, 6}, {5, 9}, {6, 10},
                                        {7, 10}, {8, 10}});
    Graph j1 = g6_decode("J?BD?oX[F[?"), j2 = g6_decode("J?`CP``LE{?");
    check(is_isomorphic(draw, j1), "the 11-vertex drawing matches its graph6 string");
    SwitchingPartition part{{{0, 1, 2, 3, 4, 5}, {6, 7, 8}}};
    check(check_gm_star(draw, part), "11-vertex 3-GM* partition is admissible");
    check(is_isomorphic(gm_switch(draw, part), j2), "11-vertex switch gives the partner graph");
    GmSearchOptions o2;
    o2.star_only = true;
    check(find_gm_pairs(j1, o2).empty() && find_gm_pairs(j2, o2).empty(), "the 11-vertex pair admits no 2-GM* partner");

    Graph e1 = g6_decode("ECZo"), e2 = g6_decode("EEr_");
    auto jf = join_family(e1, e2, Graph::complete(2));
    check(jf.f == IntPoly{20, 28, 13, 2}, "join f(x) = (2+x)^2(2x+5)");
    check(jf.exceptional_orders.empty(), "join exceptional set empty");

    Graph f1 = g6_decode("F?zPw"), f2 = g6_decode("F@Rfo");
    auto cf = coalescence_family(f1, 0, f2, 0, Graph::complete(2), 0);
    check(cf.cospectral_certified && cf.zeta_distinguished_md2 && cf.zeta_star_distinguished_md1,
          "coalescence predicates");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ihara/Bartholdi zeta invariants, cospectral constructions and censuses"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = default_threads();
    app.add_option("--threads", threads, "worker threads (default: hardware)");

    // --- invariants ---
    auto* inv = app.add_subcommand("invariants", "print exact invariants of graph6 inputs");
    std::vector<std::string> inv_g6;
    std::string inv_file;
    InvariantFlags flags;
    bool inv_all = false;
    inv->add_option("graphs", inv_g6, "graph6 strings");
    inv->add_option("--file", inv_file, "graph6 file, one per line ('-' for stdin)");
    inv->add_flag("--ihara", flags.ihara, "Ihara zeta reciprocal (Bass route)");
    inv->add_flag("--hashimoto", flags.hashimoto, "Ihara zeta reciprocal (oriented-edge route)");
    inv->add_flag("--fingerprint", flags.fingerprint, "zeta sieve fingerprint");
    inv->add_flag("--phi-ad", flags.phi_ad, "generalized charpoly det(lI - A + xD)");
    inv->add_flag("--phi-adj", flags.phi_adj, "generalized charpoly det(lI - A + xD + yJ)");
    inv->add_option("--geodesic", flags.geodesic_len, "geodesic census up to length L");
    inv->add_option("--cycles", flags.cycles_len, "simple cycle counts up to length L (<= 8)");
    inv->add_option("--bartholdi", flags.bartholdi_deg, "Bartholdi series to total degree D (<= 10)");
    inv->add_flag("--degrees", flags.degrees, "degree sequence");
    inv->add_flag("--classify", flags.classify_flag, "structural classification");
    inv->add_flag("--structure", flags.structure, "structure recovered from the zeta profile");
    inv->add_flag("--spanning-trees", flags.spanning, "number of spanning trees");
    inv->add_flag("--all", inv_all, "everything cheap");

    // --- generate ---
    auto* gen = app.add_subcommand("generate", "isomorph-free catalog of order n");
    int gen_n = 0;
    std::string gen_filter = "all", gen_out;
    int gen_mmin = 0, gen_mmax = -1;
    gen->add_option("-n", gen_n, "order")->required();
    gen->add_option("--filter", gen_filter, "all|connected|md2|md1");
    gen->add_option("--m-min", gen_mmin, "minimum edge count");
    gen->add_option("--m-max", gen_mmax, "maximum edge count");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // --- census ---
    auto* cen = app.add_subcommand("census", "invariant-equivalence census over a catalog");
    int cen_n = 0, cen_shards = 1;
    std::string cen_methods, cen_source, cen_outdir;
    bool cen_md2 = false, cen_fps = false;
    cen->add_option("-n", cen_n, "order")->required();
    cen->add_option("--methods", cen_methods, "comma list of method tags")->required();
    cen->add_option("--source", cen_source, "graph6 catalog file (default: internal generator)");
    cen->add_option("--shards", cen_shards, "shard count (results are shard-independent)");
    cen->add_option("--outdir", cen_outdir, "directory for class reports and the manifest");
    cen->add_flag("--md2", cen_md2, "restrict the catalog to md2 graphs");
    cen->add_flag("--fingerprints", cen_fps, "also write sorted graph6/fingerprint files");

    // --- tables ---
    auto* tab = app.add_subcommand("tables", "reproduce the census tables up to order n");
    int tab_n = 8;
    bool tab_extended = false;
    std::string tab_outdir = "tables";
    tab->add_option("-n", tab_n, "largest order (default 8)");
    tab->add_flag("--extended", tab_extended, "include the slower n=9 columns when n >= 9");
    tab->add_option("--outdir", tab_outdir, "output directory");

    // --- switch ---
    auto* sw = app.add_subcommand("switch", "GM/GM* switching search or application");
    std::string sw_g6, sw_mode = "find-gm-star", sw_blocks, sw_blocks2, sw_sizes;
    int sw_kmax = 1;
    sw->add_option("--g6", sw_g6, "input graph")->required();
    sw->add_option("--mode", sw_mode, "find-gm|find-gm-star|apply");
    sw->add_option("--k-max", sw_kmax, "maximum number of switching blocks (1 or 2)");
    sw->add_option("--block-sizes", sw_sizes, "allowed first-block sizes, comma list");
    sw->add_option("--blocks", sw_blocks, "explicit block B1 for apply, comma list of vertices");
    sw->add_option("--blocks2", sw_blocks2, "explicit block B2 for apply");

    // --- verify ---
    auto* ver = app.add_subcommand("verify", "oracle-equivalence and fixture suites");
    std::string suite;
    int ver_n = 5, ver_len = 10, ver_deg = 6;
    ver->add_option("suite", suite, "bass-hashimoto|oracle|cbc|paper-examples")->required();
    ver->add_option("-n", ver_n, "largest order");
    ver->add_option("-L", ver_len, "geodesic length bound");
    ver->add_option("-D", ver_deg, "Bartholdi total degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*inv) {
            if (inv_all) {
                flags.ihara = flags.fingerprint = flags.phi_ad = flags.phi_adj = true;
                flags.degrees = flags.classify_flag = true;
            }
            for (const Graph& g : graphs_from(inv_file, inv_g6)) print_invariants(std::cout, g, flags);
        } else if (*gen) {
            GenOptions opt;
            opt.filter = parse_gen_filter(gen_filter);
            opt.m_min = gen_mmin;
            if (gen_mmax >= 0) opt.m_max = gen_mmax;
            opt.threads = threads;
            auto cat = generate_catalog_g6(gen_n, opt);
            std::ofstream fout;
            std::ostream* os = &std::cout;
            if (!gen_out.empty()) {
                fout.open(gen_out);
                if (!fout) throw std::runtime_error("cannot write " + gen_out);
                os = &fout;
            }
            for (const auto& s : cat) *os << s << '\n';
        } else if (*cen) {
            std::vector<Graph> cat;
            std::string source_desc;
            if (cen_source.empty()) {
                GenOptions go;
                go.threads = threads;
                cat = generate_all(cen_n, go);
                source_desc = "generator";
            } else {
                cat = read_catalog_file(cen_source);
                source_desc = "file:" + cen_source;
                for (const Graph& g : cat)
                    if (g.order() != cen_n) throw std::runtime_error("catalog order mismatch with -n");
            }
            if (!cen_outdir.empty()) std::filesystem::create_directories(cen_outdir);
            std::ostringstream manifest;
            manifest << "n\t" << cen_n << "\nsource\t" << source_desc << "\nchecksum\t" << catalog_checksum(cat)
                     << "\nshards\t" << cen_shards << "\nmd2_only\t" << cen_md2 << "\n";
            std::stringstream mlist(cen_methods);
            std::string mtok;
            while (std::getline(mlist, mtok, ',')) {
                MethodSpec spec{parse_method(mtok), cen_md2};
                CensusOptions co;
                co.threads = threads;
                co.shards = cen_shards;
                if (cen_fps && !cen_outdir.empty())
                    co.fingerprint_file = cen_outdir + "/fingerprints_" + mtok + ".tsv";
                ClassReport rep = census_method(cat, cen_n, spec, co);
                std::cout << mtok << '\t' << rep.undetermined << '\n';
                manifest << "method\t" << mtok << "\tundetermined\t" << rep.undetermined << '\n';
                if (!cen_outdir.empty()) {
                    std::ofstream cls(cen_outdir + "/classes_" + mtok + ".tsv");
                    for (const auto& c : rep.classes) {
                        for (std::size_t i = 0; i < c.size(); ++i) cls << (i ? "\t" : "") << c[i];
                        cls << '\n';
                    }
                }
            }
            if (!cen_outdir.empty()) {
                std::ofstream mf(cen_outdir + "/manifest.txt");
                mf << manifest.str();
            }
        } else if (*tab) {
            std::vector<CensusRow> rows;
            for (int n = 2; n <= tab_n; ++n) {
                GenOptions go;
                go.threads = threads;
                auto cat = generate_all(n, go);
                CensusRow row;
                row.n = n;
                row.total = static_cast<long long>(cat.size());
                CensusOptions co;
                co.threads = threads;
                std::vector<MethodTag> all_tags = {MethodTag::A,     MethodTag::L,     MethodTag::Q,
                                                   MethodTag::Z,     MethodTag::ZZbar, MethodTag::T,
                                                   MethodTag::TTbar, MethodTag::PhiAD, MethodTag::PhiADJ,
                                                   MethodTag::Astar, MethodTag::AAbar, MethodTag::Qstar,
                                                   MethodTag::QQbar, MethodTag::AL,    MethodTag::ALQ,
                                                   MethodTag::ALQZ};
                if (n >= 9 && !tab_extended)
                    throw std::invalid_argument("orders >= 9 need --extended (several minutes of work)");
                for (MethodTag t : all_tags)
                    row.counts[method_name(t)] = census_method(cat, n, {t}, co).undetermined;
                long long md2_total = 0;
                for (const Graph& g : cat) md2_total += classify(g).is_md2;
                row.md2_total = md2_total;
                for (MethodTag t : {MethodTag::A, MethodTag::L, MethodTag::Q, MethodTag::Z, MethodTag::PhiAD,
                                    MethodTag::PhiADJ})
                    row.md2_counts[method_name(t)] = census_method(cat, n, {t, true}, co).undetermined;
                row.gm = gm_pair_counts(cat, threads);
                row.has_gm = true;
                rows.push_back(std::move(row));
                std::cerr << "order " << n << " done\n";
            }
            auto written = emit_tables(rows, tab_outdir);
            std::ofstream mf(tab_outdir + "/manifest.txt");
            mf << "orders\t2.." << tab_n << "\nfiles";
            for (const auto& w : written) mf << '\t' << w;
            mf << "\ngm_conventions\tb=4 and even>=4 (both emitted)\n";
            for (const auto& w : written) std::cout << tab_outdir << '/' << w << '\n';
        } else if (*sw) {
            Graph g = g6_decode(sw_g6);
            if (sw_mode == "apply") {
                SwitchingPartition p;
                if (sw_blocks.empty()) throw std::invalid_argument("apply needs --blocks");
                p.blocks.push_back(parse_int_list(sw_blocks));
                if (!sw_blocks2.empty()) p.blocks.push_back(parse_int_list(sw_blocks2));
                Graph out = gm_switch(g, p);
                std::cout << g6_encode(g) << '\t' << g6_encode(out) << '\t' << "gm-apply" << '\t'
                          << partition_witness(p) << '\n';
            } else if (sw_mode == "find-gm" || sw_mode == "find-gm-star") {
                GmSearchOptions opt;
                opt.star_only = (sw_mode == "find-gm-star");
                opt.k_max = sw_kmax;
                if (!sw_sizes.empty()) opt.block_sizes = parse_int_list(sw_sizes);
                for (const auto& pr : find_gm_pairs(g, opt)) {
                    std::cout << g6_encode(g) << '\t' << g6_encode(pr.switched) << '\t'
                              << (opt.star_only ? "gm-star" : "gm") << '\t' << partition_witness(pr.partition)
                              << '\n';
                }
            } else {
                throw std::invalid_argument("unknown switch mode: " + sw_mode);
            }
        } else if (*ver) {
            SuiteResult r;
            if (suite == "bass-hashimoto")
                r = verify_bass_hashimoto(ver_n, threads);
            else if (suite == "oracle")
                r = verify_oracle(ver_n, ver_len, threads);
            else if (suite == "cbc")
                r = verify_cbc(ver_n, ver_deg, threads);
            else if (suite == "paper-examples")
                r = verify_paper_examples();
            else
                throw std::invalid_argument("unknown suite: " + suite);
            std::cout << suite << ": " << (r.checked - r.failed) << '/' << r.checked << " checks passed\n";
            if (r.failed) return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
