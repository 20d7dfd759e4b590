#ifndef ZETAGRAPH_CENSUS_HPP
#define ZETAGRAPH_CENSUS_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/canon.hpp"
#include "zetagraph/generate.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/parallel.hpp"
#include "zetagraph/switching.hpp"
#include "zetagraph/zeta.hpp"

namespace zetagraph {

// ---------------------------------------------------------------------------
// Invariant methods. Each tag names an exact invariant; a method's key is its
// canonical serialization and key equality is invariant equality. The census
// sieves with a cheap fingerprint first (evaluations of the same invariant at
// fixed integer points, stored as exact decimals) and confirms collisions
// against the full keys.
// ---------------------------------------------------------------------------

enum class MethodTag {
    A,       // charpoly of A
    L,       // charpoly of D - A
    Q,       // charpoly of D + A (signless Laplacian)
    Z,       // R(t) alone
    ZZbar,   // R(t) of G and of its complement
    T,       // (m, R): the oriented-edge spectrum
    TTbar,   // (n, m, R, Rbar)
    Zstar,   // (n, R of the cone)
    PhiAD,   // (n, phi_AD)
    PhiADJ,  // (n, phi_ADJ)
    Astar,   // charpoly of A(cone)
    AAbar,   // charpolys of A and Abar
    Qstar,   // charpoly of D + A on the cone
    QQbar,   // signless Laplacian charpolys of G and Gbar
    AL,      // A and L combined
    ALQ,     // A, L and Q combined
    ALQZ,    // A, L, Q and R combined
};

struct MethodSpec {
    MethodTag tag;
    bool md2_only = false;
};

inline const char* method_name(MethodTag t) {
    switch (t) {
        case MethodTag::A: return "A";
        case MethodTag::L: return "L";
        case MethodTag::Q: return "Q";
        case MethodTag::Z: return "Z";
        case MethodTag::ZZbar: return "ZZbar";
        case MethodTag::T: return "T";
        case MethodTag::TTbar: return "TTbar";
        case MethodTag::Zstar: return "Zstar";
        case MethodTag::PhiAD: return "PhiAD";
        case MethodTag::PhiADJ: return "PhiADJ";
        case MethodTag::Astar: return "Astar";
        case MethodTag::AAbar: return "AAbar";
        case MethodTag::Qstar: return "Qstar";
        case MethodTag::QQbar: return "QQbar";
        case MethodTag::AL: return "AL";
        case MethodTag::ALQ: return "ALQ";
        case MethodTag::ALQZ: return "ALQZ";
    }
    return "?";
}

inline MethodTag parse_method(const std::string& s) {
    static const std::map<std::string, MethodTag> table = {
        {"A", MethodTag::A},         {"L", MethodTag::L},        {"Q", MethodTag::Q},
        {"Z", MethodTag::Z},         {"ZZbar", MethodTag::ZZbar}, {"T", MethodTag::T},
        {"TTbar", MethodTag::TTbar}, {"Zstar", MethodTag::Zstar}, {"PhiAD", MethodTag::PhiAD},
        {"PhiADJ", MethodTag::PhiADJ}, {"Astar", MethodTag::Astar}, {"AAbar", MethodTag::AAbar},
        {"Qstar", MethodTag::Qstar}, {"QQbar", MethodTag::QQbar}, {"AL", MethodTag::AL},
        {"ALQ", MethodTag::ALQ},     {"ALQZ", MethodTag::ALQZ},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("unknown method tag: " + s);
    return it->second;
}

namespace detail {

// det(s I + dcoef D + acoef A [+ jcoef J]) as one exact determinant
inline Int graph_det(const Graph& g, long long s, long long dcoef, long long acoef, long long jcoef = 0) {
    IntMatrix m(g.order());
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            Int v = jcoef;
            if (i == j)
                v += Int(s) + Int(dcoef) * g.degree(i);
            else if (g.edge(i, j))
                v += acoef;
            m.at(i, j) = v;
        }
    }
    return det_exact(std::move(m));
}

// fingerprint of the charpoly of dcoef D + acoef A: evaluations at 2 and -3
inline std::string pencil_fp(const Graph& g, long long dcoef, long long acoef) {
    // det(2I - M) and det(-3I - M) determine charpoly evaluations
    std::ostringstream os;
    os << g.order() << '|' << graph_det(g, 2, -dcoef, -acoef) << '|' << graph_det(g, -3, -dcoef, -acoef);
    return os.str();
}

// fingerprint components that are exact functions of R(t) alone
inline std::string zeta_fp(const Graph& g) {
    ZetaFingerprint f = zeta_fingerprint(g);
    std::ostringstream os;
    os << 2 * f.m_dagger << '|' << f.r_at_neg2() << '|' << f.r_at_3();
    return os.str();
}

inline std::string phi_ad_fp(const Graph& g) {
    std::ostringstream os;
    os << g.order() << '|' << graph_det(g, 2, 1, -1) << '|' << graph_det(g, -3, 2, -1) << '|'
       << graph_det(g, 5, -1, -1);
    return os.str();
}

inline std::string phi_adj_fp(const Graph& g) {
    std::ostringstream os;
    os << g.order() << '|' << graph_det(g, 2, 1, -1, 1) << '|' << graph_det(g, -3, 2, -1, -1) << '|'
       << graph_det(g, 5, -2, -1, 3);
    return os.str();
}

}  // namespace detail

inline std::string invariant_fingerprint(const Graph& g, MethodTag tag) {
    switch (tag) {
        case MethodTag::A: return detail::pencil_fp(g, 0, 1);
        case MethodTag::L: return detail::pencil_fp(g, 1, -1);
        case MethodTag::Q: return detail::pencil_fp(g, 1, 1);
        case MethodTag::Z: return detail::zeta_fp(g);
        case MethodTag::ZZbar: return detail::zeta_fp(g) + "~" + detail::zeta_fp(complement(g));
        case MethodTag::T: return std::to_string(g.size()) + "#" + detail::zeta_fp(g);
        case MethodTag::TTbar:
            return std::to_string(g.order()) + ":" + std::to_string(g.size()) + "#" + detail::zeta_fp(g) + "~" +
                   detail::zeta_fp(complement(g));
        case MethodTag::Zstar: return std::to_string(g.order()) + "#" + detail::zeta_fp(cone(g));
        case MethodTag::PhiAD: return detail::phi_ad_fp(g);
        case MethodTag::PhiADJ: return detail::phi_adj_fp(g);
        case MethodTag::Astar: return detail::pencil_fp(cone(g), 0, 1);
        case MethodTag::AAbar: return detail::pencil_fp(g, 0, 1) + "~" + detail::pencil_fp(complement(g), 0, 1);
        case MethodTag::Qstar: return detail::pencil_fp(cone(g), 1, 1);
        case MethodTag::QQbar: return detail::pencil_fp(g, 1, 1) + "~" + detail::pencil_fp(complement(g), 1, 1);
        case MethodTag::AL: return detail::pencil_fp(g, 0, 1) + "+" + detail::pencil_fp(g, 1, -1);
        case MethodTag::ALQ:
            return detail::pencil_fp(g, 0, 1) + "+" + detail::pencil_fp(g, 1, -1) + "+" + detail::pencil_fp(g, 1, 1);
        case MethodTag::ALQZ:
            return detail::pencil_fp(g, 0, 1) + "+" + detail::pencil_fp(g, 1, -1) + "+" + detail::pencil_fp(g, 1, 1) +
                   "+" + detail::zeta_fp(g);
    }
    throw std::logic_error("invariant_fingerprint: unhandled tag");
}

inline std::string invariant_key(const Graph& g, MethodTag tag) {
    auto cp = [](const IntMatrix& m) { return charpoly(m).str(); };
    switch (tag) {
        case MethodTag::A: return cp(adjacency_matrix(g));
        case MethodTag::L: return cp(laplacian(g));
        case MethodTag::Q: return cp(signless_laplacian(g));
        case MethodTag::Z: return ihara_reciprocal_bass(g).r.str();
        case MethodTag::ZZbar:
            return ihara_reciprocal_bass(g).r.str() + "~" + ihara_reciprocal_bass(complement(g)).r.str();
        case MethodTag::T: return std::to_string(g.size()) + "#" + ihara_reciprocal_bass(g).r.str();
        case MethodTag::TTbar:
            return std::to_string(g.order()) + ":" + std::to_string(g.size()) + "#" +
                   ihara_reciprocal_bass(g).r.str() + "~" + ihara_reciprocal_bass(complement(g)).r.str();
        case MethodTag::Zstar:
            return std::to_string(g.order()) + "#" + ihara_reciprocal_bass(cone(g)).r.str();
        case MethodTag::PhiAD: return std::to_string(g.order()) + "#" + bartholdi_phi_AD(g).str();
        case MethodTag::PhiADJ: return std::to_string(g.order()) + "#" + phi_ADJ(g).str();
        case MethodTag::Astar: return cp(adjacency_matrix(cone(g)));
        case MethodTag::AAbar: return cp(adjacency_matrix(g)) + "~" + cp(adjacency_matrix(complement(g)));
        case MethodTag::Qstar: return cp(signless_laplacian(cone(g)));
        case MethodTag::QQbar: return cp(signless_laplacian(g)) + "~" + cp(signless_laplacian(complement(g)));
        case MethodTag::AL: return cp(adjacency_matrix(g)) + "+" + cp(laplacian(g));
        case MethodTag::ALQ:
            return cp(adjacency_matrix(g)) + "+" + cp(laplacian(g)) + "+" + cp(signless_laplacian(g));
        case MethodTag::ALQZ:
            return cp(adjacency_matrix(g)) + "+" + cp(laplacian(g)) + "+" + cp(signless_laplacian(g)) + "+" +
                   ihara_reciprocal_bass(g).r.str();
    }
    throw std::logic_error("invariant_key: unhandled tag");
}

// ---------------------------------------------------------------------------
// Census over an isomorph-free catalog: group by fingerprint, confirm within
// colliding buckets against the exact keys, and report the graphs that are
// not determined (classes of size >= 2).
// ---------------------------------------------------------------------------

struct ClassReport {
    int n = 0;
    MethodTag tag = MethodTag::A;
    bool md2_only = false;
    long long total_graphs = 0;
    long long undetermined = 0;                           // graphs in classes of size >= 2
    std::map<long long, long long> class_size_histogram;  // class size -> #classes
    std::vector<std::vector<std::string>> classes;        // members (graph6) of classes of size >= 2
};

struct CensusOptions {
    unsigned threads = 1;
    int shards = 1;
    // when set, "graph6 TAB fingerprint" lines are written here, sorted by
    // (fingerprint, graph6), mirroring the external-sort pipeline
    std::string fingerprint_file;
};

inline ClassReport census_method(const std::vector<Graph>& catalog, int n, MethodSpec spec,
                                 const CensusOptions& opt = {}) {
    ClassReport rep;
    rep.n = n;
    rep.tag = spec.tag;
    rep.md2_only = spec.md2_only;

    std::vector<const Graph*> graphs;
    for (const Graph& g : catalog)
        if (!spec.md2_only || classify(g).is_md2) graphs.push_back(&g);
    rep.total_graphs = static_cast<long long>(graphs.size());

    // fingerprint pass, shard by shard; shard boundaries cannot affect the
    // result because grouping is global
    std::vector<std::string> fps(graphs.size());
    const int shards = std::max(1, opt.shards);
    const std::size_t per = (graphs.size() + shards - 1) / shards;
    for (int s = 0; s < shards; ++s) {
        std::size_t lo = s * per, hi = std::min(graphs.size(), lo + per);
        if (lo >= hi) break;
        parallel_for(hi - lo, opt.threads,
                     [&](std::size_t i) { fps[lo + i] = invariant_fingerprint(*graphs[lo + i], spec.tag); });
    }

    if (!opt.fingerprint_file.empty()) {
        std::vector<std::pair<std::string, std::string>> lines(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) lines[i] = {fps[i], g6_encode(*graphs[i])};
        std::sort(lines.begin(), lines.end());
        std::ofstream out(opt.fingerprint_file);
        for (const auto& [fp, g6] : lines) out << g6 << '\t' << fp << '\n';
    }

    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < graphs.size(); ++i) buckets[fps[i]].push_back(i);

    // confirmation pass over colliding buckets
    std::vector<std::pair<std::string, std::vector<std::size_t>>> collisions;
    for (auto& [fp, idx] : buckets)
        if (idx.size() >= 2) collisions.emplace_back(fp, idx);

    for (auto& [fp, idx] : collisions) {
        std::vector<std::string> keys(idx.size());
        parallel_for(idx.size(), opt.threads, [&](std::size_t i) { keys[i] = invariant_key(*graphs[idx[i]], spec.tag); });
        std::map<std::string, std::vector<std::string>> exact;
        for (std::size_t i = 0; i < idx.size(); ++i) exact[keys[i]].push_back(g6_encode(*graphs[idx[i]]));
        for (auto& [key, members] : exact) {
            if (members.size() < 2) continue;
            // isomorph-free source check: exact collisions are rare, so the
            // canonical forms of true classes are cheap to compare here
            std::vector<std::string> canon(members.size());
            for (std::size_t i = 0; i < members.size(); ++i) canon[i] = canonize(g6_decode(members[i]), false).canonical_g6;
            std::sort(canon.begin(), canon.end());
            if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
                throw std::runtime_error("census: source catalog is not isomorph-free");
            std::sort(members.begin(), members.end());
            rep.undetermined += static_cast<long long>(members.size());
            rep.class_size_histogram[static_cast<long long>(members.size())] += 1;
            rep.classes.push_back(members);
        }
    }
    std::sort(rep.classes.begin(), rep.classes.end());
    return rep;
}

// Class-size histogram of a report (largest class last).
inline std::map<long long, long long> family_size_stats(const ClassReport& rep) { return rep.class_size_histogram; }

// ---------------------------------------------------------------------------
// Switching columns: how many catalog graphs admit a nonisomorphic 2-GM
// (resp. 2-GM*) switch, under both block-size conventions (|B| = 4 only, and
// any even |B| >= 4).
// ---------------------------------------------------------------------------

struct GmCounts {
    long long gm_b4 = 0, gm_even = 0;
    long long gmstar_b4 = 0, gmstar_even = 0;
};

namespace detail {

struct GmFlags {
    bool gm_b4 = false, gm_even = false, gmstar_b4 = false, gmstar_even = false;
};

inline GmFlags gm_flags_for(const Graph& g, const std::string& canon_g) {
    const int n = g.order();
    GmFlags f;
    auto rows = g.rows64();
    for (int b = 4; b <= n; b += 2) {
        // flags only ever turn on; the b=4 flags are final after the first pass
        if (b > 4 && f.gm_even && f.gmstar_even) break;
        detail::for_each_subset(n, b, [&](const std::vector<int>& verts) {
            if (b == 4 ? (f.gm_b4 && f.gmstar_b4) : (f.gm_even && f.gmstar_even)) return;
            std::uint64_t bmask = 0;
            for (int v : verts) bmask |= std::uint64_t(1) << v;
            // induced block regular
            int d0 = std::popcount(rows[verts[0]] & bmask);
            for (int v : verts)
                if (std::popcount(rows[v] & bmask) != d0) return;
            // column condition, and remember whether any half-column exists
            bool half = false;
            for (int v = 0; v < n; ++v) {
                if (bmask & (std::uint64_t(1) << v)) continue;
                int t = std::popcount(rows[v] & bmask);
                if (t != 0 && t != b && 2 * t != b) return;
                if (2 * t == b) half = true;
            }
            if (!half) return;
            bool star = true;
            int gdeg = g.degree(verts[0]);
            for (int v : verts)
                if (g.degree(v) != gdeg) {
                    star = false;
                    break;
                }
            SwitchingPartition p{{verts}};
            Graph sw = gm_switch(g, p);
            if (canonize(sw, false).canonical_g6 == canon_g) return;
            f.gm_even = true;
            if (b == 4) f.gm_b4 = true;
            if (star) {
                f.gmstar_even = true;
                if (b == 4) f.gmstar_b4 = true;
            }
        });
        if (f.gm_even && f.gmstar_even && f.gm_b4 && f.gmstar_b4) break;
    }
    return f;
}

}  // namespace detail

inline GmCounts gm_pair_counts(const std::vector<Graph>& catalog, unsigned threads) {
    std::vector<detail::GmFlags> flags(catalog.size());
    parallel_for(catalog.size(), threads, [&](std::size_t i) {
        flags[i] = detail::gm_flags_for(catalog[i], canonize(catalog[i], false).canonical_g6);
    });
    GmCounts c;
    for (const auto& f : flags) {
        c.gm_b4 += f.gm_b4;
        c.gm_even += f.gm_even;
        c.gmstar_b4 += f.gmstar_b4;
        c.gmstar_even += f.gmstar_even;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Table emission. Rows carry per-order results; cumulative lead rows follow
// the published layouts (orders 2..5, 2..6 or 2..4 summed). Cells are exact
// integers, tab separated.
// ---------------------------------------------------------------------------

struct CensusRow {
    int n = 0;
    long long total = -1;
    long long md2_total = -1;
    std::map<std::string, long long> counts;      // method name -> undetermined, full catalog
    std::map<std::string, long long> md2_counts;  // method name -> undetermined, md2 catalog
    GmCounts gm;
    bool has_gm = false;
};

namespace detail {

inline bool row_has(const CensusRow& r, const std::vector<std::string>& methods, bool md2) {
    const auto& m = md2 ? r.md2_counts : r.counts;
    for (const auto& name : methods)
        if (!m.count(name)) return false;
    return true;
}

inline void write_table(const std::string& path, const std::string& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << header << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
        out << '\n';
    }
}

}  // namespace detail

// Writes whichever of table1.tsv..table5.tsv the supplied rows can fill.
inline std::vector<std::string> emit_tables(const std::vector<CensusRow>& rows_in, const std::string& outdir) {
    std::vector<CensusRow> rows = rows_in;
    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) { return a.n < b.n; });
    std::filesystem::create_directories(outdir);
    std::vector<std::string> written;

    auto cumulative = [&](int up_to, const std::vector<std::string>& methods, bool md2,
                          std::vector<std::string>& cells) -> bool {
        long long total = 0;
        std::map<std::string, long long> sums;
        for (const auto& r : rows) {
            if (r.n < 2 || r.n > up_to) continue;
            if ((md2 ? r.md2_total : r.total) < 0 || !detail::row_has(r, methods, md2)) return false;
            total += md2 ? r.md2_total : r.total;
            for (const auto& m : methods) sums[m] += (md2 ? r.md2_counts : r.counts).at(m);
        }
        cells.push_back("<=" + std::to_string(up_to));
        cells.push_back(std::to_string(total));
        for (const auto& m : methods) cells.push_back(std::to_string(sums[m]));
        return true;
    };

    // Table 1: Z, ZZbar, T, TTbar per order
    {
        std::vector<std::vector<std::string>> t;
        for (const auto& r : rows) {
            if (r.n < 2 || r.total < 0 || !detail::row_has(r, {"Z", "ZZbar", "T", "TTbar"}, false)) continue;
            t.push_back({std::to_string(r.n), std::to_string(r.total), std::to_string(r.counts.at("Z")),
                         std::to_string(r.counts.at("ZZbar")), std::to_string(r.counts.at("T")),
                         std::to_string(r.counts.at("TTbar"))});
        }
        if (!t.empty()) {
            detail::write_table(outdir + "/table1.tsv", "n\tgraphs\tZ\tZZbar\tT\tTTbar", t);
            written.push_back("table1.tsv");
        }
    }
    // Table 2: A, L, Q, PhiAD, PhiADJ, 2-GM, 2-GM* with a cumulative <=5 row
    {
        const std::vector<std::string> ms = {"A", "L", "Q", "PhiAD", "PhiADJ"};
        std::vector<std::vector<std::string>> t;
        bool have_le5 = true;
        {
            std::vector<std::string> lead;
            GmCounts gm{};
            bool gm_ok = true;
            for (const auto& r : rows)
                if (r.n >= 2 && r.n <= 5) {
                    if (!r.has_gm) gm_ok = false;
                    gm.gm_b4 += r.gm.gm_b4;
                    gm.gm_even += r.gm.gm_even;
                    gm.gmstar_b4 += r.gm.gmstar_b4;
                    gm.gmstar_even += r.gm.gmstar_even;
                }
            if (cumulative(5, ms, false, lead) && gm_ok) {
                lead.push_back(std::to_string(gm.gm_b4));
                lead.push_back(std::to_string(gm.gm_even));
                lead.push_back(std::to_string(gm.gmstar_b4));
                lead.push_back(std::to_string(gm.gmstar_even));
                t.push_back(lead);
            } else {
                have_le5 = false;
            }
        }
        for (const auto& r : rows) {
            if (r.n < 6 || r.total < 0 || !detail::row_has(r, ms, false) || !r.has_gm) continue;
            t.push_back({std::to_string(r.n), std::to_string(r.total), std::to_string(r.counts.at("A")),
                         std::to_string(r.counts.at("L")), std::to_string(r.counts.at("Q")),
                         std::to_string(r.counts.at("PhiAD")), std::to_string(r.counts.at("PhiADJ")),
                         std::to_string(r.gm.gm_b4), std::to_string(r.gm.gm_even), std::to_string(r.gm.gmstar_b4),
                         std::to_string(r.gm.gmstar_even)});
        }
        if (!t.empty() && have_le5) {
            detail::write_table(outdir + "/table2.tsv",
                                "n\tgraphs\tA\tL\t|L|\tPhiAD\tPhiADJ\t2-GM[b=4]\t2-GM[even>=4]\t2-GM*[b=4]\t2-GM*[even>=4]",
                                t);
            written.push_back("table2.tsv");
        }
    }
    // Table 3 (md2 catalogs): A, L, Q, Z, PhiAD, PhiADJ with a <=6 row
    {
        const std::vector<std::string> ms = {"A", "L", "Q", "Z", "PhiAD", "PhiADJ"};
        std::vector<std::vector<std::string>> t;
        std::vector<std::string> lead;
        if (cumulative(6, ms, true, lead)) {
            t.push_back(lead);
            for (const auto& r : rows) {
                if (r.n < 7 || r.md2_total < 0 || !detail::row_has(r, ms, true)) continue;
                std::vector<std::string> cells{std::to_string(r.n), std::to_string(r.md2_total)};
                for (const auto& m : ms) cells.push_back(std::to_string(r.md2_counts.at(m)));
                t.push_back(cells);
            }
            if (!t.empty()) {
                detail::write_table(outdir + "/table3.tsv", "n\tmd2graphs\tA\tL\t|L|\tZ\tPhiAD\tPhiADJ", t);
                written.push_back("table3.tsv");
            }
        }
    }
    // Table 4: A, AL, ALQ, ALQZ, PhiAD with a <=5 row
    {
        const std::vector<std::string> ms = {"A", "AL", "ALQ", "ALQZ", "PhiAD"};
        std::vector<std::vector<std::string>> t;
        std::vector<std::string> lead;
        if (cumulative(5, ms, false, lead)) {
            t.push_back(lead);
            for (const auto& r : rows) {
                if (r.n < 6 || r.total < 0 || !detail::row_has(r, ms, false)) continue;
                std::vector<std::string> cells{std::to_string(r.n), std::to_string(r.total)};
                for (const auto& m : ms) cells.push_back(std::to_string(r.counts.at(m)));
                t.push_back(cells);
            }
            if (!t.empty()) {
                detail::write_table(outdir + "/table4.tsv", "n\tgraphs\tA\tAL\tAL|L|\tAL|L|Z\tPhiAD", t);
                written.push_back("table4.tsv");
            }
        }
    }
    // Table 5: Astar, AAbar, Qstar, QQbar with a <=4 row
    {
        const std::vector<std::string> ms = {"Astar", "AAbar", "Qstar", "QQbar"};
        std::vector<std::vector<std::string>> t;
        std::vector<std::string> lead;
        if (cumulative(4, ms, false, lead)) {
            t.push_back(lead);
            for (const auto& r : rows) {
                if (r.n < 5 || r.total < 0 || !detail::row_has(r, ms, false)) continue;
                std::vector<std::string> cells{std::to_string(r.n), std::to_string(r.total)};
                for (const auto& m : ms) cells.push_back(std::to_string(r.counts.at(m)));
                t.push_back(cells);
            }
            if (!t.empty()) {
                detail::write_table(outdir + "/table5.tsv", "n\tgraphs\tA*\tAAbar\t|L|*\t|L||Lbar|", t);
                written.push_back("table5.tsv");
            }
        }
    }
    return written;
}

// FNV-1a over the newline-joined catalog, recorded in run manifests.
inline std::uint64_t catalog_checksum(const std::vector<Graph>& catalog) {
    std::uint64_t h = 1469598103934665603ull;
    for (const Graph& g : catalog) {
        for (char c : g6_encode(g)) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace zetagraph

#endif
