#include "smallgraph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "smallgraph/cycles.hpp"
#include "smallgraph/family.hpp"
#include "smallgraph/graph.hpp"
#include "smallgraph/lemmas.hpp"
#include "smallgraph/orbits.hpp"
#include "smallgraph/perm.hpp"
#include "smallgraph/report.hpp"
#include "smallgraph/zeon.hpp"

namespace smallgraph::cli {

namespace {

using nlohmann::ordered_json;

const char* kUsage = R"(usage: smallgraph <command> [options]

commands:
  cycles count   [--graph G] [--method dfs|zeon|both] [--json [PATH]]
  cycles list    --length K [--graph G] [--json [PATH]]
  pairs disjoint6 [--graph G] [--json [PATH]]
  aut            [--graph G] [--json [PATH]]
  orbits         --family 6|8|10|12|14|pairs6 [--graph G] [--json [PATH]]
  lemmas         chords|complement|distance3|pairconfig [--graph G] [--json [PATH]]
  family k7      [--json [PATH]]
  verify GRAPH   [--json [PATH]]
  export dot     [--graph G]

--graph accepts a builtin (heawood, petersen, kN, cN) or @path to an
edge-list file ("u v" per line, '#' comments). --json alone prints JSON to
stdout; with PATH it writes the file. --threads N (or SMALLGRAPH_THREADS)
is accepted as a hint; the current implementation is single-threaded and
deterministic either way.
)";

struct Options {
    std::vector<std::string> verbs;
    std::string graph = "heawood";
    std::string method = "both";
    int length = 0;
    std::string family;
    bool json = false;
    std::string json_path;
    int threads = 0;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + " expects an integer, got '" + s + "'");
}

Options parse(const std::vector<std::string>& args) {
    Options o;
    if (const char* env = std::getenv("SMALLGRAPH_THREADS"))
        o.threads = parse_int(env, "SMALLGRAPH_THREADS");
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* name) -> const std::string& {
            if (i + 1 >= args.size()) throw UsageError(std::string(name) + " needs a value");
            return args[++i];
        };
        if (a == "--graph") o.graph = value("--graph");
        else if (a == "--method") o.method = value("--method");
        else if (a == "--length") o.length = parse_int(value("--length"), "--length");
        else if (a == "--family") o.family = value("--family");
        else if (a == "--threads") o.threads = parse_int(value("--threads"), "--threads");
        else if (a == "--json") {
            o.json = true;
            if (i + 1 < args.size() && args[i + 1].rfind("--", 0) != 0) o.json_path = args[++i];
        } else if (a.rfind("--", 0) == 0) {
            throw UsageError("unknown option '" + a + "'");
        } else {
            o.verbs.push_back(a);
        }
    }
    return o;
}

Graph resolve_graph(const std::string& spec) {
    if (spec == "heawood") return heawood();
    if (spec == "petersen") return petersen();
    if (!spec.empty() && spec[0] == '@') return graph_from_edge_list_file(spec.substr(1));
    if (spec.size() >= 2 && (spec[0] == 'k' || spec[0] == 'c')) {
        bool digits = true;
        for (std::size_t i = 1; i < spec.size(); ++i) digits = digits && std::isdigit(spec[i]);
        if (digits) {
            int n = std::stoi(spec.substr(1));
            return spec[0] == 'k' ? complete_graph(n) : cycle_graph(n);
        }
    }
    throw UsageError("unknown graph '" + spec + "' (want heawood, petersen, kN, cN or @file)");
}

// Emit JSON to stdout or a file; returns false on an unwritable path.
bool emit_json(const Options& o, const ordered_json& j, std::ostream& out, std::ostream& err) {
    if (o.json_path.empty()) {
        out << j.dump(2) << "\n";
        return true;
    }
    std::ofstream f(o.json_path);
    if (!f) {
        err << "error: cannot write " << o.json_path << "\n";
        return false;
    }
    f << j.dump(2) << "\n";
    return true;
}

ordered_json census_json(const std::map<int, long long>& census) {
    ordered_json c = ordered_json::object();
    for (auto [k, v] : census) c[std::to_string(k)] = v;
    return c;
}

int cmd_cycles_count(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.method != "dfs" && o.method != "zeon" && o.method != "both")
        throw UsageError("--method must be dfs, zeon or both");
    Graph g = resolve_graph(o.graph);
    bool want_dfs = o.method != "zeon";
    bool want_zeon = o.method != "dfs";
    std::map<int, long long> dfs, zeon;
    if (want_dfs) dfs = cycle_census(g);
    if (want_zeon) zeon = cycle_census_zeon(g);
    bool agree = !(want_dfs && want_zeon) || dfs == zeon;

    if (o.json) {
        ordered_json j;
        j["graph"] = o.graph;
        j["n"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["method"] = o.method;
        if (want_dfs) j["census_dfs"] = census_json(dfs);
        if (want_zeon) j["census_zeon"] = census_json(zeon);
        if (want_dfs && want_zeon) j["methods_agree"] = agree;
        if (!emit_json(o, j, out, err)) return 2;
    } else {
        out << "cycle census for " << o.graph << " (n=" << g.vertex_count() << ", "
            << g.edge_count() << " edges)\n";
        const auto& lead = want_dfs ? dfs : zeon;
        out << "  length";
        if (want_dfs) out << "  dfs";
        if (want_zeon) out << "  zeon";
        out << "\n";
        for (auto [k, c] : lead) {
            out << "  " << k;
            if (want_dfs) out << "  " << c;
            if (want_zeon) out << "  " << (want_dfs ? (zeon.count(k) ? zeon.at(k) : 0) : c);
            out << "\n";
        }
        if (want_dfs && want_zeon)
            out << "methods agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_cycles_list(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.length == 0) throw UsageError("cycles list needs --length K");
    Graph g = resolve_graph(o.graph);
    auto cycles = enumerate_cycles(g, o.length);
    if (o.json) {
        ordered_json j;
        j["graph"] = o.graph;
        j["length"] = o.length;
        j["count"] = cycles.size();
        j["cycles"] = ordered_json::array();
        for (const auto& c : cycles) j["cycles"].push_back(c.vertices());
        if (!emit_json(o, j, out, err)) return 2;
    } else {
        out << cycles.size() << " cycles of length " << o.length << " in " << o.graph << "\n";
        for (const auto& c : cycles) out << "  " << to_string(c) << "\n";
    }
    return 0;
}

int cmd_pairs(const Options& o, std::ostream& out, std::ostream& err) {
    Graph g = resolve_graph(o.graph);
    auto pairs = disjoint_six_cycle_pairs(g);
    if (o.json) {
        ordered_json j;
        j["graph"] = o.graph;
        j["count"] = pairs.size();
        j["pairs"] = ordered_json::array();
        for (const auto& p : pairs)
            j["pairs"].push_back({{"first", p.first.vertices()}, {"second", p.second.vertices()}});
        if (!emit_json(o, j, out, err)) return 2;
    } else {
        out << pairs.size() << " disjoint 6-cycle pairs in " << o.graph << "\n";
        for (const auto& p : pairs) out << "  " << to_string(p) << "\n";
    }
    return 0;
}

ordered_json group_json(const PermGroup& grp) {
    ordered_json j;
    j["degree"] = grp.degree;
    j["order"] = grp.order();
    j["generators"] = ordered_json::array();
    for (const auto& p : grp.generators) j["generators"].push_back(p.to_string());
    return j;
}

int cmd_aut(const Options& o, std::ostream& out, std::ostream& err) {
    Graph g = resolve_graph(o.graph);
    PermGroup aut = automorphisms(g);
    if (o.json) {
        ordered_json j = group_json(aut);
        j["graph"] = o.graph;
        if (!emit_json(o, j, out, err)) return 2;
    } else {
        out << "automorphism group of " << o.graph << ": order " << aut.order() << "\n";
        out << "generators (" << aut.generators.size() << "):\n";
        for (const auto& p : aut.generators) out << "  " << p.to_string() << "\n";
    }
    return 0;
}

int cmd_orbits(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.family.empty()) throw UsageError("orbits needs --family 6|8|10|12|14|pairs6");
    Graph g = resolve_graph(o.graph);
    PermGroup aut = automorphisms(g);
    OrbitPartition part;
    std::size_t family_size = 0;
    if (o.family == "pairs6") {
        auto pairs = disjoint_six_cycle_pairs(g);
        family_size = pairs.size();
        part = orbit_partition(aut, pairs, "disjoint-6-cycle-pairs");
    } else {
        int k = parse_int(o.family, "--family");
        auto cycles = enumerate_cycles(g, k);
        family_size = cycles.size();
        part = orbit_partition(aut, cycles, o.family + "-cycles");
    }
    if (o.json) {
        ordered_json j;
        j["family_kind"] = part.family_kind;
        j["group_order"] = part.group_order;
        j["orbit_sizes"] = part.orbit_sizes();
        j["transitive"] = part.transitive();
        if (!emit_json(o, j, out, err)) return 2;
    } else {
        out << part.family_kind << " of " << o.graph << ": " << family_size << " objects, group order "
            << part.group_order << "\n";
        out << "orbit sizes:";
        for (std::size_t s : part.orbit_sizes()) out << " " << s;
        out << "\ntransitive: " << (part.transitive() ? "yes" : "no") << "\n";
        if (part.transitive() && family_size > 0 && part.group_order % family_size == 0)
            out << "stabilizer order: " << part.group_order / family_size << "\n";
    }
    return 0;
}

int cmd_lemmas(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.verbs.size() < 2)
        throw UsageError("lemmas needs a suite: chords, complement, distance3 or pairconfig");
    const std::string& which = o.verbs[1];
    Graph g = resolve_graph(o.graph);
    std::vector<LemmaVerdict> verdicts;
    if (which == "chords") {
        for (const auto& c : enumerate_cycles(g, 14))
            verdicts.push_back(check_hamiltonian_chord_pattern(g, c));
    } else if (which == "complement") {
        for (const auto& c : enumerate_cycles(g, 12))
            verdicts.push_back(check_twelve_cycle_complement(g, c));
    } else if (which == "distance3") {
        for (int u : g.labels())
            for (int v : g.labels()) {
                if (u >= v || distance(g, u, v) != std::optional<int>(3)) continue;
                auto survivors = twelve_cycles_avoiding_pair(g, u, v);
                LemmaVerdict lv;
                lv.lemma_id = "distance3-pair-deletion";
                lv.instance = "pair {" + std::to_string(u) + "," + std::to_string(v) + "}";
                lv.pass = survivors.size() == 2;
                std::ostringstream ws;
                ws << survivors.size() << " twelve-cycles:";
                for (const auto& c : survivors) ws << " " << to_string(c);
                lv.witness = ws.str();
                verdicts.push_back(std::move(lv));
            }
    } else if (which == "pairconfig") {
        for (const auto& p : disjoint_six_cycle_pairs(g))
            verdicts.push_back(check_disjoint_pair_configuration(g, p));
    } else {
        throw UsageError("unknown lemma suite '" + which + "'");
    }

    std::size_t passed = 0;
    for (const auto& v : verdicts) passed += v.pass ? 1 : 0;
    if (o.json) {
        ordered_json j;
        j["graph"] = o.graph;
        j["suite"] = which;
        j["instances"] = verdicts.size();
        j["passed"] = passed;
        j["verdicts"] = ordered_json::array();
        for (const auto& v : verdicts)
            j["verdicts"].push_back({{"lemma_id", v.lemma_id},
                                     {"instance", v.instance},
                                     {"pass", v.pass},
                                     {"witness", v.witness}});
        if (!emit_json(o, j, out, err)) return 2;
    } else {
        out << "lemma suite '" << which << "' on " << o.graph << "\n";
        for (const auto& v : verdicts)
            out << "  " << (v.pass ? "[ok]  " : "[FAIL]") << " " << v.instance << "  " << v.witness
                << "\n";
        out << passed << "/" << verdicts.size() << " pass\n";
    }
    return passed == verdicts.size() ? 0 : 1;
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
    auto members = k7_family();
    Graph hw = heawood();
    auto is_heawood = [&](const Graph& g) {
        return g.vertex_count() == 14 && find_isomorphism(g, hw).has_value();
    };
    if (o.json) {
        ordered_json j;
        j["members"] = ordered_json::array();
        for (std::size_t i = 0; i < members.size(); ++i)
            j["members"].push_back({{"id", i},
                                    {"n", members[i].vertex_count()},
                                    {"edges", members[i].edge_count()},
                                    {"is_heawood", is_heawood(members[i])}});
        if (!emit_json(o, j, out, err)) return 2;
    } else {
        out << "# K7 family: " << members.size() << " isomorphism classes\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Graph& g = members[i];
            out << "# member " << i << ": n=" << g.vertex_count() << " edges=" << g.edge_count()
                << " is_heawood=" << (is_heawood(g) ? "true" : "false") << "\n";
            for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
            out << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::string spec = o.verbs.size() >= 2 ? o.verbs[1] : o.graph;
    Graph g = resolve_graph(spec);
    CertReport r = certify_heawood(g);
    if (o.json) {
        if (!emit_json(o, report_to_json(r), out, err)) return 2;
        if (!o.json_path.empty())
            out << (r.overall_pass ? "PASS" : "FAIL") << " (report written to " << o.json_path
                << ")\n";
    } else {
        out << report_to_text(r);
    }
    return r.overall_pass ? 0 : 1;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream&) {
    if (o.verbs.size() < 2 || o.verbs[1] != "dot")
        throw UsageError("export supports: dot");
    out << to_dot(resolve_graph(o.graph));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Options o = parse(args);
        if (o.verbs.empty() || o.verbs[0] == "help") {
            (o.verbs.empty() ? err : out) << kUsage;
            return o.verbs.empty() ? 2 : 0;
        }
        const std::string& verb = o.verbs[0];
        if (verb == "cycles") {
            if (o.verbs.size() >= 2 && o.verbs[1] == "count") return cmd_cycles_count(o, out, err);
            if (o.verbs.size() >= 2 && o.verbs[1] == "list") return cmd_cycles_list(o, out, err);
            throw UsageError("cycles supports: count, list");
        }
        if (verb == "pairs") {
            if (o.verbs.size() >= 2 && o.verbs[1] == "disjoint6") return cmd_pairs(o, out, err);
            throw UsageError("pairs supports: disjoint6");
        }
        if (verb == "aut") return cmd_aut(o, out, err);
        if (verb == "orbits") return cmd_orbits(o, out, err);
        if (verb == "lemmas") return cmd_lemmas(o, out, err);
        if (verb == "family") {
            if (o.verbs.size() >= 2 && o.verbs[1] == "k7") return cmd_family(o, out, err);
            throw UsageError("family supports: k7");
        }
        if (verb == "verify") return cmd_verify(o, out, err);
        if (verb == "export") return cmd_export(o, out, err);
        throw UsageError("unknown command '" + verb + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace smallgraph::cli
