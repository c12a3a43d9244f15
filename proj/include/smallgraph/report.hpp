#pragma once

// Full Heawood certification: cycle census by two methods, automorphism
// group order and PGL2(7) isomorphism, the three transitivity claims, and
// the four lemma suites. Failures become report entries, not errors, so a
// mutant graph still yields a complete (failing) report.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smallgraph/graph.hpp"
#include "smallgraph/lemmas.hpp"

namespace smallgraph {

struct PaperComparison {
    std::string quantity;
    long long paper = 0;
    long long computed = 0;
    bool match = false;
    bool informational = false;  // recorded but never gates the overall verdict
};

struct TransitivityResult {
    std::string family_kind;
    std::size_t family_size = 0;
    std::vector<std::size_t> orbit_sizes;
    bool transitive = false;
    bool stabilizer_integral = false;
    std::size_t stabilizer_order = 0;  // group order / orbit size, single-orbit case
};

struct StageResult {
    std::string stage;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0.0;
};

struct CertReport {
    int n = 0;
    int edge_count = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool bipartite = false;
    std::optional<int> girth_value;
    std::map<int, long long> census_dfs;
    std::map<int, long long> census_zeon;
    long long disjoint_pair_count = 0;
    bool methods_agree = false;
    std::vector<PaperComparison> paper_comparison;
    std::size_t aut_order = 0;
    bool pgl2_isomorphic = false;
    std::vector<TransitivityResult> transitivity;
    std::vector<LemmaVerdict> lemma_verdicts;
    std::vector<StageResult> stages;
    bool overall_pass = false;
    std::string first_failed;  // empty when everything passed
};

// Requires g.vertex_count() <= 16 (enumerative regime); any such graph is
// accepted and simply fails the checks it fails.
CertReport certify_heawood(const Graph& g);

nlohmann::ordered_json report_to_json(const CertReport& r);
std::string report_to_text(const CertReport& r);

}  // namespace smallgraph
