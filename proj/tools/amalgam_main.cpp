// command-line front end: validation, completion, amalgamation, the
// independence ladder, girth tooling and the acceptance harness.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "amalgam/acceptance.hpp"
#include "amalgam/amalgamation.hpp"
#include "amalgam/cli_check.hpp"
#include "amalgam/digraph_distance.hpp"
#include "amalgam/enumerate.hpp"
#include "amalgam/independence.hpp"
#include "amalgam/io.hpp"
#include "amalgam/metric_space.hpp"
#include "amalgam/relation_graph.hpp"

namespace {

using amalgam::PointId;
using json = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::vector<PointId> split_points(const std::string& csv) {
    std::vector<PointId> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

struct Reporter {
    bool as_json = false;
    json payload;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    explicit Reporter(const std::string& subcommand) { payload["subcommand"] = subcommand; }

    void text(const std::string& line) {
        if (!as_json) std::cout << line << "\n";
    }

    int finish(int exit_code) {
        if (as_json) {
            payload["outcome"] = exit_code == kExitHolds ? "pass"
                                 : exit_code == kExitFails ? "fail"
                                                           : "error";
            payload["duration_ms"] = static_cast<int>(
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count());
            std::cout << payload.dump(2) << "\n";
        }
        return exit_code;
    }
};

amalgam::BoundedMetricSpace load_space(const std::string& path, int* nstar_out = nullptr) {
    const amalgam::BmsDocument doc = amalgam::parse_bms(amalgam::read_file(path));
    if (nstar_out) *nstar_out = doc.nstar;
    return doc.require_space();
}

amalgam::EdgeRelationGraph load_edges(const std::string& path) {
    return amalgam::parse_edge_list(amalgam::read_file(path));
}

int cmd_validate(const std::string& path, Reporter& report) {
    const amalgam::BmsDocument doc = amalgam::parse_bms(amalgam::read_file(path));
    if (!doc.total())
        throw amalgam::InputError("file is a partial spec; run 'complete' to extend it");
    amalgam::DistanceCandidate candidate;
    candidate.bound = doc.spec.bound();
    candidate.points = doc.spec.points();
    for (std::size_t i = 0; i < doc.spec.point_count(); ++i)
        for (std::size_t j = i + 1; j < doc.spec.point_count(); ++j)
            candidate.values.push_back(doc.spec.value(i, j));
    const amalgam::ValidationReport result = amalgam::validate_metric(candidate);
    report.payload["file"] = path;
    report.payload["ok"] = result.ok();
    auto violations = json::array();
    for (const auto& v : result.violations) violations.push_back(v.describe());
    report.payload["violations"] = violations;
    report.text(result.ok() ? "ok" : result.describe());
    return result.ok() ? kExitHolds : kExitFails;
}

int cmd_complete(const std::string& path, const std::string& out_path, Reporter& report) {
    const amalgam::BmsDocument doc = amalgam::parse_bms(amalgam::read_file(path));
    const amalgam::CompletionResult result = amalgam::min_plus_complete(doc.spec);
    if (const auto* certificate = std::get_if<amalgam::CompletionCertificate>(&result)) {
        report.payload["ok"] = false;
        report.payload["certificate"] = certificate->describe();
        report.text("infeasible: " + certificate->describe());
        return kExitFails;
    }
    const auto& space = std::get<amalgam::BoundedMetricSpace>(result);
    const std::string serialized = amalgam::serialize_bms(space, doc.nstar);
    if (!out_path.empty())
        amalgam::write_file(out_path, serialized);
    else if (!report.as_json)
        std::cout << serialized;
    report.payload["ok"] = true;
    report.payload["space"] = serialized;
    return kExitHolds;
}

int cmd_amalgamate(const std::string& left_path, const std::string& right_path,
                   const std::string& base_csv, int nstar, const std::string& out_path,
                   Reporter& report) {
    int left_nstar = 0;
    const amalgam::BoundedMetricSpace left = load_space(left_path, &left_nstar);
    const amalgam::BoundedMetricSpace right = load_space(right_path);
    const std::vector<PointId> base_points = split_points(base_csv);
    std::vector<std::size_t> base_idx;
    for (const auto& id : base_points) base_idx.push_back(left.require_index(id));
    const amalgam::BoundedMetricSpace base = left.restrict_to(base_idx);
    if (nstar == 0) nstar = left_nstar;
    const amalgam::AmalgamResult result =
        amalgam::free_amalgam(amalgam::AmalgamationTriple::make(base, left, right, nstar));
    const amalgam::ValidationReport sanity =
        amalgam::validate_metric(result.space.to_candidate());
    if (!sanity.ok()) throw amalgam::InternalError("amalgam output invalid: " + sanity.describe());
    const std::string serialized = amalgam::serialize_bms(result.space, nstar);
    if (!out_path.empty())
        amalgam::write_file(out_path, serialized);
    else if (!report.as_json)
        std::cout << serialized;
    report.payload["space"] = serialized;
    auto cross = json::array();
    for (const auto& entry : result.cross) {
        json row;
        row["left"] = entry.left;
        row["right"] = entry.right;
        row["value"] = entry.value;
        row["rule"] = entry.rule == amalgam::CrossRule::min_sum    ? "min-sum"
                      : entry.rule == amalgam::CrossRule::max_gap ? "max-gap"
                                                                  : "nstar";
        cross.push_back(row);
    }
    report.payload["cross"] = cross;
    return kExitHolds;
}

amalgam::AmbientConfig load_config(const std::string& path, const std::string& base,
                                   const std::string& left, const std::string& right) {
    int nstar = 0;
    const amalgam::BoundedMetricSpace space = load_space(path, &nstar);
    return amalgam::AmbientConfig::make(space, split_points(base), split_points(left),
                                        split_points(right), nstar);
}

int cmd_indep(const std::string& path, const std::string& base, const std::string& left,
              const std::string& right, int level, Reporter& report) {
    const amalgam::AmbientConfig config = load_config(path, base, left, right);
    const bool holds = amalgam::indep_at_level(config, level);
    report.payload["level"] = level;
    report.payload["holds"] = holds;
    report.text(holds ? "holds" : "fails");
    return holds ? kExitHolds : kExitFails;
}

int cmd_spread(const std::string& path, const std::string& base, const std::string& left,
               const std::string& right, int level, int count, const std::string& out_path,
               Reporter& report) {
    const amalgam::AmbientConfig config = load_config(path, base, left, right);
    const amalgam::SpreadResult result = amalgam::spread_sequence(config, level, count);
    const std::string serialized = amalgam::serialize_bms(result.ambient, config.nstar);
    if (!out_path.empty())
        amalgam::write_file(out_path, serialized);
    else if (!report.as_json)
        std::cout << serialized;
    auto copies = json::array();
    for (const auto& copy : result.copies) {
        std::string joined;
        for (const auto& id : copy) joined += (joined.empty() ? "" : ",") + id;
        copies.push_back(joined);
        report.text("copy: " + joined);
    }
    report.payload["copies"] = copies;
    report.payload["space"] = serialized;
    return kExitHolds;
}

int cmd_ladder(const std::string& path, const std::string& base, const std::string& left,
               const std::string& right, int target, int count, Reporter& report) {
    const amalgam::AmbientConfig config = load_config(path, base, left, right);
    const amalgam::LadderReport result = amalgam::ladder_check(config, target, count);
    auto rungs = json::array();
    for (const auto& rung : result.rungs) {
        json row;
        row["level"] = rung.from_level;
        row["pass"] = rung.pass;
        row["note"] = rung.note;
        rungs.push_back(row);
        report.text("level " + std::to_string(rung.from_level) + ": " +
                    (rung.pass ? "pass" : "fail") + " (" + rung.note + ")");
    }
    report.payload["rungs"] = rungs;
    report.payload["ok"] = result.ok;
    return result.ok ? kExitHolds : kExitFails;
}

int cmd_digraph_check(const std::string& path, Reporter& report) {
    const amalgam::DirectedDistanceStructure s =
        amalgam::parse_dds(amalgam::read_file(path));
    const amalgam::DdConsistencyReport result = amalgam::dd_validate(s);
    report.payload["ok"] = result.ok();
    auto violations = json::array();
    for (const auto& v : result.violations)
        violations.push_back("(" + std::to_string(v.criterion) + ") " + v.detail);
    report.payload["violations"] = violations;
    report.text(result.ok() ? "consistent" : result.describe());
    return result.ok() ? kExitHolds : kExitFails;
}

int cmd_digraph_realize(const std::string& path, const std::string& out_path,
                        Reporter& report) {
    const amalgam::DirectedDistanceStructure s =
        amalgam::parse_dds(amalgam::read_file(path));
    const amalgam::RealizedDigraph g = amalgam::dd_realize(s);
    const std::string serialized = amalgam::serialize_edge_list(g.vertices, g.edges);
    if (!out_path.empty())
        amalgam::write_file(out_path, serialized);
    else if (!report.as_json)
        std::cout << serialized;
    report.payload["vertices"] = g.vertices.size();
    report.payload["edges"] = g.edges.size();
    report.text("realized: " + std::to_string(g.vertices.size()) + " vertices, " +
                std::to_string(g.edges.size()) + " edges");
    return kExitHolds;
}

int cmd_oddgirth(const std::string& graph_path, const std::string& spec_path, int bound,
                 Reporter& report) {
    if (!graph_path.empty()) {
        const amalgam::EdgeRelationGraph raw = load_edges(graph_path);
        std::vector<std::pair<PointId, PointId>> edges;
        for (const auto& [u, v] : raw.edges())
            edges.push_back({raw.vertex(static_cast<std::size_t>(u)),
                             raw.vertex(static_cast<std::size_t>(v))});
        const amalgam::OddGirthGraph g =
            amalgam::OddGirthGraph::make(bound, raw.vertices(), edges);
        const amalgam::OddCycleReport result = amalgam::og_validate(g);
        report.payload["ok"] = result.ok();
        if (result.ok()) {
            report.text("no odd cycle of length <= " + std::to_string(bound));
            return kExitHolds;
        }
        std::string joined;
        for (const auto& v : *result.cycle) joined += (joined.empty() ? "" : " ") + v;
        report.payload["cycle"] = joined;
        report.text("odd cycle of length " + std::to_string(result.cycle->size()) + ": " +
                    joined);
        return kExitFails;
    }
    const amalgam::BmsDocument doc = amalgam::parse_bms(amalgam::read_file(spec_path));
    const auto result = amalgam::og_realize(doc.spec, doc.bound);
    if (const auto* failure = std::get_if<amalgam::OgRealizeFailure>(&result)) {
        report.payload["ok"] = false;
        report.payload["reason"] = failure->describe();
        report.text("inconsistent: " + failure->describe());
        return kExitFails;
    }
    const auto& graph = std::get<amalgam::OddGirthGraph>(result);
    report.payload["ok"] = true;
    report.payload["vertices"] = graph.vertices.size();
    report.text("consistent: realized with " + std::to_string(graph.vertices.size()) +
                " vertices");
    return kExitHolds;
}

int cmd_sop_demo(int level, const std::string& graph_path, std::string c1, std::string c2,
                 Reporter& report) {
    const int girth = 2 * (1 << level) + 1;
    if (!graph_path.empty()) {
        const amalgam::EdgeRelationGraph g = load_edges(graph_path);
        if (c1.empty() || c2.empty()) {
            if (g.edges().empty()) throw amalgam::DomainError("graph has no anchor edge");
            c1 = g.vertex(static_cast<std::size_t>(g.edges().front().first));
            c2 = g.vertex(static_cast<std::size_t>(g.edges().front().second));
        }
        const amalgam::BaseCaseResult result =
            amalgam::base_case_contradiction(g, level, c1, c2);
        if (const auto* certificate = std::get_if<amalgam::DividingCertificate>(&result)) {
            report.payload["certificate"] = certificate->describe();
            report.text(certificate->describe());
            return kExitHolds;
        }
        const auto& refutation = std::get<amalgam::CycleRefutation>(result);
        report.payload["cycle"] = refutation.describe();
        report.text(refutation.describe());
        return kExitFails;
    }

    // build the witness: one directed distance realized at girth 2^{n+1}+1,
    // then the same structure one bound lower to exhibit the exact cycle
    auto witness = [&](int bound) {
        const amalgam::DirectedDistanceStructure s = amalgam::DirectedDistanceStructure::make(
            bound, {"a", "b"}, {{"a", "b", 1, false}});
        const amalgam::RealizedDigraph g = amalgam::dd_realize(s);
        std::vector<std::pair<PointId, PointId>> edges;
        for (const auto& [u, v] : g.edges)
            edges.push_back({g.vertices[static_cast<std::size_t>(u)],
                             g.vertices[static_cast<std::size_t>(v)]});
        return amalgam::EdgeRelationGraph::make(g.vertices, edges);
    };
    report.text("witness graph: realization of a->b:1 with no directed cycle <= " +
                std::to_string(girth));
    const amalgam::BaseCaseResult certified =
        amalgam::base_case_contradiction(witness(girth), level, "a", "b");
    const auto* certificate = std::get_if<amalgam::DividingCertificate>(&certified);
    if (!certificate) throw amalgam::InternalError("expected a certificate on the witness graph");
    report.payload["certificate"] = certificate->describe();
    report.text(certificate->describe());

    const amalgam::BaseCaseResult refuted =
        amalgam::base_case_contradiction(witness(girth - 1), level, "a", "b");
    const auto* refutation = std::get_if<amalgam::CycleRefutation>(&refuted);
    if (!refutation) throw amalgam::InternalError("expected a cycle at the lowered bound");
    report.payload["lowered_bound_cycle"] = refutation->describe();
    report.text("one bound lower: " + refutation->describe());
    return kExitHolds;
}

int cmd_enumerate(int points, int bound, bool count_only, std::uint64_t limit, bool parallel,
                  Reporter& report) {
    if (count_only) {
        const std::uint64_t count = amalgam::count_spaces(
            points, bound, parallel ? amalgam::ExecMode::parallel : amalgam::ExecMode::serial);
        report.payload["count"] = count;
        report.text(std::to_string(count));
        return kExitHolds;
    }
    amalgam::MetricEnumerator enumerator(points, bound);
    std::uint64_t emitted = 0;
    while (auto space = enumerator.next()) {
        if (limit && emitted >= limit) break;
        if (!report.as_json) {
            if (emitted) std::cout << "\n";
            std::cout << amalgam::serialize_bms(*space);
        }
        ++emitted;
    }
    report.payload["emitted"] = emitted;
    return kExitHolds;
}

int cmd_accept(std::vector<std::string> suites, bool serial, int threads,
               const amalgam::AcceptanceCaps& caps, const std::string& self_path,
               Reporter& report) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
    std::vector<std::string> known = amalgam::acceptance_suites();
    known.push_back("cli-roundtrip");
    if (suites.empty()) suites = known;
    for (const auto& name : suites)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw amalgam::InputError("unknown acceptance suite: " + name);

    const amalgam::ExecMode mode =
        serial ? amalgam::ExecMode::serial : amalgam::ExecMode::parallel;
    bool all_pass = true;
    auto rows = json::array();
    for (const auto& name : suites) {
        const amalgam::SuiteOutcome outcome =
            name == "cli-roundtrip" ? amalgam::run_cli_roundtrip(self_path)
                                    : amalgam::run_acceptance(name, caps, mode);
        all_pass = all_pass && outcome.pass;
        report.text(outcome.summary_line());
        for (const auto& sample : outcome.counterexamples) report.text("  " + sample);
        json row;
        row["name"] = outcome.name;
        row["pass"] = outcome.pass;
        row["examined"] = outcome.examined;
        row["checked"] = outcome.checked;
        row["failed"] = outcome.failed;
        row["counterexamples"] = outcome.counterexamples;
        row["duration_ms"] = static_cast<int>(outcome.seconds * 1000);
        rows.push_back(row);
    }
    report.payload["suites"] = rows;
    return all_pass ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite bounded-distance combinatorics toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable report on stdout");

    std::map<const CLI::App*, std::function<int(Reporter&)>> actions;

    {
        auto* sub = app.add_subcommand("validate", "check the metric axioms of a total .bms file");
        auto path = std::make_shared<std::string>();
        sub->add_option("file", *path)->required();
        actions[sub] = [path](Reporter& r) { return cmd_validate(*path, r); };
    }
    {
        auto* sub = app.add_subcommand("complete", "min-plus completion of a partial .bms file");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("file", *path)->required();
        sub->add_option("--out", *out, "write the completed space here");
        actions[sub] = [path, out](Reporter& r) { return cmd_complete(*path, *out, r); };
    }
    {
        auto* sub = app.add_subcommand("amalgamate", "free amalgam of two spaces over a base");
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto nstar = std::make_shared<int>(0);
        sub->add_option("--left", *left)->required();
        sub->add_option("--right", *right)->required();
        sub->add_option("--base", *base, "comma-separated shared points")->required();
        sub->add_option("--nstar", *nstar, "override the half-bound");
        sub->add_option("--out", *out);
        actions[sub] = [=](Reporter& r) {
            return cmd_amalgamate(*left, *right, *base, *nstar, *out, r);
        };
    }
    {
        auto* sub = app.add_subcommand("indep", "distance-window independence at a level");
        auto path = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto level = std::make_shared<int>(0);
        sub->add_option("--config", *path)->required();
        sub->add_option("--base", *base)->required();
        sub->add_option("--left", *left)->required();
        sub->add_option("--right", *right)->required();
        sub->add_option("--level", *level)->required();
        actions[sub] = [=](Reporter& r) {
            return cmd_indep(*path, *base, *left, *right, *level, r);
        };
    }
    {
        auto* sub = app.add_subcommand("spread", "build a spread of copies at a level");
        auto path = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto level = std::make_shared<int>(0);
        auto count = std::make_shared<int>(2);
        auto out = std::make_shared<std::string>();
        sub->add_option("--config", *path)->required();
        sub->add_option("--base", *base)->required();
        sub->add_option("--left", *left)->required();
        sub->add_option("--right", *right)->required();
        sub->add_option("--level", *level)->required();
        sub->add_option("--count", *count)->required();
        sub->add_option("--out", *out);
        actions[sub] = [=](Reporter& r) {
            return cmd_spread(*path, *base, *left, *right, *level, *count, *out, r);
        };
    }
    {
        auto* sub = app.add_subcommand("ladder", "climb the independence ladder to a level");
        auto path = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto target = std::make_shared<int>(0);
        auto count = std::make_shared<int>(3);
        sub->add_option("--config", *path)->required();
        sub->add_option("--base", *base)->required();
        sub->add_option("--left", *left)->required();
        sub->add_option("--right", *right)->required();
        sub->add_option("--k", *target)->required();
        sub->add_option("--count", *count, "copies per rung");
        actions[sub] = [=](Reporter& r) {
            return cmd_ladder(*path, *base, *left, *right, *target, *count, r);
        };
    }
    {
        auto* sub = app.add_subcommand("digraph-check", "consistency of a .dds structure");
        auto path = std::make_shared<std::string>();
        sub->add_option("file", *path)->required();
        actions[sub] = [path](Reporter& r) { return cmd_digraph_check(*path, r); };
    }
    {
        auto* sub = app.add_subcommand("digraph-realize", "gadget realization of a .dds structure");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("file", *path)->required();
        sub->add_option("--out", *out, "write the edge list here");
        actions[sub] = [=](Reporter& r) { return cmd_digraph_realize(*path, *out, r); };
    }
    {
        auto* sub = app.add_subcommand("oddgirth-check",
                                       "odd cycles of a graph, or realizability of distances");
        auto graph = std::make_shared<std::string>();
        auto spec = std::make_shared<std::string>();
        auto bound = std::make_shared<int>(0);
        auto* graph_opt = sub->add_option("--graph", *graph, "edge-list file");
        sub->add_option("--n", *bound, "odd bound")->needs(graph_opt);
        auto* spec_opt = sub->add_option("--spec", *spec, ".bms distance assignment");
        graph_opt->excludes(spec_opt);
        actions[sub] = [=](Reporter& r) {
            if (graph->empty() && spec->empty())
                throw amalgam::InputError("oddgirth-check needs --graph or --spec");
            if (!graph->empty() && *bound == 0)
                throw amalgam::InputError("--n is required with --graph");
            return cmd_oddgirth(*graph, *spec, *bound, r);
        };
    }
    {
        auto* sub = app.add_subcommand("sop-demo", "the 2^{n+1}+1 dividing certificate");
        auto level = std::make_shared<int>(1);
        auto graph = std::make_shared<std::string>();
        auto c1 = std::make_shared<std::string>();
        auto c2 = std::make_shared<std::string>();
        sub->add_option("--n", *level, "hierarchy level")->required();
        sub->add_option("--graph", *graph, "edge-list file (default: built witness)");
        sub->add_option("--c1", *c1, "first anchor");
        sub->add_option("--c2", *c2, "second anchor");
        actions[sub] = [=](Reporter& r) { return cmd_sop_demo(*level, *graph, *c1, *c2, r); };
    }
    {
        auto* sub = app.add_subcommand("enumerate", "stream all spaces at a size and bound");
        auto points = std::make_shared<int>(0);
        auto bound = std::make_shared<int>(0);
        auto count_only = std::make_shared<bool>(false);
        auto limit = std::make_shared<std::uint64_t>(0);
        auto parallel = std::make_shared<bool>(false);
        sub->add_option("--points", *points)->required();
        sub->add_option("--n", *bound)->required();
        sub->add_flag("--count-only", *count_only, "print the count instead of spaces");
        sub->add_option("--limit", *limit, "emit at most this many spaces");
        sub->add_flag("--parallel", *parallel, "count on the OpenMP path");
        actions[sub] = [=](Reporter& r) {
            return cmd_enumerate(*points, *bound, *count_only, *limit, *parallel, r);
        };
    }
    {
        auto* sub = app.add_subcommand("accept", "run acceptance suites");
        auto suites = std::make_shared<std::vector<std::string>>();
        auto serial = std::make_shared<bool>(false);
        auto threads = std::make_shared<int>(0);
        auto list = std::make_shared<bool>(false);
        auto caps = std::make_shared<amalgam::AcceptanceCaps>();
        sub->add_option("--suite", *suites, "suite name (repeatable; default: all)");
        sub->add_flag("--list", *list, "list suite names and exit");
        sub->add_flag("--serial", *serial, "run on the serial reference path");
        sub->add_option("--threads", *threads, "OpenMP thread count");
        sub->add_option("--metric-n-hi", caps->metric_n_hi, "largest bound in metric sweeps");
        sub->add_option("--dds-n-hi", caps->dds_n_hi, "largest bound in digraph sweeps");
        sub->add_option("--dds-points", caps->dds_point_cap, "digraph sweep point cap");
        sub->add_option("--og-points", caps->og_point_cap, "odd-girth sweep point cap");
        actions[sub] = [=](Reporter& r) {
            if (*list) {
                for (const auto& name : amalgam::acceptance_suites()) r.text(name);
                r.text("cli-roundtrip");
                return kExitHolds;
            }
            const std::string self =
                std::filesystem::absolute(std::filesystem::path(argv[0])).string();
            return cmd_accept(*suites, *serial, *threads, *caps, self, r);
        };
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    for (const auto& [sub, action] : actions) {
        if (!app.got_subcommand(sub)) continue;
        Reporter report(sub->get_name());
        report.as_json = as_json;
        try {
            return report.finish(action(report));
        } catch (const amalgam::InputError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return report.finish(kExitUsage);
        } catch (const amalgam::InternalError& e) {
            std::cerr << "internal error (please report): " << e.what() << "\n";
            return report.finish(kExitFails);
        } catch (const amalgam::DomainError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return report.finish(kExitFails);
        }
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
}
