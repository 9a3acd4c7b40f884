#include "amalgam/cli_check.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "amalgam/io.hpp"

namespace amalgam {

namespace {

namespace fs = std::filesystem;

struct RunOutcome {
    int exit_code = -1;
    std::string output;
};

RunOutcome run_command(const std::string& command, const fs::path& capture) {
    const std::string full = command + " > " + capture.string() + " 2>&1";
    const int status = std::system(full.c_str());
    RunOutcome outcome;
#ifdef _WIN32
    outcome.exit_code = status;
#else
    outcome.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    std::ifstream in(capture);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    outcome.output = buffer.str();
    return outcome;
}

const char kTotalBms[] =
    "bms n=4 nstar=2\n"
    "a b c\n"
    "a b 1\n"
    "a c 1\n"
    "b c 2\n";

const char kPartialBms[] =
    "# partial: d(a,c) left open\n"
    "bms n=4 nstar=2\n"
    "a b c\n"
    "a b 1\n"
    "b c 1\n";

const char kInfeasibleBms[] =
    "bms n=3 nstar=2\n"
    "a b c\n"
    "a b 1\n"
    "a c 1\n"
    "b c 3\n";

const char kMalformedBms[] =
    "bms n=4 nstar=2\n"
    "a b c\n"
    "a b one\n";

const char kBadMetricBms[] =
    "bms n=3 nstar=2\n"
    "a b c\n"
    "a b 1\n"
    "b c 1\n"
    "a c 3\n";

const char kLeftBms[] =
    "bms n=8 nstar=4\n"
    "c x\n"
    "c x 1\n";

const char kRightBms[] =
    "bms n=8 nstar=4\n"
    "c y\n"
    "c y 2\n";

const char kValidDds[] =
    "dds n=5\n"
    "a b c\n"
    "a b 1\n"
    "b c 1\n"
    "a c 2\n";

const char kCyclicDds[] =
    "dds n=5\n"
    "a b c\n"
    "a b 1\n"
    "b c 1\n"
    "c a 3\n";

const char kMalformedDds[] =
    "dds n=5\n"
    "a b\n"
    "a b 1 maybe\n";

const char kPentagonEdges[] =
    "v0 v1\nv1 v2\nv2 v3\nv3 v4\nv4 v0\n";

const char kTriangleEdges[] =
    "v0 v1\nv1 v2\nv2 v0\n";

}  // namespace

SuiteOutcome run_cli_roundtrip(const std::string& cli_path) {
    SuiteOutcome outcome;
    outcome.name = "cli-roundtrip";
    const auto started = std::chrono::steady_clock::now();

    fs::path dir = fs::temp_directory_path() /
                   ("amalgam-cli-" + std::to_string(
                                         std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir);
    const fs::path capture = dir / "capture.txt";

    auto file = [&](const char* name, const char* contents) {
        write_file((dir / name).string(), contents);
        return (dir / name).string();
    };
    const std::string total = file("total.bms", kTotalBms);
    const std::string partial = file("partial.bms", kPartialBms);
    const std::string infeasible = file("infeasible.bms", kInfeasibleBms);
    const std::string malformed = file("malformed.bms", kMalformedBms);
    const std::string bad_metric = file("bad_metric.bms", kBadMetricBms);
    const std::string left = file("left.bms", kLeftBms);
    const std::string right = file("right.bms", kRightBms);
    const std::string valid_dds = file("valid.dds", kValidDds);
    const std::string cyclic_dds = file("cyclic.dds", kCyclicDds);
    const std::string malformed_dds = file("malformed.dds", kMalformedDds);
    const std::string pentagon = file("pentagon.edges", kPentagonEdges);
    const std::string triangle = file("triangle.edges", kTriangleEdges);

    auto check = [&](const std::string& what, bool ok) {
        ++outcome.examined;
        ++outcome.checked;
        if (!ok) {
            ++outcome.failed;
            if (outcome.counterexamples.size() < kSweepSampleCap)
                outcome.counterexamples.push_back(what);
        }
    };
    auto expect_exit = [&](const std::string& args, int expected) {
        const RunOutcome run = run_command(cli_path + " " + args, capture);
        check(args + " -> exit " + std::to_string(run.exit_code) + ", expected " +
                  std::to_string(expected),
              run.exit_code == expected);
        return run;
    };

    // exit-code contract
    expect_exit("validate " + total, 0);
    expect_exit("validate " + bad_metric, 1);
    expect_exit("validate " + malformed, 2);
    expect_exit("validate " + dir.string() + "/missing.bms", 2);
    expect_exit("complete " + infeasible, 1);
    expect_exit("digraph-check " + valid_dds, 0);
    expect_exit("digraph-check " + cyclic_dds, 1);
    expect_exit("digraph-check " + malformed_dds, 2);
    expect_exit("oddgirth-check --graph " + pentagon + " --n 3", 0);
    expect_exit("oddgirth-check --graph " + triangle + " --n 3", 1);
    expect_exit("sop-demo --n 1", 0);
    expect_exit("accept --suite no-such-suite", 2);
    expect_exit("frobnicate", 2);

    // canonical round trip: completing a total space reproduces its file
    {
        const std::string out1 = (dir / "complete1.bms").string();
        const std::string out2 = (dir / "complete2.bms").string();
        expect_exit("complete " + total + " --out " + out1, 0);
        expect_exit("complete " + total + " --out " + out2, 0);
        const std::string first = read_file(out1);
        check("complete is canonical and idempotent",
              first == read_file(out2) && first == canonicalize_bms(kTotalBms));
    }
    // completing a partial spec yields a total space extending it
    {
        const std::string out = (dir / "completed.bms").string();
        expect_exit("complete " + partial + " --out " + out, 0);
        const BmsDocument doc = parse_bms(read_file(out));
        check("completion is total", doc.total());
        check("completion extends the assignment",
              doc.total() && doc.require_space().dist_by_id("a", "b") == 1 &&
                  doc.require_space().dist_by_id("b", "c") == 1);
    }
    // amalgamation: deterministic canonical output
    {
        const std::string out1 = (dir / "amalgam1.bms").string();
        const std::string out2 = (dir / "amalgam2.bms").string();
        expect_exit("amalgamate --left " + left + " --right " + right + " --base c --out " + out1,
                    0);
        expect_exit("amalgamate --left " + left + " --right " + right + " --base c --out " + out2,
                    0);
        const std::string first = read_file(out1);
        check("amalgamate is deterministic", first == read_file(out2));
        const BmsDocument doc = parse_bms(first);
        check("amalgam output is a total space", doc.total());
        check("amalgam keeps both sides",
              doc.total() && doc.require_space().dist_by_id("c", "x") == 1 &&
                  doc.require_space().dist_by_id("c", "y") == 2 &&
                  doc.require_space().dist_by_id("x", "y") == 3);
    }
    // realization emits a parsable edge list with the assigned distance
    {
        const std::string out = (dir / "realized.edges").string();
        expect_exit("digraph-realize " + valid_dds + " --out " + out, 0);
        const EdgeRelationGraph g = parse_edge_list(read_file(out));
        const auto witness = r_k_holds(g, "a", "b", 1);
        check("realized graph keeps the a->b edge", witness.has_value());
    }
    // independence exit codes on a quick config
    {
        const std::string config = file("indep.bms",
                                        "bms n=8 nstar=4\n"
                                        "a b c\n"
                                        "a c 4\n"
                                        "b c 4\n"
                                        "a b 4\n");
        expect_exit("indep --level 1 --config " + config + " --base c --left c,a --right c,b", 0);
        expect_exit("indep --level 0 --config " + config + " --base c --left c,a,b --right c,b",
                    1);
        expect_exit("ladder --k 2 --config " + config + " --base c --left c,a --right c,b", 0);
    }
    // enumerate: the frozen 3-point count at n=2
    {
        const RunOutcome run = expect_exit("enumerate --points 3 --n 2 --count-only", 0);
        check("enumerate count output", run.output.find("8") != std::string::npos);
    }
    // JSON reports: parsable, stable modulo duration
    {
        const RunOutcome run1 = expect_exit("validate " + total + " --json", 0);
        const RunOutcome run2 = expect_exit("validate " + total + " --json", 0);
        bool stable = false;
        try {
            auto strip = [](const std::string& text) {
                auto parsed = nlohmann::json::parse(text);
                parsed.erase("duration_ms");
                return parsed;
            };
            stable = strip(run1.output) == strip(run2.output);
        } catch (...) {
        }
        check("json reports parse and repeat byte-stably", stable);
    }

    std::error_code ignore;
    fs::remove_all(dir, ignore);

    outcome.pass = outcome.failed == 0;
    outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                          .count();
    return outcome;
}

}  // namespace amalgam
