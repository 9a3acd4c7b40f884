// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "amalgam/acceptance.hpp"
#include "amalgam/cli_check.hpp"

int main() {
    using namespace amalgam;
    const AcceptanceCaps caps;  // pinned scales
    bool all_pass = true;

    auto report = [&](const SuiteOutcome& outcome) {
        std::cout << outcome.summary_line() << "\n";
        for (const auto& sample : outcome.counterexamples)
            std::cout << "    counterexample: " << sample << "\n";
        all_pass = all_pass && outcome.pass;
    };

    for (const auto& name : acceptance_suites())
        report(run_acceptance(name, caps, ExecMode::parallel));

    if (const char* cli = std::getenv("AMALGAM_CLI"); cli && *cli) {
        report(run_cli_roundtrip(cli));
    } else {
        std::cout << "SKIP cli-roundtrip: set AMALGAM_CLI to the tool path\n";
        all_pass = false;
    }

    std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all_pass ? 0 : 1;
}
