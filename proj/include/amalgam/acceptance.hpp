#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/sweep.hpp"

namespace amalgam {

// Knobs for the acceptance sweeps. The defaults are the pinned scales; tests
// may shrink them for smoke runs, never the other way for the gate.
struct AcceptanceCaps {
    // free-amalgamation sweeps: |A\C|, |B\C| <= side_cap, |C| <= base_cap
    int metric_n_lo = 2, metric_n_hi = 6;
    int base_cap = 2, side_cap = 2;
    // d*-extension: n range, union size cap for A u B_0, copy counts
    int dstar_n_lo = 4, dstar_n_hi = 6;
    int dstar_union_cap = 5;
    int dstar_copies_hi = 3;
    // ladder: bounds recursion range and the spread scale
    int bounds_n_hi = 16, bounds_m_hi = 5;
    int spread_n = 8, spread_k = 2, spread_count_hi = 5;
    // directed-distance sweeps
    int dds_n_lo = 3, dds_n_hi = 7;
    int dds_point_cap = 4;
    // cycle arithmetic levels
    int sop_n_lo = 1, sop_n_hi = 3;
    // odd girth: n in {3,5,7}, <= og_point_cap points
    int og_n_lo = 3, og_n_hi = 7;
    int og_point_cap = 4;
    // cadence of public-API cross-checks inside dense sweeps
    std::uint64_t subsample_stride = 997;
};

struct SuiteOutcome {
    std::string name;
    bool pass = false;
    std::uint64_t examined = 0;  // raw configurations decoded
    std::uint64_t checked = 0;   // configurations meeting the hypotheses
    std::uint64_t failed = 0;
    std::vector<std::string> counterexamples;
    double seconds = 0;

    std::string summary_line() const;
};

const std::vector<std::string>& acceptance_suites();

// Runs one named suite; throws DomainError for unknown names.
SuiteOutcome run_acceptance(const std::string& suite, const AcceptanceCaps& caps,
                            ExecMode mode);

}  // namespace amalgam
