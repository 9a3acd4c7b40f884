#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "amalgam/metric_space.hpp"
#include "amalgam/sweep.hpp"

namespace amalgam {

// Caps on brute-force enumeration; overridable through the environment
// (AMALGAM_POINT_CAP, AMALGAM_N_CAP) or per call.
struct EnumerationCaps {
    int max_points = 5;
    int max_bound = 8;
    static EnumerationCaps from_env();
};

// Streams every total assignment of {1..n} to pairs of p points that passes
// validate_metric, exactly once, in lexicographic order of the distance
// vector (pair layout as in pair_index). Points are named p0, p1, ...
class MetricEnumerator {
  public:
    MetricEnumerator(int point_count, int bound, EnumerationCaps caps = EnumerationCaps::from_env());

    std::optional<BoundedMetricSpace> next();

    // Distance vector of the space just returned, in pair order.
    const std::vector<int>& current_vector() const { return digits_; }

  private:
    bool advance();
    bool valid() const;

    int point_count_;
    int bound_;
    std::vector<PointId> names_;
    std::vector<int> digits_;
    bool fresh_ = true;
    bool done_ = false;
};

// Enumeration index space: bound^pair_count(points) ranks, decoded as
// mixed-radix digit vectors. Counting runs through run_sweep and therefore
// exists in both a serial and an OpenMP flavor.
std::uint64_t enumeration_rank_count(int point_count, int bound);
void decode_rank(std::uint64_t rank, int point_count, int bound, std::vector<int>& digits);
bool digits_form_metric(const std::vector<int>& digits, int point_count, int bound);

std::uint64_t count_spaces(int point_count, int bound, ExecMode mode,
                           EnumerationCaps caps = EnumerationCaps::from_env());

}  // namespace amalgam
