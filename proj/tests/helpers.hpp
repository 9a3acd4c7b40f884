#pragma once

#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "amalgam/metric_space.hpp"

namespace test_helpers {

struct Pair {
    std::string p, q;
    int d;
};

// total space from explicit pairs; fails the test setup loudly if invalid
inline amalgam::BoundedMetricSpace space(int bound, std::vector<std::string> points,
                                         std::initializer_list<Pair> pairs) {
    amalgam::DistanceCandidate candidate;
    candidate.bound = bound;
    candidate.points = points;
    candidate.values.assign(amalgam::pair_count(points.size()), -1);
    auto index = [&](const std::string& id) {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == id) return i;
        throw amalgam::DomainError("test fixture names unknown point " + id);
    };
    for (const Pair& pair : pairs)
        candidate.values[amalgam::pair_index(index(pair.p), index(pair.q), points.size())] =
            pair.d;
    auto made = amalgam::BoundedMetricSpace::make(std::move(candidate));
    if (auto* report = std::get_if<amalgam::ValidationReport>(&made))
        throw amalgam::DomainError("test fixture is not a metric: " + report->describe());
    return std::get<amalgam::BoundedMetricSpace>(std::move(made));
}

}  // namespace test_helpers
