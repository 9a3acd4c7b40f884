#include "amalgam/independence.hpp"

#include <algorithm>

namespace amalgam {

namespace {

long long pow2(int m) { return 1LL << m; }

std::vector<std::size_t> indices_of(const BoundedMetricSpace& space,
                                    const std::vector<PointId>& ids) {
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(space.require_index(id));
    return out;
}

}  // namespace

LevelBounds level_bounds(int m, int bound, int nstar) {
    if (m < 1) throw DomainError("level bounds are defined for m >= 1");
    if (m > 30) throw DomainError("level too large");
    if (nstar < default_nstar(bound) || nstar > bound)
        throw DomainError("nstar outside [ceil(n/2), n]");
    LevelBounds out;
    out.lower = static_cast<int>(std::min<long long>(pow2(m), nstar));
    out.upper = static_cast<int>(std::max<long long>(nstar, bound - (pow2(m) - 1)));
    return out;
}

void spread_window(int level, int bound, int nstar, int* k1, int* k2) {
    if (level < 0 || level > 30) throw DomainError("spread level out of range");
    const long long lo = pow2(level);
    const long long hi = bound - (pow2(level) - 1);
    if (!(1 <= lo && lo <= nstar && nstar <= hi && hi <= bound))
        throw DomainError("spread window 2^i = " + std::to_string(lo) + ", n - (2^i - 1) = " +
                          std::to_string(hi) + " leaves 1 <= k1 <= nstar <= k2 <= n");
    *k1 = static_cast<int>(lo);
    *k2 = static_cast<int>(hi);
}

bool indep_at_level(const AmbientConfig& config, int m) {
    if (m < 0) throw DomainError("independence level must be nonnegative");
    if (!config.overlap_beyond_base().empty()) return false;
    if (m == 0) return true;
    const LevelBounds window = level_bounds(m, config.space.bound(), config.nstar);
    return distance_at_least(config, window.lower) && distance_at_most(config, window.upper);
}

SpreadResult spread_sequence(const AmbientConfig& config, int level, int count) {
    if (count < 1) throw DomainError("spread needs at least one copy");
    if (!config.overlap_beyond_base().empty())
        throw DomainError("spread requires the sides to meet exactly in the base");
    int k1 = 0, k2 = 0;
    spread_window(level, config.space.bound(), config.nstar, &k1, &k2);
    if (!indep_at_level(config, level))
        throw DomainError("sides are not level-" + std::to_string(level) +
                          " independent over the base");

    // work inside A u B only
    std::vector<std::size_t> keep = indices_of(config.space, config.left);
    for (const auto& id : config.right) keep.push_back(config.space.require_index(id));
    const BoundedMetricSpace start = config.space.restrict_to(keep);

    const BoundedMetricSpace anchor = start.restrict_to(indices_of(start, config.left));

    // the A B pattern that every copy reproduces
    std::vector<PointId> b_only;
    std::set_difference(config.right.begin(), config.right.end(), config.left.begin(),
                        config.left.end(), std::back_inserter(b_only));

    SpreadResult result;
    result.level = level;
    result.copies.push_back(config.right);

    BoundedMetricSpace ambient = start;
    for (int j = 1; j < count; ++j) {
        // fresh copy of the A B block with B \ C renamed
        DistanceCandidate copy = start.to_candidate();
        const std::string prefix = "B" + std::to_string(j) + "/";
        std::vector<PointId> copy_points = config.base;
        for (auto& name : copy.points) {
            if (std::binary_search(b_only.begin(), b_only.end(), name)) {
                name = prefix + name;
                copy_points.push_back(name);
            }
        }
        auto made = BoundedMetricSpace::make(std::move(copy));
        auto* copy_space = std::get_if<BoundedMetricSpace>(&made);
        if (!copy_space) throw InternalError("renamed copy failed validation");

        AmalgamationTriple triple =
            AmalgamationTriple::make(anchor, ambient, *copy_space, config.nstar);
        AmalgamResult glued = free_amalgam(triple);
        ambient = std::move(glued.space);
        std::sort(copy_points.begin(), copy_points.end());
        result.copies.push_back(std::move(copy_points));
    }
    result.ambient = std::move(ambient);

    // postcondition audit: construction bugs surface here, loudly
    const BoundedMetricSpace block0 = start;
    for (int j = 1; j < count; ++j) {
        std::vector<std::pair<PointId, PointId>> map;
        for (const auto& id : config.left) map.push_back({id, id});
        const std::string prefix = "B" + std::to_string(j) + "/";
        for (const auto& id : b_only) map.push_back({id, prefix + id});
        if (!is_isometric_extension(block0, result.ambient, map))
            throw InternalError("spread copy " + std::to_string(j) +
                                " is not isometric to the original block over A");
    }
    for (int j = 1; j < count; ++j) {
        std::vector<PointId> predecessors = config.base;
        for (int l = 0; l < j; ++l)
            for (const auto& id : result.copies[static_cast<std::size_t>(l)])
                predecessors.push_back(id);
        AmbientConfig rung = AmbientConfig::make(result.ambient, config.base, predecessors,
                                                 result.copies[static_cast<std::size_t>(j)],
                                                 config.nstar);
        if (!indep_at_level(rung, level + 1))
            throw InternalError("spread copy " + std::to_string(j) +
                                " misses the level-" + std::to_string(level + 1) + " window");
    }
    {
        std::vector<PointId> all_copies = config.base;
        for (const auto& copy : result.copies)
            for (const auto& id : copy) all_copies.push_back(id);
        AmbientConfig keep_level = AmbientConfig::make(result.ambient, config.base, config.left,
                                                       all_copies, config.nstar);
        if (!indep_at_level(keep_level, level))
            throw InternalError("A lost the level-" + std::to_string(level) +
                                " window against the spread union");
    }
    return result;
}

LadderReport ladder_check(const AmbientConfig& config, int target_level, int copies_per_rung) {
    if (target_level < 0) throw DomainError("ladder level must be nonnegative");
    if (copies_per_rung < 2) throw DomainError("ladder needs at least two copies per rung");
    LadderReport report;

    if (!config.overlap_beyond_base().empty()) {
        report.rungs.push_back({0, false, "sets overlap beyond the base at point " +
                                              config.overlap_beyond_base().front()});
        report.ok = false;
        return report;
    }
    report.rungs.push_back({0, true, "sides meet exactly in the base"});

    AmbientConfig current = config;
    for (int level = 0; level < target_level; ++level) {
        LadderReport::Rung rung;
        rung.from_level = level + 1;
        try {
            SpreadResult spread = spread_sequence(current, level, copies_per_rung);
            rung.pass = true;
            rung.note = std::to_string(copies_per_rung) + " copies witness level " +
                        std::to_string(level + 1);
            current = AmbientConfig::make(spread.ambient, config.base, spread.copies[0],
                                          spread.copies[1], config.nstar);
        } catch (const DomainError& e) {
            rung.pass = false;
            rung.note = e.what();
        }
        report.ok = report.ok && rung.pass;
        report.rungs.push_back(std::move(rung));
        if (!report.ok) break;
    }
    return report;
}

}  // namespace amalgam
