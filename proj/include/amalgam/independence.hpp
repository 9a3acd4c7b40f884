#pragma once

#include <string>
#include <vector>

#include "amalgam/amalgamation.hpp"
#include "amalgam/metric_space.hpp"

namespace amalgam {

struct LevelBounds {
    int lower = 0;  // min(2^m, nstar)
    int upper = 0;  // max(nstar, n - (2^m - 1))
};

// Distance window of the level-m independence relation. m = 0 carries no
// window (disjointness over the base only) and is rejected.
LevelBounds level_bounds(int m, int bound, int nstar);

// Window of the composition step entering level m+1: k1 = 2^m,
// k2 = n - (2^m - 1). Throws when it leaves the admissible range
// 1 <= k1 <= nstar <= k2 <= n.
void spread_window(int level, int bound, int nstar, int* k1, int* k2);

// m = 0: the marked sets meet exactly in the base. m >= 1: additionally every
// cross pair respects the level-m window or is realized over the base.
bool indep_at_level(const AmbientConfig& config, int m);

struct SpreadResult {
    BoundedMetricSpace ambient;                // A u B_0 u ... u B_{count-1}
    std::vector<std::vector<PointId>> copies;  // copies[j] = C u (B_j \ C); copies[0] = B
    int level = 0;                             // input level i; copies witness i+1
};

// Builds the level-(i+1) spread of `count` copies of B over C: each new copy
// is glued onto everything so far by free amalgamation over A. Before
// returning, re-checks that every A B_j block is isometric to A B_0 over
// A u C, that B_j is level-(i+1) independent from B_0..B_{j-1} over C, and
// that A keeps the level-i window against the union; any failure is a bug
// and raises InternalError.
SpreadResult spread_sequence(const AmbientConfig& config, int level, int count);

struct LadderReport {
    struct Rung {
        int from_level = 0;
        bool pass = false;
        std::string note;
    };
    std::vector<Rung> rungs;
    bool ok = true;
};

// Climbs from level 0 (disjointness over the base) to `target_level` by
// iterated spreads, re-anchoring each rung on two fresh copies from the
// previous one.
LadderReport ladder_check(const AmbientConfig& config, int target_level,
                          int copies_per_rung = 3);

}  // namespace amalgam
