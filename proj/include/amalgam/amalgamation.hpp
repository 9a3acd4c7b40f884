#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amalgam/metric_space.hpp"

namespace amalgam {

// ---------------------------------------------------------------------------
// Dense kernels. The exhaustive sweeps run millions of tiny instances, so the
// cross-distance rules and checks are implemented once on a fixed-size matrix
// and shared by the public operations.
// ---------------------------------------------------------------------------

inline constexpr int kDenseCap = 16;

struct DistMatrix {
    int count = 0;
    std::array<std::uint8_t, kDenseCap * kDenseCap> d{};

    int at(int i, int j) const { return d[static_cast<std::size_t>(i) * kDenseCap + j]; }
    void set(int i, int j, int v) {
        d[static_cast<std::size_t>(i) * kDenseCap + j] = static_cast<std::uint8_t>(v);
        d[static_cast<std::size_t>(j) * kDenseCap + i] = static_cast<std::uint8_t>(v);
    }
};

DistMatrix to_dense(const BoundedMetricSpace& space);

// Which rule fixed a cross distance.
enum class CrossRule : std::uint8_t {
    min_sum,   // m_ab < nstar: realized through the base
    max_gap,   // m^ab > nstar: forced by the largest gap over the base
    fallback,  // otherwise: nstar
};

struct CrossBounds {
    int lower_sum;  // m_ab  = min_c(d(a,c) + d(b,c)); INT_MAX/4 when the base is empty
    int upper_gap;  // m^ab  = max_c|d(a,c) - d(b,c)|; 0 when the base is empty
};

inline constexpr int kNoChain = 1 << 20;

// m_ab / m^ab of one cross pair, base given as matrix indices.
template <typename MatrixLike>
CrossBounds cross_bounds(const MatrixLike& m, std::span<const int> base, int a, int b) {
    CrossBounds out{kNoChain, 0};
    for (int c : base) {
        const int sum = m.at(a, c) + m.at(c, b);
        const int gap = m.at(a, c) > m.at(c, b) ? m.at(a, c) - m.at(c, b) : m.at(c, b) - m.at(a, c);
        if (sum < out.lower_sum) out.lower_sum = sum;
        if (gap > out.upper_gap) out.upper_gap = gap;
    }
    return out;
}

int cross_value(const CrossBounds& bounds, int nstar, CrossRule* rule = nullptr);

// Glues `left` (layout: base block then left extras) and `right` (base block
// then right extras) into `out` (base, left extras, right extras), filling
// every cross distance by the rule above. Base blocks must agree.
void amalgam_fill(const DistMatrix& left, const DistMatrix& right, int base_count, int nstar,
                  DistMatrix& out, CrossRule* rules = nullptr);

// First triangle or range violation, as matrix indices (x, y, z) with
// d(x,z) > d(x,y) + d(y,z); range violations use z = -1.
std::optional<std::array<int, 3>> dense_first_violation(const DistMatrix& m, int bound);

// Distance predicates over a marked configuration: every cross pair either
// respects the threshold or is exactly realized over the base. Sets are
// matrix-index spans; xs/ys must already exclude the base.
bool dense_distance_at_least(const DistMatrix& m, std::span<const int> base,
                             std::span<const int> xs, std::span<const int> ys, int k,
                             std::pair<int, int>* witness = nullptr);
bool dense_distance_at_most(const DistMatrix& m, std::span<const int> base,
                            std::span<const int> xs, std::span<const int> ys, int k,
                            std::pair<int, int>* witness = nullptr);

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

struct AmalgamationTriple {
    BoundedMetricSpace base, left, right;
    // base point -> side point; empty means identity by name.
    std::vector<std::pair<PointId, PointId>> into_left, into_right;
    int nstar = 0;

    // Validates: equal bounds, both embeddings isometric, nstar within
    // [ceil(n/2), n] (0 selects the default). Throws DomainError.
    static AmalgamationTriple make(BoundedMetricSpace base, BoundedMetricSpace left,
                                   BoundedMetricSpace right, int nstar = 0,
                                   std::vector<std::pair<PointId, PointId>> into_left = {},
                                   std::vector<std::pair<PointId, PointId>> into_right = {});
};

struct CrossPairProfile {
    struct Entry {
        PointId left, right;
        int m_lower = 0;  // m_ab; kNoChain when the base is empty
        int m_upper = 0;  // m^ab
        std::optional<int> actual;
    };
    std::vector<Entry> entries;
};

// m_ab and m^ab for every cross pair. Throws DomainError on an empty base.
CrossPairProfile cross_profile(const AmalgamationTriple& triple);

struct AmalgamResult {
    BoundedMetricSpace space;
    std::vector<std::pair<PointId, PointId>> left_to_result, right_to_result;
    struct CrossAssignment {
        PointId left, right;  // original side names
        CrossRule rule;
        int value;
    };
    std::vector<CrossAssignment> cross;
};

// Free amalgam of the triple: restricts isometrically to both sides, cross
// distances follow the min_sum/max_gap/fallback rules. Name collisions
// between the two sides are resolved by suffixing the right-hand copy.
AmalgamResult free_amalgam(const AmalgamationTriple& triple);

// A space with marked subsets C <= A, B (and optionally more), the carrier
// for the distance predicates and the independence ladder.
struct AmbientConfig {
    BoundedMetricSpace space;
    std::vector<PointId> base, left, right;
    int nstar = 0;

    // Validates containment C <= A, C <= B and the nstar range; does not
    // require A and B to meet only in C (level-0 independence checks that).
    static AmbientConfig make(BoundedMetricSpace space, std::vector<PointId> base,
                              std::vector<PointId> left, std::vector<PointId> right,
                              int nstar = 0);

    std::vector<PointId> overlap_beyond_base() const;
};

CrossPairProfile cross_profile(const AmbientConfig& config);

// True iff every cross pair (a in A\C, b in B\C) has d(a,b) >= k or
// d(a,b) = m_ab. Throws DomainError when A and B overlap beyond C.
bool distance_at_least(const AmbientConfig& config, int k);
// True iff every cross pair has d(a,b) <= k or d(a,b) = m^ab.
bool distance_at_most(const AmbientConfig& config, int k);

// Configuration for the composition lemma: C <= A, B, D inside one space,
// with A, B, D pairwise meeting exactly in C.
struct DistanceLemmaConfig {
    BoundedMetricSpace space;
    std::vector<PointId> base, left, right, mid;
    int nstar = 0;

    static DistanceLemmaConfig make(BoundedMetricSpace space, std::vector<PointId> base,
                                    std::vector<PointId> left, std::vector<PointId> right,
                                    std::vector<PointId> mid, int nstar = 0);
};

struct LemmaClause {
    bool holds = false;
    std::string witness;  // empty when the clause holds
};

struct LemmaReport {
    int k1 = 0, k2 = 0;
    LemmaClause pre_free_amalgam;  // A u D, B u D freely amalgamated over D
    LemmaClause pre_left_window;   // A within [k1, k2] of D over C
    LemmaClause pre_right_window;  // B within [k1, k2] of D over C
    LemmaClause lower_ab;          // A >= min(nstar, 2 k1) from B over C
    LemmaClause upper_ab;          // A <= max(k2 - k1, nstar) from B over C
    LemmaClause mid_lower;         // D >= k1 from A u B over C
    LemmaClause mid_upper;         // D <= k2 from A u B over C

    bool preconditions_ok() const {
        return pre_free_amalgam.holds && pre_left_window.holds && pre_right_window.holds;
    }
    bool conclusions_ok() const {
        return lower_ab.holds && upper_ab.holds && mid_lower.holds && mid_upper.holds;
    }
    bool ok() const { return preconditions_ok() && conclusions_ok(); }
    std::string describe() const;
};

// Evaluates every clause regardless of earlier failures; requires
// 1 <= k1 <= nstar <= k2 <= n. Throws DomainError otherwise.
LemmaReport check_distance_lemma(const DistanceLemmaConfig& config, int k1, int k2);

// Input for the d* construction: the block A u B_0 with its actual metric,
// and a consistent family of copies of B_0 with given mutual distances.
struct SequenceExtensionInput {
    BoundedMetricSpace left_block;  // metric on A u B_0
    std::vector<PointId> base;      // C
    std::vector<PointId> left;      // A (contains C)
    BoundedMetricSpace copies_block;             // metric on the union of all copies
    std::vector<std::vector<PointId>> copies;    // aligned enumerations; copies[0] lives in both blocks
    int nstar = 0;
};

struct DStarViolation {
    PointId x, y, z;  // d(x,z) > d(x,y) + d(y,z)
    int dxz = 0, dxy = 0, dyz = 0;
    std::string describe() const;
};

// Builds d* on A u (all copies): each A x copy_i block receives the
// A x copy_0 pattern, distances inside the copy family are kept. Returns the
// metric, or the first triangle violation of the candidate. Preconditions
// (window [nstar, nstar+1] between A and copy_0 over C, copies pairwise
// isometric over C) are enforced with DomainError.
std::variant<BoundedMetricSpace, DStarViolation> sequence_extension(
    const SequenceExtensionInput& input);

}  // namespace amalgam
