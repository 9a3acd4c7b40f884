#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amalgam/errors.hpp"
#include "amalgam/metric_space.hpp"

namespace amalgam {

// Quantifier-free pair data of the short-directed-cycle-free world: per pair
// either a directed distance (minimal path length and its direction) or, for
// odd n, the bidirected class at nstar.
enum class PairKind : std::uint8_t {
    forward,   // lo -> hi, lo/hi in sorted point order
    backward,  // hi -> lo
    both,      // bidirected at nstar; only exists when n is odd
};

struct PairAssignment {
    PairKind kind;
    int length;
    bool operator==(const PairAssignment&) const = default;
};

struct DirectedEdgeSpec {
    PointId from, to;
    int length = 0;
    bool bidirected = false;
};

class DirectedDistanceStructure {
  public:
    // Requires a total assignment; enforces the per-class legality rules
    // (directed lengths <= nstar, strictly below nstar when n is odd;
    // bidirected only at nstar and only when n is odd). Throws InputError.
    static DirectedDistanceStructure make(int bound, std::vector<PointId> points,
                                          const std::vector<DirectedEdgeSpec>& pairs);

    int bound() const { return bound_; }
    int nstar() const { return default_nstar(bound_); }
    std::size_t point_count() const { return points_.size(); }
    const std::vector<PointId>& points() const { return points_; }
    const PointId& point(std::size_t i) const { return points_[i]; }
    std::optional<std::size_t> index_of(const PointId& id) const;
    std::size_t require_index(const PointId& id) const;

    const PairAssignment& assignment(std::size_t i, std::size_t j) const;  // i != j, unordered
    // Claimed minimal path length in the direction i -> j; nullopt when the
    // assignment points the other way.
    std::optional<int> forward_claim(std::size_t i, std::size_t j) const;

    std::vector<DirectedEdgeSpec> pair_specs() const;  // canonical order

    bool operator==(const DirectedDistanceStructure&) const = default;

  private:
    int bound_ = 0;
    std::vector<PointId> points_;
    std::vector<PairAssignment> pairs_;
};

struct DdViolation {
    int criterion = 0;            // 1: chain beats/contradicts a pair; 2: short cycle
    std::vector<PointId> chain;   // criterion 1: chain endpoints first..last; 2: the cycle
    int total = 0;                // chain / cycle total length
    std::string detail;
};

struct DdConsistencyReport {
    std::vector<DdViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

// Criteria: (1) no chain of assigned distances of total <= floor(n/2) may
// beat an assigned distance or contradict its direction; (2) no chain may
// close a directed cycle of total <= n (bidirected pairs count both ways).
DdConsistencyReport dd_validate(const DirectedDistanceStructure& s);

struct RealizedDigraph {
    std::vector<PointId> vertices;  // originals first, then gadget vertices
    std::size_t original_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// Gadget realization: per pair a path of the assigned length in the assigned
// direction plus a path of length n+1-d in the opposite direction. Validates
// first (DomainError on inconsistent input) and re-checks the output
// invariants (girth > n, exact extraction) before returning.
RealizedDigraph dd_realize(const DirectedDistanceStructure& s);

// Builds the gadget graph without validating or verifying anything; the
// checker/oracle agreement sweep runs this on inconsistent structures too.
RealizedDigraph dd_realize_unchecked(const DirectedDistanceStructure& s);

struct DdExtractError {
    enum class Kind { short_cycle, pair_beyond_nstar, illegal_class };
    Kind kind;
    std::vector<PointId> cycle;  // short_cycle
    PointId p, q;                // offending pair otherwise
    std::string describe() const;
};

using DdExtractResult = std::variant<DirectedDistanceStructure, DdExtractError>;

// Reads the directed-distance type off a digraph: BFS distances between the
// designated points, classified per parity of the bound.
DdExtractResult dd_from_digraph(std::span<const PointId> vertices,
                                const std::vector<std::pair<int, int>>& edges,
                                std::span<const std::size_t> point_indices, int bound);
DdExtractResult dd_from_digraph(const RealizedDigraph& g, int bound);

// Free amalgam over a shared base: cross pairs get the shortest through-base
// chain (length and direction) when one of total <= nstar exists, else the
// nstar fallback (bidirected when n is odd, lexicographically directed when
// n is even). Inputs must be valid, agree on the base and meet only there.
DirectedDistanceStructure dd_free_amalgam(const DirectedDistanceStructure& left,
                                          const DirectedDistanceStructure& right,
                                          std::span<const PointId> base);

// Directed analog of the distance predicate: every cross pair follows the
// shortest through-base chain exactly when that chain is shorter than k, and
// otherwise has length >= k. Sets are given by point id; chains run inside
// left u right only.
bool dd_distance_at_least(const DirectedDistanceStructure& ambient,
                          std::span<const PointId> base, std::span<const PointId> left,
                          std::span<const PointId> right, int k);

// --- odd girth -------------------------------------------------------------

struct OddGirthGraph {
    int bound = 0;  // odd
    std::vector<PointId> vertices;
    std::vector<std::pair<int, int>> edges;  // canonical: u < v, sorted

    static OddGirthGraph make(int bound, std::vector<PointId> vertices,
                              const std::vector<std::pair<PointId, PointId>>& edges);
};

struct OddCycleReport {
    std::optional<std::vector<PointId>> cycle;  // a minimal odd cycle of length <= n
    bool ok() const { return !cycle.has_value(); }
};

OddCycleReport og_validate(const OddGirthGraph& g);

struct OgRealizeFailure {
    enum class Kind { odd_cycle, distance_mismatch };
    Kind kind;
    OddGirthGraph graph;  // the offending realization, kept for diagnosis
    std::vector<PointId> cycle;
    PointId p, q;
    int expected = 0, actual = 0;
    std::string describe() const;
};

// Realizes a partial assignment of undirected distances (values <= nstar,
// n odd): per assigned pair one path of length d and one of length n+1-d.
// The pair of paths closes an even (n+1)-cycle, so parity is safe by
// construction; the realization is still re-verified and honest failures are
// reported rather than hidden.
std::variant<OddGirthGraph, OgRealizeFailure> og_realize(const PartialDistanceSpec& assignment,
                                                         int bound);

}  // namespace amalgam
