#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "amalgam/errors.hpp"
#include "amalgam/metric_space.hpp"
#include "amalgam/sweep.hpp"

namespace amalgam {

// A finite digraph under one binary relation; carrier for the R_k path
// predicates and bounded cycle search. No girth invariant is assumed.
class EdgeRelationGraph {
  public:
    static EdgeRelationGraph make(std::vector<PointId> vertices,
                                  const std::vector<std::pair<PointId, PointId>>& edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<PointId>& vertices() const { return vertices_; }
    const PointId& vertex(std::size_t i) const { return vertices_[i]; }
    std::optional<std::size_t> index_of(const PointId& id) const;
    std::size_t require_index(const PointId& id) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& out_edges() const { return out_; }
    const std::vector<std::vector<int>>& in_edges() const { return in_; }
    bool has_edge(int u, int v) const;

  private:
    std::vector<PointId> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> out_, in_;
};

// A directed walk witnessing R_k: vertices.front() = x, vertices.back() = y,
// every step an edge, length = vertices.size() - 1. Vertices may repeat.
struct PathWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// R_k(x, y): a directed walk of length exactly k from x to y (k - 1
// intermediate points, so R_1 is the relation itself). Returns a witness.
std::optional<PathWitness> r_k_holds(const EdgeRelationGraph& g, const PointId& x,
                                     const PointId& y, int k);

// Shortest directed cycle of length <= limit, if any.
std::optional<std::vector<PointId>> shortest_cycle_at_most(const EdgeRelationGraph& g, int limit);

// Concatenates witnesses for R_a(x,y) and R_b(y,z) into one for R_{a+b}(x,z);
// both inputs are re-validated against the graph.
PathWitness path_concat(const EdgeRelationGraph& g, const PathWitness& first,
                        const PathWitness& second);

// Two consecutive anchors of an indiscernible chain, with an optional
// predecessor; the dividing instance asks for one witness c with
// R_{2^n}(c, c1) and R_{2^n}(c2, c).
struct DividingConfiguration {
    int level = 0;  // the n of 2^{n+1}+1
    std::optional<PointId> pre_anchor;
    PointId c1, c2;

    static DividingConfiguration make(const EdgeRelationGraph& g, int level,
                                      std::optional<PointId> c0, PointId c1, PointId c2);
};

struct DividingCertificate {
    int level = 0;
    PointId c1, c2;
    std::uint64_t vertices_checked = 0;
    std::string describe() const;
};

// A closed walk of length exactly 2^{level+1}+1 assembled from the witness
// paths and the anchor edge (via_witness), or a short cycle found directly.
struct CycleRefutation {
    std::vector<PointId> walk;  // closing edge back to walk.front() implicit
    bool via_witness = false;
    std::string describe() const;
};

using BaseCaseResult = std::variant<DividingCertificate, CycleRefutation>;

// The base-case dividing certificate: given anchors with R(c1, c2), searches
// every vertex c for R_{2^n}(c, c1) together with R_{2^n}(c2, c). A hit
// assembles the (2^{n+1}+1)-walk through path_concat and refutes the claimed
// girth; otherwise the graph is checked to really be (2^{n+1}+1)-cycle-free
// and the inconsistency is certified.
BaseCaseResult base_case_contradiction(const EdgeRelationGraph& g, int level, const PointId& c1,
                                       const PointId& c2, ExecMode mode = ExecMode::serial);

}  // namespace amalgam
