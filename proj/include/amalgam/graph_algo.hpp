#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace amalgam {

// Adjacency lists from an edge set over vertices 0..count-1.
std::vector<std::vector<int>> out_adjacency(std::size_t count,
                                            const std::vector<std::pair<int, int>>& edges);
std::vector<std::vector<int>> undirected_adjacency(std::size_t count,
                                                   const std::vector<std::pair<int, int>>& edges);

inline constexpr int kUnreachable = 1 << 20;

// Unit-weight BFS distances from `source` along the given adjacency.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adjacency, int source);

// BFS shortest path (vertex sequence) or nullopt.
std::optional<std::vector<int>> bfs_path(const std::vector<std::vector<int>>& adjacency,
                                         int source, int target);

// Shortest directed cycle of length <= cap, as a vertex sequence without the
// repeated endpoint; nullopt when all cycles are longer.
std::optional<std::vector<int>> shortest_directed_cycle(
    std::size_t count, const std::vector<std::pair<int, int>>& edges, int cap);

// Shortest odd cycle of an undirected graph (via its bipartite double cover),
// of length <= cap; nullopt otherwise.
std::optional<std::vector<int>> shortest_odd_cycle(
    std::size_t count, const std::vector<std::pair<int, int>>& edges, int cap);

}  // namespace amalgam
