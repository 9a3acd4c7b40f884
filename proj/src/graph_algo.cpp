#include "amalgam/graph_algo.hpp"

#include <algorithm>
#include <deque>

namespace amalgam {

std::vector<std::vector<int>> out_adjacency(std::size_t count,
                                            const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(count);
    for (const auto& [u, v] : edges) adj[static_cast<std::size_t>(u)].push_back(v);
    return adj;
}

std::vector<std::vector<int>> undirected_adjacency(std::size_t count,
                                                   const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(count);
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adjacency, int source) {
    std::vector<int> dist(adjacency.size(), kUnreachable);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adjacency[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::optional<std::vector<int>> bfs_path(const std::vector<std::vector<int>>& adjacency,
                                         int source, int target) {
    std::vector<int> parent(adjacency.size(), -2);
    std::deque<int> queue{source};
    parent[static_cast<std::size_t>(source)] = -1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == target) break;
        for (int v : adjacency[static_cast<std::size_t>(u)])
            if (parent[static_cast<std::size_t>(v)] == -2) {
                parent[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
    }
    if (parent[static_cast<std::size_t>(target)] == -2) return std::nullopt;
    std::vector<int> path;
    for (int v = target; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<std::vector<int>> shortest_directed_cycle(
    std::size_t count, const std::vector<std::pair<int, int>>& edges, int cap) {
    const auto adj = out_adjacency(count, edges);
    int best = kUnreachable;
    std::pair<int, int> best_edge{-1, -1};  // closing edge (u, v): cycle v ->* u -> v
    for (const auto& [u, v] : edges) {
        const auto dist = bfs_distances(adj, v);
        if (dist[static_cast<std::size_t>(u)] + 1 < best) {
            best = dist[static_cast<std::size_t>(u)] + 1;
            best_edge = {u, v};
        }
    }
    if (best > cap || best >= kUnreachable) return std::nullopt;
    auto path = bfs_path(adj, best_edge.second, best_edge.first);
    return path;  // v .. u; the closing edge u -> v is implicit
}

std::optional<std::vector<int>> shortest_odd_cycle(
    std::size_t count, const std::vector<std::pair<int, int>>& edges, int cap) {
    // bipartite double cover: (v, parity); odd closed walks cross covers
    const std::size_t doubled = 2 * count;
    std::vector<std::pair<int, int>> cover_edges;
    cover_edges.reserve(4 * edges.size());
    for (const auto& [u, v] : edges) {
        cover_edges.push_back({u, v + static_cast<int>(count)});
        cover_edges.push_back({v + static_cast<int>(count), u});
        cover_edges.push_back({v, u + static_cast<int>(count)});
        cover_edges.push_back({u + static_cast<int>(count), v});
    }
    const auto adj = out_adjacency(doubled, cover_edges);
    int best = kUnreachable;
    int best_vertex = -1;
    for (std::size_t v = 0; v < count; ++v) {
        const auto dist = bfs_distances(adj, static_cast<int>(v));
        const int walk = dist[v + count];
        if (walk < best) {
            best = walk;
            best_vertex = static_cast<int>(v);
        }
    }
    if (best > cap || best >= kUnreachable) return std::nullopt;
    auto walk = bfs_path(adj, best_vertex, best_vertex + static_cast<int>(count));
    std::vector<int> cycle;
    for (std::size_t i = 0; i + 1 < walk->size(); ++i)
        cycle.push_back((*walk)[i] % static_cast<int>(count));
    return cycle;
}

}  // namespace amalgam
