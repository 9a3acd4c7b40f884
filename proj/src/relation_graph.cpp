#include "amalgam/relation_graph.hpp"

#include <algorithm>

#include "amalgam/graph_algo.hpp"

namespace amalgam {

EdgeRelationGraph EdgeRelationGraph::make(std::vector<PointId> vertices,
                                          const std::vector<std::pair<PointId, PointId>>& edges) {
    EdgeRelationGraph g;
    g.vertices_ = std::move(vertices);
    std::sort(g.vertices_.begin(), g.vertices_.end());
    g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
    for (const auto& [u, v] : edges) {
        const int a = static_cast<int>(g.require_index(u));
        const int b = static_cast<int>(g.require_index(v));
        g.edges_.push_back({a, b});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.out_.assign(g.vertices_.size(), {});
    g.in_.assign(g.vertices_.size(), {});
    for (const auto& [u, v] : g.edges_) {
        g.out_[static_cast<std::size_t>(u)].push_back(v);
        g.in_[static_cast<std::size_t>(v)].push_back(u);
    }
    return g;
}

std::optional<std::size_t> EdgeRelationGraph::index_of(const PointId& id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t EdgeRelationGraph::require_index(const PointId& id) const {
    auto idx = index_of(id);
    if (!idx) throw DomainError("unknown vertex: " + id);
    return *idx;
}

bool EdgeRelationGraph::has_edge(int u, int v) const {
    const auto& outs = out_[static_cast<std::size_t>(u)];
    return std::find(outs.begin(), outs.end(), v) != outs.end();
}

namespace {

// layered reachability: sets of vertices reachable in exactly step walks
std::vector<std::vector<bool>> walk_layers(const EdgeRelationGraph& g, int start, int steps) {
    std::vector<std::vector<bool>> layers(static_cast<std::size_t>(steps) + 1,
                                          std::vector<bool>(g.vertex_count(), false));
    layers[0][static_cast<std::size_t>(start)] = true;
    for (int s = 1; s <= steps; ++s)
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
            if (layers[static_cast<std::size_t>(s) - 1][u])
                for (int v : g.out_edges()[u])
                    layers[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = true;
    return layers;
}

std::optional<PathWitness> walk_between(const EdgeRelationGraph& g, int x, int y, int k) {
    const auto layers = walk_layers(g, x, k);
    if (!layers[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)]) return std::nullopt;
    // walk back through the layers
    PathWitness witness;
    witness.vertices.assign(static_cast<std::size_t>(k) + 1, -1);
    witness.vertices[static_cast<std::size_t>(k)] = y;
    int current = y;
    for (int s = k; s > 0; --s) {
        for (int u : g.in_edges()[static_cast<std::size_t>(current)])
            if (layers[static_cast<std::size_t>(s) - 1][static_cast<std::size_t>(u)]) {
                current = u;
                break;
            }
        witness.vertices[static_cast<std::size_t>(s) - 1] = current;
    }
    return witness;
}

void validate_witness(const EdgeRelationGraph& g, const PathWitness& witness) {
    if (witness.vertices.size() < 2) throw DomainError("witness must have at least one step");
    for (std::size_t i = 0; i + 1 < witness.vertices.size(); ++i) {
        const int u = witness.vertices[i], v = witness.vertices[i + 1];
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g.vertex_count() ||
            static_cast<std::size_t>(v) >= g.vertex_count() || !g.has_edge(u, v))
            throw DomainError("witness step " + std::to_string(i) + " is not an edge");
    }
}

}  // namespace

std::optional<PathWitness> r_k_holds(const EdgeRelationGraph& g, const PointId& x,
                                     const PointId& y, int k) {
    if (k < 1) throw DomainError("R_k is defined for k >= 1");
    const int xi = static_cast<int>(g.require_index(x));
    const int yi = static_cast<int>(g.require_index(y));
    return walk_between(g, xi, yi, k);
}

std::optional<std::vector<PointId>> shortest_cycle_at_most(const EdgeRelationGraph& g,
                                                           int limit) {
    if (limit < 1) throw DomainError("cycle limit must be at least 1");
    auto cycle = shortest_directed_cycle(g.vertex_count(), g.edges(), limit);
    if (!cycle) return std::nullopt;
    std::vector<PointId> names;
    names.reserve(cycle->size());
    for (int v : *cycle) names.push_back(g.vertex(static_cast<std::size_t>(v)));
    return names;
}

PathWitness path_concat(const EdgeRelationGraph& g, const PathWitness& first,
                        const PathWitness& second) {
    validate_witness(g, first);
    validate_witness(g, second);
    if (first.vertices.back() != second.vertices.front())
        throw DomainError("witnesses do not share a midpoint");
    PathWitness out;
    out.vertices = first.vertices;
    out.vertices.insert(out.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
    validate_witness(g, out);
    return out;
}

DividingConfiguration DividingConfiguration::make(const EdgeRelationGraph& g, int level,
                                                  std::optional<PointId> c0, PointId c1,
                                                  PointId c2) {
    if (level < 0) throw DomainError("level must be nonnegative");
    if (c1 == c2 || (c0 && (*c0 == c1 || *c0 == c2)))
        throw DomainError("anchors must be distinct");
    const int i1 = static_cast<int>(g.require_index(c1));
    const int i2 = static_cast<int>(g.require_index(c2));
    if (!g.has_edge(i1, i2)) throw DomainError("anchors need the edge " + c1 + " -> " + c2);
    if (c0) {
        const int i0 = static_cast<int>(g.require_index(*c0));
        if (!g.has_edge(i0, i1)) throw DomainError("anchors need the edge " + *c0 + " -> " + c1);
    }
    DividingConfiguration config;
    config.level = level;
    config.pre_anchor = std::move(c0);
    config.c1 = std::move(c1);
    config.c2 = std::move(c2);
    return config;
}

std::string DividingCertificate::describe() const {
    const long long half = 1LL << level;
    return "no vertex c with R_" + std::to_string(half) + "(c, " + c1 + ") and R_" +
           std::to_string(half) + "(" + c2 + ", c); " + std::to_string(vertices_checked) +
           " candidates checked";
}

std::string CycleRefutation::describe() const {
    std::string out = via_witness ? "assembled closed walk of length "
                                  : "short directed cycle of length ";
    out += std::to_string(walk.size()) + ":";
    for (const auto& v : walk) out += " " + v;
    return out;
}

BaseCaseResult base_case_contradiction(const EdgeRelationGraph& g, int level, const PointId& c1,
                                       const PointId& c2, ExecMode mode) {
    if (level < 0 || level > 20) throw DomainError("level out of range");
    const int i1 = static_cast<int>(g.require_index(c1));
    const int i2 = static_cast<int>(g.require_index(c2));
    if (!g.has_edge(i1, i2))
        throw DomainError("anchor edge " + c1 + " -> " + c2 + " is missing");
    const int half = static_cast<int>(1LL << level);

    // per-vertex search for a common witness; trivially parallel
    std::vector<std::uint8_t> hit(g.vertex_count(), 0);
    run_sweep(g.vertex_count(), mode, [&](std::uint64_t c, std::string*) {
        const auto to_c1 = walk_between(g, static_cast<int>(c), i1, half);
        if (!to_c1) return Verdict::skip;
        const auto from_c2 = walk_between(g, i2, static_cast<int>(c), half);
        if (!from_c2) return Verdict::skip;
        hit[c] = 1;
        return Verdict::pass;
    });
    const auto found = std::find(hit.begin(), hit.end(), std::uint8_t{1});

    if (found != hit.end()) {
        const int c = static_cast<int>(found - hit.begin());
        // R_{2^n}(c, c1), R(c1, c2), R_{2^n}(c2, c): a closed walk of length
        // exactly 2^n + 1 + 2^n through c
        const PathWitness to_c1 = *walk_between(g, c, i1, half);
        PathWitness anchor;
        anchor.vertices = {i1, i2};
        const PathWitness from_c2 = *walk_between(g, i2, c, half);
        const PathWitness walk = path_concat(g, path_concat(g, to_c1, anchor), from_c2);
        CycleRefutation refutation;
        refutation.via_witness = true;
        for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i)
            refutation.walk.push_back(g.vertex(static_cast<std::size_t>(walk.vertices[i])));
        return refutation;
    }

    const int girth_cap = 2 * half + 1;
    if (auto cycle = shortest_cycle_at_most(g, girth_cap)) {
        CycleRefutation refutation;
        refutation.via_witness = false;
        refutation.walk = *cycle;
        return refutation;
    }

    DividingCertificate certificate;
    certificate.level = level;
    certificate.c1 = c1;
    certificate.c2 = c2;
    certificate.vertices_checked = g.vertex_count();
    return certificate;
}

}  // namespace amalgam
