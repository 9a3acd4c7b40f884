#include "amalgam/digraph_distance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "amalgam/graph_algo.hpp"

namespace amalgam {

namespace {

std::string arrow(const PointId& a, const PointId& b) { return a + "->" + b; }

// Min-plus closure over assigned arc weights, capped at cap (anything above
// is equivalent), with midpoint tracking for chain reconstruction.
struct WeightedClosure {
    std::size_t count;
    int cap;
    std::vector<int> dist;  // count x count; diagonal holds the best cycle through i
    std::vector<int> via;

    WeightedClosure(std::size_t n, int cap_) : count(n), cap(cap_) {
        dist.assign(count * count, cap);
        via.assign(count * count, -1);
    }
    int& at(std::size_t i, std::size_t j) { return dist[i * count + j]; }
    int at(std::size_t i, std::size_t j) const { return dist[i * count + j]; }

    void arc(std::size_t i, std::size_t j, int w) {
        if (w < at(i, j)) at(i, j) = w;
    }

    void run() {
        for (std::size_t k = 0; k < count; ++k)
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t j = 0; j < count; ++j) {
                    if (i == k || j == k) continue;
                    const int through = std::min(cap, at(i, k) + at(k, j));
                    if (through < at(i, j)) {
                        at(i, j) = through;
                        via[i * count + j] = static_cast<int>(k);
                    }
                }
    }

    // chain i .. j as vertex indices (both endpoints included)
    std::vector<std::size_t> chain(std::size_t i, std::size_t j) const {
        std::vector<std::size_t> out{i};
        std::vector<std::pair<std::size_t, std::size_t>> todo{{i, j}};
        while (!todo.empty()) {
            auto [a, b] = todo.back();
            todo.pop_back();
            const int mid = via[a * count + b];
            if (mid < 0) {
                out.push_back(b);
            } else {
                todo.push_back({static_cast<std::size_t>(mid), b});
                todo.push_back({a, static_cast<std::size_t>(mid)});
            }
        }
        return out;
    }
};

WeightedClosure closure_of(const DirectedDistanceStructure& s, int cap) {
    WeightedClosure closure(s.point_count(), cap);
    for (std::size_t i = 0; i < s.point_count(); ++i)
        for (std::size_t j = i + 1; j < s.point_count(); ++j) {
            const PairAssignment& a = s.assignment(i, j);
            switch (a.kind) {
                case PairKind::forward: closure.arc(i, j, a.length); break;
                case PairKind::backward: closure.arc(j, i, a.length); break;
                case PairKind::both:
                    closure.arc(i, j, a.length);
                    closure.arc(j, i, a.length);
                    break;
            }
        }
    closure.run();
    return closure;
}

}  // namespace

DirectedDistanceStructure DirectedDistanceStructure::make(
    int bound, std::vector<PointId> points, const std::vector<DirectedEdgeSpec>& pairs) {
    if (bound < 1) throw InputError("bound must be at least 1");
    DirectedDistanceStructure s;
    s.bound_ = bound;
    s.points_ = std::move(points);
    std::sort(s.points_.begin(), s.points_.end());
    for (std::size_t i = 1; i < s.points_.size(); ++i)
        if (s.points_[i - 1] == s.points_[i])
            throw InputError("duplicate point name: " + s.points_[i]);

    const int nstar = s.nstar();
    const bool odd = bound % 2 == 1;
    s.pairs_.assign(pair_count(s.points_.size()), PairAssignment{PairKind::forward, 0});
    std::vector<bool> seen(s.pairs_.size(), false);
    for (const auto& spec : pairs) {
        const std::size_t from = s.require_index(spec.from);
        const std::size_t to = s.require_index(spec.to);
        if (from == to) throw InputError("pair must join distinct points: " + spec.from);
        const std::size_t idx = pair_index(from, to, s.points_.size());
        if (seen[idx]) throw InputError("pair (" + spec.from + "," + spec.to + ") assigned twice");
        seen[idx] = true;
        if (spec.bidirected) {
            if (!odd)
                throw InputError("bidirected distances only exist for odd bounds: " +
                                 arrow(spec.from, spec.to));
            if (spec.length != nstar)
                throw InputError("bidirected distance must equal nstar = " +
                                 std::to_string(nstar));
            s.pairs_[idx] = {PairKind::both, nstar};
        } else {
            const int limit = odd ? nstar - 1 : nstar;
            if (spec.length < 1 || spec.length > limit)
                throw InputError("directed distance " + std::to_string(spec.length) + " for " +
                                 arrow(spec.from, spec.to) + " outside {1.." +
                                 std::to_string(limit) + "}");
            s.pairs_[idx] = {from < to ? PairKind::forward : PairKind::backward, spec.length};
        }
    }
    for (std::size_t i = 0; i < s.points_.size(); ++i)
        for (std::size_t j = i + 1; j < s.points_.size(); ++j)
            if (!seen[pair_index(i, j, s.points_.size())])
                throw InputError("pair (" + s.points_[i] + "," + s.points_[j] +
                                 ") has no assignment; structures are total");
    return s;
}

std::optional<std::size_t> DirectedDistanceStructure::index_of(const PointId& id) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), id);
    if (it == points_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

std::size_t DirectedDistanceStructure::require_index(const PointId& id) const {
    auto idx = index_of(id);
    if (!idx) throw InputError("unknown point: " + id);
    return *idx;
}

const PairAssignment& DirectedDistanceStructure::assignment(std::size_t i, std::size_t j) const {
    return pairs_[pair_index(i, j, points_.size())];
}

std::optional<int> DirectedDistanceStructure::forward_claim(std::size_t i, std::size_t j) const {
    const PairAssignment& a = assignment(i, j);
    if (a.kind == PairKind::both) return a.length;
    const bool along = (i < j) == (a.kind == PairKind::forward);
    if (along) return a.length;
    return std::nullopt;
}

std::vector<DirectedEdgeSpec> DirectedDistanceStructure::pair_specs() const {
    std::vector<DirectedEdgeSpec> out;
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            const PairAssignment& a = assignment(i, j);
            DirectedEdgeSpec spec;
            spec.length = a.length;
            spec.bidirected = a.kind == PairKind::both;
            if (a.kind == PairKind::backward) {
                spec.from = points_[j];
                spec.to = points_[i];
            } else {
                spec.from = points_[i];
                spec.to = points_[j];
            }
            out.push_back(std::move(spec));
        }
    return out;
}

std::string DdConsistencyReport::describe() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += "(" + std::to_string(v.criterion) + ") " + v.detail;
    }
    return out;
}

DdConsistencyReport dd_validate(const DirectedDistanceStructure& s) {
    DdConsistencyReport report;
    const int n = s.bound();
    const std::size_t count = s.point_count();
    const int cap = n + 1;
    const WeightedClosure closure = closure_of(s, cap);
    const int chain_cap = n / 2;

    auto name_chain = [&](const std::vector<std::size_t>& idx) {
        std::vector<PointId> chain;
        chain.reserve(idx.size());
        for (std::size_t i : idx) chain.push_back(s.point(i));
        return chain;
    };

    // (1): a chain of total <= floor(n/2) pins the pair type in its direction
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b) continue;
            const int chained = closure.at(a, b);
            if (chained > chain_cap) continue;
            const std::optional<int> claim = s.forward_claim(a, b);
            if (claim && chained >= *claim) continue;
            DdViolation violation;
            violation.criterion = 1;
            violation.chain = name_chain(closure.chain(a, b));
            violation.total = chained;
            std::ostringstream detail;
            detail << "chain of total " << chained << " from " << s.point(a) << " to "
                   << s.point(b);
            if (claim)
                detail << " beats the assigned distance " << *claim;
            else
                detail << " contradicts the assigned direction";
            violation.detail = detail.str();
            report.violations.push_back(std::move(violation));
        }

    // (2): no indicated directed cycle of total <= n
    std::size_t best = count;
    for (std::size_t i = 0; i < count; ++i)
        if (best == count || closure.at(i, i) < closure.at(best, best)) best = i;
    if (best < count && closure.at(best, best) <= n) {
        DdViolation violation;
        violation.criterion = 2;
        violation.total = closure.at(best, best);
        auto chain = closure.chain(best, best);
        chain.pop_back();  // drop the repeated endpoint
        violation.chain = name_chain(chain);
        violation.detail =
            "assigned distances close a directed cycle of total " + std::to_string(violation.total);
        report.violations.push_back(std::move(violation));
    }
    return report;
}

namespace {

struct GadgetBuilder {
    std::vector<PointId> vertices;
    std::set<PointId> taken;
    std::vector<std::pair<int, int>> edges;

    int fresh(PointId name) {
        while (taken.count(name)) name += "'";
        taken.insert(name);
        vertices.push_back(name);
        return static_cast<int>(vertices.size()) - 1;
    }

    // directed path from u to v with length - 1 fresh vertices
    void path(int u, int v, int length, const std::string& tag) {
        int prev = u;
        for (int k = 1; k < length; ++k) {
            const int mid = fresh(tag + "." + std::to_string(k));
            edges.push_back({prev, mid});
            prev = mid;
        }
        edges.push_back({prev, v});
    }
};

}  // namespace

RealizedDigraph dd_realize_unchecked(const DirectedDistanceStructure& s) {
    GadgetBuilder builder;
    for (const auto& p : s.points()) {
        builder.taken.insert(p);
        builder.vertices.push_back(p);
    }
    const int n = s.bound();
    for (std::size_t i = 0; i < s.point_count(); ++i)
        for (std::size_t j = i + 1; j < s.point_count(); ++j) {
            const PairAssignment& a = s.assignment(i, j);
            const int u = static_cast<int>(a.kind == PairKind::backward ? j : i);
            const int v = static_cast<int>(a.kind == PairKind::backward ? i : j);
            const PointId& un = s.point(static_cast<std::size_t>(u));
            const PointId& vn = s.point(static_cast<std::size_t>(v));
            builder.path(u, v, a.length, arrow(un, vn));
            builder.path(v, u, n + 1 - a.length, arrow(vn, un));
        }
    RealizedDigraph g;
    g.vertices = std::move(builder.vertices);
    g.original_count = s.point_count();
    g.edges = std::move(builder.edges);
    return g;
}

RealizedDigraph dd_realize(const DirectedDistanceStructure& s) {
    const DdConsistencyReport report = dd_validate(s);
    if (!report.ok()) throw DomainError("structure inconsistent: " + report.describe());
    RealizedDigraph g = dd_realize_unchecked(s);
    if (shortest_directed_cycle(g.vertices.size(), g.edges, s.bound()))
        throw InternalError("realization produced a short directed cycle");
    const DdExtractResult back = dd_from_digraph(g, s.bound());
    const auto* extracted = std::get_if<DirectedDistanceStructure>(&back);
    if (!extracted || !(*extracted == s))
        throw InternalError("realization does not reproduce the source distances");
    return g;
}

std::string DdExtractError::describe() const {
    switch (kind) {
        case Kind::short_cycle: {
            std::string out = "directed cycle of length " + std::to_string(cycle.size()) + ":";
            for (const auto& v : cycle) out += " " + v;
            return out;
        }
        case Kind::pair_beyond_nstar:
            return "no path of length <= nstar between " + p + " and " + q;
        case Kind::illegal_class:
            return "pair (" + p + "," + q + ") realizes a directed distance of exactly nstar "
                   "with an odd bound; no legal class";
    }
    return {};
}

DdExtractResult dd_from_digraph(std::span<const PointId> vertices,
                                const std::vector<std::pair<int, int>>& edges,
                                std::span<const std::size_t> point_indices, int bound) {
    if (auto cycle = shortest_directed_cycle(vertices.size(), edges, bound)) {
        DdExtractError error;
        error.kind = DdExtractError::Kind::short_cycle;
        for (int v : *cycle) error.cycle.push_back(vertices[static_cast<std::size_t>(v)]);
        return error;
    }
    const auto adjacency = out_adjacency(vertices.size(), edges);
    std::vector<std::vector<int>> dist;
    dist.reserve(point_indices.size());
    for (std::size_t p : point_indices) dist.push_back(bfs_distances(adjacency, static_cast<int>(p)));

    const int nstar = default_nstar(bound);
    const bool odd = bound % 2 == 1;
    std::vector<PointId> names;
    for (std::size_t p : point_indices) names.push_back(vertices[p]);
    std::vector<DirectedEdgeSpec> specs;
    for (std::size_t i = 0; i < point_indices.size(); ++i)
        for (std::size_t j = i + 1; j < point_indices.size(); ++j) {
            const int fwd = dist[i][point_indices[j]];
            const int bwd = dist[j][point_indices[i]];
            if (std::min(fwd, bwd) > nstar) {
                DdExtractError error;
                error.kind = DdExtractError::Kind::pair_beyond_nstar;
                error.p = names[i];
                error.q = names[j];
                return error;
            }
            DirectedEdgeSpec spec;
            if (odd && fwd == nstar && bwd == nstar) {
                spec = {names[i], names[j], nstar, true};
            } else {
                const bool forward = fwd <= bwd;
                const int d = forward ? fwd : bwd;
                if (odd && d == nstar) {
                    DdExtractError error;
                    error.kind = DdExtractError::Kind::illegal_class;
                    error.p = names[i];
                    error.q = names[j];
                    return error;
                }
                spec = forward ? DirectedEdgeSpec{names[i], names[j], d, false}
                               : DirectedEdgeSpec{names[j], names[i], d, false};
            }
            specs.push_back(std::move(spec));
        }
    return DirectedDistanceStructure::make(bound, std::move(names), specs);
}

DdExtractResult dd_from_digraph(const RealizedDigraph& g, int bound) {
    std::vector<std::size_t> points(g.original_count);
    for (std::size_t i = 0; i < g.original_count; ++i) points[i] = i;
    return dd_from_digraph(g.vertices, g.edges, points, bound);
}

namespace {

// Through-base chain closure for a pair of structures (or one ambient
// structure restricted to two sets): arcs inside `left` and inside `right`
// only, so every left-to-right chain passes the base.
struct SetClosure {
    WeightedClosure closure;
    SetClosure(const DirectedDistanceStructure& s, const std::vector<bool>& in_left,
               const std::vector<bool>& in_right, int cap)
        : closure(s.point_count(), cap) {
        for (std::size_t i = 0; i < s.point_count(); ++i)
            for (std::size_t j = i + 1; j < s.point_count(); ++j) {
                const bool inside =
                    (in_left[i] && in_left[j]) || (in_right[i] && in_right[j]);
                if (!inside) continue;
                const PairAssignment& a = s.assignment(i, j);
                switch (a.kind) {
                    case PairKind::forward: closure.arc(i, j, a.length); break;
                    case PairKind::backward: closure.arc(j, i, a.length); break;
                    case PairKind::both:
                        closure.arc(i, j, a.length);
                        closure.arc(j, i, a.length);
                        break;
                }
            }
        closure.run();
    }
};

std::vector<bool> membership(const DirectedDistanceStructure& s, std::span<const PointId> ids) {
    std::vector<bool> mask(s.point_count(), false);
    for (const auto& id : ids) mask[s.require_index(id)] = true;
    return mask;
}

}  // namespace

DirectedDistanceStructure dd_free_amalgam(const DirectedDistanceStructure& left,
                                          const DirectedDistanceStructure& right,
                                          std::span<const PointId> base) {
    if (left.bound() != right.bound()) throw DomainError("amalgamation requires equal bounds");
    const int n = left.bound();
    const int nstar = left.nstar();
    const bool odd = n % 2 == 1;

    std::vector<PointId> base_sorted(base.begin(), base.end());
    std::sort(base_sorted.begin(), base_sorted.end());
    base_sorted.erase(std::unique(base_sorted.begin(), base_sorted.end()), base_sorted.end());

    // agreement on the base and disjointness elsewhere
    for (const auto& b1 : base_sorted)
        for (const auto& b2 : base_sorted) {
            if (b1 >= b2) continue;
            const auto li = left.require_index(b1), lj = left.require_index(b2);
            const auto ri = right.require_index(b1), rj = right.require_index(b2);
            const PairAssignment la = left.assignment(li, lj);
            PairAssignment ra = right.assignment(ri, rj);
            // normalize orientation to the left's index order
            if (((li < lj) != (ri < rj)) && ra.kind != PairKind::both)
                ra.kind = ra.kind == PairKind::forward ? PairKind::backward : PairKind::forward;
            if (la.kind != ra.kind || la.length != ra.length)
                throw DomainError("sides disagree on the base pair (" + b1 + "," + b2 + ")");
        }
    for (const auto& p : left.points())
        if (!std::binary_search(base_sorted.begin(), base_sorted.end(), p) &&
            right.index_of(p))
            throw DomainError("sides share the non-base point " + p);
    if (!dd_validate(left).ok()) throw DomainError("left structure inconsistent");
    if (!dd_validate(right).ok()) throw DomainError("right structure inconsistent");

    // assemble the union structure with cross pairs pending
    std::vector<PointId> points = left.points();
    for (const auto& p : right.points())
        if (!std::binary_search(base_sorted.begin(), base_sorted.end(), p)) points.push_back(p);

    std::vector<DirectedEdgeSpec> specs = left.pair_specs();
    for (auto& spec : right.pair_specs()) {
        const bool pf = std::binary_search(base_sorted.begin(), base_sorted.end(), spec.from);
        const bool pt = std::binary_search(base_sorted.begin(), base_sorted.end(), spec.to);
        if (pf && pt) continue;  // already present via the left side
        specs.push_back(std::move(spec));
    }

    // chain closure over the union arcs (all arcs are within one side here)
    struct Arc {
        std::size_t from, to;
        int weight;
    };
    std::vector<PointId> sorted_points = points;
    std::sort(sorted_points.begin(), sorted_points.end());
    auto index = [&](const PointId& id) {
        return static_cast<std::size_t>(
            std::lower_bound(sorted_points.begin(), sorted_points.end(), id) -
            sorted_points.begin());
    };
    WeightedClosure closure(sorted_points.size(), nstar + 1);
    for (const auto& spec : specs) {
        closure.arc(index(spec.from), index(spec.to), spec.length);
        if (spec.bidirected) closure.arc(index(spec.to), index(spec.from), spec.length);
    }
    closure.run();

    for (const auto& a : left.points()) {
        if (std::binary_search(base_sorted.begin(), base_sorted.end(), a)) continue;
        for (const auto& b : right.points()) {
            if (std::binary_search(base_sorted.begin(), base_sorted.end(), b)) continue;
            const int fwd = closure.at(index(a), index(b));
            const int bwd = closure.at(index(b), index(a));
            const int best = std::min(fwd, bwd);
            DirectedEdgeSpec spec;
            if (best <= nstar) {
                if (odd && best == nstar) {
                    spec = {a, b, nstar, true};
                } else if (fwd <= bwd) {
                    spec = {a, b, best, false};
                } else {
                    spec = {b, a, best, false};
                }
            } else if (odd) {
                spec = {a, b, nstar, true};
            } else {
                // free choice of direction at nstar; smaller name wins
                spec = a < b ? DirectedEdgeSpec{a, b, nstar, false}
                             : DirectedEdgeSpec{b, a, nstar, false};
            }
            specs.push_back(std::move(spec));
        }
    }
    return DirectedDistanceStructure::make(n, std::move(points), specs);
}

bool dd_distance_at_least(const DirectedDistanceStructure& ambient,
                          std::span<const PointId> base, std::span<const PointId> left,
                          std::span<const PointId> right, int k) {
    const int nstar = ambient.nstar();
    if (k < 1 || k > nstar) throw DomainError("k must lie in [1, nstar]");
    const std::vector<bool> in_left = membership(ambient, left);
    const std::vector<bool> in_right = membership(ambient, right);
    const std::vector<bool> in_base = membership(ambient, base);
    for (std::size_t i = 0; i < ambient.point_count(); ++i) {
        if (in_base[i] && !(in_left[i] && in_right[i]))
            throw DomainError("base must sit inside both sets");
        if (in_left[i] && in_right[i] && !in_base[i])
            throw DomainError("sets overlap beyond the base at point " + ambient.point(i));
    }

    const SetClosure chains(ambient, in_left, in_right, nstar + 1);
    for (std::size_t a = 0; a < ambient.point_count(); ++a) {
        if (!in_left[a] || in_base[a]) continue;
        for (std::size_t b = 0; b < ambient.point_count(); ++b) {
            if (!in_right[b] || in_base[b]) continue;
            const int fwd = chains.closure.at(a, b);
            const int bwd = chains.closure.at(b, a);
            const PairAssignment& assigned = ambient.assignment(a, b);
            if (std::min(fwd, bwd) < k) {
                // must match the minimal chain in length and direction
                if (fwd == bwd) return false;  // both directions would be forced
                const std::size_t from = fwd < bwd ? a : b;
                const std::size_t to = fwd < bwd ? b : a;
                const auto claim = ambient.forward_claim(from, to);
                if (!claim || *claim != std::min(fwd, bwd)) return false;
                if (assigned.kind == PairKind::both) return false;
            } else {
                if (assigned.length < k) return false;
            }
        }
    }
    return true;
}

OddGirthGraph OddGirthGraph::make(int bound, std::vector<PointId> vertices,
                                  const std::vector<std::pair<PointId, PointId>>& edges) {
    if (bound < 1 || bound % 2 == 0) throw InputError("odd-girth bound must be odd");
    OddGirthGraph g;
    g.bound = bound;
    g.vertices = std::move(vertices);
    std::sort(g.vertices.begin(), g.vertices.end());
    for (std::size_t i = 1; i < g.vertices.size(); ++i)
        if (g.vertices[i - 1] == g.vertices[i])
            throw InputError("duplicate vertex name: " + g.vertices[i]);
    auto index = [&](const PointId& id) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), id);
        if (it == g.vertices.end() || *it != id) throw InputError("unknown vertex: " + id);
        return static_cast<int>(it - g.vertices.begin());
    };
    for (const auto& [u, v] : edges) {
        int a = index(u), b = index(v);
        if (a == b) throw InputError("self loop at " + u);
        if (a > b) std::swap(a, b);
        g.edges.push_back({a, b});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

OddCycleReport og_validate(const OddGirthGraph& g) {
    OddCycleReport report;
    if (auto cycle = shortest_odd_cycle(g.vertices.size(), g.edges, g.bound)) {
        std::vector<PointId> names;
        for (int v : *cycle) names.push_back(g.vertices[static_cast<std::size_t>(v)]);
        report.cycle = std::move(names);
    }
    return report;
}

std::string OgRealizeFailure::describe() const {
    if (kind == Kind::odd_cycle) {
        std::string out = "odd cycle of length " + std::to_string(cycle.size()) + ":";
        for (const auto& v : cycle) out += " " + v;
        return out;
    }
    return "shortest path between " + p + " and " + q + " is " + std::to_string(actual) +
           ", assigned " + std::to_string(expected);
}

std::variant<OddGirthGraph, OgRealizeFailure> og_realize(const PartialDistanceSpec& assignment,
                                                         int bound) {
    if (bound < 1 || bound % 2 == 0) throw DomainError("odd-girth bound must be odd");
    const int nstar = default_nstar(bound);
    for (const auto& a : assignment.assignments())
        if (a.value > nstar)
            throw DomainError("assigned distance " + std::to_string(a.value) + " exceeds nstar = " +
                              std::to_string(nstar));

    GadgetBuilder builder;
    for (const auto& p : assignment.points()) {
        builder.taken.insert(p);
        builder.vertices.push_back(p);
    }
    auto index = [&](const PointId& id) {
        return static_cast<int>(std::lower_bound(assignment.points().begin(),
                                                 assignment.points().end(), id) -
                                assignment.points().begin());
    };
    for (const auto& a : assignment.assignments()) {
        const std::string tag = a.p + "~" + a.q;
        builder.path(index(a.p), index(a.q), a.value, tag + ".s");
        builder.path(index(a.p), index(a.q), bound + 1 - a.value, tag + ".l");
    }

    std::vector<std::pair<PointId, PointId>> named_edges;
    for (const auto& [u, v] : builder.edges)
        named_edges.push_back({builder.vertices[static_cast<std::size_t>(u)],
                               builder.vertices[static_cast<std::size_t>(v)]});
    OddGirthGraph graph = OddGirthGraph::make(bound, builder.vertices, named_edges);

    const OddCycleReport cycles = og_validate(graph);
    if (!cycles.ok()) {
        OgRealizeFailure failure{OgRealizeFailure::Kind::odd_cycle, graph, *cycles.cycle, {}, {},
                                 0, 0};
        return failure;
    }
    const auto adjacency = undirected_adjacency(graph.vertices.size(), graph.edges);
    for (const auto& a : assignment.assignments()) {
        auto it = std::lower_bound(graph.vertices.begin(), graph.vertices.end(), a.p);
        const int src = static_cast<int>(it - graph.vertices.begin());
        const auto dist = bfs_distances(adjacency, src);
        auto jt = std::lower_bound(graph.vertices.begin(), graph.vertices.end(), a.q);
        const int actual = dist[static_cast<std::size_t>(jt - graph.vertices.begin())];
        if (actual != a.value) {
            OgRealizeFailure failure{OgRealizeFailure::Kind::distance_mismatch, graph,
                                     {},      a.p,
                                     a.q,     a.value,
                                     actual};
            return failure;
        }
    }
    return graph;
}

}  // namespace amalgam
