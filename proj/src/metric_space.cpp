#include "amalgam/metric_space.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace amalgam {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t point_count) {
    if (i > j) std::swap(i, j);
    // pairs (i, i+1..P-1) start after all pairs with smaller first coordinate
    return i * point_count - i * (i + 1) / 2 + (j - i - 1);
}

std::size_t pair_count(std::size_t point_count) {
    return point_count * (point_count - 1) / 2;
}

std::string MetricViolation::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::value_out_of_range:
            out << "d(" << p << "," << q << ") = " << value << " outside {1..n}";
            break;
        case Kind::triangle:
            out << "triangle on (" << p << "," << q << "," << r << "): d(" << p << "," << r
                << ") > d(" << p << "," << q << ") + d(" << q << "," << r << ")";
            break;
    }
    return out.str();
}

std::string ValidationReport::describe() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.describe();
    }
    return out;
}

ValidationReport validate_metric(const DistanceCandidate& candidate) {
    const std::size_t count = candidate.points.size();
    if (candidate.values.size() != pair_count(count))
        throw DomainError("validate_metric: pair mapping is not total");

    ValidationReport report;
    auto value = [&](std::size_t i, std::size_t j) {
        return candidate.values[pair_index(i, j, count)];
    };
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            const int d = value(i, j);
            if (d < 1 || d > candidate.bound)
                report.violations.push_back({MetricViolation::Kind::value_out_of_range,
                                             candidate.points[i], candidate.points[j], {}, d});
        }
    // d(p,r) <= d(p,q) + d(q,r) for each unordered triple and each choice of
    // the long side; one minimal witness per violated inequality.
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            for (std::size_t k = j + 1; k < count; ++k) {
                const int dij = value(i, j), dik = value(i, k), djk = value(j, k);
                if (dij > dik + djk)
                    report.violations.push_back({MetricViolation::Kind::triangle,
                                                 candidate.points[i], candidate.points[k],
                                                 candidate.points[j], dij});
                if (dik > dij + djk)
                    report.violations.push_back({MetricViolation::Kind::triangle,
                                                 candidate.points[i], candidate.points[j],
                                                 candidate.points[k], dik});
                if (djk > dij + dik)
                    report.violations.push_back({MetricViolation::Kind::triangle,
                                                 candidate.points[j], candidate.points[i],
                                                 candidate.points[k], djk});
            }
    return report;
}

namespace {

// Sort point names, remember the permutation. Throws on duplicates.
std::vector<std::size_t> sorted_order(std::vector<PointId>& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    std::vector<PointId> sorted;
    sorted.reserve(points.size());
    for (std::size_t idx : order) sorted.push_back(points[idx]);
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1] == sorted[i]) throw DomainError("duplicate point name: " + sorted[i]);
    points = std::move(sorted);
    return order;
}

}  // namespace

std::variant<BoundedMetricSpace, ValidationReport> BoundedMetricSpace::make(
    DistanceCandidate candidate) {
    ValidationReport report = validate_metric(candidate);
    if (!report.ok()) return report;

    std::vector<PointId> points = candidate.points;
    const std::vector<std::size_t> order = sorted_order(points);
    const std::size_t count = points.size();
    std::vector<int> matrix(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            const int d = candidate.values[pair_index(order[i], order[j], count)];
            matrix[i * count + j] = d;
            matrix[j * count + i] = d;
        }
    return make_unchecked(candidate.bound, std::move(points), std::move(matrix));
}

BoundedMetricSpace BoundedMetricSpace::make_unchecked(int bound, std::vector<PointId> points,
                                                      std::vector<int> matrix) {
    BoundedMetricSpace space;
    space.bound_ = bound;
    space.points_ = std::move(points);
    space.matrix_ = std::move(matrix);
    return space;
}

std::optional<std::size_t> BoundedMetricSpace::index_of(const PointId& id) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), id);
    if (it == points_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

std::size_t BoundedMetricSpace::require_index(const PointId& id) const {
    auto idx = index_of(id);
    if (!idx) throw DomainError("unknown point: " + id);
    return *idx;
}

int BoundedMetricSpace::dist_by_id(const PointId& p, const PointId& q) const {
    return dist(require_index(p), require_index(q));
}

BoundedMetricSpace BoundedMetricSpace::restrict_to(std::span<const std::size_t> indices) const {
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::size_t count = sorted.size();
    std::vector<PointId> points;
    points.reserve(count);
    for (std::size_t idx : sorted) points.push_back(points_[idx]);
    std::vector<int> matrix(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) matrix[i * count + j] = dist(sorted[i], sorted[j]);
    return make_unchecked(bound_, std::move(points), std::move(matrix));
}

DistanceCandidate BoundedMetricSpace::to_candidate() const {
    DistanceCandidate candidate;
    candidate.bound = bound_;
    candidate.points = points_;
    candidate.values.resize(pair_count(points_.size()));
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            candidate.values[pair_index(i, j, points_.size())] = dist(i, j);
    return candidate;
}

PartialDistanceSpec PartialDistanceSpec::make(int bound, std::vector<PointId> points,
                                              const std::vector<Assignment>& assigned) {
    if (bound < 1) throw InputError("bound must be at least 1");
    PartialDistanceSpec spec;
    spec.bound_ = bound;
    spec.points_ = std::move(points);
    std::sort(spec.points_.begin(), spec.points_.end());
    for (std::size_t i = 1; i < spec.points_.size(); ++i)
        if (spec.points_[i - 1] == spec.points_[i])
            throw InputError("duplicate point name: " + spec.points_[i]);
    spec.values_.assign(pair_count(spec.points_.size()), kUnassigned);

    auto index_of = [&](const PointId& id) -> std::size_t {
        auto it = std::lower_bound(spec.points_.begin(), spec.points_.end(), id);
        if (it == spec.points_.end() || *it != id) throw InputError("unknown point: " + id);
        return static_cast<std::size_t>(it - spec.points_.begin());
    };
    for (const auto& a : assigned) {
        if (a.p == a.q) throw InputError("pair must join distinct points: " + a.p);
        if (a.value < 1 || a.value > bound)
            throw InputError("distance " + std::to_string(a.value) + " for (" + a.p + "," + a.q +
                             ") outside {1.." + std::to_string(bound) + "}");
        const std::size_t idx = pair_index(index_of(a.p), index_of(a.q), spec.points_.size());
        if (spec.values_[idx] != kUnassigned)
            throw InputError("pair (" + a.p + "," + a.q + ") assigned twice");
        spec.values_[idx] = a.value;
    }
    return spec;
}

PartialDistanceSpec PartialDistanceSpec::from_space(const BoundedMetricSpace& space) {
    PartialDistanceSpec spec;
    spec.bound_ = space.bound();
    spec.points_ = space.points();
    spec.values_.resize(pair_count(spec.points_.size()));
    for (std::size_t i = 0; i < spec.points_.size(); ++i)
        for (std::size_t j = i + 1; j < spec.points_.size(); ++j)
            spec.values_[pair_index(i, j, spec.points_.size())] = space.dist(i, j);
    return spec;
}

int PartialDistanceSpec::value(std::size_t i, std::size_t j) const {
    return values_[pair_index(i, j, points_.size())];
}

bool PartialDistanceSpec::is_total() const {
    return std::find(values_.begin(), values_.end(), kUnassigned) == values_.end();
}

std::size_t PartialDistanceSpec::assigned_count() const {
    return values_.size() - std::count(values_.begin(), values_.end(), kUnassigned);
}

std::vector<PartialDistanceSpec::Assignment> PartialDistanceSpec::assignments() const {
    std::vector<Assignment> out;
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (value(i, j) != kUnassigned) out.push_back({points_[i], points_[j], value(i, j)});
    return out;
}

std::string CompletionCertificate::describe() const {
    std::string out = "chain ";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += "-";
        out += chain[i];
    }
    out += " of total " + std::to_string(chain_total) + " beats assigned d(" + chain.front() +
           "," + chain.back() + ") = " + std::to_string(assigned);
    return out;
}

CompletionResult min_plus_complete(const PartialDistanceSpec& spec) {
    const std::size_t count = spec.point_count();
    const int bound = spec.bound();
    constexpr int kInf = std::numeric_limits<int>::max() / 4;

    // Min-plus closure over the assigned values, with next-hop tracking so a
    // violating chain can be reconstructed.
    std::vector<int> closure(count * count, kInf);
    std::vector<int> via(count * count, -1);
    for (std::size_t i = 0; i < count; ++i) closure[i * count + i] = 0;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (int v = spec.value(i, j); v != PartialDistanceSpec::kUnassigned) {
                closure[i * count + j] = v;
                closure[j * count + i] = v;
            }
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                const int through = closure[i * count + k] + closure[k * count + j];
                if (through < closure[i * count + j]) {
                    closure[i * count + j] = through;
                    via[i * count + j] = static_cast<int>(k);
                }
            }

    // A shorter chain between assigned endpoints certifies infeasibility.
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            const int assigned = spec.value(i, j);
            if (assigned == PartialDistanceSpec::kUnassigned) continue;
            if (closure[i * count + j] >= assigned) continue;
            CompletionCertificate certificate;
            certificate.assigned = assigned;
            certificate.chain_total = closure[i * count + j];
            // expand the via tree into the chain i .. j
            std::vector<std::size_t> stack{i, j};
            std::vector<PointId> chain;
            std::vector<std::pair<std::size_t, std::size_t>> segments{{i, j}};
            chain.push_back(spec.points()[i]);
            while (!segments.empty()) {
                auto [a, b] = segments.back();
                segments.pop_back();
                const int mid = via[a * count + b];
                if (mid < 0) {
                    chain.push_back(spec.points()[b]);
                } else {
                    segments.push_back({static_cast<std::size_t>(mid), b});
                    segments.push_back({a, static_cast<std::size_t>(mid)});
                }
            }
            certificate.chain = std::move(chain);
            return certificate;
        }

    std::vector<int> matrix(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            int v = spec.value(i, j);
            if (v == PartialDistanceSpec::kUnassigned)
                v = std::min(bound, closure[i * count + j]);  // empty closure caps at n
            matrix[i * count + j] = v;
            matrix[j * count + i] = v;
        }
    return BoundedMetricSpace::make_unchecked(bound, spec.points(), std::move(matrix));
}

bool EmbeddingWitness::check() const {
    return is_isometric_extension(source, target, mapping);
}

bool is_isometric_extension(const BoundedMetricSpace& sub, const BoundedMetricSpace& sup,
                            const std::vector<std::pair<PointId, PointId>>& mapping) {
    std::vector<std::size_t> image(sub.point_count());
    std::vector<bool> mapped(sub.point_count(), false);
    for (const auto& [from, to] : mapping) {
        const auto src = sub.index_of(from);
        if (!src) throw DomainError("mapping names unknown source point: " + from);
        const auto dst = sup.index_of(to);
        if (!dst) return false;
        image[*src] = *dst;
        mapped[*src] = true;
    }
    for (std::size_t i = 0; i < sub.point_count(); ++i)
        if (!mapped[i]) throw DomainError("unmapped point: " + sub.point(i));

    for (std::size_t i = 0; i < sub.point_count(); ++i)
        for (std::size_t j = i + 1; j < sub.point_count(); ++j) {
            if (image[i] == image[j]) return false;  // not injective
            if (sub.dist(i, j) != sup.dist(image[i], image[j])) return false;
        }
    return true;
}

}  // namespace amalgam
