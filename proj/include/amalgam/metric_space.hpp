#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amalgam/errors.hpp"

namespace amalgam {

using PointId = std::string;

// Unordered pairs {i,j} of a P-point set are laid out row-major:
// (0,1), (0,2), ..., (0,P-1), (1,2), ... Enumeration order and the canonical
// serialization both follow this layout.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t point_count);
std::size_t pair_count(std::size_t point_count);

// Default half-bound: ceil(n / 2).
constexpr int default_nstar(int bound) { return (bound + 1) / 2; }

struct MetricViolation {
    enum class Kind {
        value_out_of_range,  // d(p,q) outside {1..n}
        triangle,            // d(p,r) > d(p,q) + d(q,r)
    };
    Kind kind;
    PointId p, q, r;
    int value = 0;
    std::string describe() const;
};

struct ValidationReport {
    std::vector<MetricViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

// Raw candidate for validation: a total assignment of integers to unordered
// pairs, values[pair_index(i,j,P)] with points in the given order.
struct DistanceCandidate {
    int bound = 0;
    std::vector<PointId> points;
    std::vector<int> values;
};

ValidationReport validate_metric(const DistanceCandidate& candidate);

// A finite metric space with integer distances in {0..n}. Points are stored
// sorted; distances are a full symmetric matrix with zero diagonal. The type
// only ever holds data that passed validate_metric (or was produced by a
// construction whose output is validated by its own tests).
class BoundedMetricSpace {
  public:
    static std::variant<BoundedMetricSpace, ValidationReport> make(DistanceCandidate candidate);

    // Trusted constructor for internal use: `matrix` is row-major
    // points.size() x points.size(), points must be sorted and distinct.
    static BoundedMetricSpace make_unchecked(int bound, std::vector<PointId> points,
                                             std::vector<int> matrix);

    int bound() const { return bound_; }
    std::size_t point_count() const { return points_.size(); }
    const std::vector<PointId>& points() const { return points_; }
    const PointId& point(std::size_t i) const { return points_[i]; }
    std::optional<std::size_t> index_of(const PointId& id) const;
    std::size_t require_index(const PointId& id) const;  // throws DomainError

    int dist(std::size_t i, std::size_t j) const { return matrix_[i * points_.size() + j]; }
    int dist_by_id(const PointId& p, const PointId& q) const;

    // Induced subspace on a subset of points (given by index, any order).
    BoundedMetricSpace restrict_to(std::span<const std::size_t> indices) const;

    DistanceCandidate to_candidate() const;

    bool operator==(const BoundedMetricSpace&) const = default;

  private:
    BoundedMetricSpace() = default;
    int bound_ = 0;
    std::vector<PointId> points_;
    std::vector<int> matrix_;
};

// A partial assignment of distances in {1..n} to unordered pairs; value 0
// marks an unassigned pair. Candidate input for min_plus_complete.
class PartialDistanceSpec {
  public:
    static constexpr int kUnassigned = 0;

    struct Assignment {
        PointId p, q;
        int value;
    };

    // Throws InputError on duplicate points/pairs, unknown names or values
    // outside {1..n}.
    static PartialDistanceSpec make(int bound, std::vector<PointId> points,
                                    const std::vector<Assignment>& assigned);
    static PartialDistanceSpec from_space(const BoundedMetricSpace& space);

    int bound() const { return bound_; }
    std::size_t point_count() const { return points_.size(); }
    const std::vector<PointId>& points() const { return points_; }
    int value(std::size_t i, std::size_t j) const;  // 0 = unassigned
    bool is_total() const;
    std::size_t assigned_count() const;
    std::vector<Assignment> assignments() const;  // in pair order

  private:
    int bound_ = 0;
    std::vector<PointId> points_;
    std::vector<int> values_;  // by pair_index
};

// Witness for an infeasible completion: a chain whose assigned lengths sum
// below the assigned distance of its endpoints. A two-step chain is a
// violated triangle.
struct CompletionCertificate {
    std::vector<PointId> chain;  // chain.front() .. chain.back()
    int chain_total = 0;
    int assigned = 0;  // assigned distance between the endpoints
    std::string describe() const;
};

using CompletionResult = std::variant<BoundedMetricSpace, CompletionCertificate>;

// Completes a partial spec to a total bounded metric: every unassigned pair
// receives min(n, min-plus closure over assigned values), pairs with no
// connecting chain receive n. Returns a certificate when the assigned values
// admit no extension.
CompletionResult min_plus_complete(const PartialDistanceSpec& spec);

struct EmbeddingWitness {
    BoundedMetricSpace source, target;
    std::vector<std::pair<PointId, PointId>> mapping;
    bool check() const;
};

// True iff `mapping` sends sub injectively into sup preserving distances.
// Throws DomainError when some point of sub is unmapped.
bool is_isometric_extension(const BoundedMetricSpace& sub, const BoundedMetricSpace& sup,
                            const std::vector<std::pair<PointId, PointId>>& mapping);

}  // namespace amalgam
