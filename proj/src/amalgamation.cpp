#include "amalgam/amalgamation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace amalgam {

namespace {

// BoundedMetricSpace adapter for the kernel templates.
struct SpaceView {
    const BoundedMetricSpace& space;
    int at(int i, int j) const {
        return space.dist(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
};

template <typename M>
bool at_least_impl(const M& m, std::span<const int> base, std::span<const int> xs,
                   std::span<const int> ys, int k, std::pair<int, int>* witness) {
    for (int x : xs)
        for (int y : ys) {
            const int d = m.at(x, y);
            if (d >= k) continue;
            if (d == cross_bounds(m, base, x, y).lower_sum) continue;
            if (witness) *witness = {x, y};
            return false;
        }
    return true;
}

template <typename M>
bool at_most_impl(const M& m, std::span<const int> base, std::span<const int> xs,
                  std::span<const int> ys, int k, std::pair<int, int>* witness) {
    for (int x : xs)
        for (int y : ys) {
            const int d = m.at(x, y);
            if (d <= k) continue;
            if (d == cross_bounds(m, base, x, y).upper_gap) continue;
            if (witness) *witness = {x, y};
            return false;
        }
    return true;
}

std::vector<std::size_t> indices_of(const BoundedMetricSpace& space,
                                    const std::vector<PointId>& ids) {
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(space.require_index(id));
    return out;
}

std::vector<int> as_int(const std::vector<std::size_t>& v) {
    return std::vector<int>(v.begin(), v.end());
}

std::vector<PointId> sorted_unique(std::vector<PointId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

// set difference on sorted id vectors
std::vector<PointId> minus(const std::vector<PointId>& xs, const std::vector<PointId>& ys) {
    std::vector<PointId> out;
    std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(out));
    return out;
}

BoundedMetricSpace space_from_dense(int bound, const std::vector<PointId>& names,
                                    const DistMatrix& m) {
    std::vector<std::size_t> order(names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    std::vector<PointId> sorted;
    sorted.reserve(names.size());
    for (std::size_t idx : order) sorted.push_back(names[idx]);
    const std::size_t count = names.size();
    std::vector<int> matrix(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            matrix[i * count + j] = m.at(static_cast<int>(order[i]), static_cast<int>(order[j]));
    return BoundedMetricSpace::make_unchecked(bound, std::move(sorted), std::move(matrix));
}

int validated_nstar(int nstar, int bound) {
    if (nstar == 0) return default_nstar(bound);
    if (nstar < default_nstar(bound) || nstar > bound)
        throw DomainError("nstar " + std::to_string(nstar) + " outside [" +
                          std::to_string(default_nstar(bound)) + ".." + std::to_string(bound) +
                          "]");
    return nstar;
}

}  // namespace

DistMatrix to_dense(const BoundedMetricSpace& space) {
    if (space.point_count() > static_cast<std::size_t>(kDenseCap))
        throw DomainError("space too large for dense kernels");
    DistMatrix m;
    m.count = static_cast<int>(space.point_count());
    for (int i = 0; i < m.count; ++i)
        for (int j = i + 1; j < m.count; ++j) m.set(i, j, space.dist(i, j));
    return m;
}

int cross_value(const CrossBounds& bounds, int nstar, CrossRule* rule) {
    if (bounds.lower_sum < nstar) {
        if (rule) *rule = CrossRule::min_sum;
        return bounds.lower_sum;
    }
    if (bounds.upper_gap > nstar) {
        if (rule) *rule = CrossRule::max_gap;
        return bounds.upper_gap;
    }
    if (rule) *rule = CrossRule::fallback;
    return nstar;
}

void amalgam_fill(const DistMatrix& left, const DistMatrix& right, int base_count, int nstar,
                  DistMatrix& out, CrossRule* rules) {
    const int left_extra = left.count - base_count;
    const int right_extra = right.count - base_count;
    out.count = base_count + left_extra + right_extra;

    for (int i = 0; i < left.count; ++i)
        for (int j = i + 1; j < left.count; ++j) out.set(i, j, left.at(i, j));
    for (int q = 0; q < right_extra; ++q) {
        const int oq = base_count + left_extra + q;
        for (int c = 0; c < base_count; ++c) out.set(c, oq, right.at(c, base_count + q));
        for (int q2 = q + 1; q2 < right_extra; ++q2)
            out.set(oq, base_count + left_extra + q2, right.at(base_count + q, base_count + q2));
    }

    std::array<int, kDenseCap> base_idx;
    for (int c = 0; c < base_count; ++c) base_idx[static_cast<std::size_t>(c)] = c;
    const std::span<const int> base(base_idx.data(), static_cast<std::size_t>(base_count));
    for (int p = 0; p < left_extra; ++p)
        for (int q = 0; q < right_extra; ++q) {
            const CrossBounds bounds = cross_bounds(out, base, base_count + p,
                                                    base_count + left_extra + q);
            CrossRule rule;
            const int value = cross_value(bounds, nstar, &rule);
            out.set(base_count + p, base_count + left_extra + q, value);
            if (rules) rules[static_cast<std::size_t>(p) * right_extra + q] = rule;
        }
}

std::optional<std::array<int, 3>> dense_first_violation(const DistMatrix& m, int bound) {
    for (int i = 0; i < m.count; ++i)
        for (int j = i + 1; j < m.count; ++j)
            if (m.at(i, j) < 1 || m.at(i, j) > bound) return std::array<int, 3>{i, j, -1};
    for (int i = 0; i < m.count; ++i)
        for (int j = i + 1; j < m.count; ++j)
            for (int k = j + 1; k < m.count; ++k) {
                const int a = m.at(i, j), b = m.at(i, k), c = m.at(j, k);
                if (a > b + c) return std::array<int, 3>{i, k, j};
                if (b > a + c) return std::array<int, 3>{i, j, k};
                if (c > a + b) return std::array<int, 3>{j, i, k};
            }
    return std::nullopt;
}

bool dense_distance_at_least(const DistMatrix& m, std::span<const int> base,
                             std::span<const int> xs, std::span<const int> ys, int k,
                             std::pair<int, int>* witness) {
    return at_least_impl(m, base, xs, ys, k, witness);
}

bool dense_distance_at_most(const DistMatrix& m, std::span<const int> base,
                            std::span<const int> xs, std::span<const int> ys, int k,
                            std::pair<int, int>* witness) {
    return at_most_impl(m, base, xs, ys, k, witness);
}

AmalgamationTriple AmalgamationTriple::make(BoundedMetricSpace base, BoundedMetricSpace left,
                                            BoundedMetricSpace right, int nstar,
                                            std::vector<std::pair<PointId, PointId>> into_left,
                                            std::vector<std::pair<PointId, PointId>> into_right) {
    if (base.bound() != left.bound() || base.bound() != right.bound())
        throw DomainError("amalgamation requires equal bounds");
    AmalgamationTriple triple;
    triple.nstar = validated_nstar(nstar, base.bound());

    auto normalize = [&](const BoundedMetricSpace& side,
                         std::vector<std::pair<PointId, PointId>> embedding, const char* name) {
        if (embedding.empty())
            for (const auto& p : base.points()) embedding.push_back({p, p});
        if (embedding.size() != base.point_count())
            throw DomainError(std::string(name) + " embedding must cover the base");
        if (!is_isometric_extension(base, side, embedding))
            throw DomainError(std::string(name) + " embedding is not isometric");
        return embedding;
    };
    triple.into_left = normalize(left, std::move(into_left), "left");
    triple.into_right = normalize(right, std::move(into_right), "right");
    triple.base = std::move(base);
    triple.left = std::move(left);
    triple.right = std::move(right);
    return triple;
}

namespace {

struct SidePlan {
    std::vector<std::size_t> embedded;  // base index -> side index
    std::vector<std::size_t> extras;    // side indices not in the embedded image
};

SidePlan plan_side(const BoundedMetricSpace& base, const BoundedMetricSpace& side,
                   const std::vector<std::pair<PointId, PointId>>& embedding) {
    SidePlan plan;
    plan.embedded.resize(base.point_count());
    std::vector<bool> used(side.point_count(), false);
    for (const auto& [from, to] : embedding) {
        const std::size_t b = base.require_index(from);
        const std::size_t s = side.require_index(to);
        plan.embedded[b] = s;
        used[s] = true;
    }
    for (std::size_t i = 0; i < side.point_count(); ++i)
        if (!used[i]) plan.extras.push_back(i);
    return plan;
}

DistMatrix side_matrix(const BoundedMetricSpace& base, const BoundedMetricSpace& side,
                       const SidePlan& plan) {
    DistMatrix m;
    m.count = static_cast<int>(base.point_count() + plan.extras.size());
    if (m.count > kDenseCap) throw DomainError("amalgamation input too large");
    const int bc = static_cast<int>(base.point_count());
    for (int i = 0; i < bc; ++i)
        for (int j = i + 1; j < bc; ++j) m.set(i, j, base.dist(i, j));
    for (std::size_t p = 0; p < plan.extras.size(); ++p) {
        for (int c = 0; c < bc; ++c)
            m.set(c, bc + static_cast<int>(p), side.dist(plan.embedded[c], plan.extras[p]));
        for (std::size_t q = p + 1; q < plan.extras.size(); ++q)
            m.set(bc + static_cast<int>(p), bc + static_cast<int>(q),
                  side.dist(plan.extras[p], plan.extras[q]));
    }
    return m;
}

PointId fresh_name(PointId candidate, const std::set<PointId>& taken) {
    while (taken.count(candidate)) candidate += "'";
    return candidate;
}

}  // namespace

CrossPairProfile cross_profile(const AmalgamationTriple& triple) {
    if (triple.base.point_count() == 0)
        throw DomainError("cross_profile: base must be nonempty");
    const SidePlan left_plan = plan_side(triple.base, triple.left, triple.into_left);
    const SidePlan right_plan = plan_side(triple.base, triple.right, triple.into_right);
    CrossPairProfile profile;
    for (std::size_t a : left_plan.extras)
        for (std::size_t b : right_plan.extras) {
            CrossPairProfile::Entry entry;
            entry.left = triple.left.point(a);
            entry.right = triple.right.point(b);
            entry.m_lower = kNoChain;
            entry.m_upper = 0;
            for (std::size_t c = 0; c < triple.base.point_count(); ++c) {
                const int da = triple.left.dist(a, left_plan.embedded[c]);
                const int db = triple.right.dist(b, right_plan.embedded[c]);
                entry.m_lower = std::min(entry.m_lower, da + db);
                entry.m_upper = std::max(entry.m_upper, da > db ? da - db : db - da);
            }
            if (entry.m_lower < entry.m_upper)
                throw InternalError("cross pair bounds inverted; inputs cannot both be metrics");
            profile.entries.push_back(std::move(entry));
        }
    return profile;
}

AmalgamResult free_amalgam(const AmalgamationTriple& triple) {
    const SidePlan left_plan = plan_side(triple.base, triple.left, triple.into_left);
    const SidePlan right_plan = plan_side(triple.base, triple.right, triple.into_right);
    const DistMatrix left_m = side_matrix(triple.base, triple.left, left_plan);
    const DistMatrix right_m = side_matrix(triple.base, triple.right, right_plan);
    const int bc = static_cast<int>(triple.base.point_count());
    if (bc + static_cast<int>(left_plan.extras.size() + right_plan.extras.size()) > kDenseCap)
        throw DomainError("amalgamation output too large");

    DistMatrix out;
    std::vector<CrossRule> rules(left_plan.extras.size() * right_plan.extras.size());
    amalgam_fill(left_m, right_m, bc, triple.nstar, out, rules.data());

    // result names: base as-is, then side extras with collisions suffixed
    std::vector<PointId> names(triple.base.points());
    std::set<PointId> taken(names.begin(), names.end());
    AmalgamResult result;
    for (std::size_t c = 0; c < triple.base.point_count(); ++c) {
        result.left_to_result.push_back({triple.left.point(left_plan.embedded[c]),
                                         triple.base.point(c)});
        result.right_to_result.push_back({triple.right.point(right_plan.embedded[c]),
                                          triple.base.point(c)});
    }
    for (std::size_t p : left_plan.extras) {
        PointId name = fresh_name(triple.left.point(p), taken);
        taken.insert(name);
        result.left_to_result.push_back({triple.left.point(p), name});
        names.push_back(std::move(name));
    }
    for (std::size_t q : right_plan.extras) {
        PointId name = fresh_name(triple.right.point(q), taken);
        taken.insert(name);
        result.right_to_result.push_back({triple.right.point(q), name});
        names.push_back(std::move(name));
    }

    for (std::size_t p = 0; p < left_plan.extras.size(); ++p)
        for (std::size_t q = 0; q < right_plan.extras.size(); ++q) {
            const int value = out.at(bc + static_cast<int>(p),
                                     bc + static_cast<int>(left_plan.extras.size() + q));
            result.cross.push_back({triple.left.point(left_plan.extras[p]),
                                    triple.right.point(right_plan.extras[q]),
                                    rules[p * right_plan.extras.size() + q], value});
        }

    result.space = space_from_dense(triple.base.bound(), names, out);
    return result;
}

AmbientConfig AmbientConfig::make(BoundedMetricSpace space, std::vector<PointId> base,
                                  std::vector<PointId> left, std::vector<PointId> right,
                                  int nstar) {
    AmbientConfig config;
    config.nstar = validated_nstar(nstar, space.bound());
    config.base = sorted_unique(std::move(base));
    config.left = sorted_unique(std::move(left));
    config.right = sorted_unique(std::move(right));
    for (const auto& id : config.base) {
        space.require_index(id);
        if (!std::binary_search(config.left.begin(), config.left.end(), id))
            throw DomainError("base point " + id + " missing from the left set");
        if (!std::binary_search(config.right.begin(), config.right.end(), id))
            throw DomainError("base point " + id + " missing from the right set");
    }
    for (const auto& id : config.left) space.require_index(id);
    for (const auto& id : config.right) space.require_index(id);
    config.space = std::move(space);
    return config;
}

std::vector<PointId> AmbientConfig::overlap_beyond_base() const {
    std::vector<PointId> inter;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(inter));
    return minus(inter, base);
}

namespace {

struct ConfigIndices {
    std::vector<int> base, left_only, right_only;
};

ConfigIndices config_indices(const AmbientConfig& config) {
    ConfigIndices idx;
    idx.base = as_int(indices_of(config.space, config.base));
    idx.left_only = as_int(indices_of(config.space, minus(config.left, config.base)));
    idx.right_only = as_int(indices_of(config.space, minus(config.right, config.base)));
    return idx;
}

void require_meet_in_base(const AmbientConfig& config) {
    const auto overlap = config.overlap_beyond_base();
    if (!overlap.empty())
        throw DomainError("sets overlap beyond the base at point " + overlap.front());
}

}  // namespace

CrossPairProfile cross_profile(const AmbientConfig& config) {
    if (config.base.empty()) throw DomainError("cross_profile: base must be nonempty");
    require_meet_in_base(config);
    const ConfigIndices idx = config_indices(config);
    const SpaceView view{config.space};
    CrossPairProfile profile;
    for (int a : idx.left_only)
        for (int b : idx.right_only) {
            const CrossBounds bounds = cross_bounds(view, idx.base, a, b);
            if (bounds.lower_sum < bounds.upper_gap)
                throw InternalError("cross pair bounds inverted in a metric space");
            profile.entries.push_back({config.space.point(static_cast<std::size_t>(a)),
                                       config.space.point(static_cast<std::size_t>(b)),
                                       bounds.lower_sum, bounds.upper_gap,
                                       view.at(a, b)});
        }
    return profile;
}

bool distance_at_least(const AmbientConfig& config, int k) {
    require_meet_in_base(config);
    const ConfigIndices idx = config_indices(config);
    return at_least_impl(SpaceView{config.space}, idx.base, idx.left_only, idx.right_only, k,
                         nullptr);
}

bool distance_at_most(const AmbientConfig& config, int k) {
    require_meet_in_base(config);
    const ConfigIndices idx = config_indices(config);
    return at_most_impl(SpaceView{config.space}, idx.base, idx.left_only, idx.right_only, k,
                        nullptr);
}

DistanceLemmaConfig DistanceLemmaConfig::make(BoundedMetricSpace space,
                                              std::vector<PointId> base,
                                              std::vector<PointId> left,
                                              std::vector<PointId> right,
                                              std::vector<PointId> mid, int nstar) {
    DistanceLemmaConfig config;
    config.nstar = validated_nstar(nstar, space.bound());
    config.base = sorted_unique(std::move(base));
    config.left = sorted_unique(std::move(left));
    config.right = sorted_unique(std::move(right));
    config.mid = sorted_unique(std::move(mid));
    for (const auto& sets :
         {std::pair{&config.left, "left"}, {&config.right, "right"}, {&config.mid, "mid"}}) {
        for (const auto& id : *sets.first) space.require_index(id);
        for (const auto& id : config.base)
            if (!std::binary_search(sets.first->begin(), sets.first->end(), id))
                throw DomainError("base point " + id + " missing from the " +
                                  std::string(sets.second) + " set");
    }
    auto meet_in_base = [&](const std::vector<PointId>& xs, const std::vector<PointId>& ys,
                            const char* what) {
        std::vector<PointId> inter;
        std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                              std::back_inserter(inter));
        const auto stray = minus(inter, config.base);
        if (!stray.empty())
            throw DomainError(std::string(what) + " overlap beyond the base at point " +
                              stray.front());
    };
    meet_in_base(config.left, config.right, "left/right");
    meet_in_base(config.left, config.mid, "left/mid");
    meet_in_base(config.right, config.mid, "right/mid");
    config.space = std::move(space);
    return config;
}

namespace {

std::string pair_note(const BoundedMetricSpace& space, std::pair<int, int> w, int threshold,
                      const char* relation) {
    std::ostringstream out;
    out << "d(" << space.point(static_cast<std::size_t>(w.first)) << ","
        << space.point(static_cast<std::size_t>(w.second)) << ") = "
        << space.dist(static_cast<std::size_t>(w.first), static_cast<std::size_t>(w.second))
        << " " << relation << " " << threshold << " and not realized over the base";
    return out.str();
}

}  // namespace

LemmaReport check_distance_lemma(const DistanceLemmaConfig& config, int k1, int k2) {
    const int n = config.space.bound();
    if (!(1 <= k1 && k1 <= config.nstar && config.nstar <= k2 && k2 <= n))
        throw DomainError("window must satisfy 1 <= k1 <= nstar <= k2 <= n");

    LemmaReport report;
    report.k1 = k1;
    report.k2 = k2;
    const SpaceView view{config.space};
    const std::vector<int> base_idx = as_int(indices_of(config.space, config.base));
    const std::vector<int> left_idx =
        as_int(indices_of(config.space, minus(config.left, config.base)));
    const std::vector<int> right_idx =
        as_int(indices_of(config.space, minus(config.right, config.base)));
    const std::vector<int> mid_idx =
        as_int(indices_of(config.space, minus(config.mid, config.base)));
    std::vector<int> mid_all = as_int(indices_of(config.space, config.mid));
    std::sort(mid_all.begin(), mid_all.end());
    std::vector<int> sides_idx = left_idx;
    sides_idx.insert(sides_idx.end(), right_idx.begin(), right_idx.end());

    // (A u D) and (B u D) freely amalgamated over D: every cross distance
    // matches the amalgam rules with D as base.
    report.pre_free_amalgam.holds = true;
    for (int a : left_idx) {
        for (int b : right_idx) {
            const int expected = cross_value(cross_bounds(view, mid_all, a, b), config.nstar);
            if (view.at(a, b) != expected) {
                report.pre_free_amalgam.holds = false;
                std::ostringstream out;
                out << "d(" << config.space.point(static_cast<std::size_t>(a)) << ","
                    << config.space.point(static_cast<std::size_t>(b)) << ") = " << view.at(a, b)
                    << ", free amalgam over mid gives " << expected;
                report.pre_free_amalgam.witness = out.str();
                break;
            }
        }
        if (!report.pre_free_amalgam.holds) break;
    }

    auto window_clause = [&](const std::vector<int>& xs, const std::vector<int>& ys, int lo,
                             int hi) {
        LemmaClause clause;
        std::pair<int, int> w;
        if (!at_least_impl(view, base_idx, xs, ys, lo, &w))
            clause.witness = pair_note(config.space, w, lo, "<");
        else if (!at_most_impl(view, base_idx, xs, ys, hi, &w))
            clause.witness = pair_note(config.space, w, hi, ">");
        else
            clause.holds = true;
        return clause;
    };
    report.pre_left_window = window_clause(left_idx, mid_idx, k1, k2);
    report.pre_right_window = window_clause(right_idx, mid_idx, k1, k2);

    std::pair<int, int> w;
    const int lower = std::min(config.nstar, 2 * k1);
    if (at_least_impl(view, base_idx, left_idx, right_idx, lower, &w))
        report.lower_ab.holds = true;
    else
        report.lower_ab.witness = pair_note(config.space, w, lower, "<");
    const int upper = std::max(k2 - k1, config.nstar);
    if (at_most_impl(view, base_idx, left_idx, right_idx, upper, &w))
        report.upper_ab.holds = true;
    else
        report.upper_ab.witness = pair_note(config.space, w, upper, ">");
    if (at_least_impl(view, base_idx, mid_idx, sides_idx, k1, &w))
        report.mid_lower.holds = true;
    else
        report.mid_lower.witness = pair_note(config.space, w, k1, "<");
    if (at_most_impl(view, base_idx, mid_idx, sides_idx, k2, &w))
        report.mid_upper.holds = true;
    else
        report.mid_upper.witness = pair_note(config.space, w, k2, ">");
    return report;
}

std::string LemmaReport::describe() const {
    auto line = [](const char* name, const LemmaClause& clause) {
        std::string out = std::string(name) + ": " + (clause.holds ? "holds" : "fails");
        if (!clause.witness.empty()) out += " (" + clause.witness + ")";
        return out;
    };
    std::string out = line("free-amalgam precondition", pre_free_amalgam);
    out += "\n" + line("left window precondition", pre_left_window);
    out += "\n" + line("right window precondition", pre_right_window);
    out += "\n" + line("sides lower bound", lower_ab);
    out += "\n" + line("sides upper bound", upper_ab);
    out += "\n" + line("mid lower bound", mid_lower);
    out += "\n" + line("mid upper bound", mid_upper);
    return out;
}

std::string DStarViolation::describe() const {
    std::ostringstream out;
    out << "triangle on (" << x << "," << y << "," << z << "): " << dxz << " > " << dxy << " + "
        << dyz;
    return out.str();
}

std::variant<BoundedMetricSpace, DStarViolation> sequence_extension(
    const SequenceExtensionInput& input) {
    if (input.copies.empty()) throw DomainError("sequence extension needs at least one copy");
    if (input.left_block.bound() != input.copies_block.bound())
        throw DomainError("blocks must share one bound");
    const int bound = input.left_block.bound();
    const int nstar = validated_nstar(input.nstar, bound);

    const std::vector<PointId> base = sorted_unique(input.base);
    const std::vector<PointId> left = sorted_unique(input.left);
    const std::vector<PointId>& copy0 = input.copies.front();
    const std::size_t width = copy0.size();
    for (const auto& copy : input.copies)
        if (copy.size() != width) throw DomainError("copies must have equal size");

    // base points sit at fixed positions shared by every copy; overlap beyond
    // the base is caught by the name collision check below
    for (std::size_t t = 0; t < width; ++t) {
        if (!std::binary_search(base.begin(), base.end(), copy0[t])) continue;
        for (const auto& copy : input.copies)
            if (copy[t] != copy0[t])
                throw DomainError("copies disagree on the shared base position " + copy0[t]);
    }

    // blocks must agree on copy 0
    for (std::size_t s = 0; s < width; ++s)
        for (std::size_t t = s + 1; t < width; ++t)
            if (input.left_block.dist_by_id(copy0[s], copy0[t]) !=
                input.copies_block.dist_by_id(copy0[s], copy0[t]))
                throw DomainError("input blocks inconsistent on copy 0");

    // copies must be pairwise isometric along the aligned enumeration
    for (const auto& copy : input.copies)
        for (std::size_t s = 0; s < width; ++s)
            for (std::size_t t = s + 1; t < width; ++t)
                if (input.copies_block.dist_by_id(copy[s], copy[t]) !=
                    input.copies_block.dist_by_id(copy0[s], copy0[t]))
                    throw DomainError("copy blocks are not isometric to copy 0");

    // window precondition between A and copy 0 over C
    AmbientConfig window = AmbientConfig::make(input.left_block, base, left,
                                               copy0, nstar);
    if (!distance_at_least(window, nstar) || !distance_at_most(window, nstar + 1))
        throw DomainError("A and copy 0 must sit in the [nstar, nstar+1] window over the base");

    // assemble the point set of d*
    std::vector<PointId> names = left;
    for (const auto& copy : input.copies)
        for (const auto& id : copy)
            if (!std::binary_search(left.begin(), left.end(), id)) names.push_back(id);
    std::vector<PointId> sorted_names = names;
    std::sort(sorted_names.begin(), sorted_names.end());
    for (std::size_t i = 1; i < sorted_names.size(); ++i)
        if (sorted_names[i - 1] == sorted_names[i])
            throw DomainError("point name collision across blocks: " + sorted_names[i]);

    const std::size_t count = sorted_names.size();
    auto index = [&](const PointId& id) {
        return static_cast<std::size_t>(
            std::lower_bound(sorted_names.begin(), sorted_names.end(), id) -
            sorted_names.begin());
    };
    constexpr int kUnset = -1;
    std::vector<int> matrix(count * count, kUnset);
    for (std::size_t i = 0; i < count; ++i) matrix[i * count + i] = 0;
    auto put = [&](std::size_t i, std::size_t j, int v) {
        matrix[i * count + j] = v;
        matrix[j * count + i] = v;
    };

    // distances within the copy family
    std::vector<std::size_t> copy_union;
    for (const auto& copy : input.copies)
        for (const auto& id : copy) copy_union.push_back(index(id));
    std::sort(copy_union.begin(), copy_union.end());
    copy_union.erase(std::unique(copy_union.begin(), copy_union.end()), copy_union.end());
    for (std::size_t a = 0; a < copy_union.size(); ++a)
        for (std::size_t b = a + 1; b < copy_union.size(); ++b)
            put(copy_union[a], copy_union[b],
                input.copies_block.dist_by_id(sorted_names[copy_union[a]],
                                              sorted_names[copy_union[b]]));

    // distances within A, then the copied A x B_i pattern
    for (std::size_t s = 0; s < left.size(); ++s)
        for (std::size_t t = s + 1; t < left.size(); ++t)
            put(index(left[s]), index(left[t]), input.left_block.dist_by_id(left[s], left[t]));
    for (const auto& a : left) {
        if (std::binary_search(base.begin(), base.end(), a)) continue;
        for (const auto& copy : input.copies)
            for (std::size_t t = 0; t < width; ++t)
                put(index(a), index(copy[t]), input.left_block.dist_by_id(a, copy0[t]));
    }

    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (matrix[i * count + j] == kUnset)
                throw InternalError("d* assembly left a pair unset");

    // candidate built; verify the triangle inequality and report the first failure
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t k = 0; k < count; ++k) {
                if (i == j || j == k || i == k) continue;
                const int dik = matrix[i * count + k];
                const int dij = matrix[i * count + j];
                const int djk = matrix[j * count + k];
                if (dik > dij + djk)
                    return DStarViolation{sorted_names[i], sorted_names[j], sorted_names[k],
                                          dik, dij, djk};
            }
    return BoundedMetricSpace::make_unchecked(bound, std::move(sorted_names), std::move(matrix));
}

}  // namespace amalgam
