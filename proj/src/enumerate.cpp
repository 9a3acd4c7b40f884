#include "amalgam/enumerate.hpp"

#include <cstdlib>
#include <string>

namespace amalgam {

namespace {

int env_int(const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) return fallback;
    return static_cast<int>(v);
}

void check_caps(int point_count, int bound, const EnumerationCaps& caps) {
    if (point_count < 1) throw DomainError("enumeration needs at least one point");
    if (bound < 1) throw DomainError("enumeration needs bound >= 1");
    if (point_count > caps.max_points)
        throw DomainError("point count " + std::to_string(point_count) + " exceeds cap " +
                          std::to_string(caps.max_points));
    if (bound > caps.max_bound)
        throw DomainError("bound " + std::to_string(bound) + " exceeds cap " +
                          std::to_string(caps.max_bound));
}

}  // namespace

EnumerationCaps EnumerationCaps::from_env() {
    EnumerationCaps caps;
    caps.max_points = env_int("AMALGAM_POINT_CAP", caps.max_points);
    caps.max_bound = env_int("AMALGAM_N_CAP", caps.max_bound);
    return caps;
}

MetricEnumerator::MetricEnumerator(int point_count, int bound, EnumerationCaps caps)
    : point_count_(point_count), bound_(bound) {
    check_caps(point_count, bound, caps);
    for (int i = 0; i < point_count; ++i) names_.push_back("p" + std::to_string(i));
    digits_.assign(pair_count(static_cast<std::size_t>(point_count)), 1);
}

bool MetricEnumerator::advance() {
    // odometer with the last pair as the fastest digit
    for (std::size_t slot = digits_.size(); slot-- > 0;) {
        if (digits_[slot] < bound_) {
            ++digits_[slot];
            for (std::size_t rest = slot + 1; rest < digits_.size(); ++rest) digits_[rest] = 1;
            return true;
        }
    }
    return false;
}

bool MetricEnumerator::valid() const {
    return digits_form_metric(digits_, point_count_, bound_);
}

std::optional<BoundedMetricSpace> MetricEnumerator::next() {
    if (done_) return std::nullopt;
    while (true) {
        if (fresh_) {
            fresh_ = false;
        } else if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
        if (digits_.empty()) {  // single point: exactly one space
            done_ = true;
        }
        if (valid()) break;
        if (done_) return std::nullopt;
    }
    const std::size_t count = static_cast<std::size_t>(point_count_);
    std::vector<int> matrix(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            const int d = digits_[pair_index(i, j, count)];
            matrix[i * count + j] = d;
            matrix[j * count + i] = d;
        }
    return BoundedMetricSpace::make_unchecked(bound_, names_, std::move(matrix));
}

std::uint64_t enumeration_rank_count(int point_count, int bound) {
    std::uint64_t total = 1;
    for (std::size_t slot = 0; slot < pair_count(static_cast<std::size_t>(point_count)); ++slot)
        total *= static_cast<std::uint64_t>(bound);
    return total;
}

void decode_rank(std::uint64_t rank, int point_count, int bound, std::vector<int>& digits) {
    const std::size_t slots = pair_count(static_cast<std::size_t>(point_count));
    digits.resize(slots);
    for (std::size_t slot = slots; slot-- > 0;) {
        digits[slot] = static_cast<int>(rank % static_cast<std::uint64_t>(bound)) + 1;
        rank /= static_cast<std::uint64_t>(bound);
    }
}

bool digits_form_metric(const std::vector<int>& digits, int point_count, int bound) {
    const std::size_t count = static_cast<std::size_t>(point_count);
    auto d = [&](std::size_t i, std::size_t j) { return digits[pair_index(i, j, count)]; };
    for (int v : digits)
        if (v < 1 || v > bound) return false;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            for (std::size_t k = j + 1; k < count; ++k) {
                const int a = d(i, j), b = d(i, k), c = d(j, k);
                if (a > b + c || b > a + c || c > a + b) return false;
            }
    return true;
}

std::uint64_t count_spaces(int point_count, int bound, ExecMode mode, EnumerationCaps caps) {
    check_caps(point_count, bound, caps);
    const std::uint64_t total = enumeration_rank_count(point_count, bound);
    thread_local std::vector<int> digits;
    SweepResult result = run_sweep(total, mode, [&](std::uint64_t rank, std::string*) {
        decode_rank(rank, point_count, bound, digits);
        return digits_form_metric(digits, point_count, bound) ? Verdict::pass : Verdict::skip;
    });
    return result.checked;
}

}  // namespace amalgam
