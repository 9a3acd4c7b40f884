#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace amalgam {

// Exhaustive sweeps over an index space run either on the serial reference
// path or on the OpenMP path. Both produce identical counts; failure samples
// are index-sorted so reports are deterministic.
enum class ExecMode { serial, parallel };

enum class Verdict : std::uint8_t {
    skip,  // hypotheses not met, not counted as checked
    pass,
    fail,
};

struct SweepFailure {
    std::uint64_t index = 0;
    std::string note;
};

struct SweepResult {
    std::uint64_t total = 0;    // size of the index space
    std::uint64_t checked = 0;  // verdicts other than skip
    std::uint64_t failed = 0;
    std::vector<SweepFailure> samples;  // capped; sorted by index
};

inline constexpr std::size_t kSweepSampleCap = 8;

// fn(index, &note) -> Verdict; `note` is only read when the verdict is fail.
template <typename Fn>
SweepResult run_sweep(std::uint64_t count, ExecMode mode, Fn&& fn,
                      std::size_t sample_cap = kSweepSampleCap) {
    SweepResult result;
    result.total = count;

#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
        std::uint64_t checked = 0, failed = 0;
        std::vector<SweepFailure> samples;
#pragma omp parallel
        {
            std::uint64_t my_checked = 0, my_failed = 0;
            std::vector<SweepFailure> my_samples;
            std::string note;
#pragma omp for schedule(dynamic, 1024) nowait
            for (long long i = 0; i < static_cast<long long>(count); ++i) {
                note.clear();
                switch (fn(static_cast<std::uint64_t>(i), &note)) {
                    case Verdict::skip: break;
                    case Verdict::pass: ++my_checked; break;
                    case Verdict::fail:
                        ++my_checked;
                        ++my_failed;
                        if (my_samples.size() < sample_cap)
                            my_samples.push_back({static_cast<std::uint64_t>(i), note});
                        break;
                }
            }
#pragma omp critical
            {
                checked += my_checked;
                failed += my_failed;
                samples.insert(samples.end(), my_samples.begin(), my_samples.end());
            }
        }
        std::sort(samples.begin(), samples.end(),
                  [](const SweepFailure& a, const SweepFailure& b) { return a.index < b.index; });
        if (samples.size() > sample_cap) samples.resize(sample_cap);
        result.checked = checked;
        result.failed = failed;
        result.samples = std::move(samples);
        return result;
    }
#else
    (void)mode;
#endif

    std::string note;
    for (std::uint64_t i = 0; i < count; ++i) {
        note.clear();
        switch (fn(i, &note)) {
            case Verdict::skip: break;
            case Verdict::pass: ++result.checked; break;
            case Verdict::fail:
                ++result.checked;
                ++result.failed;
                if (result.samples.size() < sample_cap) result.samples.push_back({i, note});
                break;
        }
    }
    return result;
}

inline int sweep_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace amalgam
