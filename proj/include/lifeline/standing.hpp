// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "lifeline/model.hpp"

namespace lifeline {

// Fraction of the initial mutant cohort still standing at each timepoint.
// fractions[0] is always 1.0 and the sequence is non-increasing.
struct BrittlenessCurve {
    std::vector<double> fractions;

    bool operator==(const BrittlenessCurve&) const = default;
};

// One row per timeline, resampled onto a fixed number of bins over
// normalized history length.
struct HeatmapMatrix {
    int bins = 0;
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> rows;

    bool operator==(const HeatmapMatrix&) const = default;
};

// Threads every mutant of points[origin_index] through the change maps.
// One lifeline per origin mutant, in that point's mutant order.
std::vector<Lifeline> thread_mutants(const Timeline& timeline, int origin_index = 0);

// Count, per timepoint, of mutants that are not reached by mapping the
// previous version's full mutant set forward; index 0 is always 0. These
// mid-history arrivals are reported but excluded from the cohort metrics.
std::vector<std::size_t> introduced_counts(const Timeline& timeline);

// fractions[t] = |lifelines with standing_span > t| / |initial cohort|.
BrittlenessCurve brittleness_curve(const Timeline& timeline);

// 1 - fractions[last]: the share of the initial cohort degraded by the end
// of the observed history.
double brittleness(const Timeline& timeline);

// Step resample of a piecewise-constant curve onto `bins` samples of
// normalized history: point t holds on [t/T, (t+1)/T), sampled at
// b/(bins-1). First and last values are preserved exactly.
std::vector<double> resample_step(const std::vector<double>& curve, int bins);

HeatmapMatrix heatmap(std::span<const Timeline> timelines, int bins,
                      unsigned threads = 1);

}  // namespace lifeline
