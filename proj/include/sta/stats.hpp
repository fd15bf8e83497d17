#pragma once

#include <vector>

namespace sta {

struct SummaryStats {
    double best = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    double st_dev = 0.0;
};

/// best/median/mean/worst plus sample (N-1) standard deviation of the final
/// fitnesses; a single value gets st_dev 0. Throws on empty input. Median of
/// an even count is the mean of the two central order statistics.
SummaryStats summarize(const std::vector<double>& finals);

} // namespace sta
