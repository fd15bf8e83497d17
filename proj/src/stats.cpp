#include "sta/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sta/core.hpp"

namespace sta {

SummaryStats summarize(const std::vector<double>& finals) {
    if (finals.empty())
        throw std::invalid_argument("summarize: empty sample");

    std::vector<double> sorted = finals;
    std::sort(sorted.begin(), sorted.end(),
              [](double a, double b) { return fitness_less(a, b); });

    SummaryStats s;
    s.best = sorted.front();
    s.worst = sorted.back();

    const std::size_t n = sorted.size();
    s.median = (n % 2 == 1) ? sorted[n / 2]
                            : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    double sum = 0.0;
    for (double v : finals) sum += v;
    s.mean = sum / static_cast<double>(n);

    if (n > 1) {
        double ss = 0.0;
        for (double v : finals) {
            const double d = v - s.mean;
            ss += d * d;
        }
        s.st_dev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

} // namespace sta
