#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sta/core.hpp"

namespace sta {

/// Canonical names accepted by make_benchmark.
const std::vector<std::string>& benchmark_names();

/// Builds one of the ten standard test functions at the given dimension.
/// schaffer, easom and goldstein_price are two-dimensional only; rosenbrock
/// needs dim >= 2. Throws std::invalid_argument on unknown name or bad dim.
Objective make_benchmark(const std::string& name, std::size_t dim);

struct GridRow {
    double x1, x2, f;
};

/// Uniform resolution x resolution sample of a 2D objective over its box,
/// for external surface plotting. resolution >= 2.
std::vector<GridRow> grid_sample(const Objective& obj, std::size_t resolution);

/// Writes rows as comma-separated text with header "x1,x2,f".
void write_grid(std::ostream& os, const std::vector<GridRow>& rows);

} // namespace sta
