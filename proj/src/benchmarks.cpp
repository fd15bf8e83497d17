#include "sta/benchmarks.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sta {
namespace {

double sphere_fn(const StateVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double rastrigin_fn(const StateVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * M_PI * v) + 10.0;
    return s;
}

double rosenbrock_fn(const StateVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double schwefel_fn(const StateVector& x) {
    double s = 0.0;
    for (double v : x) s -= v * std::sin(std::sqrt(std::fabs(v)));
    return s;
}

double ackley_fn(const StateVector& x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * M_PI * v);
    }
    return 20.0 + M_E - 20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n);
}

double michalewicz_fn(const StateVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = x[i];
        const double t = std::sin(static_cast<double>(i + 1) * v * v / M_PI);
        const double t2 = t * t;
        const double t4 = t2 * t2;
        const double t8 = t4 * t4;
        const double t16 = t8 * t8;
        s += std::sin(v) * t16 * t4;   // t^20, m = 10
    }
    return -s;
}

double schaffer_fn(const StateVector& x) {
    const double r2 = x[0] * x[0] + x[1] * x[1];
    const double s = std::sin(std::sqrt(r2));
    const double d = 1.0 + 0.001 * r2;
    return 0.5 + (s * s - 0.5) / (d * d);
}

double easom_fn(const StateVector& x) {
    const double a = x[0] - M_PI;
    const double b = x[1] - M_PI;
    return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-(a * a + b * b));
}

double goldstein_price_fn(const StateVector& x) {
    const double x1 = x[0], x2 = x[1];
    const double u = x1 + x2 + 1.0;
    const double p = 19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2;
    const double v = 2.0 * x1 - 3.0 * x2;
    const double q = 18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2;
    return (1.0 + u * u * p) * (30.0 + v * v * q);
}

// Schwefel's sine-root minimum per coordinate, to full double precision.
constexpr double kSchwefelMinPerDim = -418.9828872724337;

Objective checked_dim(Objective obj, const char* name) {
    auto inner = std::move(obj.fn);
    const std::size_t dim = obj.dim;
    obj.fn = [inner = std::move(inner), dim, name](const StateVector& x) {
        if (x.size() != dim)
            throw std::invalid_argument(std::string(name) + ": dimension mismatch");
        return inner(x);
    };
    return obj;
}

} // namespace

const std::vector<std::string>& benchmark_names() {
    static const std::vector<std::string> names = {
        "sphere",  "rastrigin",   "griewank", "rosenbrock", "schwefel",
        "ackley",  "michalewicz", "schaffer", "easom",      "goldstein_price",
    };
    return names;
}

Objective make_benchmark(const std::string& name, std::size_t dim) {
    if (dim < 1)
        throw std::invalid_argument("make_benchmark: dim must be >= 1");

    Objective obj;
    obj.name = name;
    obj.dim = dim;

    if (name == "sphere") {
        obj.bounds = BoxBounds::cube(-100.0, 100.0, dim);
        obj.known_min = 0.0;
        obj.fn = sphere_fn;
    } else if (name == "rastrigin") {
        obj.bounds = BoxBounds::cube(-5.12, 5.12, dim);
        obj.known_min = 0.0;
        obj.fn = rastrigin_fn;
    } else if (name == "griewank") {
        obj.bounds = BoxBounds::cube(-600.0, 600.0, dim);
        obj.known_min = 0.0;
        std::vector<double> inv_sqrt(dim);
        for (std::size_t i = 0; i < dim; ++i)
            inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(i + 1));
        obj.fn = [inv_sqrt = std::move(inv_sqrt)](const StateVector& x) {
            double s = 0.0, p = 1.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                s += x[i] * x[i];
                p *= std::cos(x[i] * inv_sqrt[i]);
            }
            return s / 4000.0 - p + 1.0;
        };
    } else if (name == "rosenbrock") {
        if (dim < 2)
            throw std::invalid_argument("make_benchmark: rosenbrock needs dim >= 2");
        obj.bounds = BoxBounds::cube(-30.0, 30.0, dim);
        obj.known_min = 0.0;
        obj.fn = rosenbrock_fn;
    } else if (name == "schwefel") {
        obj.bounds = BoxBounds::cube(-500.0, 500.0, dim);
        obj.known_min = kSchwefelMinPerDim * static_cast<double>(dim);
        obj.fn = schwefel_fn;
    } else if (name == "ackley") {
        obj.bounds = BoxBounds::cube(-32.0, 32.0, dim);
        obj.known_min = 0.0;
        obj.fn = ackley_fn;
    } else if (name == "michalewicz") {
        obj.bounds = BoxBounds::cube(0.0, M_PI, dim);
        if (dim == 2) obj.known_min = -1.8013;
        else if (dim == 10) obj.known_min = -9.6602;
        obj.fn = michalewicz_fn;
    } else if (name == "schaffer" || name == "easom" || name == "goldstein_price") {
        if (dim != 2)
            throw std::invalid_argument("make_benchmark: " + name + " is two-dimensional only");
        if (name == "schaffer") {
            obj.bounds = BoxBounds::cube(-100.0, 100.0, 2);
            obj.known_min = 0.0;
            obj.fn = schaffer_fn;
        } else if (name == "easom") {
            obj.bounds = BoxBounds::cube(-100.0, 100.0, 2);
            obj.known_min = -1.0;
            obj.fn = easom_fn;
        } else {
            obj.bounds = BoxBounds::cube(-2.0, 2.0, 2);
            obj.known_min = 3.0;
            obj.fn = goldstein_price_fn;
        }
    } else {
        std::ostringstream msg;
        msg << "make_benchmark: unknown function '" << name << "'; valid names:";
        for (const auto& n : benchmark_names())
            msg << ' ' << n;
        throw std::invalid_argument(msg.str());
    }
    return checked_dim(std::move(obj), "benchmark");
}

std::vector<GridRow> grid_sample(const Objective& obj, std::size_t resolution) {
    if (obj.dim != 2)
        throw std::invalid_argument("grid_sample: objective must be two-dimensional");
    if (resolution < 2)
        throw std::invalid_argument("grid_sample: resolution must be >= 2");

    std::vector<GridRow> rows;
    rows.reserve(resolution * resolution);
    const double lo1 = obj.bounds.lower[0], hi1 = obj.bounds.upper[0];
    const double lo2 = obj.bounds.lower[1], hi2 = obj.bounds.upper[1];
    const double step = 1.0 / static_cast<double>(resolution - 1);
    StateVector x(2);
    for (std::size_t i = 0; i < resolution; ++i) {
        x[0] = lo1 + (hi1 - lo1) * (static_cast<double>(i) * step);
        for (std::size_t j = 0; j < resolution; ++j) {
            x[1] = lo2 + (hi2 - lo2) * (static_cast<double>(j) * step);
            rows.push_back({x[0], x[1], obj.fn(x)});
        }
    }
    return rows;
}

void write_grid(std::ostream& os, const std::vector<GridRow>& rows) {
    os << "x1,x2,f\n";
    char buf[96];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17e,%.17e,%.17e\n", r.x1, r.x2, r.f);
        os << buf;
    }
}

} // namespace sta
