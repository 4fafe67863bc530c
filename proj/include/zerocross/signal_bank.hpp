#pragma once

#include <string>
#include <vector>

#include "zerocross/time_series.hpp"

namespace zerocross {

// One benchmark function: closed form, evaluation interval, true roots.
// Roots are stored at full double precision (refined from the published
// rounded values; each refined root rounds back to the published figure).
struct BenchFunction {
    int id = 0; // 1..14
    std::string expression;
    double t_a = 0.0;
    double t_b = 0.0;
    std::vector<double> roots; // sorted ascending
    double (*eval)(double) = nullptr;
};

const std::vector<BenchFunction>& bench_functions();

// throws std::invalid_argument for unknown ids
const BenchFunction& bench_function(int id);

double eval_bench(int id, double t);

// sample the bank function over its published interval
TimeSeries sample_bench(int id, double fs_hz);

} // namespace zerocross
