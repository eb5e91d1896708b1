#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ytw/exact.hpp"

namespace ytw {

// Upper regularized incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
};

// Goodness-of-fit against the given outcome probabilities. Requires every
// expected probability positive and at least 50 samples per outcome on
// average.
ChiSquareResult chi_square_uniformity(const std::vector<std::uint64_t>& observed,
                                      const std::vector<double>& expected_probs);

struct WallDistReport {
    int n = 0;
    std::vector<Rational> pmf; // k = 0..n
    int mode = 0;
    Rational mean;
    Rational variance;
    std::optional<double> tv_distance; // vs the empirical histogram, if given
};

// Exact wall-count distribution of a uniform random n x 2 tableau with
// walls, optionally compared against empirical wall-count frequencies.
WallDistReport wall_distribution_check(int n,
                                       const std::vector<std::uint64_t>* empirical = nullptr);

struct CrossRow {
    std::string model;
    int n = 0;
    std::optional<Integer> formula;
    std::optional<Integer> oracle;
    std::optional<Integer> density;
    bool agree = true;
};

// Three-way count reconciliation over the model registry. Oracle columns are
// filled only while the shape stays within oracle capacity.
std::vector<CrossRow> cross_validate(const std::vector<std::string>& models, int max_n,
                                     int m = 3);

} // namespace ytw
