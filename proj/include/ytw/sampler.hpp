#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "ytw/density.hpp"
#include "ytw/poly.hpp"
#include "ytw/shapes.hpp"

namespace ytw {

// Seedable, platform-stable generator (mt19937_64 is fully specified by the
// standard). Identical seed gives an identical sample stream.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : gen_(seed) {}
    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

// Deterministic inverse-CDF step: solves CDF(t) = u * CDF(b) by bisection to
// absolute tolerance 1e-12. `coeffs` are dense density coefficients.
double inverse_cdf_sample(const std::vector<double>& coeffs, double a, double b, double u);

// Draw from the density proportional to p on [a, b].
double sample_from_polynomial_density(const Polynomial& p, double a, double b, RngState& rng);
double sample_from_polynomial_density(const std::vector<double>& coeffs, double a, double b,
                                      RngState& rng);

// Fill one building block given the interface value z, sampling variables
// outermost first from the cached partial integrals.
std::unordered_map<std::string, double> sample_block(const DensityTower& tower, int level_k,
                                                     double z, RngState& rng);

struct CellAssignment {
    std::map<Cell, double> values;
};

struct PolyominoSample {
    CellAssignment cells;
    Filling filling; // labels over the sorted cell list
};

// Uniform random filling of the n-block polyomino of the tower's model.
PolyominoSample sample_polyomino(const DensityTower& tower, int n, RngState& rng);

// Rejection step: resample until the bottom cell carries label 1, then drop
// it and relabel. For the built-in model this yields a uniform 2n x 3
// tableau filling (cells of polyo_tableau_shape(n), sorted order).
Filling sample_tableau_rejection(const DensityTower& tower, int n, RngState& rng,
                                 std::uint64_t max_attempts = 1000000);

} // namespace ytw
