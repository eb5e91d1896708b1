#include "ytw/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ytw/errors.hpp"

namespace ytw {

namespace {

constexpr double kBisectTol = 1e-12;
constexpr double kNegativityAlarm = -1e-9;
// Coefficients above this magnitude lose too much to cancellation in plain
// double Horner evaluation (densities here integrate to ~1, so absolute
// error ~ coeff * 2^-53 is relative error of the CDF).
constexpr double kDoubleSafeCoeff = 1e8;

double horner(const std::vector<double>& coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

long floor_log2_abs(const mpf_class& x) {
    long exp = 0;
    mpf_get_d_2exp(&exp, x.get_mpf_t());
    return exp;
}

// Density coefficients of p_k scaled by ~1/int_0^1 p_k, in GMP floats,
// computed from the integer-scaled level. The scaling only keeps magnitudes
// representable for deep towers (the sampler renormalizes exactly through
// the CDF total), so an approximate constant is fine; everything stays in
// mpz/mpf and avoids rational gcds. Precision is raised adaptively until the
// cancellation in the integral leaves >= 80 bits of headroom for CDF
// evaluation, then trimmed back since the per-draw work downstream is
// quadratic in precision.
std::vector<mpf_class> normalized_level_mpf(const std::vector<Integer>& E,
                                            mp_bitcnt_t& prec_out) {
    const int deg = static_cast<int>(E.size()) - 1;
    long max_mag = 1;
    for (const auto& e : E)
        if (e != 0)
            max_mag = std::max(max_mag,
                               static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)));
    const long guard = 160 + static_cast<long>(deg / 8);

    // bits destroyed by cancellation in the integral; a pass fails when the
    // noise floor gets too close to the total (or swallows its sign)
    auto attempt = [&](mp_bitcnt_t prec, std::vector<mpf_class>& out,
                       long& cancel) -> bool {
        std::vector<mpf_class> c(deg + 1, mpf_class(0, prec));
        for (int i = 0; i <= deg; ++i) mpf_set_z(c[i].get_mpf_t(), E[i].get_mpz_t());
        mpf_class total(0, prec);
        for (int i = deg; i >= 0; --i)
            total += c[i] / static_cast<unsigned long>(i + 1);
        cancel = max_mag - floor_log2_abs(total);
        if (!(total > 0) || cancel > static_cast<long>(prec) - guard) return false;
        for (auto& x : c) x /= total;
        out = std::move(c);
        return true;
    };

    for (mp_bitcnt_t prec = 192;; prec *= 2) {
        if (prec > (1u << 22))
            throw numeric_error("tower level has nonpositive unit integral");
        std::vector<mpf_class> out;
        long cancel = 0;
        if (!attempt(prec, out, cancel)) continue;
        const mp_bitcnt_t tight =
            static_cast<mp_bitcnt_t>(std::max(192l, cancel + guard + 16));
        if (tight + tight / 4 < prec) {
            std::vector<mpf_class> snug;
            long c2 = 0;
            if (attempt(tight, snug, c2)) {
                prec_out = tight;
                return snug;
            }
        }
        prec_out = prec;
        return out;
    }
}

// Doubles are usable when no normalized coefficient overwhelms the ~2^-53
// Horner noise floor (densities here integrate to ~1).
bool to_doubles_if_safe(const std::vector<mpf_class>& coeffs, std::vector<double>& out) {
    out.resize(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        out[i] = coeffs[i].get_d();
        if (!std::isfinite(out[i]) || std::fabs(out[i]) > kDoubleSafeCoeff) return false;
    }
    return true;
}

// Inverse-CDF bisection in GMP floating point, for densities whose
// coefficients are too large for double cancellation headroom.
double inverse_cdf_mpf(const std::vector<mpf_class>& dens, mp_bitcnt_t prec, double a,
                       double b, double u) {
    if (!(a < b)) throw numeric_error("empty sampling interval");
    std::vector<mpf_class> anti(dens.size() + 1, mpf_class(0, prec));
    for (size_t i = 0; i < dens.size(); ++i)
        anti[i + 1] = dens[i] / (static_cast<unsigned long>(i) + 1);
    auto eval = [prec](const std::vector<mpf_class>& cs, double t) {
        mpf_class acc(0, prec);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * t + *it;
        return acc;
    };

    const mpf_class ga = eval(anti, a);
    const mpf_class total = eval(anti, b) - ga;
    if (!(total > 0)) throw numeric_error("density has nonpositive integral");
    const mpf_class target = ga + mpf_class(u, prec) * total;

    double lo = a, hi = b;
    for (int it = 0; it < 200 && hi - lo > kBisectTol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (eval(anti, mid) < target) lo = mid; else hi = mid;
    }
    double t = 0.5 * (lo + hi);

    mpf_class check = eval(dens, t) * (b - a) / total;
    if (check < kNegativityAlarm)
        throw numeric_error("density is negative at the sampled point");
    return t;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

double resolve_bound(const BoundRef& b,
                     const std::unordered_map<std::string, double>& assign) {
    switch (b.kind) {
        case BoundRef::Kind::zero: return 0.0;
        case BoundRef::Kind::one: return 1.0;
        case BoundRef::Kind::variable: {
            auto it = assign.find(b.name);
            if (it == assign.end())
                throw numeric_error("bound variable not yet sampled: " + b.name);
            return it->second;
        }
    }
    return 0.0;
}

} // namespace

double inverse_cdf_sample(const std::vector<double>& coeffs, double a, double b, double u) {
    if (!(a < b)) throw numeric_error("empty sampling interval");
    // G(t) = int_a^t density
    std::vector<double> anti(coeffs.size() + 1, 0.0);
    for (size_t i = 0; i < coeffs.size(); ++i)
        anti[i + 1] = coeffs[i] / static_cast<double>(i + 1);
    const double ga = horner(anti, a);
    const double total = horner(anti, b) - ga;
    if (!(total > 0.0)) throw numeric_error("density has nonpositive integral");
    const double target = ga + u * total;

    double lo = a, hi = b;
    for (int it = 0; it < 200 && hi - lo > kBisectTol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (horner(anti, mid) < target) lo = mid; else hi = mid;
    }
    double t = 0.5 * (lo + hi);
    if (horner(coeffs, t) * (b - a) / total < kNegativityAlarm)
        throw numeric_error("density is negative at the sampled point");
    return t;
}

double sample_from_polynomial_density(const std::vector<double>& coeffs, double a, double b,
                                      RngState& rng) {
    return inverse_cdf_sample(coeffs, a, b, rng.uniform01());
}

double sample_from_polynomial_density(const Polynomial& p, double a, double b, RngState& rng) {
    std::vector<double> coeffs(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) coeffs[i] = p.coeff(i).get_d();
    return sample_from_polynomial_density(coeffs, a, b, rng);
}

std::unordered_map<std::string, double> sample_block(const DensityTower& tower, int level_k,
                                                     double z, RngState& rng) {
    const BlockSpec& spec = tower.block();
    if (level_k < 0 || level_k >= tower.depth())
        throw usage_error("block level exceeds the tower depth");
    if (!(z >= 0.0 && z <= 1.0)) throw numeric_error("interface value outside [0,1]");
    const int c = spec.chain_index();
    const int m = spec.cells_per_block();

    std::unordered_map<std::string, double> assign;
    assign[spec.interface_symbol] = z;

    for (int j = 0; j < m; ++j) {
        const auto& var = spec.vars[j];
        double lo = resolve_bound(var.lower, assign);
        double hi = resolve_bound(var.upper, assign);
        if (hi < lo) {
            if (hi < lo - kBisectTol)
                throw numeric_error("empty interval for variable " + var.name);
            std::swap(lo, hi);
        }

        std::function<double(double)> draw;
        if (j == c) {
            // The chained density carries p_k, whose coefficients outgrow
            // double precision on deep towers; dispatch on magnitude.
            mp_bitcnt_t prec = 0;
            auto level = normalized_level_mpf(tower.integer_level(level_k), prec);
            auto suffix = tower.suffix_partial(j).eval_partial(assign, var.name);
            std::vector<double> level_d;
            if (to_doubles_if_safe(level, level_d)) {
                auto density = convolve(suffix, level_d);
                draw = [density, lo, hi](double u) {
                    return inverse_cdf_sample(density, lo, hi, u);
                };
            } else {
                std::vector<mpf_class> density(suffix.size() + level.size() - 1,
                                               mpf_class(0, prec));
                for (size_t i = 0; i < suffix.size(); ++i) {
                    mpf_class si(suffix[i], prec);
                    for (size_t l = 0; l < level.size(); ++l)
                        density[i + l] += si * level[l];
                }
                draw = [density, prec, lo, hi](double u) {
                    return inverse_cdf_mpf(density, prec, lo, hi, u);
                };
            }
        } else {
            auto density = (j < c)
                               ? tower.level_partials(level_k)[j].eval_partial(assign,
                                                                               var.name)
                               : tower.suffix_partial(j).eval_partial(assign, var.name);
            draw = [density, lo, hi](double u) {
                return inverse_cdf_sample(density, lo, hi, u);
            };
        }

        // Resample on an exact collision with an already placed value.
        double val = 0.0;
        for (int attempt = 0; attempt < 64; ++attempt) {
            val = draw(rng.uniform01());
            bool tie = false;
            for (const auto& [name, v] : assign)
                if (v == val) { tie = true; break; }
            if (!tie) break;
            if (attempt == 63) throw numeric_error("persistent tie while sampling");
        }
        assign[var.name] = val;
    }
    return assign;
}

PolyominoSample sample_polyomino(const DensityTower& tower, int n, RngState& rng) {
    const BlockSpec& spec = tower.block();
    if (n < 0 || n > tower.depth()) throw usage_error("n exceeds the tower depth");
    if (spec.geometry.empty())
        throw usage_error("block model has no geometry; cannot place cells");
    const auto iface_cell = spec.geometry.at(spec.interface_symbol);
    const int stride = iface_cell.first;

    for (int attempt = 0; attempt < 100; ++attempt) {
        PolyominoSample out;
        if (n == 0) {
            out.cells.values[{0, iface_cell.second}] = rng.uniform01();
        } else {
            mp_bitcnt_t prec = 0;
            auto level = normalized_level_mpf(tower.integer_level(n), prec);
            std::vector<double> level_d;
            double z = to_doubles_if_safe(level, level_d)
                           ? inverse_cdf_sample(level_d, 0.0, 1.0, rng.uniform01())
                           : inverse_cdf_mpf(level, prec, 0.0, 1.0, rng.uniform01());
            out.cells.values[{stride * n, iface_cell.second}] = z;
            for (int k = n - 1; k >= 0; --k) {
                auto assign = sample_block(tower, k, z, rng);
                for (const auto& v : spec.vars) {
                    auto rc = spec.geometry.at(v.name);
                    out.cells.values[{stride * k + rc.first, rc.second}] = assign[v.name];
                }
                z = assign[spec.chain_var];
            }
        }

        // Rank the cell values; resample the rare exact tie.
        std::vector<std::pair<double, int>> ranked;
        int idx = 0;
        for (const auto& [cell, val] : out.cells.values) ranked.emplace_back(val, idx++);
        std::sort(ranked.begin(), ranked.end());
        bool tie = false;
        for (size_t i = 1; i < ranked.size(); ++i)
            if (ranked[i].first == ranked[i - 1].first) { tie = true; break; }
        if (tie) continue;

        out.filling.labels.assign(ranked.size(), 0);
        for (size_t i = 0; i < ranked.size(); ++i)
            out.filling.labels[ranked[i].second] = static_cast<int>(i) + 1;
        return out;
    }
    throw numeric_error("could not produce a tie-free sample");
}

Filling sample_tableau_rejection(const DensityTower& tower, int n, RngState& rng,
                                 std::uint64_t max_attempts) {
    const BlockSpec& spec = tower.block();
    if (spec.geometry.empty()) throw usage_error("block model has no geometry");
    const Cell bottom{0, spec.geometry.at(spec.interface_symbol).second};

    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        PolyominoSample s = sample_polyomino(tower, n, rng);
        auto it = s.cells.values.find(bottom);
        if (it == s.cells.values.end())
            throw usage_error("model geometry has no bottom interface cell");
        const int bottom_idx =
            static_cast<int>(std::distance(s.cells.values.begin(), it));
        if (s.filling.labels[bottom_idx] != 1) continue;

        Filling f;
        f.labels.reserve(s.filling.labels.size() - 1);
        for (size_t i = 0; i < s.filling.labels.size(); ++i)
            if (static_cast<int>(i) != bottom_idx)
                f.labels.push_back(s.filling.labels[i] - 1);
        return f;
    }
    throw capacity_error("rejection cap reached without an accepted sample");
}

} // namespace ytw
