#include "ytw/stats.hpp"

#include <cmath>

#include "ytw/density.hpp"
#include "ytw/errors.hpp"
#include "ytw/formulas.hpp"
#include "ytw/models.hpp"
#include "ytw/shapes.hpp"

namespace ytw {

namespace {

// Lower regularized incomplete gamma by its power series; for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma by continued fraction; for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw usage_error("gamma Q needs a > 0 and x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

ChiSquareResult chi_square_uniformity(const std::vector<std::uint64_t>& observed,
                                      const std::vector<double>& expected_probs) {
    if (observed.size() != expected_probs.size() || observed.empty())
        throw usage_error("observed and expected vectors must have equal, positive size");
    std::uint64_t total = 0;
    for (auto o : observed) total += o;
    if (total < 50ull * observed.size())
        throw usage_error("undersampled: need at least 50 samples per outcome");
    for (double p : expected_probs)
        if (!(p > 0.0)) throw usage_error("every expected probability must be positive");

    ChiSquareResult res;
    for (size_t i = 0; i < observed.size(); ++i) {
        double e = expected_probs[i] * static_cast<double>(total);
        double d = static_cast<double>(observed[i]) - e;
        res.statistic += d * d / e;
    }
    res.df = static_cast<int>(observed.size()) - 1;
    res.p_value = regularized_gamma_q(res.df / 2.0, res.statistic / 2.0);
    return res;
}

WallDistReport wall_distribution_check(int n, const std::vector<std::uint64_t>* empirical) {
    WallDistReport rep;
    rep.n = n;
    rep.pmf = wall_count_pmf(n);
    rep.mean = 0;
    Rational second_moment = 0;
    for (int k = 0; k <= n; ++k) {
        if (rep.pmf[k] > rep.pmf[rep.mode]) rep.mode = k;
        rep.mean += Rational(k) * rep.pmf[k];
        second_moment += Rational(k) * Rational(k) * rep.pmf[k];
    }
    rep.variance = second_moment - rep.mean * rep.mean;

    if (empirical) {
        if (empirical->size() != rep.pmf.size())
            throw usage_error("empirical histogram must have n+1 bins");
        std::uint64_t total = 0;
        for (auto c : *empirical) total += c;
        if (total == 0) throw usage_error("empty empirical histogram");
        double tv = 0.0;
        for (int k = 0; k <= n; ++k)
            tv += std::fabs(static_cast<double>((*empirical)[k]) / total -
                            rep.pmf[k].get_d());
        rep.tv_distance = tv / 2.0;
    }
    return rep;
}

std::vector<CrossRow> cross_validate(const std::vector<std::string>& models, int max_n, int m) {
    std::vector<CrossRow> rows;
    for (const auto& name : models) {
        const Model& model = find_model(name);
        std::optional<DensityTower> tower;
        if (model.block) tower = iterate_recurrence(*model.block, max_n);
        for (int n = 1; n <= max_n; ++n) {
            CrossRow row;
            row.model = name;
            row.n = n;
            if (model.formula) row.formula = model.formula(n, m);
            if (model.shape) {
                try {
                    row.oracle = count_linear_extensions(build_poset(model.shape(n, m)));
                } catch (const capacity_error&) {
                    // leave the oracle column empty past capacity
                }
            }
            if (tower) row.density = count_fillings(*tower, n).count;

            const Integer* ref = nullptr;
            for (const auto* c : {&row.formula, &row.oracle, &row.density}) {
                if (!c->has_value()) continue;
                if (!ref) ref = &c->value();
                else if (c->value() != *ref) row.agree = false;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace ytw
