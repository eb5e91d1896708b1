#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ytw/exact.hpp"
#include "ytw/poly.hpp"

namespace ytw {

// Integration bound: 0, 1, or a still-free variable.
struct BoundRef {
    enum class Kind { zero, one, variable };
    Kind kind = Kind::zero;
    std::string name;

    static BoundRef zero() { return {Kind::zero, {}}; }
    static BoundRef one() { return {Kind::one, {}}; }
    static BoundRef var(std::string n) { return {Kind::variable, std::move(n)}; }

    // "0", "1", or a variable name.
    static BoundRef parse(const std::string& s);
    std::string str() const;

    bool operator==(const BoundRef&) const = default;
};

// Multivariate polynomial over a variable set fixed at creation.
// Sparse map from exponent vectors to nonzero rational coefficients.
class MultivariatePolynomial {
public:
    using ExponentVec = std::vector<int>;

    explicit MultivariatePolynomial(std::vector<std::string> vars);

    static MultivariatePolynomial constant(std::vector<std::string> vars, const Rational& c);
    static MultivariatePolynomial variable(std::vector<std::string> vars, const std::string& name);
    static MultivariatePolynomial from_univariate(const Polynomial& p,
                                                  std::vector<std::string> vars,
                                                  const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExponentVec, Rational>& monomials() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int var_index(const std::string& name) const; // -1 if absent
    bool depends_on(const std::string& name) const;

    MultivariatePolynomial operator+(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator-(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator*(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator*(const Rational& c) const;
    bool operator==(const MultivariatePolynomial& o) const;

    // Replace var by 0, 1, or another variable of the set.
    MultivariatePolynomial substitute(const std::string& var, const BoundRef& value) const;

    // The polynomial must depend on no variable other than `name`.
    Polynomial to_univariate(const std::string& name) const;

    Rational evaluate(const std::map<std::string, Rational>& point) const;

    // Substitute doubles for every variable except `free_var`; returns dense
    // coefficients of the resulting univariate polynomial (index = degree).
    std::vector<double> eval_partial(const std::unordered_map<std::string, double>& assign,
                                     const std::string& free_var) const;

    void add_term(const ExponentVec& exps, const Rational& c);

private:
    std::vector<std::string> vars_;
    std::map<ExponentVec, Rational> terms_;
};

// One layer of a nested integral chain: antiderivative in `var` evaluated
// between the bounds, which may be 0, 1, or still-free variables.
// The result no longer contains `var`.
MultivariatePolynomial integrate_layer(const MultivariatePolynomial& body,
                                       const std::string& var,
                                       const BoundRef& lower,
                                       const BoundRef& upper);

} // namespace ytw
