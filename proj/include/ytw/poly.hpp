#pragma once

#include <string>
#include <vector>

#include "ytw/exact.hpp"

namespace ytw {

// Univariate polynomial with exact rational coefficients, stored densely
// (index = degree, no trailing zeros).
class Polynomial {
public:
    explicit Polynomial(std::string var = "z") : var_(std::move(var)) {}

    static Polynomial constant(const Rational& c, std::string var = "z");
    static Polynomial monomial(const Rational& c, int degree, std::string var = "z");

    const std::string& var() const { return var_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;

    Rational evaluate(const Rational& point) const;
    double evaluate(double point) const;

    // Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    // Integral over [0,1].
    Rational definite_unit_integral() const;

    // Coefficients as "num/den" strings, constant term first.
    std::vector<std::string> serialize_coeffs() const;
    static Polynomial deserialize_coeffs(const std::vector<std::string>& strs,
                                         std::string var = "z");

    void set_coeff(int i, const Rational& c);

private:
    void trim();

    std::string var_;
    std::vector<Rational> coeffs_;
};

} // namespace ytw
