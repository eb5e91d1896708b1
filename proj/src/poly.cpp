#include "ytw/poly.hpp"

#include "ytw/errors.hpp"

namespace ytw {

Polynomial Polynomial::constant(const Rational& c, std::string var) {
    Polynomial p(std::move(var));
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::monomial(const Rational& c, int degree, std::string var) {
    if (degree < 0) throw usage_error("negative degree");
    Polynomial p(std::move(var));
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

void Polynomial::set_coeff(int i, const Rational& c) {
    if (i < 0) throw usage_error("negative degree");
    if (i >= static_cast<int>(coeffs_.size())) {
        if (c == 0) return;
        coeffs_.resize(i + 1, Rational(0));
    }
    coeffs_[i] = c;
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(var_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(var_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(var_);
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(var_);
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return coeffs_ == o.coeffs_;
}

Rational Polynomial::evaluate(const Rational& point) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * point + *it;
    return acc;
}

double Polynomial::evaluate(double point) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * point + it->get_d();
    return acc;
}

Polynomial Polynomial::antiderivative() const {
    Polynomial r(var_);
    if (is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    r.trim();
    return r;
}

Rational Polynomial::definite_unit_integral() const {
    Rational acc(0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        acc += coeffs_[i] / Rational(static_cast<long>(i + 1));
    return acc;
}

std::vector<std::string> Polynomial::serialize_coeffs() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_fraction_string(c));
    return out;
}

Polynomial Polynomial::deserialize_coeffs(const std::vector<std::string>& strs,
                                          std::string var) {
    Polynomial p(std::move(var));
    p.coeffs_.reserve(strs.size());
    for (const auto& s : strs) p.coeffs_.push_back(parse_fraction(s));
    p.trim();
    return p;
}

} // namespace ytw
