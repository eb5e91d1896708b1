#include "ytw/mpoly.hpp"

#include <algorithm>
#include <cmath>

#include "ytw/errors.hpp"

namespace ytw {

BoundRef BoundRef::parse(const std::string& s) {
    if (s == "0") return zero();
    if (s == "1") return one();
    if (s.empty()) throw usage_error("empty bound");
    return var(s);
}

std::string BoundRef::str() const {
    switch (kind) {
        case Kind::zero: return "0";
        case Kind::one: return "1";
        case Kind::variable: return name;
    }
    return {};
}

MultivariatePolynomial::MultivariatePolynomial(std::vector<std::string> vars)
    : vars_(std::move(vars)) {}

MultivariatePolynomial MultivariatePolynomial::constant(std::vector<std::string> vars,
                                                        const Rational& c) {
    MultivariatePolynomial p(std::move(vars));
    if (c != 0) p.terms_.emplace(ExponentVec(p.vars_.size(), 0), c);
    return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(std::vector<std::string> vars,
                                                        const std::string& name) {
    MultivariatePolynomial p(std::move(vars));
    int idx = p.var_index(name);
    if (idx < 0) throw usage_error("unknown variable: " + name);
    ExponentVec e(p.vars_.size(), 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultivariatePolynomial MultivariatePolynomial::from_univariate(const Polynomial& p,
                                                               std::vector<std::string> vars,
                                                               const std::string& name) {
    MultivariatePolynomial r(std::move(vars));
    int idx = r.var_index(name);
    if (idx < 0) throw usage_error("unknown variable: " + name);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        ExponentVec e(r.vars_.size(), 0);
        e[idx] = i;
        r.terms_.emplace(std::move(e), p.coeff(i));
    }
    return r;
}

int MultivariatePolynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool MultivariatePolynomial::depends_on(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return false;
    for (const auto& [e, c] : terms_)
        if (e[idx] != 0) return true;
    return false;
}

void MultivariatePolynomial::add_term(const ExponentVec& exps, const Rational& c) {
    if (exps.size() != vars_.size()) throw usage_error("exponent vector size mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_same_vars(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    if (a.vars() != b.vars())
        throw usage_error("operands declared over different variable sets");
}

MultivariatePolynomial MultivariatePolynomial::operator+(const MultivariatePolynomial& o) const {
    check_same_vars(*this, o);
    MultivariatePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultivariatePolynomial MultivariatePolynomial::operator-(const MultivariatePolynomial& o) const {
    check_same_vars(*this, o);
    MultivariatePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rational(-c));
    return r;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& o) const {
    check_same_vars(*this, o);
    MultivariatePolynomial r(vars_);
    ExponentVec e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const Rational& c) const {
    MultivariatePolynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

bool MultivariatePolynomial::operator==(const MultivariatePolynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultivariatePolynomial MultivariatePolynomial::substitute(const std::string& var,
                                                          const BoundRef& value) const {
    int idx = var_index(var);
    if (idx < 0) throw usage_error("unknown variable: " + var);
    int tgt = -1;
    if (value.kind == BoundRef::Kind::variable) {
        if (value.name == var) throw usage_error("bound references the variable itself: " + var);
        tgt = var_index(value.name);
        if (tgt < 0) throw usage_error("unknown variable: " + value.name);
    }
    MultivariatePolynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        int pow = e[idx];
        if (value.kind == BoundRef::Kind::zero && pow > 0) continue;
        ExponentVec ne = e;
        ne[idx] = 0;
        if (tgt >= 0) ne[tgt] += pow;
        r.add_term(ne, c);
    }
    return r;
}

Polynomial MultivariatePolynomial::to_univariate(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) throw usage_error("unknown variable: " + name);
    Polynomial p(name);
    for (const auto& [e, c] : terms_) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != idx && e[i] != 0)
                throw usage_error("polynomial still depends on variable " + vars_[i]);
        p.set_coeff(e[idx], p.coeff(e[idx]) + c);
    }
    return p;
}

Rational MultivariatePolynomial::evaluate(const std::map<std::string, Rational>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw usage_error("missing value for variable " + vars_[i]);
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

std::vector<double> MultivariatePolynomial::eval_partial(
    const std::unordered_map<std::string, double>& assign, const std::string& free_var) const {
    int fidx = var_index(free_var);
    if (fidx < 0) throw usage_error("unknown variable: " + free_var);
    std::vector<double> coeffs;
    for (const auto& [e, c] : terms_) {
        double v = c.get_d();
        for (size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == fidx || e[i] == 0) continue;
            auto it = assign.find(vars_[i]);
            if (it == assign.end())
                throw usage_error("missing value for variable " + vars_[i]);
            v *= std::pow(it->second, e[i]);
        }
        int d = e[fidx];
        if (d >= static_cast<int>(coeffs.size())) coeffs.resize(d + 1, 0.0);
        coeffs[d] += v;
    }
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    return coeffs;
}

MultivariatePolynomial integrate_layer(const MultivariatePolynomial& body,
                                       const std::string& var,
                                       const BoundRef& lower,
                                       const BoundRef& upper) {
    int idx = body.var_index(var);
    if (idx < 0) throw usage_error("integration variable not in variable set: " + var);
    for (const BoundRef* b : {&lower, &upper})
        if (b->kind == BoundRef::Kind::variable && b->name == var)
            throw usage_error("bound references the integration variable: " + var);

    MultivariatePolynomial anti(body.vars());
    for (const auto& [e, c] : body.monomials()) {
        MultivariatePolynomial::ExponentVec ne = e;
        ne[idx] += 1;
        anti.add_term(ne, c / Rational(static_cast<long>(ne[idx])));
    }
    return anti.substitute(var, upper) - anti.substitute(var, lower);
}

} // namespace ytw
