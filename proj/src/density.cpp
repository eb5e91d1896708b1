#include "ytw/density.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ytw/errors.hpp"
#include "ytw/formulas.hpp"

namespace ytw {

int BlockSpec::chain_index() const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i].name == chain_var) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> BlockSpec::space() const {
    std::vector<std::string> s;
    s.reserve(vars.size() + 1);
    for (const auto& v : vars) s.push_back(v.name);
    s.push_back(interface_symbol);
    return s;
}

std::string BlockSpec::canonical_string() const {
    std::ostringstream os;
    for (const auto& v : vars)
        os << v.name << ":" << v.lower.str() << ":" << v.upper.str() << ";";
    os << "|chain=" << chain_var << "|if=" << interface_symbol << "|geom=";
    for (const auto& [name, rc] : geometry)
        os << name << ":" << rc.first << "," << rc.second << ";";
    return os.str();
}

std::string BlockSpec::model_hash() const {
    // FNV-1a 64; stable across platforms.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical_string()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

BlockSpec BlockSpec::from_json(const nlohmann::json& j) try {
    BlockSpec s;
    for (const auto& v : j.at("vars")) {
        BlockVar bv;
        bv.name = v.at("name").get<std::string>();
        bv.lower = BoundRef::parse(v.at("lower").get<std::string>());
        bv.upper = BoundRef::parse(v.at("upper").get<std::string>());
        s.vars.push_back(std::move(bv));
    }
    s.chain_var = j.at("chain").get<std::string>();
    if (j.contains("interface")) s.interface_symbol = j.at("interface").get<std::string>();
    if (j.contains("geometry"))
        for (const auto& [name, rc] : j.at("geometry").items())
            s.geometry[name] = {rc.at(0).get<int>(), rc.at(1).get<int>()};
    return s;
} catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("bad block JSON: ") + e.what());
}

nlohmann::json BlockSpec::to_json() const {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (const auto& v : vars)
        j["vars"].push_back({{"name", v.name}, {"lower", v.lower.str()}, {"upper", v.upper.str()}});
    j["chain"] = chain_var;
    j["interface"] = interface_symbol;
    if (!geometry.empty()) {
        nlohmann::json g;
        for (const auto& [name, rc] : geometry) g[name] = {rc.first, rc.second};
        j["geometry"] = g;
    }
    return j;
}

ValidationReport validate_block(const BlockSpec& spec) {
    ValidationReport rep;
    auto flag = [&rep](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };

    if (spec.vars.empty()) flag("block has no variables");
    std::vector<std::string> seen;
    for (const auto& v : spec.vars) {
        if (v.name == spec.interface_symbol)
            flag("variable '" + v.name + "' shadows the interface symbol");
        if (std::count(seen.begin(), seen.end(), v.name))
            flag("duplicate variable '" + v.name + "'");
        seen.push_back(v.name);
    }
    if (spec.chain_index() < 0)
        flag("chain variable '" + spec.chain_var + "' is not among the block variables");

    // A bound of the j-th variable may reference only variables listed
    // strictly before it: those are still free when it is integrated.
    for (size_t j = 0; j < spec.vars.size(); ++j) {
        for (const BoundRef* b : {&spec.vars[j].lower, &spec.vars[j].upper}) {
            if (b->kind != BoundRef::Kind::variable) continue;
            if (b->name == spec.interface_symbol) continue;
            auto it = std::find(seen.begin(), seen.end(), b->name);
            size_t pos = static_cast<size_t>(it - seen.begin());
            if (it == seen.end())
                flag("bound of '" + spec.vars[j].name + "' references unknown '" + b->name + "'");
            else if (pos >= j)
                flag("bound of '" + spec.vars[j].name + "' references '" + b->name +
                     "', which is already integrated at that point");
        }
    }

    if (!spec.geometry.empty()) {
        std::set<std::pair<int, int>> cells;
        for (const auto& v : spec.vars) {
            if (!spec.geometry.count(v.name)) {
                flag("geometry is missing variable '" + v.name + "'");
                continue;
            }
            if (!cells.insert(spec.geometry.at(v.name)).second)
                flag("geometry maps two variables to the same cell");
        }
        if (!spec.geometry.count(spec.interface_symbol)) {
            flag("geometry is missing the interface symbol");
        } else if (spec.chain_index() >= 0 && spec.geometry.count(spec.chain_var)) {
            auto chain = spec.geometry.at(spec.chain_var);
            auto iface = spec.geometry.at(spec.interface_symbol);
            if (chain.first != 0 || chain.second != iface.second || iface.first <= 0)
                flag("geometry does not chain: the chain cell must sit at row offset 0 "
                     "in the interface column, with the interface strictly above");
        }
    }
    return rep;
}

namespace {

void require_valid(const BlockSpec& spec) {
    auto rep = validate_block(spec);
    if (rep.ok) return;
    std::string msg = "invalid block spec:";
    for (const auto& p : rep.problems) msg += "\n  - " + p;
    throw usage_error(msg);
}

} // namespace

Polynomial apply_block(const BlockSpec& spec, const Polynomial& p) {
    require_valid(spec);
    auto space = spec.space();
    const int c = spec.chain_index();
    MultivariatePolynomial e = MultivariatePolynomial::constant(space, Rational(1));
    for (int j = static_cast<int>(spec.vars.size()) - 1; j >= 0; --j) {
        if (j == c)
            e = e * MultivariatePolynomial::from_univariate(p, space, spec.chain_var);
        e = integrate_layer(e, spec.vars[j].name, spec.vars[j].lower, spec.vars[j].upper);
    }
    return e.to_univariate(spec.interface_symbol);
}

DensityTower::DensityTower(BlockSpec spec, int n) : spec_(std::move(spec)) {
    require_valid(spec_);
    auto space = spec_.space();
    const int m = spec_.cells_per_block();
    suffix_.assign(m, MultivariatePolynomial(space));
    suffix_[m - 1] = MultivariatePolynomial::constant(space, Rational(1));
    for (int j = m - 2; j >= 0; --j)
        suffix_[j] = integrate_layer(suffix_[j + 1], spec_.vars[j + 1].name,
                                     spec_.vars[j + 1].lower, spec_.vars[j + 1].upper);
    push_level_rational(Polynomial::constant(Rational(1), spec_.interface_symbol));
    level_partials_.emplace_back();
    extend(n);
}

void DensityTower::push_level_rational(Polynomial p) {
    levels_.push_back(std::move(p));
    levels_ready_.push_back(1);
    ints_.emplace_back();
    ints_ready_.push_back(0);
}

void DensityTower::push_level_integer(std::vector<Integer> e) {
    ints_.push_back(std::move(e));
    ints_ready_.push_back(1);
    levels_.emplace_back(Polynomial(spec_.interface_symbol));
    levels_ready_.push_back(0);
}

Integer DensityTower::level_scale(int k) const {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(),
               static_cast<unsigned long>(spec_.cells_per_block()) *
                   static_cast<unsigned long>(k));
    return f;
}

const Polynomial& DensityTower::level(int k) const {
    if (k < 0 || k > depth()) throw usage_error("tower level out of range");
    if (!levels_ready_[k]) {
        const Integer fact = level_scale(k);
        Polynomial p(spec_.interface_symbol);
        const auto& E = ints_[k];
        for (int e = static_cast<int>(E.size()) - 1; e >= 0; --e) {
            if (E[e] == 0) continue;
            Rational c(E[e], fact);
            c.canonicalize();
            p.set_coeff(e, c);
        }
        levels_[k] = std::move(p);
        levels_ready_[k] = 1;
    }
    return levels_[k];
}

const std::vector<Integer>& DensityTower::integer_level(int k) const {
    if (k < 0 || k > depth()) throw usage_error("tower level out of range");
    if (!ints_ready_[k]) {
        const Integer fact = level_scale(k);
        const Polynomial& p = levels_[k];
        std::vector<Integer> E(p.degree() + 1);
        Integer q;
        for (int e = 0; e <= p.degree(); ++e) {
            const Rational& c = p.coeffs()[e];
            if (c == 0) continue;
            if (!mpz_divisible_p(fact.get_mpz_t(), c.get_den().get_mpz_t()))
                throw consistency_error(
                    "level coefficient denominator does not divide (m*k)!");
            mpz_divexact(q.get_mpz_t(), fact.get_mpz_t(), c.get_den().get_mpz_t());
            E[e] = c.get_num() * q;
        }
        ints_[k] = std::move(E);
        ints_ready_[k] = 1;
    }
    return ints_[k];
}

const MultivariatePolynomial& DensityTower::suffix_partial(int j) const {
    if (j < 0 || j >= static_cast<int>(suffix_.size()))
        throw usage_error("partial index out of range");
    return suffix_[j];
}

const std::vector<MultivariatePolynomial>& DensityTower::level_partials(int k) const {
    if (k < 0 || k > depth()) throw usage_error("tower level out of range");
    return level_partials_[k];
}

int DensityTower::extend(int n) {
    int computed = 0;
    const int c = spec_.chain_index();
    auto space = spec_.space();

    // Fast path: when the chain variable is integrated last with bounds
    // [0, interface], the block collapses to the bivariate kernel
    // suffix_[0](chain, iface) and each level update is the convolution
    // p_{k+1}(z) = int_0^z K(x,z) p_k(x) dx. On the integer-scaled levels
    // E_k = (m*k)! p_k it runs gcd-free: every division below is exact.
    struct KernelTerm { int i, j; Integer num; };
    std::vector<KernelTerm> kterms;
    Integer kden = 1;
    bool fast = c == 0 && spec_.vars[0].lower == BoundRef::zero() &&
                spec_.vars[0].upper == BoundRef::var(spec_.interface_symbol);
    if (fast) {
        const size_t iface = spec_.vars.size();
        for (const auto& [exps, coeff] : suffix_[0].monomials()) {
            for (size_t t = 1; t < exps.size() && fast; ++t)
                if (exps[t] != 0 && t != iface) fast = false;
            if (!fast) break;
            mpz_lcm(kden.get_mpz_t(), kden.get_mpz_t(), coeff.get_den().get_mpz_t());
        }
        if (fast)
            for (const auto& [exps, coeff] : suffix_[0].monomials())
                kterms.push_back({exps[0], exps[iface],
                                  Integer(coeff.get_num() * (kden / coeff.get_den()))});
    }

    const int m = spec_.cells_per_block();
    while (depth() < n) {
        const int k = depth();
        if (fast) {
            const std::vector<Integer>& E = integer_level(k);
            const int dp = static_cast<int>(E.size()) - 1;

            int imax = 0, jmax = 0;
            for (const auto& kt : kterms) {
                imax = std::max(imax, kt.i);
                jmax = std::max(jmax, kt.j);
            }
            // E_{k+1}[e] = P/(kden*dene) * sum q_{ij} E_k[d] dene/(e-j) with
            // P = (mk+1)...(mk+m) and d = e-1-i-j; the per-e lcm dene over
            // the few kernel j-values stays word-sized, and the final
            // division is exact because E_{k+1} has integer coefficients.
            Integer P = 1;
            for (int t = m * k + 1; t <= m * (k + 1); ++t) P *= t;
            const int emax = dp + imax + jmax + 1;
            std::vector<Integer> out(emax + 1);
            Integer acc, scaled, dene, div;
            for (int e = emax; e >= 1; --e) {
                dene = 1;
                for (const auto& kt : kterms) {
                    const int d = e - 1 - kt.i - kt.j;
                    if (d < 0 || d > dp) continue;
                    mpz_lcm_ui(dene.get_mpz_t(), dene.get_mpz_t(),
                               static_cast<unsigned long>(e - kt.j));
                }
                acc = 0;
                for (const auto& kt : kterms) {
                    const int d = e - 1 - kt.i - kt.j;
                    if (d < 0 || d > dp) continue;
                    mpz_divexact_ui(scaled.get_mpz_t(), dene.get_mpz_t(),
                                    static_cast<unsigned long>(e - kt.j));
                    scaled *= kt.num;
                    mpz_addmul(acc.get_mpz_t(), scaled.get_mpz_t(),
                               E[d].get_mpz_t());
                }
                if (acc == 0) continue;
                acc *= P;
                div = kden * dene;
                mpz_divexact(out[e].get_mpz_t(), acc.get_mpz_t(), div.get_mpz_t());
            }
            while (!out.empty() && out.back() == 0) out.pop_back();
            push_level_integer(std::move(out));
            level_partials_.emplace_back(); // no conditionals precede the chain var
            ++computed;
            continue;
        }
        MultivariatePolynomial e =
            suffix_[c] *
            MultivariatePolynomial::from_univariate(levels_[k], space, spec_.chain_var);
        std::vector<MultivariatePolynomial> lp;
        lp.reserve(c);
        for (int j = c; j >= 1; --j) {
            e = integrate_layer(e, spec_.vars[j].name, spec_.vars[j].lower,
                                spec_.vars[j].upper);
            lp.push_back(e); // conditional for variable j-1 at this level
        }
        std::reverse(lp.begin(), lp.end());
        level_partials_[k] = std::move(lp);
        e = integrate_layer(e, spec_.vars[0].name, spec_.vars[0].lower, spec_.vars[0].upper);
        push_level_rational(e.to_univariate(spec_.interface_symbol));
        level_partials_.emplace_back();
        ++computed;
    }
    return computed;
}

bool DensityTower::operator==(const DensityTower& o) const {
    if (spec_.canonical_string() != o.spec_.canonical_string() || depth() != o.depth())
        return false;
    for (int k = 0; k <= depth(); ++k)
        if (!(level(k) == o.level(k))) return false;
    return level_partials_ == o.level_partials_ && suffix_ == o.suffix_;
}

DensityTower iterate_recurrence(const BlockSpec& spec, int n) {
    if (n < 0) throw usage_error("tower depth must be nonnegative");
    return DensityTower(spec, n);
}

long block_cell_count(const BlockSpec& spec, int n) {
    return static_cast<long>(n) * spec.cells_per_block() + 1;
}

CountResult count_fillings(const DensityTower& tower, int n) {
    if (n < 0 || n > tower.depth())
        throw usage_error("requested level exceeds the tower depth");
    CountResult res;
    res.n = n;
    res.cells = block_cell_count(tower.block(), n);
    res.integral = tower.level(n).definite_unit_integral();
    Rational f = Rational(factorial(static_cast<int>(res.cells))) * res.integral;
    if (f.get_den() != 1 || f <= 0)
        throw consistency_error("N! * integral is not a positive integer: " +
                                to_fraction_string(f));
    res.count = f.get_num();
    return res;
}

// ---- kernel extraction ------------------------------------------------------

namespace {

// Exact Gaussian elimination; throws if the system is inconsistent.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> aug, int ncols,
                                  const std::string& fail_msg) {
    const int nrows = static_cast<int>(aug.size());
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int r = row; r < nrows; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(aug[piv], aug[row]);
        Rational inv = aug[row][col];
        for (int c2 = col; c2 <= ncols; ++c2) aug[row][c2] /= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int c2 = col; c2 <= ncols; ++c2) aug[r][c2] -= f * aug[row][c2];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < nrows; ++r)
        if (aug[r][ncols] != 0) throw usage_error(fail_msg);

    std::vector<Rational> x(ncols, Rational(0));
    for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = aug[r][ncols];
    return x;
}

} // namespace

MultivariatePolynomial derive_kernel(const BlockSpec& spec) {
    require_valid(spec);
    const int c = spec.chain_index();
    const auto& chain = spec.vars[c];
    if (chain.lower != BoundRef::zero() ||
        chain.upper != BoundRef::var(spec.interface_symbol))
        throw usage_error("kernel extraction needs the chain variable bounded by "
                          "[0, " + spec.interface_symbol + "]");

    // Degree bookkeeping from a degree-0 probe, with a safety margin; the
    // excess coefficients must solve to zero.
    Polynomial probe0 = apply_block(spec, Polynomial::constant(Rational(1), spec.interface_symbol));
    if (probe0.is_zero()) throw usage_error("block maps constants to zero");
    const int max_total = probe0.degree() - 1 + 2;
    const int basis_count = max_total + 3;

    // Unknowns q_{il}, i + l <= max_total, for Q = sum q_{il} chain^i iface^l.
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i <= max_total; ++i)
        for (int l = 0; i + l <= max_total; ++l) unknowns.emplace_back(i, l);
    const int U = static_cast<int>(unknowns.size());

    // Pushing x^j through the block must equal int_0^z Q(x,z) x^j dx,
    // i.e. sum q_{il} z^{i+j+l+1} / (i+j+1). Match every z-power.
    std::vector<std::vector<Rational>> aug;
    for (int j = 0; j < basis_count; ++j) {
        Polynomial rj = apply_block(
            spec, Polynomial::monomial(Rational(1), j, spec.interface_symbol));
        const int tmax = std::max(rj.degree(), max_total + j + 1);
        for (int t = 0; t <= tmax; ++t) {
            std::vector<Rational> rowv(U + 1, Rational(0));
            bool nontrivial = false;
            for (int u = 0; u < U; ++u) {
                auto [i, l] = unknowns[u];
                if (i + j + l + 1 == t) {
                    rowv[u] = Rational(1, i + j + 1);
                    nontrivial = true;
                }
            }
            rowv[U] = rj.coeff(t);
            if (nontrivial || rowv[U] != 0) aug.push_back(std::move(rowv));
        }
    }

    auto q = solve_exact(std::move(aug), U,
                         "kernel is not a single polynomial in (" + chain.name + ", " +
                             spec.interface_symbol + ")");

    MultivariatePolynomial Q(std::vector<std::string>{chain.name, spec.interface_symbol});
    for (int u = 0; u < U; ++u)
        if (q[u] != 0) Q.add_term({unknowns[u].first, unknowns[u].second}, q[u]);
    return Q;
}

// ---- serialization ----------------------------------------------------------

namespace {

nlohmann::json mpoly_to_json(const MultivariatePolynomial& p) {
    nlohmann::json j;
    j["vars"] = p.vars();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, coeff] : p.monomials())
        terms.push_back({{"e", e}, {"c", to_fraction_string(coeff)}});
    j["terms"] = std::move(terms);
    return j;
}

MultivariatePolynomial mpoly_from_json(const nlohmann::json& j) {
    MultivariatePolynomial p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("e").get<std::vector<int>>(), parse_fraction(t.at("c").get<std::string>()));
    return p;
}

constexpr int kTowerFormatVersion = 1;

} // namespace

DensityTower tower_from_parts(BlockSpec spec, std::vector<Polynomial> levels,
                              std::vector<std::vector<MultivariatePolynomial>> lp) {
    DensityTower t(spec, 0);
    if (levels.empty() || !(levels[0] == t.level(0)))
        throw usage_error("tower cache does not start at p_0 = 1");
    if (lp.size() != levels.size())
        throw usage_error("tower cache partial list has the wrong length");
    t.levels_ = std::move(levels);
    t.levels_ready_.assign(t.levels_.size(), 1);
    t.ints_.assign(t.levels_.size(), {});
    t.ints_ready_.assign(t.levels_.size(), 0);
    t.level_partials_ = std::move(lp);
    return t;
}

void save_tower(const DensityTower& tower, const std::string& path) {
    nlohmann::json j;
    j["version"] = kTowerFormatVersion;
    j["model_hash"] = tower.block().model_hash();
    j["block"] = tower.block().to_json();
    nlohmann::json levels = nlohmann::json::array();
    for (int k = 0; k <= tower.depth(); ++k)
        levels.push_back({{"n", k}, {"coeffs", tower.level(k).serialize_coeffs()}});
    j["levels"] = std::move(levels);
    nlohmann::json partials = nlohmann::json::array();
    for (int jdx = 0; jdx < tower.block().cells_per_block(); ++jdx)
        partials.push_back(mpoly_to_json(tower.suffix_partial(jdx)));
    j["partials"] = std::move(partials);
    nlohmann::json lp = nlohmann::json::array();
    for (int k = 0; k <= tower.depth(); ++k) {
        nlohmann::json one = nlohmann::json::array();
        for (const auto& p : tower.level_partials(k)) one.push_back(mpoly_to_json(p));
        lp.push_back(std::move(one));
    }
    j["level_partials"] = std::move(lp);

    std::ofstream out(path);
    if (!out) throw usage_error("cannot write tower cache: " + path);
    out << j.dump();
}

DensityTower load_tower(const std::string& path, const BlockSpec* expected) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read tower cache: " + path);
    try {
        nlohmann::json j;
        in >> j;

        if (j.at("version").get<int>() != kTowerFormatVersion)
            throw usage_error("tower cache has unsupported version");
        BlockSpec spec = BlockSpec::from_json(j.at("block"));
        if (j.at("model_hash").get<std::string>() != spec.model_hash())
            throw usage_error("tower cache model hash mismatch; refusing to load");
        if (expected && expected->model_hash() != spec.model_hash())
            throw usage_error("tower cache belongs to a different block model");

        std::vector<Polynomial> levels;
        for (const auto& lv : j.at("levels")) {
            if (lv.at("n").get<int>() != static_cast<int>(levels.size()))
                throw usage_error("tower cache levels are out of order");
            levels.push_back(Polynomial::deserialize_coeffs(
                lv.at("coeffs").get<std::vector<std::string>>(), spec.interface_symbol));
        }
        std::vector<std::vector<MultivariatePolynomial>> lp;
        for (const auto& one : j.at("level_partials")) {
            std::vector<MultivariatePolynomial> v;
            for (const auto& pj : one) v.push_back(mpoly_from_json(pj));
            lp.push_back(std::move(v));
        }
        return tower_from_parts(std::move(spec), std::move(levels), std::move(lp));
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("bad tower cache JSON: ") + e.what());
    }
}

// ---- built-in model ----------------------------------------------------------

BlockSpec polyo_2nx3_block() {
    BlockSpec s;
    auto v = [](std::string n, BoundRef lo, BoundRef hi) {
        return BlockVar{std::move(n), std::move(lo), std::move(hi)};
    };
    s.vars = {
        v("x", BoundRef::zero(), BoundRef::var("z")),
        v("y", BoundRef::var("x"), BoundRef::var("z")),
        v("r", BoundRef::zero(), BoundRef::var("y")),
        v("s", BoundRef::var("r"), BoundRef::var("z")),
        v("w", BoundRef::var("z"), BoundRef::one()),
        v("v", BoundRef::var("y"), BoundRef::var("w")),
    };
    s.interface_symbol = "z";
    s.chain_var = "x";
    s.geometry = {
        {"x", {0, 1}}, {"y", {1, 1}}, {"r", {1, 0}}, {"v", {1, 2}},
        {"s", {2, 0}}, {"z", {2, 1}}, {"w", {2, 2}},
    };
    return s;
}

ShapeSpec polyo_shape(int n) {
    if (n < 0) throw usage_error("n must be nonnegative");
    ShapeSpec s;
    s.rows = 2 * n + 1;
    s.cols = 3;
    std::vector<Cell> cells{{0, 1}};
    for (int r = 1; r <= 2 * n; ++r)
        for (int c = 0; c < 3; ++c) cells.push_back({r, c});
    s.explicit_cells = std::move(cells);
    for (int k = 1; k <= n - 1; ++k) {
        s.walls.add({2 * k, 0}, WallDir::up);
        s.walls.add({2 * k, 2}, WallDir::up);
    }
    return s;
}

ShapeSpec polyo_tableau_shape(int n) {
    if (n < 1) throw usage_error("n must be positive");
    ShapeSpec s;
    s.rows = 2 * n;
    s.cols = 3;
    for (int k = 1; k <= n - 1; ++k) {
        s.walls.add({2 * k - 1, 0}, WallDir::up);
        s.walls.add({2 * k - 1, 2}, WallDir::up);
    }
    return s;
}

} // namespace ytw
