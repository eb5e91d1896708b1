#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ytw/exact.hpp"
#include "ytw/mpoly.hpp"
#include "ytw/poly.hpp"
#include "ytw/shapes.hpp"

namespace ytw {

struct BlockVar {
    std::string name;
    BoundRef lower;
    BoundRef upper;
};

// The periodic building block of the recurrence tower. Variables are listed
// outermost first; the innermost integral is the last entry. The chain
// variable is the one the previous level's density is substituted into, and
// it becomes the interface of the next block down when sampling.
struct BlockSpec {
    std::vector<BlockVar> vars;
    std::string interface_symbol = "z";
    std::string chain_var;
    // Optional rendering map: variable (and interface symbol) -> (row offset,
    // column) within one block. Row offsets are relative to the block base.
    std::map<std::string, std::pair<int, int>> geometry;

    int cells_per_block() const { return static_cast<int>(vars.size()); }
    int chain_index() const; // -1 when chain_var is not among vars
    // Variable names plus the interface symbol; the ambient space of all
    // block polynomials.
    std::vector<std::string> space() const;

    std::string canonical_string() const;
    std::string model_hash() const; // FNV-1a 64, hex

    static BlockSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

// Accepts iff every bound is 0, 1, the interface, or a variable listed
// strictly earlier (i.e. still free when its referent is integrated), the
// chain variable occurs exactly once, and the geometry (if any) is injective
// and chains blocks consistently.
ValidationReport validate_block(const BlockSpec& spec);

struct CountResult {
    int n = 0;
    long cells = 0;
    Rational integral;
    Integer count;
};

// p_0..p_n plus the cached partial integrals the sampler needs.
class DensityTower {
public:
    DensityTower(BlockSpec spec, int n);

    const BlockSpec& block() const { return spec_; }
    int depth() const { return static_cast<int>(levels_.size()) - 1; }
    const Polynomial& level(int k) const;
    // Coefficients of (m*k)! * p_k (constant term first), which are always
    // integers: each linear extension contributes a binomial-weighted
    // z^r (1-z)^(mk-r) slice of the order polytope. This is the arithmetic
    // backbone: the recurrence and the sampler run on it gcd-free, and the
    // rational form is materialized from it on demand.
    const std::vector<Integer>& integer_level(int k) const;
    Integer level_scale(int k) const; // (m*k)!
    // suffix_partial(j) = the block integrand integrated over variables
    // j+1..m-1 (integrand 1); the conditional density shape for variable j
    // once the chain value is known.
    const MultivariatePolynomial& suffix_partial(int j) const;
    // For blocks whose chain variable is not outermost: the level-dependent
    // partials (density attached) for variables outside the chain.
    const std::vector<MultivariatePolynomial>& level_partials(int k) const;

    // Extends the tower up to p_n; returns how many new levels were computed.
    int extend(int n);

    bool operator==(const DensityTower& o) const;

private:
    friend DensityTower tower_from_parts(BlockSpec spec,
                                         std::vector<Polynomial> levels,
                                         std::vector<std::vector<MultivariatePolynomial>> lp);

    void push_level_rational(Polynomial p);
    void push_level_integer(std::vector<Integer> e);

    BlockSpec spec_;
    // Dual representation per level; at least one side is always present and
    // the other is derived lazily (level() / integer_level() are where a
    // conversion, and thus any gcd work, happens).
    mutable std::vector<Polynomial> levels_;
    mutable std::vector<char> levels_ready_;
    mutable std::vector<std::vector<Integer>> ints_;
    mutable std::vector<char> ints_ready_;
    std::vector<MultivariatePolynomial> suffix_;
    std::vector<std::vector<MultivariatePolynomial>> level_partials_;
};

DensityTower iterate_recurrence(const BlockSpec& spec, int n);

// One application of the block to an arbitrary input density.
Polynomial apply_block(const BlockSpec& spec, const Polynomial& p);

// f_n = N(n)! * integral of p_n over [0,1], with N(n) = n*(vars per block)+1.
// Throws consistency_error when the result is not a positive integer.
CountResult count_fillings(const DensityTower& tower, int n);

long block_cell_count(const BlockSpec& spec, int n);

// The transfer polynomial Q with p_next(z) = int_0^z Q(x,z) p(x) dx,
// recovered by pushing the monomial basis through the block and solving the
// exact linear system. Returned over the two variables (chain, interface).
MultivariatePolynomial derive_kernel(const BlockSpec& spec);

void save_tower(const DensityTower& tower, const std::string& path);
DensityTower load_tower(const std::string& path, const BlockSpec* expected = nullptr);

// Built-in model: the 2n x 3 tableau with walls on the outer columns every
// second row, plus one extra bottom cell in the middle column.
BlockSpec polyo_2nx3_block();
ShapeSpec polyo_shape(int n);         // 6n+1 cells
ShapeSpec polyo_tableau_shape(int n); // the 2n x 3 tableau (bottom cell removed)

} // namespace ytw
