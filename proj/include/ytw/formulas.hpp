#pragma once

#include <vector>

#include "ytw/exact.hpp"
#include "ytw/shapes.hpp"

namespace ytw {

// ---- combinatorial primitives ------------------------------------------

Integer factorial(int n);
Integer binomial(const Integer& n, long k); // 0 when k < 0 or k > n
Integer binomial(long n, long k);
// n! / (m_1! ... m_k! (n - sum m_i)!)
Integer multinomial(long n, const std::vector<long>& parts);
Integer falling_factorial(long n, long k);
Integer double_factorial_odd(long n); // (2n-1)!!
Integer catalan(long n);

// ---- two-column wall patterns ------------------------------------------

enum class TwoColPattern {
    walls_everywhere,
    horizontal_everywhere,
    one_column_horizontal,
    vertical_everywhere,
    no_walls,
};

Integer two_col_intro_count(int n, TwoColPattern pattern);

// Number of n x 2 tableaux with k vertical walls, summed over the
// C(n,k) wall placements: C(n,k) C(2n,n) / (n+1-k).
Integer vertical_walls_count(int n, int k);

// Average count over the C(n,k) wall placements: C(2n,n)/(n+1-k). The
// per-placement counts vary with the wall rows; only their mean is this
// simple.
Rational avg_extensions_random_walls(int n, int k);

// P(X_n = k) = C(n+1,k)/(2^{n+1}-1) for k = 0..n.
std::vector<Rational> wall_count_pmf(int n);

// ---- coloured-path bijection -------------------------------------------

struct ColouredPath {
    enum class Step { up, down_red, down_blue };
    std::vector<Step> steps;
};

// Filling of an n x 2 shape (labels indexed by sorted cells of the plain
// n x 2 grid) with vertical walls only. Step m is up when entry m sits in
// the left column; a down step is red exactly when its row has a wall.
ColouredPath tableau_to_coloured_path(int n, const Filling& filling, const WallSet& walls);

// Inverse map; reconstructs the filling and the wall set exactly.
std::pair<Filling, WallSet> path_to_tableau(const ColouredPath& path);

// ---- first-column / multi-column wall formulas ---------------------------

// Strictly increasing wall heights 0 < h_1 < ... < h_k < n.
using HeightList = std::vector<int>;

// C(2n,lambda) - C(2n,lambda-1)
Integer lemma_fillings_count(int n, int lambda);

// n x 2 tableaux with walls in the first column at the given heights:
// (1/(2n+1)) prod_i C(2 h_i + 1, h_i - h_{i-1}).
Integer first_column_walls_count(int n, const HeightList& heights);

// n x m tableaux with length-(m-1) walls from column 1 to m-1 at the given
// heights (hole in the last column).
Integer multi_column_walls_count(int n, int m, const HeightList& heights);

// Walls between every row, hole in the last column: (mn)! / (n! (m!)^n).
Integer every_row_walls_count(int n, int m);

// ---- hook lengths ---------------------------------------------------------

// Weakly decreasing positive row lengths.
using Partition = std::vector<int>;

Integer hook_length_count(const Partition& shape);

// Tableau cut by walls into independent parts: multinomial over the part
// sizes times the product of hook-length counts.
Integer split_product_count(int n_cells, const std::vector<Partition>& parts);

// Shape builders for oracle cross-checks.
ShapeSpec two_col_shape(int n, TwoColPattern pattern);
ShapeSpec first_column_walls_shape(int n, const HeightList& heights);
ShapeSpec multi_column_walls_shape(int n, int m, const HeightList& heights);
ShapeSpec every_row_walls_shape(int n, int m);

} // namespace ytw
