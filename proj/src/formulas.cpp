#include "ytw/formulas.hpp"

#include <algorithm>

#include "ytw/errors.hpp"

namespace ytw {

Integer factorial(int n) {
    if (n < 0) throw usage_error("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(const Integer& n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0) throw usage_error("binomial with negative n");
    return binomial(Integer(n), k);
}

Integer multinomial(long n, const std::vector<long>& parts) {
    if (n < 0) throw usage_error("multinomial with negative n");
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw usage_error("negative multinomial part");
        sum += p;
    }
    if (sum > n) throw usage_error("multinomial parts exceed n");
    Integer r = factorial(static_cast<int>(n));
    for (long p : parts) r /= factorial(static_cast<int>(p));
    r /= factorial(static_cast<int>(n - sum));
    return r;
}

Integer falling_factorial(long n, long k) {
    if (k < 0) throw usage_error("falling factorial with negative k");
    Integer r = 1;
    for (long i = 0; i < k; ++i) r *= Integer(n - i);
    return r;
}

Integer double_factorial_odd(long n) {
    if (n < 0) throw usage_error("double factorial with negative n");
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * n - 1 > 0 ? 2 * n - 1 : 1));
    if (n == 0) return 1;
    return r;
}

Integer catalan(long n) {
    if (n < 0) throw usage_error("catalan with negative n");
    return binomial(2 * n, n) / Integer(n + 1);
}

Integer two_col_intro_count(int n, TwoColPattern pattern) {
    if (n < 1) throw usage_error("n must be positive");
    switch (pattern) {
        case TwoColPattern::walls_everywhere:
            return factorial(2 * n);
        case TwoColPattern::horizontal_everywhere: {
            Integer r = factorial(2 * n);
            Integer d;
            mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(n));
            return r / d;
        }
        case TwoColPattern::one_column_horizontal:
            return double_factorial_odd(n);
        case TwoColPattern::vertical_everywhere:
            return binomial(2L * n, n);
        case TwoColPattern::no_walls:
            return catalan(n);
    }
    throw usage_error("unknown pattern");
}

Integer vertical_walls_count(int n, int k) {
    if (n < 1) throw usage_error("n must be positive");
    if (k < 0 || k > n) throw usage_error("k must lie in [0, n]");
    // C(n,k) C(2n,n) / (n+1-k) == C(n+1,k) Cat_n, which is integer-safe.
    return binomial(static_cast<long>(n) + 1, k) * catalan(n);
}

Rational avg_extensions_random_walls(int n, int k) {
    if (n < 1) throw usage_error("n must be positive");
    if (k < 0 || k > n) throw usage_error("k must lie in [0, n]");
    return Rational(binomial(2L * n, n)) / Rational(Integer(n + 1 - k));
}

std::vector<Rational> wall_count_pmf(int n) {
    if (n < 1) throw usage_error("n must be positive");
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
    denom -= 1;
    std::vector<Rational> pmf;
    pmf.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational p(binomial(static_cast<long>(n) + 1, k), denom);
        p.canonicalize();
        pmf.push_back(p);
    }
    return pmf;
}

ColouredPath tableau_to_coloured_path(int n, const Filling& filling, const WallSet& walls) {
    if (n < 1) throw usage_error("n must be positive");
    if (filling.labels.size() != static_cast<size_t>(2 * n))
        throw usage_error("filling is not over an n x 2 shape");
    for (const auto& w : walls.walls)
        if (w.dir != WallDir::right || w.cell.col != 0 || w.cell.row < 0 || w.cell.row >= n)
            throw usage_error("only vertical walls inside the n x 2 shape are allowed");

    // Sorted cells of the plain n x 2 grid: index = 2*row + col.
    std::vector<int> cell_of_label(2 * n + 1, -1);
    for (int i = 0; i < 2 * n; ++i) {
        int l = filling.labels[i];
        if (l < 1 || l > 2 * n || cell_of_label[l] != -1)
            throw usage_error("labels are not a permutation of 1..2n");
        cell_of_label[l] = i;
    }

    ColouredPath path;
    path.steps.reserve(2 * n);
    for (int m = 1; m <= 2 * n; ++m) {
        int idx = cell_of_label[m];
        int row = idx / 2, col = idx % 2;
        if (col == 0) {
            path.steps.push_back(ColouredPath::Step::up);
        } else {
            bool red = walls.contains({row, 0}, WallDir::right);
            path.steps.push_back(red ? ColouredPath::Step::down_red
                                     : ColouredPath::Step::down_blue);
        }
    }
    return path;
}

std::pair<Filling, WallSet> path_to_tableau(const ColouredPath& path) {
    const int len = static_cast<int>(path.steps.size());
    if (len == 0 || len % 2 != 0) throw usage_error("path length must be positive and even");
    const int n = len / 2;

    Filling f;
    f.labels.assign(2 * n, 0);
    WallSet walls;
    int alt = 0, ups = 0, downs = 0;
    for (int m = 0; m < len; ++m) {
        auto s = path.steps[m];
        if (s == ColouredPath::Step::up) {
            if (ups >= n) throw usage_error("path has more than n up steps");
            f.labels[2 * ups] = m + 1; // left column, bottom to top
            ++ups;
            ++alt;
        } else {
            if (downs >= n) throw usage_error("path has more than n down steps");
            if (alt <= 0 && s == ColouredPath::Step::down_blue)
                throw usage_error("blue down step below the x-axis");
            f.labels[2 * downs + 1] = m + 1; // right column
            if (s == ColouredPath::Step::down_red) walls.add({downs, 0}, WallDir::right);
            ++downs;
            --alt;
        }
    }
    if (alt != 0) throw usage_error("path does not end on the x-axis");
    return {std::move(f), std::move(walls)};
}

namespace {

void check_heights(int n, const HeightList& heights) {
    int prev = 0;
    for (int h : heights) {
        if (h <= prev || h >= n)
            throw usage_error("wall heights must satisfy 0 < h_1 < ... < h_k < n");
        prev = h;
    }
}

Integer require_integer(const Rational& q, const char* what) {
    if (q.get_den() != 1)
        throw consistency_error(std::string(what) + " evaluated to the non-integer " +
                                to_fraction_string(q));
    return q.get_num();
}

} // namespace

Integer lemma_fillings_count(int n, int lambda) {
    if (n < 1) throw usage_error("n must be positive");
    if (lambda < 1 || lambda > n) throw usage_error("lambda must lie in [1, n]");
    return binomial(2L * n, lambda) - binomial(2L * n, lambda - 1);
}

Integer first_column_walls_count(int n, const HeightList& heights) {
    if (n < 1) throw usage_error("n must be positive");
    check_heights(n, heights);
    std::vector<int> h = heights;
    h.push_back(n);
    Rational acc(1, 2L * n + 1);
    int prev = 0;
    for (int hi : h) {
        acc *= Rational(binomial(2L * hi + 1, hi - prev));
        prev = hi;
    }
    return require_integer(acc, "first-column wall count");
}

Integer multi_column_walls_count(int n, int m, const HeightList& heights) {
    if (n < 1) throw usage_error("n must be positive");
    if (m < 2) throw usage_error("m must be at least 2");
    check_heights(n, heights);
    std::vector<int> h = heights;
    h.push_back(n);

    Rational acc(factorial(m - 1), falling_factorial(static_cast<long>(m) * n + m - 1, m - 1));
    acc.canonicalize();
    int prev = 0;
    for (int hi : h) {
        long lambda = hi - prev;
        for (int j = 1; j <= m - 2; ++j) {
            Rational inv(Integer(1), binomial(lambda + j, j));
            inv.canonicalize();
            acc *= inv;
        }
        acc *= Rational(multinomial(static_cast<long>(m) * hi + m - 1,
                                    std::vector<long>(m - 1, lambda)));
        prev = hi;
    }
    return require_integer(acc, "multi-column wall count");
}

Integer every_row_walls_count(int n, int m) {
    if (n < 1 || m < 1) throw usage_error("n and m must be positive");
    Integer denom = factorial(n);
    Integer mf = factorial(m);
    Integer mfp;
    mpz_pow_ui(mfp.get_mpz_t(), mf.get_mpz_t(), static_cast<unsigned long>(n));
    denom *= mfp;
    Rational acc(factorial(n * m), denom);
    acc.canonicalize();
    return require_integer(acc, "every-row wall count");
}

Integer hook_length_count(const Partition& shape) {
    int total = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] <= 0) throw usage_error("partition parts must be positive");
        if (i > 0 && shape[i] > shape[i - 1])
            throw usage_error("partition parts must be weakly decreasing");
        total += shape[i];
    }
    Rational acc(factorial(total));
    for (size_t i = 0; i < shape.size(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            int arm = shape[i] - j - 1;
            int leg = 0;
            for (size_t i2 = i + 1; i2 < shape.size(); ++i2)
                if (shape[i2] > j) ++leg;
            acc /= Rational(Integer(arm + leg + 1));
        }
    }
    return require_integer(acc, "hook-length count");
}

Integer split_product_count(int n_cells, const std::vector<Partition>& parts) {
    std::vector<long> sizes;
    long total = 0;
    for (const auto& p : parts) {
        long s = 0;
        for (int x : p) s += x;
        sizes.push_back(s);
        total += s;
    }
    if (total != n_cells)
        throw usage_error("part sizes do not sum to the total cell count");
    Integer r = multinomial(n_cells, sizes);
    for (const auto& p : parts) r *= hook_length_count(p);
    return r;
}

ShapeSpec two_col_shape(int n, TwoColPattern pattern) {
    if (n < 1) throw usage_error("n must be positive");
    ShapeSpec s;
    s.rows = n;
    s.cols = 2;
    switch (pattern) {
        case TwoColPattern::walls_everywhere:
            for (int r = 0; r < n; ++r) s.walls.add({r, 0}, WallDir::right);
            [[fallthrough]];
        case TwoColPattern::horizontal_everywhere:
            for (int r = 0; r + 1 < n; ++r) {
                s.walls.add({r, 0}, WallDir::up);
                s.walls.add({r, 1}, WallDir::up);
            }
            break;
        case TwoColPattern::one_column_horizontal:
            for (int r = 0; r + 1 < n; ++r) s.walls.add({r, 0}, WallDir::up);
            break;
        case TwoColPattern::vertical_everywhere:
            for (int r = 0; r < n; ++r) s.walls.add({r, 0}, WallDir::right);
            break;
        case TwoColPattern::no_walls:
            break;
    }
    return s;
}

ShapeSpec first_column_walls_shape(int n, const HeightList& heights) {
    return multi_column_walls_shape(n, 2, heights);
}

ShapeSpec multi_column_walls_shape(int n, int m, const HeightList& heights) {
    if (n < 1 || m < 2) throw usage_error("need n >= 1 and m >= 2");
    check_heights(n, heights);
    ShapeSpec s;
    s.rows = n;
    s.cols = m;
    for (int h : heights)
        for (int c = 0; c <= m - 2; ++c) s.walls.add({h - 1, c}, WallDir::up);
    return s;
}

ShapeSpec every_row_walls_shape(int n, int m) {
    if (n < 1 || m < 1) throw usage_error("n and m must be positive");
    ShapeSpec s;
    s.rows = n;
    s.cols = m;
    for (int r = 0; r + 1 < n; ++r)
        for (int c = 0; c <= m - 2; ++c) s.walls.add({r, c}, WallDir::up);
    return s;
}

} // namespace ytw
