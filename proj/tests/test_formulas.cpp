#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "ytw/errors.hpp"
#include "ytw/formulas.hpp"
#include "ytw/shapes.hpp"

using namespace ytw;

namespace {

Integer oracle(const ShapeSpec& s) { return count_linear_extensions(build_poset(s)); }

// All strictly increasing height lists with entries in (0, n).
std::vector<HeightList> all_height_lists(int n) {
    std::vector<HeightList> out{{}};
    for (size_t i = 0; i < out.size(); ++i) {
        HeightList base = out[i];
        int start = base.empty() ? 1 : base.back() + 1;
        for (int h = start; h < n; ++h) {
            HeightList next = base;
            next.push_back(h);
            out.push_back(next);
        }
    }
    return out;
}

// All subsets of rows 0..n-1, as vertical wall sets on an n x 2 shape.
std::vector<WallSet> all_vertical_wallsets(int n) {
    std::vector<WallSet> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        WallSet w;
        for (int r = 0; r < n; ++r)
            if (mask & (1 << r)) w.add({r, 0}, WallDir::right);
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("combinatorial primitives") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(6L, 3L) == 20);
    CHECK(binomial(6L, 0L) == 1);
    CHECK(binomial(6L, 7L) == 0);
    CHECK(binomial(6L, -1L) == 0);
    CHECK(multinomial(6, {2, 2}) == 90); // 6!/(2!2!2!)
    CHECK(multinomial(4, {4}) == 1);
    CHECK(falling_factorial(7, 3) == 210);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(1) == 1);
    CHECK(double_factorial_odd(3) == 15);
    CHECK(double_factorial_odd(5) == 945);
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("two-column patterns match the oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (auto pat : {TwoColPattern::walls_everywhere, TwoColPattern::horizontal_everywhere,
                         TwoColPattern::one_column_horizontal, TwoColPattern::vertical_everywhere,
                         TwoColPattern::no_walls}) {
            CAPTURE(n);
            CHECK(two_col_intro_count(n, pat) == oracle(two_col_shape(n, pat)));
        }
    }
}

TEST_CASE("two-column pattern closed values") {
    CHECK(two_col_intro_count(3, TwoColPattern::walls_everywhere) == 720);
    CHECK(two_col_intro_count(3, TwoColPattern::horizontal_everywhere) == 90);
    CHECK(two_col_intro_count(3, TwoColPattern::one_column_horizontal) == 15);
    CHECK(two_col_intro_count(3, TwoColPattern::vertical_everywhere) == 20);
    CHECK(two_col_intro_count(3, TwoColPattern::no_walls) == 5);
}

TEST_CASE("vertical wall counts against exhaustive oracle") {
    for (int n = 1; n <= 4; ++n) {
        std::map<int, Integer> by_k;
        for (const auto& w : all_vertical_wallsets(n)) {
            ShapeSpec s;
            s.rows = n;
            s.cols = 2;
            s.walls = w;
            by_k[static_cast<int>(w.walls.size())] += oracle(s);
        }
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(vertical_walls_count(n, k) == by_k[k]);
            // The mean over the C(n,k) placements has the closed form.
            CHECK(Rational(by_k[k]) ==
                  avg_extensions_random_walls(n, k) *
                      Rational(binomial(static_cast<long>(n), k)));
        }
    }
}

TEST_CASE("vertical wall count identities") {
    for (int n = 1; n <= 50; ++n) {
        Integer sum = 0;
        for (int k = 0; k <= n; ++k) sum += vertical_walls_count(n, k);
        Integer pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
        CHECK(sum == catalan(n) * (pow2 - 1));
    }
}

TEST_CASE("wall-count pmf normalizes and matches counts") {
    for (int n = 1; n <= 20; ++n) {
        auto pmf = wall_count_pmf(n);
        REQUIRE(pmf.size() == static_cast<size_t>(n + 1));
        Rational sum = 0;
        for (const auto& p : pmf) sum += p;
        CHECK(sum == Rational(1));
    }
    // pmf is proportional to the per-k tableau counts.
    for (int n = 1; n <= 8; ++n) {
        auto pmf = wall_count_pmf(n);
        Integer total = 0;
        for (int k = 0; k <= n; ++k) total += vertical_walls_count(n, k);
        for (int k = 0; k <= n; ++k)
            CHECK(pmf[k] * Rational(total) == Rational(vertical_walls_count(n, k)));
    }
}

TEST_CASE("coloured-path bijection roundtrips exhaustively") {
    for (int n = 1; n <= 4; ++n) {
        Integer seen = 0;
        for (const auto& w : all_vertical_wallsets(n)) {
            ShapeSpec s;
            s.rows = n;
            s.cols = 2;
            s.walls = w;
            for (const auto& f : enumerate_fillings(build_poset(s), 1u << 20)) {
                auto path = tableau_to_coloured_path(n, f, w);
                // Red down steps count the walls.
                int reds = 0;
                for (auto st : path.steps)
                    if (st == ColouredPath::Step::down_red) ++reds;
                CHECK(reds == static_cast<int>(w.walls.size()));
                auto [f2, w2] = path_to_tableau(path);
                CHECK(f2.labels == f.labels);
                CHECK(w2.walls == w.walls);
                seen += 1;
            }
        }
        // The image accounts for every (wall set, filling) pair.
        Integer expect = 0;
        for (int k = 0; k <= n; ++k) expect += vertical_walls_count(n, k);
        CHECK(seen == expect);
    }
}

TEST_CASE("invalid paths are rejected") {
    using S = ColouredPath::Step;
    // Blue down step below the axis.
    CHECK_THROWS_AS(path_to_tableau({{S::down_blue, S::up}}), usage_error);
    // Does not return to the axis.
    CHECK_THROWS_AS(path_to_tableau({{S::up, S::up, S::down_red, S::up}}), usage_error);
    // Odd length.
    CHECK_THROWS_AS(path_to_tableau({{S::up}}), usage_error);
    // Red below the axis is fine.
    CHECK_NOTHROW(path_to_tableau({{S::down_red, S::up}}));
}

TEST_CASE("lemma count and its rewritten form") {
    for (int n = 1; n <= 12; ++n) {
        for (int lambda = 1; lambda <= n; ++lambda) {
            Rational rewritten =
                Rational(Integer(2 * (n - lambda) + 1), Integer(2 * n + 1)) *
                Rational(binomial(2L * n + 1, lambda));
            rewritten.canonicalize();
            CHECK(Rational(lemma_fillings_count(n, lambda)) == rewritten);
        }
    }
    CHECK(lemma_fillings_count(3, 1) == 5);
    CHECK_THROWS_AS(lemma_fillings_count(3, 0), usage_error);
    CHECK_THROWS_AS(lemma_fillings_count(3, 4), usage_error);
}

TEST_CASE("first-column wall formula matches the oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& h : all_height_lists(n)) {
            CAPTURE(n);
            CHECK(first_column_walls_count(n, h) == oracle(first_column_walls_shape(n, h)));
        }
    }
    // No walls: plain n x 2 grid, Catalan.
    CHECK(first_column_walls_count(6, {}) == catalan(6));
}

TEST_CASE("multi-column wall formula matches the oracle") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 2; m <= 4; ++m) {
            if (n * m > 16) continue;
            for (const auto& h : all_height_lists(n)) {
                CAPTURE(n);
                CAPTURE(m);
                CHECK(multi_column_walls_count(n, m, h) ==
                      oracle(multi_column_walls_shape(n, m, h)));
            }
        }
    }
}

TEST_CASE("multi-column specializes to first-column at m = 2") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& h : all_height_lists(n))
            CHECK(multi_column_walls_count(n, 2, h) == first_column_walls_count(n, h));
}

TEST_CASE("every-row wall formula") {
    CHECK(every_row_walls_count(2, 3) == 10);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            if (n * m > 16) continue;
            CAPTURE(n);
            CAPTURE(m);
            CHECK(every_row_walls_count(n, m) == oracle(every_row_walls_shape(n, m)));
        }
    // m = 1 is a single column: one filling.
    for (int n = 1; n <= 10; ++n) CHECK(every_row_walls_count(n, 1) == 1);
    // Walls between all rows must agree with the generic height-list formula.
    for (int n = 2; n <= 5; ++n) {
        HeightList all;
        for (int h = 1; h < n; ++h) all.push_back(h);
        CHECK(every_row_walls_count(n, 3) == multi_column_walls_count(n, 3, all));
    }
}

TEST_CASE("hook lengths") {
    CHECK(hook_length_count({1}) == 1);
    CHECK(hook_length_count({2, 1}) == 2);
    CHECK(hook_length_count({3, 2}) == 5);
    CHECK(hook_length_count({2, 2, 2}) == 5);
    // Two-row rectangles are Catalan numbers.
    for (int n = 1; n <= 10; ++n) CHECK(hook_length_count({n, n}) == catalan(n));
    // Against the oracle on staircase and rectangle shapes.
    for (const Partition& p :
         {Partition{3, 2, 1}, Partition{4, 4}, Partition{4, 2, 2}, Partition{5, 1}}) {
        ShapeSpec s;
        s.rows = static_cast<int>(p.size());
        s.cols = p[0];
        s.explicit_cells = std::vector<Cell>{};
        // Rows grow upward, so put the longest row at the bottom.
        for (int r = 0; r < s.rows; ++r)
            for (int c = 0; c < p[r]; ++c) s.explicit_cells->push_back({r, c});
        CHECK(hook_length_count(p) == oracle(s));
    }
    CHECK_THROWS_AS(hook_length_count({1, 2}), usage_error);
    CHECK_THROWS_AS(hook_length_count({2, 0}), usage_error);
}

TEST_CASE("split product against a disconnected oracle shape") {
    // Two independent components: a 2x2 square and a single row of 3.
    ShapeSpec s;
    s.rows = 2;
    s.cols = 6;
    s.explicit_cells = std::vector<Cell>{
        {0, 0}, {0, 1}, {1, 0}, {1, 1}, // square
        {0, 3}, {0, 4}, {0, 5},         // row
    };
    Integer expect = oracle(s);
    CHECK(split_product_count(7, {{2, 2}, {3}}) == expect);
    CHECK_THROWS_AS(split_product_count(8, {{2, 2}, {3}}), usage_error);
}

TEST_CASE("height list validation") {
    CHECK_THROWS_AS(first_column_walls_count(3, {0}), usage_error);
    CHECK_THROWS_AS(first_column_walls_count(3, {3}), usage_error);
    CHECK_THROWS_AS(first_column_walls_count(3, {2, 1}), usage_error);
    CHECK_THROWS_AS(first_column_walls_count(3, {1, 1}), usage_error);
}
