#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ytw/density.hpp"
#include "ytw/errors.hpp"
#include "ytw/formulas.hpp"
#include "ytw/shapes.hpp"

using namespace ytw;

namespace {

const char* kSequence[] = {
    "1",
    "12",
    "8550",
    "39235950",
    "629738299350",
    "26095645151941500",
};

// The transfer polynomial in factored form:
// (1/24)(z-1)(x-z)(3x^3 - 7x^2 z - x z^2 - z^3 - 2x^2 + 4xz + 4z^2).
MultivariatePolynomial reference_kernel() {
    std::vector<std::string> xz{"x", "z"};
    auto X = MultivariatePolynomial::variable(xz, "x");
    auto Z = MultivariatePolynomial::variable(xz, "z");
    auto one = MultivariatePolynomial::constant(xz, Rational(1));
    auto cubic = X * X * X * Rational(3) - X * X * Z * Rational(7) - X * Z * Z -
                 Z * Z * Z - X * X * Rational(2) + X * Z * Rational(4) +
                 Z * Z * Rational(4);
    return (Z - one) * (X - Z) * cubic * Rational(1, 24);
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("block validation accepts the built-in model") {
    auto rep = validate_block(polyo_2nx3_block());
    CHECK(rep.ok);
    CHECK(rep.problems.empty());
}

TEST_CASE("block validation rejects broken specs") {
    auto bad_bound = polyo_2nx3_block();
    // "y" is integrated before "v"; referencing it from "w" (listed later
    // than "y" was integrated... make a forward reference instead).
    bad_bound.vars[0].lower = BoundRef::var("y"); // forward reference
    CHECK_FALSE(validate_block(bad_bound).ok);

    auto no_chain = polyo_2nx3_block();
    no_chain.chain_var = "q";
    CHECK_FALSE(validate_block(no_chain).ok);

    auto dup = polyo_2nx3_block();
    dup.vars[1].name = "x";
    CHECK_FALSE(validate_block(dup).ok);

    auto shadow = polyo_2nx3_block();
    shadow.vars[1].name = "z";
    CHECK_FALSE(validate_block(shadow).ok);

    auto bad_geom = polyo_2nx3_block();
    bad_geom.geometry["y"] = bad_geom.geometry["r"];
    CHECK_FALSE(validate_block(bad_geom).ok);

    auto empty = BlockSpec{};
    CHECK_FALSE(validate_block(empty).ok);
}

TEST_CASE("block JSON roundtrip preserves the canonical form") {
    auto spec = polyo_2nx3_block();
    auto back = BlockSpec::from_json(spec.to_json());
    CHECK(back.canonical_string() == spec.canonical_string());
    CHECK(back.model_hash() == spec.model_hash());
    CHECK(validate_block(back).ok);

    // The hash reacts to any change of the block.
    auto other = spec;
    other.vars[2].lower = BoundRef::var("x");
    CHECK(other.model_hash() != spec.model_hash());
}

TEST_CASE("recurrence reproduces the counting sequence") {
    auto tower = iterate_recurrence(polyo_2nx3_block(), 5);
    for (int n = 0; n <= 5; ++n) {
        auto res = count_fillings(tower, n);
        CAPTURE(n);
        CHECK(res.cells == 6 * n + 1);
        CHECK(res.count == Integer(kSequence[n]));
    }
    // p_n vanishes at 0 and carries unit interface degree structure.
    for (int n = 1; n <= 5; ++n)
        CHECK(tower.level(n).evaluate(Rational(0)) == Rational(0));
}

TEST_CASE("density counts match the brute-force oracle") {
    auto tower = iterate_recurrence(polyo_2nx3_block(), 3);
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        Integer oracle = count_linear_extensions(build_poset(polyo_shape(n)));
        CHECK(count_fillings(tower, n).count == oracle);
    }
}

TEST_CASE("apply_block equals one tower step") {
    auto spec = polyo_2nx3_block();
    auto tower = iterate_recurrence(spec, 3);
    for (int k = 0; k < 3; ++k)
        CHECK(apply_block(spec, tower.level(k)) == tower.level(k + 1));
}

TEST_CASE("derived kernel matches the closed form") {
    auto Q = derive_kernel(polyo_2nx3_block());
    CHECK(Q == reference_kernel());
}

TEST_CASE("kernel reproduces the recurrence") {
    auto Q = reference_kernel();
    auto tower = iterate_recurrence(polyo_2nx3_block(), 4);
    std::vector<std::string> xz{"x", "z"};
    for (int k = 0; k < 4; ++k) {
        auto pk = MultivariatePolynomial::from_univariate(tower.level(k), xz, "x");
        auto next = integrate_layer(Q * pk, "x", BoundRef::zero(), BoundRef::var("z"));
        CHECK(next.to_univariate("z") == tower.level(k + 1));
    }
}

TEST_CASE("extend is incremental and idempotent") {
    auto tower = iterate_recurrence(polyo_2nx3_block(), 2);
    CHECK(tower.depth() == 2);
    CHECK(tower.extend(2) == 0);
    CHECK(tower.extend(5) == 3);
    CHECK(tower.depth() == 5);
    CHECK(tower == iterate_recurrence(polyo_2nx3_block(), 5));
    CHECK_THROWS_AS(count_fillings(tower, 6), usage_error);
    CHECK_THROWS_AS(tower.level(-1), usage_error);
}

TEST_CASE("tower cache roundtrip is exact") {
    TempFile f("ytw_test_tower.json");
    auto tower = iterate_recurrence(polyo_2nx3_block(), 4);
    save_tower(tower, f.path);
    auto spec = polyo_2nx3_block();
    auto loaded = load_tower(f.path, &spec);
    CHECK(loaded == tower);
    // Counting from the loaded tower gives identical results.
    for (int n = 0; n <= 4; ++n)
        CHECK(count_fillings(loaded, n).count == count_fillings(tower, n).count);
}

TEST_CASE("tampered or mismatched caches are refused") {
    TempFile f("ytw_test_tower_tamper.json");
    auto tower = iterate_recurrence(polyo_2nx3_block(), 2);
    save_tower(tower, f.path);

    nlohmann::json j;
    {
        std::ifstream in(f.path);
        in >> j;
    }

    SUBCASE("hash mismatch") {
        auto t = j;
        t["model_hash"] = "deadbeefdeadbeef";
        std::ofstream(f.path) << t.dump();
        CHECK_THROWS_AS(load_tower(f.path), usage_error);
    }
    SUBCASE("edited block") {
        auto t = j;
        t["block"]["vars"][0]["lower"] = "1";
        std::ofstream(f.path) << t.dump();
        CHECK_THROWS_AS(load_tower(f.path), usage_error);
    }
    SUBCASE("wrong expected model") {
        auto other = polyo_2nx3_block();
        other.vars[2].lower = BoundRef::var("x");
        CHECK_THROWS_AS(load_tower(f.path, &other), usage_error);
    }
    SUBCASE("unsupported version") {
        auto t = j;
        t["version"] = 999;
        std::ofstream(f.path) << t.dump();
        CHECK_THROWS_AS(load_tower(f.path), usage_error);
    }
    SUBCASE("corrupted base level") {
        auto t = j;
        t["levels"][0]["coeffs"] = {"2"};
        std::ofstream(f.path) << t.dump();
        CHECK_THROWS_AS(load_tower(f.path), usage_error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_tower(f.path + ".does-not-exist"), usage_error);
    }
}

TEST_CASE("shape builders for the built-in model") {
    // n = 0 degenerates to the single extra cell.
    CHECK(polyo_shape(0).cells().size() == 1);
    for (int n = 1; n <= 4; ++n) {
        auto s = polyo_shape(n);
        CHECK(static_cast<long>(s.cells().size()) ==
              block_cell_count(polyo_2nx3_block(), n));
        // The tableau shape is the polyomino minus the bottom cell, shifted.
        auto t = polyo_tableau_shape(n);
        CHECK(t.cells().size() == static_cast<size_t>(6 * n));
        CHECK(t.walls.walls.size() == s.walls.walls.size());
    }
    // Tableau counts: removing the bottom cell and forcing label 1 there.
    // n = 1: the plain 2 x 3 grid has 5 fillings.
    CHECK(count_linear_extensions(build_poset(polyo_tableau_shape(1))) == 5);
}

TEST_CASE("kernel extraction rejects non-chained specs") {
    auto spec = polyo_2nx3_block();
    spec.vars[0].upper = BoundRef::one();
    CHECK_THROWS_AS(derive_kernel(spec), usage_error);
}

TEST_CASE("custom block: a bare two-cell column") {
    // One variable above the interface: p_{k+1}(z) = int_z^1 ... no chain
    // into z; instead chain through the single variable on [0, z].
    BlockSpec s;
    s.vars = {BlockVar{"a", BoundRef::zero(), BoundRef::var("z")}};
    s.chain_var = "a";
    REQUIRE(validate_block(s).ok);
    // p_{k}(z) = z^k / k!; counts = (n+1)! * 1/(n+1)! = 1 (a single chain).
    auto tower = iterate_recurrence(s, 6);
    for (int n = 0; n <= 6; ++n) CHECK(count_fillings(tower, n).count == 1);
    // Kernel is the constant 1.
    auto Q = derive_kernel(s);
    auto one = MultivariatePolynomial::constant({"a", "z"}, Rational(1));
    CHECK(Q == one);
}
