#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ytw/exact.hpp"

namespace ytw {

// Row 0 is the bottom row; labels must increase upward and rightward
// except across walls.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

enum class WallDir { up, right };

// A wall removes the increase constraint between `cell` and its neighbour
// above (up) or to its right (right). Decrease is allowed, not forced.
struct Wall {
    Cell cell;
    WallDir dir = WallDir::up;
    auto operator<=>(const Wall&) const = default;
};

struct WallSet {
    std::set<Wall> walls;
    bool contains(const Cell& c, WallDir d) const { return walls.count({c, d}) > 0; }
    void add(const Cell& c, WallDir d) { walls.insert({c, d}); }
};

struct ShapeSpec {
    int rows = 0;
    int cols = 0;
    // When absent, the cell set is the full rows x cols grid.
    std::optional<std::vector<Cell>> explicit_cells;
    WallSet walls;

    // Sorted (row, col) list.
    std::vector<Cell> cells() const;
    bool has_cell(const Cell& c) const;

    static ShapeSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Elements are indices into the shape's sorted cell list.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers; // (a, b) meaning a < b
};

// labels[element] is the element's label, a permutation of 1..n.
struct Filling {
    std::vector<int> labels;
};

// One cover relation per adjacent pair without a wall, oriented
// left -> right and bottom -> top.
Poset build_poset(const ShapeSpec& shape);

// Exact count by dynamic programming over downsets. Guarded at n <= 26.
Integer count_linear_extensions(const Poset& poset);

// All linear extensions as fillings, in lexicographic order of the
// extension sequence. Throws capacity_error past `limit`.
std::vector<Filling> enumerate_fillings(const Poset& poset, std::uint64_t limit);

bool is_valid_filling(const ShapeSpec& shape, const Filling& filling);

} // namespace ytw
