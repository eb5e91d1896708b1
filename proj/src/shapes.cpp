#include "ytw/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "ytw/errors.hpp"

namespace ytw {

std::vector<Cell> ShapeSpec::cells() const {
    std::vector<Cell> out;
    if (explicit_cells) {
        out = *explicit_cells;
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    } else {
        out.reserve(static_cast<size_t>(rows) * cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) out.push_back({r, c});
    }
    return out;
}

bool ShapeSpec::has_cell(const Cell& c) const {
    if (!explicit_cells)
        return c.row >= 0 && c.row < rows && c.col >= 0 && c.col < cols;
    return std::find(explicit_cells->begin(), explicit_cells->end(), c) !=
           explicit_cells->end();
}

ShapeSpec ShapeSpec::from_json(const nlohmann::json& j) {
    ShapeSpec s;
    try {
        s.rows = j.at("rows").get<int>();
        s.cols = j.at("cols").get<int>();
        if (s.rows <= 0 || s.cols <= 0) throw usage_error("rows and cols must be positive");
        if (j.contains("cells")) {
            // Exact cell list; overrides the implied full grid.
            std::vector<Cell> cells;
            for (const auto& rc : j.at("cells"))
                cells.push_back({rc.at(0).get<int>(), rc.at(1).get<int>()});
            s.explicit_cells = std::move(cells);
        } else if (j.contains("extra_cells")) {
            // Full rows x cols grid plus the listed cells.
            std::vector<Cell> cells;
            for (int r = 0; r < s.rows; ++r)
                for (int c = 0; c < s.cols; ++c) cells.push_back({r, c});
            for (const auto& rc : j.at("extra_cells"))
                cells.push_back({rc.at(0).get<int>(), rc.at(1).get<int>()});
            s.explicit_cells = std::move(cells);
        }
        if (j.contains("walls")) {
            for (const auto& w : j.at("walls")) {
                Cell c{w.at("cell").at(0).get<int>(), w.at("cell").at(1).get<int>()};
                std::string d = w.at("dir").get<std::string>();
                if (d != "up" && d != "right")
                    throw usage_error("wall dir must be 'up' or 'right'");
                s.walls.add(c, d == "up" ? WallDir::up : WallDir::right);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("bad shape JSON: ") + e.what());
    }
    return s;
}

nlohmann::json ShapeSpec::to_json() const {
    nlohmann::json j;
    j["rows"] = rows;
    j["cols"] = cols;
    if (explicit_cells) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : cells()) list.push_back({c.row, c.col});
        j["cells"] = list;
    }
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : walls.walls)
        ws.push_back({{"cell", {w.cell.row, w.cell.col}},
                      {"dir", w.dir == WallDir::up ? "up" : "right"}});
    j["walls"] = ws;
    return j;
}

Poset build_poset(const ShapeSpec& shape) {
    auto cells = shape.cells();
    std::map<Cell, int> index;
    for (size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);

    for (const auto& w : shape.walls.walls) {
        Cell to = w.cell;
        if (w.dir == WallDir::up) to.row += 1; else to.col += 1;
        if (!index.count(w.cell) || !index.count(to))
            throw usage_error("wall edge outside the shape at (" +
                              std::to_string(w.cell.row) + "," +
                              std::to_string(w.cell.col) + ")");
    }

    Poset p;
    p.n = static_cast<int>(cells.size());
    for (const auto& c : cells) {
        Cell right{c.row, c.col + 1};
        Cell up{c.row + 1, c.col};
        if (index.count(right) && !shape.walls.contains(c, WallDir::right))
            p.covers.emplace_back(index[c], index[right]);
        if (index.count(up) && !shape.walls.contains(c, WallDir::up))
            p.covers.emplace_back(index[c], index[up]);
    }
    return p;
}

namespace {

constexpr int kOracleMaxElements = 26;

std::vector<std::uint32_t> predecessor_masks(const Poset& poset) {
    std::vector<std::uint32_t> pred(poset.n, 0);
    for (auto [a, b] : poset.covers) {
        if (a < 0 || b < 0 || a >= poset.n || b >= poset.n)
            throw usage_error("cover relation out of range");
        pred[b] |= 1u << a;
    }
    return pred;
}

} // namespace

Integer count_linear_extensions(const Poset& poset) {
    if (poset.n > kOracleMaxElements)
        throw capacity_error("poset has " + std::to_string(poset.n) +
                             " elements; the downset oracle is limited to " +
                             std::to_string(kOracleMaxElements) +
                             " -- use the density method");
    if (poset.n == 0) return 1;
    auto pred = predecessor_masks(poset);
    const std::uint32_t full = (poset.n == 32) ? ~0u : ((1u << poset.n) - 1);

    std::unordered_map<std::uint32_t, Integer> memo;
    std::function<const Integer&(std::uint32_t)> go =
        [&](std::uint32_t mask) -> const Integer& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Integer total = 0;
        if (mask == full) {
            total = 1;
        } else {
            for (int e = 0; e < poset.n; ++e)
                if (!((mask >> e) & 1) && (pred[e] & ~mask) == 0)
                    total += go(mask | (1u << e));
        }
        return memo.emplace(mask, std::move(total)).first->second;
    };
    return go(0);
}

std::vector<Filling> enumerate_fillings(const Poset& poset, std::uint64_t limit) {
    if (poset.n > kOracleMaxElements)
        throw capacity_error("poset too large for enumeration");
    auto pred = predecessor_masks(poset);

    std::vector<Filling> out;
    std::vector<int> order;
    order.reserve(poset.n);
    std::function<void(std::uint32_t)> go = [&](std::uint32_t mask) {
        if (static_cast<int>(order.size()) == poset.n) {
            if (out.size() >= limit)
                throw capacity_error("enumeration exceeds the requested limit");
            Filling f;
            f.labels.assign(poset.n, 0);
            for (int i = 0; i < poset.n; ++i) f.labels[order[i]] = i + 1;
            out.push_back(std::move(f));
            return;
        }
        for (int e = 0; e < poset.n; ++e)
            if (!((mask >> e) & 1) && (pred[e] & ~mask) == 0) {
                order.push_back(e);
                go(mask | (1u << e));
                order.pop_back();
            }
    };
    go(0);
    return out;
}

bool is_valid_filling(const ShapeSpec& shape, const Filling& filling) {
    auto cells = shape.cells();
    if (filling.labels.size() != cells.size()) return false;
    std::vector<char> seen(cells.size() + 1, 0);
    for (int l : filling.labels) {
        if (l < 1 || l > static_cast<int>(cells.size()) || seen[l]) return false;
        seen[l] = 1;
    }
    Poset p = build_poset(shape);
    for (auto [a, b] : p.covers)
        if (filling.labels[a] > filling.labels[b]) return false;
    return true;
}

} // namespace ytw
