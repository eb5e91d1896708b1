#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ytw/density.hpp"
#include "ytw/exact.hpp"
#include "ytw/shapes.hpp"

namespace ytw {

// A named family of shapes with up to three counting routes: closed form,
// brute-force oracle, and the density method.
struct Model {
    std::string name;
    bool uses_m = false;
    std::function<Integer(int n, int m)> formula; // may be empty
    std::function<ShapeSpec(int n, int m)> shape; // may be empty
    std::optional<BlockSpec> block;
};

const std::vector<Model>& model_registry();
const Model& find_model(const std::string& name); // usage_error when unknown

} // namespace ytw
