#include "ytw/models.hpp"

#include "ytw/errors.hpp"
#include "ytw/formulas.hpp"

namespace ytw {

namespace {

Model two_col_model(std::string name, TwoColPattern pattern) {
    Model m;
    m.name = std::move(name);
    m.formula = [pattern](int n, int) { return two_col_intro_count(n, pattern); };
    m.shape = [pattern](int n, int) { return two_col_shape(n, pattern); };
    return m;
}

std::vector<Model> build_registry() {
    std::vector<Model> models;

    Model polyo;
    polyo.name = "polyo-2nx3";
    polyo.shape = [](int n, int) { return polyo_shape(n); };
    polyo.block = polyo_2nx3_block();
    models.push_back(std::move(polyo));

    models.push_back(two_col_model("nx2-no-walls", TwoColPattern::no_walls));
    models.push_back(two_col_model("nx2-vertical-all", TwoColPattern::vertical_everywhere));
    models.push_back(two_col_model("nx2-horizontal-all", TwoColPattern::horizontal_everywhere));
    models.push_back(two_col_model("nx2-left-col", TwoColPattern::one_column_horizontal));
    models.push_back(two_col_model("nx2-walls-all", TwoColPattern::walls_everywhere));

    Model rowwalls;
    rowwalls.name = "nxm-rowwalls";
    rowwalls.uses_m = true;
    rowwalls.formula = [](int n, int m) { return every_row_walls_count(n, m); };
    rowwalls.shape = [](int n, int m) { return every_row_walls_shape(n, m); };
    models.push_back(std::move(rowwalls));

    return models;
}

} // namespace

const std::vector<Model>& model_registry() {
    static const std::vector<Model> models = build_registry();
    return models;
}

const Model& find_model(const std::string& name) {
    for (const auto& m : model_registry())
        if (m.name == name) return m;
    std::string known;
    for (const auto& m : model_registry()) known += " " + m.name;
    throw usage_error("unknown model '" + name + "'; known models:" + known);
}

} // namespace ytw
