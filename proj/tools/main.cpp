// Command-line front end: exact counting, uniform sampling, sequence
// generation, verification, and wall-count distributions.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ytw/density.hpp"
#include "ytw/errors.hpp"
#include "ytw/formulas.hpp"
#include "ytw/models.hpp"
#include "ytw/sampler.hpp"
#include "ytw/shapes.hpp"
#include "ytw/stats.hpp"

namespace {

using namespace ytw;
using nlohmann::json;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string default_cache_path(const BlockSpec& spec) {
    const char* dir = std::getenv("YTW_CACHE_DIR");
    std::filesystem::path base = dir ? dir : std::filesystem::temp_directory_path();
    return (base / ("ytw-tower-" + spec.model_hash() + ".json")).string();
}

// Loads the cache when it matches, extends as needed, saves back.
// Reports how many levels actually had to be computed.
DensityTower obtain_tower(const BlockSpec& spec, int n, const std::string& cache_path,
                          int& levels_computed) {
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        DensityTower t = load_tower(cache_path, &spec);
        levels_computed = t.extend(n);
        if (levels_computed > 0) save_tower(t, cache_path);
        return t;
    }
    DensityTower t = iterate_recurrence(spec, n);
    levels_computed = n;
    if (!cache_path.empty()) save_tower(t, cache_path);
    return t;
}

BlockSpec resolve_block(const Model* model, const std::string& model_arg) {
    if (model && model->block) return *model->block;
    // Not a registry name: treat as a path to a BlockSpec JSON file.
    std::ifstream in(model_arg);
    if (!in) throw usage_error("model '" + model_arg +
                               "' has no density block and is not a readable spec file");
    json j;
    in >> j;
    return BlockSpec::from_json(j);
}

const Model* try_find_model(const std::string& name) {
    try {
        return &find_model(name);
    } catch (const usage_error&) {
        return nullptr;
    }
}

json filling_to_rows_json(const ShapeSpec& shape, const Filling& filling) {
    auto cells = shape.cells();
    int max_row = 0, max_col = 0;
    for (const auto& c : cells) {
        max_row = std::max(max_row, c.row);
        max_col = std::max(max_col, c.col);
    }
    json rows = json::array();
    for (int r = 0; r <= max_row; ++r)
        rows.push_back(std::vector<json>(max_col + 1, nullptr));
    for (size_t i = 0; i < cells.size(); ++i)
        rows[cells[i].row][cells[i].col] = filling.labels[i];
    return rows;
}

void render_ascii(std::ostream& os, const ShapeSpec& shape, const Filling& filling) {
    auto cells = shape.cells();
    int max_row = 0, max_col = 0, width = 2;
    std::map<Cell, int> label;
    for (size_t i = 0; i < cells.size(); ++i) {
        label[cells[i]] = filling.labels[i];
        max_row = std::max(max_row, cells[i].row);
        max_col = std::max(max_col, cells[i].col);
    }
    width = std::to_string(cells.size()).size();
    // Top row printed first; walls marked with '#' on the shared edge.
    for (int r = max_row; r >= 0; --r) {
        std::string sep, line;
        for (int c = 0; c <= max_col; ++c) {
            Cell cell{r, c};
            bool here = label.count(cell);
            bool above = label.count({r + 1, c});
            std::string edge = (here && above)
                                   ? (shape.walls.contains(cell, WallDir::up) ? "#" : "-")
                                   : " ";
            sep += "+";
            for (int i = 0; i < width + 2; ++i) sep += (here || above) ? edge : " ";
            bool right_wall = here && shape.walls.contains(cell, WallDir::right);
            bool left_here = c > 0 && label.count({r, c - 1});
            line += (here || left_here) ? "|" : " ";
            if (here) {
                std::string s = std::to_string(label[cell]);
                while (s.size() < static_cast<size_t>(width)) s = " " + s;
                line += " " + s + (right_wall ? "#" : " ");
            } else {
                line += std::string(width + 2, ' ');
            }
        }
        sep += "+";
        line += label.count({r, max_col}) ? "|" : " ";
        if (r == max_row) os << sep << "\n";
        os << line << "\n";
        // bottom edge of this row
        std::string bot;
        for (int c = 0; c <= max_col; ++c) {
            Cell cell{r, c};
            Cell below{r - 1, c};
            bool here = label.count(cell);
            bool under = label.count(below);
            std::string edge =
                (here && under)
                    ? (shape.walls.contains(below, WallDir::up) ? "#" : "-")
                    : ((here || under) ? "-" : " ");
            bot += "+";
            for (int i = 0; i < width + 2; ++i) bot += edge;
        }
        bot += "+";
        os << bot << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact counting and uniform random generation of Young tableaux "
                 "with walls (linear extensions of grid posets)"};
    app.require_subcommand(1);

    // ---- count ----
    auto* count_cmd = app.add_subcommand("count", "Count fillings of a model");
    std::string model_name, method = "formula", cache_path;
    int n = 1, m = 3;
    count_cmd->add_option("--model", model_name, "Registry model name or BlockSpec JSON path")
        ->required();
    count_cmd->add_option("--n", n, "Size parameter")->required();
    count_cmd->add_option("--m", m, "Column count for n x m models")->capture_default_str();
    count_cmd->add_option("--method", method, "formula|oracle|density")->capture_default_str();
    count_cmd->add_option("--cache", cache_path, "Tower cache file");

    // ---- sequence ----
    auto* seq_cmd = app.add_subcommand("sequence", "Print f_0..f_max for a density model");
    std::string seq_model = "polyo-2nx3", seq_cache;
    int max_n = 5;
    bool verbose = false;
    seq_cmd->add_option("--model", seq_model, "Registry model name or BlockSpec JSON path")->capture_default_str();
    seq_cmd->add_option("--max-n", max_n, "Last index to print")->required();
    seq_cmd->add_option("--cache", seq_cache, "Tower cache file");
    seq_cmd->add_flag("--verbose", verbose, "Print timing and cache metadata");

    // ---- sample ----
    auto* sample_cmd = app.add_subcommand("sample", "Uniform random fillings");
    std::string sample_model = "polyo-2nx3", sample_cache, format = "json";
    int sample_n = 1, count_samples = 1;
    std::uint64_t seed = 0;
    bool want_tableau = false, want_polyomino = false;
    sample_cmd->add_option("--model", sample_model, "Registry model name or BlockSpec JSON path")->capture_default_str();
    sample_cmd->add_option("--n", sample_n, "Size parameter")->required();
    sample_cmd->add_option("--count", count_samples, "Number of samples")->capture_default_str();
    sample_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sample_cmd->add_option("--format", format, "json|ascii")->capture_default_str();
    sample_cmd->add_flag("--tableau", want_tableau, "Sample the 2n x 3 tableau via rejection");
    sample_cmd->add_flag("--polyomino", want_polyomino, "Sample the raw polyomino (default)");
    sample_cmd->add_option("--cache", sample_cache, "Tower cache file");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    std::string suite = "small";
    verify_cmd->add_option("--suite", suite, "small|full")->capture_default_str();

    // ---- dist ----
    auto* dist_cmd = app.add_subcommand("dist", "Wall-count distribution of n x 2 tableaux");
    int dist_n = 1;
    int empirical_samples = 0;
    std::uint64_t dist_seed = 1;
    dist_cmd->add_option("--n", dist_n, "Number of rows")->required();
    dist_cmd->add_option("--empirical", empirical_samples,
                         "Also sample this many tableaux and report the TV distance");
    dist_cmd->add_option("--seed", dist_seed, "RNG seed for --empirical")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (count_cmd->parsed()) {
        const Model* model = try_find_model(model_name);
        Integer result;
        if (method == "formula") {
            if (!model || !model->formula)
                throw usage_error("model '" + model_name + "' has no closed form");
            result = model->formula(n, m);
        } else if (method == "oracle") {
            ShapeSpec shape;
            if (model && model->shape) shape = model->shape(n, m);
            else throw usage_error("model '" + model_name + "' has no oracle shape");
            result = count_linear_extensions(build_poset(shape));
        } else if (method == "density") {
            BlockSpec spec = resolve_block(model, model_name);
            std::string cache = cache_path;
            int computed = 0;
            DensityTower tower =
                cache.empty() ? iterate_recurrence(spec, n)
                              : obtain_tower(spec, n, cache, computed);
            result = count_fillings(tower, n).count;
        } else {
            throw usage_error("unknown method '" + method + "'");
        }
        std::cout << result.get_str() << "\n";
        json meta{{"model", model_name}, {"n", n}, {"method", method}};
        if (model && model->uses_m) meta["m"] = m;
        std::cerr << meta.dump() << "\n";
        return 0;
    }

    if (seq_cmd->parsed()) {
        const Model* model = try_find_model(seq_model);
        BlockSpec spec = resolve_block(model, seq_model);
        if (seq_cache.empty()) seq_cache = default_cache_path(spec);
        auto t0 = std::chrono::steady_clock::now();
        int computed = 0;
        DensityTower tower = obtain_tower(spec, max_n, seq_cache, computed);
        double build_ms = ms_since(t0);
        for (int k = 0; k <= max_n; ++k)
            std::cout << count_fillings(tower, k).count.get_str() << "\n";
        if (verbose) {
            json meta{{"model", seq_model},
                      {"max_n", max_n},
                      {"cache", seq_cache},
                      {"levels_computed", computed},
                      {"tower_ms", build_ms}};
            std::cerr << meta.dump() << "\n";
        }
        return 0;
    }

    if (sample_cmd->parsed()) {
        if (want_tableau && want_polyomino)
            throw usage_error("--tableau and --polyomino are mutually exclusive");
        const Model* model = try_find_model(sample_model);
        BlockSpec spec = resolve_block(model, sample_model);
        int computed = 0;
        DensityTower tower = sample_cache.empty()
                                 ? iterate_recurrence(spec, sample_n)
                                 : obtain_tower(spec, sample_n, sample_cache, computed);
        RngState rng(seed);
        ShapeSpec shape = want_tableau ? polyo_tableau_shape(sample_n) : polyo_shape(sample_n);
        for (int i = 0; i < count_samples; ++i) {
            Filling filling = want_tableau
                                  ? sample_tableau_rejection(tower, sample_n, rng)
                                  : sample_polyomino(tower, sample_n, rng).filling;
            if (format == "ascii") {
                render_ascii(std::cout, shape, filling);
                std::cout << "\n";
            } else {
                json j{{"model", sample_model},
                       {"n", sample_n},
                       {"seed", seed},
                       {"kind", want_tableau ? "tableau" : "polyomino"},
                       {"labels", filling_to_rows_json(shape, filling)},
                       {"walls", shape.to_json()["walls"]}};
                std::cout << j.dump() << "\n";
            }
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        if (suite != "small" && suite != "full")
            throw usage_error("suite must be 'small' or 'full'");
        const bool full = suite == "full";
        bool all_ok = true;
        auto report = [&all_ok](const std::string& name, bool ok) {
            std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
            all_ok = all_ok && ok;
        };

        // Three-way count reconciliation.
        {
            std::vector<std::string> names;
            for (const auto& mod : model_registry()) names.push_back(mod.name);
            auto rows = cross_validate(names, full ? 4 : 3);
            bool ok = true;
            for (const auto& row : rows)
                if (!row.agree) {
                    ok = false;
                    std::cout << "  disagreement: " << row.model << " n=" << row.n << "\n";
                }
            report("cross-validation (formula vs oracle vs density)", ok);
        }

        // Colouring bijection roundtrip.
        {
            bool ok = true;
            for (int bn = 1; bn <= (full ? 4 : 3) && ok; ++bn) {
                for (std::uint32_t mask = 0; mask < (1u << bn) && ok; ++mask) {
                    WallSet walls;
                    for (int r2 = 0; r2 < bn; ++r2)
                        if ((mask >> r2) & 1) walls.add({r2, 0}, WallDir::right);
                    ShapeSpec shape;
                    shape.rows = bn;
                    shape.cols = 2;
                    shape.walls = walls;
                    for (const auto& f : enumerate_fillings(build_poset(shape), 1u << 20)) {
                        auto path = tableau_to_coloured_path(bn, f, walls);
                        auto [f2, w2] = path_to_tableau(path);
                        if (!(f2.labels == f.labels) || !(w2.walls == walls.walls)) ok = false;
                    }
                }
            }
            report("coloured-path bijection roundtrip", ok);
        }

        // Integrality of N! * integral along the tower.
        {
            bool ok = true;
            try {
                DensityTower tower = iterate_recurrence(polyo_2nx3_block(), full ? 8 : 5);
                for (int k = 0; k <= tower.depth(); ++k) count_fillings(tower, k);
            } catch (const std::exception& e) {
                std::cout << "  " << e.what() << "\n";
                ok = false;
            }
            report("tower integrality", ok);
        }

        // Kernel extraction against the closed-form transfer polynomial.
        {
            auto Q = derive_kernel(polyo_2nx3_block());
            std::vector<std::string> xz{"x", "z"};
            auto X = MultivariatePolynomial::variable(xz, "x");
            auto Z = MultivariatePolynomial::variable(xz, "z");
            auto C = [&xz](long num, long den = 1) {
                return MultivariatePolynomial::constant(xz, Rational(num, den));
            };
            auto cubic = X * X * X * C(3) - X * X * Z * C(7) - X * Z * Z - Z * Z * Z -
                         X * X * C(2) + X * Z * C(4) + Z * Z * C(4);
            auto ref = (Z - C(1)) * (X - Z) * cubic * C(1, 24);
            report("kernel identity", Q == ref);
        }

        // Cache integrity: roundtrip plus hash tamper detection.
        {
            bool ok = true;
            auto tmp = std::filesystem::temp_directory_path() / "ytw-verify-cache.json";
            DensityTower tower = iterate_recurrence(polyo_2nx3_block(), 3);
            save_tower(tower, tmp.string());
            DensityTower back = load_tower(tmp.string());
            ok = ok && back == tower;
            std::ifstream in(tmp.string());
            json j;
            in >> j;
            j["model_hash"] = "deadbeef";
            std::ofstream out(tmp.string());
            out << j.dump();
            out.close();
            try {
                load_tower(tmp.string());
                ok = false;
            } catch (const usage_error&) {
            }
            std::filesystem::remove(tmp);
            report("tower cache roundtrip and tamper detection", ok);
        }

        return all_ok ? 0 : kExitVerifyFail;
    }

    if (dist_cmd->parsed()) {
        std::vector<std::uint64_t> hist;
        std::optional<WallDistReport> rep;
        if (empirical_samples > 0) {
            // Uniform over all (filling, wall set) pairs by enumerating the
            // whole universe; exact but limited to oracle-sized n.
            if (dist_n > 10)
                throw capacity_error("--empirical enumerates the universe; n <= 10 only");
            std::vector<int> wall_count_of;
            for (std::uint32_t mask = 0; mask < (1u << dist_n); ++mask) {
                WallSet walls;
                int k = 0;
                for (int r2 = 0; r2 < dist_n; ++r2)
                    if ((mask >> r2) & 1) {
                        walls.add({r2, 0}, WallDir::right);
                        ++k;
                    }
                ShapeSpec shape;
                shape.rows = dist_n;
                shape.cols = 2;
                shape.walls = walls;
                Integer cnt = count_linear_extensions(build_poset(shape));
                for (Integer i = 0; i < cnt; ++i) wall_count_of.push_back(k);
            }
            hist.assign(dist_n + 1, 0);
            RngState rng(dist_seed);
            for (int i = 0; i < empirical_samples; ++i) {
                size_t idx = static_cast<size_t>(rng.uniform01() * wall_count_of.size());
                if (idx >= wall_count_of.size()) idx = wall_count_of.size() - 1;
                ++hist[wall_count_of[idx]];
            }
            rep = wall_distribution_check(dist_n, &hist);
        } else {
            rep = wall_distribution_check(dist_n);
        }
        for (int k = 0; k <= dist_n; ++k) {
            std::cout << "P(X=" << k << ") = " << to_fraction_string(rep->pmf[k]);
            if (!hist.empty()) std::cout << "   observed " << hist[k];
            std::cout << "\n";
        }
        if (rep->tv_distance)
            std::cout << "total variation distance = " << *rep->tv_distance << "\n";
        json meta{{"n", dist_n},
                  {"mode", rep->mode},
                  {"mean", to_fraction_string(rep->mean)},
                  {"variance", to_fraction_string(rep->variance)}};
        std::cerr << meta.dump() << "\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ytw::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ytw::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
