/**
 * @file sgk_cli.cpp
 * @brief Command-line driver: data generation, point tests, verification suites.
 *
 * Subcommands:
 *   gen        --r R --q Q [--out PATH]   dump the datum of X(w_{r,n}) as JSON
 *   semistable --point PATH               semistability verdict for a cell point
 *   verify     --r R --q Q --suite NAME --samples N --seed S [--field fp:P]
 *   tower      --r R --q Q                dimensions of the tower Y_0, ..., Y_r
 *
 * Exit status: 0 when everything passes, 1 when a check fails or a point is
 * unstable, 2 on usage or input errors. SGK_SEED, when set, replaces --seed.
 */

#include "sgk/bundle_charts.hpp"
#include "sgk/git_engine.hpp"
#include "sgk/json_io.hpp"
#include "sgk/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Writes `text` to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

int cmd_gen(int r, int q, const std::string& out) {
    const auto d = sgk::build_datum(r, q);
    emit(out, sgk::datum_to_json(*d).dump() + "\n");
    return 0;
}

int cmd_semistable(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sgk::FormatError("cannot read " + path);
    sgk::Json doc;
    try {
        doc = sgk::Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw sgk::FormatError(std::string("malformed JSON: ") + e.what());
    }
    const sgk::CellPoint p = sgk::cell_point_from_json(doc);
    const auto rep = sgk::semistability_report(p);
    sgk::Json out = {{"check", "semistable"},
                     {"params", {{"r", p.datum().r()}, {"q", p.datum().q()}, {"field", p.field().to_string()}}},
                     {"status", rep.semistable ? "pass" : "fail"},
                     {"semistable", rep.semistable}};
    if (rep.semistable) {
        sgk::Json w = sgk::Json::array();
        for (int j = 1; j <= p.datum().r(); ++j) w.push_back({{"i", rep.witnesses[j - 1]}, {"j", j}});
        out["witness"] = w;
    } else {
        out["counterexample"] = {{"failing_column", rep.failing_column}};
    }
    std::cout << out.dump() << "\n";
    return rep.semistable ? 0 : kExitFail;
}

int cmd_verify(sgk::SuiteConfig cfg, const std::string& field) {
    if (const char* env = std::getenv("SGK_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(env, &used);
            if (env[used] != '\0') throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw sgk::ConfigError(std::string("SGK_SEED is not an unsigned integer: ") + env);
        }
    }
    try {
        cfg.field = sgk::Field::parse(field);
    } catch (const std::invalid_argument& e) {
        throw sgk::ConfigError(e.what());
    }
    cfg.validate();
    const auto rep = sgk::run_verify(cfg);
    std::cout << rep.to_jsonl();
    return rep.passed ? 0 : kExitFail;
}

int cmd_tower(int r, int q) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    const auto dims = sgk::tower_dimensions(r, q);
    std::vector<long long> from_word;
    bool ok = true;
    for (int k = 0; k <= r; ++k) {
        from_word.push_back(sgk::tower_dimension_from_word(k, q));
        ok = ok && from_word.back() == dims[k];
    }
    sgk::Json out = {{"check", "tower"},
                     {"params", {{"r", r}, {"q", q}}},
                     {"status", ok ? "pass" : "fail"},
                     {"dims", dims},
                     {"from_word", from_word},
                     {"fiber_dimension", dims[r] - dims[r - 1]}};
    std::cout << out.dump() << "\n";
    return ok ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on minimal Schubert varieties and their torus quotients", "sgk"};
    app.require_subcommand(1);

    int r = 1, q = 2;
    std::string out_path, point_path, field = "rational";
    sgk::SuiteConfig cfg;

    auto* gen = app.add_subcommand("gen", "Dump the datum for (r, q) as JSON");
    gen->add_option("--r", r, "Number of columns r")->required();
    gen->add_option("--q", q, "Block size q (n = rq + 1)")->required();
    gen->add_option("--out", out_path, "Output file (default: stdout)");

    auto* semi = app.add_subcommand("semistable", "Test a cell point for semistability");
    semi->add_option("--point", point_path, "CellPoint JSON file")->required();

    auto* ver = app.add_subcommand("verify", "Run verification suites and print JSON lines");
    ver->add_option("--r", cfg.r, "Number of columns r")->required();
    ver->add_option("--q", cfg.q, "Block size q")->required();
    ver->add_option("--suite", cfg.suite, "lemmas | charts | orbits | sections | tower | all")
        ->default_val("all");
    ver->add_option("--samples", cfg.samples, "Samples per sampled check")->default_val(100);
    ver->add_option("--seed", cfg.seed, "Run seed (overridden by SGK_SEED)")->default_val(0);
    ver->add_option("--field", field, "rational or fp:<prime above 2^30>")->default_val("rational");

    auto* tow = app.add_subcommand("tower", "Print the dimensions of Y_0, ..., Y_r");
    tow->add_option("--r", r, "Number of columns r")->required();
    tow->add_option("--q", q, "Block size q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(r, q, out_path);
        if (*semi) return cmd_semistable(point_path);
        if (*ver) return cmd_verify(cfg, field);
        if (*tow) return cmd_tower(r, q);
    } catch (const sgk::FormatError& e) {
        std::cerr << "sgk: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sgk::ConfigError& e) {
        std::cerr << "sgk: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sgk: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "sgk: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
