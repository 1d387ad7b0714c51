// Command-line table generator: enumerates all canonical 6-j (or super
// 6-j) symbols up to a spin bound, evaluates them exactly and writes
// Rotenberg-style table files, optionally split by Regge-partition class.
//
// Examples:
//   regge6j --max-spin 10 --mode super --out tables/
//   regge6j --max-spin 9/2 --mode standard --classify --out tables/ --workers 4

#include <CLI11.hpp>

#include "regge6j/table.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact 6-j / super 6-j table generator with Regge-partition classification"};

    std::string max_spin = "0";
    std::string mode = "super";
    std::string out_dir;
    bool classify = false;
    int workers = 1;

    app.add_option("--max-spin", max_spin, "Largest spin, e.g. 10 or 21/2")->required();
    app.add_option("--mode", mode, "standard or super")
        ->check(CLI::IsMember({"standard", "super"}))
        ->capture_default_str();
    app.add_flag("--classify", classify, "Also write one file per (parity, class) pair");
    app.add_option("--out", out_dir, "Output directory")->required();
    app.add_option("--workers", workers, "Worker thread count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    regge6j::TableConfig config;
    try {
        config.max_spin = regge6j::parse_half_int(max_spin);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    config.mode = mode == "standard" ? regge6j::Mode::standard : regge6j::Mode::super;
    config.classify = classify;
    config.output_dir = out_dir;
    config.workers = workers;
    return regge6j::run(config);
}
