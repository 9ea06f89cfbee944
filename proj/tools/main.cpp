#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scaffscan/image_io.hpp"
#include "scaffscan/phantom.hpp"
#include "scaffscan/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_analyze(const std::string& config_path, bool emit_intermediates,
                const std::vector<std::string>& chart_metrics) {
    const scaffscan::PipelineConfig config = scaffscan::parse_config(config_path);
    fs::create_directories(config.output_dir);
    const fs::path out_dir(config.output_dir);

    std::ofstream resolved(out_dir / "resolved_config.json", std::ios::binary);
    resolved << scaffscan::resolved_config(config);
    resolved.close();

    scaffscan::RunOptions options;
    options.emit_intermediates = emit_intermediates;
    const scaffscan::PipelineResult result = scaffscan::run_pipeline(config, options);

    for (const scaffscan::ScanError& err : result.errors)
        std::cerr << "scan '" << err.time_label << "' failed: " << err.message << "\n";

    if (!result.rows.empty()) {
        scaffscan::emit_csv(result.rows, (out_dir / "features.csv").string());
        for (const std::string& metric : chart_metrics)
            scaffscan::emit_trend_chart(result.rows, metric,
                                        (out_dir / ("trend_" + metric + ".svg")).string());
    }

    std::cout << "analyzed " << result.rows.size() << " of " << config.inputs.size()
              << " scans; reports in " << config.output_dir << "\n";
    return result.errors.empty() ? 0 : 1;
}

scaffscan::DegradationSeries parse_phantom_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw scaffscan::ConfigError("cannot read phantom spec '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw scaffscan::ConfigError(std::string("phantom spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw scaffscan::ConfigError("phantom spec root must be a JSON object");

    static const std::set<std::string> known = {
        "width",         "height",           "cx",            "cy",
        "a",             "b",                "background-mean", "background-noise",
        "scaffold-mean", "scaffold-noise",   "seed",          "steps",
        "shrink-factor", "mean-increment",   "mean-schedule",
    };
    for (const auto& item : doc.items())
        if (!known.count(item.key()))
            throw scaffscan::ConfigError("unknown phantom spec key '" + item.key() + "'");

    const auto require_number = [&](const char* key) {
        if (!doc.contains(key) || !doc[key].is_number())
            throw scaffscan::ConfigError("phantom spec key '" + std::string(key) +
                                         "' is required and must be a number");
        return doc[key].get<double>();
    };
    const auto optional_number = [&](const char* key, double fallback) {
        if (!doc.contains(key)) return fallback;
        if (!doc[key].is_number())
            throw scaffscan::ConfigError("phantom spec key '" + std::string(key) +
                                         "' must be a number");
        return doc[key].get<double>();
    };

    scaffscan::DegradationSeries series;
    series.base.width = static_cast<int>(require_number("width"));
    series.base.height = static_cast<int>(require_number("height"));
    series.base.cx = require_number("cx");
    series.base.cy = require_number("cy");
    series.base.a = require_number("a");
    series.base.b = require_number("b");
    series.base.background_mean = require_number("background-mean");
    series.base.background_noise = optional_number("background-noise", 0.0);
    series.base.scaffold_mean = require_number("scaffold-mean");
    series.base.scaffold_noise = optional_number("scaffold-noise", 0.0);
    series.base.seed = static_cast<std::uint64_t>(optional_number("seed", 0.0));
    series.steps = static_cast<int>(optional_number("steps", 1.0));
    series.shrink_factor = optional_number("shrink-factor", 1.0);
    series.mean_increment = optional_number("mean-increment", 0.0);
    if (doc.contains("mean-schedule")) {
        if (!doc["mean-schedule"].is_array())
            throw scaffscan::ConfigError(
                "phantom spec key 'mean-schedule' must be an array of numbers");
        std::vector<double> schedule;
        for (const json& v : doc["mean-schedule"]) {
            if (!v.is_number())
                throw scaffscan::ConfigError(
                    "phantom spec key 'mean-schedule' must be an array of numbers");
            schedule.push_back(v.get<double>());
        }
        series.mean_schedule = std::move(schedule);
    }
    return series;
}

int run_phantom(const std::string& spec_path, const std::string& out_dir) {
    const scaffscan::DegradationSeries series = parse_phantom_spec(spec_path);
    const std::vector<scaffscan::GeneratedPhantom> phantoms = scaffscan::generate_series(series);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    json manifest = json::array();
    for (std::size_t k = 0; k < phantoms.size(); ++k) {
        const std::string image_name = "step_" + std::to_string(k) + ".pgm";
        const std::string truth_name = "step_" + std::to_string(k) + "_truth.pgm";
        scaffscan::save_image(phantoms[k].image, dir / image_name);
        scaffscan::save_mask(phantoms[k].truth, dir / truth_name);
        manifest.push_back({{"step", k},
                            {"image", image_name},
                            {"truth", truth_name},
                            {"true_area", phantoms[k].true_area}});
    }
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << "\n";
    out.close();

    std::cout << "wrote " << phantoms.size() << " phantom step(s) to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ultrasound scaffold segmentation and texture analysis"};
    app.require_subcommand(1);

    std::string config_path;
    bool emit_intermediates = false;
    std::vector<std::string> chart_metrics;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Run the segmentation pipeline over a scan series");
    analyze->add_option("--config", config_path, "JSON pipeline configuration")->required();
    analyze->add_flag("--emit-intermediates", emit_intermediates,
                      "Write per-scan filtered/mask/contour PGM images");
    analyze->add_option("--chart", chart_metrics,
                        "Also write an SVG trend chart for this CSV column (repeatable)");

    std::string spec_path;
    std::string out_dir;
    CLI::App* phantom =
        app.add_subcommand("phantom", "Generate synthetic speckle phantoms with ground truth");
    phantom->add_option("--spec", spec_path, "JSON phantom description")->required();
    phantom->add_option("--out", out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(config_path, emit_intermediates, chart_metrics);
        return run_phantom(spec_path, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
