#include "scaffscan/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"

#include "scaffscan/image_io.hpp"

namespace scaffscan {

using nlohmann::json;

RoiRect centered_rect(const RoiRect& outer, int w, int h) {
    if (w <= 0 || h <= 0 || w > outer.w || h > outer.h)
        throw std::invalid_argument("a " + std::to_string(w) + "x" + std::to_string(h) +
                                    " rect does not fit inside " + std::to_string(outer.w) + "x" +
                                    std::to_string(outer.h));
    return RoiRect{outer.x + (outer.w - w) / 2, outer.y + (outer.h - h) / 2, w, h};
}

std::optional<RoiRect> roi_at_black_centroid(const BinaryMask& mask, int w, int h) {
    if (w <= 0 || h <= 0 || w > mask.width() || h > mask.height()) return std::nullopt;

    std::uint64_t n = 0;
    double sx = 0.0, sy = 0.0;
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            if (mask(x, y) == BinaryMask::black) {
                sx += x;
                sy += y;
                ++n;
            }
    if (n == 0) return std::nullopt;

    const int cx = static_cast<int>(std::lround(sx / static_cast<double>(n)));
    const int cy = static_cast<int>(std::lround(sy / static_cast<double>(n)));
    RoiRect rect{cx - w / 2, cy - h / 2, w, h};
    rect.x = std::clamp(rect.x, 0, mask.width() - w);
    rect.y = std::clamp(rect.y, 0, mask.height() - h);
    return rect;
}

namespace {

RoiRect parse_rect(const json& value, const std::string& key) {
    const auto fail = [&] {
        throw ConfigError("config key '" + key +
                          "' must be an array [x, y, w, h] of integers with non-negative origin "
                          "and positive size");
    };
    if (!value.is_array() || value.size() != 4) fail();
    for (const json& v : value)
        if (!v.is_number_integer()) fail();
    const RoiRect r{value[0].get<int>(), value[1].get<int>(), value[2].get<int>(),
                    value[3].get<int>()};
    if (r.x < 0 || r.y < 0 || r.w <= 0 || r.h <= 0) fail();
    return r;
}

void require_within_crop(const RoiRect& r, const std::string& key, const RoiRect& crop) {
    if (r.x + r.w > crop.w || r.y + r.h > crop.h)
        throw ConfigError("config key '" + key + "' (" + std::to_string(r.x) + "," +
                          std::to_string(r.y) + "," + std::to_string(r.w) + "," +
                          std::to_string(r.h) + ") exceeds the post-crop bounds " +
                          std::to_string(crop.w) + "x" + std::to_string(crop.h));
}

json rect_json(const RoiRect& r) { return json::array({r.x, r.y, r.w, r.h}); }

std::string sanitize_label(const std::string& label) {
    std::string out;
    for (char c : label)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
    return out.empty() ? std::string("scan") : out;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string format2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

PipelineConfig parse_config_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "inputs",          "crop",          "spatial-radius",      "range-radius",
        "max-iterations",  "epsilon",       "morph-kernel",        "morph-iterations",
        "threshold-mode",  "canny-low",     "canny-high",          "gaussian-kernel",
        "gaussian-sigma",  "sobel-aperture", "l2-gradient",        "roi",
        "roi2-scaffold",   "roi2-tissue",   "glcm-distance",       "glcm-angle",
        "sg-window",       "sg-polyorder",  "features-on-filtered", "output-dir",
    };
    for (const auto& item : doc.items())
        if (!known.count(item.key()))
            throw ConfigError("unknown config key '" + item.key() + "'");

    const auto get_int = [&](const char* key, int fallback) {
        if (!doc.contains(key)) return fallback;
        if (!doc[key].is_number_integer())
            throw ConfigError("config key '" + std::string(key) + "' must be an integer");
        return doc[key].get<int>();
    };
    const auto get_double = [&](const char* key, double fallback) {
        if (!doc.contains(key)) return fallback;
        if (!doc[key].is_number())
            throw ConfigError("config key '" + std::string(key) + "' must be a number");
        return doc[key].get<double>();
    };
    const auto get_bool = [&](const char* key, bool fallback) {
        if (!doc.contains(key)) return fallback;
        if (!doc[key].is_boolean())
            throw ConfigError("config key '" + std::string(key) + "' must be a boolean");
        return doc[key].get<bool>();
    };
    const auto get_string = [&](const char* key, const std::string& fallback) {
        if (!doc.contains(key)) return fallback;
        if (!doc[key].is_string())
            throw ConfigError("config key '" + std::string(key) + "' must be a string");
        return doc[key].get<std::string>();
    };

    PipelineConfig cfg;

    if (!doc.contains("inputs")) throw ConfigError("config key 'inputs' is required");
    const json& inputs = doc["inputs"];
    if (!inputs.is_array() || inputs.empty())
        throw ConfigError("config key 'inputs' must be a non-empty array");
    for (const json& entry : inputs) {
        if (!entry.is_object() || !entry.contains("path") || !entry.contains("time") ||
            !entry["path"].is_string() || !entry["time"].is_string())
            throw ConfigError("each 'inputs' entry must be {\"path\": ..., \"time\": ...}");
        for (const auto& item : entry.items())
            if (item.key() != "path" && item.key() != "time")
                throw ConfigError("unknown key '" + item.key() + "' in an 'inputs' entry");
        cfg.inputs.push_back({entry["path"].get<std::string>(), entry["time"].get<std::string>()});
    }

    if (!doc.contains("crop")) throw ConfigError("config key 'crop' is required");
    cfg.crop = parse_rect(doc["crop"], "crop");

    cfg.mean_shift.spatial_radius = get_int("spatial-radius", 5);
    cfg.mean_shift.range_radius = get_int("range-radius", 100);
    cfg.mean_shift.max_iterations = get_int("max-iterations", 5);
    cfg.mean_shift.epsilon = get_double("epsilon", 1.0);
    if (cfg.mean_shift.spatial_radius < 1)
        throw ConfigError("config key 'spatial-radius' must be >= 1");
    if (cfg.mean_shift.range_radius < 0)
        throw ConfigError("config key 'range-radius' must be >= 0");
    if (cfg.mean_shift.max_iterations < 1)
        throw ConfigError("config key 'max-iterations' must be >= 1");
    if (!(cfg.mean_shift.epsilon >= 0.0))
        throw ConfigError("config key 'epsilon' must be >= 0");

    const int kernel = get_int("morph-kernel", 3);
    if (kernel < 1 || kernel % 2 == 0)
        throw ConfigError("config key 'morph-kernel' must be an odd positive size");
    cfg.morph_kernel = MorphKernel{kernel, kernel};
    cfg.morph_iterations = get_int("morph-iterations", 2);
    if (cfg.morph_iterations < 1) throw ConfigError("config key 'morph-iterations' must be >= 1");

    const std::string mode = get_string("threshold-mode", "otsu");
    if (mode == "otsu") {
        cfg.use_otsu = true;
    } else if (mode.rfind("fixed:", 0) == 0) {
        cfg.use_otsu = false;
        const char* first = mode.data() + 6;
        const char* last = mode.data() + mode.size();
        const auto [ptr, ec] = std::from_chars(first, last, cfg.fixed_threshold);
        if (ec != std::errc() || ptr != last || cfg.fixed_threshold < 0 ||
            cfg.fixed_threshold > 255)
            throw ConfigError(
                "config key 'threshold-mode' needs an integer in [0, 255] after 'fixed:'");
    } else {
        throw ConfigError("config key 'threshold-mode' must be 'otsu' or 'fixed:<T>'");
    }

    cfg.canny.low_threshold = get_double("canny-low", 140.0);
    cfg.canny.high_threshold = get_double("canny-high", 280.0);
    cfg.canny.gaussian_kernel = get_int("gaussian-kernel", 5);
    cfg.canny.gaussian_sigma = get_double("gaussian-sigma", 1.4);
    cfg.canny.sobel_aperture = get_int("sobel-aperture", 3);
    cfg.canny.l2_gradient = get_bool("l2-gradient", true);
    if (cfg.canny.low_threshold < 0.0 || cfg.canny.low_threshold > cfg.canny.high_threshold)
        throw ConfigError("config keys 'canny-low'/'canny-high' must satisfy 0 <= low <= high");
    if (cfg.canny.gaussian_kernel < 3 || cfg.canny.gaussian_kernel % 2 == 0)
        throw ConfigError("config key 'gaussian-kernel' must be odd and >= 3");
    if (!(cfg.canny.gaussian_sigma > 0.0))
        throw ConfigError("config key 'gaussian-sigma' must be > 0");
    if (cfg.canny.sobel_aperture < 3 || cfg.canny.sobel_aperture % 2 == 0)
        throw ConfigError("config key 'sobel-aperture' must be odd and >= 3");

    const RoiRect crop_bounds{0, 0, cfg.crop.w, cfg.crop.h};
    if (doc.contains("roi")) {
        cfg.roi = parse_rect(doc["roi"], "roi");
    } else {
        try {
            cfg.roi = centered_rect(crop_bounds, 135, 58);
        } catch (const std::invalid_argument&) {
            throw ConfigError(
                "the default 135x58 'roi' does not fit the crop; provide 'roi' explicitly");
        }
    }
    require_within_crop(cfg.roi, "roi", cfg.crop);

    if (doc.contains("roi2-tissue")) {
        cfg.roi2_tissue = parse_rect(doc["roi2-tissue"], "roi2-tissue");
        require_within_crop(*cfg.roi2_tissue, "roi2-tissue", cfg.crop);
    }
    if (doc.contains("roi2-scaffold")) {
        cfg.roi2_scaffold = parse_rect(doc["roi2-scaffold"], "roi2-scaffold");
        require_within_crop(*cfg.roi2_scaffold, "roi2-scaffold", cfg.crop);
    } else if (cfg.roi2_tissue) {
        try {
            cfg.roi2_scaffold = centered_rect(cfg.roi, 75, 42);
        } catch (const std::invalid_argument&) {
            throw ConfigError(
                "the default 75x42 'roi2-scaffold' does not fit inside 'roi'; provide it "
                "explicitly");
        }
    }

    cfg.glcm_distance = get_int("glcm-distance", 1);
    if (cfg.glcm_distance < 1) throw ConfigError("config key 'glcm-distance' must be >= 1");
    cfg.glcm_angle = get_int("glcm-angle", 0);
    if (cfg.glcm_angle != 0 && cfg.glcm_angle != 45 && cfg.glcm_angle != 90 &&
        cfg.glcm_angle != 135)
        throw ConfigError("config key 'glcm-angle' must be one of 0, 45, 90, 135");

    cfg.smoothing.window = get_int("sg-window", 11);
    if (cfg.smoothing.window < 1 || cfg.smoothing.window % 2 == 0)
        throw ConfigError("config key 'sg-window' must be odd and positive");
    cfg.smoothing.polyorder = get_int("sg-polyorder", 3);
    if (cfg.smoothing.polyorder < 0 || cfg.smoothing.polyorder >= cfg.smoothing.window)
        throw ConfigError("config key 'sg-polyorder' must satisfy 0 <= order < sg-window");

    cfg.features_on_filtered = get_bool("features-on-filtered", false);
    cfg.output_dir = get_string("output-dir", ".");
    if (cfg.output_dir.empty()) throw ConfigError("config key 'output-dir' must not be empty");

    return cfg;
}

PipelineConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config_text(text);
}

std::string resolved_config(const PipelineConfig& config) {
    json j;
    json inputs = json::array();
    for (const InputEntry& e : config.inputs)
        inputs.push_back({{"path", e.path}, {"time", e.time_label}});
    j["inputs"] = inputs;
    j["crop"] = rect_json(config.crop);
    j["spatial-radius"] = config.mean_shift.spatial_radius;
    j["range-radius"] = config.mean_shift.range_radius;
    j["max-iterations"] = config.mean_shift.max_iterations;
    j["epsilon"] = config.mean_shift.epsilon;
    j["morph-kernel"] = config.morph_kernel.width;
    j["morph-iterations"] = config.morph_iterations;
    j["threshold-mode"] =
        config.use_otsu ? std::string("otsu") : "fixed:" + std::to_string(config.fixed_threshold);
    j["canny-low"] = config.canny.low_threshold;
    j["canny-high"] = config.canny.high_threshold;
    j["gaussian-kernel"] = config.canny.gaussian_kernel;
    j["gaussian-sigma"] = config.canny.gaussian_sigma;
    j["sobel-aperture"] = config.canny.sobel_aperture;
    j["l2-gradient"] = config.canny.l2_gradient;
    j["roi"] = rect_json(config.roi);
    if (config.roi2_scaffold) j["roi2-scaffold"] = rect_json(*config.roi2_scaffold);
    if (config.roi2_tissue) j["roi2-tissue"] = rect_json(*config.roi2_tissue);
    j["glcm-distance"] = config.glcm_distance;
    j["glcm-angle"] = config.glcm_angle;
    j["sg-window"] = config.smoothing.window;
    j["sg-polyorder"] = config.smoothing.polyorder;
    j["features-on-filtered"] = config.features_on_filtered;
    j["output-dir"] = config.output_dir;
    return j.dump(2) + "\n";
}

namespace {

// Week-0 control: pixel-distribution curves and first-order stats for the
// scaffold-center and tissue rects, written once for the first scan.
void write_control_artifacts(const Grayscale8Image& source, const PipelineConfig& config) {
    const RoiRect scaffold_rect =
        config.roi2_scaffold ? *config.roi2_scaffold : centered_rect(config.roi, 75, 42);
    const RoiRect tissue_rect = *config.roi2_tissue;

    const std::vector<std::uint8_t> scaffold_px = extract_roi(source, scaffold_rect);
    const std::vector<std::uint8_t> tissue_px = extract_roi(source, tissue_rect);
    const DistributionCurve scaffold_curve = pixel_distribution(scaffold_px, config.smoothing);
    const DistributionCurve tissue_curve = pixel_distribution(tissue_px, config.smoothing);
    const FirstOrderStats scaffold_stats = first_order_stats(scaffold_px);
    const FirstOrderStats tissue_stats = first_order_stats(tissue_px);

    std::string csv = "gray,scaffold_raw,scaffold_smoothed,tissue_raw,tissue_smoothed\n";
    char buf[160];
    for (int g = 0; g < 256; ++g) {
        std::snprintf(buf, sizeof buf, "%d,%.0f,%.4f,%.0f,%.4f\n", g, scaffold_curve.raw[g],
                      scaffold_curve.smoothed[g], tissue_curve.raw[g], tissue_curve.smoothed[g]);
        csv += buf;
    }
    const std::filesystem::path dir(config.output_dir);
    write_text_file((dir / "control_distribution.csv").string(), csv);

    const auto stats_json = [](const FirstOrderStats& s) {
        return json{{"mean", s.mean}, {"sd", s.sd}, {"cv_pct", s.cv_percent}};
    };
    json summary;
    summary["scaffold"] = stats_json(scaffold_stats);
    summary["tissue"] = stats_json(tissue_stats);
    write_text_file((dir / "control_summary.json").string(), summary.dump(2) + "\n");
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config, const RunOptions& options) {
    PipelineResult result;
    const bool control_active = config.roi2_tissue.has_value();
    const std::filesystem::path dir(config.output_dir);
    if (options.emit_intermediates || control_active) std::filesystem::create_directories(dir);

    for (std::size_t idx = 0; idx < config.inputs.size(); ++idx) {
        const InputEntry& entry = config.inputs[idx];
        try {
            const Grayscale8Image full = load_image(entry.path);
            if (!full.contains(config.crop))
                throw std::runtime_error("crop rect exceeds the " + std::to_string(full.width()) +
                                         "x" + std::to_string(full.height()) + " scan");
            const Grayscale8Image cropped = crop(full, config.crop);
            const Grayscale8Image filtered = mean_shift_filter(cropped, config.mean_shift);

            const int threshold = config.use_otsu ? otsu_threshold(histogram(filtered)).threshold
                                                  : config.fixed_threshold;
            const BinaryMask binary = apply_threshold(filtered, threshold);
            const BinaryMask opened =
                morphological_open(binary, config.morph_kernel, config.morph_iterations);
            const BinaryMask contour = canny(opened.as_image(), config.canny);

            const Grayscale8Image& feature_source =
                config.features_on_filtered ? filtered : cropped;
            const std::vector<std::uint8_t> roi_pixels = extract_roi(feature_source, config.roi);
            const FirstOrderStats first = first_order_stats(roi_pixels);
            const Glcm16 glcm = compute_glcm(quantize16(roi_pixels), config.roi.w, config.roi.h,
                                             config.glcm_distance, config.glcm_angle);
            const SecondOrderStats second = glcm_features(glcm);

            FeatureRow row;
            row.time_label = entry.time_label;
            row.area_px = count_black(opened);
            row.mean = first.mean;
            row.sd = first.sd;
            row.cv_percent = first.cv_percent;
            row.contrast = second.contrast;
            row.entropy = second.entropy;
            row.energy = second.energy;
            row.idm = second.idm;

            if (options.emit_intermediates) {
                char prefix[32];
                std::snprintf(prefix, sizeof prefix, "%02zu_", idx);
                const std::string stem = prefix + sanitize_label(entry.time_label);
                save_image(filtered, (dir / (stem + "_filtered.pgm")).string());
                save_mask(opened, (dir / (stem + "_mask.pgm")).string());
                save_mask(contour, (dir / (stem + "_contour.pgm")).string());
            }
            if (control_active && idx == 0) write_control_artifacts(feature_source, config);

            result.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            result.errors.push_back({entry.time_label, e.what()});
        }
    }
    return result;
}

std::string csv_string(const std::vector<FeatureRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("no feature rows to serialize");

    std::string out = "time,area_px,mean,sd,cv_pct,contrast,entropy,energy,idm\n";
    char buf[256];
    for (const FeatureRow& r : rows) {
        out += csv_field(r.time_label);
        std::snprintf(buf, sizeof buf, ",%llu,%.2f,%.2f,%.2f,%.2f,%.2f,%.2f,%.2f\n",
                      static_cast<unsigned long long>(r.area_px), r.mean, r.sd, r.cv_percent,
                      r.contrast, r.entropy, r.energy, r.idm);
        out += buf;
    }
    return out;
}

void emit_csv(const std::vector<FeatureRow>& rows, const std::string& path) {
    write_text_file(path, csv_string(rows));
}

namespace {

double metric_value(const FeatureRow& r, const std::string& metric) {
    if (metric == "area_px") return static_cast<double>(r.area_px);
    if (metric == "mean") return r.mean;
    if (metric == "sd") return r.sd;
    if (metric == "cv_pct") return r.cv_percent;
    if (metric == "contrast") return r.contrast;
    if (metric == "entropy") return r.entropy;
    if (metric == "energy") return r.energy;
    if (metric == "idm") return r.idm;
    throw std::invalid_argument("unknown chart metric '" + metric +
                                "'; expected one of area_px, mean, sd, cv_pct, contrast, "
                                "entropy, energy, idm");
}

}  // namespace

std::string trend_chart_svg(const std::vector<FeatureRow>& rows, const std::string& metric) {
    if (rows.empty()) throw std::invalid_argument("no feature rows to chart");

    std::vector<double> values;
    values.reserve(rows.size());
    for (const FeatureRow& r : rows) values.push_back(metric_value(r, metric));

    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    if (lo == hi) {  // flat series: open up a band so the line sits mid-chart
        lo -= 1.0;
        hi += 1.0;
    }

    constexpr double left = 70.0, right = 620.0, top = 40.0, bottom = 350.0;
    const int n = static_cast<int>(rows.size());
    const auto x_at = [&](int i) {
        return n == 1 ? (left + right) / 2.0
                      : left + (right - left) * static_cast<double>(i) / (n - 1);
    };
    const auto y_at = [&](double v) { return bottom - (v - lo) / (hi - lo) * (bottom - top); };

    char buf[256];
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
           "viewBox=\"0 0 640 400\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
    svg += "  <text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" +
           xml_escape(metric) + " over time</text>\n";

    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                  left, bottom, right, bottom);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                  left, top, left, bottom);
    svg += buf;

    for (int tick = 0; tick <= 4; ++tick) {
        const double v = lo + (hi - lo) * tick / 4.0;
        std::snprintf(buf, sizeof buf,
                      "  <text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" "
                      "font-family=\"sans-serif\" font-size=\"11\">%s</text>\n",
                      left - 6.0, y_at(v) + 4.0, format2(v).c_str());
        svg += buf;
    }

    if (n >= 2) {
        svg += "  <polyline fill=\"none\" stroke=\"#1f6fb4\" stroke-width=\"2\" points=\"";
        for (int i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", x_at(i),
                          y_at(values[i]));
            svg += buf;
        }
        svg += "\"/>\n";
    }

    for (int i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#1f6fb4\"/>\n", x_at(i),
                      y_at(values[i]));
        svg += buf;
        std::snprintf(buf, sizeof buf,
                      "  <text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
                      "font-family=\"sans-serif\" font-size=\"11\">%s</text>\n",
                      x_at(i), bottom + 18.0, xml_escape(rows[i].time_label).c_str());
        svg += buf;
    }

    svg += "</svg>\n";
    return svg;
}

void emit_trend_chart(const std::vector<FeatureRow>& rows, const std::string& metric,
                      const std::string& path) {
    write_text_file(path, trend_chart_svg(rows, metric));
}

}  // namespace scaffscan
