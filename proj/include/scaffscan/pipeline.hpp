#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scaffscan/canny.hpp"
#include "scaffscan/image.hpp"
#include "scaffscan/mean_shift.hpp"
#include "scaffscan/segmentation.hpp"
#include "scaffscan/texture.hpp"

namespace scaffscan {

// w x h rect centered inside `outer` (integer placement rounds toward the
// upper-left). Throws when it cannot fit.
RoiRect centered_rect(const RoiRect& outer, int w, int h);

// w x h rect centered on the centroid of the mask's black pixels, clamped to
// stay inside the mask bounds. Empty when the mask has no black pixels or
// the rect is larger than the mask.
std::optional<RoiRect> roi_at_black_centroid(const BinaryMask& mask, int w, int h);

struct InputEntry {
    std::string path;
    std::string time_label;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Batch-run settings. Rects are in post-crop coordinates except `crop`
// itself, which addresses the original scan.
struct PipelineConfig {
    std::vector<InputEntry> inputs;
    RoiRect crop;
    MeanShiftParams mean_shift;
    MorphKernel morph_kernel;
    int morph_iterations = 2;
    bool use_otsu = true;     // threshold-mode: otsu | fixed:<T>
    int fixed_threshold = 0;  // used when use_otsu is false
    CannyParams canny;
    RoiRect roi;  // feature ROI (group 1); default 135x58 centered in the crop
    // Week-0 control ROIs (group 2): scaffold defaults to 75x42 centered in
    // `roi`; the tissue rect must be user-supplied. Control artifacts are
    // produced for the first scan iff the tissue rect is present.
    std::optional<RoiRect> roi2_scaffold;
    std::optional<RoiRect> roi2_tissue;
    int glcm_distance = 1;
    int glcm_angle = 0;
    SmoothingParams smoothing;
    bool features_on_filtered = false;  // texture from filtered instead of raw pixels
    std::string output_dir = ".";
};

// Reads and validates a JSON config file. Unknown keys are rejected (typo
// protection) and every rect is checked against the post-crop bounds; errors
// name the offending key.
PipelineConfig parse_config(const std::string& path);

// Same validation applied to an in-memory JSON document.
PipelineConfig parse_config_text(const std::string& json_text);

// The effective configuration with all defaults filled in, as a
// deterministic JSON dump.
std::string resolved_config(const PipelineConfig& config);

// One measured time point: scaffold area plus first- and second-order
// texture features over the feature ROI.
struct FeatureRow {
    std::string time_label;
    std::uint64_t area_px = 0;
    double mean = 0.0;
    double sd = 0.0;
    double cv_percent = 0.0;
    double contrast = 0.0;
    double entropy = 0.0;
    double energy = 0.0;
    double idm = 0.0;
};

struct ScanError {
    std::string time_label;
    std::string message;
};

struct PipelineResult {
    std::vector<FeatureRow> rows;     // in input order, failed scans omitted
    std::vector<ScanError> errors;    // one entry per failed scan
};

struct RunOptions {
    bool emit_intermediates = false;  // write filtered/mask/contour PGMs per scan
};

// Per scan: load -> crop -> mean-shift -> threshold -> opening -> area count
// -> Canny contour -> ROI features. A failing scan yields one ScanError and
// does not stop the rest of the series.
PipelineResult run_pipeline(const PipelineConfig& config, const RunOptions& options = {});

// CSV report, schema: time,area_px,mean,sd,cv_pct,contrast,entropy,energy,idm
// with two-decimal fixed formatting. Throws on empty input.
std::string csv_string(const std::vector<FeatureRow>& rows);
void emit_csv(const std::vector<FeatureRow>& rows, const std::string& path);

// Self-contained SVG line chart of one CSV column over the input order.
// Metric is one of: area_px, mean, sd, cv_pct, contrast, entropy, energy,
// idm. Throws on an unknown metric or empty input.
std::string trend_chart_svg(const std::vector<FeatureRow>& rows, const std::string& metric);
void emit_trend_chart(const std::vector<FeatureRow>& rows, const std::string& metric,
                      const std::string& path);

}  // namespace scaffscan
