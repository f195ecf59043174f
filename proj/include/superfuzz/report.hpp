#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "superfuzz/models.hpp"

namespace superfuzz {

std::string format_number(double v); // integral values print without a decimal point

/// Renders a vector with " | " at exactly the cut positions,
/// e.g. [1 1 0 1 | 1 1 | 0 1 1].
std::string render_partitioned(std::span<const double> values, const std::vector<int>& cuts);

struct RunRequest {
    std::string model_path;
    std::string initial_path;
    std::optional<Side> side;
    int max_steps = 0;
    double tol = 1e-9;
    std::string format = "text";
};

std::string report_text(const RunRequest& req, const ModelSpec& model, const RunTrace& trace);
nlohmann::json report_json(const RunRequest& req, const ModelSpec& model, const RunTrace& trace);

} // namespace superfuzz
