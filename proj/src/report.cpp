#include "superfuzz/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "superfuzz/json_io.hpp"

namespace superfuzz {

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render_partitioned(std::span<const double> values, const std::vector<int>& cuts) {
    std::string out = "[";
    std::size_t next_cut = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            if (next_cut < cuts.size() && static_cast<int>(i) == cuts[next_cut]) {
                out += " | ";
                ++next_cut;
            } else {
                out += " ";
            }
        }
        out += format_number(values[i]);
    }
    return out + "]";
}

namespace {

std::string verdict_line(const Verdict& v, int state_count) {
    switch (v.kind) {
    case Verdict::Kind::FixedPoint:
        return "fixed point (after " + std::to_string(state_count) + " state updates)";
    case Verdict::Kind::LimitCycle:
        return "limit cycle (period " + std::to_string(v.period) + ", entered at state " +
               std::to_string(v.cycle_start) + ")";
    case Verdict::Kind::MaxStepsExceeded:
        return "max steps exceeded";
    }
    return "?";
}

const std::vector<std::vector<std::string>>& side_labels(const ModelSpec& model, Side s) {
    return s == Side::Domain ? model.domain_labels : model.range_labels;
}

} // namespace

std::string report_text(const RunRequest& req, const ModelSpec& model, const RunTrace& trace) {
    std::ostringstream out;
    out << "model: " << model_kind_name(model.kind) << " " << model_variant_name(model.variant)
        << " " << model.connection.rows() << "x" << model.connection.cols();
    if (!req.model_path.empty())
        out << " (" << req.model_path << ")";
    out << "\n";
    out << "initial (" << side_name(trace.initial_side) << "): "
        << render_partitioned(trace.initial.values, trace.initial.cuts) << "\n";
    int same_side_updates = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const Step& s = trace.steps[i];
        if (s.side == trace.initial_side)
            ++same_side_updates;
        out << "step " << i + 1 << " " << side_name(s.side)
            << " raw:   " << render_partitioned(s.raw, s.state.cuts) << "\n";
        out << "step " << i + 1 << " " << side_name(s.side)
            << " state: " << render_partitioned(s.state.values, s.state.cuts) << "\n";
    }
    out << "verdict: " << verdict_line(trace.verdict, same_side_updates) << "\n";

    const SuperStateVector& hidden = trace.final_state();
    Side hidden_side = trace.steps.empty() ? trace.initial_side : trace.steps.back().side;
    out << "hidden pattern (" << side_name(hidden_side) << "): "
        << render_partitioned(hidden.values, hidden.cuts) << "\n";

    auto offsets = block_offsets(hidden.cuts, hidden.size());
    const auto& labels = side_labels(model, hidden_side);
    for (std::size_t b = 0; b + 1 < offsets.size(); ++b) {
        out << "  block " << b + 1 << ": [";
        for (int i = offsets[b]; i < offsets[b + 1]; ++i)
            out << (i > offsets[b] ? " " : "") << format_number(hidden.values[i]);
        out << "]";
        if (b < labels.size()) {
            std::string on;
            for (int i = offsets[b]; i < offsets[b + 1]; ++i)
                if (hidden.values[i] != 0.0)
                    on += (on.empty() ? "" : " ") + labels[b][i - offsets[b]];
            if (!on.empty())
                out << "  on: " << on;
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json report_json(const RunRequest& req, const ModelSpec& model, const RunTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const Step& s : trace.steps)
        steps.push_back({{"side", side_name(s.side)},
                         {"raw", s.raw},
                         {"state", state_to_json(s.state)}});

    nlohmann::json verdict;
    switch (trace.verdict.kind) {
    case Verdict::Kind::FixedPoint: verdict = {{"type", "fixed_point"}}; break;
    case Verdict::Kind::LimitCycle:
        verdict = {{"type", "limit_cycle"},
                   {"start", trace.verdict.cycle_start},
                   {"period", trace.verdict.period}};
        break;
    case Verdict::Kind::MaxStepsExceeded: verdict = {{"type", "max_steps_exceeded"}}; break;
    }

    const SuperStateVector& hidden = trace.final_state();
    Side hidden_side = trace.steps.empty() ? trace.initial_side : trace.steps.back().side;
    auto offsets = block_offsets(hidden.cuts, hidden.size());
    const auto& labels = side_labels(model, hidden_side);
    nlohmann::json blocks = nlohmann::json::array();
    for (std::size_t b = 0; b + 1 < offsets.size(); ++b) {
        nlohmann::json blk{{"index", b + 1}};
        blk["values"] = std::vector<double>(hidden.values.begin() + offsets[b],
                                            hidden.values.begin() + offsets[b + 1]);
        if (b < labels.size())
            blk["labels"] = labels[b];
        blocks.push_back(std::move(blk));
    }

    nlohmann::json req_echo{{"model", req.model_path},
                            {"initial", req.initial_path},
                            {"max_steps", req.max_steps},
                            {"tol", req.tol},
                            {"format", req.format}};
    if (req.side)
        req_echo["side"] = side_name(*req.side);

    return nlohmann::json{{"request", std::move(req_echo)},
                          {"model", {{"kind", model_kind_name(model.kind)},
                                     {"variant", model_variant_name(model.variant)},
                                     {"rows", model.connection.rows()},
                                     {"cols", model.connection.cols()}}},
                          {"initial", state_to_json(trace.initial)},
                          {"initial_side", side_name(trace.initial_side)},
                          {"steps", std::move(steps)},
                          {"verdict", std::move(verdict)},
                          {"hidden_pattern", state_to_json(hidden)},
                          {"hidden_pattern_side", side_name(hidden_side)},
                          {"blocks", std::move(blocks)}};
}

} // namespace superfuzz
