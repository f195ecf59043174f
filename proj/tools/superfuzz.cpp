// Command-line front end: run models, compose matrices, enumerate partitions.
//
// Exit codes: 0 success, 1 input/validation error, 2 non-convergence,
// 64 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "superfuzz/json_io.hpp"
#include "superfuzz/report.hpp"

using namespace superfuzz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int resolve_max_steps(int cli_value) {
    if (cli_value > 0)
        return cli_value;
    if (const char* env = std::getenv("SUPERFUZZ_MAX_STEPS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 0; // engine default
}

SuperStateVector read_initial(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        try {
            return state_from_json(nlohmann::json::parse(arg));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(Errc::ParseError, std::string("inline state: ") + e.what());
        }
    }
    return load_state(arg);
}

int cmd_run(const std::string& model_path, const std::string& initial_arg,
            const std::string& side_str, int max_steps_cli, double tol, const std::string& format) {
    ModelSpec model = load_model(model_path);

    std::optional<Side> side;
    if (side_str == "domain" || side_str == "x")
        side = Side::Domain;
    else if (side_str == "range" || side_str == "y")
        side = Side::Range;
    else if (!side_str.empty())
        throw UsageError("--side must be one of domain|range|x|y");

    if (model.kind == ModelKind::Fcm && side)
        throw UsageError("--side is meaningless for an fcm model");
    if (model.kind != ModelKind::Fcm && !side)
        throw UsageError(std::string("--side is required for ") + model_kind_name(model.kind) + " models");

    RunRequest req;
    req.model_path = model_path;
    req.initial_path = initial_arg;
    req.side = side;
    req.max_steps = resolve_max_steps(max_steps_cli);
    req.tol = tol;
    req.format = format;

    SuperStateVector initial = read_initial(initial_arg);

    RunTrace trace;
    switch (model.kind) {
    case ModelKind::Fcm: trace = fcm_hidden_pattern(model, initial, req.max_steps); break;
    case ModelKind::Frm: trace = frm_hidden_pattern(model, initial, *side, req.max_steps); break;
    case ModelKind::Bam: trace = bam_recall(model, initial, *side, req.max_steps); break;
    case ModelKind::Fam: trace = fam_recall(model, initial, *side, req.max_steps, tol); break;
    }

    if (format == "json")
        std::cout << canonical_dump(report_json(req, model, trace)) << "\n";
    else
        std::cout << report_text(req, model, trace);

    return trace.verdict.kind == Verdict::Kind::MaxStepsExceeded ? kExitNoConvergence : kExitOk;
}

int cmd_compose(const std::string& op, const std::string& semiring_str, const std::string& a_path,
                const std::string& b_path) {
    Semiring s = Semiring::PlusTimes;
    if (semiring_str == "maxmin")
        s = Semiring::MaxMin;
    else if (semiring_str != "plus")
        throw UsageError("--semiring must be plus or maxmin");

    SuperMatrix a = load_matrix(a_path);
    SuperMatrix result;
    if (op == "multiply" || op == "add") {
        if (b_path.empty())
            throw UsageError("--b is required for " + op);
        SuperMatrix b = load_matrix(b_path);
        result = op == "multiply" ? multiply(a, b, s) : add(a, b);
    } else if (op == "transpose") {
        result = transpose(a);
    } else if (op == "pseudo-transpose") {
        result = pseudo_transpose(a);
    } else if (op == "moment") {
        result = minor_product_moment(FuzzyMatrix(a));
    } else if (op == "pseudo-product") {
        result = super_pseudo_product(FuzzyMatrix(a)).matrix();
    } else {
        throw UsageError("unknown --op " + op);
    }
    std::cout << canonical_dump(matrix_to_json(result)) << "\n";
    return kExitOk;
}

int cmd_enumerate(int rows, int cols, const std::string& cls, bool count_only) {
    if (rows < 1 || cols < 1)
        throw UsageError("--rows and --cols must be >= 1");
    if (cls != "all" && cls != "symmetric" && cls != "pseudo")
        throw UsageError("--class must be all|symmetric|pseudo");
    if (cls != "all" && rows != cols)
        throw UsageError("symmetric/pseudo classes are defined for square matrices only");

    auto keep = [&](const PartitionScheme& s) {
        if (cls == "all")
            return true;
        auto c = classify_partition(s, rows, cols);
        if (cls == "symmetric")
            return c == PartitionClass::Symmetric || c == PartitionClass::SymmetricAndPseudo ||
                   c == PartitionClass::Cell;
        return c == PartitionClass::Pseudo || c == PartitionClass::SymmetricAndPseudo ||
               c == PartitionClass::Cell;
    };

    if (count_only) {
        // counts come from the closed forms and are cross-checked against the
        // exhaustive enumeration
        std::uint64_t count = 0;
        std::uint64_t expected = 0;
        std::string formula;
        if (cls == "all") {
            expected = count_partitions(rows, cols);
            formula = "2^(rows-1) * 2^(cols-1) - 1 = " + std::to_string(expected);
        } else if (cls == "symmetric") {
            expected = count_symmetric_partitions(rows);
            formula = "2^(n-1) - 1 = " + std::to_string(expected);
        }
        for (const auto& s : enumerate_partitions(rows, cols))
            if (keep(s))
                ++count;
        std::cout << count << "\n";
        if (cls != "pseudo") {
            std::cout << "note: exhaustive enumeration over all nonempty cut subsets; " << formula
                      << (count == expected ? " (agrees)" : " (DISAGREES)") << "\n";
        } else {
            std::cout << "note: exhaustive enumeration over all nonempty cut subsets\n";
        }
        return kExitOk;
    }

    for (const auto& s : enumerate_partitions(rows, cols)) {
        if (!keep(s))
            continue;
        nlohmann::json j{{"row_cuts", s.row_cuts}, {"col_cuts", s.col_cuts}};
        std::cout << canonical_dump(j) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"supermatrix algebra and multi-expert fuzzy inference models"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a model to its hidden pattern");
    std::string model_path, initial_arg, side_str, format = "text";
    int max_steps = 0;
    double tol = 1e-9;
    run->add_option("--model", model_path, "model JSON file")->required();
    run->add_option("--initial", initial_arg, "initial state JSON file or inline JSON")->required();
    run->add_option("--side", side_str, "stimulus side: domain|range|x|y");
    run->add_option("--max-steps", max_steps, "iteration cap (default: model-dependent)");
    run->add_option("--tol", tol, "fam convergence tolerance");
    run->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* compose = app.add_subcommand("compose", "matrix operations on JSON files");
    std::string op, semiring = "plus", a_path, b_path;
    compose->add_option("--op", op, "multiply|add|transpose|pseudo-transpose|moment|pseudo-product")
        ->required();
    compose->add_option("--semiring", semiring, "plus|maxmin");
    compose->add_option("--a", a_path, "left operand")->required();
    compose->add_option("--b", b_path, "right operand (multiply/add)");

    auto* enumerate = app.add_subcommand("enumerate", "list or count partition schemes");
    int rows = 0, cols = 0;
    std::string cls = "all";
    bool count_only = false;
    enumerate->add_option("--rows", rows, "row dimension")->required();
    enumerate->add_option("--cols", cols, "column dimension")->required();
    enumerate->add_option("--class", cls, "all|symmetric|pseudo");
    enumerate->add_flag("--count-only", count_only, "print the count instead of the schemes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (run->parsed())
            return cmd_run(model_path, initial_arg, side_str, max_steps, tol, format);
        if (compose->parsed())
            return cmd_compose(op, semiring, a_path, b_path);
        if (enumerate->parsed())
            return cmd_enumerate(rows, cols, cls, count_only);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitUsage;
}
