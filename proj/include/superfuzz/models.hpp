#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superfuzz/error.hpp"
#include "superfuzz/fuzzy.hpp"
#include "superfuzz/matrix.hpp"

namespace superfuzz {

enum class ModelKind { Fcm, Frm, Bam, Fam };
enum class ModelVariant { Plain, SuperRow, SuperColumn, SuperDiagonal, SuperFull };
enum class Side { Domain, Range }; // BAM/FAM x-space maps to Domain, y-space to Range

const char* model_kind_name(ModelKind k);
const char* model_variant_name(ModelVariant v);
const char* side_name(Side s);

/// One inference model: the connection supermatrix plus the structural
/// metadata of its variant. The variant encodes which of the domain/range
/// attribute sets differ across experts; all variants share one iteration
/// kernel per model kind.
struct ModelSpec {
    ModelKind kind = ModelKind::Fcm;
    ModelVariant variant = ModelVariant::Plain;
    SuperMatrix connection;
    std::vector<std::vector<std::string>> domain_labels; // per expert block, optional
    std::vector<std::vector<std::string>> range_labels;
    int scale = 0;                    // BAM fit range [-scale, scale]
    std::vector<double> thresholds_u; // BAM x-side thresholds, empty = all zero
    std::vector<double> thresholds_v; // BAM y-side thresholds
};

struct ValidationIssue {
    Errc code;
    std::string path; // JSON-ish path into the model document
    std::string message;
};

/// Reports every violated structural invariant (entry domain, diagonal-block
/// squareness, zero diagonals, variant/scheme shape, zero off-diagonal
/// blocks for the diagonal variant, label/threshold sizes). Returns issues,
/// never throws.
std::vector<ValidationIssue> validate_model(const ModelSpec& model);

struct Step {
    Side side;
    std::vector<double> raw; // pre-threshold values
    SuperStateVector state;
};

struct Verdict {
    enum class Kind { FixedPoint, LimitCycle, MaxStepsExceeded };
    Kind kind = Kind::MaxStepsExceeded;
    // For LimitCycle: the cycle begins at same-space state index cycle_start
    // (0 = the initial state) and has length period >= 2.
    int cycle_start = -1;
    int period = 0;
};

struct RunTrace {
    SuperStateVector initial;
    Side initial_side = Side::Domain;
    std::vector<Step> steps;
    Verdict verdict;

    /// Last computed state (the hidden pattern for FixedPoint verdicts).
    const SuperStateVector& final_state() const;
};

/// Default iteration cap: twice the state-space bound for binary-state
/// models (capped at 2^21), 1000 for fuzzy fit vectors.
int default_max_steps(const ModelSpec& model);

/// Iterates X -> threshold-update(X o M) with the initially-on coordinates
/// clamped, until a state repeats. max_steps <= 0 selects the default cap.
RunTrace fcm_hidden_pattern(const ModelSpec& model, const SuperStateVector& initial,
                            int max_steps = 0);

/// Alternates through E and E^t with threshold-and-update; the clamp applies
/// only on the side that carries the initial stimulus.
RunTrace frm_hidden_pattern(const ModelSpec& model, const SuperStateVector& initial, Side side,
                            int max_steps = 0);

/// Discrete BAM recall with threshold binary signal functions (external
/// inputs fixed to zero). Stops when the (S_X, S_Y) signal pair repeats.
RunTrace bam_recall(const ModelSpec& model, const SuperStateVector& initial_fit, Side side,
                    int max_steps = 0);

/// Max-min recall of a fuzzy fit vector; stops when successive same-side
/// vectors agree within tol in max norm.
RunTrace fam_recall(const ModelSpec& model, const SuperStateVector& fit, Side side,
                    int max_steps = 0, double tol = 1e-9);

/// Entrywise sum of the connection matrices (FCM/FRM only; same kind, shape
/// and scheme). Summed weights are kept as integers, not re-thresholded, so
/// opposing +1/-1 opinions cancel; callers may re-quantize explicitly.
ModelSpec combine_models(const std::vector<ModelSpec>& models);

} // namespace superfuzz
