#include "superfuzz/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace superfuzz {

const char* model_kind_name(ModelKind k) {
    switch (k) {
    case ModelKind::Fcm: return "fcm";
    case ModelKind::Frm: return "frm";
    case ModelKind::Bam: return "bam";
    case ModelKind::Fam: return "fam";
    }
    return "?";
}

const char* model_variant_name(ModelVariant v) {
    switch (v) {
    case ModelVariant::Plain: return "plain";
    case ModelVariant::SuperRow: return "super_row";
    case ModelVariant::SuperColumn: return "super_column";
    case ModelVariant::SuperDiagonal: return "super_diagonal";
    case ModelVariant::SuperFull: return "super_full";
    }
    return "?";
}

const char* side_name(Side s) { return s == Side::Domain ? "domain" : "range"; }

const SuperStateVector& RunTrace::final_state() const {
    return steps.empty() ? initial : steps.back().state;
}

// ---------------------------------------------------------------------------
// validation

static bool is_signed_unit(double v) { return v == -1.0 || v == 0.0 || v == 1.0; }

std::vector<ValidationIssue> validate_model(const ModelSpec& model) {
    std::vector<ValidationIssue> issues;
    auto issue = [&](Errc c, std::string path, std::string msg) {
        issues.push_back({c, std::move(path), std::move(msg)});
    };

    const SuperMatrix& M = model.connection;
    if (M.empty()) {
        issue(Errc::SchemaError, "matrix", "missing connection matrix");
        return issues;
    }
    const PartitionScheme& sch = M.scheme();

    switch (model.variant) {
    case ModelVariant::Plain:
        if (!sch.trivial())
            issue(Errc::VariantSchemeMismatch, "variant", "plain variant must carry no cuts");
        break;
    case ModelVariant::SuperRow:
        if (!sch.row_cuts.empty() || sch.col_cuts.empty())
            issue(Errc::VariantSchemeMismatch, "variant", "super_row variant needs column cuts only");
        break;
    case ModelVariant::SuperColumn:
        if (sch.row_cuts.empty() || !sch.col_cuts.empty())
            issue(Errc::VariantSchemeMismatch, "variant", "super_column variant needs row cuts only");
        break;
    case ModelVariant::SuperDiagonal:
    case ModelVariant::SuperFull:
        if (sch.row_cuts.empty() || sch.col_cuts.empty())
            issue(Errc::VariantSchemeMismatch, "variant",
                  std::string(model_variant_name(model.variant)) + " variant needs both row and column cuts");
        break;
    }

    for (std::size_t i = 0; i < M.entries().size(); ++i) {
        double v = M.entries()[i];
        bool ok = true;
        switch (model.kind) {
        case ModelKind::Fcm:
        case ModelKind::Frm: ok = is_signed_unit(v); break;
        case ModelKind::Fam: ok = v >= 0.0 && v <= 1.0; break;
        case ModelKind::Bam: ok = v == std::floor(v); break;
        }
        if (!ok)
            issue(Errc::EntryDomainViolated, "matrix.entries[" + std::to_string(i) + "]",
                  "entry " + std::to_string(v) + " outside the " +
                      std::string(model_kind_name(model.kind)) + " entry domain");
    }

    auto roff = block_offsets(sch.row_cuts, M.rows());
    auto coff = block_offsets(sch.col_cuts, M.cols());

    if (model.kind == ModelKind::Fcm) {
        if (M.rows() != M.cols())
            issue(Errc::ShapeMismatch, "matrix", "fcm connection must be square");
        else if (roff.size() != coff.size())
            issue(Errc::ValidationError, "matrix", "fcm block grid must be square");
        else {
            for (std::size_t b = 0; b + 1 < roff.size(); ++b) {
                int rs = roff[b + 1] - roff[b], cs = coff[b + 1] - coff[b];
                if (rs != cs) {
                    issue(Errc::ValidationError, "matrix.block[" + std::to_string(b) + "]",
                          "diagonal block is " + std::to_string(rs) + "x" + std::to_string(cs));
                    continue;
                }
                for (int d = 0; d < rs; ++d)
                    if (M(roff[b] + d, coff[b] + d) != 0.0)
                        issue(Errc::ZeroDiagonalViolated,
                              "matrix.block[" + std::to_string(b) + "].diag[" + std::to_string(d) + "]",
                              "diagonal entry must be zero");
            }
        }
    }

    if (model.variant == ModelVariant::SuperDiagonal) {
        for (std::size_t bi = 0; bi + 1 < roff.size(); ++bi)
            for (std::size_t bj = 0; bj + 1 < coff.size(); ++bj) {
                if (bi == bj)
                    continue;
                bool zero = true;
                for (int i = roff[bi]; i < roff[bi + 1] && zero; ++i)
                    for (int j = coff[bj]; j < coff[bj + 1] && zero; ++j)
                        if (M(i, j) != 0.0)
                            zero = false;
                if (!zero)
                    issue(Errc::OffDiagonalNonzero,
                          "matrix.block[" + std::to_string(bi) + "][" + std::to_string(bj) + "]",
                          "off-diagonal block of a super_diagonal model must be zero");
            }
    }

    if (model.kind == ModelKind::Bam) {
        if (model.scale <= 0)
            issue(Errc::ScaleViolation, "scale", "bam needs a positive scale");
        if (!model.thresholds_u.empty() && static_cast<int>(model.thresholds_u.size()) != M.rows())
            issue(Errc::DimensionMismatch, "thresholds_u", "expected length " + std::to_string(M.rows()));
        if (!model.thresholds_v.empty() && static_cast<int>(model.thresholds_v.size()) != M.cols())
            issue(Errc::DimensionMismatch, "thresholds_v", "expected length " + std::to_string(M.cols()));
    }

    auto check_labels = [&](const std::vector<std::vector<std::string>>& labels,
                            const std::vector<int>& off, const char* path) {
        if (labels.empty())
            return;
        if (labels.size() != off.size() - 1) {
            issue(Errc::LabelMismatch, path, "expected " + std::to_string(off.size() - 1) + " label blocks");
            return;
        }
        for (std::size_t b = 0; b + 1 < off.size(); ++b)
            if (static_cast<int>(labels[b].size()) != off[b + 1] - off[b])
                issue(Errc::LabelMismatch, std::string(path) + "[" + std::to_string(b) + "]",
                      "expected " + std::to_string(off[b + 1] - off[b]) + " labels");
    };
    check_labels(model.domain_labels, roff, "domain_labels");
    check_labels(model.range_labels, coff, "range_labels");

    return issues;
}

// ---------------------------------------------------------------------------
// iteration engines

int default_max_steps(const ModelSpec& model) {
    if (model.kind == ModelKind::Fam)
        return 1000;
    long long bits = model.kind == ModelKind::Fcm
                         ? model.connection.rows()
                         : model.connection.rows() + model.connection.cols();
    bits = std::min(bits, 20LL);
    return static_cast<int>(2LL << bits); // twice the state-space bound
}

namespace {

SuperMatrix as_row(const std::vector<double>& v, const std::vector<int>& col_cuts) {
    return SuperMatrix(1, static_cast<int>(v.size()), v, {{}, col_cuts});
}

void require_kind(const ModelSpec& model, ModelKind kind) {
    if (model.kind != kind)
        throw Error(Errc::KindMismatch, std::string("expected a ") + model_kind_name(kind) + " model, got " +
                                            model_kind_name(model.kind));
}

void require_length(const SuperStateVector& v, int expected, const std::vector<int>& expected_cuts) {
    if (v.size() != expected)
        throw Error(Errc::DimensionMismatch, "state length " + std::to_string(v.size()) + ", model needs " +
                                                 std::to_string(expected));
    if (!v.cuts.empty() && v.cuts != expected_cuts)
        throw Error(Errc::SchemeMismatch, "state cuts do not match the model partition");
}

// Index of `v` in `history`, or -1.
int find_state(const std::vector<std::vector<double>>& history, const std::vector<double>& v) {
    for (std::size_t i = 0; i < history.size(); ++i)
        if (history[i] == v)
            return static_cast<int>(i);
    return -1;
}

int find_state_tol(const std::vector<std::vector<double>>& history, const std::vector<double>& v,
                   double tol) {
    for (std::size_t i = 0; i < history.size(); ++i) {
        double d = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k)
            d = std::max(d, std::abs(history[i][k] - v[k]));
        if (d <= tol)
            return static_cast<int>(i);
    }
    return -1;
}

Verdict classify_repeat(int hit, int history_size) {
    Verdict v;
    if (hit == history_size - 1) {
        v.kind = Verdict::Kind::FixedPoint;
    } else {
        v.kind = Verdict::Kind::LimitCycle;
        v.cycle_start = hit;
        v.period = history_size - hit;
    }
    return v;
}

} // namespace

RunTrace fcm_hidden_pattern(const ModelSpec& model, const SuperStateVector& initial, int max_steps) {
    require_kind(model, ModelKind::Fcm);
    const SuperMatrix& M = model.connection;
    if (initial.domain != StateDomain::Binary)
        throw Error(Errc::NonBinaryInitial, "fcm state vectors are binary");
    const auto& cuts = M.scheme().row_cuts;
    require_length(initial, M.rows(), cuts);
    if (max_steps <= 0)
        max_steps = default_max_steps(model);

    RunTrace tr;
    tr.initial = initial;
    tr.initial.cuts = cuts;
    tr.initial_side = Side::Domain;
    const std::vector<int> clamp = initial.on_set();

    std::vector<std::vector<double>> history{tr.initial.values};
    std::vector<double> x = tr.initial.values;
    for (int step = 0; step < max_steps; ++step) {
        auto raw = multiply(as_row(x, cuts), M, Semiring::PlusTimes).entries();
        SuperStateVector next = threshold_update(raw, cuts, clamp);
        tr.steps.push_back({Side::Domain, std::move(raw), next});
        int hit = find_state(history, next.values);
        if (hit >= 0) {
            history.push_back(next.values);
            tr.verdict = classify_repeat(hit, static_cast<int>(history.size()) - 1);
            return tr;
        }
        history.push_back(next.values);
        x = std::move(next.values);
    }
    tr.verdict.kind = Verdict::Kind::MaxStepsExceeded;
    return tr;
}

RunTrace frm_hidden_pattern(const ModelSpec& model, const SuperStateVector& initial, Side side,
                            int max_steps) {
    require_kind(model, ModelKind::Frm);
    const SuperMatrix& E = model.connection;
    const SuperMatrix Et = transpose(E);
    if (initial.domain != StateDomain::Binary)
        throw Error(Errc::NonBinaryInitial, "frm state vectors are binary");
    const auto& x_cuts = E.scheme().row_cuts;
    const auto& y_cuts = E.scheme().col_cuts;
    require_length(initial, side == Side::Domain ? E.rows() : E.cols(),
                   side == Side::Domain ? x_cuts : y_cuts);
    if (max_steps <= 0)
        max_steps = default_max_steps(model);

    RunTrace tr;
    tr.initial = initial;
    tr.initial.cuts = side == Side::Domain ? x_cuts : y_cuts;
    tr.initial_side = side;
    const std::vector<int> clamp = initial.on_set(); // stimulus side only

    std::vector<std::vector<double>> history{tr.initial.values};
    std::vector<double> cur = tr.initial.values;
    for (int step = 0; step < max_steps; ++step) {
        SuperStateVector next;
        if (side == Side::Domain) {
            auto raw_y = multiply(as_row(cur, x_cuts), E, Semiring::PlusTimes).entries();
            SuperStateVector y = threshold_update(raw_y, y_cuts, {});
            tr.steps.push_back({Side::Range, std::move(raw_y), y});
            auto raw_x = multiply(as_row(y.values, y_cuts), Et, Semiring::PlusTimes).entries();
            next = threshold_update(raw_x, x_cuts, clamp);
            tr.steps.push_back({Side::Domain, std::move(raw_x), next});
        } else {
            auto raw_x = multiply(as_row(cur, y_cuts), Et, Semiring::PlusTimes).entries();
            SuperStateVector x = threshold_update(raw_x, x_cuts, {});
            tr.steps.push_back({Side::Domain, std::move(raw_x), x});
            auto raw_y = multiply(as_row(x.values, x_cuts), E, Semiring::PlusTimes).entries();
            next = threshold_update(raw_y, y_cuts, clamp);
            tr.steps.push_back({Side::Range, std::move(raw_y), next});
        }
        int hit = find_state(history, next.values);
        if (hit >= 0) {
            history.push_back(next.values);
            tr.verdict = classify_repeat(hit, static_cast<int>(history.size()) - 1);
            return tr;
        }
        history.push_back(next.values);
        cur = std::move(next.values);
    }
    tr.verdict.kind = Verdict::Kind::MaxStepsExceeded;
    return tr;
}

RunTrace bam_recall(const ModelSpec& model, const SuperStateVector& initial_fit, Side side,
                    int max_steps) {
    require_kind(model, ModelKind::Bam);
    const SuperMatrix& M = model.connection;
    const SuperMatrix Mt = transpose(M);
    const auto& x_cuts = M.scheme().row_cuts;
    const auto& y_cuts = M.scheme().col_cuts;
    const int n = M.rows(), p = M.cols();
    require_length(initial_fit, side == Side::Domain ? n : p, side == Side::Domain ? x_cuts : y_cuts);
    for (double v : initial_fit.values)
        if (v != std::floor(v) || v < -model.scale || v > model.scale)
            throw Error(Errc::ScaleViolation, "fit entry " + std::to_string(v) + " outside [-" +
                                                  std::to_string(model.scale) + "," +
                                                  std::to_string(model.scale) + "]");
    if (max_steps <= 0)
        max_steps = default_max_steps(model);

    std::vector<double> U = model.thresholds_u.empty() ? std::vector<double>(n, 0.0) : model.thresholds_u;
    std::vector<double> V = model.thresholds_v.empty() ? std::vector<double>(p, 0.0) : model.thresholds_v;

    RunTrace tr;
    tr.initial = initial_fit;
    tr.initial.cuts = side == Side::Domain ? x_cuts : y_cuts;
    tr.initial_side = side;

    // signal memories start all-off
    std::vector<double> sx(n, 0.0), sy(p, 0.0);
    if (side == Side::Domain) {
        SuperStateVector s = bam_signal(initial_fit.values, sx, U, x_cuts);
        sx = s.values;
        tr.steps.push_back({Side::Domain, initial_fit.values, std::move(s)});
    } else {
        SuperStateVector s = bam_signal(initial_fit.values, sy, V, y_cuts);
        sy = s.values;
        tr.steps.push_back({Side::Range, initial_fit.values, std::move(s)});
    }

    // bidirectional stability = the (S_X, S_Y) pair repeating
    std::vector<std::vector<double>> pairs;
    auto pack = [&] {
        std::vector<double> pair = sx;
        pair.insert(pair.end(), sy.begin(), sy.end());
        return pair;
    };
    pairs.push_back(pack());

    for (int step = 0; step < max_steps; ++step) {
        if (side == Side::Domain) {
            auto raw_y = multiply(as_row(sx, x_cuts), M, Semiring::PlusTimes).entries();
            SuperStateVector s_y = bam_signal(raw_y, sy, V, y_cuts);
            sy = s_y.values;
            tr.steps.push_back({Side::Range, std::move(raw_y), std::move(s_y)});
            auto raw_x = multiply(as_row(sy, y_cuts), Mt, Semiring::PlusTimes).entries();
            SuperStateVector s_x = bam_signal(raw_x, sx, U, x_cuts);
            sx = s_x.values;
            tr.steps.push_back({Side::Domain, std::move(raw_x), std::move(s_x)});
        } else {
            auto raw_x = multiply(as_row(sy, y_cuts), Mt, Semiring::PlusTimes).entries();
            SuperStateVector s_x = bam_signal(raw_x, sx, U, x_cuts);
            sx = s_x.values;
            tr.steps.push_back({Side::Domain, std::move(raw_x), std::move(s_x)});
            auto raw_y = multiply(as_row(sx, x_cuts), M, Semiring::PlusTimes).entries();
            SuperStateVector s_y = bam_signal(raw_y, sy, V, y_cuts);
            sy = s_y.values;
            tr.steps.push_back({Side::Range, std::move(raw_y), std::move(s_y)});
        }
        auto pair = pack();
        int hit = find_state(pairs, pair);
        if (hit >= 0) {
            pairs.push_back(pair);
            tr.verdict = classify_repeat(hit, static_cast<int>(pairs.size()) - 1);
            return tr;
        }
        pairs.push_back(std::move(pair));
    }
    tr.verdict.kind = Verdict::Kind::MaxStepsExceeded;
    return tr;
}

RunTrace fam_recall(const ModelSpec& model, const SuperStateVector& fit, Side side, int max_steps,
                    double tol) {
    require_kind(model, ModelKind::Fam);
    const SuperMatrix& F = model.connection;
    const SuperMatrix Ft = transpose(F);
    const auto& x_cuts = F.scheme().row_cuts;
    const auto& y_cuts = F.scheme().col_cuts;
    if (fit.domain != StateDomain::Fuzzy && fit.domain != StateDomain::Binary)
        throw Error(Errc::RangeViolation, "fam fit vectors take values in [0,1]");
    require_length(fit, side == Side::Domain ? F.rows() : F.cols(),
                   side == Side::Domain ? x_cuts : y_cuts);
    if (max_steps <= 0)
        max_steps = default_max_steps(model);

    RunTrace tr;
    tr.initial = fit;
    tr.initial.domain = StateDomain::Fuzzy;
    tr.initial.cuts = side == Side::Domain ? x_cuts : y_cuts;
    tr.initial_side = side;

    std::vector<std::vector<double>> history{tr.initial.values};
    std::vector<double> cur = tr.initial.values;
    for (int step = 0; step < max_steps; ++step) {
        std::vector<double> next_vals;
        if (side == Side::Domain) {
            auto raw_b = multiply(as_row(cur, x_cuts), F, Semiring::MaxMin).entries();
            tr.steps.push_back({Side::Range, raw_b,
                                SuperStateVector::make(StateDomain::Fuzzy, raw_b, y_cuts)});
            auto raw_a = multiply(as_row(raw_b, y_cuts), Ft, Semiring::MaxMin).entries();
            tr.steps.push_back({Side::Domain, raw_a,
                                SuperStateVector::make(StateDomain::Fuzzy, raw_a, x_cuts)});
            next_vals = std::move(raw_a);
        } else {
            auto raw_a = multiply(as_row(cur, y_cuts), Ft, Semiring::MaxMin).entries();
            tr.steps.push_back({Side::Domain, raw_a,
                                SuperStateVector::make(StateDomain::Fuzzy, raw_a, x_cuts)});
            auto raw_b = multiply(as_row(raw_a, x_cuts), F, Semiring::MaxMin).entries();
            tr.steps.push_back({Side::Range, raw_b,
                                SuperStateVector::make(StateDomain::Fuzzy, raw_b, y_cuts)});
            next_vals = std::move(raw_b);
        }
        int hit = find_state_tol(history, next_vals, tol);
        if (hit >= 0) {
            history.push_back(next_vals);
            tr.verdict = classify_repeat(hit, static_cast<int>(history.size()) - 1);
            return tr;
        }
        history.push_back(next_vals);
        cur = std::move(next_vals);
    }
    tr.verdict.kind = Verdict::Kind::MaxStepsExceeded;
    return tr;
}

ModelSpec combine_models(const std::vector<ModelSpec>& models) {
    if (models.empty())
        throw Error(Errc::InvalidArgument, "no models to combine");
    if (models[0].kind != ModelKind::Fcm && models[0].kind != ModelKind::Frm)
        throw Error(Errc::KindMismatch, "only fcm/frm models combine by adding connection matrices");
    ModelSpec out = models[0];
    for (std::size_t i = 1; i < models.size(); ++i) {
        if (models[i].kind != out.kind)
            throw Error(Errc::KindMismatch, "cannot combine models of different kinds");
        out.connection = add(out.connection, models[i].connection); // checks shape and scheme
    }
    return out;
}

} // namespace superfuzz
