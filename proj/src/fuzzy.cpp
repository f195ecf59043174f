#include "superfuzz/fuzzy.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "superfuzz/error.hpp"
#include "superfuzz/kernels.hpp"

namespace superfuzz {

FuzzyMatrix::FuzzyMatrix(SuperMatrix m) : m_(std::move(m)) {
    for (double v : m_.entries())
        if (v < 0.0 || v > 1.0)
            throw Error(Errc::RangeViolation, "entry " + std::to_string(v) + " outside [0,1]");
}

const char* state_domain_name(StateDomain d) {
    switch (d) {
    case StateDomain::Binary: return "binary";
    case StateDomain::Bipolar: return "bipolar";
    case StateDomain::Scaled: return "scaled";
    case StateDomain::Fuzzy: return "fuzzy";
    }
    return "?";
}

static bool is_integer(double v) { return v == std::floor(v); }

SuperStateVector SuperStateVector::make(StateDomain domain, std::vector<double> values,
                                        std::vector<int> cuts, int scale) {
    SuperStateVector v;
    v.domain = domain;
    v.scale = scale;
    v.values = std::move(values);
    v.cuts = std::move(cuts);
    if (v.values.empty())
        throw Error(Errc::InvalidArgument, "empty state vector");
    validate_cuts(v.cuts, v.size());
    for (double x : v.values) {
        switch (domain) {
        case StateDomain::Binary:
            if (x != 0.0 && x != 1.0)
                throw Error(Errc::RangeViolation, "binary state entry " + std::to_string(x));
            break;
        case StateDomain::Bipolar:
            if (x != -1.0 && x != 0.0 && x != 1.0)
                throw Error(Errc::RangeViolation, "bipolar state entry " + std::to_string(x));
            break;
        case StateDomain::Scaled:
            if (!is_integer(x) || x < -scale || x > scale)
                throw Error(Errc::ScaleViolation, "fit entry " + std::to_string(x) + " outside [-" +
                                                      std::to_string(scale) + "," +
                                                      std::to_string(scale) + "]");
            break;
        case StateDomain::Fuzzy:
            if (x < 0.0 || x > 1.0)
                throw Error(Errc::RangeViolation, "fuzzy state entry " + std::to_string(x));
            break;
        }
    }
    return v;
}

std::vector<int> SuperStateVector::on_set() const {
    std::vector<int> on;
    for (int i = 0; i < size(); ++i)
        if (values[i] != 0.0)
            on.push_back(i);
    return on;
}

FuzzyMatrix super_pseudo_product(const FuzzyMatrix& a) {
    const SuperMatrix& m = a.matrix();
    if (m.rows() != 1)
        throw Error(Errc::ShapeMismatch, "super pseudo product needs a 1 x n row vector");
    const int n = m.cols();
    const auto& cuts = m.scheme().col_cuts;
    SuperMatrix out = SuperMatrix::zeros(n, n, {cuts, cuts});
    const auto& k = kernels::active_backend();
    for (int i = 0; i < n; ++i)
        k.min_broadcast(m(0, i), m.row_data(0), out.row_data(i), static_cast<std::size_t>(n));
    return FuzzyMatrix(std::move(out));
}

SuperMatrix minor_product_moment(const FuzzyMatrix& x) {
    const SuperMatrix& m = x.matrix();
    if (m.scheme().row_cuts.empty())
        return multiply(m, transpose(m), Semiring::MaxMin); // special row matrix: x x^t
    if (m.scheme().col_cuts.empty())
        return multiply(transpose(m), m, Semiring::MaxMin); // special column matrix: x^t x
    throw Error(Errc::SchemeMismatch, "moment needs a special row (no row cuts) or special column "
                                      "(no col cuts) supermatrix");
}

SuperStateVector threshold_update(const std::vector<double>& raw, const std::vector<int>& cuts,
                                  const std::vector<int>& clamp) {
    std::vector<double> out(raw.size(), 0.0);
    for (std::size_t i = 0; i < raw.size(); ++i)
        out[i] = raw[i] > 0.0 ? 1.0 : 0.0;
    for (int i : clamp) {
        if (i < 0 || i >= static_cast<int>(out.size()))
            throw Error(Errc::DimensionMismatch, "clamp index " + std::to_string(i));
        out[static_cast<std::size_t>(i)] = 1.0;
    }
    return SuperStateVector::make(StateDomain::Binary, std::move(out), cuts);
}

SuperStateVector bam_signal(const std::vector<double>& raw, const std::vector<double>& previous,
                            const std::vector<double>& thresholds, const std::vector<int>& cuts) {
    if (raw.size() != previous.size() || raw.size() != thresholds.size())
        throw Error(Errc::DimensionMismatch, "signal inputs must have equal length");
    std::vector<double> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] > thresholds[i])
            out[i] = 1.0;
        else if (raw[i] < thresholds[i])
            out[i] = 0.0;
        else
            out[i] = previous[i];
    }
    return SuperStateVector::make(StateDomain::Binary, std::move(out), cuts);
}

} // namespace superfuzz
