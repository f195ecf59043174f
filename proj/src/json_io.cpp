#include "superfuzz/json_io.hpp"

#include <fstream>
#include <sstream>

#include "superfuzz/error.hpp"

namespace superfuzz {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(Errc::SchemaError, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int require_int(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer())
        throw Error(Errc::SchemaError, std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> optional_int_array(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        return {};
    const json& v = j.at(key);
    if (!v.is_array())
        throw Error(Errc::SchemaError, std::string("field \"") + key + "\" must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw Error(Errc::SchemaError, std::string("field \"") + key + "\" must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<double> require_number_array(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_array())
        throw Error(Errc::SchemaError, std::string("field \"") + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number())
            throw Error(Errc::SchemaError, std::string("field \"") + key + "\" must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

} // namespace

json matrix_to_json(const SuperMatrix& m) {
    return json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"row_cuts", m.scheme().row_cuts},
                {"col_cuts", m.scheme().col_cuts},
                {"entries", m.entries()}};
}

SuperMatrix matrix_from_json(const json& j) {
    int rows = require_int(j, "rows");
    int cols = require_int(j, "cols");
    auto entries = require_number_array(j, "entries");
    if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) ||
        rows < 1 || cols < 1)
        throw Error(Errc::SchemaError, "entries length " + std::to_string(entries.size()) + " != rows*cols");
    PartitionScheme scheme{optional_int_array(j, "row_cuts"), optional_int_array(j, "col_cuts")};
    try {
        return SuperMatrix(rows, cols, std::move(entries), std::move(scheme));
    } catch (const Error& e) {
        throw Error(Errc::SchemaError, e.what());
    }
}

json state_to_json(const SuperStateVector& v) {
    json j{{"domain", state_domain_name(v.domain)}, {"cuts", v.cuts}, {"values", v.values}};
    if (v.domain == StateDomain::Scaled)
        j["scale"] = v.scale;
    return j;
}

SuperStateVector state_from_json(const json& j) {
    const json& d = require(j, "domain");
    if (!d.is_string())
        throw Error(Errc::SchemaError, "field \"domain\" must be a string");
    std::string name = d.get<std::string>();
    StateDomain domain;
    if (name == "binary")
        domain = StateDomain::Binary;
    else if (name == "bipolar")
        domain = StateDomain::Bipolar;
    else if (name == "scaled")
        domain = StateDomain::Scaled;
    else if (name == "fuzzy")
        domain = StateDomain::Fuzzy;
    else
        throw Error(Errc::SchemaError, "unknown state domain \"" + name + "\"");
    int scale = j.contains("scale") ? require_int(j, "scale") : 0;
    try {
        return SuperStateVector::make(domain, require_number_array(j, "values"),
                                      optional_int_array(j, "cuts"), scale);
    } catch (const Error& e) {
        if (e.code() == Errc::SchemaError)
            throw;
        throw Error(Errc::SchemaError, e.what());
    }
}

json model_to_json(const ModelSpec& m) {
    json j{{"kind", model_kind_name(m.kind)},
           {"variant", model_variant_name(m.variant)},
           {"matrix", matrix_to_json(m.connection)},
           {"domain_labels", m.domain_labels},
           {"range_labels", m.range_labels}};
    if (m.kind == ModelKind::Bam) {
        j["scale"] = m.scale;
        if (!m.thresholds_u.empty())
            j["thresholds_u"] = m.thresholds_u;
        if (!m.thresholds_v.empty())
            j["thresholds_v"] = m.thresholds_v;
    }
    return j;
}

ModelSpec model_from_json(const json& j) {
    ModelSpec m;
    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "fcm")
        m.kind = ModelKind::Fcm;
    else if (kind == "frm")
        m.kind = ModelKind::Frm;
    else if (kind == "bam")
        m.kind = ModelKind::Bam;
    else if (kind == "fam")
        m.kind = ModelKind::Fam;
    else
        throw Error(Errc::SchemaError, "unknown model kind \"" + kind + "\"");

    std::string variant = require(j, "variant").get<std::string>();
    if (variant == "plain")
        m.variant = ModelVariant::Plain;
    else if (variant == "super_row")
        m.variant = ModelVariant::SuperRow;
    else if (variant == "super_column")
        m.variant = ModelVariant::SuperColumn;
    else if (variant == "super_diagonal")
        m.variant = ModelVariant::SuperDiagonal;
    else if (variant == "super_full")
        m.variant = ModelVariant::SuperFull;
    else
        throw Error(Errc::SchemaError, "unknown model variant \"" + variant + "\"");

    m.connection = matrix_from_json(require(j, "matrix"));
    if (j.contains("domain_labels"))
        m.domain_labels = j.at("domain_labels").get<std::vector<std::vector<std::string>>>();
    if (j.contains("range_labels"))
        m.range_labels = j.at("range_labels").get<std::vector<std::vector<std::string>>>();
    if (j.contains("scale"))
        m.scale = require_int(j, "scale");
    if (j.contains("thresholds_u"))
        m.thresholds_u = require_number_array(j, "thresholds_u");
    if (j.contains("thresholds_v"))
        m.thresholds_v = require_number_array(j, "thresholds_v");
    return m;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

SuperMatrix load_matrix(const std::string& path) { return matrix_from_json(parse_file(path)); }
SuperStateVector load_state(const std::string& path) { return state_from_json(parse_file(path)); }

ModelSpec load_model(const std::string& path) {
    ModelSpec m = model_from_json(parse_file(path));
    auto issues = validate_model(m);
    if (!issues.empty()) {
        std::ostringstream msg;
        msg << path << ": " << issues.size() << " validation issue(s)";
        for (const auto& i : issues)
            msg << "\n  " << i.path << ": [" << errc_name(i.code) << "] " << i.message;
        throw Error(Errc::ValidationError, msg.str());
    }
    return m;
}

std::string canonical_dump(const json& j) { return j.dump(); }

} // namespace superfuzz
