#pragma once

#include <stdexcept>
#include <string>

namespace superfuzz {

enum class Errc {
    OutOfRangeCut,
    UnsortedCuts,
    DuplicateCut,
    EmptyBlockList,
    ShapeMismatch,
    SchemeMismatch,
    BlockMismatch,
    DimensionMismatch,
    NonBinaryInitial,
    ScaleViolation,
    RangeViolation,
    KindMismatch,
    ZeroDiagonalViolated,
    OffDiagonalNonzero,
    EntryDomainViolated,
    VariantSchemeMismatch,
    LabelMismatch,
    ParseError,
    SchemaError,
    ValidationError,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace superfuzz
