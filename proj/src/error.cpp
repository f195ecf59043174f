#include "superfuzz/error.hpp"

namespace superfuzz {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::OutOfRangeCut: return "OutOfRangeCut";
    case Errc::UnsortedCuts: return "UnsortedCuts";
    case Errc::DuplicateCut: return "DuplicateCut";
    case Errc::EmptyBlockList: return "EmptyBlockList";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SchemeMismatch: return "SchemeMismatch";
    case Errc::BlockMismatch: return "BlockMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonBinaryInitial: return "NonBinaryInitial";
    case Errc::ScaleViolation: return "ScaleViolation";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::ZeroDiagonalViolated: return "ZeroDiagonalViolated";
    case Errc::OffDiagonalNonzero: return "OffDiagonalNonzero";
    case Errc::EntryDomainViolated: return "EntryDomainViolated";
    case Errc::VariantSchemeMismatch: return "VariantSchemeMismatch";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace superfuzz
