#pragma once

namespace superfuzz {

/// Accumulation structure used by matrix products.
///
/// PlusTimes is ordinary arithmetic; MaxMin replaces + by max and x by min
/// with additive identity 0 (entries are expected in [0,1] in the fuzzy
/// setting, but the product itself does not range-check).
enum class Semiring {
    PlusTimes,
    MaxMin,
};

const char* semiring_name(Semiring s);

} // namespace superfuzz
