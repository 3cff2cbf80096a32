#pragma once

#include <stdexcept>
#include <string>

namespace valvol {

// Base class for all failures this library reports deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A refinable-real table cannot reach the requested interval width.
struct DepthExhausted : Error {
    using Error::Error;
};

// Certified comparison could not separate two values within the depth cap
// and linear independence of the generators was not asserted.
struct ComparisonStalled : Error {
    using Error::Error;
};

// Exponent vectors of different lengths were mixed.
struct MixedArity : Error {
    using Error::Error;
};

// The quotient by the ideal is not finite dimensional.
struct InfiniteColength : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

// Polyhedral routines are capped at four variables.
struct UnsupportedDimension : Error {
    using Error::Error;
};

// The complement of the Newton polyhedron in the orthant has infinite volume.
struct UnboundedComplement : Error {
    using Error::Error;
};

// An arc-valuation query ran past the series truncation depth.
struct DepthExceeded : Error {
    using Error::Error;
};

// A scaled Zariski count would overflow the integer capacity.
struct CapacityExceeded : Error {
    using Error::Error;
};

// Asymptotic multiplier ideals failed to stabilize below the doubling cap.
struct StabilizationFailed : Error {
    using Error::Error;
};

// A graded family that does not consist of monomial ideals was asked for one.
struct NonMonomialFamily : Error {
    using Error::Error;
};

// Bad CLI usage or malformed configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace valvol
