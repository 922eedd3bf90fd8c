#pragma once

#include <stdexcept>

namespace qthook {

// Error taxonomy. Distinct types so callers can tell configuration mistakes
// apart from genuine arithmetic degeneracies; every throw carries a message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a factor denominator 1 - q^{i+1} t^m vanished at the evaluation point
struct DegenerateDenominator : Error { using Error::Error; };
// arithmetic between series with different truncation degrees
struct TruncationMismatch : Error { using Error::Error; };
// a series was asked to admit a non-integral or negative-exponent monomial
struct InvalidMonomial : Error { using Error::Error; };
// cell reference outside the diagram
struct CellOutsideDiagram : Error { using Error::Error; };
// ambient size N smaller than the largest part of mu
struct NTooSmall : Error { using Error::Error; };
// fixed diagonal profile violates the diagram or the budget
struct InfeasibleProfile : Error { using Error::Error; };
// Pieri coefficient requested for partitions that do not interlace
struct NotAHorizontalStrip : Error { using Error::Error; };
// Gram matrix pivot vanished during orthogonalization
struct SingularGram : Error { using Error::Error; };
// top-tree coloring does not extend to the whole poset
struct ExtensionFailed : Error { using Error::Error; };
// maximal chains through some element disagree in length
struct InconsistentChainLengths : Error { using Error::Error; };
// two d_k-interval recursions give different hooks for the same element
struct AmbiguousHook : Error { using Error::Error; };
// rank difference with the wrong parity for a color pair
struct ParityViolation : Error { using Error::Error; };
// malformed user input (CLI argument, JSON poset file, invalid partition)
struct InvalidSpec : Error { using Error::Error; };

}  // namespace qthook
