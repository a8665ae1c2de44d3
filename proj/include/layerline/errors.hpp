#pragma once

#include <stdexcept>

namespace layerline {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction parameters outside the documented domain.
struct ParamsOutOfRange : Error { using Error::Error; };
// A vertex or element index outside [0, order).
struct IndexOutOfRange : Error { using Error::Error; };
// Edge list violates simple-graph invariants (loop, duplicate, bad index).
struct InvalidGraph : Error { using Error::Error; };
// Operation requires a connected graph.
struct Disconnected : Error { using Error::Error; };
// Operation requires a bipartite graph.
struct OddCycle : Error { using Error::Error; };
// Complement flag used where the two layers have different sizes.
struct CompNotApplicable : Error { using Error::Error; };
// A map claimed to be an automorphism fails adjacency preservation.
struct NotAutomorphism : Error { using Error::Error; };
// A search exceeded its node budget or practical size bound.
struct BudgetExceeded : Error { using Error::Error; };
// Connection set contains the identity or is not inverse-closed.
struct InvalidConnectionSet : Error { using Error::Error; };
// Group axioms fail for a candidate multiplication.
struct InvalidGroup : Error { using Error::Error; };
// Multiplicative inverse of zero requested.
struct DivisionByZero : Error { using Error::Error; };
// Matrix operation requires a square matrix.
struct NotSquare : Error { using Error::Error; };
// Graph has a vertex of odd degree, so no closed Euler circuit exists.
struct NotEulerian : Error { using Error::Error; };
// Input violates a stated precondition (e.g. not an involution).
struct PreconditionViolated : Error { using Error::Error; };
// A stored certificate fails re-verification.
struct BadCertificate : Error { using Error::Error; };

} // namespace layerline
