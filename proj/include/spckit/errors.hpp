#pragma once

#include <stdexcept>
#include <string>

namespace spckit {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// group_core
struct NotAssociative : Error { using Error::Error; };
struct NoIdentity : Error { using Error::Error; };
struct NoInverse : Error { using Error::Error; };
struct BadTable : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct BadGroupSpec : Error { using Error::Error; };

// partitions / spc
struct ArgumentOutOfRange : Error { using Error::Error; };
struct MismatchedGroundSet : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct MismatchedContext : Error { using Error::Error; };

// lattice
struct NotAPartialOrder : Error { using Error::Error; };
struct NotALattice : Error {
    int a = -1, b = -1;  ///< offending pair (no glb or no lub), if known
    explicit NotALattice(const std::string& what, int a_ = -1, int b_ = -1)
        : Error(what), a(a_), b(b_) {}
};
struct TooLarge : Error { using Error::Error; };

// brsc
struct GroundTooLarge : Error { using Error::Error; };
struct OverlappingGrounds : Error { using Error::Error; };
struct EmptyRestriction : Error { using Error::Error; };
struct NotAJoinGenerator : Error { using Error::Error; };

// gain_graph
struct NotAClosedWalk : Error { using Error::Error; };
struct NotACircuit : Error { using Error::Error; };
struct NotAFrameOfExpectedShape : Error { using Error::Error; };

// boolrep
struct SearchSpaceTooLarge : Error { using Error::Error; };

// wreath
struct NotClosed : Error { using Error::Error; };
struct NotTrivial : Error { using Error::Error; };

// cli / limits
struct BoundsExceeded : Error { using Error::Error; };

}  // namespace spckit
