#pragma once

#include <stdexcept>
#include <string>

namespace enrlat {

/// Base class for every typed failure of the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input validation.
struct InvalidLattice : Error { using Error::Error; };
struct DegenerateLattice : Error { using Error::Error; };
struct OddRank1Parameter : Error { using Error::Error; };
struct ZeroScale : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };

// Isometries and groups.
struct NotAnIsometry : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct UnsupportedGroupExponent : Error { using Error::Error; };

// Definite lattices and enumeration.
struct NotDefinite : Error { using Error::Error; };
struct NodeCapExceeded : Error { using Error::Error; };

// Enriques setups.
struct EvenN : Error { using Error::Error; };
struct NTooSmall : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct NotTwoCongruence : Error { using Error::Error; };
struct IntegralityFailure : Error { using Error::Error; };
struct BadSpheres : Error { using Error::Error; };
struct NegativeMukaiSquare : Error { using Error::Error; };
struct EvenChi : Error { using Error::Error; };

// Criterion.
struct UnsupportedFamily : Error { using Error::Error; };
struct NotCentralizing : Error { using Error::Error; };
struct NotOrientationPreserving : Error { using Error::Error; };
struct NotDividing : Error { using Error::Error; };

}  // namespace enrlat
