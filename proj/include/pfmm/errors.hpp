#pragma once

#include <stdexcept>
#include <string>

namespace pfmm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact
struct DivisionByZero : Error { using Error::Error; };
struct PoleAtOrigin : Error { using Error::Error; };
struct NotInvariantUnderMuK : Error { using Error::Error; };

// multipoly
struct NotHomogeneous : Error { using Error::Error; };
struct InvalidFamily : Error { using Error::Error; };

// groebner
struct NonProportionalNormalForm : Error { using Error::Error; };

// griffiths
struct InternalDegreeError : Error { using Error::Error; };
struct NotMaximallyUnipotent : Error { using Error::Error; };
struct UnsupportedSingularityStructure : Error { using Error::Error; };

// series
struct NotAUnit : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };
struct NoRegularSolution : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct OrderExhausted : Error { using Error::Error; };

// mirror
struct NonIntegralInstanton : Error {
    NonIntegralInstanton(int index, std::string value)
        : Error("non-integral instanton number at index " + std::to_string(index) +
                ": " + value),
          index(index), value(std::move(value)) {}
    int index;
    std::string value;
};

}  // namespace pfmm
