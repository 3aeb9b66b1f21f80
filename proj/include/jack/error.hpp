#pragma once

#include <stdexcept>
#include <string>

namespace jack {

// Base of every error raised by the library. Callers that only care about
// "the input was bad" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BoxNotInDiagram : public Error { public: using Error::Error; };
class NotContained : public Error { public: using Error::Error; };
class GenericShapeViolation : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class EvaluationAtPole : public Error { public: using Error::Error; };
class SizeMismatch : public Error { public: using Error::Error; };
class NotAHorizontalStrip : public Error { public: using Error::Error; };
class NotAnInnerCorner : public Error { public: using Error::Error; };
class NotASimplePole : public Error { public: using Error::Error; };
class PoleOrZeroAtPoint : public Error { public: using Error::Error; };
class SearchBoundExceeded : public Error { public: using Error::Error; };

// Raised when an internal consistency check fails (e.g. a Schur coefficient
// that is not a non-negative integer). Indicates a bug, not bad input.
class InternalError : public Error { public: using Error::Error; };

}  // namespace jack
