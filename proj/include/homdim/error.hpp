#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homdim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class MalformedRelation : public Error {
public:
    using Error::Error;
};

class EmptyVertexSet : public Error {
public:
    EmptyVertexSet() : Error("vertex set must be nonempty") {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(std::size_t v) : Error("unknown vertex index " + std::to_string(v)) {}
};

class AlgebraMismatch : public Error {
public:
    AlgebraMismatch() : Error("modules live over different algebras") {}
};

/// No splitting idempotent was found within the search budget.
class SplitFailure : public Error {
public:
    using Error::Error;
};

class ResolutionTooShort : public Error {
public:
    using Error::Error;
};

/// An operation's precondition on the algebra does not hold.
class NotApplicable : public Error {
public:
    using Error::Error;
};

class NuDomdimZero : public Error {
public:
    NuDomdimZero() : Error("nu-dominant dimension is zero; no associated self-injective algebra") {}
};

class NotGendoSymmetric : public Error {
public:
    NotGendoSymmetric() : Error("algebra is not (certified) gendo-symmetric") {}
};

class NotSplit : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// q = 0 has no quantum characteristic.
class ZeroQ : public Error {
public:
    ZeroQ() : Error("q must be nonzero") {}
};

/// A structural invariant failed verification; indicates corrupt input data.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace homdim
