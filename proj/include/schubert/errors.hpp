#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Common base so callers can catch every library error with one handler.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A (type, rank) pair outside the supported families, or a diagram slice
// that is not of finite type.
class UnsupportedType : public Error {
public:
    using Error::Error;
};

// A coordinate vector whose size does not match the rank.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

// A coefficient vector that is not a root of the system.
class NotARoot : public Error {
public:
    using Error::Error;
};

// Mixing elements or roots that belong to different systems.
class SystemMismatch : public Error {
public:
    using Error::Error;
};

// A word that is not a reduced expression for a minimal coset
// representative (some letter fails to be an ascent when applied).
class NotReduced : public Error {
public:
    using Error::Error;
};

// An enumeration grew past the configured member cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

// The slow cross-check oracle was asked for an element beyond its cap.
class OracleCapExceeded : public Error {
public:
    using Error::Error;
};

// A node was fired upward where its label is not strictly positive.
class NotAnAscent : public Error {
public:
    using Error::Error;
};

// An operation that only makes sense for one family was called on another.
class WrongType : public Error {
public:
    using Error::Error;
};

// A Levi-restriction query on an element that is not minimal in the orbit
// of the chosen subgroup.
class NotIMinimal : public Error {
public:
    using Error::Error;
};

// Coordinates that satisfy the size check but lie outside the translation
// lattice of the group.
class NotInLattice : public Error {
public:
    using Error::Error;
};

// Signed 64-bit arithmetic left its safe range.
class Overflow : public Error {
public:
    using Error::Error;
};

}  // namespace schubert
