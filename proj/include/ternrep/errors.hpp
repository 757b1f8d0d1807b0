#pragma once

#include <stdexcept>
#include <string>

namespace ternrep {

/// Base of every number-theoretic failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// sqrt_mod_prime was asked for the root of a quadratic non-residue.
class NonResidue : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class NonCoprimeModuli : public Error {
public:
    using Error::Error;
};

/// A configured search or factoring budget was exhausted.
class ResourceCap : public Error {
public:
    using Error::Error;
};

/// The binary form x^2 + c*y^2 does not represent the requested integer.
class NotRepresentable : public Error {
public:
    using Error::Error;
};

/// An identity that the construction guarantees failed to hold.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ternrep
