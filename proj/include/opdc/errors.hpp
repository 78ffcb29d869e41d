#ifndef OPDC_ERRORS_HPP
#define OPDC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opdc {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division by zero (rational layer).
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Malformed "p/q" text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A floating-point operation produced NaN or infinity.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// Sequence index requested outside the stored prefix.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// |a_k| = 1: the 2x2 reflection block degenerates (r_k = 0).
class DegenerateReflection : public Error {
public:
    using Error::Error;
};

/// Some kernel coefficient A_k vanished, i.e. P_{k+1}(theta) = 0.
class ZeroAtTheta : public Error {
public:
    using Error::Error;
};

/// Supplied square root s does not satisfy s^2 = lambda exactly.
class NotAPerfectSquare : public Error {
public:
    using Error::Error;
};

class ZeroSqrt : public Error {
public:
    using Error::Error;
};

/// AC-form theta disagrees with chi^2 + alpha - c^2.
class InconsistentTheta : public Error {
public:
    using Error::Error;
};

/// A closed-form denominator factor vanished for the given parameters.
class PoleInParameters : public Error {
public:
    using Error::Error;
};

/// 1 + a_{k-1} = 0 while iterating a_k = 1 - v_k / (lambda0 (1 + a_{k-1})).
class DegenerateRecursion : public Error {
public:
    using Error::Error;
};

/// An identity the construction guarantees failed to hold exactly.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class SingularPivot : public Error {
public:
    using Error::Error;
};

/// UL + theta*I cannot be symmetrized: an off-diagonal product went negative.
class NonSymmetrizable : public Error {
public:
    using Error::Error;
};

class NoSolution : public Error {
public:
    using Error::Error;
};

} // namespace opdc

#endif
