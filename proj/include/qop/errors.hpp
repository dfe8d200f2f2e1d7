#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qop {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class DegreeTooLow : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class InvalidRecurrence : public Error {
public:
    using Error::Error;
};

/// A compact formula hit one of its removable singularities.
class PoleEncountered : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class EvenPrime : public Error {
public:
    using Error::Error;
};

class MalformedCurve : public Error {
public:
    using Error::Error;
};

class DuplicateNodes : public Error {
public:
    using Error::Error;
};

/// Raised when a local-solvability search exhausted its depth budget.
class InconclusiveVerdict : public Error {
public:
    InconclusiveVerdict(int r, std::int64_t p, int depth_used)
        : Error("inconclusive local solvability for r=" + std::to_string(r) +
                ", p=" + std::to_string(p) + " at depth " + std::to_string(depth_used)),
          r_(r), p_(p), depth_used_(depth_used) {}

    int r() const noexcept { return r_; }
    std::int64_t p() const noexcept { return p_; }
    int depth_used() const noexcept { return depth_used_; }

private:
    int r_;
    std::int64_t p_;
    int depth_used_;
};

}  // namespace qop
