#pragma once

#include <stdexcept>
#include <string>

namespace multizeta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument on (or within the exclusion radius of) a pole at s = 1/k.
class PoleError : public DomainError {
public:
    PoleError(int k, const std::string& what) : DomainError(what), k_(k) {}
    int k() const noexcept { return k_; }

private:
    int k_;
};

/// A configured size cap was exceeded (Bernoulli index, table size).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An iterative refinement failed to meet its target.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace multizeta
