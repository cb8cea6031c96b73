#ifndef ARRCOH_ERRORS_HPP
#define ARRCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arrcoh {

/// Malformed or invalid input (bad JSON, dimension mismatch, unknown pivot, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A size cap was exceeded (2^n generator blow-up must fail loudly).
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was invoked outside its mathematical hypotheses
/// (k on a non-separator pivot, theta without a geometric lattice, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A verified invariant failed. This signals a defect, not a user mistake.
class CheckError : public std::logic_error {
public:
    explicit CheckError(const std::string& what) : std::logic_error(what) {}
};

} // namespace arrcoh

#endif
