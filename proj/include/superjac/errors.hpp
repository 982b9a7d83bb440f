#pragma once

#include <stdexcept>
#include <string>

namespace superjac {

// Bad user input (non-prime p, p | m, malformed polynomial file, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The requested operation is only meaningful for 0 < s < r (or a stated
// sub-range) and the family is outside it.
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// A machine-checked claim came out false.
class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

// A randomized decision procedure ran out of budget without reaching a
// verdict. Never used to report a (possibly wrong) answer.
class InconclusiveError : public std::runtime_error {
public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree internally did not; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace superjac
