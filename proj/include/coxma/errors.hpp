#ifndef COXMA_ERRORS_HPP
#define COXMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxma {

// Bad user input: malformed files, unsupported types, violated preconditions
// that a caller can trigger from the outside. CLI maps these to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal contract: a postcondition or algebraic identity that the
// theory guarantees failed to hold. CLI maps these to exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace coxma

#endif
