#pragma once

#include <stdexcept>
#include <string>

namespace szego {

// Enumeration guards: permutation counts, path counts, composition caps.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// A series or iteration failed to converge, or a spectral gate rejected
// the input (the smallness hypothesis does not hold numerically).
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ill-conditioned or rank-deficient least-squares design.
class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace szego
