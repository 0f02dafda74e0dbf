#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "szego/trigpoly.hpp"

namespace szego::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Grammar: sums of real*cos(k*x), real*sin(k*x) and real constants, with
// integer k >= 1.  "cos(x)" is accepted for k = 1.  Coefficients map as
//   c*cos(kx) -> {+k: c/2, -k: c/2}
//   c*sin(kx) -> {+k: c/(2i), -k: -c/(2i)}.
fourier::TrigPoly parse_symbol_expr(const std::string& text);

// Canonical text for a real-valued table: constant, then cos/sin terms by
// increasing k, each frequency written as "k*x".  Reparsing reproduces the
// coefficients exactly.
std::string symbol_to_text(const fourier::TrigPoly& p);

}  // namespace szego::cli
