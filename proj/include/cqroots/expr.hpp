#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cqroots/cquat.hpp"
#include "cqroots/multivector.hpp"

namespace cqroots {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  size_t position;
};

/// Parse an expression over {numbers, I, i, j, k, + - * /, parentheses,
/// juxtaposition} in the given family. Blade tokens are rejected.
ComplexQuaternion parse_cq(std::string_view text, Family f);

/// Parse an expression over {numbers, e1..e123, + - * /, parentheses,
/// juxtaposition} in the given signature. Quaternion units are rejected.
Multivector3 parse_mv(std::string_view text, Signature sig);

/// `digits` significant digits, widened per-number to 17 only when needed
/// so that parsing the output recovers the exact double.
std::string format_real(double x, int digits = 15);

std::string format_cq(const ComplexQuaternion& q, int digits = 15);
std::string format_mv(const Multivector3& a, int digits = 15);

}  // namespace cqroots
