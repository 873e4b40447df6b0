#pragma once

#include <string_view>

namespace lapwalk {

/// Evaluates a time such as "0.5", "pi/2", "3pi", "pi/sqrt(8)" or
/// "(2*3-1)*pi". Supports + - * / parentheses, implicit multiplication
/// before "pi"/"sqrt", the constant pi and sqrt(). Evaluated in long double
/// and rounded once. Throws std::invalid_argument on malformed input.
double parse_time(std::string_view text);

}  // namespace lapwalk
