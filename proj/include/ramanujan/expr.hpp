#pragma once

#include <string_view>

namespace ramanujan {

/// Evaluates an arithmetic expression over the reals: numbers, pi, sqrt(.),
/// + - * / ^, unary minus and parentheses. Throws DomainError on bad input.
double evaluate_expression(std::string_view text);

}  // namespace ramanujan
