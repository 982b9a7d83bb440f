#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "superjac/numeric.hpp"

namespace superjac {

// Exit codes: 0 success, 1 verification failure, 2 input validation,
// 3 regime error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line, ascending coefficients, whitespace-separated "a" or "a/b".
std::vector<Rational> parse_polynomial_line(const std::string& line);

} // namespace superjac
