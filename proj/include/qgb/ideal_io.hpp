#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgb/error.hpp"
#include "qgb/polynomial.hpp"

namespace qgb {

// A parsed ideal file:
//   field 101          (or Q, or p^k)
//   vars x,y,z
//   # comment
//   x^2 - 2*x*y        (one generator per line; '*' is optional)
struct IdealFile {
    const Field* field = nullptr;
    std::vector<std::string> names;
    std::vector<Polynomial> gens;
};

IdealFile parse_ideal(std::istream& in);
IdealFile parse_ideal_string(const std::string& text);
IdealFile load_ideal(const std::string& path);

// Render in the same file format; coefficients must be printable in the
// grammar (rationals and prime fields round-trip, extension elements do not).
std::string format_ideal(const IdealFile& file);

// Parse a single polynomial expression over the given variables.
// `line_no` (when >= 0) is used in error messages.
Polynomial parse_polynomial(const std::string& text, const Field* field,
                            const std::vector<std::string>& names,
                            const TermOrder& order, int line_no = -1);

} // namespace qgb
