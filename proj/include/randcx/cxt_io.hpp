#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "randcx/complex.hpp"

namespace randcx {

// "cxt" text format: '#' lines are comments, every other non-blank line is a
// strictly increasing list of vertex labels naming a maximal simplex. The
// complex is the downward closure of the listed simplices.
Complex parse_cxt(std::istream& in, int dim_cap = 2);
Complex parse_cxt_string(std::string_view text, int dim_cap = 2);
Complex read_cxt_file(const std::string& path, int dim_cap = 2);

// Writes the maximal simplices in canonical order, one per line.
void write_cxt(std::ostream& out, const Complex& c, std::string_view comment = {});
std::string to_cxt_string(const Complex& c, std::string_view comment = {});
void write_cxt_file(const std::string& path, const Complex& c, std::string_view comment = {});

}  // namespace randcx
