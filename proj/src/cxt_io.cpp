#include "randcx/cxt_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "randcx/errors.hpp"

namespace randcx {

Complex parse_cxt(std::istream& in, int dim_cap) {
  std::vector<Simplex> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;
    std::istringstream tokens(line);
    std::string token;
    Simplex s;
    while (tokens >> token) {
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size() || v < 0)
        throw InputError("line " + std::to_string(line_no) + ": bad vertex label '" + token + "'");
      if (!s.empty() && v <= s.back())
        throw InputError("line " + std::to_string(line_no) + ": labels must be strictly increasing");
      s.push_back(v);
    }
    facets.push_back(std::move(s));
  }
  return Complex::from_maximal_simplices(facets, dim_cap);
}

Complex parse_cxt_string(std::string_view text, int dim_cap) {
  std::istringstream in{std::string(text)};
  return parse_cxt(in, dim_cap);
}

Complex read_cxt_file(const std::string& path, int dim_cap) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_cxt(in, dim_cap);
}

void write_cxt(std::ostream& out, const Complex& c, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const Simplex& s : c.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

std::string to_cxt_string(const Complex& c, std::string_view comment) {
  std::ostringstream out;
  write_cxt(out, c, comment);
  return out.str();
}

void write_cxt_file(const std::string& path, const Complex& c, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_cxt(out, c, comment);
}

}  // namespace randcx
