#pragma once

#include <optional>
#include <string>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/homology.hpp"

namespace randcx {

struct ExpectedRecord {
  FVector f;
  std::int64_t euler = 0;
  std::int64_t L = 0;
  bool closed_surface = false;
  bool clean = false;  // checked only when true
  HomologySummary homology;
  // eps_star: nullopt = not pinned; infinite for graphs
  bool eps_infinite = false;
  std::optional<Rational> eps_star;
  std::optional<bool> admissible;
};

struct NamedComplex {
  std::string name;
  Complex complex;
  ExpectedRecord expected;
};

// Names accepted by builtin(); "cycle_m" stands for cycle_3, cycle_4, ...
std::vector<std::string> builtin_names();

// Throws InputError on an unknown name. Every entry is checked against its
// expected record at construction; a mismatch is a logic_error.
NamedComplex builtin(const std::string& name);

// Mismatches between the complex and its record, empty when it verifies.
std::vector<std::string> verify(const NamedComplex& nc);

}  // namespace randcx
