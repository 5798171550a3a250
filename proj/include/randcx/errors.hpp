#pragma once

#include <stdexcept>
#include <string>

namespace randcx {

// Malformed input: bad file, bad parameters, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured combinatorial or time budget ran out before an answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An analysis could not certify its result (e.g. a structure-theory guarantee
// that only holds for admissible inputs failed on this input).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace randcx
