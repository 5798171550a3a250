#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "randcx/complex.hpp"
#include "randcx/measure.hpp"
#include "randcx/numeric.hpp"

namespace randcx {

// Statistics a phase-diagram cell can record; declaration order is CSV order.
enum class Stat {
  ContainsC4,
  ContainsRp2_6,
  IsForest,
  Connected,
  H1Rank,
  Has2Torsion,
  OddTorsion,
};
inline constexpr std::size_t kStatCount = 7;

std::string to_string(Stat s);
// Accepts the CSV column names; throws InputError otherwise.
Stat parse_stat(std::string_view name);
std::vector<Stat> all_stats();
// Everything but contains_rp2_6, whose search is the expensive one.
std::vector<Stat> default_stats();

// lo, lo + step, ... up to and including hi. step = 0 or lo = hi is a single
// point.
struct GridAxis {
  Rational lo, hi, step;
  std::vector<Rational> values() const;

  // "lo:hi:step" or a single rational.
  static GridAxis parse(std::string_view text);
  static GridAxis point(const Rational& v) { return {v, v, Rational(0)}; }
};

struct SweepSpec {
  GridAxis alpha1 = GridAxis::point(Rational(0));
  GridAxis alpha2 = GridAxis::point(Rational(0));
  Rational alpha0 = 0;
  std::vector<std::int64_t> ns{50};
  std::int64_t samples = 100;
  std::uint64_t seed = 1;
  std::vector<Stat> stats = default_stats();
  unsigned threads = 1;
  // Per-sample search budget of every containment check; 0 = unlimited.
  std::uint64_t node_budget = 1'000'000;

  void validate() const;
};

struct Cell {
  std::array<Rational, 3> alpha;
  std::int64_t n = 0;
  std::uint64_t seed = 0;  // sample i uses sub_seed(seed, i)
};

// Grid order: alpha1 outermost, then alpha2, then n. The seed of the k-th
// cell is sub_seed(spec.seed, k).
std::vector<Cell> cells(const SweepSpec& spec);

// Lower-model parameters of a cell, r = 2, p_i = n^-alpha_i.
MultiParameter cell_parameters(const Cell& c);

struct CellRecord {
  Cell cell;
  std::int64_t samples = 0;
  // Frequency (mean for H1Rank) over the samples where the statistic was
  // decided; empty when not selected or when every sample timed out.
  std::array<std::optional<double>, kStatCount> value;
  // Samples with at least one containment search over budget.
  std::int64_t timeouts = 0;
  RegionLabel theory;

  std::optional<double> get(Stat s) const { return value[static_cast<std::size_t>(s)]; }
};

std::vector<CellRecord> phase_diagram(const SweepSpec& spec);

// "# randcx-sweep v1 ..." comment, header row, one row per cell in grid order.
void write_phase_csv(std::ostream& out, const SweepSpec& spec, const std::vector<CellRecord>& rows);
std::string phase_diagram_csv(const SweepSpec& spec);

struct ContainmentRecord {
  Cell cell;
  std::int64_t samples = 0;
  std::int64_t hits = 0;
  std::int64_t timeouts = 0;
  // min over T of 1 - sum alpha_i f_i(T)/f0(T); positive drives the score
  // to infinity.
  Rational exponent;
  // natural log of the score at this n
  double log_score = 0;
  bool score_zero = false;

  std::optional<double> frequency() const;
};

// spec.stats is ignored. f0(s) <= 20.
std::vector<ContainmentRecord> containment_sweep(const Complex& s, const SweepSpec& spec);
void write_containment_csv(std::ostream& out, const SweepSpec& spec, std::string_view label,
                           const std::vector<ContainmentRecord>& rows);
std::string containment_csv(const Complex& s, const SweepSpec& spec, std::string_view label);

// Aggregate of every analyzer. A failing analyzer leaves its field absent and
// records the message under "errors".
nlohmann::ordered_json report_json(const Complex& c);
std::string report_text(const Complex& c);

}  // namespace randcx
