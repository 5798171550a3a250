#include "randcx/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "randcx/admissibility.hpp"
#include "randcx/errors.hpp"
#include "randcx/homology.hpp"
#include "randcx/library.hpp"
#include "randcx/sampler.hpp"
#include "randcx/structure.hpp"

namespace randcx {

namespace {

constexpr std::array<std::string_view, kStatCount> kStatNames = {
    "contains_c4", "contains_rp2_6", "is_forest", "connected", "h1_rank", "has_2_torsion", "odd_torsion",
};

std::size_t idx(Stat s) { return static_cast<std::size_t>(s); }

bool selected(const std::vector<Stat>& stats, Stat s) {
  return std::find(stats.begin(), stats.end(), s) != stats.end();
}

// Canonical order, duplicates removed.
std::vector<Stat> canonical(const std::vector<Stat>& stats) {
  std::vector<Stat> out;
  for (Stat s : all_stats())
    if (selected(stats, s)) out.push_back(s);
  return out;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Number of connected components of the 1-skeleton.
std::int64_t components(const Complex& c) {
  const auto& vs = c.simplices(0);
  std::vector<std::int32_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](Vertex v) {
    return static_cast<std::int32_t>(std::lower_bound(vs.begin(), vs.end(), Simplex{v}) - vs.begin());
  };
  std::int64_t k = static_cast<std::int64_t>(vs.size());
  if (c.dim_cap() >= 1)
    for (const auto& e : c.simplices(1)) {
      const auto a = find(pos(e[0])), b = find(pos(e[1]));
      if (a != b) {
        parent[a] = b;
        --k;
      }
    }
  return k;
}

bool power_of_two(const BigInt& d) { return d > 0 && (d & (d - 1)) == 0; }

std::string sweep_comment(std::string_view kind, const SweepSpec& spec) {
  std::string ns;
  for (std::size_t i = 0; i < spec.ns.size(); ++i) ns += (i ? ";" : "") + std::to_string(spec.ns[i]);
  auto axis = [](const GridAxis& a) { return to_string(a.lo) + ":" + to_string(a.hi) + ":" + to_string(a.step); };
  return "# randcx-sweep v1 kind=" + std::string(kind) + " seed=" + std::to_string(spec.seed) +
         " samples=" + std::to_string(spec.samples) + " alpha0=" + to_string(spec.alpha0) +
         " alpha1=" + axis(spec.alpha1) + " alpha2=" + axis(spec.alpha2) + " n=" + ns;
}

std::string cell_prefix(const Cell& c, std::int64_t samples) {
  return to_string(c.alpha[0]) + "," + to_string(c.alpha[1]) + "," + to_string(c.alpha[2]) + "," +
         std::to_string(c.n) + "," + std::to_string(samples);
}

struct SampleOutcome {
  std::array<double, kStatCount> value{};
  std::array<bool, kStatCount> decided{};
  bool timeout = false;
};

}  // namespace

std::string to_string(Stat s) { return std::string(kStatNames[idx(s)]); }

Stat parse_stat(std::string_view name) {
  for (std::size_t i = 0; i < kStatCount; ++i)
    if (kStatNames[i] == name) return static_cast<Stat>(i);
  throw InputError("unknown statistic '" + std::string(name) + "'");
}

std::vector<Stat> all_stats() {
  std::vector<Stat> out;
  for (std::size_t i = 0; i < kStatCount; ++i) out.push_back(static_cast<Stat>(i));
  return out;
}

std::vector<Stat> default_stats() {
  auto out = all_stats();
  std::erase(out, Stat::ContainsRp2_6);
  return out;
}

std::vector<Rational> GridAxis::values() const {
  if (step < 0) throw InputError("grid step must be non-negative");
  if (hi < lo) throw InputError("grid upper end below lower end");
  if (step == 0 || lo == hi) return {lo};
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step) {
    out.push_back(v);
    if (out.size() > 100'000) throw InputError("grid axis too long");
  }
  return out;
}

GridAxis GridAxis::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() == 1) return point(parse_rational(parts[0]));
  if (parts.size() != 3) throw InputError("grid axis must be 'lo:hi:step' or a single value");
  GridAxis a{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  a.values();
  return a;
}

void SweepSpec::validate() const {
  if (samples < 1) throw InputError("samples must be at least 1");
  if (ns.empty()) throw InputError("at least one n is required");
  for (auto n : ns)
    if (n < 1) throw InputError("n must be at least 1");
  if (alpha0 < 0) throw InputError("exponents must be non-negative");
  for (const auto* axis : {&alpha1, &alpha2})
    for (const auto& v : axis->values())
      if (v < 0) throw InputError("exponents must be non-negative");
}

std::vector<Cell> cells(const SweepSpec& spec) {
  spec.validate();
  std::vector<Cell> out;
  for (const auto& a1 : spec.alpha1.values())
    for (const auto& a2 : spec.alpha2.values())
      for (auto n : spec.ns) {
        Cell c{{spec.alpha0, a1, a2}, n, 0};
        c.seed = sub_seed(spec.seed, out.size());
        out.push_back(c);
      }
  return out;
}

MultiParameter cell_parameters(const Cell& c) {
  return MultiParameter::from_alphas(c.n, {c.alpha[0], c.alpha[1], c.alpha[2]});
}

std::optional<double> ContainmentRecord::frequency() const {
  const auto decided = samples - timeouts;
  if (decided <= 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(decided);
}

std::vector<CellRecord> phase_diagram(const SweepSpec& spec) {
  const auto stats = canonical(spec.stats);
  const bool want_h1 =
      selected(stats, Stat::H1Rank) || selected(stats, Stat::Has2Torsion) || selected(stats, Stat::OddTorsion);
  const Complex c4 = builtin("cycle_4").complex;
  const Complex rp2 = builtin("rp2_6").complex;

  std::vector<CellRecord> rows;
  for (const auto& cell : cells(spec)) {
    SampleSpec ss{cell.n, 2, cell_parameters(cell), cell.seed, spec.samples};
    const std::function<SampleOutcome(std::int64_t, const Complex&)> fn = [&](std::int64_t, const Complex& y) {
      SampleOutcome o;
      auto contain = [&](Stat s, const Complex& pattern) {
        if (!selected(stats, s)) return;
        try {
          o.value[idx(s)] = contains_copy(pattern, y, spec.node_budget) ? 1 : 0;
          o.decided[idx(s)] = true;
        } catch (const BudgetExceeded&) {
          o.timeout = true;
        }
      };
      contain(Stat::ContainsC4, c4);
      contain(Stat::ContainsRp2_6, rp2);
      const auto k = components(y);
      o.value[idx(Stat::IsForest)] =
          static_cast<std::int64_t>(y.count(1)) == static_cast<std::int64_t>(y.count(0)) - k ? 1 : 0;
      o.value[idx(Stat::Connected)] = k == 1 ? 1 : 0;
      o.decided[idx(Stat::IsForest)] = o.decided[idx(Stat::Connected)] = true;
      if (want_h1) {
        const auto h = homology(y);
        bool even = false, odd = false;
        for (const auto& d : h.h1_torsion) {
          even = even || d % 2 == 0;
          odd = odd || !power_of_two(d);
        }
        o.value[idx(Stat::H1Rank)] = static_cast<double>(h.betti_q[1]);
        o.value[idx(Stat::Has2Torsion)] = even ? 1 : 0;
        o.value[idx(Stat::OddTorsion)] = odd ? 1 : 0;
        o.decided[idx(Stat::H1Rank)] = o.decided[idx(Stat::Has2Torsion)] = o.decided[idx(Stat::OddTorsion)] = true;
      }
      return o;
    };
    const auto outcomes = sample_batch<SampleOutcome>(ss, fn, spec.threads);

    CellRecord rec;
    rec.cell = cell;
    rec.samples = spec.samples;
    for (Stat s : stats) {
      double sum = 0;
      std::int64_t decided = 0;
      for (const auto& o : outcomes)
        if (o.decided[idx(s)]) {
          sum += o.value[idx(s)];
          ++decided;
        }
      if (decided > 0) rec.value[idx(s)] = sum / static_cast<double>(decided);
    }
    for (const auto& o : outcomes) rec.timeouts += o.timeout ? 1 : 0;
    rec.theory = classify_region(cell.alpha, cell.alpha[2] == 0);
    rows.push_back(std::move(rec));
  }
  return rows;
}

void write_phase_csv(std::ostream& out, const SweepSpec& spec, const std::vector<CellRecord>& rows) {
  const auto stats = canonical(spec.stats);
  out << sweep_comment("phase", spec) << '\n';
  out << "alpha0,alpha1,alpha2,n,samples";
  for (Stat s : stats) out << ',' << to_string(s);
  out << ",timeouts,theory,theory_checks\n";
  for (const auto& r : rows) {
    out << cell_prefix(r.cell, r.samples);
    for (Stat s : stats) {
      out << ',';
      if (const auto v = r.get(s)) out << fixed6(*v);
    }
    out << ',' << r.timeouts << ',' << to_string(r.theory.region) << ',' << join(r.theory.checks, ';') << '\n';
  }
}

std::string phase_diagram_csv(const SweepSpec& spec) {
  std::ostringstream out;
  write_phase_csv(out, spec, phase_diagram(spec));
  return out.str();
}

std::vector<ContainmentRecord> containment_sweep(const Complex& s, const SweepSpec& spec) {
  if (s.empty()) throw InputError("containment pattern is empty");
  std::vector<ContainmentRecord> rows;
  for (const auto& cell : cells(spec)) {
    const auto params = cell_parameters(cell);
    SampleSpec ss{cell.n, 2, params, cell.seed, spec.samples};
    // 1 = contained, 0 = not, -1 = over budget
    const std::function<int(std::int64_t, const Complex&)> fn = [&](std::int64_t, const Complex& y) {
      try {
        return contains_copy(s, y, spec.node_budget) ? 1 : 0;
      } catch (const BudgetExceeded&) {
        return -1;
      }
    };
    const auto outcomes = sample_batch<int>(ss, fn, spec.threads);
    ContainmentRecord rec;
    rec.cell = cell;
    rec.samples = spec.samples;
    for (int o : outcomes) {
      rec.hits += o == 1 ? 1 : 0;
      rec.timeouts += o < 0 ? 1 : 0;
    }
    rec.exponent = min_score_exponent(s, {cell.alpha[0], cell.alpha[1], cell.alpha[2]}).exponent;
    const auto score = min_subcomplex_score(s, cell.n, params);
    rec.log_score = score.log_score;
    rec.score_zero = score.zero;
    rows.push_back(std::move(rec));
  }
  return rows;
}

void write_containment_csv(std::ostream& out, const SweepSpec& spec, std::string_view label,
                           const std::vector<ContainmentRecord>& rows) {
  out << sweep_comment("contain", spec) << " pattern=" << label << '\n';
  out << "alpha0,alpha1,alpha2,n,samples,contains,timeouts,score_exponent,score_sign,log_score\n";
  for (const auto& r : rows) {
    out << cell_prefix(r.cell, r.samples) << ',';
    if (const auto f = r.frequency()) out << fixed6(*f);
    const int sign = r.exponent > 0 ? 1 : (r.exponent < 0 ? -1 : 0);
    out << ',' << r.timeouts << ',' << to_string(r.exponent) << ',' << (sign > 0 ? "+" : sign < 0 ? "-" : "0")
        << ',' << (r.score_zero ? std::string("-inf") : fixed6(r.log_score)) << '\n';
  }
}

std::string containment_csv(const Complex& s, const SweepSpec& spec, std::string_view label) {
  std::ostringstream out;
  write_containment_csv(out, spec, label, containment_sweep(s, spec));
  return out.str();
}

nlohmann::ordered_json report_json(const Complex& c) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json errors = ordered_json::object();
  auto guard = [&](const char* field, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      errors[field] = e.what();
    }
  };
  auto rat = [](const std::optional<Rational>& q) { return q ? ordered_json(to_string(*q)) : ordered_json(nullptr); };

  j["f_vector"] = c.f_vector().counts;
  guard("invariants", [&] {
    const auto inv = invariants(c);
    j["invariants"] = {{"euler", inv.euler}, {"L", inv.L},          {"mu1", rat(inv.mu1)},
                       {"mu2", rat(inv.mu2)}, {"pure2", inv.pure2}, {"closed2", inv.closed2},
                       {"closed_surface", is_closed_surface(c)}, {"clean", is_clean(c)}};
  });
  guard("homology", [&] {
    const auto h = homology(c);
    std::vector<std::string> tors;
    for (const auto& d : h.h1_torsion) tors.push_back(to_string(d));
    j["homology"] = {{"betti_q", h.betti_q}, {"betti_f2", h.betti_f2}, {"h1_torsion", tors}};
  });
  bool admissible = false;
  guard("admissibility", [&] {
    const auto v = admissibility(c);
    admissible = v.admissible;
    ordered_json a;
    a["admissible"] = v.admissible;
    a["eps_star"] = v.infinite ? std::string("inf") : to_string(v.eps_star);
    a["lp_max"] = v.infinite ? std::string("inf") : to_string(v.lp_max);
    if (!v.infinite) a["optimum"] = {to_string(v.optimum.first), to_string(v.optimum.second)};
    a["binding"] = {v.binding.f0, v.binding.f1, v.binding.f2};
    if (v.blocking_subcomplex) a["blocking_subcomplex"] = *v.blocking_subcomplex;
    j["admissibility"] = a;
  });
  if (admissible)
    guard("wedge", [&] {
      const auto w = wedge_decomposition(c);
      j["wedge"] = {{"circles", w.circles}, {"spheres", w.spheres}, {"proj_planes", w.proj_planes}};
    });
  guard("collapse", [&] {
    const auto r = collapse_to_graph(c);
    j["collapse"] = {{"collapsible", r.is_graph},
                     {"collapses", r.collapses},
                     {"residual_f", r.residual.f_vector().counts}};
  });
  if (!errors.empty()) j["errors"] = errors;
  return j;
}

std::string report_text(const Complex& c) {
  std::ostringstream out;
  const auto j = report_json(c);
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [k2, v2] : value.items())
        out << "  " << k2 << ": " << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace randcx
