// Command-line front end. Exit codes: 0 success, 1 analysis failure,
// 2 input error, 3 budget exceeded.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "randcx/admissibility.hpp"
#include "randcx/cxt_io.hpp"
#include "randcx/errors.hpp"
#include "randcx/experiments.hpp"
#include "randcx/homology.hpp"
#include "randcx/library.hpp"
#include "randcx/sampler.hpp"
#include "randcx/structure.hpp"

using namespace randcx;
using nlohmann::ordered_json;

namespace {

// A path, "-" for standard input, or "builtin:<name>".
Complex load(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return builtin(source.substr(8)).complex;
  if (source == "-") return parse_cxt(std::cin);
  return read_cxt_file(source);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<Rational> rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_rational(s));
  return out;
}

std::vector<std::int64_t> integers(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& s : split(text, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::string shape_string(const WedgeShape& w) {
  return "(" + std::to_string(w.circles) + "," + std::to_string(w.spheres) + "," + std::to_string(w.proj_planes) +
         ")";
}

// Sends text to --out when given, otherwise to stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + out_path);
  f << text;
}

struct SweepOptions {
  std::string grid = "0,0";
  std::string alpha0 = "0";
  std::string ns = "50";
  std::int64_t samples = 100;
  std::uint64_t seed = 1;
  std::string stats;
  unsigned threads = 1;
  std::uint64_t budget = 1'000'000;
  std::string out;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--grid", grid, "a1lo:a1hi:step,a2lo:a2hi:step (single values allowed)");
    cmd->add_option("--alpha0", alpha0, "fixed vertex exponent");
    cmd->add_option("--n", ns, "comma-separated list of n");
    cmd->add_option("--samples", samples, "samples per cell");
    cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    cmd->add_option("--budget", budget, "search nodes per containment check (0 = unlimited)");
    cmd->add_option("--out", out, "CSV output file (default stdout)");
  }

  SweepSpec spec() const {
    SweepSpec s;
    const auto axes = split(grid, ',');
    if (axes.size() != 2) throw InputError("--grid needs two axes separated by ','");
    s.alpha1 = GridAxis::parse(axes[0]);
    s.alpha2 = GridAxis::parse(axes[1]);
    s.alpha0 = parse_rational(alpha0);
    s.ns = integers(ns);
    s.samples = samples;
    s.seed = seed;
    s.threads = threads;
    s.node_budget = budget;
    if (!stats.empty()) {
      s.stats.clear();
      for (const auto& name : split(stats, ',')) s.stats.push_back(parse_stat(name));
    }
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randcx: multi-parameter random simplicial complexes"};
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw complexes from the lower model");
  std::int64_t s_n = 10, s_batch = 1;
  int s_r = 2;
  std::string s_p, s_alpha, s_out;
  std::uint64_t s_seed = 1;
  sample_cmd->add_option("--n", s_n, "number of vertices of the ambient simplex")->required();
  sample_cmd->add_option("--r", s_r, "top dimension");
  sample_cmd->add_option("--p", s_p, "p0,p1,... as rationals");
  sample_cmd->add_option("--alpha", s_alpha, "a0,a1,...: p_i = n^-a_i");
  sample_cmd->add_option("--seed", s_seed, "master seed");
  sample_cmd->add_option("--batch", s_batch, "number of samples");
  sample_cmd->add_option("--out", s_out, "directory for sample_<i>.cxt; CSV summary on stdout otherwise");

  // admissible
  auto* adm_cmd = app.add_subcommand("admissible", "epsilon-admissibility verdict");
  std::string a_file, a_eps;
  bool a_json = false;
  adm_cmd->add_option("file", a_file, "complex (.cxt, '-' or builtin:<name>)")->required();
  adm_cmd->add_option("--eps", a_eps, "query epsilon");
  adm_cmd->add_flag("--json", a_json, "JSON output");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "wedge decomposition of an admissible 2-complex");
  std::string d_file;
  bool d_json = false;
  dec_cmd->add_option("file", d_file)->required();
  dec_cmd->add_flag("--json", d_json, "JSON output");

  // aspherical
  auto* asph_cmd = app.add_subcommand("aspherical", "small-subcomplex asphericity criterion");
  std::string h_file;
  int h_cap = 30;
  std::uint64_t h_budget = kDefaultAsphericityBudget;
  bool h_json = false;
  asph_cmd->add_option("file", h_file)->required();
  asph_cmd->add_option("--cap", h_cap, "maximum number of 2-simplices");
  asph_cmd->add_option("--budget", h_budget, "search node budget");
  asph_cmd->add_flag("--json", h_json, "JSON output");

  // aspherize
  auto* azz_cmd = app.add_subcommand("aspherize", "remove 2-simplices of small admissible minimal cycles");
  std::string z_file, z_out;
  int z_cap = 50;
  bool z_json = false;
  azz_cmd->add_option("file", z_file)->required();
  azz_cmd->add_option("--cap", z_cap, "maximum cycle size");
  azz_cmd->add_option("--out", z_out, "write the result as .cxt");
  azz_cmd->add_flag("--json", z_json, "JSON output");

  // builtin
  auto* bi_cmd = app.add_subcommand("builtin", "catalogue of named complexes");
  std::string b_name, b_out;
  bool b_list = false;
  bi_cmd->add_option("name", b_name);
  bi_cmd->add_flag("--list", b_list, "list names");
  bi_cmd->add_option("--out", b_out, "write .cxt here (default stdout)");

  // homology
  auto* hom_cmd = app.add_subcommand("homology", "Betti numbers and H1 torsion as CSV");
  std::string o_file;
  hom_cmd->add_option("file", o_file)->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "phase-diagram Monte Carlo sweep");
  SweepOptions sweep_opts;
  sweep_opts.add_to(sweep_cmd);
  sweep_cmd->add_option("--stats", sweep_opts.stats, "comma-separated statistics (default: all but contains_rp2_6)");

  // contain
  auto* con_cmd = app.add_subcommand("contain", "containment frequency sweep for a fixed pattern");
  SweepOptions con_opts;
  std::string c_file;
  con_cmd->add_option("pattern", c_file, "pattern complex (.cxt or builtin:<name>)")->required();
  con_opts.add_to(con_cmd);

  // report
  auto* rep_cmd = app.add_subcommand("report", "every analyzer on one complex");
  std::string r_file;
  bool r_json = false;
  rep_cmd->add_option("file", r_file)->required();
  rep_cmd->add_flag("--json", r_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sample_cmd) {
      SampleSpec spec;
      spec.n = s_n;
      spec.r = s_r;
      spec.seed = s_seed;
      spec.batch = s_batch;
      if (s_p.empty() == s_alpha.empty()) throw InputError("give exactly one of --p and --alpha");
      spec.params = s_p.empty() ? MultiParameter::from_alphas(s_n, rationals(s_alpha)) : MultiParameter{rationals(s_p)};
      if (!sample_cmd->count("--r")) spec.r = spec.params.r();
      spec.validate();
      if (!s_out.empty()) std::filesystem::create_directories(s_out);
      if (s_out.empty()) std::cout << "index,seed,f0,f1,f2," << homology_csv_header() << '\n';
      for (std::int64_t i = 0; i < spec.batch; ++i) {
        const auto seed = sub_seed(spec.seed, static_cast<std::uint64_t>(i));
        const auto c = sample_with_seed(spec, seed);
        if (!s_out.empty()) {
          const auto path = std::filesystem::path(s_out) / ("sample_" + std::to_string(i) + ".cxt");
          write_cxt_file(path.string(), c, "seed " + std::to_string(seed));
        } else {
          const auto f = c.f_vector();
          const auto h = homology(spec.r > 2 ? c.skeleton(2) : c);
          std::cout << i << ',' << seed << ',' << f[0] << ',' << f[1] << ',' << f[2] << ',' << homology_csv_row(h)
                    << '\n';
        }
      }
    } else if (*adm_cmd) {
      const auto c = load(a_file);
      std::optional<Rational> eps;
      if (!a_eps.empty()) eps = parse_rational(a_eps);
      const auto v = admissibility(c, eps);
      ordered_json j;
      j["admissible"] = v.admissible;
      j["eps_star"] = v.infinite ? std::string("inf") : to_string(v.eps_star);
      j["lp_max"] = v.infinite ? std::string("inf") : to_string(v.lp_max);
      if (v.query_eps) {
        j["query_eps"] = to_string(*v.query_eps);
        j["query_feasible"] = v.query_feasible;
      }
      if (v.witness_alpha) j["witness_alpha"] = {to_string(v.witness_alpha->first), to_string(v.witness_alpha->second)};
      if (v.blocking_subcomplex) j["blocking_subcomplex"] = *v.blocking_subcomplex;
      j["binding"] = {v.binding.f0, v.binding.f1, v.binding.f2};
      if (a_json) {
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& [k, val] : j.items())
          std::cout << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
      }
    } else if (*dec_cmd) {
      const auto c = load(d_file);
      const auto r = wedge_decomposition_detail(c);
      if (d_json) {
        ordered_json j = {{"circles", r.shape.circles},
                          {"spheres", r.shape.spheres},
                          {"proj_planes", r.shape.proj_planes},
                          {"quotient_planes", r.quotient_planes},
                          {"removed", r.removed}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "wedge (circles,spheres,proj_planes): " << shape_string(r.shape) << '\n';
      }
    } else if (*asph_cmd) {
      const auto c = load(h_file);
      const auto r = is_aspherical_small(c, h_cap, h_budget);
      if (h_json) {
        ordered_json j = {{"aspherical", r.aspherical}, {"nodes", r.nodes}};
        if (r.witness) j["witness"] = r.witness->simplices(2);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "aspherical: " << (r.aspherical ? "true" : "false") << '\n';
        if (r.witness) std::cout << "witness:\n" << to_cxt_string(*r.witness);
      }
    } else if (*azz_cmd) {
      const auto c = load(z_file);
      const auto r = aspherize(c, z_cap);
      if (!z_out.empty()) write_cxt_file(z_out, r.result, "aspherized, cap " + std::to_string(z_cap));
      if (z_json) {
        ordered_json j = {{"removed", r.removed}, {"f_vector", r.result.f_vector().counts}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "removed " << r.removed.size() << " 2-simplices\n";
        if (z_out.empty()) std::cout << to_cxt_string(r.result);
      }
    } else if (*bi_cmd) {
      if (b_list) {
        for (const auto& n : builtin_names()) std::cout << n << '\n';
      } else {
        if (b_name.empty()) throw InputError("builtin: give a name or --list");
        const auto nc = builtin(b_name);
        emit(b_out, to_cxt_string(nc.complex, nc.name));
      }
    } else if (*hom_cmd) {
      const auto c = load(o_file);
      std::cout << homology_csv_header() << '\n' << homology_csv_row(homology(c)) << '\n';
    } else if (*sweep_cmd) {
      emit(sweep_opts.out, phase_diagram_csv(sweep_opts.spec()));
    } else if (*con_cmd) {
      const auto s = load(c_file);
      emit(con_opts.out, containment_csv(s, con_opts.spec(), c_file));
    } else if (*rep_cmd) {
      const auto c = load(r_file);
      std::cout << (r_json ? report_json(c).dump(2) + "\n" : report_text(c));
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const AnalysisError& e) {
    std::cerr << "analysis failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
