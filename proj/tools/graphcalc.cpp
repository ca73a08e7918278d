#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphcalc/generators.hpp"
#include "graphcalc/heat.hpp"
#include "graphcalc/io.hpp"
#include "graphcalc/isoperimetry.hpp"
#include "graphcalc/operators.hpp"
#include "graphcalc/spectral_bounds.hpp"
#include "graphcalc/verify.hpp"

namespace gc = graphcalc;
using gc::InputError;
using gc::Json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

/// "inf", a decimal, or a ratio "p/q".
double parse_real(const std::string& text, const char* what) {
  if (text == "inf" || text == "infinity") return gc::kInfinity;
  try {
    std::size_t used = 0;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const double p = std::stod(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      const std::string rest = text.substr(slash + 1);
      const double q = std::stod(rest, &used);
      if (used != rest.size() || q == 0.0) throw std::invalid_argument(text);
      return p / q;
    }
    const double x = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return x;
  } catch (const std::exception&) {
    throw InputError(std::string("cannot read ") + what + " '" + text + "'");
  }
}

gc::Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const long long p = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    long long q = 1;
    if (slash != std::string::npos) {
      const std::string den = text.substr(slash + 1);
      q = std::stoll(den, &used);
      if (used != den.size() || q == 0) throw std::invalid_argument(text);
    }
    return gc::Rational(p, q);
  } catch (const std::exception&) {
    throw InputError("cannot read rational '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Input {
  std::string path;
  std::string sha256;
  gc::WeightedGraph graph;
};

Input load_graph(const std::string& path) {
  Input in;
  in.path = path;
  const std::string text = gc::read_file(path);
  in.sha256 = sha256_hex(text);
  in.graph = gc::graph_from_json(gc::parse_json(text));
  return in;
}

Json header(const std::string& command, const Input& in) {
  return {{"schema", "graphcalc/1"},
          {"command", command},
          {"input", {{"path", in.path}, {"sha256", in.sha256}}}};
}

void emit(const Json& j) { std::cout << gc::dump_json(j) << '\n'; }

Json id_list(const gc::WeightedGraph& g, const std::vector<int>& vs) {
  Json out = Json::array();
  for (int v : vs) out.push_back(g.id(v));
  return out;
}

std::vector<int> vertex_list(const gc::WeightedGraph& g, const std::string& text) {
  std::vector<int> out;
  for (const auto& id : split_list(text)) out.push_back(g.index(id));
  return out;
}

gc::EnumerationLimits limits_from(int max_subset, bool force) {
  return {max_subset, force};
}

Json bound_json(const gc::BoundEntry& b) {
  Json j = {{"name", b.name},
            {"value", gc::number_or_null(b.value)},
            {"applicable", b.applicable}};
  if (!b.applicable) j["reason"] = b.reason;
  return j;
}

Json check_json(const gc::InequalityCheck& c) {
  return {{"name", c.name},
          {"lhs", gc::number_or_null(c.lhs)},
          {"rhs", gc::number_or_null(c.rhs)},
          {"nu", gc::number_or_null(c.nu)},
          {"p", gc::number_or_null(c.p)},
          {"iso", gc::number_or_null(c.iso)},
          {"rho_sup", gc::number_or_null(c.rho_sup)},
          {"mode", std::string(gc::to_string(c.mode))},
          {"passed", c.passed}};
}

std::string rational_text(const gc::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

gc::Mode default_mode(const gc::WeightedGraph& g, const std::string& text) {
  if (text.empty()) return g.has_boundary() ? gc::Mode::dirichlet : gc::Mode::closed;
  return gc::parse_mode(text);
}

int run_info(const std::string& file) {
  const auto in = load_graph(file);
  const auto& g = in.graph;
  const auto hd = gc::half_degrees(g);
  Json j = header("info", in);
  int boundary = 0;
  for (int v = 0; v < g.vertex_count(); ++v) boundary += g.is_boundary(v);
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["boundary_vertices"] = boundary;
  j["total_measure"] = g.total_measure();
  j["total_edge_measure"] = g.total_edge_measure();
  j["rho_inf"] = hd.rho_inf;
  j["rho_sup"] = hd.rho_sup;
  const auto norm = gc::operator_norm_report(g);
  j["L_sup"] = norm.L_sup;
  j["operator_norm"] = norm.norm;
  j["norm_sandwich_holds"] = norm.sandwich_holds;
  emit(j);
  return 0;
}

int run_spectrum(const std::string& file, const std::string& mode_text,
                 int count, bool vectors, const std::string& out) {
  const auto in = load_graph(file);
  const auto& g = in.graph;
  const auto mode = default_mode(g, mode_text);
  const auto dec = gc::spectral_decomposition(
      g, mode, count > 0 ? std::optional<int>(count) : std::nullopt);
  if (out == "json") {
    Json j = header("spectrum", in);
    j["mode"] = std::string(gc::to_string(mode));
    Json values = Json::array();
    for (double x : dec.eigenvalues) values.push_back(x);
    j["eigenvalues"] = values;
    if (vectors) {
      Json vs = Json::array();
      for (const auto& f : dec.eigenfunctions) vs.push_back(gc::function_to_json(g, f));
      j["eigenfunctions"] = vs;
    }
    emit(j);
    return 0;
  }
  std::cout << "index,eigenvalue";
  if (vectors) {
    for (int v = 0; v < g.vertex_count(); ++v) std::cout << ',' << g.id(v);
  }
  std::cout << '\n';
  char buf[32];
  for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", dec.eigenvalues[i]);
    std::cout << i + 1 << ',' << buf;
    if (vectors) {
      for (double x : dec.eigenfunctions[i]) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        std::cout << ',' << buf;
      }
    }
    std::cout << '\n';
  }
  return 0;
}

int run_iso(const std::string& file, const std::string& nu_text,
            const std::string& variant_text, int max_subset, bool force) {
  const auto in = load_graph(file);
  const auto& g = in.graph;
  const double nu = parse_real(nu_text, "nu");
  const auto variant = gc::parse_iso_variant(variant_text);
  const auto r = gc::iso_constant(g, nu, variant, limits_from(max_subset, force));
  Json j = header("iso", in);
  j["nu"] = gc::number_or_null(nu);
  j["variant"] = std::string(gc::to_string(variant));
  j["value"] = gc::number_or_null(r.value);
  if (r.witness) {
    j["witness"] = {{"vertices", id_list(g, r.witness->vertices)},
                    {"area", r.witness->area},
                    {"vmass", r.witness->vmass}};
  } else {
    j["witness"] = nullptr;
  }
  j["sets_examined"] = r.sets_examined;
  emit(j);
  return 0;
}

int run_bounds(const std::string& file, const std::string& mode_text,
               const std::string& nu_text, int max_subset, bool force) {
  const auto in = load_graph(file);
  const auto& g = in.graph;
  const auto mode = default_mode(g, mode_text);
  const auto limits = limits_from(max_subset, force);
  const auto r = gc::bound_report(g, mode, limits);
  Json j = header("bounds", in);
  j["mode"] = std::string(gc::to_string(mode));
  j["lambda"] = r.lambda;
  const auto& inp = r.inputs;
  j["inputs"] = {{"iso_inf", gc::number_or_null(inp.iso_inf)},
                 {"iso_witness", id_list(g, inp.iso_witness)},
                 {"c", gc::number_or_null(inp.c)},
                 {"c_witness", id_list(g, inp.c_witness)},
                 {"rho_sup", inp.rho_sup},
                 {"max_length", inp.max_length},
                 {"unit_lengths", inp.unit_lengths},
                 {"unit_measures", inp.unit_measures},
                 {"bobkov_measures", inp.bobkov_measures}};
  if (!nu_text.empty()) {
    const double nu = parse_real(nu_text, "nu");
    const auto variant =
        mode == gc::Mode::closed ? gc::IsoVariant::tilde : gc::IsoVariant::open;
    j["nu"] = gc::number_or_null(nu);
    j["iso_nu"] = gc::number_or_null(gc::iso_constant(g, nu, variant, limits).value);
  }
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(bound_json(b));
  j["bounds"] = bounds;
  j["sound"] = r.sound();
  emit(j);
  return r.sound() ? 0 : kExitFailure;
}

struct HeatArgs {
  std::string file;
  std::string t_list;
  bool diag = false;
  std::string x;
  std::string y;
  std::string mode;
  std::string out = "csv";
  bool nash = false;
  std::string nu = "3";
  std::string decay_profile;
  std::string kappa = "1";
  int max_subset = 22;
  bool force = false;
};

std::vector<double> time_grid(const std::string& text) {
  if (text.empty()) return gc::log_grid(1e-2, 1e2);
  std::vector<double> ts;
  for (const auto& s : split_list(text)) {
    const double t = parse_real(s, "time");
    if (!(t >= 0.0) || std::isinf(t)) throw InputError("times must be finite and >= 0");
    ts.push_back(t);
  }
  return ts;
}

int run_heat(const HeatArgs& a) {
  const auto in = load_graph(a.file);
  const auto& g = in.graph;
  const auto mode = default_mode(g, a.mode);
  const auto ts = time_grid(a.t_list);
  const auto limits = limits_from(a.max_subset, a.force);

  if (a.nash) {
    const double nu = parse_real(a.nu, "nu");
    const auto r = gc::nash_diagonal_bound(g, nu, mode, ts, limits);
    Json j = header("heat", in);
    j["check"] = "nash";
    j["nu"] = gc::number_or_null(r.nu);
    j["mode"] = std::string(gc::to_string(r.mode));
    j["iso"] = gc::number_or_null(r.iso);
    j["rho_sup"] = r.rho_sup;
    j["C1"] = gc::number_or_null(r.C1);
    j["C2"] = gc::number_or_null(r.C2);
    j["applicable"] = r.applicable;
    j["max_scaled"] = gc::number_or_null(r.max_scaled);
    j["worst_t"] = r.worst_t;
    j["worst_x"] = r.worst_x >= 0 ? Json(g.id(r.worst_x)) : Json(nullptr);
    j["holds"] = r.holds;
    emit(j);
    return !r.applicable || r.holds ? 0 : kExitFailure;
  }

  if (!a.decay_profile.empty()) {
    const std::string prefix = "power:";
    if (a.decay_profile.rfind(prefix, 0) != 0) {
      throw InputError("decay profile must look like power:nu");
    }
    const double nu = parse_real(a.decay_profile.substr(prefix.size()), "nu");
    const double kappa = parse_real(a.kappa, "kappa");
    const auto profile = gc::power_profile(nu, kappa);
    const auto xs = a.x.empty() ? g.interior() : vertex_list(g, a.x);
    Json j = header("heat", in);
    j["check"] = "decay";
    j["profile"] = profile.name;
    const auto audit = gc::decay_hypothesis(g, profile, limits);
    if (!audit.holds) {
      const auto& w = *audit.violation;
      j["sets_examined"] = audit.sets_examined;
      j["violation"] = {{"vertices", id_list(g, w.vertices)},
                        {"area", w.area},
                        {"vmass", w.vmass}};
      j["holds"] = false;
      emit(j);
      return kExitFailure;
    }
    const auto r = gc::general_decay_bound(g, profile, xs, ts, limits);
    j["C"] = r.C;
    j["sets_examined"] = r.audit.sets_examined;
    Json probes = Json::array();
    for (const auto& p : r.probes) {
      probes.push_back({{"x", g.id(p.x)},
                        {"t", p.t},
                        {"kernel", p.kernel},
                        {"bound", gc::number_or_null(p.bound)},
                        {"holds", p.holds}});
    }
    j["probes"] = probes;
    j["holds"] = r.holds;
    emit(j);
    return r.holds ? 0 : kExitFailure;
  }

  const auto kernel = gc::heat_kernel(g, mode);
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> names;
  if (a.diag) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      pairs.emplace_back(v, v);
      names.push_back(g.id(v));
    }
  } else {
    if (a.x.empty() || a.y.empty()) throw InputError("heat needs --diag or --x and --y");
    pairs.emplace_back(g.index(a.x), g.index(a.y));
    names.emplace_back("value");
  }
  if (a.out == "json") {
    Json j = header("heat", in);
    j["mode"] = std::string(gc::to_string(mode));
    Json rows = Json::array();
    for (double t : ts) {
      Json row = {{"t", t}};
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        row[names[k]] = kernel(pairs[k].first, pairs[k].second, t);
      }
      rows.push_back(row);
    }
    j["rows"] = rows;
    emit(j);
    return 0;
  }
  std::cout << 't';
  for (const auto& n : names) std::cout << ',' << n;
  std::cout << '\n';
  char buf[32];
  for (double t : ts) {
    std::snprintf(buf, sizeof buf, "%.17g", t);
    std::cout << buf;
    for (const auto& [x, y] : pairs) {
      std::snprintf(buf, sizeof buf, "%.17g", kernel(x, y, t));
      std::cout << ',' << buf;
    }
    std::cout << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string nu = "3";
  std::string p = "2";
  std::string mode;
  std::string function;
  int max_subset = 22;
  bool force = false;
};

int run_verify(const VerifyArgs& a) {
  const auto in = load_graph(a.file);
  const auto& g = in.graph;
  gc::SuiteOptions o;
  o.nu = parse_real(a.nu, "nu");
  o.p = parse_real(a.p, "p");
  o.trials = a.trials;
  o.seed = a.seed;
  if (!a.mode.empty()) o.mode = gc::parse_mode(a.mode);
  o.limits = limits_from(a.max_subset, a.force);
  if (!a.function.empty()) {
    o.function = gc::function_from_json(g, gc::parse_json(gc::read_file(a.function)));
  }
  const auto r = gc::run_suite(g, a.suite, o);
  Json j = header("verify", in);
  j["suite"] = r.suite;
  j["mode"] = std::string(gc::to_string(r.mode));
  j["seed"] = a.seed;
  j["trials"] = r.trials;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  if (a.suite == "coarea" || a.suite == "green") {
    j["max_residual"] = r.max_residual;
  } else {
    j["min_margin"] = gc::number_or_null(r.min_margin);
    j["worst"] = r.worst ? check_json(*r.worst) : Json(nullptr);
  }
  Json constants = Json::object();
  for (const auto& [name, value] : r.constants) constants[name] = gc::number_or_null(value);
  j["constants"] = constants;
  j["passed"] = r.passed();
  emit(j);
  return r.passed() ? 0 : kExitFailure;
}

struct GenArgs {
  std::string family;
  int n = 0;
  int d = 0;
  std::string nu = "2";
  long long m = 1;
  std::string boundary = "none";
  std::string output;
};

int run_gen(const GenArgs& a) {
  gc::WeightedGraph g;
  const auto need_n = [&] {
    if (a.n < 1) throw InputError(a.family + " needs --n >= 1");
  };
  if (a.family == "path") {
    need_n();
    if (a.boundary != "none" && a.boundary != "first" && a.boundary != "last" &&
        a.boundary != "both") {
      throw InputError("--boundary must be none, first, last or both");
    }
    g = gc::path(a.n, a.boundary == "first" || a.boundary == "both",
                 a.boundary == "last" || a.boundary == "both");
  } else if (a.family == "cycle") {
    need_n();
    g = gc::cycle(a.n);
  } else if (a.family == "complete") {
    need_n();
    g = gc::complete(a.n);
  } else if (a.family == "hypercube") {
    g = gc::hypercube(a.d);
  } else if (a.family == "radial") {
    g = gc::radial_graph(a.n, parse_real(a.nu, "nu"));
  } else if (a.family == "doubled-radial") {
    g = gc::doubled_radial(a.n, parse_real(a.nu, "nu")).graph;
  } else if (a.family == "classical-radial") {
    g = gc::classical_radial(a.n, parse_real(a.nu, "nu"), a.m).graph;
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  const std::string text = gc::dump_json(gc::graph_to_json(g)) + "\n";
  if (a.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(a.output, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + a.output + "'");
  return 0;
}

int run_flow(const std::string& file, const std::string& set_text,
             const std::string& c_text, bool weighted) {
  const auto in = load_graph(file);
  const auto& g = in.graph;
  const auto A = vertex_list(g, set_text);
  if (A.empty()) throw InputError("flow needs a nonempty --set");
  Json j = header("flow", in);
  j["set"] = id_list(g, A);
  Json edges = Json::array();
  bool ok = false;
  if (weighted) {
    const auto r = gc::weighted_alon_field(g, A);
    j["c"] = r.c;
    for (int e = 0; e < g.edge_count(); ++e) {
      edges.push_back({{"u", g.id(g.edge(e).u)}, {"v", g.id(g.edge(e).v)}, {"x", r.X[e]}});
    }
    j["conditions"] = {{"source_gain", r.source_gain},
                       {"outside_loss", r.outside_loss},
                       {"inflow", r.inflow},
                       {"outflow", r.outflow},
                       {"per_edge_out", r.per_edge_out}};
    ok = r.all();
  } else {
    const auto r = c_text.empty() ? gc::alon_field(g, A)
                                  : gc::alon_field(g, A, parse_rational(c_text));
    j["c"] = rational_text(r.c);
    for (int e = 0; e < g.edge_count(); ++e) {
      edges.push_back({{"u", g.id(g.edge(e).u)},
                       {"v", g.id(g.edge(e).v)},
                       {"x", rational_text(r.X[e])}});
    }
    const auto& c = r.conditions;
    j["conditions"] = {{"bounded", c.bounded},
                       {"source_gain", c.source_gain},
                       {"outside_loss", c.outside_loss},
                       {"inflow", c.inflow},
                       {"outflow", c.outflow},
                       {"energy", c.energy},
                       {"energy_rho", c.energy_rho},
                       {"energy_limit", c.energy_limit}};
    ok = c.all();
  }
  j["field"] = edges;
  j["holds"] = ok;
  emit(j);
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphcalc: calculus, isoperimetry and heat kernels on weighted graphs"};
  app.require_subcommand(1);

  std::string file;
  std::string mode;
  std::string nu;
  int max_subset = 22;
  bool force = false;
  const auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-subset", max_subset,
                    "largest interior enumerated without --force");
    sub->add_flag("--force", force, "enumerate beyond --max-subset");
  };

  auto* info = app.add_subcommand("info", "graph statistics");
  info->add_option("file", file)->required();

  int count = 0;
  bool vectors = false;
  std::string out = "csv";
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues as CSV");
  spectrum->add_option("file", file)->required();
  spectrum->add_option("--mode", mode, "closed|dirichlet");
  spectrum->add_option("--count", count, "number of eigenpairs");
  spectrum->add_flag("--vectors", vectors, "add eigenvector columns");
  spectrum->add_option("--out", out, "csv|json");

  std::string variant = "open";
  auto* iso = app.add_subcommand("iso", "exact isoperimetric constant");
  iso->add_option("file", file)->required();
  iso->add_option("--nu", nu, "dimension (number, p/q or inf)")->required();
  iso->add_option("--variant", variant, "open|tilde|tilde-prime");
  add_limits(iso);

  auto* bounds = app.add_subcommand("bounds", "eigenvalue lower bounds");
  bounds->add_option("file", file)->required();
  bounds->add_option("--mode", mode, "closed|dirichlet");
  bounds->add_option("--nu", nu, "also report the constant at this nu");
  add_limits(bounds);

  HeatArgs ha;
  auto* heat = app.add_subcommand("heat", "heat kernel values and decay checks");
  heat->add_option("file", ha.file)->required();
  heat->add_option("--t", ha.t_list, "comma-separated times");
  heat->add_flag("--diag", ha.diag, "diagonal K(x,x,t) for every vertex");
  heat->add_option("--x", ha.x, "first vertex id (decay: comma-separated probes)");
  heat->add_option("--y", ha.y, "second vertex id");
  heat->add_option("--mode", ha.mode, "closed|dirichlet");
  heat->add_option("--out", ha.out, "csv|json");
  heat->add_flag("--nash", ha.nash, "check the Nash diagonal bound");
  heat->add_option("--nu", ha.nu, "dimension for --nash");
  heat->add_option("--decay-profile", ha.decay_profile, "power:nu");
  heat->add_option("--kappa", ha.kappa, "coefficient of the power profile");
  heat->add_option("--max-subset", ha.max_subset);
  heat->add_flag("--force", ha.force);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("file", va.file)->required();
  verify->add_option("--suite", va.suite,
                     "coarea|green|ff|sobolev|nash|trudinger|gennash")
      ->required();
  verify->add_option("--trials", va.trials);
  verify->add_option("--seed", va.seed);
  verify->add_option("--nu", va.nu);
  verify->add_option("--p", va.p);
  verify->add_option("--mode", va.mode, "closed|dirichlet");
  verify->add_option("--function", va.function, "VertexFunction JSON file");
  verify->add_option("--max-subset", va.max_subset);
  verify->add_flag("--force", va.force);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("family", ga.family,
                  "path|cycle|complete|hypercube|radial|doubled-radial|"
                  "classical-radial")
      ->required();
  gen->add_option("--n", ga.n, "size");
  gen->add_option("--d", ga.d, "hypercube dimension");
  gen->add_option("--nu", ga.nu, "radial dimension");
  gen->add_option("--m", ga.m, "classical level multiplier");
  gen->add_option("--boundary", ga.boundary, "path boundary: none|first|last|both");
  gen->add_option("-o,--output", ga.output, "output file (stdout when omitted)");

  std::string set;
  std::string c_text;
  bool weighted = false;
  auto* flow = app.add_subcommand("flow", "max-flow field on a source set");
  flow->add_option("file", file)->required();
  flow->add_option("--set", set, "comma-separated vertex ids")->required();
  flow->add_option("--c", c_text, "magnification as p/q (default: certified)");
  flow->add_flag("--weighted", weighted, "measure-weighted network");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*info) return run_info(file);
    if (*spectrum) return run_spectrum(file, mode, count, vectors, out);
    if (*iso) return run_iso(file, nu, variant, max_subset, force);
    if (*bounds) return run_bounds(file, mode, nu, max_subset, force);
    if (*heat) return run_heat(ha);
    if (*verify) return run_verify(va);
    if (*gen) return run_gen(ga);
    if (*flow) return run_flow(file, set, c_text, weighted);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}
