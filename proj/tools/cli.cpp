#include "cli.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mvz/counting.hpp"
#include "mvz/errors.hpp"
#include "mvz/euler_factor.hpp"
#include "mvz/groupzeta.hpp"
#include "mvz/io.hpp"
#include "mvz/parallel.hpp"
#include "mvz/polyhedra.hpp"
#include "mvz/toric.hpp"

namespace mvz::cli {

namespace {

using io::Json;
using io::to_json;

struct Globals {
  std::uint64_t cutoff = 12;
  std::optional<std::uint64_t> bound;
  std::uint64_t prime_cutoff = 1000;
  unsigned threads = default_threads();
  std::uint64_t seed = 0;
  bool timings = false;
};

struct AnalyzeArgs {
  std::string series;
  std::optional<std::size_t> prime_var;
  std::string variant = "Vsharp";
};

struct ToricArgs {
  std::string matrix;
  std::string b;
  std::uint64_t weight = 10;
  std::string builtin;
  unsigned n = 3;
};

struct CountArgs {
  std::string matrix;
  std::string box;
  std::string builtin;
  unsigned n = 3;
  std::uint64_t t = 0;
  bool abelian = false;
  unsigned a = 0;
  std::uint64_t limit = 12;
  std::string product = "displayed";
};

struct GroupZetaArgs {
  std::string cone;
  std::string uniform;
  std::string builtin;
};

Json header(const char* command) {
  Json r;
  r["schema"] = "1";
  r["command"] = command;
  return r;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_integer(item).get_si());
  if (out.empty()) throw InvalidInput("empty list \"" + text + "\"");
  return out;
}

Json exponent_list(const std::map<ExponentVector, Integer>& e) {
  Json a = Json::array();
  for (const auto& [m, x] : e) a.push_back(Json::array({to_json(m), to_json(x)}));
  return a;
}

Json point_list(const std::set<ExponentVector>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

Json vertex_json(const Vertex& v, std::size_t nvars) {
  Json j;
  j["alpha"] = to_json(v.coords);
  j["contact"] = point_list(v.contact);
  j["zeros"] = v.zeros;
  j["degree"] = v.degree(nvars);
  return j;
}

Json dual_json(const DualPolyhedron& d) {
  Json j;
  j["nvars"] = d.nvars;
  j["iota"] = to_json(d.index);
  Json r = Json::array();
  for (const auto& x : d.R) r.push_back(to_json(x));
  j["R"] = std::move(r);
  Json vs = Json::array();
  for (const auto& v : d.vertices) vs.push_back(vertex_json(v, d.nvars));
  j["vertices"] = std::move(vs);
  return j;
}

Json hvalue_json(const RationalVector& alpha, const HValue& h) {
  Json j;
  j["alpha"] = to_json(alpha);
  j["value"] = to_json(h.value);
  j["log_value"] = to_json(h.log_value);
  j["min_factor"] = to_json(h.min_factor);
  j["log_tail_bound"] = to_json(h.log_tail_bound, 6);
  j["u"] = to_json(h.u);
  j["primes"] = h.primes;
  j["contact_count"] = h.contact_count;
  return j;
}

Json analyze(const AnalyzeArgs& args, const Globals& g) {
  SparseSeries h = io::parse_series(io::read_file(args.series));
  BoundaryVariant variant;
  if (args.variant == "V") {
    variant = BoundaryVariant::V;
  } else if (args.variant == "Vsharp") {
    variant = BoundaryVariant::Vsharp;
  } else {
    throw InvalidInput("--variant must be V or Vsharp");
  }
  if (args.prime_var && *args.prime_var >= h.nvars()) throw InvalidInput("--prime-var out of range");

  Json r = header("analyze");
  r["input"] = {{"series", to_json(h)},
                {"cutoff", g.cutoff},
                {"prime_var", args.prime_var ? Json(*args.prime_var) : Json()},
                {"variant", to_string(variant)}};

  FactorizeOptions fo;
  fo.prime_var = args.prime_var;
  CyclotomicFactorization f = factorize(h, g.cutoff, fo);
  r["factorization"] = {{"cutoff", f.cutoff}, {"exponents", exponent_list(f.exponents)}};
  if (f.residual) r["factorization"]["residual"] = to_json(*f.residual);

  Json zf = Json::array();
  for (const auto& z : zeta_translation(f)) {
    zf.push_back({{"form", to_json(z.form)}, {"shift", z.shift}, {"gamma", to_json(z.gamma)}});
  }
  r["zeta_factors"] = std::move(zf);

  BoundaryDescriptor bd = boundary(h, args.prime_var, variant);
  Json hs = Json::array();
  for (const auto& x : bd.halfspaces) hs.push_back({{"nu", to_json(x.nu)}, {"k", x.k}});
  r["boundary"] = {{"variant", to_string(bd.variant)}, {"halfspaces", std::move(hs)}, {"positivity", bd.positivity}};
  if (bd.beta) r["boundary"]["beta"] = {{"beta0", to_json(bd.beta->beta0)}, {"beta1", to_json(bd.beta->beta1)}};

  CyclotomicVerdict cv = cyclotomic_test(h, g.bound);
  r["cyclotomic_verdict"] = {{"verdict", cv.cyclotomic ? "Cyclotomic" : "NonCyclotomicUpTo"},
                             {"bound", cv.bound},
                             {"exponents", exponent_list(cv.exponents)},
                             {"witness", cv.witness ? to_json(*cv.witness) : Json()}};

  auto strict = support(h, true);
  if (!strict.empty()) {
    PointSet s = PointSet::from(h.nvars(), {strict.begin(), strict.end()});
    Json poly = dual_json(dual(s, {g.threads}));
    poly["extremal"] = point_list(extremal_points(s));
    r["polyhedra"] = std::move(poly);
  }
  return r;
}

Json toric(const ToricArgs& args, const Globals& g) {
  ToricMatrix a;
  Presentation p;
  std::optional<AnData> closed;
  std::vector<long> b;
  bool restricted = false;
  if (!args.builtin.empty()) {
    if (args.builtin != "An") throw InvalidInput("unknown toric builtin \"" + args.builtin + "\"");
    a = matrix_An(args.n);
    closed = presentation_An(args.n);
    p = closed->presentation;
    b.assign(a.d(), 0);
    restricted = true;
  } else {
    if (args.matrix.empty()) throw InvalidInput("toric needs --matrix or --builtin");
    a = io::parse_matrix(io::read_file(args.matrix));
    b = args.b.empty() ? std::vector<long>(a.d(), 0) : parse_list(args.b);
    if (b.size() != a.d()) throw DimensionMismatch("--b must have one entry per matrix row");
    restricted = args.b.empty() && a.rows_sum_to_zero();
    p = restricted ? restricted_presentation(a) : presentation(a, b);
  }

  Json r = header("toric");
  r["input"] = {{"rows", a.rows}, {"b", b}, {"weight", args.weight}, {"prime_cutoff", g.prime_cutoff}};
  r["restricted"] = restricted;
  r["empty"] = p.empty;
  Json k = Json::array();
  for (const auto& [nu, c] : p.K) k.push_back({{"nu", to_json(nu)}, {"c", c}});
  r["K"] = std::move(k);
  r["W"] = to_json(p.W);
  r["reduced"] = p.is_reduced();
  r["verified"] = verify_presentation(p, a, b, restricted, args.weight);
  r["CA"] = to_json(toric_constant(a));

  if (p.empty || p.W.constant_term() != 1) return r;
  AnalyticData ad = analytic_data(p, a, {g.threads, false});
  r["I"] = point_list(ad.I.points);
  r["polyhedra"] = dual_json(ad.dual);
  r["cprime_ok"] = ad.cprime_ok;
  r["cprime_violations"] = ad.violations;

  Json hv = Json::array();
  for (const auto& v : ad.vertices) {
    if (v.minimal) hv.push_back(hvalue_json(v.alpha, H_alpha_value(p, v.alpha, g.prime_cutoff)));
  }
  r["H"] = std::move(hv);

  if (closed) {
    Json an;
    an["n"] = closed->n;
    an["t"] = closed->t;
    an["d"] = to_json(closed->d);
    an["D_size"] = closed->D.size();
    Json j = Json::array();
    for (const auto& v : closed->J) j.push_back(to_json(v));
    an["J"] = std::move(j);
    an["alpha_star"] = to_json(closed->alpha_star);
    an["beta"] = to_json(closed->beta);
    Json bc = Json::array();
    for (const auto& [v, c] : closed->beta_coefficients) bc.push_back(Json::array({to_json(v), to_json(c)}));
    an["beta_coefficients"] = std::move(bc);
    if (const Vertex* star = ad.dual.find_vertex(closed->alpha_star)) {
      an["contact_count"] = star->contact.size();
      an["degree"] = star->degree(a.n);
      NormalConeResult nc = normal_cone_test(ad.dual, *star, closed->beta);
      an["beta_cone"] = {{"verdict", to_string(nc.verdict)}, {"exponent", to_json(nc.exponent)}, {"degree", nc.degree}};
      HValue h = H_alpha_value(p, closed->alpha_star, g.prime_cutoff);
      an["C0"] = to_json(Real(ad.CA.get_str()) * h.value);
    }
    r["An"] = std::move(an);
  }
  return r;
}

Json count(const CountArgs& args, const Globals& g) {
  Json r = header("count");
  ParallelOptions po{g.threads};
  if (args.abelian) {
    AbelianVariant v;
    if (args.product == "displayed") {
      v = AbelianVariant::Displayed;
    } else if (args.product == "corrected") {
      v = AbelianVariant::Corrected;
    } else {
      throw InvalidInput("--product must be displayed or corrected");
    }
    AbelianCheck c = abelian_euler_check(args.a, args.limit, v);
    r["input"] = {{"abelian", true}, {"a", args.a}, {"limit", args.limit}, {"product", to_string(v)}};
    r["value"] = c.ok;
    r["compared"] = c.compared;
    r["disagreements"] = c.disagreements;
    r["mismatches"] = c.mismatches;
    r["shards"] = 1;
  } else if (!args.builtin.empty()) {
    if (args.builtin != "An") throw InvalidInput("unknown count builtin \"" + args.builtin + "\"");
    if (args.t == 0) throw InvalidInput("count --builtin An needs --t >= 1");
    r["input"] = {{"builtin", "An"}, {"n", args.n}, {"t", args.t}};
    r["value"] = to_json(nth_power_census(args.n, args.t, po));
    r["shards"] = census_shards(args.t);
  } else {
    if (args.matrix.empty() || args.box.empty()) throw InvalidInput("count needs --matrix with --box, --builtin or --abelian");
    ToricMatrix a = io::parse_matrix(io::read_file(args.matrix));
    BoxSpec box;
    for (long x : parse_list(args.box)) {
      if (x < 1) throw InvalidInput("box bounds must be >= 1");
      box.bounds.push_back(static_cast<std::uint64_t>(x));
    }
    r["input"] = {{"rows", a.rows}, {"box", box.bounds}};
    r["CA"] = to_json(toric_constant(a));
    r["value"] = to_json(box_count(a, box, po));
    r["shards"] = box_shards(a, box);
  }
  return r;
}

Json groupzeta(const GroupZetaArgs& args) {
  Json r = header("groupzeta");
  if (!args.cone.empty()) {
    ConeData d = io::parse_cone(io::read_file(args.cone));
    Json pairs = Json::array();
    for (const auto& [a, b] : d.pairs) pairs.push_back(Json::array({to_json(a), to_json(b)}));
    r["input"] = {{"pairs", std::move(pairs)}};
    LeadingPole lp = leading_pole(d);
    r["alpha0"] = lp.alpha0 ? to_json(*lp.alpha0) : Json("-inf");
    r["m0"] = lp.m0;
    return r;
  }
  SparseSeries h;
  if (!args.builtin.empty()) {
    if (args.builtin != "gsp6") throw InvalidInput("unknown groupzeta builtin \"" + args.builtin + "\"");
    h = gsp6_polynomial();
  } else if (!args.uniform.empty()) {
    h = io::parse_series(io::read_file(args.uniform));
  } else {
    throw InvalidInput("groupzeta needs --cone, --uniform or --builtin");
  }
  r["input"] = {{"series", to_json(h)}};
  UniformBoundary ub = uniform_boundary(h);
  r["beta0"] = to_json(ub.beta0);
  r["beta1"] = to_json(ub.beta1);
  r["equal"] = ub.equal;
  return r;
}

Json error_report(const std::string& code, const std::string& message) {
  Json r;
  r["schema"] = "1";
  r["error"] = {{"code", code}, {"message", message}};
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Exact toolkit for multivariate Euler products", "mvzeta"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cutoff", g.cutoff, "Weight cutoff for factorization")->check(CLI::NonNegativeNumber);
  app.add_option("--bound", g.bound, "Weight bound for the cyclotomic test");
  app.add_option("--prime-cutoff", g.prime_cutoff, "Largest prime in truncated Euler products");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed (no subcommand currently samples)");
  app.add_flag("--timings", g.timings, "Add wall-clock runtime to the report");

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "Factorization, zeta factors and boundary of h");
  an->fallthrough();
  an->add_option("--series", aa.series, "Series JSON file")->required();
  an->add_option("--prime-var", aa.prime_var, "Index of the prime variable");
  an->add_option("--variant", aa.variant, "V or Vsharp");

  ToricArgs ta;
  auto* to = app.add_subcommand("toric", "Unitary presentation and analytic data of a toric matrix");
  to->fallthrough();
  to->add_option("--matrix", ta.matrix, "Matrix JSON file");
  to->add_option("--b", ta.b, "Right-hand side, comma separated");
  to->add_option("--weight", ta.weight, "Verification weight");
  to->add_option("--builtin", ta.builtin, "An");
  to->add_option("--n", ta.n, "n for builtin An");

  CountArgs ca;
  auto* co = app.add_subcommand("count", "Counting oracles");
  co->fallthrough();
  co->add_option("--matrix", ca.matrix, "Matrix JSON file");
  co->add_option("--box", ca.box, "Box bounds, comma separated");
  co->add_option("--builtin", ca.builtin, "An");
  co->add_option("--n", ca.n, "n for builtin An");
  co->add_option("--t", ca.t, "Census bound for builtin An");
  co->add_flag("--abelian", ca.abelian, "Check the abelian subgroup identity");
  co->add_option("--a", ca.a, "Exponent a");
  co->add_option("--limit", ca.limit, "Largest n2");
  co->add_option("--product", ca.product, "displayed or corrected");

  GroupZetaArgs ga;
  auto* gz = app.add_subcommand("groupzeta", "Leading pole and uniform boundary abscissas");
  gz->fallthrough();
  gz->add_option("--cone", ga.cone, "Cone data JSON file");
  gz->add_option("--uniform", ga.uniform, "Bivariate series JSON file");
  gz->add_option("--builtin", ga.builtin, "gsp6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_report("invalid_arguments", e.what()).dump(2) << "\n";
    return 1;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Json r;
    if (*an) {
      r = analyze(aa, g);
    } else if (*to) {
      r = toric(ta, g);
    } else if (*co) {
      r = count(ca, g);
    } else {
      r = groupzeta(ga);
    }
    if (g.timings) {
      r["runtime"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    out << r.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    out << error_report(e.code(), e.what()).dump(2) << "\n";
    return e.kind() == ErrorKind::Bound ? 2 : 1;
  } catch (const std::exception& e) {
    out << error_report("internal_error", e.what()).dump(2) << "\n";
    return 1;
  }
}

}  // namespace mvz::cli
