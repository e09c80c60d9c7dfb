#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gabor/json_io.hpp"
#include "gabor/parallel.hpp"

namespace gabor::cli {

namespace {

using io::json;

struct Global {
  bool approx = false;
  std::string format;
  unsigned jobs = default_jobs();
  bool strict = false;
  double tol = 1e-9;
};

struct Result {
  bool inconclusive = false;
};

std::string load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw InputError("cannot read '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StepFunction parse_step(const std::string& arg, const Global& g) {
  json j;
  try {
    j = json::parse(load(arg));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed step-function JSON: ") + e.what());
  }
  return io::step_from_json(j, g.approx);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& s) {
  const Rational q = parse_rational(s);
  if (!is_integer(q)) throw InputError("expected an integer, got '" + s + "'");
  return to_int(q);
}

/// "2,4,8" or "2:64" (inclusive) or a mix.
std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const std::string& item : split(s, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(parse_int(parts[0]));
    } else if (parts.size() == 2) {
      const std::int64_t lo = parse_int(parts[0]), hi = parse_int(parts[1]);
      if (hi < lo) throw InputError("empty range '" + item + "'");
      for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      throw InputError("malformed integer list '" + s + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

/// "lo:hi:step" (inclusive, rational) or a comma list of values.
std::vector<AbcNumber> parse_grid(const std::string& s, const Global& g) {
  const auto parts = split(s, ':');
  std::vector<AbcNumber> out;
  if (parts.size() == 3) {
    const Rational lo = parse_rational(parts[0], g.approx), hi = parse_rational(parts[1], g.approx),
                   step = parse_rational(parts[2], g.approx);
    if (sgn(step) <= 0) throw InputError("grid step must be positive");
    if ((hi - lo) / step > 1'000'000) throw InputError("grid too large");
    for (Rational x = lo; x <= hi; x += step) out.emplace_back(x);
  } else if (parts.size() == 1) {
    for (const std::string& item : split(s, ',')) out.push_back(AbcNumber::parse(item, g.approx));
  } else {
    throw InputError("grid must be lo:hi:step or a comma list");
  }
  if (out.empty()) throw InputError("empty grid");
  return out;
}

Interval parse_interval(const std::string& s, const Global& g) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw InputError("interval must be lo:hi");
  Interval e{parse_rational(parts[0], g.approx), parse_rational(parts[1], g.approx)};
  if (!(e.lo < e.hi)) throw InputError("interval must satisfy lo < hi");
  return e;
}

std::string format_of(const Global& g, const char* fallback) {
  return g.format.empty() ? fallback : g.format;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string cell_csv(const StepFunction& f, const std::string& prefix) {
  std::string s;
  for (const Piece& p : f.pieces())
    s += prefix + to_string(p.lo) + "," + to_string(p.hi) + "," + p.value.to_string() + "\n";
  return s;
}

// Subcommand options.
struct SystemArgs {
  std::string g, a, b, weight = "1";
  GaborSystem build(const Global& gl) const {
    return GaborSystem(parse_step(g, gl), parse_rational(a, gl.approx), parse_rational(b, gl.approx),
                       parse_rational(weight, gl.approx));
  }
};

void add_system(CLI::App* sub, SystemArgs& s) {
  sub->add_option("--g", s.g, "window as JSON pieces (or @file)")->required();
  sub->add_option("--a", s.a, "translation step a (p/q)")->required();
  sub->add_option("--b", s.b, "modulation step b (p/q)")->required();
  sub->add_option("--weight", s.weight, "window weight w (window = sqrt(w) g)");
}

Result cmd_gk(const SystemArgs& s, const Global& g, std::ostream& out) {
  const GkTable t = gk_table(s.build(g));
  if (format_of(g, "json") == "csv") {
    out << "k,lo,hi,value\n";
    for (const auto& [k, gk] : t.entries()) out << cell_csv(gk.cell(), std::to_string(k) + ",");
  } else {
    emit(out, io::to_json(t));
  }
  return {};
}

Result cmd_cc(const SystemArgs& s, const Global& g, std::ostream& out) {
  const CcReport r = cc_bounds(s.build(g));
  if (format_of(g, "json") == "csv") {
    out << "A_raw,B_raw,frame_lower,frame_upper,verdict\n"
        << r.a_raw.to_string() << ',' << r.b_raw.to_string() << ',' << r.frame_lower.to_string() << ','
        << r.frame_upper.to_string() << ',' << to_string(r.verdict) << '\n';
  } else {
    emit(out, io::to_json(r));
  }
  return {r.verdict == CcVerdict::Inconclusive};
}

Result cmd_energy(const SystemArgs& s, const std::string& f_arg, const Global& g, std::ostream& out) {
  const GaborSystem sys = s.build(g);
  const StepFunction f = parse_step(f_arg, g);
  const EnergyResult e = frame_energy(f, sys);
  const Scalar n = norm_sq(f);
  if (n.is_zero()) throw InputError("f must be nonzero");
  const Scalar ratio = e.value / n;
  if (format_of(g, "json") == "csv") {
    out << "energy,norm_sq,ratio,exact\n"
        << e.value.to_string() << ',' << n.to_string() << ',' << ratio.to_string() << ','
        << (e.exact ? "true" : "false") << '\n';
  } else {
    emit(out, json{{"energy", io::to_json(e.value)},
                   {"norm_sq", io::to_json(n)},
                   {"ratio", io::to_json(ratio)},
                   {"exact", e.exact}});
  }
  return {};
}

Result cmd_frameset(const std::string& exps_arg, const Global& g, std::ostream& out) {
  std::vector<std::int64_t> exps;
  for (const std::string& item : split(exps_arg, ',')) exps.push_back(parse_int(item));
  const ExponentSet e(exps);
  const FrameSetReport r = frame_set_report(e, g.tol);
  if (format_of(g, "json") == "csv") {
    out << "exps,status,A_lower,A_upper,B_lower,B_upper\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, ",%s,%.17g,%.17g,%.17g,%.17g\n", to_string(r.verdict.status).c_str(),
                  r.lower_bound.lower, r.lower_bound.upper, r.upper_bound.lower, r.upper_bound.upper);
    out << '"' << exps_arg << '"' << buf;
  } else {
    emit(out, io::to_json(e, r));
  }
  return {r.verdict.status == FrameStatus::Inconclusive};
}

Result cmd_abc(const std::string& a, const std::string& b, const std::string& c, const Global& g,
               std::ostream& out) {
  const AbcQuery q(AbcNumber::parse(a, g.approx), parse_rational(b, g.approx), AbcNumber::parse(c, g.approx));
  const AbcVerdict v = classify(q);
  if (format_of(g, "json") == "csv") {
    out << "a,c,status,rule\n"
        << reduce(q).a.to_string() << ',' << reduce(q).c.to_string() << ',' << to_string(v.status) << ','
        << to_string(v.rule) << '\n';
  } else {
    emit(out, io::to_json(q, v));
  }
  return {v.status == AbcStatus::Unknown};
}

Result cmd_chart(const std::string& a_grid, const std::string& c_grid, const Global& g, std::ostream& out) {
  const auto rows = chart(parse_grid(a_grid, g), parse_grid(c_grid, g), g.jobs);
  if (format_of(g, "csv") == "csv") {
    out << "a,c,status,rule\n";
    for (const ChartRow& r : rows)
      out << r.a.to_string() << ',' << r.c.to_string() << ',' << to_string(r.verdict.status) << ','
          << to_string(r.verdict.rule) << '\n';
  } else {
    json arr = json::array();
    for (const ChartRow& r : rows)
      arr.push_back({{"a", r.a.to_string()},
                     {"c", r.c.to_string()},
                     {"status", to_string(r.verdict.status)},
                     {"rule", to_string(r.verdict.rule)}});
    emit(out, arr);
  }
  return {};
}

Result cmd_walnut(const SystemArgs& s, std::int64_t k_min, std::int64_t k_max, const Global& g,
                  std::ostream& out) {
  const WalnutBand band = walnut_band(s.build(g), k_min, k_max);
  if (format_of(g, "json") == "csv") {
    out << "j,k,lo,hi,value\n";
    for (const auto& [jk, entry] : band.entries)
      out << cell_csv(entry.cell(), std::to_string(jk.first) + "," + std::to_string(jk.second) + ",");
  } else {
    emit(out, io::to_json(band));
  }
  return {};
}

struct FundamentalArgs {
  std::string a = "3/4", b = "1";
  int trials = 30;
  std::uint64_t seed = 1;
  SystemArgs sys;
  std::string f;
};

Result cmd_fundamental(const FundamentalArgs& fa, const Global& g, std::ostream& out) {
  if (!fa.sys.g.empty()) {
    if (fa.sys.a.empty() || fa.sys.b.empty() || fa.f.empty())
      throw InputError("--g needs --a, --b and --f");
    const GaborSystem sys = fa.sys.build(g);
    const StepFunction f = parse_step(fa.f, g);
    const StepFunction s = apply_frame_operator(sys, f);
    const bool walnut = apply_via_walnut(sys, f) == s;
    const bool decomposition = fundamental_decomposition_apply(sys, f) == s;
    const bool tt = apply_preframe(sys, apply_adjoint(sys, f)) == s;
    emit(out, json{{"S_f", io::to_json(s)},
                   {"walnut_agrees", walnut},
                   {"decomposition_agrees", decomposition},
                   {"preframe_adjoint_agrees", tt}});
    return {};
  }
  const SqrtInverseReport r =
      sqrt_inverse_check(parse_rational(fa.a, g.approx), parse_rational(fa.b, g.approx), fa.trials, fa.seed);
  emit(out, io::to_json(r));
  return {};
}

struct WitnessArgs {
  std::string family;
  std::string d = "1", c = "2";
  std::int64_t size = 2;
  std::string g, e = "0:1";
  std::int64_t m = 1;
  std::string eps = "0";
  std::string ns = "2:16";
};

Result cmd_witness(const WitnessArgs& w, const Global& g, std::ostream& out) {
  const Rational d = parse_rational(w.d, g.approx), c = parse_rational(w.c, g.approx);
  auto window = [&] {
    if (w.g.empty()) throw InputError("family '" + w.family + "' needs --g");
    return parse_step(w.g, g);
  };
  WitnessFamily fam = [&]() -> WitnessFamily {
    if (w.family == "case1") return case1_family(d, c);
    if (w.family == "case2") return case2_family(d, c);
    if (w.family == "riesz") return riesz_family(w.size);
    const Interval e = parse_interval(w.e, g);
    if (w.family == "p3") return p3_family(window(), StepFunction::indicator(e.lo, e.hi));
    if (w.family == "p2")
      return p2_family(window(), w.m, e, Scalar(parse_rational(w.eps, g.approx)));
    throw InputError("unknown witness family '" + w.family + "'");
  }();
  const auto rows = decay_table(fam, parse_int_list(w.ns), g.jobs);
  if (format_of(g, "csv") == "csv") {
    out << "n,norm_sq,energy,ratio\n";
    for (const DecayRow& r : rows)
      out << r.n << ',' << r.norm_sq.to_string() << ',' << r.energy.to_string() << ',' << r.ratio.to_string()
          << '\n';
  } else {
    emit(out, io::to_json(rows));
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of Gabor systems with step-function windows", "gabor"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--approx", g.approx, "accept decimal and float literals");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--strict", g.strict, "exit 3 when the verdict is inconclusive");
  app.add_option("--tol", g.tol, "enclosure tolerance for frameset")->check(CLI::PositiveNumber);

  SystemArgs gk_args, cc_args, energy_args, walnut_args;
  std::string energy_f, exps, abc_a, abc_b = "1", abc_c, a_grid, c_grid;
  std::int64_t k_min = 0, k_max = 0;
  FundamentalArgs fund;
  WitnessArgs wit;

  auto* gk = app.add_subcommand("gk", "correlation functions G_k");
  add_system(gk, gk_args);
  auto* cc = app.add_subcommand("cc", "CC-condition bounds");
  add_system(cc, cc_args);
  auto* energy = app.add_subcommand("energy", "frame energy of f");
  add_system(energy, energy_args);
  energy->add_option("--f", energy_f, "test function as JSON pieces")->required();
  auto* frameset = app.add_subcommand("frameset", "integer-translate frame sets");
  frameset->add_option("--exps", exps, "exponents n_1<...<n_k, comma separated")->required();
  auto* abc = app.add_subcommand("abc", "classify (chi_[0,c], a, b)");
  abc->add_option("--a", abc_a, "a as p/q or irr:<value>")->required();
  abc->add_option("--b", abc_b, "b as p/q");
  abc->add_option("--c", abc_c, "c as p/q or irr:<value>")->required();
  auto* chart_cmd = app.add_subcommand("chart", "classify a grid of (a, c) with b = 1");
  chart_cmd->add_option("--a-grid", a_grid, "lo:hi:step or comma list")->required();
  chart_cmd->add_option("--c-grid", c_grid, "lo:hi:step or comma list")->required();
  auto* walnut = app.add_subcommand("walnut", "band of the Walnut matrix");
  add_system(walnut, walnut_args);
  walnut->add_option("--k-min", k_min, "first column");
  walnut->add_option("--k-max", k_max, "last column");
  auto* fcheck = app.add_subcommand("fundamental-check", "square-root identity or representation check");
  fcheck->add_option("--a", fund.a, "a for the beta/gamma/psi check");
  fcheck->add_option("--b", fund.b, "b for the beta/gamma/psi check");
  fcheck->add_option("--trials", fund.trials, "random test functions")->check(CLI::NonNegativeNumber);
  fcheck->add_option("--seed", fund.seed, "random seed");
  fcheck->add_option("--g", fund.sys.g, "window; switches to the representation check");
  fcheck->add_option("--f", fund.f, "test function for the representation check");
  fcheck->add_option("--weight", fund.sys.weight, "window weight");
  auto* witness = app.add_subcommand("witness", "decay tables of witness families");
  witness->add_option("--family", wit.family, "case1|case2|riesz|p3|p2")->required();
  witness->add_option("--d", wit.d, "block width d");
  witness->add_option("--c", wit.c, "window length c for case1/case2");
  witness->add_option("--size", wit.size, "block length n for riesz");
  witness->add_option("--g", wit.g, "window for p3/p2");
  witness->add_option("--E", wit.e, "interval lo:hi for p3/p2");
  witness->add_option("--m", wit.m, "shift m for p2");
  witness->add_option("--eps", wit.eps, "matching tolerance for p2");
  witness->add_option("--ns", wit.ns, "sizes, e.g. 2:64 or 2,4,8");

  std::vector<const char*> argv{"gabor"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kRejected;
  }
  if (fcheck->parsed()) {
    // In the representation check --a/--b describe the system.
    fund.sys.a = fund.a;
    fund.sys.b = fund.b;
  }

  try {
    Result r;
    if (gk->parsed()) r = cmd_gk(gk_args, g, out);
    else if (cc->parsed()) r = cmd_cc(cc_args, g, out);
    else if (energy->parsed()) r = cmd_energy(energy_args, energy_f, g, out);
    else if (frameset->parsed()) r = cmd_frameset(exps, g, out);
    else if (abc->parsed()) r = cmd_abc(abc_a, abc_b, abc_c, g, out);
    else if (chart_cmd->parsed()) r = cmd_chart(a_grid, c_grid, g, out);
    else if (walnut->parsed()) r = cmd_walnut(walnut_args, k_min, k_max, g, out);
    else if (fcheck->parsed()) r = cmd_fundamental(fund, g, out);
    else if (witness->parsed()) r = cmd_witness(wit, g, out);
    return g.strict && r.inconclusive ? kInconclusive : kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace gabor::cli
