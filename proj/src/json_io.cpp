#include "gabor/json_io.hpp"

#include <string>

namespace gabor::io {

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw InputError("expected an integer, got " + j.dump());
    return q.get_num();
  }
  throw InputError("expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j) {
  if (!j.is_number()) throw InputError("expected a number, got " + j.dump());
  return j.get<double>();
}

std::string text(const json& j) {
  if (!j.is_string()) throw InputError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

json pair_json(double lo, double hi) { return json::array({lo, hi}); }

Enclosure enclosure_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("enclosure must be [lower, upper]");
  return {number(j[0]), number(j[1])};
}

CcVerdict cc_verdict_from_string(const std::string& s) {
  if (s == to_string(CcVerdict::FrameCertified)) return CcVerdict::FrameCertified;
  if (s == to_string(CcVerdict::Inconclusive)) return CcVerdict::Inconclusive;
  throw InputError("unknown CC verdict '" + s + "'");
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j, bool allow_float) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>(), allow_float);
  if (j.is_number_float()) {
    if (!allow_float) throw InputError("float literal " + j.dump() + " needs --approx; write rationals as \"p/q\"");
    // The shortest round-trip text of the double, read as an exact decimal.
    return parse_rational(j.dump(), true);
  }
  throw InputError("expected a rational, got " + j.dump());
}

json to_json(const Scalar& s) {
  if (s.is_exact()) {
    if (sgn(s.im()) == 0) return to_string(s.re());
    return json{{"re", to_string(s.re())}, {"im", to_string(s.im())}};
  }
  const Approx z = s.to_complex();
  if (z.imag() == 0) return static_cast<double>(z.real());
  return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

Scalar scalar_from_json(const json& j, bool allow_float) {
  if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j));
  if (j.is_object()) return Scalar(rational_from_json(field(j, "re")), rational_from_json(field(j, "im")));
  if (j.is_number_float()) {
    if (!allow_float) throw InputError("float value " + j.dump() + " needs --approx");
    return Scalar::approx(j.get<double>());
  }
  if (j.is_array() && j.size() == 2) {
    if (!allow_float) throw InputError("float value " + j.dump() + " needs --approx");
    return Scalar::approx(number(j[0]), number(j[1]));
  }
  throw InputError("expected a scalar, got " + j.dump());
}

json to_json(const StepFunction& f) {
  json out = json::array();
  if (f.is_exact()) {
    for (const Piece& p : f.pieces())
      out.push_back({integer_json(p.lo.get_num()), integer_json(p.lo.get_den()),
                     integer_json(p.hi.get_num()), integer_json(p.hi.get_den()),
                     to_string(p.value.re()), to_string(p.value.im())});
  } else {
    for (const Piece& p : f.pieces()) {
      const Approx z = p.value.to_complex();
      out.push_back({static_cast<double>(to_long_double(p.lo)), static_cast<double>(to_long_double(p.hi)),
                     static_cast<double>(z.real()), static_cast<double>(z.imag())});
    }
  }
  return out;
}

StepFunction step_from_json(const json& j, bool allow_float) {
  if (!j.is_array()) throw InputError("step function must be a JSON array of pieces");
  std::vector<Piece> pieces;
  for (const json& p : j) {
    if (!p.is_array()) throw InputError("piece must be an array, got " + p.dump());
    switch (p.size()) {
      case 6: {
        const Rational lo(integer_from_json(p[0]), integer_from_json(p[1]));
        const Rational hi(integer_from_json(p[2]), integer_from_json(p[3]));
        if (sgn(lo.get_den()) == 0 || sgn(hi.get_den()) == 0) throw InputError("zero denominator in piece " + p.dump());
        Rational l = lo, h = hi;
        l.canonicalize();
        h.canonicalize();
        pieces.push_back({l, h, Scalar(rational_from_json(p[4]), rational_from_json(p[5]))});
        break;
      }
      case 4:
        if (!allow_float) throw InputError("approx piece " + p.dump() + " needs --approx");
        pieces.push_back({rational_from_json(p[0], true), rational_from_json(p[1], true),
                          Scalar::approx(number(p[2]), number(p[3]))});
        break;
      case 3:
        pieces.push_back({rational_from_json(p[0], allow_float), rational_from_json(p[1], allow_float),
                          scalar_from_json(p[2], allow_float)});
        break;
      default:
        throw InputError("piece must have 3, 4 or 6 entries, got " + p.dump());
    }
  }
  return StepFunction::make(std::move(pieces));
}

json to_json(const PeriodicStepFunction& f) {
  return json{{"period", to_string(f.period())}, {"cell", to_json(f.cell())}};
}

PeriodicStepFunction periodic_from_json(const json& j) {
  return PeriodicStepFunction(rational_from_json(field(j, "period")), step_from_json(field(j, "cell"), true));
}

json to_json(const GkTable& t) {
  json entries = json::object();
  for (const auto& [k, gk] : t.entries()) entries[std::to_string(k)] = to_json(gk.cell());
  return json{{"a", to_string(t.a())}, {"b", to_string(t.b())}, {"entries", entries}};
}

GkTable gk_table_from_json(const json& j) {
  const Rational a = rational_from_json(field(j, "a"));
  const Rational b = rational_from_json(field(j, "b"));
  std::map<std::int64_t, PeriodicStepFunction> entries;
  const json& e = field(j, "entries");
  if (!e.is_object()) throw InputError("entries must be an object");
  for (const auto& [key, cell] : e.items()) {
    std::int64_t k = 0;
    try {
      k = std::stoll(key);
    } catch (const std::exception&) {
      throw InputError("entry key '" + key + "' is not an integer");
    }
    entries.emplace(k, PeriodicStepFunction(a, step_from_json(cell, true)));
  }
  return GkTable(a, b, std::move(entries));
}

json to_json(const CcReport& r) {
  json out{{"A_raw", to_json(r.a_raw)},
           {"B_raw", to_json(r.b_raw)},
           {"frame_lower", to_json(r.frame_lower)},
           {"frame_upper", to_json(r.frame_upper)},
           {"verdict", to_string(r.verdict)},
           {"nonneg_necessary", r.nonneg_necessary}};
  if (r.necessity_verdict) out["necessity_verdict"] = to_string(*r.necessity_verdict);
  return out;
}

CcReport cc_report_from_json(const json& j) {
  CcReport r;
  r.a_raw = scalar_from_json(field(j, "A_raw"), true);
  r.b_raw = scalar_from_json(field(j, "B_raw"), true);
  r.frame_lower = scalar_from_json(field(j, "frame_lower"), true);
  r.frame_upper = scalar_from_json(field(j, "frame_upper"), true);
  r.verdict = cc_verdict_from_string(text(field(j, "verdict")));
  r.nonneg_necessary = field(j, "nonneg_necessary").get<bool>();
  if (j.contains("necessity_verdict"))
    r.necessity_verdict = frame_status_from_string(text(j.at("necessity_verdict")));
  return r;
}

json to_json(const FrameVerdict& v) {
  json out{{"status", to_string(v.status)}, {"rule", v.rule}};
  if (v.bounds) out["bounds"] = json::array({to_json(v.bounds->first), to_json(v.bounds->second)});
  if (v.witness) out["witness"] = *v.witness;
  if (v.margin) out["margin"] = to_json(*v.margin);
  return out;
}

FrameVerdict frame_verdict_from_json(const json& j) {
  FrameVerdict v;
  v.status = frame_status_from_string(text(field(j, "status")));
  v.rule = text(field(j, "rule"));
  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    if (!b.is_array() || b.size() != 2) throw InputError("bounds must be [lower, upper]");
    v.bounds = std::make_pair(scalar_from_json(b[0], true), scalar_from_json(b[1], true));
  }
  if (j.contains("witness")) v.witness = text(j.at("witness"));
  if (j.contains("margin")) v.margin = scalar_from_json(j.at("margin"), true);
  return v;
}

json to_json(const ExponentSet& e, const FrameSetReport& r) {
  const RangeCertificate& c = r.range.certificate;
  return json{{"exps", std::vector<std::int64_t>(e.exps().begin(), e.exps().end())},
              {"verdict", to_json(r.verdict)},
              {"A_enclosure", pair_json(r.lower_bound.lower, r.lower_bound.upper)},
              {"B_enclosure", pair_json(r.upper_bound.lower, r.upper_bound.upper)},
              {"min_modulus", pair_json(r.range.min.lower, r.range.min.upper)},
              {"max_modulus", pair_json(r.range.max.lower, r.range.max.upper)},
              {"min_is_zero", r.range.min_is_zero},
              {"argmin", r.range.argmin},
              {"certificate",
               {{"grid_step", c.grid_step},
                {"min_step", c.min_step},
                {"lipschitz", c.lipschitz},
                {"curvature", c.curvature},
                {"rounding_guard", c.rounding_guard},
                {"evaluations", c.evaluations},
                {"exact_tiebreak", c.exact_tiebreak},
                {"converged", c.converged}}}};
}

FrameSetReport frame_set_report_from_json(const json& j) {
  FrameSetReport r;
  r.verdict = frame_verdict_from_json(field(j, "verdict"));
  r.lower_bound = enclosure_from_json(field(j, "A_enclosure"));
  r.upper_bound = enclosure_from_json(field(j, "B_enclosure"));
  r.range.min = enclosure_from_json(field(j, "min_modulus"));
  r.range.max = enclosure_from_json(field(j, "max_modulus"));
  r.range.min_is_zero = field(j, "min_is_zero").get<bool>();
  r.range.argmin = number(field(j, "argmin"));
  const json& c = field(j, "certificate");
  RangeCertificate& cert = r.range.certificate;
  cert.grid_step = number(field(c, "grid_step"));
  cert.min_step = number(field(c, "min_step"));
  cert.lipschitz = number(field(c, "lipschitz"));
  cert.curvature = number(field(c, "curvature"));
  cert.rounding_guard = number(field(c, "rounding_guard"));
  cert.evaluations = field(c, "evaluations").get<std::int64_t>();
  cert.exact_tiebreak = field(c, "exact_tiebreak").get<bool>();
  cert.converged = field(c, "converged").get<bool>();
  return r;
}

json to_json(const AbcQuery& q, const AbcVerdict& v) {
  const AbcQuery r = reduce(q);
  return json{{"a", q.a.to_string()},
              {"b", to_string(q.b)},
              {"c", q.c.to_string()},
              {"reduced", {{"a", r.a.to_string()}, {"b", "1"}, {"c", r.c.to_string()}}},
              {"status", to_string(v.status)},
              {"rule", to_string(v.rule)}};
}

AbcVerdict abc_verdict_from_json(const json& j) {
  return {abc_status_from_string(text(field(j, "status"))),
          abc_rule_from_string(text(field(j, "rule")))};
}

json to_json(const WalnutBand& band) {
  json entries = json::array();
  for (const auto& [jk, entry] : band.entries)
    entries.push_back({{"j", jk.first}, {"k", jk.second}, {"entry", to_json(entry)}});
  return json{{"band_low", band.band_low}, {"band_high", band.band_high}, {"entries", entries}};
}

WalnutBand walnut_band_from_json(const json& j) {
  WalnutBand band;
  band.band_low = field(j, "band_low").get<std::int64_t>();
  band.band_high = field(j, "band_high").get<std::int64_t>();
  for (const json& e : field(j, "entries"))
    band.entries.emplace(std::make_pair(field(e, "j").get<std::int64_t>(), field(e, "k").get<std::int64_t>()),
                         periodic_from_json(field(e, "entry")));
  return band;
}

json to_json(const SqrtInverseReport& r) {
  return json{{"a", to_string(r.a)},
              {"b", to_string(r.b)},
              {"max_err_beta_gamma", r.max_err_beta_gamma},
              {"max_err_identity", r.max_err_identity},
              {"trials", r.trials},
              {"seed", r.seed},
              {"beta_G0_over_b", pair_json(r.beta_g0.first, r.beta_g0.second)},
              {"gamma_G0_over_b", pair_json(r.gamma_g0.first, r.gamma_g0.second)}};
}

SqrtInverseReport sqrt_report_from_json(const json& j) {
  SqrtInverseReport r;
  r.a = rational_from_json(field(j, "a"));
  r.b = rational_from_json(field(j, "b"));
  r.max_err_beta_gamma = number(field(j, "max_err_beta_gamma"));
  r.max_err_identity = number(field(j, "max_err_identity"));
  r.trials = field(j, "trials").get<int>();
  r.seed = field(j, "seed").get<std::uint64_t>();
  const Enclosure beta = enclosure_from_json(field(j, "beta_G0_over_b"));
  const Enclosure gamma = enclosure_from_json(field(j, "gamma_G0_over_b"));
  r.beta_g0 = {beta.lower, beta.upper};
  r.gamma_g0 = {gamma.lower, gamma.upper};
  return r;
}

json to_json(const std::vector<DecayRow>& rows) {
  json out = json::array();
  for (const DecayRow& r : rows)
    out.push_back({{"n", r.n}, {"norm_sq", to_json(r.norm_sq)}, {"energy", to_json(r.energy)},
                   {"ratio", to_json(r.ratio)}});
  return out;
}

std::vector<DecayRow> decay_rows_from_json(const json& j) {
  if (!j.is_array()) throw InputError("decay table must be an array");
  std::vector<DecayRow> rows;
  for (const json& r : j)
    rows.push_back({field(r, "n").get<std::int64_t>(), scalar_from_json(field(r, "norm_sq"), true),
                    scalar_from_json(field(r, "energy"), true), scalar_from_json(field(r, "ratio"), true)});
  return rows;
}

}  // namespace gabor::io
