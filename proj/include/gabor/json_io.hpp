#pragma once

#include <json.hpp>

#include "gabor/abc.hpp"
#include "gabor/conditions.hpp"
#include "gabor/frameset.hpp"
#include "gabor/fundamental.hpp"
#include "gabor/witnesses.hpp"

namespace gabor::io {

using nlohmann::json;

/// Exact rationals are written as "p/q" (or "p") strings.
json to_json(const Rational& q);
Rational rational_from_json(const json& j, bool allow_float = false);

/// Real exact: "p/q"; complex exact: {"re", "im"}; approx: number or [re, im].
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, bool allow_float = false);

/// Exact pieces: [lo_num, lo_den, hi_num, hi_den, "re", "im"];
/// approx pieces: [lo, hi, re, im] as floats.
json to_json(const StepFunction& f);
/// Also accepts the short form [lo, hi, value] with "p/q" or integer
/// entries; floats only when `allow_float`.
StepFunction step_from_json(const json& j, bool allow_float = false);

json to_json(const PeriodicStepFunction& f);
PeriodicStepFunction periodic_from_json(const json& j);

json to_json(const GkTable& t);
GkTable gk_table_from_json(const json& j);

json to_json(const CcReport& r);
CcReport cc_report_from_json(const json& j);

json to_json(const FrameVerdict& v);
FrameVerdict frame_verdict_from_json(const json& j);

json to_json(const ExponentSet& e, const FrameSetReport& r);
FrameSetReport frame_set_report_from_json(const json& j);

json to_json(const AbcQuery& q, const AbcVerdict& v);
AbcVerdict abc_verdict_from_json(const json& j);

json to_json(const WalnutBand& band);
WalnutBand walnut_band_from_json(const json& j);

json to_json(const SqrtInverseReport& r);
SqrtInverseReport sqrt_report_from_json(const json& j);

json to_json(const std::vector<DecayRow>& rows);
std::vector<DecayRow> decay_rows_from_json(const json& j);

}  // namespace gabor::io
