#pragma once

#include <string>

#include <json.hpp>

#include "dnq/builder.hpp"
#include "dnq/conjecture.hpp"
#include "dnq/pell.hpp"
#include "dnq/quadring.hpp"

namespace dnq {

using json = nlohmann::ordered_json;

/// Integers are always written as decimal strings. With `pretty`, ring
/// elements become "a + b√d" strings instead of {"re", "im"} objects.
struct JsonStyle {
  bool pretty = false;
};

std::string pretty_elt(const RingElt& x);

json to_json(const Int& n);
json to_json(const RingElt& x, JsonStyle style = {});
json to_json(const ClassTag& cls);
json to_json(const PellSolutionSet& s, JsonStyle style = {});
json to_json(const NormEvidence& e, JsonStyle style = {});
json to_json(const HypothesisReport& r, JsonStyle style = {});
json to_json(const Quadruple& q, JsonStyle style = {});
json to_json(const VerifyReport& r, JsonStyle style = {});
json to_json(const DiffSquaresResult& r, JsonStyle style = {});
json to_json(const NormPm2Certificate& c, JsonStyle style = {});
json to_json(const CounterexampleRecord& r, JsonStyle style = {});
json to_json(const DCandidate& c, JsonStyle style = {});

/// Inverse of the non-pretty forms. Throws InvalidArgument on malformed input.
Int int_from_json(const json& j);
RingElt elt_from_json(const json& j);
Quadruple quadruple_from_json(const json& j);

}  // namespace dnq
