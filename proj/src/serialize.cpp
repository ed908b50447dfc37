#include "dnq/serialize.hpp"

namespace dnq {

namespace {

json elts(const auto& range, JsonStyle style) {
  json arr = json::array();
  for (const RingElt& x : range) arr.push_back(to_json(x, style));
  return arr;
}

std::string_view method_name(SolveMethod m) { return m == SolveMethod::UnitGroup ? "unit-group" : "bounded-scan"; }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidArgument, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

std::string pretty_elt(const RingElt& x) {
  if (x.im == 0) return to_string(x.re);
  std::string out = x.re == 0 ? "" : to_string(x.re) + (x.im < 0 ? " - " : " + ");
  const Int mag = x.re == 0 ? x.im : abs(x.im);
  if (mag == -1) out += "-";
  else if (mag != 1) out += to_string(mag);
  return out + "√d";
}

json to_json(const Int& n) { return to_string(n); }

json to_json(const RingElt& x, JsonStyle style) {
  if (style.pretty) return pretty_elt(x);
  return json{{"re", to_string(x.re)}, {"im", to_string(x.im)}};
}

json to_json(const ClassTag& cls) {
  return json{{"label", cls.label()},
              {"family", cls.family() == ClassFamily::S ? "S" : "T"},
              {"m", to_string(cls.m)},
              {"k", to_string(cls.k)},
              {"case", cls.case_id() ? json(*cls.case_id()) : json(nullptr)}};
}

json to_json(const PellSolutionSet& s, JsonStyle style) {
  return json{{"d", to_json(s.d)},
              {"target", to_json(s.target)},
              {"solvable", s.solvable},
              {"primitives", elts(s.primitives, style)},
              {"method", method_name(s.method)},
              {"search_bound", to_json(s.search_bound)}};
}

json to_json(const NormEvidence& e, JsonStyle style) {
  return json{{"status", solvability_name(e.status)},
              {"witness", e.witness ? to_json(*e.witness, style) : json(nullptr)},
              {"method", e.method},
              {"search_bound", to_json(e.search_bound)}};
}

json to_json(const HypothesisReport& r, JsonStyle style) {
  return json{{"d", to_json(r.d)},
              {"holds", r.holds()},
              {"d_mod_48", r.d_mod_48},
              {"norm_minus_one", to_json(r.norm_minus_one, style)},
              {"norm_six", to_json(r.norm_six, style)},
              {"norm_minus_six", to_json(r.norm_minus_six, style)}};
}

json to_json(const Quadruple& q, JsonStyle style) {
  json roots = json::array();
  for (std::size_t i = 0; i < kPairs.size(); ++i) {
    roots.push_back(json{{"pair", {kPairs[i].first, kPairs[i].second}}, {"root", to_json(q.roots[i], style)}});
  }
  return json{{"d", to_json(q.d)},
              {"n", to_json(q.n, style)},
              {"elements", elts(q.elements, style)},
              {"roots", roots},
              {"case", q.case_id},
              {"seed", to_json(q.seed, style)},
              {"seed_index", q.seed_index},
              {"r", to_json(q.r, style)},
              {"aux", q.aux ? to_json(*q.aux, style) : json(nullptr)},
              {"scale_steps", q.scale_steps}};
}

json to_json(const VerifyReport& r, JsonStyle style) {
  json roots = json::array();
  for (std::size_t i = 0; i < kPairs.size(); ++i) {
    roots.push_back(json{{"pair", {kPairs[i].first, kPairs[i].second}},
                         {"root", r.roots[i] ? to_json(*r.roots[i], style) : json(nullptr)}});
  }
  json failing = json::array();
  for (auto [i, j] : r.failing_pairs) failing.push_back({i, j});
  return json{{"ok", r.ok()}, {"nonzero", r.nonzero}, {"distinct", r.distinct}, {"roots", roots},
              {"failing_pairs", failing}};
}

json to_json(const DiffSquaresResult& r, JsonStyle style) {
  json j{{"verdict", verdict_name(r.verdict)}, {"method", r.method}};
  if (r.witness) j["witness"] = {{"alpha", to_json(r.witness->first, style)}, {"beta", to_json(r.witness->second, style)}};
  if (r.plus_two) j["plus_two"] = to_json(*r.plus_two, style);
  if (r.minus_two) j["minus_two"] = to_json(*r.minus_two, style);
  if (r.cofactor_norm) j["cofactor_norm"] = to_json(*r.cofactor_norm);
  if (!r.divisor_sets.empty()) {
    json sets = json::array();
    for (const auto& s : r.divisor_sets) sets.push_back(to_json(s, style));
    j["divisor_sets"] = std::move(sets);
  }
  j["search_bound"] = to_json(r.search_bound);
  return j;
}

json to_json(const NormPm2Certificate& c, JsonStyle style) {
  return json{{"plus_two", to_json(c.plus_two, style)}, {"minus_two", to_json(c.minus_two, style)}};
}

json to_json(const CounterexampleRecord& r, JsonStyle style) {
  return json{{"d", to_json(r.d)},
              {"n", to_json(r.n, style)},
              {"witness", {{"m", to_json(r.witness.m)}, {"k", to_json(r.witness.k)}, {"p", to_json(r.witness.p)}}},
              {"nonrep_cert", to_json(r.nonrep_cert, style)},
              {"representability", to_json(r.representability, style)},
              {"quadruple", to_json(r.quadruple, style)}};
}

json to_json(const DCandidate& c, JsonStyle style) {
  return json{{"lprime", to_json(c.lprime)},
              {"sign", c.sign > 0 ? "+" : "-"},
              {"l", to_json(c.l)},
              {"p", to_json(c.p)},
              {"d", to_json(c.d)},
              {"witness6", to_json(c.witness6, style)},
              {"norm_minus_one_verified", c.norm_minus_one_verified},
              {"norm_six_verified", c.norm_six_verified}};
}

Int int_from_json(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw Error(Errc::InvalidArgument, "expected a decimal string, got " + j.dump());
}

RingElt elt_from_json(const json& j) { return {int_from_json(field(j, "re")), int_from_json(field(j, "im"))}; }

Quadruple quadruple_from_json(const json& j) {
  Quadruple q;
  q.d = int_from_json(field(j, "d"));
  q.n = elt_from_json(field(j, "n"));
  const json& es = field(j, "elements");
  const json& rs = field(j, "roots");
  if (!es.is_array() || es.size() != 4 || !rs.is_array() || rs.size() != 6) {
    throw Error(Errc::InvalidArgument, "a quadruple needs 4 elements and 6 roots");
  }
  for (std::size_t i = 0; i < 4; ++i) q.elements[i] = elt_from_json(es[i]);
  for (std::size_t i = 0; i < 6; ++i) q.roots[i] = elt_from_json(field(rs[i], "root"));
  q.case_id = field(j, "case").get<int>();
  q.seed = elt_from_json(field(j, "seed"));
  q.seed_index = field(j, "seed_index").get<std::size_t>();
  q.r = elt_from_json(field(j, "r"));
  if (const json& aux = field(j, "aux"); !aux.is_null()) q.aux = elt_from_json(aux);
  q.scale_steps = field(j, "scale_steps").get<int>();
  return q;
}

}  // namespace dnq
