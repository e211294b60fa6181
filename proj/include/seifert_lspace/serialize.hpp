#pragma once

// JSON encoding. Integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise; rationals are {"num", "den"} with infinity
// written {"num": 1, "den": 0}.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

#include "seifert_lspace/exact_arith.hpp"
#include "seifert_lspace/families.hpp"
#include "seifert_lspace/lspace.hpp"
#include "seifert_lspace/seifert.hpp"
#include "seifert_lspace/twist.hpp"

namespace seifert_lspace {

using Json = nlohmann::json;

inline Json integer_json(const Integer& x) {
  if (fits_int64(x)) return x.convert_to<std::int64_t>();
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::string_view digits = !s.empty() && s[0] == '-' ? std::string_view(s).substr(1) : std::string_view(s);
    if (!detail::all_digits(digits)) throw Error(ErrorCode::Parse, "not an integer: '" + s + "'");
    return Integer(s);
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

inline Json rational_json(const Rational& r) { return {{"num", integer_json(r.num())}, {"den", integer_json(r.den())}}; }

inline Json ext_rational_json(const ExtRational& r) {
  if (r.is_infinite()) return {{"num", 1}, {"den", 0}};
  return rational_json(r.value());
}

inline ExtRational ext_rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error(ErrorCode::Parse, "expected {num, den}, got " + j.dump());
  return ExtRational::from_pair(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

inline Rational rational_from_json(const Json& j) {
  const ExtRational r = ext_rational_from_json(j);
  if (r.is_infinite()) throw Error(ErrorCode::ZeroDenominator, "expected a finite rational");
  return r.value();
}

inline Json form_json(const SeifertForm& f) {
  Json j{{"base", f.base == Base::S2 ? "S2" : "RP2"}, {"text", to_string(f)}};
  if (f.base == Base::RP2) return j;
  j["b"] = integer_json(f.b);
  j["slopes"] = Json::array();
  for (const auto& r : f.slopes) j["slopes"].push_back(rational_json(r));
  j["degenerate"] = f.degenerate_count;
  return j;
}

inline SeifertForm form_from_json(const Json& j) {
  if (j.at("base") == "RP2") return SeifertForm::rp2();
  SeifertForm f;
  f.b = integer_from_json(j.at("b"));
  for (const auto& r : j.at("slopes")) f.slopes.push_back(rational_from_json(r));
  f.degenerate_count = j.at("degenerate").get<int>();
  if (f != normalize(f)) throw Error(ErrorCode::Parse, "form is not normalized: " + j.dump());
  return f;
}

inline Json h1_json(const H1Order& h) {
  if (h.is_infinite()) return "inf";
  return integer_json(h.value());
}

inline Json classification_json(const Classification& c) {
  Json j{{"tag", to_string(c.tag)}};
  if (c.h1) j["h1"] = h1_json(*c.h1);
  if (!c.summand_orders.empty()) {
    j["summand_orders"] = Json::array();
    for (const auto& o : c.summand_orders) j["summand_orders"].push_back(integer_json(o));
  }
  return j;
}

inline Json verdict_json(const LSpaceVerdict& v) {
  Json j{{"lspace", v.is_lspace}, {"reason", to_string(v.reason)}};
  if (v.witness) j["witness"] = {{"k", integer_json(v.witness->k)}, {"a", integer_json(v.witness->a)}};
  if (v.witness || v.search_bound) j["witness_on_dual"] = v.witness_on_dual;
  if (v.search_bound) j["search_bound"] = integer_json(*v.search_bound);
  return j;
}

inline Reason reason_from_string(const std::string& s) {
  for (Reason r : {Reason::BLarge, Reason::LensNotS2xS1, Reason::ConnectedSumOfLSpaces, Reason::RP2Base,
                   Reason::InfiniteH1, Reason::NoWitnessExhaustive, Reason::Witness, Reason::DualWitness})
    if (s == to_string(r)) return r;
  throw Error(ErrorCode::Parse, "unknown reason '" + s + "'");
}

inline LSpaceVerdict verdict_from_json(const Json& j) {
  LSpaceVerdict v;
  v.is_lspace = j.at("lspace").get<bool>();
  v.reason = reason_from_string(j.at("reason").get<std::string>());
  if (j.contains("witness"))
    v.witness = FoliationWitness{integer_from_json(j["witness"].at("k")), integer_from_json(j["witness"].at("a"))};
  v.witness_on_dual = j.value("witness_on_dual", false);
  if (j.contains("search_bound")) v.search_bound = integer_from_json(j["search_bound"]);
  return v;
}

inline Json threshold_json(const ThirdSlotThreshold& th) {
  Json j{{"b", integer_json(th.b)}, {"r1", rational_json(th.r1)}, {"r2", rational_json(th.r2)}, {"kind", to_string(th.kind)}};
  if (th.kind == SetKind::UpClosed || th.kind == SetKind::DownClosed) {
    j["t"] = rational_json(th.t);
    j["attained"] = th.attained;
  }
  return j;
}

inline Json seiferter_json(const SeiferterData& d) {
  return {{"b", integer_json(d.b)},          {"r1", rational_json(d.r1)},          {"r2", rational_json(d.r2)},
          {"alpha", integer_json(d.alpha)},  {"beta", integer_json(d.beta)},       {"alpha3", integer_json(d.alpha3)},
          {"beta3", integer_json(d.beta3)},  {"m", integer_json(d.m)},             {"l", integer_json(d.l)},
          {"realizable", d.realizable}};
}

inline SeiferterData seiferter_from_json(const Json& j) {
  SeiferterData d;
  d.b = integer_from_json(j.at("b"));
  d.r1 = rational_from_json(j.at("r1"));
  d.r2 = rational_from_json(j.at("r2"));
  d.alpha = integer_from_json(j.at("alpha"));
  d.beta = integer_from_json(j.at("beta"));
  d.alpha3 = integer_from_json(j.at("alpha3"));
  d.beta3 = integer_from_json(j.at("beta3"));
  d.m = integer_from_json(j.at("m"));
  d.l = integer_from_json(j.at("l"));
  d.realizable = j.value("realizable", false);
  return d;
}

inline Json tail_json(const TailCertificate& t) {
  Json j{{"status", to_string(t.status)}, {"lspace", t.lspace}, {"start", integer_json(t.start)},
         {"shifted_b", integer_json(t.shifted_b)}};
  if (t.slope_bound) {
    j["slope_bound"] = rational_json(*t.slope_bound);
    j["strict"] = t.strict;
  }
  if (t.threshold) j["threshold"] = threshold_json(*t.threshold);
  return j;
}

inline Json record_json(const FamilyRecord& r) {
  return {{"n", r.n},
          {"slope", integer_json(r.slope)},
          {"fiber", ext_rational_json(r.fiber)},
          {"form", form_json(r.form)},
          {"classification", classification_json(r.classification)},
          {"verdict", verdict_json(r.verdict)}};
}

inline Json report_json(const FamilyReport& rep) {
  Json j{{"window", {rep.window.lo, rep.window.hi}},
         {"regime", to_string(rep.regime)},
         {"limit", form_json(rep.limit)},
         {"limit_verdict", verdict_json(rep.limit_verdict)},
         {"tail_pos", tail_json(rep.tail_pos)},
         {"tail_neg", tail_json(rep.tail_neg)},
         {"exceptional_n", rep.exceptional_n},
         {"middle_decided", rep.middle_decided}};
  j["pole"] = rep.pole ? integer_json(*rep.pole) : Json(nullptr);
  j["middle_non_lspace"] = Json::array();
  for (const auto& n : rep.middle_non_lspace) j["middle_non_lspace"].push_back(integer_json(n));
  if (auto all = rep.non_lspace_n()) {
    j["non_lspace_n"] = Json::array();
    for (const auto& n : *all) j["non_lspace_n"].push_back(integer_json(n));
  }
  j["records"] = Json::array();
  for (const auto& r : rep.records) j["records"].push_back(record_json(r));
  return j;
}

inline Json guarantee_json(const Guarantee& g) {
  Json j{{"kind", to_string(g.kind)}};
  if (g.kind == GuaranteeKind::NLe) j["bound"] = integer_json(g.bound);
  if (g.kind == GuaranteeKind::AllNExcept) {
    j["exceptions"] = Json::array();
    for (const auto& e : g.exceptions) j["exceptions"].push_back(integer_json(e));
  }
  return j;
}

inline Json run_json(const FamilyRun& run) {
  Json params = Json::object();
  for (const auto& [k, v] : run.spec.params) params[k] = integer_json(v);
  Json j{{"name", run.spec.name}, {"params", params}, {"description", run.spec.description},
         {"claimed", guarantee_json(run.spec.claimed)}, {"mirrored", run.spec.mirrored}};
  if (run.spec.data) {
    j["seiferter"] = seiferter_json(*run.spec.data);
    j["index_map"] = {{"sign", run.spec.index_sign}, {"offset", integer_json(run.spec.index_offset)}};
  }
  if (!run.spec.indices.empty()) {
    j["fiber_indices"] = Json::array();
    for (const auto& i : run.spec.indices) j["fiber_indices"].push_back(integer_json(i));
  }
  if (run.spec.berge_n) j["berge_n"] = integer_json(*run.spec.berge_n);
  j["members"] = Json::array();
  for (const auto& m : run.members) {
    Json mj{{"n", integer_json(m.n)}, {"form", form_json(m.form)}, {"verdict", verdict_json(m.verdict)}};
    mj["slope"] = m.slope ? integer_json(*m.slope) : Json(nullptr);
    j["members"].push_back(std::move(mj));
  }
  Json check{{"window_ok", run.check.window_ok}};
  check["window_failures"] = Json::array();
  for (const auto& n : run.check.window_failures) check["window_failures"].push_back(integer_json(n));
  check["global_ok"] = run.check.global_ok ? Json(*run.check.global_ok) : Json(nullptr);
  j["check"] = check;
  if (run.report) j["report"] = report_json(*run.report);
  return j;
}

/// Adds an "approx" decimal next to every {num, den} object. For display
/// only; nothing reads it back.
inline void add_approximations(Json& j) {
  if (j.is_object()) {
    if (j.size() == 2 && j.contains("num") && j.contains("den")) {
      const ExtRational r = ext_rational_from_json(j);
      j["approx"] = r.is_infinite() ? Json("inf") : Json(r.value().to_double());
      return;
    }
    for (auto& [k, v] : j.items()) add_approximations(v);
  } else if (j.is_array()) {
    for (auto& v : j) add_approximations(v);
  }
}

}  // namespace seifert_lspace
