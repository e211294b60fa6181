#pragma once

// Embedded regression corpus: worked examples with their expected results,
// replayed by `seifert-lspace reproduce`.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seifert_lspace/families.hpp"
#include "seifert_lspace/lspace.hpp"
#include "seifert_lspace/seifert.hpp"
#include "seifert_lspace/twist.hpp"

namespace seifert_lspace {

enum class CaseKind {
  Decide,       // form text -> verdict summary
  H1,           // form text -> |H_1|
  Classify,     // form text -> tag
  Normalize,    // form text -> normal form
  Threshold,    // "b r1 r2" -> third slot set
  Candidates,   // "p q l" -> torus_pq_candidates
  TorusGuarantee,  // "p q l" -> guarantee kind
  Member,       // "family k=v ... n=N" -> slope, form and verdict of one member
  Scan,         // "family k=v ... lo..hi" -> non-L-space members in the window
  Claim,        // "family k=v ..." -> guarantee check on the default window
  BergeSlope,   // "kind p" -> slope of the Berge surgery
  Slope,        // "m l n" -> m + n l^2
  Distinct,     // "l n n2" -> distinctness_bound
  Satellite,    // "w m g" -> satellite_guarantee
};

inline const char* to_string(CaseKind k) {
  switch (k) {
    case CaseKind::Decide: return "decide";
    case CaseKind::H1: return "h1";
    case CaseKind::Classify: return "classify";
    case CaseKind::Normalize: return "normalize";
    case CaseKind::Threshold: return "threshold";
    case CaseKind::Candidates: return "candidates";
    case CaseKind::TorusGuarantee: return "torus-guarantee";
    case CaseKind::Member: return "member";
    case CaseKind::Scan: return "scan";
    case CaseKind::Claim: return "claim";
    case CaseKind::BergeSlope: return "berge-slope";
    case CaseKind::Slope: return "slope";
    case CaseKind::Distinct: return "distinct";
    case CaseKind::Satellite: return "satellite";
  }
  return "?";
}

struct CorpusCase {
  std::string name;
  CaseKind kind;
  std::string input;
  std::string expected;
  std::string anchor;  // the claim being replayed
};

// ---------------------------------------------------------------------------
// Shared text helpers

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline Integer parse_integer(std::string_view s) {
  std::size_t lead = 0;
  std::string_view t = detail::trim(s, lead);
  const std::string_view digits = !t.empty() && (t[0] == '-' || t[0] == '+') ? t.substr(1) : t;
  if (!detail::all_digits(digits)) throw ParseError(lead, "expected an integer, got '" + std::string(s) + "'");
  return Integer(std::string(t[0] == '+' ? t.substr(1) : t));
}

/// "lo..hi"
inline Window parse_window(std::string_view s) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) throw ParseError(0, "expected a window lo..hi, got '" + std::string(s) + "'");
  const Integer lo = parse_integer(s.substr(0, dots));
  const Integer hi = parse_integer(s.substr(dots + 2));
  if (!fits_int64(lo) || !fits_int64(hi) || lo > hi)
    throw Error(ErrorCode::InvalidParameters, "bad window '" + std::string(s) + "'");
  return {lo.convert_to<std::int64_t>(), hi.convert_to<std::int64_t>()};
}

/// "k=v" words into a parameter map.
inline std::map<std::string, Integer> parse_params(const std::vector<std::string>& words) {
  std::map<std::string, Integer> out;
  for (const auto& w : words) {
    const auto eq = w.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(0, "expected name=value, got '" + w + "'");
    out[w.substr(0, eq)] = parse_integer(std::string_view(w).substr(eq + 1));
  }
  return out;
}

inline std::string verdict_summary(const LSpaceVerdict& v) {
  std::string s = std::string(v.is_lspace ? "lspace" : "not-lspace") + " " + to_string(v.reason);
  if (v.witness) s += " witness=(" + v.witness->k.str() + "," + v.witness->a.str() + ")" + (v.witness_on_dual ? " dual" : "");
  return s;
}

inline std::string threshold_summary(const ThirdSlotThreshold& th) {
  std::string s = to_string(th.kind);
  if (th.kind == SetKind::UpClosed || th.kind == SetKind::DownClosed)
    s += " t=" + th.t.str() + (th.attained ? " attained" : " open");
  return s;
}

inline std::string candidates_summary(const std::vector<TorusCandidate>& cs) {
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i)
    s += (i ? ", (" : "(") + cs[i].B.str() + ", " + cs[i].r1.str() + ", " + cs[i].r2.str() + ")";
  return s + "]";
}

inline std::string integer_list(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

inline FamilySpec build_family(const std::vector<std::string>& words, std::size_t params_end) {
  if (words.empty()) throw ParseError(0, "missing family name");
  const FamilyBuilder& b = find_family_builder(words[0]);
  return b.build(parse_params({words.begin() + 1, words.begin() + static_cast<std::ptrdiff_t>(params_end)}));
}

// ---------------------------------------------------------------------------

/// The result of one case as a single line, in the format of `expected`.
inline std::string evaluate(const CorpusCase& c) {
  const auto words = split_words(c.input);
  auto need = [&](std::size_t n) {
    if (words.size() != n) throw ParseError(0, "expected " + std::to_string(n) + " fields in '" + c.input + "'");
  };
  switch (c.kind) {
    case CaseKind::Decide: return verdict_summary(decide(parse_seifert(c.input)));
    case CaseKind::H1: return h1_order(parse_seifert(c.input)).str();
    case CaseKind::Classify: return to_string(classify(parse_seifert(c.input)).tag);
    case CaseKind::Normalize: return to_string(parse_seifert(c.input));
    case CaseKind::Threshold:
      need(3);
      return threshold_summary(third_slot_threshold(parse_integer(words[0]), parse_rational(words[1]), parse_rational(words[2])));
    case CaseKind::Candidates:
      need(3);
      return candidates_summary(torus_pq_candidates(parse_integer(words[0]), parse_integer(words[1]), parse_integer(words[2])));
    case CaseKind::TorusGuarantee:
      need(3);
      return theorem15_guarantee(parse_integer(words[0]), parse_integer(words[1]), parse_integer(words[2])).str();
    case CaseKind::Member: {
      if (words.size() < 2 || words.back().rfind("n=", 0) != 0) throw ParseError(0, "member input ends with n=N");
      const FamilySpec spec = build_family(words, words.size() - 1);
      const FamilyMember m = member(spec, parse_integer(words.back().substr(2)));
      return "slope=" + (m.slope ? m.slope->str() : std::string("?")) + " " + to_string(m.form) + " " +
             (m.verdict.is_lspace ? "lspace" : "not-lspace");
    }
    case CaseKind::Scan: {
      if (words.size() < 2) throw ParseError(0, "scan input ends with a window");
      const FamilySpec spec = build_family(words, words.size() - 1);
      const FamilyRun run = run_family(spec, parse_window(words.back()));
      std::vector<Integer> bad;
      for (const auto& m : run.members)
        if (!m.verdict.is_lspace) bad.push_back(m.n);
      return "non-lspace " + integer_list(bad);
    }
    case CaseKind::Claim: {
      const FamilySpec spec = build_family(words, words.size());
      const FamilyRun run = run_family(spec);
      std::string s = spec.claimed.str() + (run.check.window_ok ? " window-ok" : " window-fail");
      if (run.check.global_ok) s += *run.check.global_ok ? " global-ok" : " global-fail";
      return s;
    }
    case CaseKind::BergeSlope: {
      need(2);
      const std::string& k = words[0];
      const SporadicKind kind = k == "a" ? SporadicKind::a : k == "b" ? SporadicKind::b : k == "c" ? SporadicKind::c
                              : k == "d" ? SporadicKind::d
                                         : throw ParseError(0, "kind must be a, b, c or d");
      return berge_sporadic_slope(kind, parse_integer(words[1])).str();
    }
    case CaseKind::Slope: {
      need(3);
      SeiferterData d;
      d.m = parse_integer(words[0]);
      d.l = parse_integer(words[1]);
      return surgery_slope(d, parse_integer(words[2])).str();
    }
    case CaseKind::Distinct:
      need(3);
      return distinctness_bound(parse_integer(words[0]), parse_integer(words[1]), parse_integer(words[2])) ? "true" : "false";
    case CaseKind::Satellite:
      need(3);
      try {
        return satellite_guarantee(parse_integer(words[0]), parse_integer(words[1]), parse_integer(words[2])) ? "true" : "false";
      } catch (const Error& e) {
        if (e.code() == ErrorCode::PreconditionFailed) return "PreconditionFailed";
        throw;
      }
  }
  return "";
}

inline const std::vector<CorpusCase>& corpus() {
  static const std::vector<CorpusCase> cases = {
      {"non-lspace-seiferter-limit", CaseKind::Decide, "SFS[S2; -2; 2/3, 2/3, 2/3]", "not-lspace InfiniteH1 witness=(2,1) dual",
       "S^2(-1/3, -1/3, 2/3) is not an L-space: k = 2, a = 1 in the dual triple"},
      {"sorted-triple-one-third", CaseKind::Decide, "SFS[S2; -1; 1/3, 1/3, 1/3]", "not-lspace InfiniteH1 witness=(2,1)",
       "(1/3, 1/3, 1/3) < (1/2, 1/2, 1/2)"},
      {"seiferter-m-zero-raw", CaseKind::Decide, "SFS[S2; 0; inf, -1/3, 1/3]", "lspace ConnectedSumOfLSpaces",
       "the (0, m) branch with m = 0 is an L-space"},
      {"seiferter-m-minus-one-raw", CaseKind::Decide, "SFS[S2; 0; 1, -1/3, 2/5]", "lspace LensNotS2xS1",
       "the (0, m) branch with m = -1 is an L-space"},
      {"pair-sum-fast-path", CaseKind::Decide, "SFS[S2; -1; 1/2, 2/3, 4/5]", "lspace NoWitnessExhaustive",
       "S^2(-1, r1, r2, r) with r1 + r2 >= 1 is an L-space for every r"},
      {"b-nonnegative", CaseKind::Decide, "SFS[S2; 1; 1/2, 1/3, 1/7]", "lspace BLarge",
       "b >= 0 or b <= -3 gives an L-space"},
      {"b-minus-one-slot", CaseKind::Normalize, "SFS[S2; -1; 1/3, 1/5, 1]", "SFS[S2; 0; 1/5, 1/3]",
       "S^2(-1, b1/a1, b2/a2, 1) = S^2(b1/a1, b2/a2)"},
      {"s2xs1-euler", CaseKind::H1, "SFS[S2; -1; 1/2, 1/2]", "inf", "r1 + r2 = 1 and b + r = -1 give S^2 x S^1"},
      {"s2xs1-tag", CaseKind::Classify, "SFS[S2; -1; 1/2, 1/2]", "S2xS1", "S^2(-1; 1/2, 1/2) is S^2 x S^1"},
      {"limit-connected-sum", CaseKind::Classify, "SFS[S2; 0; 1/2, 2/3, inf]", "ConnectedSumOfLensSpaces",
       "a degenerate fiber gives a connected sum of two lens spaces"},
      {"not-torus-exterior-x0", CaseKind::H1, "SFS[S2; 0; 2/3, -2/5]", "4", "|H_1(S^2(2/3, -2/5, x))| = |4 + 15x| at x = 0"},
      {"not-torus-exterior-x1", CaseKind::H1, "SFS[S2; 0; 2/3, -2/5, 1]", "19", "|H_1(S^2(2/3, -2/5, x))| = |4 + 15x| at x = 1"},
      {"threshold-pair-sum", CaseKind::Threshold, "-1 1/2 2/3", "UpClosed t=0 open", "every third slope works once r1 + r2 >= 1"},
      {"threshold-b-zero", CaseKind::Threshold, "0 1/3 1/5", "All", "b = 0 is always an L-space"},
      {"threshold-dual-two-thirds", CaseKind::Threshold, "-2 2/3 2/3", "DownClosed t=1/2 attained",
       "S^2(-2; 2/3, 2/3, r) is an L-space exactly for r <= 1/2"},
      {"trefoil-candidates", CaseKind::Candidates, "3 2 5", "[(3, 2/3, 1/2)]", "M_c(T_{3,2}, 6) with l = 5"},
      {"meridian-candidates", CaseKind::Candidates, "3 2 1", "[(-1, 2/3, 1/2)]", "meridional seiferter, m_n = 6 + n"},
      {"trefoil-torus-guarantee", CaseKind::TorusGuarantee, "3 2 5", "AllN", "5^2 > 2 * 3 * 2"},
      {"cable-torus-guarantee", CaseKind::TorusGuarantee, "13 2 9", "AllN", "(4p+1)^2 >= 2(6p+1)p at p = 2"},
      {"small-linking-torus-guarantee", CaseKind::TorusGuarantee, "5 3 2", "NGeMinus1", "4 < 30"},
      {"trefoil-family", CaseKind::Claim, "torus-seiferter p=3 q=2 l=5", "AllN window-ok global-ok",
       "K_n is an L-space knot for all integers n"},
      {"trefoil-pole", CaseKind::Member, "torus-seiferter p=3 q=2 l=5 n=0", "slope=6 SFS[S2; 3; 1/2, 2/3, inf] lspace",
       "K_0(m_0) = K(m) is a connected sum of two lens spaces"},
      {"cable-slope", CaseKind::Slope, "7 5 1", "32", "(k, 22p^2 + 9p + 1) at p = 1"},
      {"tunnel-slope", CaseKind::Slope, "71 14 2", "463", "K_{n,0}(196n + 71)"},
      {"p-plus-q", CaseKind::Claim, "twisted-torus-p+q p=5 q=2", "AllN window-ok global-ok", "K(p, q; p + q, n), p, q >= 2"},
      {"p-minus-q", CaseKind::Claim, "twisted-torus-p-q p=5 q=2", "NGeMinus1 window-ok global-ok", "K(p, q; p - q, n) for n >= -1"},
      {"three-p-plus-one", CaseKind::Claim, "twisted-torus-3p+1 p=1", "AllN window-ok global-ok", "(4p+1)^2 > 2(3p+1)(2p+1)"},
      {"three-p-plus-two", CaseKind::Claim, "twisted-torus-3p+2 p=1", "AllN window-ok global-ok", "K(3p+2, 2p+1; 4p+3, n)"},
      {"two-p-plus-three", CaseKind::Claim, "twisted-torus-2p+3 p=1", "NGeMinus1 window-ok global-ok", "K(2p+3, 2p+1; 2p+2, n)"},
      {"unknot-m0-n1", CaseKind::Member, "unknot-seiferter m=0 p=3 n=1", "slope=9 SFS[S2; -2; 1/3, 2/3] lspace",
       "S^2(-n-1, (p+1)/2p, (p-1)/2p)"},
      {"unknot-m0-n0", CaseKind::Member, "unknot-seiferter m=0 p=3 n=0", "slope=0 SFS[S2; -1; 1/3, 2/3] not-lspace",
       "K_{m,p,n}(m_{p,n}) = O(0) = S^2 x S^1"},
      {"unknot-m-1-n1", CaseKind::Member, "unknot-seiferter m=-1 p=3 n=1", "slope=15 SFS[S2; -1; 2/5, 2/3, inf] lspace",
       "n = 1 gives a connected sum of two lens spaces"},
      {"unknot-m0-scan", CaseKind::Scan, "unknot-seiferter m=0 p=3 -5..5", "non-lspace [0]", "L-space except (m, n) = (0, 0)"},
      {"unknot-m0-claim", CaseKind::Claim, "unknot-seiferter m=0 p=3", "AllNExcept(0) window-ok global-ok",
       "L-space except (m, n) = (0, 0)"},
      {"tunnel-a-n0", CaseKind::Member, "tunnel2-A n=0", "slope=71 SFS[S2; -1; 1/2, 5/7, 4/5] lspace", "5/7 + 1/2 >= 1"},
      {"tunnel-b-n0", CaseKind::Member, "tunnel2-B n=0", "slope=71 SFS[S2; -1; 1/2, 5/7, 4/5] lspace",
       "S^2(-1, (7n+5)/(10n+7), 4/5, 1/2)"},
      {"tunnel-a-n-1", CaseKind::Member, "tunnel2-A n=-1", "slope=-125 SFS[S2; -1; 1/2, 5/7, 7/9] lspace", "K_{n,0}(196n + 71)"},
      {"tunnel-a-scan", CaseKind::Scan, "tunnel2-A -10..10", "non-lspace []", "K_{n,0} is an L-space knot for every n"},
      {"tunnel-b-claim", CaseKind::Claim, "tunnel2-B", "AllN window-ok global-ok", "K_{0,n} is an L-space knot for every n"},
      {"sporadic-a-p2", CaseKind::BergeSlope, "a 2", "107", "22p^2 + 9p + 1 at p = 2"},
      {"sporadic-b-p1", CaseKind::BergeSlope, "b 1", "37", "22p^2 + 13p + 2 at p = 1"},
      {"sporadic-c-p1", CaseKind::BergeSlope, "c 1", "-64", "-22p^2 - 31p - 11 at p = 1"},
      {"sporadic-d-p1", CaseKind::BergeSlope, "d 1", "-71", "-22p^2 - 35p - 14 at p = 1"},
      {"sporadic-d-claim", CaseKind::Claim, "sporadic-d p=1", "AllN window-ok global-ok", "(4p+3)^2 >= 2(6p+5)(p+1)"},
      {"berge-vii-2-3", CaseKind::Claim, "berge-VII a=2 b=3", "NLe(2) window-ok global-ok", "L-space knot for n <= 1 - eps"},
      {"berge-viii-m2-5", CaseKind::Claim, "berge-VIII a=-2 b=5", "AllN window-ok global-ok", "a(a + b) < 0 gives every n"},
      {"distinct-twists", CaseKind::Distinct, "5 3 4", "false", "p + q >= 5 forces n = n'"},
      {"distinct-boundary", CaseKind::Distinct, "2 0 2", "true", "|(n - n') l^2| <= 8"},
      {"satellite-boundary", CaseKind::Satellite, "2 4 1", "true", "m >= w^2 (2g - 1)"},
      {"satellite-below", CaseKind::Satellite, "3 8 1", "PreconditionFailed", "m < w^2 (2g - 1)"},
      {"rp2-slope", CaseKind::Member, "em-rp2 l=1 n=0", "slope=8 SFS[RP2] lspace", "(K_l, 12l^2 - 4l) is a Seifert surgery"},
  };
  return cases;
}

struct CaseResult {
  const CorpusCase* c = nullptr;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Runs the corpus, optionally one case only. `perturb` names a case whose
/// expected value is altered before comparison.
inline std::vector<CaseResult> run_corpus(const std::string& only = "", const std::string& perturb = "") {
  std::vector<const CorpusCase*> selected;
  for (const auto& c : corpus())
    if (only.empty() || c.name == only) selected.push_back(&c);
  if (!only.empty() && selected.empty()) throw Error(ErrorCode::InvalidParameters, "no case named '" + only + "'");
  std::vector<CaseResult> out(selected.size());
  parallel_for(selected.size(), [&](std::size_t i) {
    CaseResult& r = out[i];
    r.c = selected[i];
    r.expected = r.c->expected;
    if (r.c->name == perturb) r.expected += " (perturbed)";
    try {
      r.actual = evaluate(*r.c);
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.pass = r.actual == r.expected;
  });
  return out;
}

}  // namespace seifert_lspace
