#pragma once

// Explicit twist families and the arithmetic guarantees claimed for them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "seifert_lspace/exact_arith.hpp"
#include "seifert_lspace/lspace.hpp"
#include "seifert_lspace/parallel.hpp"
#include "seifert_lspace/seifert.hpp"
#include "seifert_lspace/twist.hpp"

namespace seifert_lspace {

enum class GuaranteeKind { AllN, NGeMinus1, NGe0, NLe, AllNExcept };

inline const char* to_string(GuaranteeKind k) {
  switch (k) {
    case GuaranteeKind::AllN: return "AllN";
    case GuaranteeKind::NGeMinus1: return "NGeMinus1";
    case GuaranteeKind::NGe0: return "NGe0";
    case GuaranteeKind::NLe: return "NLe";
    case GuaranteeKind::AllNExcept: return "AllNExcept";
  }
  return "Unknown";
}

struct Guarantee {
  GuaranteeKind kind = GuaranteeKind::AllN;
  Integer bound = 0;                // NLe only
  std::vector<Integer> exceptions;  // AllNExcept only

  static Guarantee all() { return {}; }
  static Guarantee at_least_minus_one() { return {GuaranteeKind::NGeMinus1, 0, {}}; }
  static Guarantee at_least_zero() { return {GuaranteeKind::NGe0, 0, {}}; }
  static Guarantee at_most(Integer k) { return {GuaranteeKind::NLe, std::move(k), {}}; }
  static Guarantee except(std::vector<Integer> ns) { return {GuaranteeKind::AllNExcept, 0, std::move(ns)}; }

  /// true: n is claimed L-space; false: n is claimed not to be (listed
  /// exceptions); nullopt: no claim about n.
  std::optional<bool> claim(const Integer& n) const {
    switch (kind) {
      case GuaranteeKind::AllN: return true;
      case GuaranteeKind::NGeMinus1: return n >= -1 ? std::optional<bool>(true) : std::nullopt;
      case GuaranteeKind::NGe0: return n >= 0 ? std::optional<bool>(true) : std::nullopt;
      case GuaranteeKind::NLe: return n <= bound ? std::optional<bool>(true) : std::nullopt;
      case GuaranteeKind::AllNExcept:
        for (const auto& e : exceptions)
          if (e == n) return false;
        return true;
    }
    return std::nullopt;
  }

  std::string str() const {
    switch (kind) {
      case GuaranteeKind::NLe: return "NLe(" + bound.str() + ")";
      case GuaranteeKind::AllNExcept: {
        std::string s = "AllNExcept(";
        for (std::size_t i = 0; i < exceptions.size(); ++i) s += (i ? "," : "") + exceptions[i].str();
        return s + ")";
      }
      default: return to_string(kind);
    }
  }

  friend bool operator==(const Guarantee&, const Guarantee&) = default;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameters, what);
}

/// L-space guarantee for twisting a seiferter of the (p, q) torus knot or
/// its cables: every n >= -1, and every n once l^2 >= 2pq.
inline Guarantee theorem15_guarantee(const Integer& p, const Integer& q, const Integer& l) {
  require(p >= 2 && q >= 2, "p and q must be at least 2");
  return l * l >= 2 * p * q ? Guarantee::all() : Guarantee::at_least_minus_one();
}

struct TorusCandidate {
  Integer B;
  Rational r1;  // denominator p
  Rational r2;  // denominator q

  friend bool operator==(const TorusCandidate&, const TorusCandidate&) = default;
};

/// Forms S^2(B; b1/p, b2/q, 1/n) whose first homology has order
/// |pq + n l^2| for every n, i.e. B + b1/p + b2/q = l^2/(pq).
inline std::vector<TorusCandidate> torus_pq_candidates(const Integer& p, const Integer& q, const Integer& l) {
  require(p >= 2 && q >= 2, "p and q must be at least 2");
  require(l >= 1, "l must be positive");
  require(gcd(p, q) == 1, "p and q must be coprime");
  const Rational target(l * l, p * q);
  std::vector<TorusCandidate> out;
  for (Integer b1 = 1; b1 < p; ++b1) {
    if (gcd(b1, p) != 1) continue;
    for (Integer b2 = 1; b2 < q; ++b2) {
      if (gcd(b2, q) != 1) continue;
      const Rational r1(b1, p), r2(b2, q);
      const Rational B = target - r1 - r2;
      if (B.is_integer()) out.push_back({B.num(), r1, r2});
    }
  }
  return out;
}

/// Seiferter data (degenerate encoding) for twisting the (p, q) torus knot
/// along a seiferter with linking number l, using the unique candidate.
inline SeiferterData torus_seiferter_data(const Integer& p, const Integer& q, const Integer& l) {
  auto cands = torus_pq_candidates(p, q, l);
  if (cands.empty())
    throw Error(ErrorCode::InvalidParameters,
                "no Seifert form matches (p, q, l) = (" + p.str() + ", " + q.str() + ", " + l.str() + ")");
  SeiferterData d;
  d.b = cands.front().B;
  d.r1 = cands.front().r1;
  d.r2 = cands.front().r2;
  d.alpha = 1;
  d.beta = 0;
  d.alpha3 = 0;
  d.beta3 = 1;
  d.m = p * q;
  d.l = l;
  d.realizable = true;
  return d;
}

// ---------------------------------------------------------------------------
// Family descriptions

struct FamilyMember {
  Integer n;
  SeifertForm form;
  std::optional<Integer> slope;  // unknown away from n = 0 for some families
  LSpaceVerdict verdict;
};

/// A family indexed by n. Twist families are driven by SeiferterData: member
/// n is the data's member j = index_sign * n + index_offset, mirrored when
/// `mirrored` is set. Other families supply `direct`.
struct FamilySpec {
  std::string name;
  std::vector<std::pair<std::string, Integer>> params;
  Guarantee claimed;
  std::string description;

  std::optional<SeiferterData> data;
  int index_sign = 1;
  Integer index_offset = 0;
  bool mirrored = false;

  std::function<FamilyMember(const Integer&)> direct;
  std::vector<Integer> indices;  // exceptional fiber indices, when recorded
  std::optional<Integer> berge_n;  // member that is a Berge knot, when known

  Integer data_index(const Integer& n) const { return index_sign * n + index_offset; }
  /// Inverse of data_index.
  Integer family_index(const Integer& j) const { return index_sign * (j - index_offset); }
};

inline FamilyMember member(const FamilySpec& spec, const Integer& n) {
  if (spec.direct) return spec.direct(n);
  const SeiferterData& d = *spec.data;
  const Integer j = spec.data_index(n);
  FamilyMember mem;
  mem.n = n;
  mem.form = surgered_space(d, j);
  Integer slope = surgery_slope(d, j);
  if (spec.mirrored) {
    mem.form = mirror(mem.form);
    slope = -slope;
  }
  mem.slope = slope;
  mem.verdict = decide(mem.form);
  return mem;
}

enum class TwistedTorusKind { PplusQ, PminusQ, F3p1, F3p2, F2p3 };

inline const char* to_string(TwistedTorusKind k) {
  switch (k) {
    case TwistedTorusKind::PplusQ: return "p+q";
    case TwistedTorusKind::PminusQ: return "p-q";
    case TwistedTorusKind::F3p1: return "3p+1";
    case TwistedTorusKind::F3p2: return "3p+2";
    case TwistedTorusKind::F2p3: return "2p+3";
  }
  return "?";
}

/// Twisted torus knots K(P, Q; l, n): twisting T_{P,Q} along a seiferter
/// with linking number l. For PplusQ and PminusQ pass (p, q); the others
/// take a single parameter p > 0 in `p` and ignore `q`.
inline FamilySpec twisted_torus_family(TwistedTorusKind kind, const Integer& p, const Integer& q = 0) {
  Integer P, Q, l;
  Guarantee claimed;
  FamilySpec spec;
  switch (kind) {
    case TwistedTorusKind::PplusQ:
    case TwistedTorusKind::PminusQ:
      require(p >= 2 && q >= 2, "p and q must be at least 2");
      require(gcd(p, q) == 1, "p and q must be coprime");
      P = p;
      Q = q;
      l = kind == TwistedTorusKind::PplusQ ? Integer(p + q) : abs_value(p - q);
      claimed = kind == TwistedTorusKind::PplusQ ? Guarantee::all() : Guarantee::at_least_minus_one();
      spec.params = {{"p", p}, {"q", q}};
      break;
    case TwistedTorusKind::F3p1:
      require(p > 0, "p must be positive");
      P = 3 * p + 1, Q = 2 * p + 1, l = 4 * p + 1;
      claimed = Guarantee::all();
      spec.params = {{"p", p}};
      break;
    case TwistedTorusKind::F3p2:
      require(p > 0, "p must be positive");
      P = 3 * p + 2, Q = 2 * p + 1, l = 4 * p + 3;
      claimed = Guarantee::all();
      spec.params = {{"p", p}};
      break;
    case TwistedTorusKind::F2p3:
      require(p > 0, "p must be positive");
      P = 2 * p + 3, Q = 2 * p + 1, l = 2 * p + 2;
      claimed = Guarantee::at_least_minus_one();
      spec.params = {{"p", p}};
      break;
  }
  spec.name = std::string("twisted-torus-") + to_string(kind);
  spec.claimed = claimed;
  spec.description = "K(" + P.str() + ", " + Q.str() + "; " + l.str() + ", n)";
  spec.data = torus_seiferter_data(P, Q, l);
  return spec;
}

/// Seiferter c_{m,p} for the (O, m) surgery; no range checks.
inline SeiferterData unknot_seiferter_data_unchecked(const Integer& m, const Integer& p) {
  // S^2(-n/(mn+1), (-p+1)/2p, (p-2m-1)/(2p-4m)); the middle slope is
  // -1 + (p+1)/2p.
  SeiferterData d;
  d.b = -1;
  d.r1 = Rational(p + 1, 2 * p);
  std::vector<ExtRational> raw{ExtRational(Rational(p - 2 * m - 1, 2 * p - 4 * m))};
  SeifertForm third = normalize(0, raw);
  d.b += third.b;
  d.r2 = third.slopes.empty() ? Rational(0) : third.slopes.front();
  d.alpha = m;
  d.beta = -1;
  d.alpha3 = 1;
  d.beta3 = 0;
  d.m = m;
  d.l = abs_value(p - m);
  d.realizable = m <= 0;
  return d;
}

inline FamilySpec unknot_seiferter_family(const Integer& m, const Integer& p) {
  require(m <= 0, "m must be nonpositive");
  require(p >= 3 && p % 2 != 0, "p must be an odd integer >= 3");
  FamilySpec spec;
  spec.name = "unknot-seiferter";
  spec.params = {{"m", m}, {"p", p}};
  spec.data = unknot_seiferter_data_unchecked(m, p);
  spec.claimed = m == 0 ? Guarantee::except({Integer(0)}) : Guarantee::all();
  spec.description = "K_{m,p,n} with surgery slope m + n(p-m)^2";
  return spec;
}

/// p = 2m +- 1 makes O + c_{m,p} non-hyperbolic; informational only.
inline bool unknot_link_nonhyperbolic(const Integer& m, const Integer& p) { return p == 2 * m + 1 || p == 2 * m - 1; }

enum class TunnelFamily { A, B };

inline FamilySpec tunnel2_family(TunnelFamily which) {
  FamilySpec spec;
  SeiferterData d;
  if (which == TunnelFamily::A) {
    // S^2((11n+4)/(14n+5), -2/7, 1/2), slope 196n + 71
    spec.name = "tunnel2-A";
    d.b = -1;
    d.r1 = Rational(5, 7);
    d.r2 = Rational(Integer(1), Integer(2));
    d.alpha = 14, d.beta = 11, d.alpha3 = 5, d.beta3 = 4;
    d.l = 14;
  } else {
    // S^2(-(3n+2)/(10n+7), 4/5, 1/2), slope 100n + 71
    spec.name = "tunnel2-B";
    d.b = 0;
    d.r1 = Rational(4, 5);
    d.r2 = Rational(Integer(1), Integer(2));
    d.alpha = 10, d.beta = -3, d.alpha3 = 7, d.beta3 = -2;
    d.l = 10;
  }
  d.m = 71;
  d.realizable = true;
  spec.data = d;
  spec.claimed = Guarantee::all();
  spec.description = which == TunnelFamily::A ? "K_{n,0}" : "K_{0,n}";
  return spec;
}

enum class SporadicKind { a, b, c, d };

inline const char* to_string(SporadicKind k) {
  switch (k) {
    case SporadicKind::a: return "a";
    case SporadicKind::b: return "b";
    case SporadicKind::c: return "c";
    case SporadicKind::d: return "d";
  }
  return "?";
}

/// Twists of the sporadic Berge knots, built from the torus or cable base
/// reached by one twist.
inline FamilySpec berge_sporadic(SporadicKind kind, const Integer& p) {
  Integer P, Q, l;
  bool mirrored = false;
  switch (kind) {
    case SporadicKind::a:
      require(p > 1, "p must exceed 1");
      P = 6 * p + 1, Q = p, l = 4 * p + 1;
      break;
    case SporadicKind::b:
      require(p > 0, "p must be positive");
      P = 3 * p + 1, Q = 2 * p + 1, l = 4 * p + 1;
      break;
    case SporadicKind::c:
      require(p > 0, "p must be positive");
      P = 3 * p + 2, Q = 2 * p + 1, l = 4 * p + 3;
      mirrored = true;
      break;
    case SporadicKind::d:
      require(p > 0, "p must be positive");
      P = 6 * p + 5, Q = p + 1, l = 4 * p + 3;
      mirrored = true;
      break;
  }
  FamilySpec spec;
  spec.name = std::string("sporadic-") + to_string(kind);
  spec.params = {{"p", p}};
  spec.data = torus_seiferter_data(P, Q, l);
  spec.mirrored = mirrored;
  // n twists of the (mirrored) base; twisting the mirror by n is the mirror
  // of twisting the base by -n
  spec.index_sign = mirrored ? -1 : 1;
  spec.berge_n = mirrored ? -1 : 1;
  spec.claimed = Guarantee::all();
  spec.description = std::string(mirrored ? "mirror of " : "") + "base (" + P.str() + ", " + Q.str() +
                     "), l = " + l.str();
  return spec;
}

/// Slope of the lens space surgery on the Berge knot itself.
inline Integer berge_sporadic_slope(SporadicKind kind, const Integer& p) {
  FamilySpec spec = berge_sporadic(kind, p);
  return *member(spec, *spec.berge_n).slope;
}

enum class BergeType { VII, VIII };

struct TorusKnotDegenerate {};

/// Twists of the Berge knot K(a+b, -a; |b|, eps) with eps = -1 (VII) or +1
/// (VIII).
inline std::variant<FamilySpec, TorusKnotDegenerate> berge_vii_viii(const Integer& a, const Integer& b, BergeType type) {
  require(gcd(a, b) == 1, "a and b must be coprime");
  if (abs_value(a) <= 1 || abs_value(b) <= 1 || abs_value(a + b) <= 1) return TorusKnotDegenerate{};
  const int eps = type == BergeType::VII ? -1 : 1;
  const Integer A = abs_value(a + b), B = abs_value(a);
  FamilySpec spec;
  spec.name = type == BergeType::VII ? "berge-VII" : "berge-VIII";
  spec.params = {{"a", a}, {"b", b}};
  spec.berge_n = 0;
  if (a * (a + b) < 0) {
    // T_{a+b,-a} is a positive torus knot and |b| = |a+b| + |a|
    spec.data = torus_seiferter_data(A, B, abs_value(b));
    spec.index_sign = 1;
    spec.index_offset = eps;
    spec.claimed = Guarantee::all();
    spec.description = "K(" + A.str() + ", " + B.str() + "; " + abs_value(b).str() + ", n + " + std::to_string(eps) + ")";
  } else {
    // the mirror K(a+b, a; |b|, -n-eps) twists a positive torus knot
    const Integer P = A > B ? A : B, Q = A > B ? B : A;
    spec.data = torus_seiferter_data(P, Q, abs_value(b));
    spec.mirrored = true;
    spec.index_sign = -1;
    spec.index_offset = -eps;
    spec.claimed = Guarantee::at_most(1 - eps);
    spec.description = "mirror of K(" + P.str() + ", " + Q.str() + "; " + abs_value(b).str() + ", -n - " +
                       std::to_string(eps) + ")";
  }
  return spec;
}

/// Satellite twists: with m >= w^2 (2g - 1) every n >= 0 gives an L-space
/// surgery k((m + n w^2) / w^2) on the companion.
inline bool satellite_guarantee(const Integer& w, const Integer& m, const Integer& g) {
  require(w >= 2 && g >= 1, "need w >= 2 and g >= 1");
  if (m < w * w * (2 * g - 1))
    throw Error(ErrorCode::PreconditionFailed, "m = " + m.str() + " < w^2 (2g - 1) = " + Integer(w * w * (2 * g - 1)).str());
  return true;
}

inline Rational satellite_companion_slope(const Integer& w, const Integer& m, const Integer& n) {
  return Rational(m + n * w * w, w * w);
}

/// Whether (n, l) and (n2, l) twists could both be surgeries on one
/// hyperbolic knot: |(n - n2) l^2| <= 8.
inline bool distinctness_bound(const Integer& l, const Integer& n, const Integer& n2) {
  require(l >= 1, "l must be positive");
  return abs_value((n - n2) * l * l) <= 8;
}

/// Surgery (K_l, 12 l^2 - 4 l) yields a Seifert space over RP^2; every twist
/// along either exceptional fiber stays over RP^2.
inline FamilySpec em_rp2_family(const Integer& l) {
  require(l != 0, "l must be nonzero");
  FamilySpec spec;
  spec.name = "em-rp2";
  spec.params = {{"l", l}};
  spec.claimed = Guarantee::all();
  spec.indices = {abs_value(l), abs_value(-3 * l + 1)};
  spec.description = "Seifert space over RP2 with fiber indices " + spec.indices[0].str() + ", " + spec.indices[1].str();
  const Integer slope = 12 * l * l - 4 * l;
  spec.direct = [slope](const Integer& n) {
    FamilyMember mem;
    mem.n = n;
    mem.form = SeifertForm::rp2();
    if (n == 0) mem.slope = slope;
    mem.verdict = decide(mem.form);
    return mem;
  };
  return spec;
}

// ---------------------------------------------------------------------------
// Running families and checking their guarantees

struct GuaranteeCheck {
  bool window_ok = true;
  std::vector<Integer> window_failures;
  // Over all integers, when the tails and the middle range settle it.
  std::optional<bool> global_ok;
  std::vector<Integer> global_failures;
};

struct FamilyRun {
  FamilySpec spec;
  Window window;
  std::vector<FamilyMember> members;   // ordered by n
  std::optional<FamilyReport> report;  // indexed by the data's own j
  GuaranteeCheck check;
};

namespace detail {

inline void check_global(const FamilySpec& spec, const FamilyReport& rep, GuaranteeCheck& out) {
  if (!rep.middle_decided) return;
  const Guarantee& g = spec.claimed;
  bool ok = true;
  // A non-L tail, mapped to family indices, must avoid every claimed n.
  for (bool positive : {true, false}) {
    const TailCertificate& t = positive ? rep.tail_pos : rep.tail_neg;
    if (t.lspace) continue;
    const bool n_positive = (spec.index_sign == 1) == positive;
    const Integer n_start = spec.family_index(t.start);
    switch (g.kind) {
      case GuaranteeKind::AllN:
      case GuaranteeKind::AllNExcept:
        ok = false;
        break;
      case GuaranteeKind::NGeMinus1:
      case GuaranteeKind::NGe0:
        // claims are unbounded above
        if (n_positive || n_start >= (g.kind == GuaranteeKind::NGe0 ? 0 : -1)) ok = false;
        break;
      case GuaranteeKind::NLe:
        if (!n_positive || n_start <= g.bound) ok = false;
        break;
    }
    if (!ok) out.global_failures.push_back(n_start);
  }
  std::vector<Integer> failing;
  for (const auto& j : rep.middle_non_lspace) failing.push_back(spec.family_index(j));
  for (const auto& n : failing)
    if (g.claim(n) == std::optional<bool>(true)) {
      ok = false;
      out.global_failures.push_back(n);
    }
  for (const auto& e : g.exceptions) {
    const Integer j = spec.data_index(e);
    auto tv = tail_verdict(rep, j);
    const bool fails = tv ? !*tv : std::find(failing.begin(), failing.end(), e) != failing.end();
    if (!fails) {
      ok = false;
      out.global_failures.push_back(e);
    }
  }
  out.global_ok = ok;
}

}  // namespace detail

inline FamilyRun run_family(const FamilySpec& spec, Window window = {}) {
  if (window.lo > window.hi) throw Error(ErrorCode::InvalidParameters, "empty window");
  FamilyRun run;
  run.spec = spec;
  run.window = window;
  const std::size_t count = static_cast<std::size_t>(window.hi - window.lo + 1);
  run.members.resize(count);
  parallel_for(count, [&](std::size_t i) { run.members[i] = member(spec, Integer(window.lo) + i); });
  for (const auto& mem : run.members) {
    auto c = spec.claimed.claim(mem.n);
    if (c && *c != mem.verdict.is_lspace) {
      run.check.window_ok = false;
      run.check.window_failures.push_back(mem.n);
    }
  }
  if (spec.data) {
    const Integer a = spec.data_index(window.lo), b = spec.data_index(window.hi);
    Window jw{(a < b ? a : b).convert_to<std::int64_t>(), (a < b ? b : a).convert_to<std::int64_t>()};
    run.report = classify_family(*spec.data, jw);
    detail::check_global(spec, *run.report, run.check);
  } else {
    run.check.global_ok = run.check.window_ok;  // direct families here are uniform in n
  }
  return run;
}

// ---------------------------------------------------------------------------
// Registry used by the command line and the regression suite

struct FamilyBuilder {
  std::string name;
  std::vector<std::string> param_names;
  std::string summary;
  std::function<FamilySpec(const std::map<std::string, Integer>&)> build;
};

inline const std::vector<FamilyBuilder>& family_builders() {
  static const std::vector<FamilyBuilder> builders = [] {
    auto get = [](const std::map<std::string, Integer>& m, const std::string& k) -> Integer {
      auto it = m.find(k);
      if (it == m.end()) throw Error(ErrorCode::InvalidParameters, "missing parameter '" + k + "'");
      return it->second;
    };
    std::vector<FamilyBuilder> v;
    auto torus = [&](TwistedTorusKind kind, std::vector<std::string> names, std::string summary) {
      v.push_back({std::string("twisted-torus-") + to_string(kind), names, std::move(summary),
                   [kind, names, get](const std::map<std::string, Integer>& m) {
                     return names.size() == 2 ? twisted_torus_family(kind, get(m, "p"), get(m, "q"))
                                              : twisted_torus_family(kind, get(m, "p"));
                   }});
    };
    torus(TwistedTorusKind::PplusQ, {"p", "q"}, "K(p, q; p + q, n), p, q >= 2");
    torus(TwistedTorusKind::PminusQ, {"p", "q"}, "K(p, q; |p - q|, n), p, q >= 2");
    torus(TwistedTorusKind::F3p1, {"p"}, "K(3p+1, 2p+1; 4p+1, n), p > 0");
    torus(TwistedTorusKind::F3p2, {"p"}, "K(3p+2, 2p+1; 4p+3, n), p > 0");
    torus(TwistedTorusKind::F2p3, {"p"}, "K(2p+3, 2p+1; 2p+2, n), p > 0");
    v.push_back({"torus-seiferter", {"p", "q", "l"}, "T_{p,q} twisted along a seiferter of linking number l",
                 [get](const std::map<std::string, Integer>& m) {
                   FamilySpec s;
                   s.name = "torus-seiferter";
                   s.params = {{"p", get(m, "p")}, {"q", get(m, "q")}, {"l", get(m, "l")}};
                   s.data = torus_seiferter_data(get(m, "p"), get(m, "q"), get(m, "l"));
                   s.claimed = theorem15_guarantee(get(m, "p"), get(m, "q"), get(m, "l"));
                   s.description = "T_{" + get(m, "p").str() + "," + get(m, "q").str() + "} with l = " + get(m, "l").str();
                   return s;
                 }});
    v.push_back({"unknot-seiferter", {"m", "p"}, "twists of the unknot along c_{m,p}, m <= 0, p odd >= 3",
                 [get](const std::map<std::string, Integer>& m) { return unknot_seiferter_family(get(m, "m"), get(m, "p")); }});
    v.push_back({"tunnel2-A", {}, "K_{n,0}, slope 196n + 71",
                 [](const std::map<std::string, Integer>&) { return tunnel2_family(TunnelFamily::A); }});
    v.push_back({"tunnel2-B", {}, "K_{0,n}, slope 100n + 71",
                 [](const std::map<std::string, Integer>&) { return tunnel2_family(TunnelFamily::B); }});
    for (SporadicKind k : {SporadicKind::a, SporadicKind::b, SporadicKind::c, SporadicKind::d})
      v.push_back({std::string("sporadic-") + to_string(k), {"p"}, std::string("twists of the sporadic Berge knot ") + to_string(k),
                   [k, get](const std::map<std::string, Integer>& m) { return berge_sporadic(k, get(m, "p")); }});
    for (BergeType t : {BergeType::VII, BergeType::VIII})
      v.push_back({t == BergeType::VII ? "berge-VII" : "berge-VIII", {"a", "b"}, "twists of a Berge knot of this type",
                   [t, get](const std::map<std::string, Integer>& m) {
                     auto r = berge_vii_viii(get(m, "a"), get(m, "b"), t);
                     if (std::holds_alternative<TorusKnotDegenerate>(r))
                       throw Error(ErrorCode::InvalidParameters, "the Berge knot is a torus knot for these (a, b)");
                     return std::get<FamilySpec>(r);
                   }});
    v.push_back({"em-rp2", {"l"}, "surgeries yielding Seifert spaces over RP2",
                 [get](const std::map<std::string, Integer>& m) { return em_rp2_family(get(m, "l")); }});
    return v;
  }();
  return builders;
}

inline const FamilyBuilder& find_family_builder(const std::string& name) {
  for (const auto& b : family_builders())
    if (b.name == name) return b;
  throw Error(ErrorCode::InvalidParameters, "unknown family '" + name + "'");
}

/// Concrete parameter choices covering every family kind.
inline std::vector<FamilySpec> catalog() {
  std::vector<FamilySpec> out;
  out.push_back(twisted_torus_family(TwistedTorusKind::PplusQ, 3, 2));
  out.push_back(twisted_torus_family(TwistedTorusKind::PplusQ, 5, 2));
  out.push_back(twisted_torus_family(TwistedTorusKind::PplusQ, 4, 3));
  out.push_back(twisted_torus_family(TwistedTorusKind::PplusQ, 7, 5));
  out.push_back(twisted_torus_family(TwistedTorusKind::PminusQ, 5, 2));
  out.push_back(twisted_torus_family(TwistedTorusKind::PminusQ, 7, 3));
  out.push_back(twisted_torus_family(TwistedTorusKind::PminusQ, 8, 3));
  for (int p = 1; p <= 3; ++p) {
    out.push_back(twisted_torus_family(TwistedTorusKind::F3p1, p));
    out.push_back(twisted_torus_family(TwistedTorusKind::F3p2, p));
    out.push_back(twisted_torus_family(TwistedTorusKind::F2p3, p));
  }
  for (int m : {0, -1, -2, -5})
    for (int p : {3, 5, 7}) out.push_back(unknot_seiferter_family(m, p));
  out.push_back(tunnel2_family(TunnelFamily::A));
  out.push_back(tunnel2_family(TunnelFamily::B));
  for (int p : {2, 3}) out.push_back(berge_sporadic(SporadicKind::a, p));
  for (SporadicKind k : {SporadicKind::b, SporadicKind::c, SporadicKind::d})
    for (int p : {1, 2}) out.push_back(berge_sporadic(k, p));
  out.push_back(std::get<FamilySpec>(berge_vii_viii(2, 3, BergeType::VII)));
  out.push_back(std::get<FamilySpec>(berge_vii_viii(2, 3, BergeType::VIII)));
  out.push_back(std::get<FamilySpec>(berge_vii_viii(-2, 5, BergeType::VIII)));
  out.push_back(std::get<FamilySpec>(berge_vii_viii(-3, 7, BergeType::VII)));
  out.push_back(std::get<FamilySpec>(berge_vii_viii(3, 4, BergeType::VIII)));
  for (int l : {1, 2, -1}) out.push_back(em_rp2_family(l));
  return out;
}

inline std::string family_label(const FamilySpec& spec) {
  std::string s = spec.name;
  if (!spec.params.empty()) {
    s += "(";
    for (std::size_t i = 0; i < spec.params.size(); ++i)
      s += (i ? "," : "") + spec.params[i].first + "=" + spec.params[i].second.str();
    s += ")";
  }
  return s;
}

}  // namespace seifert_lspace
