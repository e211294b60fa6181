#pragma once

// Twist families along a seiferter c. With K(m) = S^2(b; r1, r2, beta3/alpha3)
// and the twisting matrix (alpha, beta; alpha3, beta3) of determinant 1,
// n twists give
//     K_n(m + n l^2) = S^2(b; r1, r2, f(n)),  f(n) = (n beta + beta3) / (n alpha + alpha3),
// and f(n) - beta/alpha = 1 / (alpha (n alpha + alpha3)), so both tails of
// the family converge monotonically to the limit slope r_c = beta/alpha.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seifert_lspace/exact_arith.hpp"
#include "seifert_lspace/lspace.hpp"
#include "seifert_lspace/parallel.hpp"
#include "seifert_lspace/seifert.hpp"

namespace seifert_lspace {

struct SeiferterData {
  Integer b = 0;
  Rational r1;
  Rational r2;
  Integer alpha = 0;
  Integer beta = 0;
  Integer alpha3 = 1;
  Integer beta3 = 0;
  Integer m = 0;  // surgery slope of K
  Integer l = 0;  // linking number of c and K
  bool realizable = false;

  Integer det() const { return alpha * beta3 - beta * alpha3; }
  bool degenerate_seiferter() const { return alpha3 == 0 && beta3 == 1; }
};

/// Throws InvalidSeiferter unless the data satisfies the matrix and slope
/// invariants.
inline void validate(const SeiferterData& d) {
  if (d.det() != 1)
    throw Error(ErrorCode::InvalidSeiferter,
                "alpha*beta3 - beta*alpha3 = " + d.det().str() + ", expected 1");
  if (!(d.alpha3 > 0 || d.degenerate_seiferter()))
    throw Error(ErrorCode::InvalidSeiferter, "alpha3 must be positive unless (alpha3, beta3) = (0, 1)");
  for (const Rational* r : {&d.r1, &d.r2})
    if (r->sign() <= 0 || *r >= Rational(1))
      throw Error(ErrorCode::InvalidSeiferter, "r1, r2 must lie in (0, 1), got " + r->str());
  if (d.l < 0) throw Error(ErrorCode::InvalidSeiferter, "linking number must be nonnegative");
}

inline ExtRational fiber_slope(const SeiferterData& d, const Integer& n) {
  return ExtRational::from_pair(n * d.beta + d.beta3, n * d.alpha + d.alpha3);
}

inline SeifertForm surgered_space(const SeiferterData& d, const Integer& n) {
  return normalize(d.b, {ExtRational(d.r1), ExtRational(d.r2), fiber_slope(d, n)});
}

inline Integer surgery_slope(const SeiferterData& d, const Integer& n) { return d.m + n * d.l * d.l; }

inline ExtRational limit_slope(const SeiferterData& d) { return ExtRational::from_pair(d.beta, d.alpha); }

inline SeifertForm limit_space(const SeiferterData& d) {
  return normalize(d.b, {ExtRational(d.r1), ExtRational(d.r2), limit_slope(d)});
}

/// |H_1(K_n(m_n))| = |m_n|, with an infinite group matching slope 0.
inline bool h1_consistency(const SeiferterData& d, const Integer& n) {
  const Classification c = classify(surgered_space(d, n));
  const Integer slope = abs_value(surgery_slope(d, n));
  if (c.h1->is_infinite()) return slope == 0;
  return c.h1->value() == slope;
}

/// The integer n at which n alpha + alpha3 = 0, if any.
inline std::optional<Integer> pole(const SeiferterData& d) {
  if (d.alpha == 0) return std::nullopt;
  Integer q, r;
  boost::multiprecision::divide_qr(Integer(-d.alpha3), d.alpha, q, r);
  if (r != 0) return std::nullopt;
  return q;
}

// ---------------------------------------------------------------------------
// Family reports

struct Window {
  std::int64_t lo = -50;
  std::int64_t hi = 50;
};

enum class Regime {
  DegenerateLimit,  // alpha = 0: every member is a lens space
  IntegralLimit,    // r_c an integer: the limit is a lens space
  FractionalLimit,  // r_c not an integer: the limit has three fibers
};

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::DegenerateLimit: return "DegenerateLimit";
    case Regime::IntegralLimit: return "IntegralLimit";
    case Regime::FractionalLimit: return "FractionalLimit";
  }
  return "Unknown";
}

enum class TailStatus { Certified, DecidedPointwiseOnly };

inline const char* to_string(TailStatus s) {
  return s == TailStatus::Certified ? "Certified" : "DecidedPointwiseOnly";
}

/// Uniform verdict on one end of the family. For the positive tail the
/// claim covers every n >= start; for the negative tail every n <= start.
///
/// When `slope_bound` is set the claim is derived from it: on the positive
/// side f(n) decreases to r_c and the claim holds while f(n) < bound (or <=
/// when not strict); on the negative side f(n) increases to r_c and the
/// claim holds while f(n) > bound (or >=).
struct TailCertificate {
  TailStatus status = TailStatus::Certified;
  bool lspace = true;
  Integer start;
  std::optional<Rational> slope_bound;
  bool strict = true;
  Integer shifted_b;                       // b after folding the integer part of f(n)
  std::optional<ThirdSlotThreshold> threshold;

  bool covers(const Integer& n, bool positive_side) const { return positive_side ? n >= start : n <= start; }
};

struct FamilyRecord {
  std::int64_t n = 0;
  Integer slope;
  ExtRational fiber;
  SeifertForm form;
  Classification classification;
  LSpaceVerdict verdict;
};

struct FamilyReport {
  Window window;
  std::vector<FamilyRecord> records;  // ordered by n
  TailCertificate tail_pos;
  TailCertificate tail_neg;
  SeifertForm limit;
  LSpaceVerdict limit_verdict;
  Regime regime = Regime::FractionalLimit;
  std::optional<Integer> pole;
  std::vector<std::int64_t> exceptional_n;  // S2xS1 or connected-sum members in the window
  // The n strictly between the two tails, decided one by one when there
  // are at most kMiddleLimit of them. With the tails this covers every n.
  bool middle_decided = false;
  std::vector<Integer> middle_non_lspace;

  /// All n with a non-L-space member, when that set is known and finite.
  std::optional<std::vector<Integer>> non_lspace_n() const {
    if (!middle_decided || !tail_pos.lspace || !tail_neg.lspace) return std::nullopt;
    return middle_non_lspace;
  }
};

namespace detail {

// Smallest n with n > c (strict) or n >= c.
inline Integer first_above(const Rational& c, bool strict) { return strict ? c.floor() + 1 : c.ceil(); }
// Largest n with n < c (strict) or n <= c.
inline Integer last_below(const Rational& c, bool strict) { return strict ? c.ceil() - 1 : c.floor(); }

// Shared by both sides: 1 / (X - r_c) compared against alpha^2 n + alpha alpha3.
inline Rational twist_crossing(const SeiferterData& d, const Rational& r_c, const Rational& bound) {
  const Rational a(d.alpha);
  return ((bound - r_c).reciprocal() - a * Rational(d.alpha3)) / (a * a);
}

inline TailCertificate positive_tail(const SeiferterData& d, const Rational& r_c) {
  // f(n) in (r_c, p + 1) eventually; third slot x = f(n) - p in (rho, 1).
  TailCertificate t;
  const Integer p = r_c.floor();
  const Rational rho = r_c - Rational(p);
  t.shifted_b = d.b + p;
  ThirdSlotThreshold th = third_slot_threshold(t.shifted_b, d.r1, d.r2);
  Rational x_bound(1);
  bool strict = true;
  switch (th.kind) {
    case SetKind::All:
      t.lspace = true;
      break;
    case SetKind::Empty:
      t.lspace = false;
      break;
    case SetKind::UpClosed:
      if (rho >= th.t) {
        t.lspace = true;
      } else {
        t.lspace = false;
        x_bound = th.t;
        strict = th.attained;
      }
      break;
    case SetKind::DownClosed:
      if (rho < th.t) {
        t.lspace = true;
        x_bound = th.t;
        strict = !th.attained;
      } else {
        t.lspace = false;
      }
      break;
  }
  t.slope_bound = Rational(p) + x_bound;
  t.strict = strict;
  t.start = first_above(twist_crossing(d, r_c, *t.slope_bound), strict);
  t.threshold = std::move(th);
  return t;
}

inline TailCertificate negative_tail(const SeiferterData& d, const Rational& r_c) {
  // f(n) in (q, r_c) eventually; third slot x = f(n) - q in (0, sigma).
  TailCertificate t;
  const Integer q = r_c.ceil() - 1;
  const Rational sigma = r_c - Rational(q);
  t.shifted_b = d.b + q;
  ThirdSlotThreshold th = third_slot_threshold(t.shifted_b, d.r1, d.r2);
  Rational x_bound(0);
  bool strict = true;
  switch (th.kind) {
    case SetKind::All:
      t.lspace = true;
      break;
    case SetKind::Empty:
      t.lspace = false;
      break;
    case SetKind::UpClosed:
      if (sigma > th.t) {
        t.lspace = true;
        x_bound = th.t;
        strict = !th.attained;
      } else {
        t.lspace = false;
      }
      break;
    case SetKind::DownClosed:
      if (sigma <= th.t) {
        t.lspace = true;
      } else {
        t.lspace = false;
        x_bound = th.t;
        strict = th.attained;
      }
      break;
  }
  t.slope_bound = Rational(q) + x_bound;
  t.strict = strict;
  t.start = last_below(twist_crossing(d, r_c, *t.slope_bound), strict);
  t.threshold = std::move(th);
  return t;
}

}  // namespace detail

/// Largest number of members between the two tails that classify_family
/// will decide one by one to complete the report.
inline constexpr std::int64_t kMiddleLimit = 200000;

inline FamilyRecord family_record(const SeiferterData& d, std::int64_t n) {
  FamilyRecord r;
  r.n = n;
  r.slope = surgery_slope(d, n);
  r.fiber = fiber_slope(d, n);
  r.form = surgered_space(d, n);
  r.classification = classify(r.form);
  r.verdict = decide(r.form);
  return r;
}

inline FamilyReport classify_family(const SeiferterData& d, Window window = {}) {
  validate(d);
  if (window.lo > window.hi) throw Error(ErrorCode::InvalidParameters, "empty window");
  FamilyReport rep;
  rep.window = window;
  rep.limit = limit_space(d);
  rep.limit_verdict = decide(rep.limit);
  rep.pole = pole(d);

  const std::size_t count = static_cast<std::size_t>(window.hi - window.lo + 1);
  rep.records.resize(count);
  parallel_for(count, [&](std::size_t i) {
    rep.records[i] = family_record(d, window.lo + static_cast<std::int64_t>(i));
  });
  for (const auto& r : rep.records) {
    const Tag tag = r.classification.tag;
    if (tag == Tag::S2xS1 || tag == Tag::ConnectedSumOfLensSpaces || r.form.degenerate_count > 0)
      rep.exceptional_n.push_back(r.n);
  }

  if (d.alpha == 0) {
    // f(n) = beta3 - n: the lens space S^2(b + beta3 - n; r1, r2), which is
    // S^2 x S^1 only when n = b + beta3 + r1 + r2.
    rep.regime = Regime::DegenerateLimit;
    const Rational v = Rational(d.b + d.beta3) + d.r1 + d.r2;
    rep.tail_pos.lspace = rep.tail_neg.lspace = true;
    rep.tail_pos.start = v.floor() + 1;
    rep.tail_neg.start = v.ceil() - 1;
    rep.tail_pos.shifted_b = rep.tail_neg.shifted_b = d.b;
  } else {
    const Rational r_c = limit_slope(d).value();
    rep.regime = r_c.is_integer() ? Regime::IntegralLimit : Regime::FractionalLimit;
    rep.tail_pos = detail::positive_tail(d, r_c);
    rep.tail_neg = detail::negative_tail(d, r_c);
  }

  const Integer gap = rep.tail_pos.start - rep.tail_neg.start - 1;
  if (gap <= kMiddleLimit) {
    rep.middle_decided = true;
    const Integer lo = rep.tail_neg.start + 1;
    const std::size_t size = gap > 0 ? gap.convert_to<std::size_t>() : 0;
    std::vector<char> lspace(size, 1);
    parallel_for(size, [&](std::size_t i) { lspace[i] = decide(surgered_space(d, lo + i)).is_lspace; });
    for (std::size_t i = 0; i < size; ++i)
      if (!lspace[i]) rep.middle_non_lspace.push_back(lo + i);
  }
  return rep;
}

/// Verdict on n according to the report's tails, or nullopt for n between
/// them.
inline std::optional<bool> tail_verdict(const FamilyReport& rep, const Integer& n) {
  if (rep.tail_pos.covers(n, true)) return rep.tail_pos.lspace;
  if (rep.tail_neg.covers(n, false)) return rep.tail_neg.lspace;
  return std::nullopt;
}

}  // namespace seifert_lspace
