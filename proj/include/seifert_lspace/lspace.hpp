#pragma once

// L-space decision for small Seifert fibered spaces. A space
// S^2(b; r1, r2, r3) with 0 < r_i < 1 fails to be an L-space exactly when
// b = -1 and some coprime 0 < a <= k/2 gives
//     (r1, r2, r3)* < (1/k, a/k, (k-a)/k),
// or b = -2 and the same holds for (1-r1, 1-r2, 1-r3)*.

#include <optional>
#include <string>

#include "seifert_lspace/exact_arith.hpp"
#include "seifert_lspace/seifert.hpp"
#include "seifert_lspace/stern_brocot.hpp"

namespace seifert_lspace {

struct FoliationWitness {
  Integer k;
  Integer a;

  friend bool operator==(const FoliationWitness&, const FoliationWitness&) = default;
};

enum class Reason {
  BLarge,
  LensNotS2xS1,
  ConnectedSumOfLSpaces,
  RP2Base,
  InfiniteH1,
  NoWitnessExhaustive,
  Witness,
  DualWitness,
};

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::BLarge: return "BLarge";
    case Reason::LensNotS2xS1: return "LensNotS2xS1";
    case Reason::ConnectedSumOfLSpaces: return "ConnectedSumOfLSpaces";
    case Reason::RP2Base: return "RP2Base";
    case Reason::InfiniteH1: return "InfiniteH1";
    case Reason::NoWitnessExhaustive: return "NoWitnessExhaustive";
    case Reason::Witness: return "Witness";
    case Reason::DualWitness: return "DualWitness";
  }
  return "Unknown";
}

struct LSpaceVerdict {
  bool is_lspace = true;
  Reason reason = Reason::BLarge;
  // Set for Witness and DualWitness, and for InfiniteH1 when a witness
  // exists anyway. `witness_on_dual` tells which triple the search ran on.
  std::optional<FoliationWitness> witness;
  bool witness_on_dual = false;
  // Largest k examined by the witness search, when one ran.
  std::optional<Integer> search_bound;
};

/// Largest k with k * s1 < 1.
inline Integer witness_search_bound(const Rational& s1) { return floor_div(s1.den() - 1, s1.num()); }

inline void require_unit_interval(const Rational& r, const char* what) {
  if (r.sign() <= 0 || r >= Rational(1))
    throw Error(ErrorCode::PreconditionFailed, std::string(what) + " must lie in (0, 1), got " + r.str());
}

/// Smallest (k, a) witnessing the inequality for `t`, or nullopt.
///
/// a/k must lie in (s2, min(1 - s3, 1/2)] (open at 1 - s3). The fraction of
/// least denominator there is unique, and if it fails k * s1 < 1 then every
/// other candidate, having a larger k, fails too.
inline std::optional<FoliationWitness> witness_search(const SortedTriple& t) {
  for (int i = 0; i < 3; ++i) require_unit_interval(t[i], "triple entry");
  const Rational half(Integer(1), Integer(2));
  const Rational top = Rational(1) - t.s3();
  const bool hi_closed = half < top;
  const Rational& hi = hi_closed ? half : top;
  auto frac = simplest(t.s2(), false, hi, hi_closed);
  if (!frac) return std::nullopt;
  if (Rational(frac->den()) * t.s1() >= Rational(1)) return std::nullopt;
  return FoliationWitness{frac->den(), frac->num()};
}

inline SortedTriple dual_triple(const SortedTriple& t) {
  const Rational one(1);
  return SortedTriple(one - t.s1(), one - t.s2(), one - t.s3());
}

inline LSpaceVerdict decide(const SeifertForm& f) {
  LSpaceVerdict v;
  if (f.base == Base::RP2) {
    v.reason = Reason::RP2Base;
    return v;
  }
  const std::size_t k = f.slopes.size();
  if (k > 3) throw Error(ErrorCode::UnsupportedFiberCount, std::to_string(k) + " exceptional fibers");
  if (f.degenerate_count >= 2) {
    if (k != 0)
      throw Error(ErrorCode::UnsupportedFiberCount, "several degenerate fibers alongside exceptional fibers");
    v.is_lspace = false;
    v.reason = Reason::InfiniteH1;
    return v;
  }
  if (f.degenerate_count == 1) {
    if (k == 3) throw Error(ErrorCode::UnsupportedFiberCount, "degenerate fiber with three exceptional fibers");
    v.reason = k == 2 ? Reason::ConnectedSumOfLSpaces : Reason::LensNotS2xS1;
    return v;
  }

  std::optional<SortedTriple> searched;
  if (k == 3 && (f.b == -1 || f.b == -2)) {
    SortedTriple t(f.slopes[0], f.slopes[1], f.slopes[2]);
    v.witness_on_dual = f.b == -2;
    searched = v.witness_on_dual ? dual_triple(t) : t;
    v.search_bound = witness_search_bound(searched->s1());
    v.witness = witness_search(*searched);
  }

  if (h1_order(f).is_infinite()) {
    v.is_lspace = false;
    v.reason = Reason::InfiniteH1;
    return v;
  }
  if (k <= 2) {
    v.reason = Reason::LensNotS2xS1;
    return v;
  }
  if (!searched) {
    v.reason = Reason::BLarge;
    return v;
  }
  if (v.witness) {
    v.is_lspace = false;
    v.reason = v.witness_on_dual ? Reason::DualWitness : Reason::Witness;
  } else {
    v.reason = Reason::NoWitnessExhaustive;
  }
  return v;
}

/// Closed-form L-space conditions that avoid the witness search. Never
/// answers false.
inline std::optional<bool> sufficient_conditions(const SeifertForm& f) {
  if (f.base != Base::S2 || f.degenerate_count != 0 || f.slopes.size() != 3)
    throw Error(ErrorCode::PreconditionFailed, "sufficient_conditions needs three finite slopes");
  if (f.b != -1 && f.b != -2) return true;
  const auto& s = f.slopes;  // sorted
  if (f.b == -1 && s[1] + s[2] >= Rational(1)) return true;
  if (f.b == -2 && s[0] + s[1] <= Rational(1)) return true;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Third-slot thresholds: the set of r in (0, 1) for which S^2(b; r1, r2, r)
// is an L-space.

enum class SetKind { Empty, All, UpClosed, DownClosed };

inline const char* to_string(SetKind k) {
  switch (k) {
    case SetKind::Empty: return "Empty";
    case SetKind::All: return "All";
    case SetKind::UpClosed: return "UpClosed";
    case SetKind::DownClosed: return "DownClosed";
  }
  return "Unknown";
}

struct ThirdSlotThreshold {
  Integer b;
  Rational r1;
  Rational r2;
  SetKind kind = SetKind::All;
  Rational t;             // boundary for UpClosed / DownClosed
  bool attained = false;  // whether t itself belongs to the set

  bool contains(const Rational& r) const {
    switch (kind) {
      case SetKind::Empty: return false;
      case SetKind::All: return true;
      case SetKind::UpClosed: return r > t || (r == t && attained);
      case SetKind::DownClosed: return r < t || (r == t && attained);
    }
    return false;
  }
};

namespace detail {

inline bool coprime(const Integer& a, const Integer& k) { return gcd(a, k) == 1; }

/// For b = -1 and r1 <= r2: the supremum t of the r where a witness exists.
/// The non-L-space set is then exactly (0, t).
inline Rational non_lspace_supremum(const Rational& r1, const Rational& r2) {
  const Rational one(1);
  const Rational half(Integer(1), Integer(2));
  Rational best(0);

  // r is the smallest entry: minimal k admitting r1 < a/k < 1 - r2, a <= k/2.
  {
    const Rational top = one - r2;
    const bool hi_closed = half < top;
    auto frac = simplest(r1, false, hi_closed ? half : top, hi_closed);
    if (frac) best = max(best, min(Rational(Integer(1), frac->den()), r1));
  }

  // r is the middle or largest entry: r1 sits in the first slot, so k*r1 < 1.
  const Integer kmax = witness_search_bound(r1);
  for (Integer k = 2; k <= kmax; ++k) {
    const Integer half_k = k / 2;
    // Largest entry: smallest admissible a > r2 * k maximizes (k - a) / k.
    for (Integer a = (r2 * Rational(k)).floor() + 1; a <= half_k; ++a) {
      if (coprime(a, k)) {
        best = max(best, Rational(k - a, k));
        break;
      }
    }
    // Middle entry: largest admissible a with a/k < 1 - r2.
    Integer a_hi = ((one - r2) * Rational(k)).ceil() - 1;
    if (a_hi > half_k) a_hi = half_k;
    for (Integer a = a_hi; a >= 1; --a) {
      if (coprime(a, k)) {
        best = max(best, Rational(a, k));
        break;
      }
    }
  }
  return best;
}

}  // namespace detail

inline ThirdSlotThreshold third_slot_threshold(const Integer& b, const Rational& r1, const Rational& r2) {
  require_unit_interval(r1, "r1");
  require_unit_interval(r2, "r2");
  ThirdSlotThreshold th;
  th.b = b;
  th.r1 = min(r1, r2);
  th.r2 = max(r1, r2);
  if (b != -1 && b != -2) {
    th.kind = SetKind::All;
    return th;
  }
  const Rational one(1);
  auto attained_at = [&](const Rational& r) {
    return decide(normalize(b, {ExtRational(th.r1), ExtRational(th.r2), ExtRational(r)})).is_lspace;
  };
  if (b == -1) {
    th.kind = SetKind::UpClosed;
    th.t = detail::non_lspace_supremum(th.r1, th.r2);
    th.attained = th.t.is_zero() ? false : attained_at(th.t);
  } else {
    th.kind = SetKind::DownClosed;
    const Rational dual = detail::non_lspace_supremum(one - th.r2, one - th.r1);
    th.t = one - dual;
    th.attained = dual.is_zero() ? false : attained_at(th.t);
  }
  return th;
}

}  // namespace seifert_lspace
