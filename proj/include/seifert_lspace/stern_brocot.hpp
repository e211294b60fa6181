#pragma once

#include <optional>

#include "seifert_lspace/exact_arith.hpp"

namespace seifert_lspace {

/// The fraction of smallest denominator in the interval between `lo` and
/// `hi` (each end open or closed), found by Stern-Brocot descent. Requires
/// lo >= 0. Returns nullopt when the interval is empty.
inline std::optional<Rational> simplest(const Rational& lo, bool lo_closed, const Rational& hi,
                                        bool hi_closed) {
  if (lo.sign() < 0) throw Error(ErrorCode::PreconditionFailed, "simplest() needs a nonnegative interval");
  if (hi < lo || (lo == hi && !(lo_closed && hi_closed))) return std::nullopt;
  if (lo.is_integer() && lo_closed) return lo;

  const Integer fl = lo.floor();
  const Rational next(fl + 1);
  if (next < hi || (next == hi && hi_closed)) return next;

  // Both ends now sit in [fl, fl + 1] with at least one end open.
  const Rational lo_frac = lo - Rational(fl);
  const Rational hi_frac = hi - Rational(fl);
  if (lo_frac.is_zero()) {
    const Rational inv = hi_frac.reciprocal();
    const Integer q = hi_closed ? inv.ceil() : inv.floor() + 1;
    return Rational(fl) + Rational(Integer(1), q);
  }
  auto inner = simplest(hi_frac.reciprocal(), hi_closed, lo_frac.reciprocal(), lo_closed);
  if (!inner) return std::nullopt;
  return Rational(fl) + inner->reciprocal();
}

}  // namespace seifert_lspace
