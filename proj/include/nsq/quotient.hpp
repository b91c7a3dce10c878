#pragma once

#include <vector>

#include "nsq/semigroup.hpp"

namespace nsq {

/// A claimed representation scale·(⟨num_gens⟩/den) of a numerical semigroup.
/// Canonical form keeps gcd(scale, den) = 1; normalize_rep enforces it.
struct QuotientRep {
  i64 scale = 1;
  std::vector<i64> num_gens;
  i64 den = 1;

  friend bool operator==(const QuotientRep&, const QuotientRep&) = default;
};

/// S/d = {t ∈ ℕ : dt ∈ S}.
///
/// Evaluated on the primitive part: every t with t > F(S/content) satisfies
/// dt ∈ S/content, so collecting quotient elements in [1, F + m] is enough to
/// generate the result (minimal generators of any oversemigroup never exceed
/// F + m).  Non-primitive inputs reduce via mS/d = m′(S/d′).
NumericalSemigroup quotient(const NumericalSemigroup& s, i64 d);

/// {c·s : s ∈ S}; the content multiplies by c.
NumericalSemigroup scale(const NumericalSemigroup& s, i64 c);

/// Sumset {s + t}.  Since both contain 0, this is ⟨min_gens(S) ∪ min_gens(T)⟩.
NumericalSemigroup add(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// Divide gcd(scale, den) out of a rep; the denoted semigroup is unchanged.
QuotientRep normalize_rep(QuotientRep r);

/// S/c + T/d = (dS + cT)/(cd) for coprime denominators.  Inputs are
/// normalized first; a leftover scale m with gcd(m, den) = 1 folds into the
/// numerator generators (m·(⟨B⟩/d) = ⟨mB⟩/d).  Throws errc::not_coprime when
/// gcd of the denominators exceeds 1.
QuotientRep quotient_sum_coprime(const QuotientRep& a, const QuotientRep& b);

/// Does rep denote exactly S?  Decided by the finite criterion: den·a must
/// lie in the numerator semigroup for every minimal generator a of the
/// primitive part of S, and den·g must not for every gap g.  This avoids
/// evaluating the quotient, whose numerator may have an enormous Frobenius
/// number while S itself has a tiny gap set.
bool verify_rep(const NumericalSemigroup& s, const QuotientRep& rep);

/// Evaluate the denoted semigroup scale·(⟨num_gens⟩/den).
NumericalSemigroup evaluate(const QuotientRep& rep);

}  // namespace nsq
