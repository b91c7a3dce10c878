#include "nsq/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace nsq {

namespace {

// Quotient of a primitive semigroup by d, as a generator list.
std::vector<i64> primitive_quotient_gens(const NumericalSemigroup& s, i64 d) {
  const i64 bound = s.frobenius() + s.primitive_multiplicity();
  std::vector<i64> found;
  for (i64 t = 1; t <= bound; ++t)
    if (s.contains_primitive(checked_mul(d, t))) found.push_back(t);
  if (found.empty()) found.push_back(bound + 1);  // F = -1 case: ℕ/d = ℕ
  return found;
}

}  // namespace

NumericalSemigroup quotient(const NumericalSemigroup& s, i64 d) {
  if (d < 1) fail(errc::non_positive_generator, "quotient denominator must be >= 1");
  if (d == 1) return s;
  const i64 g = std::gcd(s.content(), d);
  const i64 residual_scale = s.content() / g;
  const i64 dprime = d / g;

  // Primitive part of s, rebuilt only when the content is nontrivial.
  if (s.content() == 1) {
    return NumericalSemigroup::from_generators(primitive_quotient_gens(s, dprime));
  }
  std::vector<i64> prim_gens;
  prim_gens.reserve(s.min_gens().size());
  for (i64 a : s.min_gens()) prim_gens.push_back(a / s.content());
  const auto prim = NumericalSemigroup::from_generators(prim_gens);
  auto q = NumericalSemigroup::from_generators(primitive_quotient_gens(prim, dprime));
  return scale(q, residual_scale);
}

NumericalSemigroup scale(const NumericalSemigroup& s, i64 c) {
  if (c < 1) fail(errc::non_positive_generator, "scale factor must be >= 1");
  std::vector<i64> gens;
  gens.reserve(s.min_gens().size());
  for (i64 a : s.min_gens()) gens.push_back(checked_mul(c, a));
  return NumericalSemigroup::from_generators(gens);
}

NumericalSemigroup add(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  std::vector<i64> gens = s.min_gens();
  gens.insert(gens.end(), t.min_gens().begin(), t.min_gens().end());
  return NumericalSemigroup::from_generators(gens);
}

QuotientRep normalize_rep(QuotientRep r) {
  if (r.scale < 1 || r.den < 1) fail(errc::non_positive_generator, "rep scale and denominator must be >= 1");
  if (r.num_gens.empty()) fail(errc::empty_input, "rep numerator is empty");
  const i64 g = std::gcd(r.scale, r.den);
  r.scale /= g;
  r.den /= g;
  return r;
}

QuotientRep quotient_sum_coprime(const QuotientRep& a, const QuotientRep& b) {
  QuotientRep na = normalize_rep(a);
  QuotientRep nb = normalize_rep(b);
  // Fold canonical scales into the numerators: gcd(scale, den) = 1 makes
  // scale·(⟨B⟩/den) = ⟨scale·B⟩/den.
  for (i64& g : na.num_gens) g = checked_mul(g, na.scale);
  for (i64& g : nb.num_gens) g = checked_mul(g, nb.scale);

  const i64 c = na.den, d = nb.den;
  if (std::gcd(c, d) != 1)
    fail(errc::not_coprime, "denominators " + std::to_string(c) + " and " + std::to_string(d));

  QuotientRep out;
  out.scale = 1;
  out.den = checked_mul(c, d);
  out.num_gens.reserve(na.num_gens.size() + nb.num_gens.size());
  for (i64 g : na.num_gens) out.num_gens.push_back(checked_mul(d, g));
  for (i64 g : nb.num_gens) out.num_gens.push_back(checked_mul(c, g));
  std::sort(out.num_gens.begin(), out.num_gens.end());
  out.num_gens.erase(std::unique(out.num_gens.begin(), out.num_gens.end()), out.num_gens.end());
  return out;
}

bool verify_rep(const NumericalSemigroup& s, const QuotientRep& rep) {
  const QuotientRep r = normalize_rep(rep);
  const auto num = NumericalSemigroup::from_generators(r.num_gens);

  // scale·(⟨B⟩/den) has content scale·(C/gcd(C, den)) where C = gcd(B);
  // the primitive parts must then agree, checked on generators and gaps.
  const i64 g = std::gcd(num.content(), r.den);
  const i64 dprime = r.den / g;
  if (s.content() != checked_mul(r.scale, num.content() / g)) return false;

  for (i64 a : s.min_gens()) {
    const i64 a0 = a / s.content();
    if (!num.contains_primitive(checked_mul(dprime, a0))) return false;
  }
  const i64 m0 = s.primitive_multiplicity();
  for (i64 w : s.apery())
    for (i64 v = w - m0; v >= 0; v -= m0)
      if (num.contains_primitive(checked_mul(dprime, v))) return false;
  return true;
}

NumericalSemigroup evaluate(const QuotientRep& rep) {
  const QuotientRep r = normalize_rep(rep);
  auto q = quotient(NumericalSemigroup::from_generators(r.num_gens), r.den);
  return r.scale == 1 ? q : scale(q, r.scale);
}

}  // namespace nsq
