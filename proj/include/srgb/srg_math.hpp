#ifndef SRGB_SRG_MATH_HPP
#define SRGB_SRG_MATH_HPP

#include <cstdint>
#include <string>

#include "checked.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace srgb {

/// Exact spectrum of a strongly regular graph with integral eigenvalues.
struct Spectrum {
  std::int64_t discriminant = 0; ///< (λ-μ)² + 4(k-μ)
  std::int64_t sqrt_discriminant = 0;
  std::int64_t r = 0; ///< second-largest eigenvalue
  std::int64_t s = 0; ///< smallest eigenvalue
  std::int64_t f = 0; ///< multiplicity of r

  friend bool operator==(const Spectrum &, const Spectrum &) = default;
};

/// Inner products of the representation vectors y_i (columns of A - sI).
struct GramEntries {
  std::int64_t diag = 0; ///< s² + k
  std::int64_t adj = 0;  ///< λ - 2s
  std::int64_t non = 0;  ///< μ

  friend bool operator==(const GramEntries &, const GramEntries &) = default;
};

struct DistanceSquares {
  std::int64_t adj = 0;    ///< 2(k - λ + s² + 2s)
  std::int64_t non = 0;    ///< 2(k - μ + s²)
  std::int64_t excess = 0; ///< non - adj = 2·sqrtΔ

  friend bool operator==(const DistanceSquares &, const DistanceSquares &) = default;
};

/// The discriminant is not a perfect square (conference graph); eigenvalues are irrational.
class ConferenceCase : public Error {
public:
  explicit ConferenceCase(const SrgParams &p, std::int64_t disc)
      : Error("discriminant " + std::to_string(disc) + " of " + p.to_string() +
              " is not a perfect square (conference-type parameters are not supported)") {}
};

class NonIntegralMultiplicity : public Error {
public:
  using Error::Error;
};

/// Basic sanity of a parameter tuple; does not prove feasibility.
inline void check_params(const SrgParams &p) {
  if (p.v < 2 || p.k < 0 || p.lambda < 0 || p.mu < 0 || p.k >= p.v || p.lambda > p.k || p.mu > p.k)
    throw InvalidArgument("invalid SRG parameters " + p.to_string());
  using namespace checked;
  if (p.v > p.k + 1 &&
      mul(p.k, sub(sub(p.k, p.lambda), 1)) != mul(sub(sub(p.v, p.k), 1), p.mu))
    throw InvalidArgument("parameters " + p.to_string() + " violate k(k-lambda-1) = (v-k-1)mu");
}

/// Eigenvalues r > s and the multiplicity f of r, all exact.
///
/// f = ( v - 1 - (2k + (v-1)(λ-μ)) / sqrtΔ ) / 2, and both divisions must be exact.
inline Spectrum spectrum(const SrgParams &p) {
  check_params(p);
  if (p.k == p.v - 1)
    throw InvalidArgument("spectrum of a complete graph has no smallest non-trivial eigenvalue");
  using namespace checked;
  Spectrum sp;
  const std::int64_t lm = sub(p.lambda, p.mu);
  sp.discriminant = add(mul(lm, lm), mul(4, sub(p.k, p.mu)));
  if (sp.discriminant <= 0)
    throw InvalidArgument("degenerate discriminant for " + p.to_string());
  sp.sqrt_discriminant = exact_sqrt(sp.discriminant);
  if (sp.sqrt_discriminant < 0)
    throw ConferenceCase(p, sp.discriminant);
  // λ-μ ± sqrtΔ is always even: sqrtΔ² ≡ (λ-μ)² (mod 4).
  sp.r = (lm + sp.sqrt_discriminant) / 2;
  sp.s = (lm - sp.sqrt_discriminant) / 2;

  const std::int64_t numer = add(mul(2, p.k), mul(sub(p.v, 1), lm));
  if (numer % sp.sqrt_discriminant != 0)
    throw NonIntegralMultiplicity("multiplicity formula is not integral for " + p.to_string());
  const std::int64_t twice_f = sub(sub(p.v, 1), numer / sp.sqrt_discriminant);
  if (twice_f % 2 != 0 || twice_f < 0)
    throw NonIntegralMultiplicity("multiplicity formula is not integral for " + p.to_string());
  sp.f = twice_f / 2;
  if (add(p.k, add(mul(sp.f, sp.r), mul(sub(sub(p.v, 1), sp.f), sp.s))) != 0)
    throw NonIntegralMultiplicity("trace identity fails for " + p.to_string());
  return sp;
}

inline GramEntries gram_entries(const SrgParams &p, const Spectrum &sp) {
  using namespace checked;
  return {add(mul(sp.s, sp.s), p.k), sub(p.lambda, mul(2, sp.s)), p.mu};
}

inline DistanceSquares distance_squares(const SrgParams &p, const Spectrum &sp) {
  using namespace checked;
  const std::int64_t s2 = mul(sp.s, sp.s);
  DistanceSquares d;
  d.adj = mul(2, add(sub(p.k, p.lambda), add(s2, mul(2, sp.s))));
  d.non = mul(2, add(sub(p.k, p.mu), s2));
  d.excess = sub(d.non, d.adj);
  return d;
}

} // namespace srgb

#endif // SRGB_SRG_MATH_HPP
