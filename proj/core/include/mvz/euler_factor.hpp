#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mvz/exponent.hpp"
#include "mvz/series.hpp"

namespace mvz {

/// h = prod_m (1 - X^m)^{e(m)} modulo terms of weight > cutoff.
struct CyclotomicFactorization {
  std::size_t nvars = 0;
  std::optional<std::size_t> prime_var;
  std::uint64_t cutoff = 0;
  std::map<ExponentVector, Integer> exponents;  ///< nonzero e(m) only
  std::optional<SparseSeries> residual;          ///< h / reconstruct(...), must be 1

  Integer exponent(const ExponentVector& m) const;
};

struct FactorizeOptions {
  std::optional<std::size_t> prime_var;
  bool compute_residual = true;
};

/// Throws ConstantTermNotOne, CutoffExceeded or NonIntegralExponent.
CyclotomicFactorization factorize(const SparseSeries& h, std::uint64_t n, FactorizeOptions options = {});

/// prod (1 - X^m)^{e(m)} truncated at weight n <= f.cutoff.
SparseSeries reconstruct(const CyclotomicFactorization& f, std::uint64_t n);

struct CyclotomicVerdict {
  bool cyclotomic = false;
  std::uint64_t bound = 0;
  /// The proven exponent list when cyclotomic, else the exponents found to `bound`.
  std::map<ExponentVector, Integer> exponents;
  std::optional<ExponentVector> witness;  ///< highest nonzero e(m) when not cyclotomic
};

/// Cyclotomic is a proof by exact polynomial identity; the negative verdict
/// only states that no certificate was found up to weight `bound`
/// (default 4 * deg h).
CyclotomicVerdict cyclotomic_test(const SparseSeries& h, std::optional<std::uint64_t> bound = std::nullopt);

/// zeta(<form, s> - shift)^gamma
struct ZetaFactor {
  ExponentVector form;
  std::uint64_t shift = 0;
  Integer gamma;
};

std::vector<ZetaFactor> zeta_translation(const CyclotomicFactorization& f);

enum class BoundaryVariant { V, Vsharp };

/// <nu, sigma> > k + delta
struct Halfspace {
  ExponentVector nu;
  std::uint64_t k = 0;
};

/// Rational or +infinity.
struct Abscissa {
  bool infinite = false;
  Rational value;

  bool operator==(const Abscissa& o) const { return infinite == o.infinite && (infinite || value == o.value); }
};

struct BetaPair {
  Abscissa beta0;
  Abscissa beta1;
};

struct BoundaryDescriptor {
  BoundaryVariant variant = BoundaryVariant::Vsharp;
  std::vector<Halfspace> halfspaces;
  std::size_t positivity = 0;  ///< trailing halfspaces sigma_i > delta added for V
  std::optional<BetaPair> beta;
};

BoundaryDescriptor boundary(const SparseSeries& h, std::optional<std::size_t> prime_var, BoundaryVariant variant);

/// For bivariate h = 1 + H: beta0 = max_j deg_p(H_j)/j over H = sum_j H_j(X_p) Y^j
/// and beta1 = max_k k/ord_Y(h_k) over H = sum_k h_k(Y) X_p^k. Throws ZeroH.
BetaPair boundary_abscissas(const SparseSeries& h, std::size_t prime_var);

const char* to_string(BoundaryVariant v);

}  // namespace mvz
