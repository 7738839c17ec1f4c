#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvz/polyhedra.hpp"
#include "mvz/toric.hpp"

namespace mvz {

/// Inclusive per-coordinate upper bounds, all >= 1.
struct BoxSpec {
  std::vector<std::uint64_t> bounds;

  /// bounds_i = floor(t^{gamma_i}) for nonnegative rational gamma_i.
  static BoxSpec from_growth(std::uint64_t t, const RationalVector& gamma);
};

/// C(A) * sum_{m in box} F_A(m). Sharded over the first coordinate.
Integer box_count(const ToricMatrix& a, const BoxSpec& box, ParallelOptions options = {});

/// Number of work units box_count splits into; fixed by the input.
std::size_t box_shards(const ToricMatrix& a, const BoxSpec& box);

/// 2^{n-1} #{m in [1,t]^n : prod m_i is an n-th power, gcd(m) = 1}.
Integer nth_power_census(unsigned n, std::uint64_t t, ParallelOptions options = {});

/// Number of work units nth_power_census splits into: one per (d, m_1) with d squarefree.
std::size_t census_shards(std::uint64_t t);

/// Coefficient of X^nu in the expansion of p against F_A(p^nu_1, ..., p^nu_n)
/// for every listed prime and every nu in [0, e]^n.
bool dirichlet_compare(const Presentation& p, const ToricMatrix& a, const std::vector<std::uint64_t>& primes,
                       unsigned e);

/// Subgroups of Z/n1 + Z/n2 (n1 | n2) keyed by order. Throws BudgetExceeded
/// when n1 * n2 exceeds the budget.
std::map<std::uint64_t, std::uint64_t> subgroup_orders(std::uint64_t n1, std::uint64_t n2,
                                                       std::uint64_t budget = 1 << 12);

/// tau_a(Z/n1 + Z/n2) = sum over subgroups H of #H^a.
Integer subgroup_count(std::uint64_t n1, std::uint64_t n2, unsigned a, std::uint64_t budget = 1 << 12);

/// Which Euler product to expand. Displayed carries zeta(s2 - 2a); Corrected
/// carries zeta(s2 - a), the variant consistent with the subgroup counts.
enum class AbelianVariant { Displayed, Corrected };

/// zeta(s1) zeta(s1-2a) zeta(s2) zeta(s2-c) zeta(s1-a-1)
///   prod_p (1 + p^{a-s1} - (p^a+1) p^{a-s1-s2}),  c = 2a or a.
/// Returns the coefficient of n1^{-s1} m^{-s2}.
Integer abelian_product_coefficient(unsigned a, std::uint64_t n1, std::uint64_t m, AbelianVariant variant);

struct AbelianCheck {
  bool ok = true;
  std::uint64_t compared = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::string> mismatches;  ///< at most a handful, for reports
};

/// Compares abelian_product_coefficient(a, n1, n2/n1) with tau_a(Z/n1 + Z/n2)
/// for all n1 | n2 <= x.
AbelianCheck abelian_euler_check(unsigned a, std::uint64_t x, AbelianVariant variant = AbelianVariant::Displayed);

const char* to_string(AbelianVariant v);

}  // namespace mvz
