#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <vector>

// Deliberately simple reference implementations. None of them call into
// mvz_core, so they can serve as the other side of an oracle comparison.
namespace oracle {

/// 2^{n-1} #{(m_1..m_n) in [1,t]^n : prod m_i = r^n, gcd(m_1..m_n, r) = 1}, by
/// brute force over all tuples.
std::uint64_t census(unsigned n, std::uint64_t t);

/// sum over the box of [gcd(m) = 1 and prod_i m_i^{a_ji} = 1 for every row j],
/// times #{eps in {+-1}^n satisfying the same relations} / 2.
std::uint64_t box_count(const std::vector<std::vector<long>>& rows, const std::vector<std::uint64_t>& box);

/// Number of nu in N^n with A nu = b, some coordinate zero if restricted,
/// keyed by exponent vector, up to total weight n.
std::map<std::vector<std::uint32_t>, long> kernel_points(const std::vector<std::vector<long>>& rows,
                                                        const std::vector<long>& b, bool restricted,
                                                        unsigned weight);

/// Coefficients of prod_m (1 - X^m)^{e(m)} to weight n for univariate
/// exponent data, computed by exp of log over the rationals.
std::vector<mpz_class> univariate_product(const std::map<unsigned, long>& e, unsigned n);

/// exp(L) to total weight n for a multivariate rational series L without
/// constant term, via the graded recurrence w f_w = sum_k k L_k f_{w-k}.
std::map<std::vector<std::uint32_t>, mpq_class> exp_graded(
    std::size_t nvars, const std::map<std::vector<std::uint32_t>, mpq_class>& log_terms, unsigned n);

/// Dirichlet coefficients of zeta(s) / zeta(2s) up to n: 1 on squarefree.
std::vector<int> squarefree_indicator(unsigned n);

/// True when point x lies strictly inside the convex hull of the others'
/// upward closures, tested by brute force over convex combinations of
/// pairs: used to check a candidate extremal set in two variables.
bool dominated_2d(const std::vector<std::pair<long, long>>& points, std::size_t index);

}  // namespace oracle
