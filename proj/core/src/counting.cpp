#include "mvz/counting.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mvz/dense.hpp"
#include "mvz/errors.hpp"
#include "mvz/parallel.hpp"

namespace mvz {

namespace {

constexpr std::uint64_t kMaxSieve = 100'000'000;

using Factorization = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Factorization factor(std::uint32_t x, const std::vector<std::uint32_t>& spf) {
  Factorization f;
  while (x > 1) {
    std::uint32_t p = spf[x], e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  return f;
}

/// #{1 <= m <= bound : gcd(m, g) = 1}; g = 0 means the empty gcd.
std::uint64_t coprime_count(std::uint64_t g, std::uint64_t bound, const std::vector<std::uint32_t>& spf) {
  if (g == 0) return bound >= 1 ? 1 : 0;
  std::vector<std::uint64_t> primes;
  for (auto [p, e] : factor(static_cast<std::uint32_t>(g), spf)) primes.push_back(p);
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::uint64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((mask >> i) & 1) {
        d *= primes[i];
        ++bits;
      }
    }
    total += (bits & 1 ? -1 : 1) * static_cast<std::int64_t>(bound / d);
  }
  return static_cast<std::uint64_t>(total);
}

/// Counts box tuples with the first coordinate fixed, solving the last
/// coordinate from a pivot row when one exists.
class BoxShard {
 public:
  BoxShard(const ToricMatrix& a, const BoxSpec& box, const std::vector<std::uint32_t>& spf)
      : a_(a), box_(box), spf_(spf), last_(a.n - 1), pivot_(a.d()) {
    for (std::size_t j = 0; j < a.d(); ++j) {
      if (a.rows[j][last_] != 0) {
        pivot_ = j;
        break;
      }
    }
  }

  std::uint64_t count(std::uint64_t first) {
    count_ = 0;
    sums_.clear();
    if (last_ == 0) {
      leaf(0);
      return count_;
    }
    apply(0, static_cast<std::uint32_t>(first), +1);
    descend(1, first);
    return count_;
  }

 private:
  void apply(std::size_t col, std::uint32_t m, int sign) {
    for (auto [p, e] : factor(m, spf_)) {
      auto& s = sums_[p];
      if (s.empty()) s.assign(a_.d(), 0);
      for (std::size_t j = 0; j < a_.d(); ++j) s[j] += sign * a_.rows[j][col] * static_cast<long>(e);
      if (std::all_of(s.begin(), s.end(), [](long x) { return x == 0; })) sums_.erase(p);
    }
  }

  void descend(std::size_t col, std::uint64_t g) {
    if (col == last_) {
      leaf(g);
      return;
    }
    for (std::uint64_t m = 1; m <= box_.bounds[col]; ++m) {
      apply(col, static_cast<std::uint32_t>(m), +1);
      descend(col + 1, std::gcd(g, m));
      apply(col, static_cast<std::uint32_t>(m), -1);
    }
  }

  void leaf(std::uint64_t g) {
    const std::uint64_t bound = box_.bounds[last_];
    if (pivot_ == a_.d()) {
      if (sums_.empty()) count_ += coprime_count(g, bound, spf_);
      return;
    }
    const long a_last = a_.rows[pivot_][last_];
    std::uint64_t m = 1;
    for (const auto& [p, s] : sums_) {
      long num = -s[pivot_];
      if (num % a_last != 0) return;
      long v = num / a_last;
      if (v < 0) return;
      for (std::size_t j = 0; j < a_.d(); ++j) {
        if (s[j] + a_.rows[j][last_] * v != 0) return;
      }
      for (long k = 0; k < v; ++k) {
        m *= p;
        if (m > bound) return;
      }
    }
    if (std::gcd(g, m) == 1) ++count_;
  }

  const ToricMatrix& a_;
  const BoxSpec& box_;
  const std::vector<std::uint32_t>& spf_;
  std::size_t last_;
  std::size_t pivot_;  ///< first row with a nonzero last entry, or d
  std::map<std::uint32_t, std::vector<long>> sums_;
  std::uint64_t count_ = 0;
};

}  // namespace

BoxSpec BoxSpec::from_growth(std::uint64_t t, const RationalVector& gamma) {
  if (t < 1) throw InvalidInput("box growth parameter t must be >= 1");
  BoxSpec box;
  for (const auto& g : gamma) {
    if (g < 0) throw InvalidInput("box growth exponents must be nonnegative");
    // floor(t^{p/q}) = floor((t^p)^{1/q})
    Integer tp, root;
    mpz_ui_pow_ui(tp.get_mpz_t(), t, g.get_num().get_ui());
    mpz_root(root.get_mpz_t(), tp.get_mpz_t(), g.get_den().get_ui());
    if (!root.fits_ulong_p()) throw BudgetExceeded("box bound does not fit in 64 bits");
    box.bounds.push_back(std::max<std::uint64_t>(1, root.get_ui()));
  }
  return box;
}

std::size_t box_shards(const ToricMatrix& a, const BoxSpec& box) {
  if (box.bounds.size() != a.n) throw DimensionMismatch("box has wrong dimension");
  return a.n == 1 ? 1 : box.bounds[0];
}

Integer box_count(const ToricMatrix& a, const BoxSpec& box, ParallelOptions options) {
  if (box.bounds.size() != a.n) throw DimensionMismatch("box has wrong dimension");
  std::uint64_t top = 1;
  for (auto b : box.bounds) {
    if (b < 1) throw InvalidInput("box bounds must be >= 1");
    top = std::max(top, b);
  }
  if (top > kMaxSieve) throw BudgetExceeded("box bound exceeds the sieve limit");
  auto spf = smallest_prime_factors(static_cast<std::uint32_t>(top));

  const std::size_t shards = box_shards(a, box);
  std::vector<std::uint64_t> partial(shards, 0);
  for_each_shard(shards, options.threads, [&](std::size_t s) {
    BoxShard shard(a, box, spf);
    partial[s] = shard.count(s + 1);
  });
  Integer total = 0;
  for (auto c : partial) total += static_cast<unsigned long>(c);
  return toric_constant(a) * total;
}

namespace {

/// Exponent vector mod n, as sorted (prime, residue) pairs with residue != 0.
using Signature = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto [p, e] : s) h = (h ^ (std::size_t{p} * 31 + e)) * 0x100000001b3ull;
    return h;
  }
};

Signature combine(const Signature& x, const Signature& y, std::uint32_t n) {
  Signature out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      std::uint32_t e = (x[i].second + y[j].second) % n;
      if (e != 0) out.emplace_back(x[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Signature negate(const Signature& s, std::uint32_t n) {
  Signature out = s;
  for (auto& [p, e] : out) e = n - e;
  return out;
}

using SignatureCounts = std::unordered_map<Signature, std::uint64_t, SignatureHash>;

}  // namespace

Integer nth_power_census(unsigned n, std::uint64_t t, ParallelOptions options) {
  if (n < 2) throw InvalidInput("nth_power_census needs n >= 2");
  if (t < 1) throw InvalidInput("nth_power_census needs t >= 1");
  if (t > kMaxSieve) throw BudgetExceeded("census bound exceeds the sieve limit");
  auto spf = smallest_prime_factors(static_cast<std::uint32_t>(t));
  auto mu = mobius_table(static_cast<std::uint32_t>(t));

  std::vector<Signature> sig(t + 1);
  for (std::uint64_t x = 2; x <= t; ++x) {
    for (auto [p, e] : factor(static_cast<std::uint32_t>(x), spf)) {
      if (e % n != 0) sig[x].emplace_back(p, e % n);
    }
  }

  // N = 2^{n-1} sum_d mu(d) G(t/d), with G(T) the number of n-tuples in
  // [1,T]^n whose product is an n-th power. One task per (d, m_1).
  std::map<std::uint64_t, SignatureCounts> last_counts;
  struct Task {
    std::uint64_t bound;
    std::uint64_t first;
    int sign;
  };
  std::vector<Task> tasks;
  for (std::uint64_t d = 1; d <= t; ++d) {
    if (mu[d] == 0) continue;
    const std::uint64_t bound = t / d;
    if (!last_counts.count(bound)) {
      auto& c = last_counts[bound];
      for (std::uint64_t x = 1; x <= bound; ++x) ++c[sig[x]];
    }
    for (std::uint64_t m = 1; m <= bound; ++m) tasks.push_back({bound, m, mu[d]});
  }

  std::vector<std::int64_t> partial(tasks.size(), 0);
  for_each_shard(tasks.size(), options.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    SignatureCounts states{{sig[task.first], 1}};
    for (unsigned col = 1; col + 1 < n; ++col) {
      SignatureCounts next;
      for (const auto& [s, c] : states) {
        for (std::uint64_t x = 1; x <= task.bound; ++x) next[combine(s, sig[x], n)] += c;
      }
      states = std::move(next);
    }
    const auto& counts = last_counts.at(task.bound);
    std::uint64_t hits = 0;
    for (const auto& [s, c] : states) {
      auto it = counts.find(negate(s, n));
      if (it != counts.end()) hits += c * it->second;
    }
    partial[i] = task.sign * static_cast<std::int64_t>(hits);
  });
  Integer total = 0;
  for (auto v : partial) total += static_cast<long>(v);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, n - 1);
  return scale * total;
}

std::size_t census_shards(std::uint64_t t) {
  if (t < 1 || t > kMaxSieve) return 0;
  auto mu = mobius_table(static_cast<std::uint32_t>(t));
  std::size_t shards = 0;
  for (std::uint64_t d = 1; d <= t; ++d) {
    if (mu[d] != 0) shards += t / d;
  }
  return shards;
}

bool dirichlet_compare(const Presentation& p, const ToricMatrix& a, const std::vector<std::uint64_t>& primes,
                       unsigned e) {
  if (p.nvars != a.n) throw DimensionMismatch("presentation and matrix dimensions differ");
  const std::uint64_t weight = static_cast<std::uint64_t>(e) * a.n;
  SparseSeries expansion = p.empty ? SparseSeries(a.n, weight) : p.expand(weight);
  ExponentVector nu(a.n);
  std::vector<Integer> m(a.n);
  for (;;) {
    Integer c = expansion.coeff(nu);
    for (auto q : primes) {
      for (std::size_t i = 0; i < a.n; ++i) mpz_ui_pow_ui(m[i].get_mpz_t(), q, nu[i]);
      if (c != invariant_indicator(a, m)) return false;
    }
    std::size_t i = 0;
    while (i < a.n && nu[i] == e) nu[i++] = 0;
    if (i == a.n) break;
    ++nu[i];
  }
  return true;
}

std::map<std::uint64_t, std::uint64_t> subgroup_orders(std::uint64_t n1, std::uint64_t n2, std::uint64_t budget) {
  if (n1 < 1 || n2 < 1 || n2 % n1 != 0) throw InvalidInput("subgroup enumeration needs n1 | n2");
  const std::uint64_t size = n1 * n2;
  if (size > budget) {
    throw BudgetExceeded("group of order " + std::to_string(size) + " exceeds the enumeration budget " +
                         std::to_string(budget));
  }
  const std::size_t words = (size + 63) / 64;
  auto order_of = [&](std::uint64_t u, std::uint64_t v) {
    return std::lcm(n1 / std::gcd(u, n1), n2 / std::gcd(v, n2));
  };
  std::set<std::vector<std::uint64_t>> seen;
  std::map<std::uint64_t, std::uint64_t> by_order;
  for (std::uint64_t g = 0; g < size; ++g) {
    const std::uint64_t u1 = g / n2, v1 = g % n2, og = order_of(u1, v1);
    for (std::uint64_t h = g; h < size; ++h) {
      const std::uint64_t u2 = h / n2, v2 = h % n2, oh = order_of(u2, v2);
      std::vector<std::uint64_t> bits(words, 0);
      std::uint64_t count = 0;
      for (std::uint64_t k = 0; k < og; ++k) {
        for (std::uint64_t l = 0; l < oh; ++l) {
          std::uint64_t u = (k * u1 + l * u2) % n1, v = (k * v1 + l * v2) % n2, id = u * n2 + v;
          std::uint64_t& w = bits[id / 64];
          if (!(w >> (id % 64) & 1)) {
            w |= std::uint64_t{1} << (id % 64);
            ++count;
          }
        }
      }
      if (seen.insert(std::move(bits)).second) ++by_order[count];
    }
  }
  return by_order;
}

Integer subgroup_count(std::uint64_t n1, std::uint64_t n2, unsigned a, std::uint64_t budget) {
  Integer tau = 0, t;
  for (auto [order, count] : subgroup_orders(n1, n2, budget)) {
    mpz_ui_pow_ui(t.get_mpz_t(), order, a);
    tau += t * static_cast<unsigned long>(count);
  }
  return tau;
}

namespace {

std::uint32_t valuation(std::uint64_t& x, std::uint64_t p) {
  std::uint32_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// Coefficient of x^i y^j in the local factor at p.
Integer local_coefficient(unsigned a, std::uint64_t p, std::uint32_t i, std::uint32_t j, AbelianVariant variant) {
  std::vector<std::vector<Integer>> c(i + 1, std::vector<Integer>(j + 1, 0));
  Integer pa;
  mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
  c[0][0] = 1;
  if (i >= 1) c[1][0] += pa;
  if (i >= 1 && j >= 1) c[1][1] -= (pa + 1) * pa;
  auto geometric = [&](bool in_x, unsigned shift) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, shift);
    for (std::uint32_t r = 0; r <= i; ++r) {
      for (std::uint32_t s = 0; s <= j; ++s) {
        if (in_x && r > 0) c[r][s] += q * c[r - 1][s];
        if (!in_x && s > 0) c[r][s] += q * c[r][s - 1];
      }
    }
  };
  geometric(true, 0);
  geometric(true, 2 * a);
  geometric(true, a + 1);
  geometric(false, 0);
  geometric(false, variant == AbelianVariant::Displayed ? 2 * a : a);
  return c[i][j];
}

}  // namespace

Integer abelian_product_coefficient(unsigned a, std::uint64_t n1, std::uint64_t m, AbelianVariant variant) {
  if (n1 < 1 || m < 1) throw InvalidInput("Dirichlet indices must be positive");
  Integer coeff = 1;
  std::uint64_t x = n1, y = m;
  for (std::uint64_t p = 2; x > 1 || y > 1; ++p) {
    if (p * p > std::max(x, y) && x % p != 0 && y % p != 0) {
      // Remaining cofactors are 1 or prime.
      std::set<std::uint64_t> rest;
      if (x > 1) rest.insert(x);
      if (y > 1) rest.insert(y);
      for (auto q : rest) {
        std::uint32_t i = valuation(x, q), j = valuation(y, q);
        coeff *= local_coefficient(a, q, i, j, variant);
      }
      break;
    }
    std::uint32_t i = valuation(x, p), j = valuation(y, p);
    if (i || j) coeff *= local_coefficient(a, p, i, j, variant);
  }
  return coeff;
}

AbelianCheck abelian_euler_check(unsigned a, std::uint64_t x, AbelianVariant variant) {
  AbelianCheck r;
  for (std::uint64_t n2 = 1; n2 <= x; ++n2) {
    for (std::uint64_t n1 = 1; n1 <= n2; ++n1) {
      if (n2 % n1 != 0) continue;
      ++r.compared;
      Integer lhs = abelian_product_coefficient(a, n1, n2 / n1, variant);
      Integer rhs = subgroup_count(n1, n2, a);
      if (lhs != rhs) {
        r.ok = false;
        ++r.disagreements;
        if (r.mismatches.size() < 8) {
          r.mismatches.push_back("Z/" + std::to_string(n1) + "+Z/" + std::to_string(n2) + ": product " +
                                 lhs.get_str() + ", subgroups " + rhs.get_str());
        }
      }
    }
  }
  return r;
}

const char* to_string(AbelianVariant v) { return v == AbelianVariant::Displayed ? "displayed" : "corrected"; }

}  // namespace mvz
