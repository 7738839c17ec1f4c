#include "mvz/toric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mvz/dense.hpp"
#include "mvz/errors.hpp"
#include "mvz/lp.hpp"

namespace mvz {

ToricMatrix ToricMatrix::from_rows(std::vector<std::vector<long>> rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("toric matrix needs at least one row and column");
  ToricMatrix a;
  a.n = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != a.n) throw DimensionMismatch("toric matrix rows have different lengths");
  }
  a.rows = std::move(rows);
  return a;
}

bool ToricMatrix::rows_sum_to_zero() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const auto& r) { return std::accumulate(r.begin(), r.end(), 0L) == 0; });
}

ToricMatrix ToricMatrix::columns(const std::vector<std::size_t>& cols) const {
  ToricMatrix a;
  a.n = cols.size();
  for (const auto& r : rows) {
    std::vector<long> sub;
    sub.reserve(cols.size());
    for (auto c : cols) sub.push_back(r[c]);
    a.rows.push_back(std::move(sub));
  }
  return a;
}

std::vector<long> ToricMatrix::apply(const ExponentVector& nu) const {
  if (nu.size() != n) throw DimensionMismatch("toric matrix applied to a vector of wrong length");
  std::vector<long> out;
  for (const auto& r : rows) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += r[i] * static_cast<long>(nu[i]);
    out.push_back(s);
  }
  return out;
}

ToricMatrix matrix_An(unsigned n) {
  if (n < 1) throw InvalidInput("A_n needs n >= 1");
  std::vector<long> row(n + 1, 1);
  row[n] = -static_cast<long>(n);
  return ToricMatrix::from_rows({row});
}

namespace {

void require_rhs(const ToricMatrix& a, const std::vector<long>& b) {
  if (b.size() != a.d()) throw DimensionMismatch("right-hand side length differs from the row count");
}

/// Depth-first enumeration of A nu = b with sum(nu) <= budget (or == budget).
class WeightEnumerator {
 public:
  WeightEnumerator(const ToricMatrix& a, const std::vector<long>& b) : a_(a), b_(b) {
    const std::size_t d = a.d();
    lo_.assign(d, std::vector<long>(a.n + 1, 0));
    hi_.assign(d, std::vector<long>(a.n + 1, 0));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = a.n; k-- > 0;) {
        lo_[j][k] = std::min(lo_[j][k + 1], a.rows[j][k]);
        hi_[j][k] = std::max(hi_[j][k + 1], a.rows[j][k]);
      }
    }
  }

  void run(std::uint64_t weight, bool exact, const std::function<void(const ExponentVector&)>& emit) {
    exact_ = exact;
    emit_ = &emit;
    cur_ = ExponentVector(a_.n);
    partial_.assign(a_.d(), 0);
    descend(0, static_cast<long>(weight));
  }

 private:
  bool feasible(std::size_t k, long rem) const {
    for (std::size_t j = 0; j < a_.d(); ++j) {
      long need = b_[j] - partial_[j];
      if (need < rem * lo_[j][k] || need > rem * hi_[j][k]) return false;
      if (rem == 0 && need != 0) return false;
    }
    return true;
  }

  void descend(std::size_t k, long rem) {
    if (k == a_.n) {
      if (exact_ && rem != 0) return;
      for (std::size_t j = 0; j < a_.d(); ++j) {
        if (partial_[j] != b_[j]) return;
      }
      (*emit_)(cur_);
      return;
    }
    if (!feasible(k, rem)) return;
    long lo = (exact_ && k + 1 == a_.n) ? rem : 0;
    for (long x = lo; x <= rem; ++x) {
      cur_[k] = static_cast<std::uint32_t>(x);
      for (std::size_t j = 0; j < a_.d(); ++j) partial_[j] += a_.rows[j][k] * x;
      descend(k + 1, rem - x);
      for (std::size_t j = 0; j < a_.d(); ++j) partial_[j] -= a_.rows[j][k] * x;
    }
    cur_[k] = 0;
  }

  const ToricMatrix& a_;
  const std::vector<long>& b_;
  std::vector<std::vector<long>> lo_, hi_;
  bool exact_ = false;
  const std::function<void(const ExponentVector&)>* emit_ = nullptr;
  ExponentVector cur_;
  std::vector<long> partial_;
};

/// Enumeration of A nu = b inside the box 0 <= nu_i <= upper_i.
std::vector<ExponentVector> enumerate_box(const ToricMatrix& a, const std::vector<long>& b,
                                          const std::vector<long>& upper, std::uint64_t budget) {
  const std::size_t d = a.d(), n = a.n;
  std::vector<std::vector<long>> lo(d, std::vector<long>(n + 1, 0)), hi(d, std::vector<long>(n + 1, 0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = n; k-- > 0;) {
      lo[j][k] = lo[j][k + 1] + std::min(0L, a.rows[j][k] * upper[k]);
      hi[j][k] = hi[j][k + 1] + std::max(0L, a.rows[j][k] * upper[k]);
    }
  }
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  std::vector<long> partial(d, 0);
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (++nodes > budget) {
      throw InconclusiveBound("bounded enumeration exceeded " + std::to_string(budget) + " nodes");
    }
    for (std::size_t j = 0; j < d; ++j) {
      long need = b[j] - partial[j];
      if (need < lo[j][k] || need > hi[j][k]) return;
    }
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (long x = 0; x <= upper[k]; ++x) {
      cur[k] = static_cast<std::uint32_t>(x);
      for (std::size_t j = 0; j < d; ++j) partial[j] += a.rows[j][k] * x;
      descend(k + 1);
      for (std::size_t j = 0; j < d; ++j) partial[j] -= a.rows[j][k] * x;
    }
    cur[k] = 0;
  };
  descend(0);
  std::sort(out.begin(), out.end());
  return out;
}

lp::Problem equality_system(const ToricMatrix& a, const std::vector<long>& b) {
  lp::Problem p;
  p.num_vars = a.n;
  for (std::size_t j = 0; j < a.d(); ++j) {
    RationalVector row(a.n);
    for (std::size_t i = 0; i < a.n; ++i) row[i] = a.rows[j][i];
    p.add(std::move(row), lp::Relation::Equal, b[j]);
  }
  return p;
}

}  // namespace

std::vector<ExponentVector> kernel_monoid(const ToricMatrix& a, const std::vector<long>& b, std::uint64_t n) {
  require_rhs(a, b);
  std::vector<ExponentVector> out;
  WeightEnumerator e(a, b);
  e.run(n, false, [&](const ExponentVector& v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

int invariant_indicator(const ToricMatrix& a, const std::vector<Integer>& m) {
  if (m.size() != a.n) throw DimensionMismatch("F_A: argument length differs from the column count");
  Integer g = 0;
  for (const auto& x : m) {
    if (x < 1) throw InvalidInput("F_A: arguments must be positive");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 1) return 0;
  for (const auto& row : a.rows) {
    Integer num = 1, den = 1, t;
    for (std::size_t i = 0; i < a.n; ++i) {
      if (row[i] == 0) continue;
      mpz_pow_ui(t.get_mpz_t(), m[i].get_mpz_t(), static_cast<unsigned long>(std::labs(row[i])));
      (row[i] > 0 ? num : den) *= t;
    }
    if (num != den) return 0;
  }
  return 1;
}

Presentation Presentation::one(std::size_t nvars) {
  Presentation p;
  p.nvars = nvars;
  p.W = SparseSeries::one(nvars);
  return p;
}

Presentation Presentation::zero(std::size_t nvars) {
  Presentation p;
  p.nvars = nvars;
  p.W = SparseSeries(nvars);
  p.empty = true;
  return p;
}

SparseSeries Presentation::expand(std::uint64_t n) const {
  MonomialTable table(nvars, static_cast<std::uint32_t>(n));
  dense::Coeffs c = dense::from_sparse(W, table);
  for (const auto& [nu, mult] : K) dense::multiply_binomial_power(c, table, nu, -static_cast<long>(mult));
  return dense::to_sparse(c, table);
}

bool Presentation::is_reduced() const {
  return std::none_of(K.begin(), K.end(), [&](const auto& kv) { return divide_by_binomial(W, kv.first).has_value(); });
}

void Presentation::reduce() {
  if (W.is_zero()) return;
  for (auto it = K.begin(); it != K.end();) {
    while (it->second > 0) {
      auto q = divide_by_binomial(W, it->first);
      if (!q) break;
      W = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? K.erase(it) : std::next(it);
  }
}

namespace {

/// Sum of presentations over a common denominator.
class PresentationSum {
 public:
  explicit PresentationSum(std::size_t nvars) : nvars_(nvars), W_(nvars) {}

  void add(const Presentation& p) {
    if (p.empty) return;
    nonempty_ = true;
    SparseSeries w = p.W;
    for (const auto& [nu, c] : p.K) {
      unsigned& mine = K_[nu];
      for (; mine < c; ++mine) W_ = times_binomial(W_, nu);
    }
    for (const auto& [nu, c] : K_) {
      auto it = p.K.find(nu);
      unsigned theirs = it == p.K.end() ? 0 : it->second;
      for (unsigned k = theirs; k < c; ++k) w = times_binomial(w, nu);
    }
    W_ = W_ + w;
  }

  Presentation take() {
    if (!nonempty_) return Presentation::zero(nvars_);
    Presentation p;
    p.nvars = nvars_;
    p.K = std::move(K_);
    p.W = std::move(W_);
    return p;
  }

 private:
  std::size_t nvars_;
  std::map<ExponentVector, unsigned> K_;
  SparseSeries W_;
  bool nonempty_ = false;
};

Presentation embed(const Presentation& sub, std::size_t n, const std::vector<std::size_t>& positions,
                   const ExponentVector& shift) {
  auto lift = [&](const ExponentVector& v) {
    ExponentVector out(n);
    for (std::size_t i = 0; i < positions.size(); ++i) out[positions[i]] = v[i];
    return out;
  };
  Presentation p;
  p.nvars = n;
  p.empty = sub.empty;
  for (const auto& [nu, c] : sub.K) p.K.emplace(lift(nu), c);
  p.W = SparseSeries(n);
  for (const auto& [mu, c] : sub.W.terms()) p.W.add_term(lift(mu) + shift, c);
  return p;
}

class Recursion {
 public:
  explicit Recursion(PresentationOptions options) : options_(options) {}

  Presentation solve(const ToricMatrix& in, const std::vector<long>& in_b) {
    ToricMatrix a;
    a.n = in.n;
    std::vector<long> b;
    for (std::size_t j = 0; j < in.d(); ++j) {
      bool zero_row = std::all_of(in.rows[j].begin(), in.rows[j].end(), [](long x) { return x == 0; });
      if (zero_row) {
        if (in_b[j] != 0) return Presentation::zero(in.n);
        continue;
      }
      a.rows.push_back(in.rows[j]);
      b.push_back(in_b[j]);
    }
    if (a.n == 0) return Presentation::one(0);

    Key key{a.n, a.rows, b};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Presentation result;
    if (!lp::feasible(equality_system(a, b))) {
      result = Presentation::zero(a.n);
    } else {
      lp::Problem kernel = equality_system(a, std::vector<long>(a.d(), 0));
      kernel.add(RationalVector(a.n, Rational(1)), lp::Relation::Equal, 1);
      auto direction = lp::solve(kernel);
      result = direction.status == lp::Status::Optimal ? unbounded_case(a, b, direction.x) : bounded_case(a, b);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  struct Key {
    std::size_t n;
    std::vector<std::vector<long>> rows;
    std::vector<long> b;
    auto operator<=>(const Key&) const = default;
  };

  /// Minimal-weight element of T(A;0) \ {0}, graded-lex smallest among ties.
  static ExponentVector minimal_kernel_element(const ToricMatrix& a, const RationalVector& x) {
    Integer scale = 1;
    for (const auto& v : x) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    if (!scale.fits_ulong_p()) throw BudgetExceeded("kernel element weight bound too large");
    const unsigned long upper = scale.get_ui();
    std::vector<long> zero(a.d(), 0);
    WeightEnumerator e(a, zero);
    for (unsigned long w = 1; w <= upper; ++w) {
      std::optional<ExponentVector> best;
      e.run(w, true, [&](const ExponentVector& v) {
        if (!best || v < *best) best = v;
      });
      if (best) return *best;
    }
    throw InternalError("no kernel element found below the certified weight bound");
  }

  Presentation unbounded_case(const ToricMatrix& a, const std::vector<long>& b, const RationalVector& x) {
    const ExponentVector alpha = minimal_kernel_element(a, x);
    const std::size_t n = a.n;
    std::vector<std::size_t> support, zeros;
    for (std::size_t i = 0; i < n; ++i) (alpha[i] > 0 ? support : zeros).push_back(i);

    // (1 - X^alpha) h = sum over I = zeros + part of the support, I != [n],
    // of X^{alpha_I} X^{nu''} h_{A_I, l(nu'')} with nu'' ranging over the box
    // prod_{j not in I} [0, alpha_j - 1].
    PresentationSum sum(n);
    const std::size_t s = support.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<std::size_t> in_i = zeros, in_j;
      for (std::size_t t = 0; t < s; ++t) ((mask >> t) & 1 ? in_j : in_i).push_back(support[t]);
      std::sort(in_i.begin(), in_i.end());
      ToricMatrix sub = a.columns(in_i);

      std::vector<long> base = b;
      ExponentVector shift(n);
      for (auto i : in_i) {
        shift[i] = alpha[i];
        for (std::size_t j = 0; j < a.d(); ++j) base[j] -= a.rows[j][i] * static_cast<long>(alpha[i]);
      }
      std::vector<std::uint32_t> box(in_j.size(), 0);
      for (;;) {
        std::vector<long> l = base;
        for (std::size_t t = 0; t < in_j.size(); ++t) {
          shift[in_j[t]] = box[t];
          for (std::size_t j = 0; j < a.d(); ++j) l[j] -= a.rows[j][in_j[t]] * static_cast<long>(box[t]);
        }
        Presentation piece = solve(sub, l);
        if (!piece.empty) sum.add(embed(piece, n, in_i, shift));
        std::size_t t = 0;
        while (t < in_j.size() && ++box[t] == alpha[in_j[t]]) box[t++] = 0;
        if (t == in_j.size()) break;
      }
    }
    Presentation p = sum.take();
    if (p.empty) return p;
    p.K[alpha] += 1;
    p.reduce();
    return p;
  }

  Presentation bounded_case(const ToricMatrix& a, const std::vector<long>& b) {
    std::vector<long> upper(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
      lp::Problem p = equality_system(a, b);
      p.maximize = true;
      p.objective.assign(a.n, Rational(0));
      p.objective[i] = 1;
      auto sol = lp::solve(p);
      if (sol.status != lp::Status::Optimal) throw InternalError("bounded case: coordinate maximum not attained");
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), sol.value.get_num_mpz_t(), sol.value.get_den_mpz_t());
      if (!fl.fits_slong_p()) throw InconclusiveBound("bounded case: coordinate bound too large");
      upper[i] = fl.get_si();
    }
    auto points = enumerate_box(a, b, upper, options_.enumeration_budget);
    if (points.empty()) return Presentation::zero(a.n);
    Presentation p;
    p.nvars = a.n;
    p.W = SparseSeries(a.n);
    for (const auto& v : points) p.W.add_term(v, 1);
    return p;
  }

  PresentationOptions options_;
  std::map<Key, Presentation> memo_;
};

}  // namespace

Presentation presentation(const ToricMatrix& a, const std::vector<long>& b, PresentationOptions options) {
  require_rhs(a, b);
  Recursion r(options);
  return r.solve(a, b);
}

Presentation restricted_presentation(const ToricMatrix& a, PresentationOptions options) {
  if (!a.rows_sum_to_zero()) throw InvalidInput("restricted presentation requires zero row sums");
  Presentation p = presentation(a, std::vector<long>(a.d(), 0), options);
  ExponentVector ones(std::vector<std::uint32_t>(a.n, 1));
  p.W = times_binomial(p.W, ones);
  p.reduce();
  return p;
}

}  // namespace mvz
