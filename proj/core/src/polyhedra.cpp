#include "mvz/polyhedra.hpp"

#include <algorithm>
#include <optional>

#include "mvz/errors.hpp"
#include "mvz/lp.hpp"
#include "mvz/parallel.hpp"

namespace mvz {

PointSet PointSet::from(std::size_t nvars, const std::vector<ExponentVector>& points) {
  PointSet s{nvars, {}};
  for (const auto& p : points) {
    if (p.size() != nvars) throw DimensionMismatch("point " + p.to_string() + " has wrong dimension");
    if (p.is_zero()) throw InvalidInput("point sets may not contain 0");
    s.points.insert(p);
  }
  return s;
}

const Vertex* DualPolyhedron::find_vertex(const RationalVector& coords) const {
  for (const auto& v : vertices) {
    if (v.coords == coords) return &v;
  }
  return nullptr;
}

std::set<ExponentVector> extremal_points(const PointSet& a) {
  std::set<ExponentVector> ext;
  for (const auto& nu : a.points) {
    bool dominated = false;
    for (const auto& mu : a.points) {
      if (mu != nu && mu.divides(nu)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      // nu is extremal iff no convex combination of the others lies below it.
      std::vector<const ExponentVector*> others;
      for (const auto& mu : a.points) {
        if (mu != nu) others.push_back(&mu);
      }
      if (!others.empty()) {
        lp::Problem p;
        p.num_vars = others.size();
        p.add(RationalVector(others.size(), Rational(1)), lp::Relation::Equal, 1);
        for (std::size_t i = 0; i < a.nvars; ++i) {
          RationalVector row(others.size());
          for (std::size_t k = 0; k < others.size(); ++k) row[k] = (*others[k])[i];
          p.add(std::move(row), lp::Relation::LessEqual, nu[i]);
        }
        dominated = lp::feasible(p);
      }
    }
    if (!dominated) ext.insert(nu);
  }
  return ext;
}

namespace {

struct Overflow {};

/// 128-bit integer that throws Overflow instead of wrapping.
struct Checked {
  __int128 v = 0;
  Checked() = default;
  Checked(long x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) { return Checked::raw(a.v / b.v); }
  friend Checked operator-(Checked a) { return Checked(0) - a; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend auto operator<=>(Checked a, Checked b) { return a.v <=> b.v; }

  static Checked raw(__int128 x) {
    Checked r;
    r.v = x;
    return r;
  }
};

Checked gcd_of(Checked a, Checked b) {
  __int128 x = a.v < 0 ? -a.v : a.v, y = b.v < 0 ? -b.v : b.v;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  return Checked::raw(x);
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational to_rational(const Checked& num, const Checked& den) {
  auto to_mpz = [](__int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    Integer r = static_cast<unsigned long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(u & ~std::uint64_t{0});
    return neg ? Integer(-r) : r;
  };
  Rational q(to_mpz(num.v), to_mpz(den.v));
  q.canonicalize();
  return q;
}

Rational to_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Rank of the given integer rows by fraction-free elimination.
template <class Int>
std::size_t rank_of(std::vector<std::vector<Int>> m, std::size_t cols) {
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == Int(0)) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

/// Solves the nonsingular integer system G x = r; returns (numerators, den)
/// with den > 0 and gcd 1.
template <class Int>
std::pair<std::vector<Int>, Int> solve_square(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (m[piv][k] == Int(0)) ++piv;
    std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int det = m[n - 1][n - 1];
  std::vector<Int> num(n);
  for (std::size_t i = n; i-- > 0;) {
    Int acc = m[i][n] * det;
    for (std::size_t j = i + 1; j < n; ++j) acc = acc - m[i][j] * num[j];
    num[i] = acc / m[i][i];
  }
  if (det < Int(0)) {
    det = -det;
    for (auto& x : num) x = -x;
  }
  Int g = det;
  for (const auto& x : num) g = gcd_of(g, x);
  for (auto& x : num) x = x / g;
  return {num, det / g};
}

struct ConstraintRows {
  std::size_t nvars;
  std::vector<std::vector<long>> rows;  // generators first, then unit rows
  std::vector<long> rhs;
  std::size_t generators;
};

template <class Int>
class VertexSearch {
 public:
  explicit VertexSearch(const ConstraintRows& c) : c_(c) {}

  void run_shard(std::size_t first, std::set<RationalVector>& out) {
    chosen_.assign(1, first);
    if (c_.nvars == 1) {
      leaf(out);
      return;
    }
    descend(first + 1, out);
  }

 private:
  std::vector<std::vector<Int>> matrix(bool augmented) const {
    std::vector<std::vector<Int>> m;
    for (auto r : chosen_) {
      std::vector<Int> row;
      for (auto x : c_.rows[r]) row.emplace_back(x);
      if (augmented) row.emplace_back(c_.rhs[r]);
      m.push_back(std::move(row));
    }
    return m;
  }

  void descend(std::size_t start, std::set<RationalVector>& out) {
    for (std::size_t i = start; i < c_.rows.size(); ++i) {
      if (c_.rows.size() - i < c_.nvars - chosen_.size()) return;
      chosen_.push_back(i);
      if (rank_of(matrix(false), c_.nvars) == chosen_.size()) {
        if (chosen_.size() == c_.nvars) {
          leaf(out);
        } else {
          descend(i + 1, out);
        }
      }
      chosen_.pop_back();
    }
  }

  void leaf(std::set<RationalVector>& out) {
    auto [num, den] = solve_square(matrix(true));
    for (const auto& x : num) {
      if (x < Int(0)) return;
    }
    for (std::size_t g = 0; g < c_.generators; ++g) {
      Int s = 0;
      for (std::size_t j = 0; j < c_.nvars; ++j) {
        if (c_.rows[g][j] != 0) s = s + Int(c_.rows[g][j]) * num[j];
      }
      if (s < den) return;
    }
    if (!seen_.insert(num_key(num, den)).second) return;
    RationalVector q;
    for (const auto& x : num) q.push_back(to_rational(x, den));
    out.insert(std::move(q));
  }

  static std::vector<Int> num_key(std::vector<Int> num, const Int& den) {
    num.push_back(den);
    return num;
  }

  struct KeyLess {
    bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          [](const Int& x, const Int& y) { return x < y; });
    }
  };

  const ConstraintRows& c_;
  std::vector<std::size_t> chosen_;
  std::set<std::vector<Int>, KeyLess> seen_;
};

std::vector<RationalVector> enumerate_vertices(const ConstraintRows& c, unsigned threads) {
  const std::size_t shards = c.rows.size();
  std::vector<std::set<RationalVector>> found(shards);
  for_each_shard(shards, threads, [&](std::size_t s) {
    try {
      VertexSearch<Checked> search(c);
      search.run_shard(s, found[s]);
    } catch (const Overflow&) {
      found[s].clear();
      VertexSearch<Integer> search(c);
      search.run_shard(s, found[s]);
    }
  });
  std::set<RationalVector> all;
  for (auto& f : found) all.merge(f);
  return {all.begin(), all.end()};
}

Rational coordinate_sum(const RationalVector& x) {
  Rational s = 0;
  for (const auto& v : x) s += v;
  return s;
}

}  // namespace

DualPolyhedron dual(const PointSet& a, ParallelOptions options) {
  if (a.points.empty()) throw InvalidInput("dual: point set is empty");
  const std::size_t n = a.nvars;
  ConstraintRows rows{n, {}, {}, 0};
  for (const auto& nu : extremal_points(a)) {
    rows.rows.push_back(nu.as_signed());
    rows.rhs.push_back(1);
  }
  rows.generators = rows.rows.size();
  for (std::size_t j = 0; j < n; ++j) {
    rows.rows.push_back(ExponentVector::unit(n, j).as_signed());
    rows.rhs.push_back(0);
  }

  DualPolyhedron p;
  p.nvars = n;
  p.generators = a;
  for (auto& coords : enumerate_vertices(rows, options.threads)) {
    Vertex v;
    v.contact = contact_set(a, coords);
    for (std::size_t j = 0; j < n; ++j) {
      if (coords[j] == 0) v.zeros.push_back(j);
    }
    v.m = v.contact.size() + v.zeros.size();
    v.coords = std::move(coords);
    p.vertices.push_back(std::move(v));
  }
  if (p.vertices.empty()) throw InternalError("dual: no vertices found");
  p.index = coordinate_sum(p.vertices.front().coords);
  for (const auto& v : p.vertices) p.index = std::min(p.index, coordinate_sum(v.coords));
  for (const auto& v : p.vertices) {
    if (coordinate_sum(v.coords) == p.index) p.R.push_back(v.coords);
  }
  return p;
}

std::set<ExponentVector> contact_set(const PointSet& a, const RationalVector& alpha) {
  if (alpha.size() != a.nvars) throw DimensionMismatch("contact_set: alpha has wrong dimension");
  for (const auto& x : alpha) {
    if (x < 0) throw NotInDual("contact_set: alpha has a negative coordinate");
  }
  std::set<ExponentVector> k;
  for (const auto& nu : a.points) {
    Rational s = nu.dot(alpha);
    if (s < 1) throw NotInDual("contact_set: <alpha," + nu.to_string() + "> < 1");
    if (s == 1) k.insert(nu);
  }
  return k;
}

NormalConeResult normal_cone_test(const DualPolyhedron& p, const Vertex& alpha, const RationalVector& gamma) {
  if (gamma.size() != p.nvars) throw DimensionMismatch("normal_cone_test: gamma has wrong dimension");
  for (const auto& g : gamma) {
    if (g <= 0) throw InvalidInput("normal_cone_test: direction must be strictly positive");
  }
  auto pairing = [&](const RationalVector& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gamma[i];
    return s;
  };
  NormalConeResult r;
  r.exponent = pairing(alpha.coords);
  r.degree = alpha.degree(p.nvars);
  std::size_t minimizers = 0;
  Rational best = r.exponent;
  for (const auto& v : p.vertices) best = std::min(best, pairing(v.coords));
  for (const auto& v : p.vertices) {
    if (pairing(v.coords) == best) ++minimizers;
  }
  if (r.exponent > best) {
    r.verdict = ConeVerdict::Outside;
    return r;
  }
  r.verdict = minimizers > 1 ? ConeVerdict::Boundary : ConeVerdict::GenericInterior;
  if (r.verdict != ConeVerdict::GenericInterior) return r;

  // lambda_g = mu_g + t over the tight generators; maximize t.
  std::vector<ExponentVector> gens(alpha.contact.begin(), alpha.contact.end());
  for (auto j : alpha.zeros) gens.push_back(ExponentVector::unit(p.nvars, j));
  const std::size_t k = gens.size();
  lp::Problem lp;
  lp.num_vars = k + 1;
  lp.maximize = true;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  for (std::size_t i = 0; i < p.nvars; ++i) {
    RationalVector row(k + 1, Rational(0));
    for (std::size_t g = 0; g < k; ++g) {
      row[g] = gens[g][i];
      row[k] += gens[g][i];
    }
    lp.add(std::move(row), lp::Relation::Equal, gamma[i]);
  }
  auto sol = lp::solve(lp);
  if (sol.status != lp::Status::Optimal || sol.value <= 0) {
    throw InternalError("normal_cone_test: unique minimizer without interior decomposition");
  }
  for (std::size_t g = 0; g < k; ++g) {
    Rational lambda = sol.x[g] + sol.x[k];
    if (g < alpha.contact.size()) {
      r.contact_coefficients.emplace(gens[g], lambda);
    } else {
      r.zero_coefficients.emplace(alpha.zeros[g - alpha.contact.size()], lambda);
    }
  }
  return r;
}

Rational min_pairing(const std::set<ExponentVector>& points, const RationalVector& sigma) {
  if (points.empty()) throw InvalidInput("min_pairing: empty point set");
  Rational best = points.begin()->dot(sigma);
  for (const auto& nu : points) best = std::min(best, nu.dot(sigma));
  return best;
}

const char* to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::Outside:
      return "Outside";
    case ConeVerdict::Boundary:
      return "Boundary";
    case ConeVerdict::GenericInterior:
      return "GenericInterior";
  }
  return "?";
}

}  // namespace mvz
