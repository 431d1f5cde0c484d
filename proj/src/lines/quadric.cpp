#include "hmsl/lines/quadric.hpp"

#include <algorithm>
#include <cstdlib>

#include "hmsl/exact/matrix.hpp"
#include "hmsl/lines/conic.hpp"

namespace hmsl {

namespace {

QVec add(const QVec& x, const QVec& y) {
  QVec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

QVec scale(const QVec& x, const Rational& c) {
  QVec r(x);
  for (auto& v : r) v *= c;
  return r;
}

QVec unit(std::size_t n, std::size_t i) {
  QVec e(n, Rational(0));
  e[i] = Rational(1);
  return e;
}

std::vector<QVec> nullspace_of(const std::vector<QVec>& rows, std::size_t n) {
  if (rows.empty()) {
    std::vector<QVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit(n, i));
    return all;
  }
  return Matrix<Rational>(rows).nullspace(Rational(1), Rational(0));
}

// Lattice vectors of max-norm exactly h, first nonzero entry positive.
void shell(std::size_t n, long h, std::vector<std::vector<long>>& out) {
  std::vector<long> v(n, -h);
  while (true) {
    long m = 0;
    for (long x : v) m = std::max(m, std::labs(x));
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (m == h && first != v.end() && *first > 0) out.push_back(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < h) {
        ++v[i];
        break;
      }
      v[i] = -h;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

// Diagonalize a symmetric Gram matrix by congruence: returns the diagonal
// entries and the change of basis rows (in the original coefficients).
void diagonalize(std::vector<std::vector<Rational>> g, std::vector<Rational>& diag,
                 std::vector<QVec>& change) {
  const std::size_t n = g.size();
  change.clear();
  for (std::size_t i = 0; i < n; ++i) change.push_back(unit(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i][i].is_zero()) {
      std::size_t j = i + 1;
      while (j < n && g[i][j].is_zero()) ++j;
      if (j < n) {
        // replace e_i by e_i + e_j (or e_i - e_j) to make the pivot nonzero
        Rational sgn = (g[j][j] + 2 * g[i][j]).is_zero() ? Rational(-1) : Rational(1);
        for (std::size_t k = 0; k < n; ++k) g[i][k] += sgn * g[j][k];
        for (std::size_t k = 0; k < n; ++k) g[k][i] += sgn * g[k][j];
        change[i] = add(change[i], scale(change[j], sgn));
      }
    }
    if (g[i][i].is_zero()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g[i][j].is_zero()) continue;
      Rational f = g[i][j] / g[i][i];
      for (std::size_t k = 0; k < n; ++k) g[j][k] -= f * g[i][k];
      for (std::size_t k = 0; k < n; ++k) g[k][j] -= f * g[k][i];
      change[j] = add(change[j], scale(change[i], -f));
    }
  }
  diag.clear();
  for (std::size_t i = 0; i < n; ++i) diag.push_back(g[i][i]);
}

Integer integral_square_class(const Rational& x) {
  return squarefree_part(x.numerator() * x.denominator());
}

}  // namespace

Rational polar(const RPoly& q, const QVec& x, const QVec& y) {
  return (q.evaluate(add(x, y)) - q.evaluate(x) - q.evaluate(y)) / Rational(2);
}

QVec polar_row(const RPoly& q, const QVec& x) {
  QVec row;
  for (std::size_t i = 0; i < x.size(); ++i) row.push_back(polar(q, x, unit(x.size(), i)));
  return row;
}

QVec linear_row(const RPoly& l) {
  QVec row;
  for (std::size_t i = 0; i < l.nvars(); ++i) row.push_back(l.evaluate(unit(l.nvars(), i)));
  return row;
}

std::vector<std::vector<Rational>> gram(const RPoly& q, const std::vector<QVec>& basis) {
  std::vector<std::vector<Rational>> g(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g[i][j] = g[j][i] = polar(q, basis[i], basis[j]);
  return g;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw DomainError("squarefree part of zero");
  Integer r = n < 0 ? -1 : 1;
  std::vector<Integer> fs = factor_integer(n);
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    if ((j - i) % 2) r *= fs[i];
    i = j;
  }
  return r;
}

QVec combine(const std::vector<QVec>& basis, const QVec& coeffs) {
  QVec v(basis.front().size(), Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i) v = add(v, scale(basis[i], coeffs[i]));
  return v;
}

QVec find_isotropic(const RPoly& q, const std::vector<QVec>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) throw DomainError("isotropic search in the zero space");
  auto g = gram(q, basis);
  auto value = [&](const QVec& c) {
    Rational s(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += c[i] * c[j] * g[i][j];
    return s;
  };
  for (long h = 1; h <= 4; ++h) {
    std::vector<std::vector<long>> vs;
    shell(n, h, vs);
    // Sparse vectors first, unit vectors in coordinate order.
    auto nnz = [](const std::vector<long>& v) { return std::count_if(v.begin(), v.end(), [](long x) { return x != 0; }); };
    std::stable_sort(vs.begin(), vs.end(), [&](const auto& x, const auto& y) {
      if (nnz(x) != nnz(y)) return nnz(x) < nnz(y);
      return x > y;
    });
    for (const auto& v : vs) {
      QVec c;
      for (long x : v) c.push_back(Rational(x));
      if (value(c).is_zero()) return c;
    }
  }
  std::vector<Rational> diag;
  std::vector<QVec> change;
  diagonalize(g, diag, change);
  for (std::size_t i = 0; i < n; ++i)
    if (diag[i].is_zero()) return change[i];
  // Two or more diagonal terms: search d_i X^2 + d_j Y^2 + d_k Z^2 = 0.
  std::vector<Integer> d;
  for (const auto& x : diag) d.push_back(integral_square_class(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (squarefree_part(-d[i] * d[j]) == 1) {
        // d_i X^2 + d_j Y^2 = 0 with X/Y = sqrt(-d_j/d_i)
        Rational ratio = -diag[j] / diag[i];
        Integer num = ratio.numerator() * ratio.denominator();
        Integer root = isqrt(num);
        return add(scale(change[i], Rational(root)), scale(change[j], Rational(ratio.denominator())));
      }
  if (n >= 3) {
    // d1 X^2 + d2 Y^2 + d3 Z^2 = 0 with d_i = f_i s_i^2, f_i squarefree;
    // then x = f1 X' satisfies x^2 = (-f1 f2) Y'^2 + (-f1 f3) Z'^2.
    std::array<Integer, 3> f, sq;
    for (std::size_t i = 0; i < 3; ++i) {
      f[i] = d[i];
      Integer num = diag[i].numerator() * diag[i].denominator();
      sq[i] = isqrt(Integer(num / f[i]));
    }
    Integer a = squarefree_part(Integer(-f[0] * f[1])), b = squarefree_part(Integer(-f[0] * f[2]));
    Integer ya = isqrt(Integer(-f[0] * f[1] / a)), zb = isqrt(Integer(-f[0] * f[2] / b));
    auto sol = legendre_solve(a, b);
    if (sol) {
      // Undo: X' = x / f1, Y' = y / ya, Z' = z / zb, and X = X' / s1 with the
      // extra factor den_i from d_i = num_i / den_i^2 * ... absorbed below.
      Rational X = Rational((*sol)[0]) / Rational(f[0]) / Rational(sq[0]);
      Rational Y = Rational((*sol)[1]) / Rational(ya) / Rational(sq[1]);
      Rational Z = Rational((*sol)[2]) / Rational(zb) / Rational(sq[2]);
      // diag_i = num_i/den_i and num_i*den_i = f_i sq_i^2, so
      // diag_i X_i^2 = f_i sq_i^2 X_i^2 / den_i^2; rescale by den_i.
      X *= Rational(diag[0].denominator());
      Y *= Rational(diag[1].denominator());
      Z *= Rational(diag[2].denominator());
      QVec v = add(add(scale(change[0], X), scale(change[1], Y)), scale(change[2], Z));
      if (!value(v).is_zero()) throw DomainError("internal: Legendre solution is not isotropic");
      return v;
    }
  }
  Integer ext = squarefree_part(-d[0] * (n > 1 ? d[1] : Integer(1)));
  throw ExtensionNeeded("no rational isotropic vector found; the form is isotropic over Q(sqrt(" +
                            to_string(ext) + "))",
                        ext);
}

Line<Rational> tangent_cone_line(const RPoly& q, const std::vector<RPoly>& linear, const QVec& x,
                                 const Rational& r, const Rational& s) {
  const std::size_t n = q.nvars();
  if (x.size() != n) throw DomainError("point has the wrong number of coordinates");
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.is_zero(); }))
    throw DomainError("the zero vector is not a projective point");
  if (r.is_zero() && s.is_zero()) throw DomainError("[0:0] is not a conic parameter");
  if (!q.evaluate(x).is_zero()) throw DomainError("point is not on the quadric");
  std::vector<QVec> rows;
  for (const auto& l : linear) {
    if (!l.evaluate(x).is_zero()) throw DomainError("point is not on the linear section");
    rows.push_back(linear_row(l));
  }
  const std::size_t base_rank = rows.empty() ? 0 : Matrix<Rational>(rows).rank();
  rows.push_back(polar_row(q, x));
  Matrix<Rational> m(rows);
  if (m.rank() == base_rank) throw DomainError("point is singular on the quadric section");

  // W = tangent space; drop the nullspace vector carrying x to get a
  // complement of x inside W.
  Matrix<Rational> red = m;
  std::vector<std::size_t> piv = red.rref();
  std::vector<QVec> w = nullspace_of(rows, n);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cols.push_back(c);
  std::size_t drop = free_cols.size();
  for (std::size_t j = 0; j < free_cols.size(); ++j)
    if (!x[free_cols[j]].is_zero()) {
      drop = j;
      break;
    }
  if (drop == free_cols.size()) throw DomainError("point is not in its own tangent space");
  w.erase(w.begin() + static_cast<long>(drop));
  if (w.size() != 3) throw DomainError("tangent cone is not a cone over a plane conic");

  QVec p0 = find_isotropic(q, w);
  std::size_t i0 = 0;
  while (p0[i0].is_zero()) ++i0;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != i0) others.push_back(i);
  QVec d(3, Rational(0));
  d[others[0]] = r;
  d[others[1]] = -s;
  QVec pv = combine(w, p0), dv = combine(w, d);
  Rational cd = q.evaluate(dv);
  Rational b = polar(q, pv, dv);
  QVec z = add(scale(pv, cd), scale(dv, Rational(-2) * b));
  if (std::all_of(z.begin(), z.end(), [](const Rational& v) { return v.is_zero(); }))
    throw DomainError("degenerate conic in the tangent cone");
  return Line<Rational>::through(x, z);
}

Line<Rational> tangent_cone_lines(const SurfaceModel& model, const QVec& x, const Rational& r,
                                  const Rational& s) {
  return tangent_cone_line(model.q2, {model.q1}, x, r, s);
}

HyperbolicChart::HyperbolicChart(const SurfaceModel& model, const QVec& seed,
                                 const std::optional<Line<Rational>>& preferred)
    : q_(model.q2) {
  const std::size_t n = q_.nvars();
  if (seed.size() != n) throw DomainError("seed point has the wrong number of coordinates");
  if (!model.q1.evaluate(seed).is_zero() || !q_.evaluate(seed).is_zero())
    throw DomainError("seed point is not on both quadrics");
  const QVec l1 = linear_row(model.q1);
  std::vector<QVec> v = nullspace_of({l1}, n);
  e_[0] = seed;
  QVec p0 = polar_row(q_, seed);
  auto partner = [&](const QVec& e, const std::vector<QVec>& space) {
    for (const auto& cand : space) {
      Rational b = polar(q_, e, cand);
      if (b.is_zero()) continue;
      QVec f = scale(cand, Rational(1) / (Rational(2) * b));
      return add(f, scale(e, -q_.evaluate(f)));
    }
    throw DomainError("seed point is singular on the quadric threefold");
  };
  e_[1] = partner(seed, v);
  std::vector<QVec> w = nullspace_of({l1, p0, polar_row(q_, e_[1])}, n);
  std::optional<QVec> hint;
  if (preferred && preferred->contains(seed) && lies_in(*preferred, model.q1) && lies_in(*preferred, q_)) {
    // Another point of the line, moved into W along e0.
    QVec other = Matrix<Rational>(std::vector<QVec>{seed, preferred->p()}).rank() == 2 ? preferred->p()
                                                                                      : preferred->q();
    hint = add(other, scale(seed, Rational(-2) * polar(q_, other, e_[1])));
  }
  e_[2] = hint ? *hint : combine(w, find_isotropic(q_, w));
  e_[3] = partner(e_[2], w);
  std::vector<QVec> rest = nullspace_of({l1, p0, polar_row(q_, e_[1]), polar_row(q_, e_[2]),
                                         polar_row(q_, e_[3])},
                                        n);
  if (rest.size() != 1) throw DomainError("quadric threefold is degenerate");
  e_[4] = rest.front();
  d_ = q_.evaluate(e_[4]);
  if (d_.is_zero()) throw DomainError("quadric threefold is degenerate");
}

std::array<Rational, 5> HyperbolicChart::y(const QVec& v) const {
  return {Rational(2) * polar(q_, v, e_[1]), Rational(2) * polar(q_, v, e_[0]),
          Rational(2) * polar(q_, v, e_[3]), Rational(2) * polar(q_, v, e_[2]),
          polar(q_, v, e_[4]) / d_};
}

Line<Rational> HyperbolicChart::line(const std::array<Rational, 3>& abc) const {
  const auto& [a, b, c] = abc;
  QVec r1 = add(add(e_[0], scale(e_[1], -d_ * a * a)),
                add(scale(e_[3], -(Rational(2) * d_ * a * b + c)), scale(e_[4], a)));
  QVec r2 = add(add(scale(e_[1], c), e_[2]), add(scale(e_[3], -d_ * b * b), scale(e_[4], b)));
  return Line<Rational>::through(r1, r2);
}

std::optional<std::array<Rational, 3>> HyperbolicChart::coordinates(const Line<Rational>& l) const {
  auto yp = y(l.p()), yq = y(l.q());
  Rational det = yp[0] * yq[2] - yq[0] * yp[2];
  if (det.is_zero()) return std::nullopt;
  // R1 has (y0, y2) = (1, 0), R2 has (0, 1).
  auto point = [&](const Rational& alpha, const Rational& beta) {
    std::array<Rational, 5> out;
    for (std::size_t i = 0; i < 5; ++i) out[i] = alpha * yp[i] + beta * yq[i];
    return out;
  };
  auto r1 = point(yq[2] / det, -yp[2] / det);
  auto r2 = point(-yq[0] / det, yp[0] / det);
  std::array<Rational, 3> abc{r1[4], r2[4], r2[1]};
  if (!(line(abc) == l)) return std::nullopt;
  return abc;
}

}  // namespace hmsl
