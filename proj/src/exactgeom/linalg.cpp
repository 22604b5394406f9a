#include "mixedbody/exactgeom/linalg.hpp"

#include <utility>

#include "mixedbody/error.hpp"

namespace mixedbody::exactgeom {

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ValidityError("dot: length mismatch");
  mpq_class sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i].raw() * b[i].raw();
  return Rat(std::move(sum));
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ValidityError("vector sum: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ValidityError("vector difference: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rat& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

void RowBasis::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = v[pivots_[r]];
    if (f.is_zero()) continue;
    const Vec& row = rows_[r];
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (!row[c].is_zero()) v[c] -= f * row[c];
    }
  }
}

bool RowBasis::insert(Vec v) {
  if (v.size() != ncols_) throw ValidityError("RowBasis: length mismatch");
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < ncols_ && v[pivot].is_zero()) ++pivot;
  if (pivot == ncols_) return false;
  const Rat lead = v[pivot];
  for (auto& x : v) {
    if (!x.is_zero()) x /= lead;
  }
  // Keep earlier rows reduced in the new pivot column.
  for (auto& row : rows_) {
    const Rat f = row[pivot];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (!v[c].is_zero()) row[c] -= f * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowBasis::contains(Vec v) const {
  if (v.size() != ncols_) throw ValidityError("RowBasis: length mismatch");
  reduce(v);
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::size_t rank(const Matrix& rows, std::size_t ncols) {
  RowBasis basis(ncols);
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

Matrix nullspace(const Matrix& rows, std::size_t ncols) {
  RowBasis basis(ncols);
  for (const auto& r : rows) basis.insert(r);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : basis.pivots()) is_pivot[p] = true;
  Matrix result;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols);
    x[free] = Rat(1);
    for (std::size_t r = 0; r < basis.rank(); ++r) {
      x[basis.pivots()[r]] = -basis.rows()[r][free];
    }
    result.push_back(std::move(x));
  }
  return result;
}

std::optional<Vec> solve(Matrix a, Vec b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw ValidityError("solve: right-hand side length mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw ValidityError("solve: matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rat f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Rat determinant(Matrix a) {
  const std::size_t n = a.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rat f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Vec primitive_integer(const Vec& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.num() * (lcm / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  Vec out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g, 1);
  return out;
}

}  // namespace mixedbody::exactgeom
