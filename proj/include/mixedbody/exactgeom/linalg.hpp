#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mixedbody/exactgeom/rat.hpp"

namespace mixedbody::exactgeom {

using Vec = std::vector<Rat>;
using Matrix = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& a);

// Incrementally built row-echelon basis. Each stored row has a leading
// 1 in its pivot column and zeros in the pivot columns of earlier rows.
class RowBasis {
 public:
  explicit RowBasis(std::size_t ncols) : ncols_(ncols) {}

  // Reduces v against the basis; stores it and returns true when it is
  // linearly independent of what is already stored.
  bool insert(Vec v);
  bool contains(Vec v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Matrix& rows() const { return rows_; }

 private:
  void reduce(Vec& v) const;

  std::size_t ncols_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& rows, std::size_t ncols);

// Basis of {x : rows * x = 0}.
Matrix nullspace(const Matrix& rows, std::size_t ncols);

// Unique solution of the square system a * x = b, or nullopt when a is
// singular.
std::optional<Vec> solve(Matrix a, Vec b);

Rat determinant(Matrix a);

// Positive multiple of v with coprime integer entries. Zero stays zero.
Vec primitive_integer(const Vec& v);

}  // namespace mixedbody::exactgeom
