#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nalg/field.hpp"

namespace nalg {

/// Coordinate vector over a field.
using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& c, const Vector& v);
/// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);
Vector vector_from_ints(const FieldSpec& f, std::initializer_list<long long> xs);

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_ints(const FieldSpec& f, std::initializer_list<std::initializer_list<long long>> rows);
  /// Matrix unit e_ij (0-based) of size n.
  static Matrix unit(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j);
  /// Inverse of flatten() for square matrices.
  static Matrix unflatten(const FieldSpec& f, std::size_t n, std::span<const Scalar> entries);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  void set_row(std::size_t r, const Vector& v);
  /// Row-major entries, the coordinates used for operator spaces.
  const Vector& flatten() const { return a_; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& b) const;
  bool operator!=(const Matrix& b) const { return !(*this == b); }
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector a_;
};

/// Operators act on row vectors from the right: v -> v * M.
using LinearOperator = Matrix;
Vector act(const Vector& v, const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Canonical basis of a subspace: nonzero rows in reduced row-echelon form.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  /// The zero subspace of the given ambient dimension.
  SubspaceBasis(const FieldSpec& f, std::size_t ambient);

  static SubspaceBasis span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& vs);
  static SubspaceBasis whole(const FieldSpec& f, std::size_t ambient);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<Vector>& vectors() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool member(const Vector& v) const;
  bool contains(const SubspaceBasis& o) const;
  bool operator==(const SubspaceBasis& o) const;
  bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }
  SubspaceBasis sum(const SubspaceBasis& o) const;
  SubspaceBasis intersect(const SubspaceBasis& o) const;
  /// Coordinates of v with respect to vectors(); throws if v is not a member.
  Vector coordinates(const Vector& v) const;

 private:
  friend class EchelonBuilder;
  void check_ambient(const SubspaceBasis& o) const;

  FieldSpec field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

SubspaceBasis nullspace(const Matrix& m);

/// Incremental span builder. Rows are kept semi-reduced (pivot entries 1,
/// earlier pivots eliminated) so insertion is a single reduction pass.
class EchelonBuilder {
 public:
  EchelonBuilder(const FieldSpec& f, std::size_t ambient);

  /// Returns true if v was not already in the span.
  bool insert(Vector v);
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool full() const { return rows_.size() == ambient_; }
  /// Rows in insertion order.
  const std::vector<Vector>& rows() const { return rows_; }
  void merge(const EchelonBuilder& o);
  SubspaceBasis finish() const;

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // column -> row index or -1
};

/// Smallest product-closed space of square matrices containing the generators.
SubspaceBasis matrix_algebra_closure(const std::vector<Matrix>& generators);

}  // namespace nalg
