#include "nalg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "nalg/error.hpp"

namespace nalg {

namespace {

void check_sizes(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_rows(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Scalar inv = rows[r][c].inv();
    if (!inv.is_one())
      for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- vectors

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  check_sizes(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  check_sizes(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

void axpy(Vector& y, const Scalar& c, const Vector& x) {
  check_sizes(y, x);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Vector vector_from_ints(const FieldSpec& f, std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(f.from_int(x));
  return v;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(f, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw InvalidArgument("ragged matrix literal");
    std::size_t c = 0;
    for (long long x : row) m(r, c++) = f.from_int(x);
    ++r;
  }
  return m;
}

Matrix Matrix::unit(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(f, n, n);
  m(i, j) = f.one();
  return m;
}

Matrix Matrix::unflatten(const FieldSpec& f, std::size_t n, std::span<const Scalar> entries) {
  if (entries.size() != n * n) throw InvalidArgument("flattened operator has wrong length");
  Matrix m(f, n, n);
  std::copy(entries.begin(), entries.end(), m.a_.begin());
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw InvalidArgument("row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw InvalidArgument("matrix product size mismatch");
  Matrix m(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw InvalidArgument("matrix sum size mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& b) const { return *this + (-b); }

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Matrix::operator==(const Matrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && field_.same_field(b.field_) && a_ == b.a_;
}

bool Matrix::is_zero() const { return nalg::is_zero(a_); }

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Vector act(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw InvalidArgument("operator size mismatch");
  Vector r = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r[j] += v[i] * m(i, j);
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult rref(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
  RrefResult out;
  out.pivots = rref_rows(rows, m.cols());
  out.rank = rows.size();
  out.reduced = Matrix(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.reduced.set_row(r, rows[r]);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

// ---------------------------------------------------------------- SubspaceBasis

SubspaceBasis::SubspaceBasis(const FieldSpec& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

SubspaceBasis SubspaceBasis::span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& vs) {
  SubspaceBasis s(f, ambient);
  s.rows_ = vs;
  for (const auto& v : s.rows_)
    if (v.size() != ambient) throw InvalidArgument("spanning vector has wrong length");
  s.pivots_ = rref_rows(s.rows_, ambient);
  return s;
}

SubspaceBasis SubspaceBasis::whole(const FieldSpec& f, std::size_t ambient) {
  SubspaceBasis s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vector(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

void SubspaceBasis::check_ambient(const SubspaceBasis& o) const {
  if (ambient_ != o.ambient_) throw InvalidArgument("ambient dimension mismatch");
  if (!field_.same_field(o.field_)) throw FieldMismatch();
}

bool SubspaceBasis::member(const Vector& v) const {
  if (v.size() != ambient_) throw InvalidArgument("ambient dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, rows_[i]);
  }
  return is_zero(r);
}

bool SubspaceBasis::contains(const SubspaceBasis& o) const {
  check_ambient(o);
  return std::all_of(o.rows_.begin(), o.rows_.end(), [this](const Vector& v) { return member(v); });
}

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
  check_ambient(o);
  return rows_ == o.rows_;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& o) const {
  check_ambient(o);
  std::vector<Vector> all = rows_;
  all.insert(all.end(), o.rows_.begin(), o.rows_.end());
  return span(field_, ambient_, all);
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& o) const {
  check_ambient(o);
  std::size_t k = rows_.size(), m = o.rows_.size();
  // Columns are the basis vectors of both spaces; a null vector (alpha, beta)
  // gives sum alpha_i a_i = sum beta_j b_j.
  Matrix sys(field_, ambient_, k + m);
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t i = 0; i < k; ++i) sys(r, i) = rows_[i][r];
    for (std::size_t j = 0; j < m; ++j) sys(r, k + j) = -o.rows_[j][r];
  }
  std::vector<Vector> gens;
  SubspaceBasis ns = nullspace(sys);
  for (const auto& nv : ns.vectors()) {
    Vector v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < k; ++i) axpy(v, nv[i], rows_[i]);
    gens.push_back(std::move(v));
  }
  return span(field_, ambient_, gens);
}

Vector SubspaceBasis::coordinates(const Vector& v) const {
  Vector c;
  Vector acc = zero_vector(field_, ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    c.push_back(v.at(pivots_[i]));
    axpy(acc, c.back(), rows_[i]);
  }
  if (acc != v) throw InvalidArgument("vector is not in the subspace");
  return c;
}

SubspaceBasis nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), n);
    v[free] = m.field().one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::span(m.field(), n, basis);
}

// ---------------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(const FieldSpec& f, std::size_t ambient)
    : field_(f), ambient_(ambient), pivot_row_(ambient, -1) {}

Vector EchelonBuilder::reduce(Vector v) const {
  if (v.size() != ambient_) throw InvalidArgument("ambient dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool EchelonBuilder::insert(Vector v) {
  if (full()) return false;
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = v[p].inv();
  if (!inv.is_one())
    for (auto& x : v) x *= inv;
  pivot_row_[p] = static_cast<long>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(v));
  return true;
}

void EchelonBuilder::merge(const EchelonBuilder& o) {
  for (const auto& r : o.rows_) insert(r);
}

SubspaceBasis EchelonBuilder::finish() const { return SubspaceBasis::span(field_, ambient_, rows_); }

// ---------------------------------------------------------------- closure

SubspaceBasis matrix_algebra_closure(const std::vector<Matrix>& generators) {
  if (generators.empty()) return SubspaceBasis();
  const FieldSpec& f = generators.front().field();
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw InvalidArgument("closure generators must be square of equal size");

  EchelonBuilder span(f, n * n);
  std::vector<Matrix> gens;
  for (const auto& g : generators)
    if (span.insert(g.flatten())) gens.push_back(g);
  // Every word in the generators is g * (shorter word), so closing the span
  // under left multiplication by generators reaches all products.
  std::size_t done = 0;
  while (done < span.rank() && !span.full()) {
    Matrix w = Matrix::unflatten(f, n, span.rows()[done]);
    ++done;
    for (const auto& g : gens) {
      span.insert((g * w).flatten());
      if (span.full()) break;
    }
  }
  return span.finish();
}

}  // namespace nalg
