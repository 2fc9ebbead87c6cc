#include "nalg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nalg/error.hpp"

namespace nalg {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 22;

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw InvalidArgument("basis vectors are not independent");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

}  // namespace

bool next_tuple(Tuple& t, std::size_t d) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < d) return true;
    t[k] = 0;
  }
  return false;
}

bool next_sorted_tuple(Tuple& t, std::size_t d) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (t[k] + 1 < d) {
      ++t[k];
      for (std::size_t j = k + 1; j < t.size(); ++j) t[j] = t[k];
      return true;
    }
  }
  return false;
}

std::vector<Tuple> all_tuples(std::size_t d, std::size_t len, bool sorted_only) {
  std::vector<Tuple> out;
  if (d == 0) return out;
  Tuple t(len, 0);
  do {
    out.push_back(t);
  } while (sorted_only ? next_sorted_tuple(t, d) : next_tuple(t, d));
  return out;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({static_cast<std::uint32_t>(i), v[i]});
  return s;
}

Vector to_dense(const FieldSpec& f, std::size_t d, const SparseVector& s) {
  Vector v = zero_vector(f, d);
  for (const auto& t : s) v[t.index] = t.coeff;
  return v;
}

std::vector<std::string> default_labels(const std::string& prefix, std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// ---------------------------------------------------------------- NAryAlgebra

NAryAlgebra::NAryAlgebra(const FieldSpec& field, std::size_t arity, std::size_t dim, std::vector<std::string> labels,
                         Symmetry symmetry)
    : field_(field), arity_(arity), dim_(dim), labels_(std::move(labels)), symmetry_(symmetry) {
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  if (dim == 0) throw InvalidArgument("dimension must be positive");
  if (labels_.empty()) labels_ = default_labels("e", dim);
  if (labels_.size() != dim) throw InvalidArgument("label count differs from dimension");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidArgument("empty basis label");
    if (!seen.insert(l).second) throw InvalidArgument("duplicate basis label '" + l + "'");
  }
  std::size_t size = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    size *= dim;
    if (size > kMaxTableSize) throw InvalidArgument("structure tensor too large");
  }
  table_.resize(size);
  written_.assign(size, false);
}

NAryAlgebra::NAryAlgebra(const FieldSpec& field, std::size_t arity, std::size_t dim, std::vector<std::string> labels,
                         const std::vector<ProductEntry>& entries, Symmetry symmetry)
    : NAryAlgebra(field, arity, dim, std::move(labels), symmetry) {
  for (const auto& e : entries) {
    if (e.args.size() != arity_) throw InvalidArgument("product entry has wrong number of arguments");
    for (auto i : e.args)
      if (i >= dim_) throw InvalidArgument("product index out of range");
    if (e.value.size() != dim_) throw InvalidArgument("product value has wrong length");
    for (const auto& c : e.value)
      if (c.modulus() != field_.characteristic()) throw FieldMismatch();
    if (symmetry_ == Symmetry::total) {
      Tuple t = e.args;
      std::sort(t.begin(), t.end());
      do {
        set(t, e.value, false);
      } while (std::next_permutation(t.begin(), t.end()));
    } else {
      set(e.args, e.value, false);
    }
  }
  written_.clear();
  written_.shrink_to_fit();
}

void NAryAlgebra::set(std::span<const std::size_t> t, const Vector& v, bool allow_overwrite) {
  std::size_t idx = tuple_index(t);
  SparseVector s = to_sparse(v);
  if (!allow_overwrite && written_[idx]) {
    const SparseVector& old = table_[idx];
    bool same = old.size() == s.size();
    for (std::size_t k = 0; same && k < s.size(); ++k)
      same = old[k].index == s[k].index && old[k].coeff == s[k].coeff;
    if (!same) throw InvalidArgument("conflicting product entries for one argument tuple");
  }
  written_[idx] = true;
  table_[idx] = std::move(s);
}

NAryAlgebra NAryAlgebra::from_function(const FieldSpec& field, std::size_t arity, std::size_t dim,
                                       std::vector<std::string> labels, Symmetry symmetry, const TableFn& fn) {
  NAryAlgebra a(field, arity, dim, std::move(labels), symmetry);
  Tuple t(arity, 0);
  if (symmetry == Symmetry::total) {
    // The sorted tuple is the lexicographically first of its orbit, so it
    // seeds the orbit and every later member is compared against it.
    do {
      Vector v = fn(t);
      if (std::is_sorted(t.begin(), t.end())) {
        Tuple p = t;
        do {
          a.set(p, v, true);
        } while (std::next_permutation(p.begin(), p.end()));
      } else {
        a.set(t, v, false);
      }
    } while (next_tuple(t, dim));
  } else {
    do {
      a.set(t, fn(t), true);
    } while (next_tuple(t, dim));
  }
  a.written_.clear();
  a.written_.shrink_to_fit();
  return a;
}

std::size_t NAryAlgebra::tuple_index(std::span<const std::size_t> t) const {
  if (t.size() != arity_) throw InvalidArgument("tuple length differs from arity");
  std::size_t idx = 0;
  for (auto i : t) {
    if (i >= dim_) throw InvalidArgument("basis index out of range");
    idx = idx * dim_ + i;
  }
  return idx;
}

Vector NAryAlgebra::basis_product_vector(std::span<const std::size_t> t) const {
  return to_dense(field_, dim_, basis_product(t));
}

bool NAryAlgebra::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& s) { return s.empty(); });
}

Element NAryAlgebra::element(std::initializer_list<long long> coords) const {
  if (coords.size() != dim_) throw InvalidArgument("element has wrong length");
  return vector_from_ints(field_, coords);
}

Element NAryAlgebra::multiply(std::span<const Element> args) const {
  if (args.size() != arity_) throw InvalidArgument("wrong number of factors");
  std::vector<SparseVector> sparse;
  for (const auto& a : args) {
    if (a.size() != dim_) throw InvalidArgument("factor has wrong dimension");
    for (const auto& c : a)
      if (c.modulus() != field_.characteristic()) throw FieldMismatch();
    sparse.push_back(to_sparse(a));
    if (sparse.back().empty()) return zero();
  }
  Element out = zero();
  std::vector<std::size_t> pos(arity_, 0);
  Tuple t(arity_);
  while (true) {
    Scalar w = field_.one();
    for (std::size_t k = 0; k < arity_; ++k) {
      t[k] = sparse[k][pos[k]].index;
      w *= sparse[k][pos[k]].coeff;
    }
    for (const auto& term : table_[tuple_index(t)]) out[term.index] += w * term.coeff;
    std::size_t k = arity_;
    while (k-- > 0) {
      if (++pos[k] < sparse[k].size()) break;
      pos[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<ProductEntry> NAryAlgebra::entries() const {
  std::vector<ProductEntry> out;
  Tuple t(arity_, 0);
  do {
    const auto& s = basis_product(t);
    if (!s.empty()) out.push_back({t, to_dense(field_, dim_, s)});
  } while (next_tuple(t, dim_));
  return out;
}

std::vector<ProductEntry> NAryAlgebra::orbit_entries() const {
  std::vector<ProductEntry> out;
  Tuple t(arity_, 0);
  do {
    const auto& s = basis_product(t);
    if (!s.empty()) out.push_back({t, to_dense(field_, dim_, s)});
  } while (next_sorted_tuple(t, dim_));
  return out;
}

// ---------------------------------------------------------------- operators

LinearOperator slot_operator(const NAryAlgebra& alg, std::size_t slot, std::span<const Element> fixed) {
  if (slot >= alg.arity()) throw InvalidArgument("slot out of range");
  if (fixed.size() + 1 != alg.arity()) throw InvalidArgument("operator needs arity - 1 fixed elements");
  std::vector<Element> args;
  args.reserve(alg.arity());
  for (std::size_t k = 0, f = 0; k < alg.arity(); ++k) args.push_back(k == slot ? alg.zero() : fixed[f++]);
  LinearOperator m(alg.field(), alg.dim(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    args[slot] = alg.basis(j);
    m.set_row(j, alg.multiply(args));
  }
  return m;
}

LinearOperator right_operator(const NAryAlgebra& alg, std::span<const Element> fixed) {
  return slot_operator(alg, 0, fixed);
}

LinearOperator d_operator(const NAryAlgebra& alg, std::span<const Element> x, std::span<const Element> y) {
  LinearOperator rx = right_operator(alg, x);
  LinearOperator ry = right_operator(alg, y);
  return rx * ry - ry * rx;
}

std::vector<Element> basis_elements(const NAryAlgebra& alg, std::span<const std::size_t> idx) {
  std::vector<Element> out;
  for (auto i : idx) out.push_back(alg.basis(i));
  return out;
}

NAryAlgebra change_basis(const NAryAlgebra& alg, const Matrix& basis, std::vector<std::string> labels) {
  if (basis.rows() != alg.dim() || basis.cols() != alg.dim()) throw InvalidArgument("basis matrix has wrong size");
  Matrix inv = inverse(basis);
  std::vector<Element> rows;
  for (std::size_t i = 0; i < alg.dim(); ++i) rows.push_back(basis.row_vector(i));
  return NAryAlgebra::from_function(alg.field(), alg.arity(), alg.dim(), std::move(labels), alg.symmetry(),
                                    [&](const Tuple& t) {
                                      std::vector<Element> args;
                                      for (auto i : t) args.push_back(rows[i]);
                                      return act(alg.multiply(args), inv);
                                    });
}

}  // namespace nalg
