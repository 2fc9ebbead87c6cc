#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nalg/field.hpp"
#include "nalg/linalg.hpp"

namespace nalg {

/// Coordinates of an algebra element in the basis.
using Element = Vector;
using Tuple = std::vector<std::size_t>;

enum class Symmetry { none, total };

struct Term {
  std::uint32_t index;
  Scalar coeff;
};
using SparseVector = std::vector<Term>;

/// A product of basis elements: args -> value.
struct ProductEntry {
  Tuple args;
  Vector value;
};

/// Advances t to the next tuple over [0, d) in lexicographic order.
bool next_tuple(Tuple& t, std::size_t d);
/// Same, restricted to non-decreasing tuples.
bool next_sorted_tuple(Tuple& t, std::size_t d);
/// All tuples of the given length, lexicographic.
std::vector<Tuple> all_tuples(std::size_t d, std::size_t len, bool sorted_only = false);
/// Permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// n-ary algebra given by structure constants. Immutable after construction.
class NAryAlgebra {
 public:
  using TableFn = std::function<Vector(const Tuple&)>;

  NAryAlgebra(const FieldSpec& field, std::size_t arity, std::size_t dim, std::vector<std::string> labels,
              const std::vector<ProductEntry>& entries, Symmetry symmetry = Symmetry::none);

  /// Builds the table by calling fn on every basis tuple (every sorted tuple
  /// when symmetry is total; the whole orbit must then agree and is checked).
  static NAryAlgebra from_function(const FieldSpec& field, std::size_t arity, std::size_t dim,
                                   std::vector<std::string> labels, Symmetry symmetry, const TableFn& fn);

  const FieldSpec& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Symmetry symmetry() const { return symmetry_; }

  std::size_t tuple_index(std::span<const std::size_t> t) const;
  const SparseVector& basis_product(std::span<const std::size_t> t) const { return table_[tuple_index(t)]; }
  Vector basis_product_vector(std::span<const std::size_t> t) const;
  bool is_zero() const;

  Element zero() const { return zero_vector(field_, dim_); }
  Element basis(std::size_t i) const { return unit_vector(field_, dim_, i); }
  Element element(std::initializer_list<long long> coords) const;

  Element multiply(std::span<const Element> args) const;
  Element multiply(std::initializer_list<Element> args) const {
    return multiply(std::span<const Element>(args.begin(), args.size()));
  }

  /// Nonzero products over all basis tuples in lexicographic order.
  std::vector<ProductEntry> entries() const;
  /// Nonzero products over sorted tuples only (orbit representatives).
  std::vector<ProductEntry> orbit_entries() const;

 private:
  NAryAlgebra(const FieldSpec& field, std::size_t arity, std::size_t dim, std::vector<std::string> labels,
              Symmetry symmetry);
  void set(std::span<const std::size_t> t, const Vector& v, bool allow_overwrite);

  FieldSpec field_;
  std::size_t arity_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  Symmetry symmetry_;
  std::vector<SparseVector> table_;
  std::vector<bool> written_;
};

SparseVector to_sparse(const Vector& v);
Vector to_dense(const FieldSpec& f, std::size_t d, const SparseVector& s);

std::vector<std::string> default_labels(const std::string& prefix, std::size_t d);

/// Operator v -> [fixed_0, ..., v at slot, ..., fixed_{n-2}] (slot is 0-based).
LinearOperator slot_operator(const NAryAlgebra& alg, std::size_t slot, std::span<const Element> fixed);
/// R_x: v -> [v, x_1, ..., x_{n-1}]; row j is [b_j, x...].
LinearOperator right_operator(const NAryAlgebra& alg, std::span<const Element> fixed);
/// R_x R_y - R_y R_x.
LinearOperator d_operator(const NAryAlgebra& alg, std::span<const Element> x, std::span<const Element> y);

/// Basis-tuple versions used by the scans.
std::vector<Element> basis_elements(const NAryAlgebra& alg, std::span<const std::size_t> idx);

/// Expresses the algebra in a new basis (rows of `basis` are the new basis
/// vectors in old coordinates); rows must be independent.
NAryAlgebra change_basis(const NAryAlgebra& alg, const Matrix& basis, std::vector<std::string> labels);

}  // namespace nalg
