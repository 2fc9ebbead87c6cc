#include "nalg/derivations.hpp"

#include <algorithm>

#include "nalg/error.hpp"
#include "nalg/parallel.hpp"

namespace nalg {

std::vector<LinearOperator> OperatorSpace::matrices() const {
  std::vector<LinearOperator> out;
  for (const auto& v : basis.vectors()) out.push_back(Matrix::unflatten(basis.field(), dim_ambient, v));
  return out;
}

namespace {

// Rows of the Leibniz system for one basis tuple. Unknown (p, q) is the
// entry D(p, q), i.e. the b_q coordinate of D b_p.
void leibniz_rows(const NAryAlgebra& alg, const Tuple& t, std::vector<Vector>& rows) {
  const std::size_t d = alg.dim(), n = alg.arity();
  std::vector<Vector> eq(d, zero_vector(alg.field(), d * d));
  // D applied to the product: sum_k c_k D b_k.
  for (const auto& term : alg.basis_product(t))
    for (std::size_t q = 0; q < d; ++q) eq[q][term.index * d + q] += term.coeff;
  // Minus sum over slots of [.., D b_ts, ..] = sum_j D(ts, j) [.., b_j, ..].
  Tuple u = t;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t j = 0; j < d; ++j) {
      u[s] = j;
      for (const auto& term : alg.basis_product(u)) eq[term.index][t[s] * d + j] -= term.coeff;
    }
    u[s] = t[s];
  }
  for (auto& r : eq)
    if (!is_zero(r)) rows.push_back(std::move(r));
}

}  // namespace

OperatorSpace derivation_algebra(const NAryAlgebra& alg) {
  const std::size_t d = alg.dim();
  // One tuple per orbit suffices for totally commutative products.
  const auto tuples = all_tuples(d, alg.arity(), alg.symmetry() == Symmetry::total);
  const std::size_t chunks = std::min<std::size_t>(tuples.size(), 64);
  std::vector<EchelonBuilder> parts(chunks, EchelonBuilder(alg.field(), d * d));
  parallel_for(chunks, [&](std::size_t, std::size_t c) {
    std::vector<Vector> rows;
    for (std::size_t k = c; k < tuples.size(); k += chunks) {
      rows.clear();
      leibniz_rows(alg, tuples[k], rows);
      for (auto& r : rows) parts[c].insert(std::move(r));
    }
  });
  EchelonBuilder all(alg.field(), d * d);
  for (const auto& p : parts) all.merge(p);
  Matrix sys = Matrix::from_rows(alg.field(), all.rows(), d * d);
  return {d, nullspace(sys)};
}

OperatorSpace inner_derivation_space(const NAryAlgebra& alg) {
  const std::size_t d = alg.dim();
  const auto xs = all_tuples(d, alg.arity() - 1, alg.symmetry() == Symmetry::total);
  std::vector<LinearOperator> r;
  for (const auto& t : xs) r.push_back(right_operator(alg, basis_elements(alg, t)));
  EchelonBuilder span(alg.field(), d * d);
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = a + 1; b < r.size(); ++b) span.insert(commutator(r[a], r[b]).flatten());
  return {d, span.finish()};
}

Verdict is_derivation(const NAryAlgebra& alg, const LinearOperator& dm) {
  if (dm.rows() != alg.dim() || dm.cols() != alg.dim()) throw InvalidArgument("operator size mismatch");
  Tuple t(alg.arity(), 0);
  do {
    auto z = basis_elements(alg, t);
    Element lhs = act(alg.multiply(z), dm);
    Element rhs = alg.zero();
    for (std::size_t s = 0; s < z.size(); ++s) {
      auto w = z;
      w[s] = act(z[s], dm);
      rhs = rhs + alg.multiply(w);
    }
    if (lhs != rhs) {
      Witness wit;
      wit.arguments = {z};
      wit.lhs = lhs;
      wit.rhs = rhs;
      return Verdict::failed(std::move(wit));
    }
  } while (next_tuple(t, alg.dim()));
  return Verdict::passed();
}

OperatorSpace skew_space(const FieldSpec& f, std::size_t d) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) gens.push_back((Matrix::unit(f, d, i, j) - Matrix::unit(f, d, j, i)).flatten());
  return {d, SubspaceBasis::span(f, d * d, gens)};
}

SpaceRelation compare(const OperatorSpace& a, const OperatorSpace& b) {
  if (a.dim_ambient != b.dim_ambient) throw InvalidArgument("operator spaces of different sizes");
  bool ab = b.basis.contains(a.basis), ba = a.basis.contains(b.basis);
  if (ab && ba) return SpaceRelation::equal;
  if (ab) return SpaceRelation::a_in_b;
  if (ba) return SpaceRelation::b_in_a;
  return SpaceRelation::incomparable;
}

const char* to_string(SpaceRelation r) {
  switch (r) {
    case SpaceRelation::equal: return "equal";
    case SpaceRelation::a_in_b: return "strictly contained";
    case SpaceRelation::b_in_a: return "strictly contains";
    case SpaceRelation::incomparable: return "incomparable";
  }
  return "?";
}

bool is_lie_closed(const OperatorSpace& s) {
  auto ms = s.matrices();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!s.contains(commutator(ms[i], ms[j]))) return false;
  return true;
}

D2Result d2_decompose(const InvolutiveAlgebra& h, const LinearOperator& dm) {
  const NAryAlgebra& alg = h.algebra;
  D2Result res;
  if (!is_derivation(ternary_from_involutive(h), dm)) {
    res.failure = "operator is not a derivation of the ternary product";
    return res;
  }
  Element d1 = act(h.unit, dm);
  if (!skew_part(h).member(d1)) {
    res.failure = "D(1) is not in the skew part";
    return res;
  }
  LinearOperator psi(alg.field(), alg.dim(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) psi.set_row(j, alg.multiply({alg.basis(j), d1}));
  LinearOperator phi = dm - psi;
  if (!is_derivation(alg, phi)) {
    res.failure = "D - Psi is not a derivation of the binary product";
    return res;
  }
  if (!is_zero(act(h.unit, phi))) {
    res.failure = "Phi does not kill the unit";
    return res;
  }
  res.parts = D2Decomposition{phi, psi};
  return res;
}

}  // namespace nalg
