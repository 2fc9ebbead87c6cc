#include "nalg/structure.hpp"

#include <algorithm>

#include "nalg/error.hpp"

namespace nalg {

std::vector<LinearOperator> slot_multiplication_operators(const NAryAlgebra& alg) {
  const std::size_t n = alg.arity(), d = alg.dim();
  std::vector<LinearOperator> ops;
  for (std::size_t slot = 0; slot < n; ++slot) {
    Tuple rest(n - 1, 0);
    do {
      LinearOperator m(alg.field(), d, d);
      Tuple t(n);
      for (std::size_t k = 0, f = 0; k < n; ++k) t[k] = k == slot ? 0 : rest[f++];
      for (std::size_t j = 0; j < d; ++j) {
        t[slot] = j;
        for (const auto& term : alg.basis_product(t)) m(j, term.index) = term.coeff;
      }
      ops.push_back(std::move(m));
    } while (next_tuple(rest, d));
  }
  return ops;
}

std::vector<LinearOperator> independent_slot_operators(const NAryAlgebra& alg) {
  const std::size_t d = alg.dim();
  EchelonBuilder span(alg.field(), d * d);
  std::vector<LinearOperator> out;
  for (auto& m : slot_multiplication_operators(alg))
    if (span.insert(m.flatten())) out.push_back(std::move(m));
  return out;
}

namespace {

SubspaceBasis closure_under(const FieldSpec& f, std::size_t d, const std::vector<LinearOperator>& ops,
                            const std::vector<Element>& generators) {
  EchelonBuilder span(f, d);
  for (const auto& g : generators) span.insert(g);
  for (std::size_t done = 0; done < span.rank() && !span.full(); ++done) {
    Vector v = span.rows()[done];
    for (const auto& m : ops) {
      span.insert(act(v, m));
      if (span.full()) break;
    }
  }
  return span.finish();
}

// Left kernel {v : v M = 0} under the row action.
SubspaceBasis left_kernel(const Matrix& m) { return nullspace(m.transpose()); }

}  // namespace

SubspaceBasis ideal_closure(const NAryAlgebra& alg, const std::vector<Element>& generators) {
  return closure_under(alg.field(), alg.dim(), independent_slot_operators(alg), generators);
}

bool is_ideal(const NAryAlgebra& alg, const SubspaceBasis& s) {
  for (const auto& m : independent_slot_operators(alg))
    for (const auto& v : s.vectors())
      if (!s.member(act(v, m))) return false;
  return true;
}

const char* to_string(SimplicityStatus s) {
  switch (s) {
    case SimplicityStatus::simple: return "simple";
    case SimplicityStatus::not_simple: return "not simple";
    case SimplicityStatus::undetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(SimplicityCertificate c) {
  switch (c) {
    case SimplicityCertificate::burnside: return "burnside";
    case SimplicityCertificate::ideal_witness: return "ideal witness";
    case SimplicityCertificate::abelian: return "abelian";
    case SimplicityCertificate::none: return "none";
  }
  return "?";
}

SimplicityReport simplicity(const NAryAlgebra& alg) {
  const std::size_t d = alg.dim();
  const FieldSpec& f = alg.field();
  SimplicityReport rep;
  if (alg.is_zero()) {
    rep.status = SimplicityStatus::not_simple;
    rep.certificate = SimplicityCertificate::abelian;
    // Any line is an ideal of a zero product; none is proper when d = 1.
    if (d > 1) rep.ideal = SubspaceBasis::span(f, d, {alg.basis(0)});
    return rep;
  }

  const auto ops = independent_slot_operators(alg);
  auto proper = [&](const Element& g) -> std::optional<SubspaceBasis> {
    if (is_zero(g)) return std::nullopt;
    SubspaceBasis s = closure_under(f, d, ops, {g});
    if (s.dim() < d) return s;
    return std::nullopt;
  };
  auto found = [&](SubspaceBasis s) {
    rep.status = SimplicityStatus::not_simple;
    rep.certificate = SimplicityCertificate::ideal_witness;
    rep.ideal = std::move(s);
    return rep;
  };

  std::vector<Element> candidates;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(alg.basis(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      candidates.push_back(alg.basis(i) + alg.basis(j));
      candidates.push_back(alg.basis(i) - alg.basis(j));
    }
  for (const auto& g : candidates)
    if (auto s = proper(g)) return found(*s);
  for (const auto& m : ops) {
    SubspaceBasis k = left_kernel(m);
    for (const auto& v : k.vectors())
      if (auto s = proper(v)) return found(*s);
  }
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      SubspaceBasis k = left_kernel(commutator(ops[a], ops[b]));
      for (const auto& v : k.vectors())
        if (auto s = proper(v)) return found(*s);
    }

  rep.multiplication_algebra_dim = matrix_algebra_closure(ops).dim();
  if (rep.multiplication_algebra_dim == d * d) {
    rep.status = SimplicityStatus::simple;
    rep.certificate = SimplicityCertificate::burnside;
  }
  return rep;
}

NAryAlgebra induced_algebra(const NAryAlgebra& alg, const SubspaceBasis& s, std::vector<std::string> labels) {
  const auto& vs = s.vectors();
  if (s.dim() == 0) throw InvalidArgument("induced algebra on the zero subspace");
  if (labels.empty()) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::size_t nz = 0, at = 0;
      for (std::size_t k = 0; k < vs[i].size(); ++k)
        if (!vs[i][k].is_zero()) ++nz, at = k;
      labels.push_back(nz == 1 ? alg.labels()[at] : "s" + std::to_string(i + 1));
    }
  }
  return NAryAlgebra::from_function(alg.field(), alg.arity(), s.dim(), std::move(labels), alg.symmetry(),
                                    [&](const Tuple& t) {
                                      std::vector<Element> args;
                                      for (auto i : t) args.push_back(vs[i]);
                                      Element p = alg.multiply(args);
                                      if (!s.member(p)) throw InvalidArgument("subspace is not closed under the product");
                                      return s.coordinates(p);
                                    });
}

std::pair<SubspaceBasis, NAryAlgebra> subalgebra_closure(const NAryAlgebra& alg,
                                                         const std::vector<Element>& generators) {
  const std::size_t n = alg.arity();
  EchelonBuilder span(alg.field(), alg.dim());
  for (const auto& g : generators) span.insert(g);
  for (std::size_t before = 0; before != span.rank() && !span.full();) {
    before = span.rank();
    const auto rows = span.rows();
    Tuple t(n, 0);
    do {
      std::vector<Element> args;
      for (auto i : t) args.push_back(rows[i]);
      span.insert(alg.multiply(args));
    } while (next_tuple(t, rows.size()) && !span.full());
  }
  SubspaceBasis s = span.finish();
  return {s, induced_algebra(alg, s)};
}

NAryAlgebra reduce(const NAryAlgebra& alg, std::size_t position, const Element& a) {
  const std::size_t n = alg.arity();
  if (n < 3) throw InvalidArgument("reduction needs arity at least 3");
  if (position < 1 || position > n) throw InvalidArgument("reduction slot out of range");
  if (a.size() != alg.dim()) throw InvalidArgument("element has wrong dimension");
  return NAryAlgebra::from_function(alg.field(), n - 1, alg.dim(), alg.labels(), alg.symmetry(),
                                    [&](const Tuple& t) {
                                      std::vector<Element> args = basis_elements(alg, t);
                                      args.insert(args.begin() + static_cast<long>(position - 1), a);
                                      return alg.multiply(args);
                                    });
}

NAryAlgebra symmetrize(const NAryAlgebra& alg) {
  const auto perms = permutations(alg.arity());
  return NAryAlgebra::from_function(alg.field(), alg.arity(), alg.dim(), alg.labels(), Symmetry::total,
                                    [&](const Tuple& t) {
                                      Element sum = alg.zero();
                                      Tuple q(t.size());
                                      for (const auto& p : perms) {
                                        for (std::size_t i = 0; i < t.size(); ++i) q[i] = t[p[i]];
                                        for (const auto& term : alg.basis_product(q)) sum[term.index] += term.coeff;
                                      }
                                      return sum;
                                    });
}

NAryAlgebra scale(const NAryAlgebra& alg, const Scalar& c) {
  return NAryAlgebra::from_function(alg.field(), alg.arity(), alg.dim(), alg.labels(), alg.symmetry(),
                                    [&](const Tuple& t) { return c * alg.basis_product_vector(t); });
}

bool algebras_equal(const NAryAlgebra& a, const NAryAlgebra& b) {
  if (!a.field().same_field(b.field()) || a.arity() != b.arity() || a.dim() != b.dim()) return false;
  Tuple t(a.arity(), 0);
  do {
    if (a.basis_product_vector(t) != b.basis_product_vector(t)) return false;
  } while (next_tuple(t, a.dim()));
  return true;
}

}  // namespace nalg
