#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg {

/// Counterexample: the argument groups that were substituted and both sides.
struct Witness {
  std::vector<std::vector<Element>> arguments;
  Element lhs;
  Element rhs;
  std::string detail;
};

struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;

  static Verdict passed() { return {}; }
  static Verdict failed(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return pass; }
};

// All universally quantified checks below substitute basis elements only.
// Both sides of every identity are multilinear in the substituted
// arguments, so agreement on basis tuples implies agreement everywhere.

/// Product invariant under every permutation of the arguments. Witness
/// arguments are {tuple, permuted tuple}; lhs is the permuted product.
Verdict check_total_commutativity(const NAryAlgebra& alg);

/// Both sides of D_{x,y}[z_1..z_n] = sum_s [.., D_{x,y} z_s, ..].
std::pair<Element, Element> dxy_sides(const NAryAlgebra& alg, const std::vector<Element>& x,
                                      const std::vector<Element>& y, const std::vector<Element>& z);
/// Witness arguments are {x, y, z}.
Verdict check_dxy_identity(const NAryAlgebra& alg);

/// [[x,y,z],u,v] + [z,u,[x,y,v]] vs [x,y,[z,u,v]] + [z,[y,x,u],v], together
/// with [x,y,z] = [z,y,x]. Witness arguments are {(x,y,z,u,v)} or {(x,y,z)}.
std::pair<Element, Element> jts_sides(const NAryAlgebra& alg, const Element& x, const Element& y, const Element& z,
                                      const Element& u, const Element& v);
Verdict check_jts_identity(const NAryAlgebra& alg);

/// (xy)(xx) = x(y(xx)) for a commutative binary algebra, checked through
/// every multilinear component so that small characteristics are covered.
/// Witness arguments are {(x_1, x_2, x_3), (y)} with a component in detail.
Verdict check_binary_jordan(const NAryAlgebra& alg);
/// Both sides of the raw identity at (x, y).
std::pair<Element, Element> binary_jordan_sides(const NAryAlgebra& alg, const Element& x, const Element& y);

/// Total associativity: [[x_1..x_n], x_{n+1}..] equals the inner product
/// placed at any other slot. Witness arguments are {(x_1..x_{2n-1})}.
Verdict check_total_associativity(const NAryAlgebra& alg);
/// Swapping two arguments negates and repeated arguments give zero.
Verdict check_anticommutativity(const NAryAlgebra& alg);
/// Binary: (x,x,y) = 0 and (y,x,x) = 0 in linearized form.
Verdict check_alternative(const NAryAlgebra& alg);

/// Re-evaluates a witness produced by one of the named checks.
bool witness_reproduces(const NAryAlgebra& alg, const std::string& kind, const Witness& w);

}  // namespace nalg
