#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nalg/algebra.hpp"
#include "nalg/checks.hpp"

namespace nalg {

enum class MonomialMode { general, commutative };
const char* to_string(MonomialMode m);

/// Multilinear monomial. Degree 1: [v0,..,v_{n-1}] with inner_slot = -1.
/// Degree 2 (arity 3): the inner product occupies outer slot inner_slot and
/// vars lists the variables in reading order, e.g. slot 1 and (0,3,1,2,4)
/// reads [x,[u,y,z],v].
struct Monomial {
  int inner_slot = -1;
  std::vector<std::uint8_t> vars;

  int degree() const { return inner_slot < 0 ? 1 : 2; }
  bool operator==(const Monomial& o) const { return inner_slot == o.inner_slot && vars == o.vars; }
};

/// Degree 1: all n! orders (commutative: just [x1..xn]). Degree 2 needs
/// arity 3: slot-major then lexicographic variable order (360 monomials), or
/// in commutative mode the 10 monomials [[s1,s2,s3],s4,s5] with
/// s1<s2<s3 and s4<s5, ordered lexicographically by the inner triple.
std::vector<Monomial> monomial_basis(std::size_t arity, int degree, MonomialMode mode);
std::string format_monomial(const Monomial& m, std::size_t arity);
std::string variable_name(std::size_t v, std::size_t count);

/// Coefficient vectors over monomial_basis(arity, degree, mode).
struct IdentitySpace {
  std::size_t arity = 3;
  int degree = 1;
  MonomialMode mode = MonomialMode::general;
  std::vector<Monomial> monomials;
  SubspaceBasis solutions;
};

/// One equation: the given coordinate of the identity evaluated at a
/// substitution of basis elements for the variables.
struct SystemRow {
  Tuple substitution;
  std::size_t coordinate;
  Vector coefficients;
};

/// Every nonzero equation, substitutions in lexicographic order.
std::vector<SystemRow> identity_system(const NAryAlgebra& alg, int degree, MonomialMode mode);
IdentitySpace identity_space(const NAryAlgebra& alg, int degree, MonomialMode mode);

/// Value of every monomial at one substitution.
std::vector<Element> evaluate_monomials(const NAryAlgebra& alg, const std::vector<Monomial>& ms, const Tuple& subst);

/// Combination of the monomials vanishing on every basis substitution;
/// witness arguments are {substituted elements}, rhs is zero.
Verdict verify_identity(const NAryAlgebra& alg, const std::vector<Monomial>& monomials, const Vector& coefficients);

/// Degree-2 consequences of a degree-1 space: each identity placed inside an
/// outer product with fresh variables, and each variable replaced by a
/// product of three fresh ones, under every renaming of the five variables.
IdentitySpace lifting_span(std::size_t arity, const IdentitySpace& base, MonomialMode mode);

/// Polynomial in named variables with integer coefficients, e.g.
/// "[[x,y,z],u,v] - 2*[x,y,[z,u,v]]". Variables may repeat.
struct PolyTerm {
  long long coeff;
  Monomial mono;
};
struct Polynomial {
  std::vector<std::string> variables;
  std::vector<PolyTerm> terms;
};

Polynomial parse_polynomial(std::string_view text, std::size_t arity);
int polynomial_degree(const Polynomial& p, std::size_t arity);
/// Full linearization: a variable occurring k times becomes k fresh
/// variables summed over all k! placements.
Polynomial linearize(const Polynomial& p, std::size_t arity);
/// Coefficient vector of a multilinear polynomial.
Vector to_coefficients(const FieldSpec& f, const Polynomial& p, std::size_t arity, MonomialMode mode);
/// Span of all variable renamings of the linearized polynomials (all of the
/// same degree).
IdentitySpace renaming_closure(const FieldSpec& f, std::size_t arity, int degree, MonomialMode mode,
                               const std::vector<Polynomial>& polys);

}  // namespace nalg
