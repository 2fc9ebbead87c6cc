#pragma once

#include <string>

#include "nalg/algebra.hpp"
#include "nalg/checks.hpp"

namespace nalg {

/// Which of the forms f(b_i,b_j) = d_ij, g(b_i,b_j,b_k) = d_ijk,
/// h(b_i,b_j) = d_ij are switched on (otherwise identically zero).
struct FormFlags {
  bool f_on = false;
  bool g_on = false;
  bool h_on = false;
};

/// Ternary algebra on F + V, basis {1, b1, ..} ({1, b} when dim V = 1).
NAryAlgebra make_vfgh(const FieldSpec& f, std::size_t dim_v, FormFlags flags);
/// [x,y,z] = (y,z)x + (x,z)y + (x,y)z on V with an orthonormal basis b1..bn.
NAryAlgebra make_A(const FieldSpec& f, std::size_t dim);
/// Binary algebra (a+u)(b+v) = ab + (u,v) + av + bu on F + V.
NAryAlgebra make_J_of_form(const FieldSpec& f, std::size_t dim_v);
/// Ternary product ABC on n x n matrices, basis e11, e12, ...
NAryAlgebra make_matrix_triple(const FieldSpec& f, std::size_t n);
/// Symmetrized matrix triple product.
NAryAlgebra make_sym_matrix(const FieldSpec& f, std::size_t n);
/// Subalgebras <e_ii, e_ij> and <e_ij, e_ji> of make_sym_matrix (1-based i, j).
NAryAlgebra make_s1(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j);
NAryAlgebra make_s2(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j);
/// Binary F[t]/(t^m), basis 1, t, .., t^(m-1).
NAryAlgebra make_truncated_polynomial(const FieldSpec& f, std::size_t m);
/// [x,y,z] = (xy)z.
NAryAlgebra ternary_from_binary(const NAryAlgebra& binary);

/// Unital binary algebra with an involution.
struct InvolutiveAlgebra {
  NAryAlgebra algebra;
  Element unit;
  LinearOperator involution;
};

/// The ground field as a 1-dimensional involutive algebra.
InvolutiveAlgebra cd_base(const FieldSpec& f);
/// (x1,x2)(y1,y2) = (x1 y1 + a y2 conj(x2), conj(x1) y2 + y1 x2). The new
/// basis is (e_k, 0) followed by (e_k, 0)(0, 1); labels are the products,
/// e.g. {1, a, b, ab}. Invariants are re-verified.
InvolutiveAlgebra cd_double(const InvolutiveAlgebra& a, const Scalar& param, const std::string& generator);
InvolutiveAlgebra quaternions(const FieldSpec& f, const Scalar& a, const Scalar& b);
InvolutiveAlgebra octonions(const FieldSpec& f, const Scalar& a, const Scalar& b, const Scalar& c);

/// Throws if one of the involutive-algebra invariants fails.
void verify_involutive(const InvolutiveAlgebra& a);

Element conjugate(const InvolutiveAlgebra& a, const Element& x);
Scalar norm(const InvolutiveAlgebra& a, const Element& x);
Scalar trace(const InvolutiveAlgebra& a, const Element& x);
Scalar form(const InvolutiveAlgebra& a, const Element& x, const Element& y);
SubspaceBasis skew_part(const InvolutiveAlgebra& a);

/// Composition identities for a unital algebra with an orthogonal basis.
/// The detail of a failure names the item (1..6). Item 4 is checked as
/// conj(a) b conj(a) = -n(a) conj(b), which is the orthonormal statement
/// rescaled so it applies to bases that cannot be normalized over F.
Verdict composition_lemma_check(const InvolutiveAlgebra& a);

/// [x,y,z] = (x conj(y)) z.
NAryAlgebra ternary_from_involutive(const InvolutiveAlgebra& a);

/// 4-dimensional Filippov algebra: [e1..^ei..e4] = (-1)^i e_i.
NAryAlgebra filippov_a1(const FieldSpec& f);
/// {x,y,z} = (-(y,z)x + (x,z)y - (x,y)z + [x,y,z]) / 6 on A1.
NAryAlgebra a1_brace(const FieldSpec& f);

struct GradedTernary {
  NAryAlgebra algebra;
  SubspaceBasis minus;
  SubspaceBasis zero;
  SubspaceBasis plus;
};

/// Throws if the components are not complementary or a product of basis
/// elements leaves the component of the summed degree (taken in {-1,0,1} mod 3).
void verify_grading(const GradedTernary& g);
/// A1 in the basis a_m1 = e3 - i e4, a = (i/2) e1, b = (1/2) e2, a_p1 = e3 + i e4.
GradedTernary tkk_grading_a1(const FieldSpec& f);
/// [x,y,z] = S_{x,y,z} [[[u_m1, x, u_p1], y, v_m1], z, v_p1] on L0.
NAryAlgebra tkk_ternary(const GradedTernary& g, const Element& u_m1, const Element& v_m1, const Element& u_p1,
                        const Element& v_p1);
/// [x,y,z] = S_{x,y,z} [[[u0, x, u1], y, v1], z, v0] on L_-1.
NAryAlgebra tkk_lminus1(const GradedTernary& g, const Element& u0, const Element& v0, const Element& u1,
                        const Element& v1);
/// [a,a,a] = 6b, [a,a,b] = 2a, [a,b,b] = -2b, [b,b,b] = -6a.
NAryAlgebra make_tca1(const FieldSpec& f);

}  // namespace nalg
