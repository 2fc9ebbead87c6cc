#include "nalg/catalog.hpp"

#include <algorithm>

#include "nalg/error.hpp"
#include "nalg/structure.hpp"

namespace nalg {

namespace {

std::vector<std::string> vfgh_labels(std::size_t dim_v) {
  std::vector<std::string> l{"1"};
  if (dim_v == 1) {
    l.push_back("b");
  } else {
    auto rest = default_labels("b", dim_v);
    l.insert(l.end(), rest.begin(), rest.end());
  }
  return l;
}

std::vector<std::string> matrix_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      l.push_back(n < 10 ? "e" + std::to_string(i) + std::to_string(j)
                         : "e" + std::to_string(i) + "_" + std::to_string(j));
  return l;
}

std::string label_of(const NAryAlgebra& alg, const Vector& v, const std::string& fallback) {
  std::size_t nz = 0, at = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) ++nz, at = k;
  return nz == 1 && v[at].is_one() ? alg.labels()[at] : fallback;
}

std::vector<std::string> component_labels(const NAryAlgebra& alg, const SubspaceBasis& s) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < s.dim(); ++i) l.push_back(label_of(alg, s.vectors()[i], "l" + std::to_string(i + 1)));
  return l;
}

NAryAlgebra two_generated(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j, bool diagonal) {
  if (i == j) throw InvalidArgument("the two matrix indices must differ");
  if (i < 1 || j < 1 || i > n || j > n) throw InvalidArgument("matrix index out of range");
  NAryAlgebra sym = make_sym_matrix(f, n);
  auto e = [&](std::size_t r, std::size_t c) { return sym.basis((r - 1) * n + (c - 1)); };
  std::vector<Element> gens = diagonal ? std::vector<Element>{e(i, i), e(i, j)} : std::vector<Element>{e(i, j), e(j, i)};
  auto [span, sub] = subalgebra_closure(sym, gens);
  if (span.dim() != 2) throw Error("two matrix units do not span a subalgebra");
  return sub;
}

// Symmetrized triple product built from nested brackets.
template <class Bracket>
Element symmetrized(const Element& x, const Element& y, const Element& z, Bracket br) {
  std::vector<const Element*> v{&x, &y, &z};
  Element sum;
  for (const auto& p : permutations(3)) {
    Element term = br(*v[p[0]], *v[p[1]], *v[p[2]]);
    sum = sum.empty() ? term : sum + term;
  }
  return sum;
}

int degree_sum(int a, int b, int c) { return ((a + b + c + 1) % 3 + 3) % 3 - 1; }

}  // namespace

// ---------------------------------------------------------------- F + V

NAryAlgebra make_vfgh(const FieldSpec& f, std::size_t dim_v, FormFlags flags) {
  if (dim_v == 0) throw InvalidArgument("dim V must be positive");
  const std::size_t d = dim_v + 1;
  return NAryAlgebra::from_function(f, 3, d, vfgh_labels(dim_v), Symmetry::total, [&](const Tuple& t) {
    // Index 0 is the unit of F; index k > 0 is b_k.
    auto alpha = [&](int k) { return t[k] == 0 ? 1 : 0; };
    auto delta2 = [&](int p, int q) { return t[p] != 0 && t[p] == t[q] ? 1 : 0; };
    long long fv = flags.f_on ? 1 : 0, gv = flags.g_on ? 1 : 0, hv = flags.h_on ? 1 : 0;
    Vector out = zero_vector(f, d);
    long long scalar = alpha(0) * alpha(1) * alpha(2) + fv * (alpha(0) * delta2(1, 2) + alpha(1) * delta2(0, 2) +
                                                             alpha(2) * delta2(0, 1));
    if (t[0] != 0 && t[0] == t[1] && t[1] == t[2]) scalar += gv;
    out[0] = f.from_int(scalar);
    const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int k = 0; k < 3; ++k) {
      if (t[k] == 0) continue;
      int p = pairs[k][0], q = pairs[k][1];
      out[t[k]] += f.from_int(alpha(p) * alpha(q) + hv * delta2(p, q));
    }
    return out;
  });
}

NAryAlgebra make_A(const FieldSpec& f, std::size_t dim) {
  return NAryAlgebra::from_function(f, 3, dim, default_labels("b", dim), Symmetry::total, [&](const Tuple& t) {
    Vector out = zero_vector(f, dim);
    if (t[1] == t[2]) out[t[0]] += f.one();
    if (t[0] == t[2]) out[t[1]] += f.one();
    if (t[0] == t[1]) out[t[2]] += f.one();
    return out;
  });
}

NAryAlgebra make_J_of_form(const FieldSpec& f, std::size_t dim_v) {
  if (dim_v == 0) throw InvalidArgument("dim V must be positive");
  const std::size_t d = dim_v + 1;
  std::vector<std::string> labels{"1"};
  auto rest = default_labels("b", dim_v);
  labels.insert(labels.end(), rest.begin(), rest.end());
  return NAryAlgebra::from_function(f, 2, d, labels, Symmetry::total, [&](const Tuple& t) {
    Vector out = zero_vector(f, d);
    if (t[0] == 0 && t[1] == 0) out[0] = f.one();
    else if (t[0] == 0) out[t[1]] = f.one();
    else if (t[1] == 0) out[t[0]] = f.one();
    else if (t[0] == t[1]) out[0] = f.one();
    return out;
  });
}

NAryAlgebra make_matrix_triple(const FieldSpec& f, std::size_t n) {
  if (n == 0) throw InvalidArgument("matrix size must be positive");
  return NAryAlgebra::from_function(f, 3, n * n, matrix_labels(n), Symmetry::none, [&](const Tuple& t) {
    Vector out = zero_vector(f, n * n);
    std::size_t a = t[0] / n, b = t[0] % n, c = t[1] / n, dd = t[1] % n, e = t[2] / n, g = t[2] % n;
    if (b == c && dd == e) out[a * n + g] = f.one();
    return out;
  });
}

NAryAlgebra make_sym_matrix(const FieldSpec& f, std::size_t n) { return symmetrize(make_matrix_triple(f, n)); }

NAryAlgebra make_s1(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j) {
  return two_generated(f, n, i, j, true);
}

NAryAlgebra make_s2(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j) {
  return two_generated(f, n, i, j, false);
}

NAryAlgebra make_truncated_polynomial(const FieldSpec& f, std::size_t m) {
  if (m == 0) throw InvalidArgument("truncation degree must be positive");
  std::vector<std::string> labels{"1"};
  for (std::size_t k = 1; k < m; ++k) labels.push_back(k == 1 ? "t" : "t" + std::to_string(k));
  return NAryAlgebra::from_function(f, 2, m, labels, Symmetry::total, [&](const Tuple& t) {
    Vector out = zero_vector(f, m);
    if (t[0] + t[1] < m) out[t[0] + t[1]] = f.one();
    return out;
  });
}

NAryAlgebra ternary_from_binary(const NAryAlgebra& bin) {
  if (bin.arity() != 2) throw InvalidArgument("expected a binary algebra");
  return NAryAlgebra::from_function(bin.field(), 3, bin.dim(), bin.labels(), Symmetry::none, [&](const Tuple& t) {
    return bin.multiply({bin.multiply({bin.basis(t[0]), bin.basis(t[1])}), bin.basis(t[2])});
  });
}

// ---------------------------------------------------------------- Cayley-Dickson

InvolutiveAlgebra cd_base(const FieldSpec& f) {
  NAryAlgebra alg(f, 2, 1, {"1"}, {{{0, 0}, {f.one()}}}, Symmetry::total);
  return {alg, {f.one()}, Matrix::identity(f, 1)};
}

Element conjugate(const InvolutiveAlgebra& a, const Element& x) { return act(x, a.involution); }

void verify_involutive(const InvolutiveAlgebra& a) {
  const NAryAlgebra& alg = a.algebra;
  const std::size_t d = alg.dim();
  const SubspaceBasis line = SubspaceBasis::span(alg.field(), d, {a.unit});
  auto fail = [](const std::string& what) { throw Error("involutive algebra invariant violated: " + what); };
  if (a.involution * a.involution != Matrix::identity(alg.field(), d)) fail("involution does not square to 1");
  if (conjugate(a, a.unit) != a.unit) fail("involution moves the unit");
  for (std::size_t i = 0; i < d; ++i) {
    Element x = alg.basis(i);
    if (alg.multiply({a.unit, x}) != x || alg.multiply({x, a.unit}) != x) fail("unit is not two-sided");
    for (std::size_t j = 0; j < d; ++j) {
      Element y = alg.basis(j);
      Element xy_bar = conjugate(a, alg.multiply({x, y}));
      if (xy_bar != alg.multiply({conjugate(a, y), conjugate(a, x)})) fail("involution is not an anti-automorphism");
      // x + conj(x) and x conj(x) in F, polarized so that it holds on all of A.
      if (!line.member(alg.multiply({x, conjugate(a, y)}) + alg.multiply({y, conjugate(a, x)})))
        fail("norm form leaves the unit line");
    }
    if (!line.member(x + conjugate(a, x))) fail("trace leaves the unit line");
    if (!line.member(alg.multiply({x, conjugate(a, x)}))) fail("norm leaves the unit line");
  }
}

InvolutiveAlgebra cd_double(const InvolutiveAlgebra& a, const Scalar& param, const std::string& generator) {
  if (param.is_zero()) throw InvalidArgument("doubling parameter must be nonzero");
  const NAryAlgebra& A = a.algebra;
  const FieldSpec& f = A.field();
  const std::size_t d = A.dim();
  std::vector<std::string> labels = A.labels();
  for (std::size_t k = 0; k < d; ++k) labels.push_back(k == 0 ? generator : A.labels()[k] + generator);

  // Pair coordinates (x1, x2) <-> new coordinates (x1, conj(x2)).
  auto to_pair = [&](std::size_t idx) -> std::pair<Element, Element> {
    if (idx < d) return {A.basis(idx), A.zero()};
    return {A.zero(), conjugate(a, A.basis(idx - d))};
  };
  auto mul = [&](const Element& x, const Element& y) { return A.multiply({x, y}); };
  auto conj = [&](const Element& x) { return conjugate(a, x); };
  NAryAlgebra doubled =
      NAryAlgebra::from_function(f, 2, 2 * d, labels, Symmetry::none, [&](const Tuple& t) {
        auto [x1, x2] = to_pair(t[0]);
        auto [y1, y2] = to_pair(t[1]);
        Element z1 = mul(x1, y1) + param * mul(y2, conj(x2));
        Element z2 = mul(conj(x1), y2) + mul(y1, x2);
        Element out = z1;
        Element z2c = conj(z2);
        out.insert(out.end(), z2c.begin(), z2c.end());
        return out;
      });
  Element unit = a.unit;
  unit.resize(2 * d, f.zero());
  LinearOperator inv(f, 2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) inv(i, j) = a.involution(i, j);
    inv(d + i, d + i) = -f.one();
  }
  InvolutiveAlgebra out{doubled, unit, inv};
  verify_involutive(out);
  return out;
}

InvolutiveAlgebra quaternions(const FieldSpec& f, const Scalar& a, const Scalar& b) {
  return cd_double(cd_double(cd_base(f), a, "a"), b, "b");
}

InvolutiveAlgebra octonions(const FieldSpec& f, const Scalar& a, const Scalar& b, const Scalar& c) {
  return cd_double(quaternions(f, a, b), c, "c");
}

namespace {

// Coefficient c with v = c * unit; throws if v is off the unit line.
Scalar unit_coefficient(const InvolutiveAlgebra& a, const Element& v) {
  std::size_t p = 0;
  while (a.unit[p].is_zero()) ++p;
  Scalar c = v[p] / a.unit[p];
  if (c * a.unit != v) throw Error("element is not a multiple of the unit");
  return c;
}

}  // namespace

Scalar norm(const InvolutiveAlgebra& a, const Element& x) {
  return unit_coefficient(a, a.algebra.multiply({x, conjugate(a, x)}));
}

Scalar trace(const InvolutiveAlgebra& a, const Element& x) { return unit_coefficient(a, x + conjugate(a, x)); }

Scalar form(const InvolutiveAlgebra& a, const Element& x, const Element& y) {
  const FieldSpec& f = a.algebra.field();
  if (f.characteristic() == 2) throw InvalidArgument("the polar form needs characteristic other than 2");
  return (norm(a, x + y) - norm(a, x) - norm(a, y)) / f.from_int(2);
}

SubspaceBasis skew_part(const InvolutiveAlgebra& a) {
  const std::size_t d = a.algebra.dim();
  Matrix m(a.algebra.field(), 1, d);
  for (std::size_t i = 0; i < d; ++i) m(0, i) = trace(a, a.algebra.basis(i));
  return nullspace(m);
}

Verdict composition_lemma_check(const InvolutiveAlgebra& a) {
  const NAryAlgebra& alg = a.algebra;
  const FieldSpec& f = alg.field();
  if (f.characteristic() == 2) throw InvalidArgument("the composition identities need characteristic other than 2");
  const std::size_t d = alg.dim();
  const Scalar two = f.from_int(2);
  auto mul = [&](const Element& x, const Element& y) { return alg.multiply({x, y}); };
  auto cj = [&](const Element& x) { return conjugate(a, x); };
  auto fail = [&](int item, std::vector<Element> args, Element lhs, Element rhs) {
    Witness w;
    w.arguments = {std::move(args)};
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    w.detail = "item " + std::to_string(item);
    return Verdict::failed(std::move(w));
  };

  // Item 1 is quadratic in a, so sums of basis pairs are included.
  std::vector<Element> quad;
  for (std::size_t i = 0; i < d; ++i) quad.push_back(alg.basis(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) quad.push_back(alg.basis(i) + alg.basis(j));
  for (const auto& x : quad)
    for (std::size_t j = 0; j < d; ++j) {
      Element b = alg.basis(j);
      Element nb = norm(a, x) * b;
      for (const Element& side : {mul(mul(x, cj(x)), b), mul(x, mul(cj(x), b)), mul(mul(b, cj(x)), x),
                                  mul(b, mul(cj(x), x))})
        if (side != nb) return fail(1, {x, b}, side, nb);
    }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Element x = alg.basis(i), y = alg.basis(j), z = alg.basis(k);
        Element l2 = mul(mul(x, cj(y)), z) + mul(mul(x, cj(z)), y);
        Element r2 = (two * form(a, y, z)) * x;
        if (l2 != r2) return fail(2, {x, y, z}, l2, r2);
        Element l3 = mul(x, mul(cj(y), z)) + mul(y, mul(cj(x), z));
        Element r3 = (two * form(a, x, y)) * z;
        if (l3 != r3) return fail(3, {x, y, z}, l3, r3);
      }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      Element x = alg.basis(i), y = alg.basis(j);
      Element r4 = -(norm(a, x) * cj(y));
      for (const Element& side : {mul(mul(cj(x), y), cj(x)), mul(cj(x), mul(y, cj(x)))})
        if (side != r4) return fail(4, {x, y}, side, r4);
      for (std::size_t k = 0; k < d; ++k) {
        if (k == i || k == j) continue;
        Element z = alg.basis(k);
        Element l5 = mul(mul(x, cj(y)), z), r5 = -mul(mul(x, cj(z)), y);
        if (l5 != r5) return fail(5, {x, y, z}, l5, r5);
        Element l6 = mul(x, mul(cj(y), z)), r6 = -mul(y, mul(cj(x), z));
        if (l6 != r6) return fail(6, {x, y, z}, l6, r6);
      }
    }
  return Verdict::passed();
}

NAryAlgebra ternary_from_involutive(const InvolutiveAlgebra& a) {
  const NAryAlgebra& alg = a.algebra;
  return NAryAlgebra::from_function(alg.field(), 3, alg.dim(), alg.labels(), Symmetry::none, [&](const Tuple& t) {
    return alg.multiply({alg.multiply({alg.basis(t[0]), conjugate(a, alg.basis(t[1]))}), alg.basis(t[2])});
  });
}

// ---------------------------------------------------------------- A1 and TKK

NAryAlgebra filippov_a1(const FieldSpec& f) {
  return NAryAlgebra::from_function(f, 3, 4, default_labels("e", 4), Symmetry::none, [&](const Tuple& t) {
    Vector out = zero_vector(f, 4);
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return out;
    Tuple s = t;
    int sign = 1;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (t[i] > t[j]) sign = -sign;
    std::sort(s.begin(), s.end());
    std::size_t missing = 0;
    while (std::find(s.begin(), s.end(), missing) != s.end()) ++missing;
    // 1-based index i = missing + 1 carries the sign (-1)^i.
    if ((missing + 1) % 2 == 1) sign = -sign;
    out[missing] = f.from_int(sign);
    return out;
  });
}

NAryAlgebra a1_brace(const FieldSpec& f) {
  if (f.characteristic() == 2 || f.characteristic() == 3) throw InvalidArgument("the brace divides by 6");
  NAryAlgebra a1 = filippov_a1(f);
  const Scalar sixth = f.from_fraction(1, 6);
  return NAryAlgebra::from_function(f, 3, 4, a1.labels(), Symmetry::none, [&](const Tuple& t) {
    Vector out = a1.basis_product_vector(t);
    if (t[1] == t[2]) out[t[0]] -= f.one();
    if (t[0] == t[2]) out[t[1]] += f.one();
    if (t[0] == t[1]) out[t[2]] -= f.one();
    return sixth * out;
  });
}

void verify_grading(const GradedTernary& g) {
  const NAryAlgebra& alg = g.algebra;
  if (alg.arity() != 3) throw InvalidArgument("grading check needs a ternary algebra");
  const SubspaceBasis* comp[3] = {&g.minus, &g.zero, &g.plus};
  if (g.minus.dim() + g.zero.dim() + g.plus.dim() != alg.dim() ||
      g.minus.sum(g.zero).sum(g.plus).dim() != alg.dim())
    throw Error("grading components are not complementary");
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k) {
        const SubspaceBasis& target = *comp[degree_sum(i, j, k) + 1];
        for (const auto& x : comp[i + 1]->vectors())
          for (const auto& y : comp[j + 1]->vectors())
            for (const auto& z : comp[k + 1]->vectors())
              if (!target.member(alg.multiply({x, y, z})))
                throw Error("product leaves the graded component of degree " + std::to_string(degree_sum(i, j, k)));
      }
}

GradedTernary tkk_grading_a1(const FieldSpec& f) {
  if (f.characteristic() == 2) throw InvalidArgument("the graded basis divides by 2");
  const Scalar i = f.i();
  const Scalar half = f.from_fraction(1, 2), zero = f.zero(), one = f.one();
  Matrix basis(f, 4, 4);
  basis.set_row(0, {zero, zero, one, -i});
  basis.set_row(1, {i * half, zero, zero, zero});
  basis.set_row(2, {zero, half, zero, zero});
  basis.set_row(3, {zero, zero, one, i});
  NAryAlgebra alg = change_basis(filippov_a1(f), basis, {"a_m1", "a", "b", "a_p1"});
  GradedTernary g{alg, SubspaceBasis::span(f, 4, {alg.basis(0)}),
                  SubspaceBasis::span(f, 4, {alg.basis(1), alg.basis(2)}), SubspaceBasis::span(f, 4, {alg.basis(3)})};
  verify_grading(g);
  const Scalar m2 = f.from_int(-2);
  if (alg.multiply({alg.basis(1), alg.basis(0), alg.basis(3)}) != m2 * alg.basis(2) ||
      alg.multiply({alg.basis(2), alg.basis(0), alg.basis(3)}) != m2 * alg.basis(1))
    throw Error("graded A1 brackets differ from [a,a_m1,a_p1] = -2b, [b,a_m1,a_p1] = -2a");
  return g;
}

NAryAlgebra tkk_ternary(const GradedTernary& g, const Element& u_m1, const Element& v_m1, const Element& u_p1,
                        const Element& v_p1) {
  if (!g.minus.member(u_m1) || !g.minus.member(v_m1) || !g.plus.member(u_p1) || !g.plus.member(v_p1))
    throw InvalidArgument("arguments are not in the required graded components");
  const NAryAlgebra& L = g.algebra;
  const auto& basis = g.zero.vectors();
  auto br = [&](const Element& x, const Element& y, const Element& z) {
    return L.multiply({L.multiply({L.multiply({u_m1, x, u_p1}), y, v_m1}), z, v_p1});
  };
  return NAryAlgebra::from_function(L.field(), 3, g.zero.dim(), component_labels(L, g.zero), Symmetry::total,
                                    [&](const Tuple& t) {
                                      Element p = symmetrized(basis[t[0]], basis[t[1]], basis[t[2]], br);
                                      return g.zero.coordinates(p);
                                    });
}

NAryAlgebra tkk_lminus1(const GradedTernary& g, const Element& u0, const Element& v0, const Element& u1,
                        const Element& v1) {
  if (!g.zero.member(u0) || !g.zero.member(v0) || !g.plus.member(u1) || !g.plus.member(v1))
    throw InvalidArgument("arguments are not in the required graded components");
  const NAryAlgebra& L = g.algebra;
  const auto& basis = g.minus.vectors();
  auto br = [&](const Element& x, const Element& y, const Element& z) {
    return L.multiply({L.multiply({L.multiply({u0, x, u1}), y, v1}), z, v0});
  };
  return NAryAlgebra::from_function(L.field(), 3, g.minus.dim(), component_labels(L, g.minus), Symmetry::total,
                                    [&](const Tuple& t) {
                                      Element p = symmetrized(basis[t[0]], basis[t[1]], basis[t[2]], br);
                                      return g.minus.coordinates(p);
                                    });
}

NAryAlgebra make_tca1(const FieldSpec& f) {
  std::vector<ProductEntry> e{
      {{0, 0, 0}, {f.zero(), f.from_int(6)}},
      {{0, 0, 1}, {f.from_int(2), f.zero()}},
      {{0, 1, 1}, {f.zero(), f.from_int(-2)}},
      {{1, 1, 1}, {f.from_int(-6), f.zero()}},
  };
  return NAryAlgebra(f, 3, 2, {"a", "b"}, e, Symmetry::total);
}

}  // namespace nalg
