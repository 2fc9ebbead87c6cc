#include "nalg/checks.hpp"

#include <algorithm>

#include "nalg/error.hpp"
#include "nalg/parallel.hpp"

namespace nalg {

namespace {

std::vector<Element> with_slot(std::vector<Element> args, std::size_t slot, Element v) {
  args[slot] = std::move(v);
  return args;
}

std::string tuple_text(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

Element prod2(const NAryAlgebra& alg, const Element& a, const Element& b) { return alg.multiply({a, b}); }

Element prod3(const NAryAlgebra& alg, const Element& a, const Element& b, const Element& c) {
  return alg.multiply({a, b, c});
}

void require_arity(const NAryAlgebra& alg, std::size_t n, const char* what) {
  if (alg.arity() != n) throw InvalidArgument(std::string(what) + " requires arity " + std::to_string(n));
}

// Sum over the distinct arrangements of xs of the two sides of
// (a y)(b c) = a (y (b c)).
std::pair<Element, Element> jordan_component(const NAryAlgebra& alg, const std::vector<Element>& xs, const Element& y) {
  std::vector<std::vector<Element>> seen;
  Element lhs = alg.zero(), rhs = alg.zero();
  for (const auto& p : permutations(3)) {
    std::vector<Element> arr{xs[p[0]], xs[p[1]], xs[p[2]]};
    if (std::find(seen.begin(), seen.end(), arr) != seen.end()) continue;
    seen.push_back(arr);
    Element bc = prod2(alg, arr[1], arr[2]);
    lhs = lhs + prod2(alg, prod2(alg, arr[0], y), bc);
    rhs = rhs + prod2(alg, arr[0], prod2(alg, y, bc));
  }
  return {lhs, rhs};
}

Element assoc_product(const NAryAlgebra& alg, const std::vector<Element>& xs, std::size_t at) {
  const std::size_t n = alg.arity();
  std::vector<Element> inner(xs.begin() + at, xs.begin() + at + n);
  std::vector<Element> outer(xs.begin(), xs.begin() + at);
  outer.push_back(alg.multiply(inner));
  outer.insert(outer.end(), xs.begin() + at + n, xs.end());
  return alg.multiply(outer);
}

Element assoc3(const NAryAlgebra& alg, const Element& a, const Element& b, const Element& c) {
  return prod2(alg, prod2(alg, a, b), c) - prod2(alg, a, prod2(alg, b, c));
}

}  // namespace

// ---------------------------------------------------------------- commutativity

Verdict check_total_commutativity(const NAryAlgebra& alg) {
  const auto perms = permutations(alg.arity());
  Tuple t(alg.arity(), 0);
  do {
    const auto& base = alg.basis_product(t);
    for (std::size_t k = 1; k < perms.size(); ++k) {
      Tuple q(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) q[i] = t[perms[k][i]];
      if (q == t) continue;
      const auto& other = alg.basis_product(q);
      bool same = other.size() == base.size();
      for (std::size_t i = 0; same && i < base.size(); ++i)
        same = other[i].index == base[i].index && other[i].coeff == base[i].coeff;
      if (!same) {
        Witness w;
        w.arguments = {basis_elements(alg, t), basis_elements(alg, q)};
        w.lhs = to_dense(alg.field(), alg.dim(), other);
        w.rhs = to_dense(alg.field(), alg.dim(), base);
        w.detail = "tuple " + tuple_text(t) + " permuted to " + tuple_text(q);
        return Verdict::failed(std::move(w));
      }
    }
  } while (next_tuple(t, alg.dim()));
  return Verdict::passed();
}

// ---------------------------------------------------------------- D_{x,y}

std::pair<Element, Element> dxy_sides(const NAryAlgebra& alg, const std::vector<Element>& x,
                                      const std::vector<Element>& y, const std::vector<Element>& z) {
  LinearOperator d = d_operator(alg, x, y);
  Element lhs = act(alg.multiply(z), d);
  Element rhs = alg.zero();
  for (std::size_t s = 0; s < z.size(); ++s) rhs = rhs + alg.multiply(with_slot(z, s, act(z[s], d)));
  return {lhs, rhs};
}

Verdict check_dxy_identity(const NAryAlgebra& alg) {
  const std::size_t n = alg.arity(), d = alg.dim();
  const bool total = alg.symmetry() == Symmetry::total;
  const auto xs = all_tuples(d, n - 1, total);
  const auto zs = all_tuples(d, n, total);
  std::vector<LinearOperator> r;
  for (const auto& t : xs) r.push_back(right_operator(alg, basis_elements(alg, t)));
  // D_{x,x} = 0 and D_{y,x} = -D_{x,y}: only pairs a < b are scanned.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) pairs.emplace_back(a, b);

  auto first_bad_z = [&](const LinearOperator& dm) -> std::optional<std::size_t> {
    if (dm.is_zero()) return std::nullopt;
    Element rhs(d);
    for (std::size_t zi = 0; zi < zs.size(); ++zi) {
      const Tuple& z = zs[zi];
      Element lhs = alg.zero();
      for (const auto& term : alg.basis_product(z)) axpy(lhs, term.coeff, dm.row_vector(term.index));
      rhs = alg.zero();
      Tuple q = z;
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t j = 0; j < d; ++j) {
          const Scalar& c = dm(z[s], j);
          if (c.is_zero()) continue;
          q[s] = j;
          for (const auto& term : alg.basis_product(q)) rhs[term.index] += c * term.coeff;
        }
        q[s] = z[s];
      }
      if (lhs != rhs) return zi;
    }
    return std::nullopt;
  };

  auto dop = [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    return r[a] * r[b] - r[b] * r[a];
  };
  auto hit = parallel_find_first(pairs.size(), [&](std::size_t k) { return first_bad_z(dop(k)).has_value(); });
  if (!hit) return Verdict::passed();
  std::size_t zi = *first_bad_z(dop(*hit));
  Witness w;
  w.arguments = {basis_elements(alg, xs[pairs[*hit].first]), basis_elements(alg, xs[pairs[*hit].second]),
                 basis_elements(alg, zs[zi])};
  std::tie(w.lhs, w.rhs) = dxy_sides(alg, w.arguments[0], w.arguments[1], w.arguments[2]);
  w.detail = "x=" + tuple_text(xs[pairs[*hit].first]) + " y=" + tuple_text(xs[pairs[*hit].second]) +
             " z=" + tuple_text(zs[zi]);
  return Verdict::failed(std::move(w));
}

// ---------------------------------------------------------------- JTS

std::pair<Element, Element> jts_sides(const NAryAlgebra& alg, const Element& x, const Element& y, const Element& z,
                                      const Element& u, const Element& v) {
  Element lhs = prod3(alg, prod3(alg, x, y, z), u, v) + prod3(alg, z, u, prod3(alg, x, y, v));
  Element rhs = prod3(alg, x, y, prod3(alg, z, u, v)) + prod3(alg, z, prod3(alg, y, x, u), v);
  return {lhs, rhs};
}

Verdict check_jts_identity(const NAryAlgebra& alg) {
  require_arity(alg, 3, "the Jordan triple system check");
  const std::size_t d = alg.dim();
  Tuple t(3, 0);
  do {
    Tuple q{t[2], t[1], t[0]};
    Element l = alg.basis_product_vector(t), r = alg.basis_product_vector(q);
    if (l != r) {
      Witness w;
      w.arguments = {basis_elements(alg, t)};
      w.lhs = l;
      w.rhs = r;
      w.detail = "partial commutativity at " + tuple_text(t);
      return Verdict::failed(std::move(w));
    }
  } while (next_tuple(t, d));

  auto tuples = all_tuples(d, 5);
  auto hit = parallel_find_first(tuples.size(), [&](std::size_t k) {
    const auto& a = tuples[k];
    auto [l, r] = jts_sides(alg, alg.basis(a[0]), alg.basis(a[1]), alg.basis(a[2]), alg.basis(a[3]), alg.basis(a[4]));
    return l != r;
  });
  if (!hit) return Verdict::passed();
  const auto& a = tuples[*hit];
  Witness w;
  w.arguments = {basis_elements(alg, a)};
  std::tie(w.lhs, w.rhs) =
      jts_sides(alg, alg.basis(a[0]), alg.basis(a[1]), alg.basis(a[2]), alg.basis(a[3]), alg.basis(a[4]));
  w.detail = "(x,y,z,u,v) = " + tuple_text(a);
  return Verdict::failed(std::move(w));
}

// ---------------------------------------------------------------- binary Jordan

std::pair<Element, Element> binary_jordan_sides(const NAryAlgebra& alg, const Element& x, const Element& y) {
  Element xx = prod2(alg, x, x);
  return {prod2(alg, prod2(alg, x, y), xx), prod2(alg, x, prod2(alg, y, xx))};
}

Verdict check_binary_jordan(const NAryAlgebra& alg) {
  require_arity(alg, 2, "the binary Jordan check");
  if (!check_total_commutativity(alg)) throw InvalidArgument("the binary Jordan check requires a commutative algebra");
  const std::size_t d = alg.dim();
  // Replacing x by l_1 x_1 + l_2 x_2 + l_3 x_3 splits the identity into one
  // component per multiset of basis indices; each is checked separately.
  Tuple t(3, 0);
  do {
    std::vector<Element> xs = basis_elements(alg, t);
    for (std::size_t y = 0; y < d; ++y) {
      auto [l, r] = jordan_component(alg, xs, alg.basis(y));
      if (l != r) {
        Witness w;
        w.arguments = {xs, {alg.basis(y)}};
        w.lhs = l;
        w.rhs = r;
        w.detail = "component " + tuple_text(t) + " with y=" + std::to_string(y);
        return Verdict::failed(std::move(w));
      }
    }
  } while (next_sorted_tuple(t, d));

  if (alg.field().is_rational()) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Element x = i == j ? alg.basis(i) : alg.basis(i) + alg.basis(j);
        for (std::size_t y = 0; y < d; ++y) {
          auto [l, r] = binary_jordan_sides(alg, x, alg.basis(y));
          if (l != r) {
            Witness w;
            w.arguments = {{x}, {alg.basis(y)}};
            w.lhs = l;
            w.rhs = r;
            w.detail = "raw identity";
            return Verdict::failed(std::move(w));
          }
        }
      }
  }
  return Verdict::passed();
}

// ---------------------------------------------------------------- associativity

Verdict check_total_associativity(const NAryAlgebra& alg) {
  const std::size_t n = alg.arity();
  const auto tuples = all_tuples(alg.dim(), 2 * n - 1);
  auto bad_slot = [&](const Tuple& t) -> std::optional<std::size_t> {
    auto xs = basis_elements(alg, t);
    Element first = assoc_product(alg, xs, 0);
    for (std::size_t at = 1; at < n; ++at)
      if (assoc_product(alg, xs, at) != first) return at;
    return std::nullopt;
  };
  auto hit = parallel_find_first(tuples.size(), [&](std::size_t k) { return bad_slot(tuples[k]).has_value(); });
  if (!hit) return Verdict::passed();
  std::size_t at = *bad_slot(tuples[*hit]);
  Witness w;
  w.arguments = {basis_elements(alg, tuples[*hit])};
  w.lhs = assoc_product(alg, w.arguments[0], 0);
  w.rhs = assoc_product(alg, w.arguments[0], at);
  w.detail = "inner product at slot " + std::to_string(at);
  return Verdict::failed(std::move(w));
}

Verdict check_anticommutativity(const NAryAlgebra& alg) {
  const std::size_t n = alg.arity();
  Tuple t(n, 0);
  do {
    Element p = alg.basis_product_vector(t);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Tuple q = t;
        std::swap(q[i], q[j]);
        Element l = alg.basis_product_vector(q);
        Element r = t[i] == t[j] ? alg.zero() : -p;
        if (t[i] == t[j]) l = p;
        if (l != r) {
          Witness w;
          w.arguments = {basis_elements(alg, t), basis_elements(alg, q)};
          w.lhs = l;
          w.rhs = r;
          w.detail = t[i] == t[j] ? "repeated argument" : "transposition";
          return Verdict::failed(std::move(w));
        }
      }
  } while (next_tuple(t, alg.dim()));
  return Verdict::passed();
}

Verdict check_alternative(const NAryAlgebra& alg) {
  require_arity(alg, 2, "the alternative check");
  const std::size_t d = alg.dim();
  for (int side = 0; side < 2; ++side) {
    Tuple t(3, 0);
    do {
      Element a = alg.basis(t[0]), b = alg.basis(t[1]), c = alg.basis(t[2]);
      Element v = t[0] == t[1] && side == 0   ? assoc3(alg, a, a, c)
                  : t[1] == t[2] && side == 1 ? assoc3(alg, a, b, b)
                  : side == 0                 ? assoc3(alg, a, b, c) + assoc3(alg, b, a, c)
                                              : assoc3(alg, a, b, c) + assoc3(alg, a, c, b);
      if (!is_zero(v)) {
        Witness w;
        w.arguments = {{a, b, c}};
        w.lhs = v;
        w.rhs = alg.zero();
        w.detail = side == 0 ? "left" : "right";
        return Verdict::failed(std::move(w));
      }
    } while (next_tuple(t, d));
  }
  return Verdict::passed();
}

// ---------------------------------------------------------------- witnesses

bool witness_reproduces(const NAryAlgebra& alg, const std::string& kind, const Witness& w) {
  if (w.lhs == w.rhs) return false;
  std::pair<Element, Element> sides;
  const auto& args = w.arguments;
  if (kind == "commutative") {
    sides = {alg.multiply(args.at(1)), alg.multiply(args.at(0))};
  } else if (kind == "dxy") {
    sides = dxy_sides(alg, args.at(0), args.at(1), args.at(2));
  } else if (kind == "jts") {
    const auto& a = args.at(0);
    if (a.size() == 3)
      sides = {alg.multiply(a), prod3(alg, a[2], a[1], a[0])};
    else
      sides = jts_sides(alg, a.at(0), a.at(1), a.at(2), a.at(3), a.at(4));
  } else if (kind == "binary-jordan") {
    if (args.at(0).size() == 1)
      sides = binary_jordan_sides(alg, args[0][0], args.at(1).at(0));
    else
      sides = jordan_component(alg, args[0], args.at(1).at(0));
  } else if (kind == "associative") {
    std::size_t at = std::stoul(w.detail.substr(w.detail.rfind(' ') + 1));
    sides = {assoc_product(alg, args.at(0), 0), assoc_product(alg, args.at(0), at)};
  } else {
    throw InvalidArgument("unknown witness kind '" + kind + "'");
  }
  return sides.first == w.lhs && sides.second == w.rhs;
}

}  // namespace nalg
