#include <doctest.h>

#include <algorithm>
#include <set>

#include "nalg/catalog.hpp"
#include "nalg/error.hpp"
#include "nalg/identities.hpp"
#include "oracles.hpp"

using namespace nalg;

namespace {

FieldSpec Q = FieldSpec::rationals();

Vector ints(std::vector<long long> xs) { return oracle::vec(Q, xs); }

const SystemRow* find_row(const std::vector<SystemRow>& rows, const Tuple& subst, std::size_t coord) {
  for (const auto& r : rows)
    if (r.substitution == subst && r.coordinate == coord) return &r;
  return nullptr;
}

NAryAlgebra d2() { return ternary_from_involutive(quaternions(Q, Q.from_int(-1), Q.from_int(-1))); }

// Independent evaluation of a degree-2 monomial: builds the inner product
// and places it at its slot.
Element eval_deg2(const NAryAlgebra& alg, const Monomial& m, const std::vector<Element>& vals) {
  std::vector<Element> inner, outer;
  std::size_t pos = 0;
  for (int s = 0; s < 3; ++s) {
    if (s == m.inner_slot) {
      inner = {vals[m.vars[pos]], vals[m.vars[pos + 1]], vals[m.vars[pos + 2]]};
      outer.push_back(alg.multiply(inner));
      pos += 3;
    } else {
      outer.push_back(vals[m.vars[pos++]]);
    }
  }
  return alg.multiply(outer);
}

}  // namespace

TEST_CASE("monomial bases") {
  CHECK(monomial_basis(3, 1, MonomialMode::general).size() == 6);
  CHECK(monomial_basis(4, 1, MonomialMode::general).size() == 24);
  CHECK(monomial_basis(3, 2, MonomialMode::general).size() == 360);
  auto c = monomial_basis(3, 2, MonomialMode::commutative);
  REQUIRE(c.size() == 10);
  // Term order of the ten-term identity.
  std::vector<std::string> expect{"[[x,y,z],u,v]", "[[x,y,u],z,v]", "[[x,y,v],z,u]", "[[x,z,u],y,v]",
                                  "[[x,z,v],y,u]", "[[x,u,v],y,z]", "[[y,z,u],x,v]", "[[y,z,v],x,u]",
                                  "[[y,u,v],x,z]", "[[z,u,v],x,y]"};
  for (std::size_t i = 0; i < 10; ++i) CHECK(format_monomial(c[i], 3) == expect[i]);
  auto g = monomial_basis(3, 2, MonomialMode::general);
  CHECK(format_monomial(g[0], 3) == "[[x,y,z],u,v]");
  CHECK(format_monomial(g[120], 3) == "[x,[y,z,u],v]");
  CHECK(format_monomial(g[359], 3) == "[v,u,[z,y,x]]");
  std::set<std::pair<int, std::vector<std::uint8_t>>> uniq;
  for (const auto& m : g) uniq.insert({m.inner_slot, m.vars});
  CHECK(uniq.size() == 360);
  CHECK_THROWS_AS(monomial_basis(4, 2, MonomialMode::general), InvalidArgument);
  CHECK_THROWS_AS(monomial_basis(3, 3, MonomialMode::general), InvalidArgument);
}

TEST_CASE("evaluation matches a direct oracle") {
  NAryAlgebra a = d2();
  auto ms = monomial_basis(3, 2, MonomialMode::general);
  for (int it = 0; it < 5; ++it) {
    Tuple subst;
    for (int k = 0; k < 5; ++k) subst.push_back(oracle::small_int(0, 3));
    auto vals = evaluate_monomials(a, ms, subst);
    std::vector<Element> args = basis_elements(a, subst);
    for (std::size_t i = 0; i < ms.size(); i += 7) CHECK(vals[i] == eval_deg2(a, ms[i], args));
  }
}

TEST_CASE("the sixteen equations for A at dimension 2") {
  NAryAlgebra a = make_A(Q, 2);
  auto rows = identity_system(a, 2, MonomialMode::commutative);
  // (first): every variable b1, coordinate b1; a multiple of (1,..,1).
  const SystemRow* first = find_row(rows, {0, 0, 0, 0, 0}, 0);
  REQUIRE(first);
  CHECK(first->coefficients == Q.from_int(9) * ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  NAryAlgebra a1 = make_A(Q, 1);
  auto rows1 = identity_system(a1, 2, MonomialMode::commutative);
  REQUIRE(rows1.size() == 1);
  CHECK(rows1[0].coefficients == Q.from_int(9) * ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));

  struct Case {
    Tuple subst;
    std::size_t coord;
    std::vector<long long> coeffs;
  };
  std::vector<Case> cases{
      {{0, 0, 0, 0, 1}, 1, {3, 3, 1, 3, 1, 1, 3, 1, 1, 1}},  // 2.1
      {{0, 0, 0, 1, 0}, 1, {3, 1, 3, 1, 3, 1, 1, 3, 1, 1}},  // 2.2
      {{0, 0, 1, 0, 0}, 1, {1, 3, 3, 1, 1, 3, 1, 1, 3, 1}},  // 2.3
      {{0, 1, 0, 0, 0}, 1, {1, 1, 1, 3, 3, 3, 1, 1, 1, 3}},  // 2.4
      {{1, 0, 0, 0, 0}, 1, {1, 1, 1, 1, 1, 1, 3, 3, 3, 3}},  // 2.5
      {{0, 0, 0, 1, 1}, 0, {3, 1, 1, 1, 1, 3, 1, 1, 3, 3}},  // 3.1
      {{0, 0, 1, 0, 1}, 0, {1, 3, 1, 1, 3, 1, 1, 3, 1, 3}},  // 3.2
      {{0, 0, 1, 1, 0}, 0, {1, 1, 3, 3, 1, 1, 3, 1, 1, 3}},  // 3.3
      {{0, 1, 0, 0, 1}, 0, {1, 1, 3, 3, 1, 1, 1, 3, 3, 1}},  // 3.4
      {{0, 1, 0, 1, 0}, 0, {1, 3, 1, 1, 3, 1, 3, 1, 3, 1}},  // 3.5
      {{0, 1, 1, 0, 0}, 0, {3, 1, 1, 1, 1, 3, 3, 3, 1, 1}},  // 3.6
      {{1, 0, 0, 0, 1}, 0, {1, 1, 3, 1, 3, 3, 3, 1, 1, 1}},  // 3.7
      {{1, 0, 0, 1, 0}, 0, {1, 3, 1, 3, 1, 3, 1, 3, 1, 1}},  // 3.8
      {{1, 0, 1, 0, 0}, 0, {3, 1, 1, 3, 3, 1, 1, 1, 3, 1}},  // 3.9
      {{1, 1, 0, 0, 0}, 0, {3, 3, 3, 1, 1, 1, 1, 1, 1, 3}},  // 3.10
  };
  std::vector<Vector> system{first->coefficients};
  for (const auto& c : cases) {
    const SystemRow* r = find_row(rows, c.subst, c.coord);
    REQUIRE(r);
    CHECK(r->coefficients == ints(c.coeffs));
    system.push_back(ints(c.coeffs));
  }
  // The sixteen rows alone force the trivial solution.
  CHECK(nullspace(Matrix::from_rows(Q, system, 10)).dim() == 0);
  CHECK(identity_space(a, 2, MonomialMode::commutative).solutions.dim() == 0);
}

TEST_CASE("degree-1 identities of A") {
  for (std::size_t n : {1, 2, 3}) {
    IdentitySpace s = identity_space(make_A(Q, n), 1, MonomialMode::general);
    CHECK(s.solutions.dim() == 5);
    // Oracle: {alpha : sum alpha = 0}.
    CHECK(s.solutions == nullspace(Matrix::from_rows(Q, {ints({1, 1, 1, 1, 1, 1})}, 6)));
  }
  CHECK(identity_space(make_A(Q, 2), 1, MonomialMode::commutative).solutions.dim() == 0);
  CHECK_THROWS_AS(identity_space(d2(), 1, MonomialMode::commutative), InvalidArgument);
}

TEST_CASE("lifting for A") {
  NAryAlgebra a = make_A(Q, 2);
  IdentitySpace base = identity_space(a, 1, MonomialMode::commutative);
  IdentitySpace lifted = lifting_span(3, base, MonomialMode::commutative);
  CHECK(lifted.solutions == identity_space(a, 2, MonomialMode::commutative).solutions);

  IdentitySpace gbase = identity_space(a, 1, MonomialMode::general);
  IdentitySpace glift = lifting_span(3, gbase, MonomialMode::general);
  IdentitySpace g2 = identity_space(a, 2, MonomialMode::general);
  CHECK(g2.solutions.contains(glift.solutions));

  IdentitySpace empty = gbase;
  empty.solutions = SubspaceBasis(Q, 6);
  CHECK(lifting_span(3, empty, MonomialMode::general).solutions.dim() == 0);
  CHECK_THROWS_AS(lifting_span(3, gbase, MonomialMode::commutative), InvalidArgument);
}

TEST_CASE("polynomial parsing and linearization") {
  Polynomial p = parse_polynomial("[y,x,x] - [x,x,y]", 3);
  CHECK(p.variables == std::vector<std::string>{"y", "x"});
  CHECK(polynomial_degree(p, 3) == 1);
  Polynomial l = linearize(p, 3);
  CHECK(l.variables.size() == 3);
  CHECK(l.terms.size() == 4);
  Polynomial q = parse_polynomial("[[x,y,z],u,v] - 2*[x,[u,z,y],v]", 3);
  CHECK(polynomial_degree(q, 3) == 2);
  Vector c = to_coefficients(Q, q, 3, MonomialMode::general);
  auto ms = monomial_basis(3, 2, MonomialMode::general);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::string f = format_monomial(ms[i], 3);
    if (f == "[[x,y,z],u,v]")
      CHECK(c[i] == Q.one());
    else if (f == "[x,[u,z,y],v]")
      CHECK(c[i] == Q.from_int(-2));
    else
      CHECK(c[i].is_zero());
  }
  CHECK_THROWS_AS(parse_polynomial("[x,y", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[x,y]", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[[[x,y,z],u,v],w,t]", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", 3), ParseError);
  CHECK_THROWS_AS(to_coefficients(Q, p, 3, MonomialMode::general), InvalidArgument);
}

TEST_CASE("verify_identity") {
  NAryAlgebra d = d2();
  auto ms = monomial_basis(3, 2, MonomialMode::general);
  auto coeffs = [&](const char* text) { return to_coefficients(Q, parse_polynomial(text, 3), 3, MonomialMode::general); };
  CHECK(verify_identity(d, ms, coeffs("[[x,y,z],u,v] - [x,y,[z,u,v]]")));
  CHECK(verify_identity(d, ms, coeffs("[[x,y,z],u,v] - [x,[u,z,y],v]")));
  auto m1 = monomial_basis(3, 1, MonomialMode::general);
  Vector comm = to_coefficients(Q, parse_polynomial("[x,y,z] - [y,x,z]", 3), 3, MonomialMode::general);
  CHECK(verify_identity(make_A(Q, 3), m1, comm));
  Verdict v = verify_identity(d, m1, comm);
  REQUIRE_FALSE(v);
  CHECK(!is_zero(v.witness->lhs));
  CHECK(is_zero(v.witness->rhs));
  // Witness re-evaluates.
  std::vector<Element> args = v.witness->arguments[0];
  CHECK(d.multiply({args[0], args[1], args[2]}) - d.multiply({args[1], args[0], args[2]}) == v.witness->lhs);
  // Linearized degree-1 identity.
  Polynomial lin = linearize(parse_polynomial("[y,x,x] - [x,x,y]", 3), 3);
  CHECK(verify_identity(d, m1, to_coefficients(Q, lin, 3, MonomialMode::general)));
  CHECK_THROWS_AS(verify_identity(d, m1, ints({1, 2})), InvalidArgument);
}

TEST_CASE("identities of the ternary quaternions") {
  NAryAlgebra d = d2();
  IdentitySpace one = identity_space(d, 1, MonomialMode::general);
  IdentitySpace gen = renaming_closure(Q, 3, 1, MonomialMode::general, {parse_polynomial("[y,x,x] - [x,x,y]", 3)});
  CHECK(one.solutions.dim() == 2);
  CHECK(one.solutions == gen.solutions);

  IdentitySpace two = identity_space(d, 2, MonomialMode::general);
  CHECK(two.solutions.dim() == 335);
  IdentitySpace lifted = lifting_span(3, one, MonomialMode::general);
  CHECK(lifted.solutions.dim() == 200);
  CHECK(two.solutions.contains(lifted.solutions));
  CHECK(lifted.solutions != two.solutions);

  IdentitySpace extra = renaming_closure(
      Q, 3, 2, MonomialMode::general,
      {parse_polynomial("[[x,y,z],u,v] - [x,y,[z,u,v]]", 3), parse_polynomial("[[x,y,z],u,v] - [x,[u,z,y],v]", 3)});
  CHECK(lifted.solutions.sum(extra.solutions) == two.solutions);

  // Round trip: every solution vector is an identity.
  for (const auto& s : one.solutions.vectors()) CHECK(verify_identity(d, one.monomials, s));
  for (std::size_t i = 0; i < two.solutions.dim(); i += 37)
    CHECK(verify_identity(d, two.monomials, two.solutions.vectors()[i]));
}

TEST_CASE("identity spaces round trip across the catalog") {
  std::vector<NAryAlgebra> algs{make_A(Q, 2), make_vfgh(Q, 1, {false, false, true}), make_tca1(Q),
                                make_s1(Q, 2, 1, 2), make_s2(Q, 2, 1, 2), filippov_a1(Q)};
  for (const auto& a : algs) {
    IdentitySpace s1 = identity_space(a, 1, MonomialMode::general);
    for (const auto& v : s1.solutions.vectors()) CHECK(verify_identity(a, s1.monomials, v));
    IdentitySpace s2 = identity_space(a, 2, MonomialMode::general);
    for (const auto& v : s2.solutions.vectors()) CHECK(verify_identity(a, s2.monomials, v));
    CHECK(s2.solutions.contains(lifting_span(3, s1, MonomialMode::general).solutions));
  }
}
