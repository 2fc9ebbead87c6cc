#include "nalg/identities.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "nalg/error.hpp"
#include "nalg/parallel.hpp"

namespace nalg {

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::size_t slot_count(std::size_t arity, int degree) { return degree == 1 ? arity : 2 * arity - 1; }

void check_shape(std::size_t arity, int degree) {
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  if (degree == 1) return;
  if (degree == 2 && arity == 3) return;
  throw InvalidArgument("identities of degree " + std::to_string(degree) + " are supported for degree 1 and for "
                        "degree 2 at arity 3 only");
}

// Lexicographic rank of a permutation of 0..k-1.
std::size_t perm_rank(const std::vector<std::uint8_t>& p) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[j] < p[i]) ++smaller;
    r += smaller * factorial(p.size() - 1 - i);
  }
  return r;
}

// Rank of a 3-subset of {0..4} among all 3-subsets in lexicographic order.
std::size_t triple_rank(std::array<std::uint8_t, 3> t) {
  std::sort(t.begin(), t.end());
  std::size_t r = 0;
  for (std::uint8_t a = 0; a < 5; ++a)
    for (std::uint8_t b = a + 1; b < 5; ++b)
      for (std::uint8_t c = b + 1; c < 5; ++c) {
        if (a == t[0] && b == t[1] && c == t[2]) return r;
        ++r;
      }
  throw InvalidArgument("not a 3-subset");
}

bool is_permutation_of_range(const std::vector<std::uint8_t>& v) {
  std::vector<std::uint8_t> s = v;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != i) return false;
  return true;
}

// Coordinate of a multilinear monomial in monomial_basis(arity, degree, mode).
std::size_t monomial_index(const Monomial& m, std::size_t arity, MonomialMode mode) {
  if (!is_permutation_of_range(m.vars) || m.vars.size() != slot_count(arity, m.degree()))
    throw InvalidArgument("monomial is not multilinear");
  if (m.degree() == 1) return mode == MonomialMode::commutative ? 0 : perm_rank(m.vars);
  const std::size_t p = static_cast<std::size_t>(m.inner_slot);
  if (mode == MonomialMode::general) return p * 120 + perm_rank(m.vars);
  return triple_rank({m.vars[p], m.vars[p + 1], m.vars[p + 2]});
}

Monomial renamed(const Monomial& m, const std::vector<std::uint8_t>& pi) {
  Monomial r = m;
  for (auto& v : r.vars) v = pi[v];
  return r;
}

SparseVector monomial_value(const NAryAlgebra& alg, const Monomial& m, const Tuple& s) {
  const std::size_t n = alg.arity();
  Tuple t(n);
  if (m.degree() == 1) {
    for (std::size_t k = 0; k < n; ++k) t[k] = s[m.vars[k]];
    return alg.basis_product(t);
  }
  const std::size_t p = static_cast<std::size_t>(m.inner_slot);
  Tuple in(n);
  for (std::size_t k = 0; k < n; ++k) in[k] = s[m.vars[p + k]];
  const SparseVector& inner = alg.basis_product(in);
  for (std::size_t k = 0, r = 0; k < n; ++k) {
    if (k == p) {
      r += n;
      continue;
    }
    t[k] = s[m.vars[r++]];
  }
  Vector acc = alg.zero();
  for (const auto& it : inner) {
    t[p] = it.index;
    for (const auto& o : alg.basis_product(t)) acc[o.index] += it.coeff * o.coeff;
  }
  return to_sparse(acc);
}

}  // namespace

const char* to_string(MonomialMode m) { return m == MonomialMode::general ? "general" : "commutative"; }

std::vector<Monomial> monomial_basis(std::size_t arity, int degree, MonomialMode mode) {
  check_shape(arity, degree);
  std::vector<Monomial> out;
  if (degree == 1) {
    if (mode == MonomialMode::commutative) {
      Monomial m;
      for (std::size_t k = 0; k < arity; ++k) m.vars.push_back(static_cast<std::uint8_t>(k));
      return {m};
    }
    for (const auto& p : permutations(arity)) out.push_back({-1, std::vector<std::uint8_t>(p.begin(), p.end())});
    return out;
  }
  if (mode == MonomialMode::commutative) {
    for (std::uint8_t a = 0; a < 5; ++a)
      for (std::uint8_t b = a + 1; b < 5; ++b)
        for (std::uint8_t c = b + 1; c < 5; ++c) {
          Monomial m{0, {a, b, c}};
          for (std::uint8_t r = 0; r < 5; ++r)
            if (r != a && r != b && r != c) m.vars.push_back(r);
          out.push_back(m);
        }
    return out;
  }
  for (int slot = 0; slot < 3; ++slot)
    for (const auto& p : permutations(5)) out.push_back({slot, std::vector<std::uint8_t>(p.begin(), p.end())});
  return out;
}

std::string variable_name(std::size_t v, std::size_t count) {
  static const char* names[] = {"x", "y", "z", "u", "v"};
  if (count <= 5) return names[v];
  return "x" + std::to_string(v + 1);
}

std::string format_monomial(const Monomial& m, std::size_t arity) {
  const std::size_t count = m.vars.size();
  auto name = [&](std::size_t k) { return variable_name(m.vars[k], count); };
  std::string s = "[";
  if (m.degree() == 1) {
    for (std::size_t k = 0; k < m.vars.size(); ++k) s += (k ? "," : "") + name(k);
    return s + "]";
  }
  const std::size_t p = static_cast<std::size_t>(m.inner_slot);
  for (std::size_t k = 0, r = 0; k < arity; ++k) {
    if (k) s += ",";
    if (k == p) {
      s += "[";
      for (std::size_t i = 0; i < arity; ++i) s += (i ? "," : "") + name(r + i);
      s += "]";
      r += arity;
    } else {
      s += name(r++);
    }
  }
  return s + "]";
}

std::vector<Element> evaluate_monomials(const NAryAlgebra& alg, const std::vector<Monomial>& ms, const Tuple& subst) {
  std::vector<Element> out;
  for (const auto& m : ms) out.push_back(to_dense(alg.field(), alg.dim(), monomial_value(alg, m, subst)));
  return out;
}

std::vector<SystemRow> identity_system(const NAryAlgebra& alg, int degree, MonomialMode mode) {
  check_shape(alg.arity(), degree);
  if (mode == MonomialMode::commutative && !check_total_commutativity(alg))
    throw InvalidArgument("commutative mode needs a totally commutative algebra");
  const auto ms = monomial_basis(alg.arity(), degree, mode);
  const auto subs = all_tuples(alg.dim(), slot_count(alg.arity(), degree));
  std::vector<std::vector<SystemRow>> per(subs.size());
  parallel_for(subs.size(), [&](std::size_t, std::size_t k) {
    std::vector<Vector> rows(alg.dim(), zero_vector(alg.field(), ms.size()));
    for (std::size_t j = 0; j < ms.size(); ++j)
      for (const auto& t : monomial_value(alg, ms[j], subs[k])) rows[t.index][j] += t.coeff;
    for (std::size_t c = 0; c < alg.dim(); ++c)
      if (!is_zero(rows[c])) per[k].push_back({subs[k], c, std::move(rows[c])});
  });
  std::vector<SystemRow> out;
  for (auto& p : per)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

IdentitySpace identity_space(const NAryAlgebra& alg, int degree, MonomialMode mode) {
  check_shape(alg.arity(), degree);
  if (mode == MonomialMode::commutative && !check_total_commutativity(alg))
    throw InvalidArgument("commutative mode needs a totally commutative algebra");
  const auto ms = monomial_basis(alg.arity(), degree, mode);
  const auto subs = all_tuples(alg.dim(), slot_count(alg.arity(), degree));
  // Each chunk reduces its own rows; merging chunks in index order keeps the
  // result independent of scheduling.
  const std::size_t chunks = std::min<std::size_t>(subs.size(), 64);
  std::vector<EchelonBuilder> parts(chunks, EchelonBuilder(alg.field(), ms.size()));
  parallel_for(chunks, [&](std::size_t, std::size_t c) {
    for (std::size_t k = c; k < subs.size() && !parts[c].full(); k += chunks) {
      std::vector<Vector> rows(alg.dim(), zero_vector(alg.field(), ms.size()));
      for (std::size_t j = 0; j < ms.size(); ++j)
        for (const auto& t : monomial_value(alg, ms[j], subs[k])) rows[t.index][j] += t.coeff;
      for (auto& r : rows)
        if (!is_zero(r)) parts[c].insert(std::move(r));
    }
  });
  EchelonBuilder all(alg.field(), ms.size());
  for (const auto& p : parts) all.merge(p);
  return {alg.arity(), degree, mode, ms, nullspace(Matrix::from_rows(alg.field(), all.rows(), ms.size()))};
}

Verdict verify_identity(const NAryAlgebra& alg, const std::vector<Monomial>& monomials, const Vector& coefficients) {
  if (monomials.size() != coefficients.size()) throw InvalidArgument("coefficient count differs from monomial count");
  if (monomials.empty()) return Verdict::passed();
  const std::size_t vars = monomials.front().vars.size();
  for (const auto& m : monomials)
    if (m.vars.size() != vars) throw InvalidArgument("monomials of different degrees");
  const auto subs = all_tuples(alg.dim(), vars);
  auto value = [&](const Tuple& s) {
    Vector acc = alg.zero();
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if (coefficients[j].is_zero()) continue;
      for (const auto& t : monomial_value(alg, monomials[j], s)) acc[t.index] += coefficients[j] * t.coeff;
    }
    return acc;
  };
  auto hit = parallel_find_first(subs.size(), [&](std::size_t k) { return !is_zero(value(subs[k])); });
  if (!hit) return Verdict::passed();
  Witness w;
  w.arguments = {basis_elements(alg, subs[*hit])};
  w.lhs = value(subs[*hit]);
  w.rhs = alg.zero();
  return Verdict::failed(std::move(w));
}

IdentitySpace lifting_span(std::size_t arity, const IdentitySpace& base, MonomialMode mode) {
  if (base.degree != 1) throw InvalidArgument("lifting starts from a degree-1 space");
  if (base.mode != mode) throw InvalidArgument("lifting mode differs from the base space mode");
  check_shape(arity, 2);
  const FieldSpec& f = base.solutions.field();
  const auto target = monomial_basis(arity, 2, mode);
  EchelonBuilder span(f, target.size());
  const auto renamings = permutations(5);
  for (const auto& beta : base.solutions.vectors()) {
    for (const auto& ren : renamings) {
      auto add = [&](Vector& acc, const Monomial& m, const Scalar& c) {
        acc[monomial_index(m, arity, mode)] += c;
      };
      // Abstract variables 0,1,2 belong to the base identity, 3 and 4 are fresh.
      for (int p = 0; p < 3; ++p) {
        Vector acc = zero_vector(f, target.size());
        for (std::size_t j = 0; j < beta.size(); ++j) {
          if (beta[j].is_zero()) continue;
          const auto& sg = base.monomials[j].vars;
          Monomial m{p, {}};
          for (int k = 0; k < p; ++k) m.vars.push_back(static_cast<std::uint8_t>(ren[3 + k]));
          for (auto q : sg) m.vars.push_back(static_cast<std::uint8_t>(ren[q]));
          for (int k = p; k < 2; ++k) m.vars.push_back(static_cast<std::uint8_t>(ren[3 + k]));
          add(acc, m, beta[j]);
        }
        span.insert(std::move(acc));
      }
      // Base variable j becomes the triple (2,3,4); the others take 0 and 1.
      for (std::uint8_t j = 0; j < 3; ++j) {
        std::uint8_t amap[3];
        for (std::uint8_t q = 0, next = 0; q < 3; ++q)
          if (q != j) amap[q] = static_cast<std::uint8_t>(ren[next++]);
        Vector acc = zero_vector(f, target.size());
        for (std::size_t k = 0; k < beta.size(); ++k) {
          if (beta[k].is_zero()) continue;
          const auto& sg = base.monomials[k].vars;
          Monomial m{0, {}};
          for (std::size_t pos = 0; pos < sg.size(); ++pos) {
            if (sg[pos] == j) {
              m.inner_slot = static_cast<int>(pos);
              for (int r = 2; r < 5; ++r) m.vars.push_back(static_cast<std::uint8_t>(ren[r]));
            } else {
              m.vars.push_back(amap[sg[pos]]);
            }
          }
          add(acc, m, beta[k]);
        }
        span.insert(std::move(acc));
      }
    }
  }
  return {arity, 2, mode, target, span.finish()};
}

// ---------------------------------------------------------------- polynomials

namespace {

struct Parser {
  std::string_view s;
  std::size_t arity = 3;
  std::size_t pos = 0;
  std::map<std::string, std::uint8_t> ids;
  std::vector<std::string> names;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos));
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::uint8_t ident() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (b == pos || !std::isalpha(static_cast<unsigned char>(s[b]))) fail("expected a variable");
    std::string name(s.substr(b, pos - b));
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    if (names.size() >= 32) fail("too many variables");
    ids[name] = static_cast<std::uint8_t>(names.size());
    names.push_back(name);
    return ids[name];
  }
  // Reads one bracket; returns the slot of a nested bracket or -1.
  Monomial bracket(bool allow_nested) {
    if (!eat('[')) fail("expected '['");
    Monomial m;
    for (std::size_t k = 0; k < arity; ++k) {
      if (k && !eat(',')) fail("expected ','");
      skip();
      if (pos < s.size() && s[pos] == '[') {
        if (!allow_nested || m.inner_slot >= 0) fail("only one nested product is supported");
        Monomial inner = bracket(false);
        m.inner_slot = static_cast<int>(k);
        m.vars.insert(m.vars.end(), inner.vars.begin(), inner.vars.end());
      } else {
        m.vars.push_back(ident());
      }
    }
    if (!eat(']')) fail("expected ']' (products take " + std::to_string(arity) + " arguments)");
    return m;
  }
  Polynomial parse() {
    Polynomial p;
    bool first = true;
    while (true) {
      skip();
      if (pos == s.size()) break;
      long long sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip();
      long long c = 1;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        c = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          c = c * 10 + (s[pos++] - '0');
          if (c > (1LL << 40)) fail("coefficient too large");
        }
        eat('*');
      }
      p.terms.push_back({sign * c, bracket(true)});
      first = false;
    }
    if (p.terms.empty()) fail("empty polynomial");
    p.variables = names;
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  Parser ps;
  ps.s = text;
  ps.arity = arity;
  Polynomial p = ps.parse();
  int deg = p.terms.front().mono.degree();
  for (const auto& t : p.terms)
    if (t.mono.degree() != deg) throw ParseError("polynomial mixes degrees");
  return p;
}

int polynomial_degree(const Polynomial& p, std::size_t) { return p.terms.front().mono.degree(); }

Polynomial linearize(const Polynomial& p, std::size_t arity) {
  const std::size_t nv = p.variables.size();
  auto counts = [&](const Monomial& m) {
    std::vector<std::size_t> c(nv, 0);
    for (auto v : m.vars) ++c[v];
    return c;
  };
  const auto mult = counts(p.terms.front().mono);
  for (const auto& t : p.terms)
    if (counts(t.mono) != mult) throw InvalidArgument("polynomial is not homogeneous in its variables");
  if (std::accumulate(mult.begin(), mult.end(), std::size_t{0}) != slot_count(arity, p.terms.front().mono.degree()))
    throw InvalidArgument("polynomial has the wrong number of arguments");

  Polynomial out;
  std::vector<std::uint8_t> first(nv);
  for (std::size_t v = 0, next = 0; v < nv; ++v) {
    first[v] = static_cast<std::uint8_t>(next);
    for (std::size_t k = 0; k < mult[v]; ++k)
      out.variables.push_back(mult[v] == 1 ? p.variables[v] : p.variables[v] + "_" + std::to_string(k + 1));
    next += mult[v];
  }
  for (const auto& t : p.terms) {
    // Occurrence positions of each variable, filled by every ordering of its copies.
    std::vector<std::vector<std::size_t>> where(nv);
    for (std::size_t i = 0; i < t.mono.vars.size(); ++i) where[t.mono.vars[i]].push_back(i);
    std::vector<std::vector<std::vector<std::size_t>>> orders(nv);
    for (std::size_t v = 0; v < nv; ++v) orders[v] = permutations(mult[v]);
    std::vector<std::size_t> choice(nv, 0);
    while (true) {
      Monomial m = t.mono;
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < where[v].size(); ++k)
          m.vars[where[v][k]] = static_cast<std::uint8_t>(first[v] + orders[v][choice[v]][k]);
      out.terms.push_back({t.coeff, m});
      std::size_t v = 0;
      for (; v < nv; ++v) {
        if (++choice[v] < orders[v].size()) break;
        choice[v] = 0;
      }
      if (v == nv) break;
    }
  }
  return out;
}

Vector to_coefficients(const FieldSpec& f, const Polynomial& p, std::size_t arity, MonomialMode mode) {
  const int deg = p.terms.front().mono.degree();
  Vector v = zero_vector(f, monomial_basis(arity, deg, mode).size());
  for (const auto& t : p.terms) v[monomial_index(t.mono, arity, mode)] += f.from_int(t.coeff);
  return v;
}

IdentitySpace renaming_closure(const FieldSpec& f, std::size_t arity, int degree, MonomialMode mode,
                               const std::vector<Polynomial>& polys) {
  check_shape(arity, degree);
  const auto ms = monomial_basis(arity, degree, mode);
  const std::size_t m = slot_count(arity, degree);
  EchelonBuilder span(f, ms.size());
  const auto renamings = permutations(m);
  for (const auto& raw : polys) {
    Polynomial p = linearize(raw, arity);
    if (p.terms.front().mono.degree() != degree) throw InvalidArgument("polynomial has a different degree");
    for (const auto& pi : renamings) {
      std::vector<std::uint8_t> r(pi.begin(), pi.end());
      Polynomial q = p;
      for (auto& t : q.terms) t.mono = renamed(t.mono, r);
      span.insert(to_coefficients(f, q, arity, mode));
      if (span.full()) break;
    }
  }
  return {arity, degree, mode, ms, span.finish()};
}

}  // namespace nalg
