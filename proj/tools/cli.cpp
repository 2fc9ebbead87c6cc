#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "nalg/catalog.hpp"
#include "nalg/checks.hpp"
#include "nalg/derivations.hpp"
#include "nalg/error.hpp"
#include "nalg/identities.hpp"
#include "nalg/io.hpp"
#include "nalg/parallel.hpp"
#include "nalg/structure.hpp"

namespace nalg::cli {

namespace {

struct CatalogArgs {
  std::string name;
  std::string field = "Q";
  std::size_t dim = 3;
  std::size_t dimv = 1;
  bool f = false, g = false, h = false;
  std::size_t n = 3;
  std::size_t i = 1, j = 2;
  std::string a = "-1", b = "-1", c = "-1";
  std::string out;
};

const std::vector<std::string> kCatalogNames{
    "vfgh", "A", "J-form", "sym-matrix", "s1", "s2", "quaternion-ternary", "octonion-ternary", "a1", "tca1", "tkk-J",
    "quaternion", "octonion", "a1-brace", "a1-graded", "tkk-L-1"};

GradedTernary graded(const FieldSpec& base) {
  if (base.is_rational()) throw InvalidArgument("the graded A1 needs a prime field containing i, e.g. F5 or F13");
  return tkk_grading_a1(FieldSpec::prime_with_i(base.characteristic()));
}

NAryAlgebra build_catalog(const CatalogArgs& c) {
  const FieldSpec f = parse_field_name(c.field);
  auto scalar = [&](const std::string& s) { return f.parse(s); };
  const std::string& n = c.name;
  if (n == "vfgh") return make_vfgh(f, c.dimv, {c.f, c.g, c.h});
  if (n == "A") return make_A(f, c.dim);
  if (n == "J-form") return make_J_of_form(f, c.dimv);
  if (n == "sym-matrix") return make_sym_matrix(f, c.n);
  if (n == "s1") return make_s1(f, c.n, c.i, c.j);
  if (n == "s2") return make_s2(f, c.n, c.i, c.j);
  if (n == "quaternion") return quaternions(f, scalar(c.a), scalar(c.b)).algebra;
  if (n == "octonion") return octonions(f, scalar(c.a), scalar(c.b), scalar(c.c)).algebra;
  if (n == "quaternion-ternary") return ternary_from_involutive(quaternions(f, scalar(c.a), scalar(c.b)));
  if (n == "octonion-ternary") return ternary_from_involutive(octonions(f, scalar(c.a), scalar(c.b), scalar(c.c)));
  if (n == "a1") return filippov_a1(f);
  if (n == "a1-brace") return a1_brace(f);
  if (n == "tca1") return make_tca1(f);
  if (n == "a1-graded") return graded(f).algebra;
  if (n == "tkk-J") {
    GradedTernary g = graded(f);
    Element am = g.algebra.basis(0), ap = g.algebra.basis(3);
    return tkk_ternary(g, am, am, ap, ap);
  }
  if (n == "tkk-L-1") {
    GradedTernary g = graded(f);
    const FieldSpec& gf = g.algebra.field();
    Element u0 = gf.from_fraction(1, 2) * g.algebra.basis(1), v0 = gf.from_int(2) * g.algebra.basis(2);
    return tkk_lminus1(g, u0, v0, g.algebra.basis(3), g.algebra.basis(3));
  }
  std::string known;
  for (const auto& k : kCatalogNames) known += (known.empty() ? "" : ", ") + k;
  throw InvalidArgument("unknown catalog entry '" + n + "' (known: " + known + ")");
}

void emit(const NAryAlgebra& alg, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << emit_algebra(alg);
  else
    write_algebra_file(alg, path);
}

std::string format_group(const NAryAlgebra& alg, const std::vector<Element>& xs) {
  std::string s = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + format_element(alg, xs[k]);
  return s + ")";
}

std::vector<std::string> witness_names(const std::string& kind, std::size_t groups) {
  if (kind == "dxy") return {"x", "y", "z"};
  if (kind == "commutative") return {"args", "permuted"};
  if (kind == "binary-jordan" && groups == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < groups; ++k) names.push_back(k == 0 ? "args" : "args" + std::to_string(k + 1));
  return names;
}

void print_verdict(const NAryAlgebra& alg, const std::string& kind, const Verdict& v, std::ostream& out) {
  out << "check " << kind << ": " << (v.pass ? "pass" : "fail") << "\n";
  if (v.pass || !v.witness) return;
  const Witness& w = *v.witness;
  auto names = witness_names(kind, w.arguments.size());
  for (std::size_t k = 0; k < w.arguments.size(); ++k) out << names[k] << " = " << format_group(alg, w.arguments[k]) << "\n";
  if (!w.detail.empty()) out << "detail: " << w.detail << "\n";
  out << "LHS = " << format_element(alg, w.lhs) << "\n";
  out << "RHS = " << format_element(alg, w.rhs) << "\n";
}

std::vector<Element> parse_group(const NAryAlgebra& alg, const std::string& text) {
  std::vector<Element> xs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    xs.push_back(parse_element(alg, text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return xs;
}

Verdict run_check(const NAryAlgebra& alg, const std::string& kind) {
  if (kind == "commutative") return check_total_commutativity(alg);
  if (kind == "dxy") return check_dxy_identity(alg);
  if (kind == "jts") return check_jts_identity(alg);
  if (kind == "binary-jordan") return check_binary_jordan(alg);
  if (kind == "associative") return check_total_associativity(alg);
  if (kind == "alternative") return check_alternative(alg);
  if (kind == "anticommutative") return check_anticommutativity(alg);
  throw InvalidArgument("unknown check '" + kind + "'");
}

// Relation of a to b as subspaces of the same coefficient space.
const char* relation(const SubspaceBasis& a, const SubspaceBasis& b) {
  bool ab = b.contains(a), ba = a.contains(b);
  if (ab && ba) return "equal";
  if (ab) return "strictly contained";
  if (ba) return "strictly contains";
  return "incomparable";
}

std::string format_identity(const std::vector<Monomial>& ms, const Vector& c, std::size_t arity) {
  std::string s;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (c[k].is_zero()) continue;
    Scalar x = c[k];
    bool neg = x.is_negative();
    if (neg) x = -x;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (!x.is_one()) s += x.to_string() + "*";
    s += format_monomial(ms[k], arity);
  }
  return s.empty() ? "0" : s;
}

std::size_t worker_count(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NALG_PAR")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
    throw InvalidArgument("NALG_PAR must be a non-negative integer");
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with n-ary algebras given by structure constants", "nalg"};
  app.require_subcommand(1);
  std::optional<std::size_t> par;
  app.add_option("--par", par, "Worker threads for the scans (0 = all cores; default NALG_PAR or all)");

  CatalogArgs cat;
  auto* c_cat = app.add_subcommand("catalog", "Write a catalog algebra as an algebra file");
  c_cat->set_help_flag("--help", "Print this help message and exit");  // frees --h for the form switch
  c_cat->add_option("name", cat.name, "Catalog entry")->required();
  c_cat->add_option("--field", cat.field, "Q or Fp");
  c_cat->add_option("--dim", cat.dim, "Dimension of V for A");
  c_cat->add_option("--dimv", cat.dimv, "Dimension of V for vfgh and J-form");
  c_cat->add_flag("--f", cat.f, "Switch on the form f");
  c_cat->add_flag("--g", cat.g, "Switch on the form g");
  c_cat->add_flag("--h", cat.h, "Switch on the form h");
  c_cat->add_option("--n", cat.n, "Matrix size");
  c_cat->add_option("--i", cat.i, "Row index (1-based) for s1/s2");
  c_cat->add_option("--j", cat.j, "Column index (1-based) for s1/s2");
  c_cat->add_option("--a", cat.a, "Doubling parameter a");
  c_cat->add_option("--b", cat.b, "Doubling parameter b");
  c_cat->add_option("--c", cat.c, "Doubling parameter c");
  c_cat->add_option("--out", cat.out, "Output path (default stdout)");

  std::string kind, file, x_at, y_at, z_at;
  auto* c_check = app.add_subcommand("check", "Decide an identity; exit 0 pass, 1 fail");
  c_check->add_option("kind", kind, "commutative|dxy|jts|binary-jordan|associative|alternative|anticommutative")
      ->required();
  c_check->add_option("file", file, "Algebra file")->required();
  c_check->add_option("--x", x_at, "dxy only: evaluate at this x-tuple (comma separated elements)");
  c_check->add_option("--y", y_at, "dxy only: y-tuple");
  c_check->add_option("--z", z_at, "dxy only: z-tuple");

  auto* c_simple = app.add_subcommand("simple", "Simplicity; exit 0 simple, 1 not simple, 2 undetermined");
  c_simple->add_option("file", file, "Algebra file")->required();

  bool inner = false, compare_skew = false, show_basis = false;
  auto* c_der = app.add_subcommand("der", "Derivation algebra");
  c_der->add_option("file", file, "Algebra file")->required();
  c_der->add_flag("--inner", inner, "Also compute the inner derivations");
  c_der->add_flag("--compare-skew", compare_skew, "Compare with the skew-symmetric operators");
  c_der->add_flag("--basis", show_basis, "Print the basis matrices");

  int degree = 1;
  std::string mode = "general";
  std::vector<std::string> modulo;
  bool lift = false, generators = false;
  auto* c_id = app.add_subcommand("identities", "Multilinear identities of degree 1 or 2");
  c_id->add_option("file", file, "Algebra file")->required();
  c_id->add_option("--degree", degree, "1 or 2")->check(CLI::IsMember({1, 2}));
  c_id->add_option("--mode", mode, "general or commutative")->check(CLI::IsMember({"general", "commutative"}));
  c_id->add_option("--modulo", modulo, "Known identity, e.g. \"[y,x,x] - [x,x,y]\"; repeatable")
      ->allow_extra_args(false);  // otherwise CLI11 splits a bracketed value on commas
  c_id->add_flag("--lift", lift, "Add the lifting of the algebra's own degree-1 identities to the modulo space");
  c_id->add_flag("--generators", generators, "Print every solution vector");

  std::size_t slot = 1;
  std::string element, out_path;
  auto* c_red = app.add_subcommand("reduce", "Freeze one argument of the product");
  c_red->add_option("file", file, "Algebra file")->required();
  c_red->add_option("--slot", slot, "1-based slot")->required();
  c_red->add_option("--element", element, "Element such as \"b1\" or \"2*a - b\"")->required();
  c_red->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_val = app.add_subcommand("validate", "Parse and summarize an algebra file");
  c_val->add_option("file", file, "Algebra file")->required();

  std::vector<std::string> argv_store{"nalg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto done = [&](int code) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    err << "time: " << ms << " ms\n";
    return code;
  };

  try {
    set_max_workers(worker_count(par));

    if (c_cat->parsed()) {
      emit(build_catalog(cat), cat.out, out);
      return done(ok);
    }

    NAryAlgebra alg = read_algebra_file(file);

    if (c_check->parsed()) {
      if (!x_at.empty() || !y_at.empty() || !z_at.empty()) {
        if (kind != "dxy" || x_at.empty() || y_at.empty() || z_at.empty())
          throw InvalidArgument("--x, --y and --z go together and only with dxy");
        std::vector<Element> x = parse_group(alg, x_at), y = parse_group(alg, y_at), z = parse_group(alg, z_at);
        if (x.size() + 1 != alg.arity() || y.size() + 1 != alg.arity() || z.size() != alg.arity())
          throw InvalidArgument("tuple sizes do not match the arity");
        auto [lhs, rhs] = dxy_sides(alg, x, y, z);
        Verdict v = lhs == rhs ? Verdict::passed() : Verdict::failed({{x, y, z}, lhs, rhs, ""});
        out << "at x = " << format_group(alg, x) << ", y = " << format_group(alg, y) << ", z = " << format_group(alg, z)
            << "\n";
        out << "LHS = " << format_element(alg, lhs) << "\n";
        out << "RHS = " << format_element(alg, rhs) << "\n";
        out << "check dxy at arguments: " << (v.pass ? "pass" : "fail") << "\n";
        return done(v.pass ? ok : failed);
      }
      Verdict v = run_check(alg, kind);
      print_verdict(alg, kind, v, out);
      return done(v.pass ? ok : failed);
    }

    if (c_simple->parsed()) {
      SimplicityReport r = simplicity(alg);
      out << "status: " << to_string(r.status) << "\n";
      out << "certificate: " << to_string(r.certificate) << "\n";
      if (r.certificate == SimplicityCertificate::burnside || r.status == SimplicityStatus::undetermined)
        out << "multiplication algebra dimension: " << r.multiplication_algebra_dim << " of "
            << alg.dim() * alg.dim() << "\n";
      if (r.ideal) {
        out << "ideal: span{";
        for (std::size_t k = 0; k < r.ideal->dim(); ++k)
          out << (k ? ", " : "") << format_element(alg, r.ideal->vectors()[k]);
        out << "}\n";
      }
      return done(r.status == SimplicityStatus::simple ? ok : r.status == SimplicityStatus::not_simple ? failed
                                                                                                       : undetermined);
    }

    if (c_der->parsed()) {
      OperatorSpace der = derivation_algebra(alg);
      out << "dim Der = " << der.dim() << "\n";
      if (show_basis)
        for (const auto& m : der.matrices()) out << m.to_string() << "\n";
      if (inner) {
        OperatorSpace in = inner_derivation_space(alg);
        out << "dim Inder = " << in.dim() << "\n";
        out << "Inder vs Der: " << to_string(compare(in, der)) << "\n";
      }
      if (compare_skew) out << "Der vs skew: " << to_string(compare(der, skew_space(alg.field(), alg.dim()))) << "\n";
      return done(ok);
    }

    if (c_id->parsed()) {
      const MonomialMode m = mode == "commutative" ? MonomialMode::commutative : MonomialMode::general;
      IdentitySpace s = identity_space(alg, degree, m);
      out << "degree " << degree << ", mode " << mode << ", " << s.monomials.size() << " monomials\n";
      const std::size_t vars = degree == 1 ? alg.arity() : 5;
      if (!alg.field().is_rational() && alg.field().characteristic() <= vars)
        out << "note: characteristic " << alg.field().characteristic()
            << " does not exceed the number of variables; multilinear identities may not capture identities with "
               "repeated variables\n";
      out << "solution dimension " << s.solutions.dim() << "\n";
      if (generators || s.solutions.dim() <= 12)
        for (const auto& v : s.solutions.vectors()) out << "  " << format_identity(s.monomials, v, alg.arity()) << "\n";
      if (!modulo.empty() || lift) {
        SubspaceBasis known(alg.field(), s.monomials.size());
        std::vector<Polynomial> same, lower;
        for (const auto& text : modulo) {
          Polynomial p = parse_polynomial(text, alg.arity());
          int d = polynomial_degree(p, alg.arity());
          if (d == degree)
            same.push_back(p);
          else if (d == 1 && degree == 2)
            lower.push_back(p);
          else
            throw InvalidArgument("modulo identity '" + text + "' has degree " + std::to_string(d));
        }
        if (!same.empty()) known = known.sum(renaming_closure(alg.field(), alg.arity(), degree, m, same).solutions);
        if (!lower.empty()) {
          IdentitySpace base = renaming_closure(alg.field(), alg.arity(), 1, m, lower);
          known = known.sum(lifting_span(alg.arity(), base, m).solutions);
        }
        if (lift) {
          if (degree != 2) throw InvalidArgument("--lift needs --degree 2");
          known = known.sum(lifting_span(alg.arity(), identity_space(alg, 1, m), m).solutions);
        }
        out << "modulo dimension " << known.dim() << "\n";
        out << "modulo vs solutions: " << relation(known, s.solutions) << "\n";
      }
      return done(ok);
    }

    if (c_red->parsed()) {
      emit(reduce(alg, slot, parse_element(alg, element)), out_path, out);
      return done(ok);
    }

    if (c_val->parsed()) {
      std::size_t products = (alg.symmetry() == Symmetry::total ? alg.orbit_entries() : alg.entries()).size();
      out << "valid: arity " << alg.arity() << ", dimension " << alg.dim() << ", field " << alg.field().name()
          << ", symmetry " << (alg.symmetry() == Symmetry::total ? "total" : "none") << ", " << products
          << " products\n";
      return done(ok);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return done(input_error);
  }
  return input_error;
}

}  // namespace nalg::cli
