#include "nalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nalg/error.hpp"

namespace nalg {

using nlohmann::json;

FieldSpec parse_field_name(std::string_view name) {
  if (name == "Q" || name == "q") return FieldSpec::rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    std::string digits(name.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() < 11) {
      unsigned long p = std::stoul(digits);
      if (p < (1ul << 31)) return FieldSpec::prime(static_cast<std::uint32_t>(p));
    }
  }
  throw ParseError("unknown field '" + std::string(name) + "' (expected Q or Fp)");
}

namespace {

json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return "Q";
  json j{{"prime", f.characteristic()}};
  if (f.has_i()) j["i"] = std::to_string(*f.i_residue());
  return j;
}

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) return parse_field_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("prime")) throw ParseError("field must be \"Q\" or {\"prime\": p}");
  const json& pj = j.at("prime");
  if (!pj.is_number_unsigned()) throw ParseError("prime must be a positive integer");
  auto p = pj.get<std::uint64_t>();
  if (p >= (1ull << 31)) throw ParseError("prime too large");
  if (!j.contains("i")) return FieldSpec::prime(static_cast<std::uint32_t>(p));
  const json& ij = j.at("i");
  FieldSpec base = FieldSpec::prime(static_cast<std::uint32_t>(p));
  Scalar i = ij.is_string() ? base.parse(ij.get<std::string>())
             : ij.is_number_integer() ? base.from_int(ij.get<long long>())
                                      : throw ParseError("i must be a scalar string");
  return FieldSpec::prime_with_i(static_cast<std::uint32_t>(p), i.residue());
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("bad value for '") + key + "'");
  }
}

}  // namespace

json algebra_to_json(const NAryAlgebra& alg) {
  json j;
  j["field"] = field_to_json(alg.field());
  j["arity"] = alg.arity();
  j["dimension"] = alg.dim();
  j["basis"] = alg.labels();
  const bool total = alg.symmetry() == Symmetry::total;
  j["symmetry"] = total ? "total" : "none";
  json prods = json::array();
  for (const auto& e : total ? alg.orbit_entries() : alg.entries()) {
    json value = json::object();
    for (std::size_t k = 0; k < e.value.size(); ++k)
      if (!e.value[k].is_zero()) value[std::to_string(k)] = e.value[k].to_string();
    prods.push_back({{"args", e.args}, {"value", value}});
  }
  j["products"] = prods;
  return j;
}

namespace {

NAryAlgebra build_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!j.contains("field")) throw ParseError("missing key 'field'");
  FieldSpec f = field_from_json(j.at("field"));
  auto arity = get_field<std::size_t>(j, "arity");
  auto dim = get_field<std::size_t>(j, "dimension");
  std::vector<std::string> labels;
  if (j.contains("basis")) labels = get_field<std::vector<std::string>>(j, "basis");
  Symmetry sym = Symmetry::none;
  if (j.contains("symmetry")) {
    auto s = get_field<std::string>(j, "symmetry");
    if (s == "total") sym = Symmetry::total;
    else if (s != "none") throw ParseError("symmetry must be \"none\" or \"total\"");
  }
  std::vector<ProductEntry> entries;
  if (j.contains("products")) {
    const json& ps = j.at("products");
    if (!ps.is_array()) throw ParseError("'products' must be an array");
    for (const auto& p : ps) {
      if (!p.is_object()) throw ParseError("product entries must be objects");
      ProductEntry e;
      e.args = get_field<std::vector<std::size_t>>(p, "args");
      e.value = zero_vector(f, dim);
      if (!p.contains("value") || !p.at("value").is_object()) throw ParseError("product value must be an object");
      for (const auto& [k, v] : p.at("value").items()) {
        std::size_t idx;
        try {
          std::size_t used = 0;
          idx = std::stoul(k, &used);
          if (used != k.size()) throw ParseError("");
        } catch (...) {
          throw ParseError("product value key '" + k + "' is not an index");
        }
        if (idx >= dim) throw ParseError("product value index out of range");
        if (!v.is_string()) throw ParseError("scalars must be written as strings");
        e.value[idx] = f.parse(v.get<std::string>());
      }
      entries.push_back(std::move(e));
    }
  }
  return NAryAlgebra(f, arity, dim, labels, entries, sym);
}

}  // namespace

NAryAlgebra algebra_from_json(const json& j) {
  // Every construction failure is a property of the input file.
  try {
    return build_from_json(j);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string emit_algebra(const NAryAlgebra& alg) { return algebra_to_json(alg).dump(2) + "\n"; }

NAryAlgebra parse_algebra(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

NAryAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

void write_algebra_file(const NAryAlgebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << emit_algebra(alg);
}

std::string format_element(const NAryAlgebra& alg, const Element& v) {
  if (v.size() != alg.dim()) throw InvalidArgument("element has wrong dimension");
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    Scalar c = v[k];
    bool neg = c.is_negative();
    if (neg) c = -c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (!c.is_one()) s += c.to_string() + "*";
    s += alg.labels()[k];
  }
  return s.empty() ? "0" : s;
}

Element parse_element(const NAryAlgebra& alg, std::string_view text) {
  const FieldSpec& f = alg.field();
  Element v = alg.zero();
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t.empty()) throw ParseError("empty element");
  if (t == "0") return v;
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool neg = false;
    if (t[pos] == '+' || t[pos] == '-') {
      neg = t[pos] == '-';
      ++pos;
    }
    std::size_t end = t.find_first_of("+-", pos);
    // A '-' right after '*' or '/' belongs to the coefficient.
    while (end != std::string::npos && end > pos && (t[end - 1] == '*' || t[end - 1] == '/'))
      end = t.find_first_of("+-", end + 1);
    std::string term = t.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty()) throw ParseError("malformed element '" + std::string(text) + "'");
    std::string label = term;
    Scalar c = f.one();
    auto star = term.rfind('*');
    if (star != std::string::npos) {
      c = f.parse(term.substr(0, star));
      label = term.substr(star + 1);
    }
    auto it = std::find(alg.labels().begin(), alg.labels().end(), label);
    if (it == alg.labels().end()) throw ParseError("unknown basis label '" + label + "'");
    v[static_cast<std::size_t>(it - alg.labels().begin())] += neg ? -c : c;
    pos = end == std::string::npos ? t.size() : end;
  }
  return v;
}

}  // namespace nalg
