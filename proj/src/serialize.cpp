#include "octowitt/serialize.hpp"

#include <stdexcept>
#include <string>

namespace octowitt {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

Json blade_to_json(Blade b) {
  Json arr = Json::array();
  for (int i : b.indices()) arr.push_back(i);
  return arr;
}

Blade blade_from_json(const Json& j, int dim) {
  if (!j.is_array()) malformed("blade must be an array");
  std::uint64_t mask = 0;
  int prev = -1;
  for (const auto& v : j) {
    if (!v.is_number_integer()) malformed("blade index must be an integer");
    const int i = v.get<int>();
    if (i <= prev) malformed("blade indices must be strictly ascending");
    if (i >= dim) malformed("blade index " + std::to_string(i) + " >= dim " + std::to_string(dim));
    mask |= std::uint64_t{1} << i;
    prev = i;
  }
  return Blade(mask);
}

int dim_from_json(const Json& j, const char* name) {
  const Json& d = field(j, name);
  if (!d.is_number_integer() || d.get<int>() < 0 || d.get<int>() > kMaxGenerators) {
    malformed(std::string("'") + name + "' must be an integer in 0..64");
  }
  return d.get<int>();
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational::parse(j.dump());
  } catch (const std::exception& e) {
    malformed(e.what());
  }
  malformed("rational must be a string \"num/den\" or an integer");
}

Json to_json(const Octonion& o) {
  Json arr = Json::array();
  for (const auto& c : o.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Octonion octonion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) malformed("octonion must be an array of 8 rationals");
  std::array<Rational, 8> c;
  for (std::size_t i = 0; i < 8; ++i) c[i] = rational_from_json(j[i]);
  return Octonion(std::move(c));
}

Json to_json(const Multivector& u) {
  Json terms = Json::array();
  for (const auto& [b, c] : u.terms()) terms.push_back(Json{{"blade", blade_to_json(b)}, {"coeff", to_json(c)}});
  return Json{{"dim", u.dim()}, {"terms", terms}};
}

Multivector multivector_from_json(const Json& j) {
  const int dim = dim_from_json(j, "dim");
  Multivector u(dim);
  for (const auto& t : field(j, "terms")) u.add_term(blade_from_json(field(t, "blade"), dim), rational_from_json(field(t, "coeff")));
  return u;
}

Json to_json(const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [b, c] : t.terms()) terms.push_back(Json{{"blade", blade_to_json(b)}, {"oct", to_json(c)}});
  return Json{{"dim", t.dim()}, {"terms", terms}};
}

TensorElement tensor_from_json(const Json& j) {
  const int dim = dim_from_json(j, "dim");
  TensorElement t(dim);
  for (const auto& term : field(j, "terms")) {
    t.add_term(blade_from_json(field(term, "blade"), dim), octonion_from_json(field(term, "oct")));
  }
  return t;
}

Json to_json(const MultiTensorElement& t) {
  Json terms = Json::array();
  for (const auto& [b, c] : t.terms()) {
    Json slots = Json::array();
    for (const auto& o : c.slots()) slots.push_back(to_json(o));
    terms.push_back(Json{{"blade", blade_to_json(b)}, {"slots", slots}});
  }
  return Json{{"dim", t.dim()}, {"n", t.width()}, {"terms", terms}};
}

MultiTensorElement multi_tensor_from_json(const Json& j) {
  const int dim = dim_from_json(j, "dim");
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<int>() < 1) malformed("'n' must be a positive integer");
  const auto n = nj.get<std::size_t>();
  MultiTensorElement t(dim, n);
  for (const auto& term : field(j, "terms")) {
    const Json& slots = field(term, "slots");
    if (!slots.is_array() || slots.size() != n) malformed("'slots' must hold n octonions");
    std::vector<Octonion> oct;
    for (const auto& s : slots) oct.push_back(octonion_from_json(s));
    t.add_term(blade_from_json(field(term, "blade"), dim), MultiOctonion(std::move(oct)));
  }
  return t;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  const Json& nv = field(j, "nvars");
  if (!nv.is_number_integer() || nv.get<int>() < 0) malformed("'nvars' must be a non-negative integer");
  const int nvars = nv.get<int>();
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("'terms' must be an array");
  int dim = nvars;
  if (!terms.empty()) dim = dim_from_json(field(terms.front(), "coeff"), "dim");
  Polynomial p(nvars, dim);
  for (const auto& t : terms) {
    const Json& ej = field(t, "exps");
    if (!ej.is_array()) malformed("'exps' must be an array");
    Exponents e;
    for (const auto& x : ej) {
      if (!x.is_number_integer()) malformed("exponent must be an integer");
      e.push_back(x.get<int>());
    }
    p.add_term(e, tensor_from_json(field(t, "coeff")));
  }
  return p;
}

std::vector<Rational> coordinates_from_json(const Json& j) {
  if (!j.is_array()) malformed("coordinates must be a JSON array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace octowitt
