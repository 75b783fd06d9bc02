#include "octowitt/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "octowitt/involutions.hpp"
#include "octowitt/serialize.hpp"
#include "octowitt/witt.hpp"

namespace octowitt {

namespace {

std::string signed_term(bool first, int sign, const std::string& body) {
  if (first) return (sign < 0 ? "-" : "") + body;
  return (sign < 0 ? " - " : " + ") + body;
}

std::string block_suffix(int block, int n) { return n == 1 ? "" : "^" + std::to_string(block); }

/// "e0 g0 - e1 g1 ..." when every coefficient is +-e_i; generic otherwise.
std::string render_tensor_text(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : t.terms()) {
    int idx = -1;
    int sign = 0;
    for (int i = 0; i < 8; ++i) {
      const Rational& v = c[static_cast<std::size_t>(i)];
      if (v.is_zero()) continue;
      if (idx >= 0 || (v != Rational(1) && v != Rational(-1))) {
        idx = -2;
        break;
      }
      idx = i;
      sign = v.sign();
    }
    std::string blade;
    for (int g : b.indices()) blade += (blade.empty() ? "g" : " g") + std::to_string(g);
    if (blade.empty()) blade = "1";
    if (idx >= 0) {
      out += signed_term(first, sign, "e" + std::to_string(idx) + " " + blade);
    } else {
      std::ostringstream os;
      os << "(" << c << ") " << blade;
      out += signed_term(first, 1, os.str());
    }
    first = false;
  }
  return out;
}

std::string fano(TableFormat format) {
  if (format == TableFormat::kJson) {
    Json triples = Json::array();
    for (const auto& t : kFanoTriples) triples.push_back({t.a, t.b, t.c});
    return Json{{"kind", "fano"}, {"triples", triples}}.dump(2) + "\n";
  }
  std::string out;
  for (const auto& t : kFanoTriples) {
    out += "e" + std::to_string(t.a) + " e" + std::to_string(t.b) + " = e" + std::to_string(t.c) + "\n";
  }
  return out;
}

std::string octonion_mul(TableFormat format) {
  if (format == TableFormat::kJson) {
    Json signs = Json::array();
    Json indices = Json::array();
    for (int i = 0; i < 8; ++i) {
      Json srow = Json::array();
      Json irow = Json::array();
      for (int j = 0; j < 8; ++j) {
        const auto p = basis_mul(i, j);
        srow.push_back(p.sign);
        irow.push_back(p.index);
      }
      signs.push_back(srow);
      indices.push_back(irow);
    }
    return Json{{"kind", "octonion-mul"}, {"signs", signs}, {"indices", indices}}.dump(2) + "\n";
  }
  std::string out = "     e0  e1  e2  e3  e4  e5  e6  e7\n";
  for (int i = 0; i < 8; ++i) {
    out += "e" + std::to_string(i) + " ";
    for (int j = 0; j < 8; ++j) {
      const auto p = basis_mul(i, j);
      out += std::string(" ") + (p.sign > 0 ? "+" : "-") + "e" + std::to_string(p.index);
    }
    out += "\n";
  }
  return out;
}

std::string int_matrix(const char* kind, const std::array<std::array<int, 8>, 8>& m, TableFormat format,
                       bool show_plus) {
  if (format == TableFormat::kJson) {
    Json rows = Json::array();
    for (const auto& r : m) rows.push_back(r);
    return Json{{"kind", kind}, {"matrix", rows}}.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : m) {
    for (std::size_t c = 0; c < 8; ++c) {
      if (c) out += " ";
      out += (show_plus && r[c] > 0 ? "+" : "") + std::to_string(r[c]);
    }
    out += "\n";
  }
  return out;
}

std::string witt(int n, TableFormat format) {
  const WittBasis basis = witt_basis(n);
  if (format == TableFormat::kJson) {
    Json blocks = Json::array();
    for (int k = 0; k < n; ++k) {
      Json signs = Json::array();
      for (int i = 0; i < 8; ++i) {
        Json row = Json::array();
        for (int l = 0; l < 8; ++l) {
          const Octonion c = basis.at(k, i).coeff(Blade::generator(8 * k + l));
          row.push_back(c[static_cast<std::size_t>(l)].sign());
        }
        signs.push_back(row);
      }
      blocks.push_back(Json{{"block", k}, {"signs", signs}});
    }
    return Json{{"kind", "witt"}, {"n", n}, {"blocks", blocks}}.dump(2) + "\n";
  }
  std::string out;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < 8; ++i) {
      out += "f" + std::to_string(i) + block_suffix(k, n) + " = " + render_tensor_text(basis.at(k, i)) + "\n";
    }
  }
  return out;
}

std::string twistor(int n, TableFormat format) {
  Json blocks = Json::array();
  std::string out;
  for (int k = 0; k < n; ++k) {
    const auto xs = formal_twistor_vectors(k, n);
    Json signs = Json::array();
    Json vars = Json::array();
    for (int i = 0; i < 8; ++i) {
      const auto pattern = signed_pattern(xs[static_cast<std::size_t>(i)], k);
      Json srow = Json::array();
      Json vrow = Json::array();
      std::string line = "X" + std::to_string(i) + block_suffix(k, n) + " = ";
      for (int l = 0; l < 8; ++l) {
        const auto& e = pattern[static_cast<std::size_t>(l)];
        srow.push_back(e.sign);
        vrow.push_back(8 * k + e.var);
        line += signed_term(l == 0, e.sign, "x" + std::to_string(8 * k + e.var) + " g" + std::to_string(8 * k + l));
      }
      signs.push_back(srow);
      vars.push_back(vrow);
      out += line + "\n";
    }
    blocks.push_back(Json{{"block", k}, {"signs", signs}, {"vars", vars}});
  }
  if (format == TableFormat::kJson) return Json{{"kind", "twistor"}, {"n", n}, {"blocks", blocks}}.dump(2) + "\n";
  return out;
}

std::string hermitian(int n, TableFormat format) {
  Json blocks = Json::array();
  std::string out;
  for (int k = 0; k < n; ++k) {
    const auto xs = formal_twistor_vectors(k, n);
    const auto zs = formal_hermitian_variables(k, n);
    Json signs = Json::array();
    for (int i = 0; i < 8; ++i) {
      const auto s = hermitian_sign_pattern(zs[static_cast<std::size_t>(i)], xs);
      signs.push_back(s);
      std::string line = "Z" + std::to_string(i) + block_suffix(k, n) + " = ";
      for (int j = 0; j < 8; ++j) {
        const int sj = s[static_cast<std::size_t>(j)];
        if (sj == 0) throw std::logic_error("hermitian table: component is not +-X_j");
        line += signed_term(j == 0, sj, "e" + std::to_string(j) + " X" + std::to_string(j) + block_suffix(k, n));
      }
      out += line + "\n";
    }
    blocks.push_back(Json{{"block", k}, {"signs", signs}});
  }
  if (format == TableFormat::kJson) return Json{{"kind", "hermitian"}, {"n", n}, {"blocks", blocks}}.dump(2) + "\n";
  return out;
}

std::string witt_products(int n, TableFormat format) {
  const WittBasis basis = witt_basis(n);
  Json products = Json::array();
  std::string out;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const TensorElement p = basis.at(k, i) * basis.at(k, j);
        products.push_back(Json{{"block", k}, {"i", i}, {"j", j}, {"product", to_json(p)}});
        out += "f" + std::to_string(i) + block_suffix(k, n) + " f" + std::to_string(j) + block_suffix(k, n) +
               " = " + render_tensor_text(p) + "\n";
      }
    }
  }
  if (format == TableFormat::kJson) return Json{{"kind", "witt-products"}, {"n", n}, {"products", products}}.dump(2) + "\n";
  return out;
}

}  // namespace

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds{"fano",    "octonion-mul", "sigma",     "jsigns",
                                              "witt",    "twistor",      "hermitian", "witt-products"};
  return kinds;
}

std::string render_table(std::string_view kind, int n, TableFormat format) {
  if (n < 1) throw std::invalid_argument("tables: n must be >= 1");
  if (kind == "fano") return fano(format);
  if (kind == "octonion-mul") return octonion_mul(format);
  if (kind == "sigma") return int_matrix("sigma", sigma_table(), format, false);
  if (kind == "jsigns") return int_matrix("jsigns", j_sign_table(), format, true);
  if (kind == "witt") return witt(n, format);
  if (kind == "twistor") return twistor(n, format);
  if (kind == "hermitian") return hermitian(n, format);
  if (kind == "witt-products") return witt_products(n, format);
  throw std::invalid_argument("tables: unknown kind '" + std::string(kind) + "'");
}

}  // namespace octowitt
