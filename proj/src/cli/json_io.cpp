#include "semiwell/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace semiwell::cli {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(const Json& j, std::ostringstream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        write_json(it.value(), os, indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write_json(v, os, indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::ostringstream os;
  write_json(j, os, 0);
  os << "\n";
  return os.str();
}

std::string spectrum_csv(const std::vector<SweepRecord>& records) {
  std::size_t k = 0;
  for (const auto& r : records) k = std::max(k, r.eigenvalues.size());
  std::ostringstream os;
  os << "N";
  for (std::size_t i = 1; i <= k; ++i) os << ",lambda_" << i;
  os << "\n";
  for (const auto& r : records) {
    os << r.big_n;
    for (double v : r.eigenvalues) os << "," << format_double(v);
    os << "\n";
  }
  return os.str();
}

FlatSymbol flat_symbol_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("flat_symbol must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "n" && it.key() != "terms") throw InputError("flat_symbol: unknown key '" + it.key() + "'");
  }
  if (!j.contains("n") || !j.contains("terms")) throw InputError("flat_symbol needs 'n' and 'terms'");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1) throw InputError("flat_symbol.n must be a positive integer");
  const int n = j["n"].get<int>();
  if (!j["terms"].is_array()) throw InputError("flat_symbol.terms must be an array");
  FlatSymbol h(n);
  for (const auto& t : j["terms"]) {
    if (!t.is_object()) throw InputError("flat_symbol term must be an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      const std::string& key = it.key();
      if (key != "a" && key != "b" && key != "re" && key != "im") {
        throw InputError("flat_symbol term: unknown key '" + key + "'");
      }
    }
    if (!t.contains("a") || !t.contains("b") || !t.contains("re")) {
      throw InputError("flat_symbol term needs 'a', 'b' and 're'");
    }
    MultiIndex a;
    MultiIndex b;
    try {
      a = t["a"].get<MultiIndex>();
      b = t["b"].get<MultiIndex>();
    } catch (const nlohmann::json::exception&) {
      throw InputError("flat_symbol term exponents must be integer arrays");
    }
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) {
      throw InputError("flat_symbol term exponents must have length n");
    }
    if (!t["re"].is_number() || (t.contains("im") && !t["im"].is_number())) {
      throw InputError("flat_symbol coefficients must be numbers");
    }
    const double im = t.contains("im") ? t["im"].get<double>() : 0.0;
    try {
      h.add_term(a, b, Complex(t["re"].get<double>(), im));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("flat_symbol: ") + e.what());
    }
  }
  if (!h.is_real()) throw InputError("flat_symbol is not real-valued (c(a,b) != conj c(b,a))");
  return h;
}

Json flat_symbol_to_json(const FlatSymbol& h) {
  Json terms = Json::array();
  for (const auto& [key, c] : h.terms()) {
    terms.push_back(Json{{"a", key.first}, {"b", key.second}, {"re", c.real()}, {"im", c.imag()}});
  }
  return Json{{"n", h.n()}, {"terms", terms}};
}

SphereSymbol sphere_symbol_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("sphere_symbol must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "terms") throw InputError("sphere_symbol: unknown key '" + it.key() + "'");
  }
  if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("sphere_symbol needs a 'terms' array");
  SphereSymbol h;
  for (const auto& t : j["terms"]) {
    if (!t.is_object()) throw InputError("sphere_symbol term must be an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      const std::string& key = it.key();
      if (key != "i" && key != "j" && key != "k" && key != "c") {
        throw InputError("sphere_symbol term: unknown key '" + key + "'");
      }
    }
    for (const char* key : {"i", "j", "k"}) {
      if (!t.contains(key) || !t[key].is_number_integer() || t[key].get<int>() < 0) {
        throw InputError(std::string("sphere_symbol term needs nonnegative integer '") + key + "'");
      }
    }
    if (!t.contains("c") || !t["c"].is_number()) throw InputError("sphere_symbol term needs numeric 'c'");
    h.add_term(t["i"].get<int>(), t["j"].get<int>(), t["k"].get<int>(), t["c"].get<double>());
  }
  return h;
}

Json sphere_symbol_to_json(const SphereSymbol& h) {
  Json terms = Json::array();
  for (const auto& [e, c] : h.terms()) {
    terms.push_back(Json{{"i", e[0]}, {"j", e[1]}, {"k", e[2]}, {"c", c}});
  }
  return Json{{"terms", terms}};
}

QuadraticForm quadratic_form_of(const FlatSymbol& h) {
  for (const auto& [key, c] : h.terms()) {
    if (c != Complex{} && total_degree(key.first) + total_degree(key.second) != 2) {
      throw InputError("symbol is not a homogeneous quadratic form");
    }
  }
  const int n = h.n();
  auto value = [&](const RVector& w) {
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = Complex(w(j), w(n + j));
    return h.evaluate(z).real();
  };
  RMatrix m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    const RVector ei = RVector::Unit(2 * n, i);
    m(i, i) = value(ei);
    for (int k = 0; k < i; ++k) {
      const RVector ek = RVector::Unit(2 * n, k);
      m(i, k) = m(k, i) = 0.5 * (value(ei + ek) - m(i, i) - value(ek));
    }
  }
  return QuadraticForm(n, m);
}

}  // namespace semiwell::cli
