#include "harrco/io.hpp"

#include <fstream>
#include <set>

namespace harrco {

namespace {

Rational coeff_from_json(const Json& j)
{
  try {
    if (j.is_number_integer())
      return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string())
      return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected rational literal, got: " + j.dump());
}

Json combination_to_json(const StructureAlgebra& a, const Vector& v)
{
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0)
      continue;
    Json term;
    term["basis"] = a.basis_names[k];
    term["coeff"] = to_string(v[k]);
    out.push_back(std::move(term));
  }
  return out;
}

Vector combination_from_json(const StructureAlgebra& a, const Json& j)
{
  if (!j.is_array())
    throw ParseError("expected a list of {basis, coeff} terms");
  Vector v(a.dim);
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("basis") || !term.contains("coeff"))
      throw ParseError("combination term needs 'basis' and 'coeff'");
    std::size_t idx;
    try {
      idx = a.basis_index(term.at("basis").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    v[idx] += coeff_from_json(term.at("coeff"));
  }
  return v;
}

} // namespace

Json algebra_to_json(const StructureAlgebra& a)
{
  Json doc;
  doc["dim"] = a.dim;
  doc["basis"] = a.basis_names;
  doc["unit"] = a.basis_names[a.unit_index];
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vector result(a.dim);
      bool nonzero = false;
      for (std::size_t k = 0; k < a.dim; ++k) {
        result[k] = a.c(i, j, k);
        nonzero = nonzero || sgn(result[k]) != 0;
      }
      if (!nonzero)
        continue;
      Json entry;
      entry["lhs"] = a.basis_names[i];
      entry["rhs"] = a.basis_names[j];
      entry["result"] = combination_to_json(a, result);
      products.push_back(std::move(entry));
    }
  doc["products"] = std::move(products);
  return doc;
}

StructureAlgebra algebra_from_json(const Json& doc)
{
  if (!doc.is_object())
    throw ParseError("algebra document must be an object");
  for (const char* field : {"dim", "basis", "unit", "products"})
    if (!doc.contains(field))
      throw ParseError(std::string("algebra document missing '") + field + "'");

  std::size_t dim;
  std::vector<std::string> names;
  try {
    dim = doc.at("dim").get<std::size_t>();
    names = doc.at("basis").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
  if (dim == 0 || names.size() != dim)
    throw ParseError("basis list length must equal dim");
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != dim)
    throw ParseError("duplicate basis names");

  const std::string unit_name = doc.at("unit").get<std::string>();
  std::size_t unit = dim;
  for (std::size_t i = 0; i < dim; ++i)
    if (names[i] == unit_name)
      unit = i;
  if (unit == dim)
    throw ParseError("unit '" + unit_name + "' is not a basis element");

  StructureAlgebra a(dim, names, unit);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (!doc.at("products").is_array())
    throw ParseError("'products' must be a list");
  for (const Json& entry : doc.at("products")) {
    if (!entry.is_object() || !entry.contains("lhs") || !entry.contains("rhs") ||
        !entry.contains("result"))
      throw ParseError("product entry needs 'lhs', 'rhs', 'result'");
    std::size_t i, j;
    try {
      i = a.basis_index(entry.at("lhs").get<std::string>());
      j = a.basis_index(entry.at("rhs").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (!seen.insert({i, j}).second)
      throw ParseError("duplicate product entry for (" + names[i] + ", " + names[j] + ")");
    Vector result = combination_from_json(a, entry.at("result"));
    for (std::size_t k = 0; k < dim; ++k)
      a.c(i, j, k) = result[k];
  }
  return a;
}

Json cochain_to_json(const Cochain& f)
{
  const StructureAlgebra& a = *f.alg;
  Json doc;
  doc["arity"] = f.arity;
  doc["module"] = "regular";
  Json entries = Json::array();
  for (std::size_t row = 0; row < f.values.rows(); ++row) {
    Vector v = f.values.row(row);
    bool nonzero = false;
    for (const Rational& c : v)
      nonzero = nonzero || sgn(c) != 0;
    if (!nonzero)
      continue;
    std::vector<std::size_t> t = index_tuple(row, f.arity, a.dim);
    Json args = Json::array();
    for (std::size_t i : t)
      args.push_back(a.basis_names[i]);
    Json entry;
    entry["args"] = std::move(args);
    entry["value"] = combination_to_json(a, v);
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

Cochain cochain_from_json(const StructureAlgebra& a, const Json& doc)
{
  if (!doc.is_object() || !doc.contains("arity") || !doc.contains("entries"))
    throw ParseError("cochain document needs 'arity' and 'entries'");
  if (doc.contains("module") && doc.at("module") != "regular")
    throw ParseError("only the regular module is supported in cochain files");
  std::size_t arity;
  try {
    arity = doc.at("arity").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
  Cochain f(a, arity);
  if (!doc.at("entries").is_array())
    throw ParseError("'entries' must be a list");
  for (const Json& entry : doc.at("entries")) {
    if (!entry.is_object() || !entry.contains("args") || !entry.contains("value"))
      throw ParseError("cochain entry needs 'args' and 'value'");
    const Json& args = entry.at("args");
    if (!args.is_array() || args.size() != arity)
      throw ParseError("cochain entry args length must equal arity");
    std::vector<std::size_t> t;
    try {
      for (const Json& name : args)
        t.push_back(a.basis_index(name.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    Vector v = combination_from_json(a, entry.at("value"));
    const std::size_t row = tuple_index(t, a.dim);
    for (std::size_t c = 0; c < a.dim; ++c)
      f.values.at(row, c) += v[c];
  }
  return f;
}

Json star_to_json(const StarTruncation& s)
{
  Json doc;
  doc["order"] = s.order();
  Json terms = Json::array();
  terms.push_back("structure");
  for (std::size_t n = 1; n < s.terms.size(); ++n)
    terms.push_back(cochain_to_json(s.terms[n]));
  doc["terms"] = std::move(terms);
  return doc;
}

StarTruncation star_from_json(const StructureAlgebra& a, const Json& doc)
{
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("terms"))
    throw ParseError("star document needs 'order' and 'terms'");
  std::size_t order;
  try {
    order = doc.at("order").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
  const Json& terms = doc.at("terms");
  if (!terms.is_array() || terms.size() != order + 1)
    throw ParseError("star document must carry order+1 terms");
  StarTruncation s;
  s.alg = &a;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const Json& t = terms[n];
    Cochain f = (t.is_string() && t == "structure") ? Cochain::multiplication(a)
                                                    : cochain_from_json(a, t);
    if (f.arity != 2)
      throw ParseError("star terms must have arity 2");
    s.terms.push_back(std::move(f));
  }
  return s;
}

Json load_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write file: " + path);
  out << doc.dump(2) << "\n";
}

StructureAlgebra load_algebra(const std::string& path_or_builtin)
{
  const std::string prefix = "builtin:";
  if (path_or_builtin.rfind(prefix, 0) == 0) {
    try {
      return builtin_algebra(path_or_builtin.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return algebra_from_json(load_json_file(path_or_builtin));
}

} // namespace harrco
