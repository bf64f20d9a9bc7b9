#include "json.hpp"
#include "nilbreadth/harness.hpp"

namespace nilbreadth::harness {

using Json = nlohmann::ordered_json;

// Keys are inserted in sorted order so that dump() is canonical.
std::string serialize_algebra(const LieAlgebra& algebra) {
  const FieldSpec f = algebra.field();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      const Vector& v = algebra.structure(i, j);
      if (is_zero(v)) continue;
      Json coeffs = Json::object();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) coeffs[std::to_string(k + 1)] = v[k].to_string();
      brackets.push_back(Json{{"coeffs", coeffs}, {"i", i + 1}, {"j", j + 1}});
    }
  Json field = f.is_prime() ? Json{{"kind", "gf"}, {"p", f.characteristic()}} : Json{{"kind", "q"}};
  Json doc{{"brackets", brackets}, {"dim", algebra.dim()}, {"field", field}, {"schema_version", "1"}};
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, "algebra document: " + what); }

std::size_t index_value(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  if (!doc.contains("schema_version") || doc["schema_version"] != "1") bad("schema_version must be \"1\"");
  if (!doc.contains("field") || !doc["field"].is_object() || !doc["field"].contains("kind")) bad("missing field");
  const Json& fj = doc["field"];
  FieldSpec field = FieldSpec::rationals();
  if (fj["kind"] == "gf") {
    if (!fj.contains("p")) bad("gf field needs p");
    const std::size_t p = index_value(fj["p"], "p");
    try {
      field = FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      bad(e.what());
    }
  } else if (fj["kind"] != "q") {
    bad("field kind must be \"q\" or \"gf\"");
  }
  if (!doc.contains("dim")) bad("missing dim");
  const std::size_t n = index_value(doc["dim"], "dim");
  LieAlgebra algebra(field, n);
  if (!doc.contains("brackets") || !doc["brackets"].is_array()) bad("brackets must be an array");
  std::vector<bool> seen(n * n, false);
  for (const Json& b : doc["brackets"]) {
    if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs")) bad("bracket entries need i, j, coeffs");
    const std::size_t i = index_value(b["i"], "i"), j = index_value(b["j"], "j");
    if (i < 1 || j > n || i >= j) bad("bracket indices need 1 <= i < j <= dim");
    if (seen[(i - 1) * n + (j - 1)]) bad("duplicate bracket pair");
    seen[(i - 1) * n + (j - 1)] = true;
    if (!b["coeffs"].is_object()) bad("coeffs must be an object");
    Vector v = zero_vector(field, n);
    for (const auto& [key, value] : b["coeffs"].items()) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) bad("coefficient key '" + key + "' is not an index");
      } catch (const std::logic_error&) {
        bad("coefficient key '" + key + "' is not an index");
      }
      if (k < 1 || k > n) bad("coefficient index out of range");
      if (!value.is_string()) bad("coefficients are strings");
      v[k - 1] = Scalar::parse(field, value.get<std::string>());
    }
    algebra.set_bracket(i - 1, j - 1, v);
  }
  return algebra;
}

}  // namespace nilbreadth::harness
