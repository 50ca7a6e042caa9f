#include "mtrace/json_io.hpp"

#include "mtrace/errors.hpp"

namespace mtrace {

using nlohmann::json;

namespace {

mpq_class mpq_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0)
      throw SchemaError("bad rational literal: " + j.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw SchemaError("expected a rational (integer or \"p/q\" string)");
}

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

json scalar_to_json(const Scalar& s) {
  switch (s.field().kind) {
    case FieldKind::Rationals:
      return mpq_str(s.coeffs()[0]);
    case FieldKind::PrimeField:
      return s.coeffs()[0].get_num().get_si();
    case FieldKind::Cyclotomic: {
      json arr = json::array();
      for (const auto& c : s.coeffs()) arr.push_back(mpq_str(c));
      return arr;
    }
  }
  throw Error("unreachable");
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
  if (f.kind == FieldKind::Cyclotomic) {
    if (j.is_array()) {
      std::vector<mpq_class> c;
      for (const auto& x : j) c.push_back(mpq_from_json(x));
      return Scalar::from_coeffs(f, std::move(c));
    }
    return Scalar::from_mpq(f, mpq_from_json(j));  // constant shorthand
  }
  return Scalar::from_mpq(f, mpq_from_json(j));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FieldSpec& f, const json& j) {
  if (!j.is_array()) throw SchemaError("matrix: expected array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = scalar_from_json(f, j[i][c]);
  }
  return m;
}

json field_to_json(const FieldSpec& f) {
  json j;
  switch (f.kind) {
    case FieldKind::Rationals:
      j["kind"] = "Q";
      break;
    case FieldKind::PrimeField:
      j["kind"] = "GF";
      j["p"] = f.p;
      break;
    case FieldKind::Cyclotomic:
      j["kind"] = "cyclotomic";
      j["n"] = f.n;
      break;
  }
  return j;
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw SchemaError("field: expected {\"kind\": ...}");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GF") {
    if (!j.contains("p")) throw SchemaError("field GF: missing p");
    return FieldSpec::prime_field(j["p"].get<unsigned long>());
  }
  if (kind == "cyclotomic") {
    if (!j.contains("n")) throw SchemaError("field cyclotomic: missing n");
    return FieldSpec::cyclotomic(j["n"].get<unsigned long>());
  }
  throw SchemaError("field: unknown kind '" + kind + "'");
}

}  // namespace mtrace
