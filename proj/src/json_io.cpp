#include "uebforge/json_io.hpp"

#include <cmath>

#include "json.hpp"

namespace uebforge {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json matrix_to_json(const Matrix& m) {
  std::size_t n = m.size();
  json entries = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    entries.push_back(std::move(row));
  }
  return json{{"n", n}, {"entries", std::move(entries)}};
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

double number_field(const json& j, const char* what) {
  if (!j.is_number())
    throw std::invalid_argument(std::string(what) + " is not a number");
  double v = j.get<double>();
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " is not finite");
  return v;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument(
        "matrix object must have fields \"n\" and \"entries\"");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw std::invalid_argument("\"n\" must be a positive integer");
  std::size_t n = j["n"].get<std::size_t>();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != n)
    throw std::invalid_argument("\"entries\" must be an array of " +
                                std::to_string(n) + " rows");
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("entries row " + std::to_string(i) +
                                  " must have " + std::to_string(n) +
                                  " [re, im] pairs");
    for (std::size_t jj = 0; jj < n; ++jj) {
      const json& cell = row[jj];
      if (!cell.is_array() || cell.size() != 2)
        throw std::invalid_argument("entry (" + std::to_string(i) + ", " +
                                    std::to_string(jj) +
                                    ") must be a [re, im] pair");
      m(i, jj) = Complex(number_field(cell[0], "entry real part"),
                         number_field(cell[1], "entry imaginary part"));
    }
  }
  return m;
}

}  // namespace

std::string serialize_matrix(const Matrix& m) {
  return dump(matrix_to_json(m));
}

std::string serialize_qls(const QuantumLatinSquare& q) {
  json rows = json::array();
  for (const auto& r : q.rows()) rows.push_back(matrix_to_json(r));
  return dump(json{{"n", q.size()}, {"rows", std::move(rows)}});
}

std::string serialize_latin(const ClassicalLatinSquare& l) {
  json grid = json::array();
  for (const auto& row : l.grid()) grid.push_back(row);
  return dump(json{{"n", l.size()}, {"grid", std::move(grid)}});
}

std::string serialize_ueb(const UnitaryErrorBasis& b) {
  json elements = json::array();
  for (const auto& e : b.elements()) elements.push_back(matrix_to_json(e));
  return dump(json{{"n", b.dim()},
                   {"provenance", provenance_name(b.provenance())},
                   {"elements", std::move(elements)}});
}

std::string serialize_report(const ObstructionReport& r) {
  json witness;
  if (r.witness_pair) {
    witness = json{{"elements", {r.witness_pair->first, r.witness_pair->second}},
                   {"frobenius_norm", *r.witness_norm}};
  } else if (r.witness_element) {
    witness = json{{"element", *r.witness_element}};
  } else {
    witness = nullptr;
  }
  return dump(json{{"verdict", verdict_name(r.verdict)},
                   {"test", r.test},
                   {"witness", std::move(witness)},
                   {"theta", r.theta},
                   {"eps", r.eps}});
}

Matrix parse_matrix(const std::string& text) {
  return matrix_from_json(parse_text(text));
}

std::vector<Matrix> parse_qls_rows(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw std::invalid_argument(
        "quantum Latin square object must have fields \"n\" and \"rows\"");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw std::invalid_argument("\"n\" must be a positive integer");
  std::size_t n = j["n"].get<std::size_t>();
  const json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != n)
    throw std::invalid_argument("\"rows\" must be an array of " +
                                std::to_string(n) + " matrices");
  std::vector<Matrix> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m = matrix_from_json(rows[i]);
    if (m.size() != n)
      throw std::invalid_argument("row matrix " + std::to_string(i) +
                                  " has order " + std::to_string(m.size()) +
                                  ", expected " + std::to_string(n));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<int>> parse_latin_grid(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("grid"))
    throw std::invalid_argument(
        "Latin square object must have fields \"n\" and \"grid\"");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw std::invalid_argument("\"n\" must be a positive integer");
  std::size_t n = j["n"].get<std::size_t>();
  const json& grid = j["grid"];
  if (!grid.is_array() || grid.size() != n)
    throw std::invalid_argument("\"grid\" must be an array of " +
                                std::to_string(n) + " rows");
  std::vector<std::vector<int>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = grid[i];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("grid row " + std::to_string(i) +
                                  " must have " + std::to_string(n) +
                                  " integers");
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (!row[jj].is_number_integer())
        throw std::invalid_argument("grid cell (" + std::to_string(i) + ", " +
                                    std::to_string(jj) +
                                    ") is not an integer");
      out[i].push_back(row[jj].get<int>());
    }
  }
  return out;
}

RawUeb parse_ueb_raw(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("provenance") ||
      !j.contains("elements"))
    throw std::invalid_argument(
        "basis object must have fields \"n\", \"provenance\" and "
        "\"elements\"");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw std::invalid_argument("\"n\" must be a positive integer");
  std::size_t n = j["n"].get<std::size_t>();
  if (!j["provenance"].is_string())
    throw std::invalid_argument("\"provenance\" must be a string");
  auto prov = provenance_from_name(j["provenance"].get<std::string>());
  if (!prov)
    throw std::invalid_argument("unknown provenance tag \"" +
                                j["provenance"].get<std::string>() + "\"");
  const json& elements = j["elements"];
  if (!elements.is_array() || elements.size() != n * n)
    throw std::invalid_argument("\"elements\" must be an array of " +
                                std::to_string(n * n) + " matrices");
  RawUeb out{n, *prov, {}};
  out.elements.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    Matrix m = matrix_from_json(elements[k]);
    if (m.size() != n)
      throw std::invalid_argument("element " + std::to_string(k) +
                                  " has order " + std::to_string(m.size()) +
                                  ", expected " + std::to_string(n));
    out.elements.push_back(std::move(m));
  }
  return out;
}

}  // namespace uebforge
