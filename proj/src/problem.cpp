#include "ratroot/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ratroot/errors.hpp"

namespace ratroot {

using nlohmann::ordered_json;

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Auto: return "auto";
    case Mode::Irreducible: return "irreducible";
    case Mode::Simple: return "simple";
    case Mode::Nonderogatory: return "nonderogatory";
  }
  return "auto";
}

Mode parse_mode(std::string_view name) {
  if (name == "auto") return Mode::Auto;
  if (name == "irreducible") return Mode::Irreducible;
  if (name == "simple") return Mode::Simple;
  if (name == "nonderogatory") return Mode::Nonderogatory;
  throw InputError("unknown mode \"" + std::string(name) +
                   "\" (expected auto, irreducible, simple or nonderogatory)");
}

namespace {

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": malformed JSON");
  }
}

Rational parse_entry(const ordered_json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return parse_rational(v.dump());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  if (v.is_number_float())
    throw InputError(where + ": floating-point literal " + v.dump() +
                     " rejected; write an exact \"a/b\" string");
  throw InputError(where + ": expected a rational string, got " + v.dump());
}

RatMatrix parse_matrix_json(const ordered_json& m, const std::string& where) {
  if (!m.is_array() || m.empty()) throw InputError(where + ": expected a nonempty array of rows");
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const auto& row = m[i];
    if (!row.is_array()) throw InputError(row_where + ": expected an array");
    if (row.size() != n)
      throw InputError(row_where + ": has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n) + " (matrix must be square)");
    std::vector<Rational> r;
    for (std::size_t j = 0; j < n; ++j)
      r.push_back(parse_entry(row[j], row_where + "[" + std::to_string(j) + "]"));
    rows.push_back(std::move(r));
  }
  return RatMatrix(rows);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) throw InputError("top level: expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "matrix" && key != "poly" && key != "mode")
      throw InputError(key + ": unknown field");

  ProblemFile out;
  if (j.contains("matrix")) out.matrix = parse_matrix_json(j["matrix"], "matrix");
  if (!j.contains("poly")) throw InputError("poly: missing field");
  const auto& p = j["poly"];
  if (!p.is_array() || p.empty()) throw InputError("poly: expected a nonempty coefficient array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < p.size(); ++i)
    coeffs.push_back(parse_entry(p[i], "poly[" + std::to_string(i) + "]"));
  out.poly = UniPoly(std::move(coeffs));
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw InputError("mode: expected a string");
    try {
      out.mode = parse_mode(j["mode"].get<std::string>());
    } catch (const InputError& e) {
      throw InputError(std::string("mode: ") + e.what());
    }
  }
  return out;
}

RatMatrix parse_matrix_file(std::string_view text) {
  const ordered_json j = parse_json(text);
  if (j.is_object()) {
    if (!j.contains("matrix")) throw InputError("matrix: missing field");
    return parse_matrix_json(j["matrix"], "matrix");
  }
  return parse_matrix_json(j, "matrix");
}

std::string emit_problem(const ProblemFile& problem) {
  ordered_json j = ordered_json::object();
  if (problem.matrix) {
    ordered_json rows = ordered_json::array();
    const auto& m = *problem.matrix;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_string(m(i, k)));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  ordered_json poly = ordered_json::array();
  for (const auto& c : problem.poly.coeffs()) poly.push_back(to_string(c));
  if (poly.empty()) poly.push_back("0");
  j["poly"] = std::move(poly);
  j["mode"] = std::string(to_string(problem.mode));
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ratroot
