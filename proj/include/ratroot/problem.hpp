#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ratroot/matrix.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

enum class Mode { Auto, Irreducible, Simple, Nonderogatory };

std::string_view to_string(Mode m);
// Throws InputError for unknown names.
Mode parse_mode(std::string_view name);

// Problem file:
//   {"matrix": [["a", "b/c", ...], ...], "poly": ["p0", "p1", ...], "mode": "auto"}
// Entries are exact rational strings "a" or "a/b"; JSON integers are also
// accepted, floating-point literals never. "poly" lists coefficients by
// ascending power. "matrix" may be omitted for the factor command.
struct ProblemFile {
  std::optional<RatMatrix> matrix;
  UniPoly poly;
  Mode mode = Mode::Auto;
};

// Throws InputError with a line or field diagnostic.
ProblemFile parse_problem(std::string_view text);

// Reads a candidate solution: either {"matrix": [[...]]} or a bare [[...]].
RatMatrix parse_matrix_file(std::string_view text);

// Canonical single-line form, newline terminated. parse_problem(emit(x))
// reproduces x, and emit(parse(t)) == t for canonical t.
std::string emit_problem(const ProblemFile& problem);

std::string read_file(const std::string& path);

}  // namespace ratroot
