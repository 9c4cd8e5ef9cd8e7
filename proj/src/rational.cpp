#include "ratroot/rational.hpp"

#include <cctype>

#include "ratroot/errors.hpp"

namespace ratroot {

namespace {

bool valid_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer_literal(num_text, true))
    throw InputError("not an exact rational literal: \"" + std::string(text) +
                     "\"");
  if (slash == std::string_view::npos) return Rational(to_integer(num_text));

  const auto den_text = text.substr(slash + 1);
  if (!valid_integer_literal(den_text, false))
    throw InputError("not an exact rational literal: \"" + std::string(text) +
                     "\"");
  Integer den = to_integer(den_text);
  if (den == 0)
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(to_integer(num_text), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace ratroot
