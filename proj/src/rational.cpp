#include "alphapoly/rational.hpp"

#include <cctype>

namespace alphapoly {

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const std::string t = strip(text);
  const std::size_t slash = t.find('/');
  const std::string num_text = strip(t.substr(0, slash));
  std::string den_text = "1";
  if (slash != std::string::npos) {
    den_text = strip(t.substr(slash + 1));
    if (den_text.find('/') != std::string::npos)
      throw schema_error("malformed rational '" + text + "'");
  }
  if (!valid_integer_text(num_text) || !valid_integer_text(den_text))
    throw schema_error("malformed rational '" + text + "'");
  const Int num(num_text);
  const Int den(den_text);
  if (den == 0) throw schema_error("zero denominator in '" + text + "'");
  return Rat(num) / Rat(den);  // division canonicalizes
}

std::string rat_string(const Rat& q) { return q.str(); }

Int floor_rat(const Rat& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);  // always positive
  Int quot = num / den;            // truncates toward zero
  if (quot * den > num) --quot;
  return quot;
}

Int ceil_rat(const Rat& q) {
  Int f = floor_rat(q);
  if (Rat(f) != q) ++f;
  return f;
}

}  // namespace alphapoly
