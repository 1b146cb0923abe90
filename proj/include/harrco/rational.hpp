#ifndef HARRCO_RATIONAL_HPP
#define HARRCO_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace harrco {

// Exact rational scalar. All arithmetic in the library is exact; no
// floating point anywhere. mpq_class keeps values canonical (lowest
// terms, positive denominator) through arithmetic.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p/q" or "p" with arbitrary-precision integers.
// Throws std::invalid_argument on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text)
{
  if (text.empty())
    throw std::invalid_argument("empty rational literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
    if (!ok)
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

} // namespace harrco

#endif
