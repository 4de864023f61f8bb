#include <pairstab/arith.hpp>

#include <limits>

namespace pairstab {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

long long to_int64(const Integer& z) {
  if (z > Integer(std::to_string(std::numeric_limits<long long>::max())) ||
      z < Integer(std::to_string(std::numeric_limits<long long>::min())))
    throw Error("integer " + z.get_str() + " does not fit in 64 bits");
  return std::stoll(z.get_str());
}

}  // namespace pairstab
