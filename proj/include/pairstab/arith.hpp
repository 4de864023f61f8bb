#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pairstab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for every violated precondition or malformed input in the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RationalVector = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Exact conversion; throws if the value does not fit in an int64.
long long to_int64(const Integer& z);

}  // namespace pairstab
