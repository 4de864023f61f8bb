#include <pairstab/lattice.hpp>

#include <ostream>

namespace pairstab {

namespace {

void require_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw Error(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

template <class Range>
void print_coords(std::ostream& os, const Range& coords) {
  os << '(';
  bool first = true;
  for (const auto& c : coords) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << ')';
}

}  // namespace

LatticePoint::LatticePoint(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  require_same_rank(rank(), other.rank(), "LatticePoint +");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
  require_same_rank(rank(), other.rank(), "LatticePoint -");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticePoint operator*(const Integer& k, const LatticePoint& a) {
  LatticePoint out = a;
  for (auto& c : out.coords_) c *= k;
  return out;
}

RationalVector LatticePoint::to_rational() const {
  RationalVector out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.emplace_back(c);
  return out;
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int s = cmp(a.coords_[i], b.coords_[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

OnePS::OnePS(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool OnePS::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

OnePS OnePS::operator-() const {
  std::vector<Integer> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
  return OnePS(std::move(out));
}

Integer pair(const OnePS& u, const LatticePoint& m) {
  require_same_rank(u.rank(), m.rank(), "pair");
  Integer s = 0;
  for (std::size_t i = 0; i < u.rank(); ++i) s += u[i] * m[i];
  return s;
}

Rational pair(const RationalFunctional& g, const LatticePoint& m) {
  require_same_rank(g.coords.size(), m.rank(), "pair");
  Rational s = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) s += g.coords[i] * m[i];
  return s;
}

Rational pair(const RationalFunctional& g, const RationalVector& x) {
  require_same_rank(g.coords.size(), x.size(), "pair");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += g.coords[i] * x[i];
  return s;
}

std::vector<Integer> primitive_direction(const RationalVector& x) {
  Integer denom_lcm = 1;
  bool nonzero = false;
  for (const auto& q : x) {
    if (q != 0) nonzero = true;
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  if (!nonzero) throw Error("cannot clear denominators of the zero functional");
  std::vector<Integer> out;
  out.reserve(x.size());
  Integer g = 0;
  for (const auto& q : x) {
    Integer c = q.get_num() * (denom_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    out.push_back(std::move(c));
  }
  for (auto& c : out) c /= g;
  return out;
}

OnePS clear_denominators(const RationalFunctional& g) { return OnePS(primitive_direction(g.coords)); }

std::ostream& operator<<(std::ostream& os, const LatticePoint& a) {
  print_coords(os, a.coords());
  return os;
}

std::ostream& operator<<(std::ostream& os, const OnePS& u) {
  print_coords(os, u.coords());
  return os;
}

}  // namespace pairstab
