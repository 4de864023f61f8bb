#include <pairstab/binary_forms.hpp>

#include <ostream>
#include <set>
#include <sstream>

namespace pairstab {

namespace {

// Candidates [0:1], [1:0], [1:1], [-1:1], [2:1], [-2:1], ...
ProjectivePoint point_outside(const std::set<ProjectivePoint>& excluded) {
  if (!excluded.contains(ProjectivePoint(0, 1))) return ProjectivePoint(0, 1);
  if (!excluded.contains(ProjectivePoint::infinity())) return ProjectivePoint::infinity();
  for (long k = 1;; ++k) {
    for (long s : {k, -k}) {
      ProjectivePoint pt(s, 1);
      if (!excluded.contains(pt)) return pt;
    }
  }
}

std::set<ProjectivePoint> root_points(const BinaryForm& f, const BinaryForm& g) {
  std::set<ProjectivePoint> out;
  for (const auto& [pt, k] : f.roots()) out.insert(pt);
  for (const auto& [pt, k] : g.roots()) out.insert(pt);
  return out;
}

const StabilityProblem& sl2_problem() {
  static const StabilityProblem problem(1, {}, PointSet{LatticePoint{-2}, LatticePoint{0}, LatticePoint{2}});
  return problem;
}

WeightedVector monomial_support(const BinaryForm& f) {
  const auto coeffs = f.coefficients();
  std::map<LatticePoint, Rational> mags;
  for (int i = 0; i <= f.degree(); ++i) {
    if (coeffs[i] == 0) continue;
    mags.emplace(LatticePoint{2L * i - f.degree()}, coeffs[i] * coeffs[i]);
  }
  return WeightedVector(std::move(mags));
}

}  // namespace

ProjectivePoint::ProjectivePoint(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw Error("[0:0] is not a point of P^1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  p_ /= g;
  q_ /= g;
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  if (q_ == 0) p_ = 1;
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (int c = cmp(a.q_, b.q_); c != 0) return c < 0;
  return a.p_ < b.p_;
}

std::string ProjectivePoint::str() const { return "[" + p_.get_str() + ":" + q_.get_str() + "]"; }

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& pt) { return os << pt.str(); }

BinaryForm::BinaryForm(std::map<ProjectivePoint, int> roots, Rational scale)
    : roots_(std::move(roots)), scale_(std::move(scale)) {
  if (scale_ == 0) throw Error("binary form must be nonzero");
  for (auto it = roots_.begin(); it != roots_.end();) {
    if (it->second < 0) throw Error("root multiplicities must be nonnegative");
    if (it->second == 0) {
      it = roots_.erase(it);
      continue;
    }
    degree_ += it->second;
    ++it;
  }
}

int BinaryForm::ord(const ProjectivePoint& pt) const {
  auto it = roots_.find(pt);
  return it == roots_.end() ? 0 : it->second;
}

std::vector<Rational> BinaryForm::coefficients() const {
  std::vector<Rational> c{scale_};
  for (const auto& [pt, mult] : roots_) {
    for (int k = 0; k < mult; ++k) {
      // multiply by (q x - p y)
      std::vector<Rational> next(c.size() + 1, 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += pt.q() * c[i];
        next[i] -= pt.p() * c[i];
      }
      c = std::move(next);
    }
  }
  return c;
}

BinaryForm BinaryForm::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::map<ProjectivePoint, int> roots;
  Rational scale = 1;
  while (in >> tok) {
    if (tok.front() != '[') {
      scale *= parse_rational(tok);
      continue;
    }
    auto close = tok.find(']');
    auto colon = tok.find(':');
    if (close == std::string::npos || colon == std::string::npos || colon > close)
      throw Error("malformed root '" + tok + "'");
    Integer p, q;
    if (p.set_str(tok.substr(1, colon - 1), 10) != 0 || q.set_str(tok.substr(colon + 1, close - colon - 1), 10) != 0)
      throw Error("malformed root '" + tok + "'");
    int mult = 1;
    if (close + 1 < tok.size()) {
      if (tok[close + 1] != '^') throw Error("malformed root '" + tok + "'");
      try {
        std::size_t used = 0;
        mult = std::stoi(tok.substr(close + 2), &used);
        if (used != tok.size() - close - 2) throw Error("bad multiplicity");
      } catch (const std::exception&) {
        throw Error("malformed multiplicity in '" + tok + "'");
      }
      if (mult < 1) throw Error("multiplicity must be positive in '" + tok + "'");
    }
    roots[ProjectivePoint(p, q)] += mult;
  }
  return BinaryForm(std::move(roots), std::move(scale));
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  if (scale_ != 1 || roots_.empty()) {
    os << format_rational(scale_);
    first = false;
  }
  for (const auto& [pt, mult] : roots_) {
    if (!first) os << ' ';
    os << pt;
    if (mult > 1) os << '^' << mult;
    first = false;
  }
  return os.str();
}

BinaryVerdict semistable_bf(const BinaryForm& f, const BinaryForm& g) {
  const int e = f.degree(), d = g.degree();
  const auto points = root_points(f, g);
  for (const auto& pt : points)
    if (2 * (g.ord(pt) - f.ord(pt)) > d - e) return {Status::Unstable, pt, std::nullopt};
  if (e > d) return {Status::Unstable, point_outside(points), std::nullopt};
  return {Status::Semistable, std::nullopt, std::nullopt};
}

bool impossible_degree_check(int e, int d) { return e == d - 1; }

BinaryForm mobius_act(const IntMatrix2& m, const BinaryForm& f) {
  const Integer det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == 0) throw Error("mobius_act: singular matrix");
  std::map<ProjectivePoint, int> roots;
  Rational scale = f.scale();
  for (const auto& [pt, mult] : f.roots()) {
    const Integer x = m[0][0] * pt.p() + m[0][1] * pt.q();
    const Integer y = m[1][0] * pt.p() + m[1][1] * pt.q();
    ProjectivePoint image(x, y);
    // M r = c r' and (q x - p y) o M^{-1} = (c / det) (q' x - p' y).
    Rational c = image.q() != 0 ? Rational(y, image.q()) : Rational(x, image.p());
    c.canonicalize();
    Rational factor = c / det;
    for (int k = 0; k < mult; ++k) scale *= factor;
    roots[image] += mult;
  }
  return BinaryForm(std::move(roots), std::move(scale));
}

Verdict diagonal_torus_verdict(const BinaryForm& f, const BinaryForm& g) {
  return t_semistable(Pair(monomial_support(f), monomial_support(g), sl2_problem()));
}

BinaryVerdict torus_oracle_bf(const BinaryForm& f, const BinaryForm& g) {
  auto critical = root_points(f, g);
  critical.insert(ProjectivePoint::infinity());
  critical.insert(ProjectivePoint(0, 1));
  const auto roots = root_points(f, g);
  for (const auto& pt : critical) {
    auto excluded = roots;
    excluded.insert(pt);
    const ProjectivePoint other = point_outside(excluded);
    // adj([pt other]) sends pt to [1:0] and other to [0:1].
    const IntMatrix2 m{{{other.q(), -other.p()}, {-pt.q(), pt.p()}}};
    Verdict v = diagonal_torus_verdict(mobius_act(m, f), mobius_act(m, g));
    if (v.semistable()) continue;
    // Positive u probes the fixed point sent to [0:1], negative u the one sent to [1:0].
    const ProjectivePoint& culprit = (*v.witness)[0] > 0 ? other : pt;
    return {Status::Unstable, culprit, v.witness};
  }
  return {Status::Semistable, std::nullopt, std::nullopt};
}

}  // namespace pairstab
