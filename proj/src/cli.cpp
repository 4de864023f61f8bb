#include <pairstab/cli.hpp>

#include <pairstab/binary_forms.hpp>
#include <pairstab/energy.hpp>
#include <pairstab/futaki.hpp>
#include <pairstab/io.hpp>
#include <pairstab/limits.hpp>
#include <pairstab/varieties.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace pairstab::cli {

namespace {

using io::Json;

Json parse_json_arg(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw Error(std::string("malformed ") + what + " '" + text + "'");
  }
}

// Witnesses are re-verified exactly before they are printed.
void self_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("self-check failed: ") + what);
}

Json unstable_json(const Pair& p, const OnePS& u) {
  self_check(p.problem.admissible(u) && futaki_gen(u, p) > 0, "destabilizing witness");
  return Json{{"status", "unstable"}, {"witness", io::to_json(u)}};
}

const WeightedVector& side(const Pair& p, const std::string& which) { return which == "v" ? p.v : p.w; }

struct Options {
  std::string problem;
  int max_m = 32;
  std::string chi, target, of = "w", ops;
  bool slope = false;
  double t = 0.5;
  std::string f_roots, g_roots;
  bool oracle = false;
  int n = 1, d = 2, N = 2;
  std::string mu = "0";
  bool genus_check = false;
  int genus = -1;
};

int cmd_check(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  Verdict v = t_semistable(p);
  if (v.semistable()) {
    out << Json{{"status", "semistable"}}.dump() << '\n';
    return kTrue;
  }
  out << unstable_json(p, *v.witness).dump() << '\n';
  return kFalse;
}

int cmd_stable(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  StableVerdict sv = stable(p, o.max_m);
  switch (sv.kind) {
    case StableVerdict::Kind::Stable: {
      const int q = degree_of(p.v, p.problem);
      self_check(t_semistable(perturb(p, sv.exponent, q)).semistable(), "stability exponent");
      out << Json{{"status", "stable"}, {"exponent", sv.exponent}, {"degree", q}}.dump() << '\n';
      return kTrue;
    }
    case StableVerdict::Kind::NotStableUpTo:
      out << Json{{"status", "not_stable"}, {"max_m", sv.exponent}}.dump() << '\n';
      return kFalse;
    case StableVerdict::Kind::UnstableBase:
      out << unstable_json(p, *sv.witness).dump() << '\n';
      return kFalse;
  }
  return kInputError;
}

int cmd_destabilize(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  Verdict v = t_semistable(p);
  if (v.semistable()) {
    out << Json{{"status", "semistable"}, {"witness", nullptr}}.dump() << '\n';
    return kTrue;
  }
  const OnePS& u = *v.witness;
  Json j = unstable_json(p, u);
  j["weight_v"] = io::to_json(weight(u, p.v, p.problem));
  j["weight_w"] = io::to_json(weight(u, p.w, p.problem));
  j["futaki"] = io::to_json(futaki_gen(u, p));
  out << j.dump() << '\n';
  return kFalse;
}

int cmd_relinv(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  LatticePoint chi = io::point_from_json(parse_json_arg(o.chi, "--chi"), p.problem.rank());
  if (!p.v.support().contains(chi)) throw Error("--chi is not in the support of v");
  Verdict v = t_semistable(p);
  if (!v.semistable()) {
    out << unstable_json(p, *v.witness).dump() << '\n';
    return kFalse;
  }
  RelativeInvariant inv = relative_invariant(p, chi);
  self_check(verify_relative_invariant(p, chi, inv), "relative invariant");
  Json exps = Json::array();
  for (const auto& [b, n] : inv.exponents) exps.push_back(Json{{"point", io::to_json(b)}, {"exponent", io::to_json(n)}});
  out << Json{{"status", "semistable"}, {"degree", io::to_json(inv.degree)}, {"exponents", exps}}.dump() << '\n';
  return kTrue;
}

int cmd_limit(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  const PointSet a = side(p, o.of).support();
  const PointSet b = io::points_from_json(parse_json_arg(o.target, "--target"), p.problem.rank());
  try {
    OnePS u = find_degeneration(a, b, p.problem.context());
    self_check(p.problem.admissible(u) && limit_support(a, u) == b, "limit support round trip");
    out << Json{{"status", "limit"}, {"u", io::to_json(u)}, {"support", io::to_json(b)}}.dump() << '\n';
    return kTrue;
  } catch (const NotALimitSupport&) {
    out << Json{{"status", "not_a_limit_support"}}.dump() << '\n';
    return kFalse;
  }
}

int cmd_extend(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  const PointSet a = side(p, o.of).support();
  const PointSet b = io::points_from_json(parse_json_arg(o.target, "--target"), p.problem.rank());
  const bool ok = extension_criterion(a, b, p.problem.context());
  out << Json{{"extends", ok}}.dump() << '\n';
  return ok ? kTrue : kFalse;
}

int cmd_energy(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  OnePS u = io::ops_from_json(parse_json_arg(o.ops, "--ops"), p.problem.rank());
  p.problem.require_admissible(u);
  Json j{{"u", io::to_json(u)}, {"futaki", io::to_json(futaki_gen(u, p))}, {"t", o.t},
         {"energy", energy_along(p, u, o.t)}};
  if (o.slope) j["slope"] = asymptotic_slope(p, u);
  out << j.dump() << '\n';
  return kTrue;
}

int cmd_futaki(const Options& o, std::ostream& out) {
  Pair p = io::load_pair(o.problem);
  StabilizerSubtorus st = stabilizer_subtorus(p);
  Json basis = Json::array(), values = Json::array();
  for (const auto& u : st.basis) {
    self_check(in_stabilizer(p, u), "stabilizer generator");
    basis.push_back(io::to_json(u));
    values.push_back(io::to_json(futaki_classical(p, u)));
  }
  const bool equal = affine_span_test(p) == AffineSpans::Equal;
  out << Json{{"stabilizer_rank", st.rank()},
              {"basis", basis},
              {"futaki", values},
              {"affine_spans", equal ? "equal" : "disjoint"}}
             .dump()
      << '\n';
  return equal ? kTrue : kFalse;
}

int cmd_binary(const Options& o, std::ostream& out) {
  BinaryForm f = BinaryForm::parse(o.f_roots), g = BinaryForm::parse(o.g_roots);
  BinaryVerdict v = semistable_bf(f, g);
  Json j{{"e", f.degree()}, {"d", g.degree()}, {"status", v.semistable() ? "semistable" : "unstable"}};
  if (v.point) {
    self_check(2 * (g.ord(*v.point) - f.ord(*v.point)) > g.degree() - f.degree(), "violating point");
    j["point"] = v.point->str();
  }
  if (o.oracle) j["oracle_agrees"] = torus_oracle_bf(f, g).status == v.status;
  out << j.dump() << '\n';
  return v.semistable() ? kTrue : kFalse;
}

int cmd_variety(const Options& o, std::ostream& out) {
  VarietyDatum vd{o.n, o.d, parse_rational(o.mu), o.N};
  if (o.genus >= 0) check_mu_against_genus(vd, o.genus);
  if (o.genus_check) {
    if (vd.n != 1 || vd.N != 2) throw Error("--genus-check applies to plane curves (n = 1, N = 2)");
    check_mu_against_genus(vd, plane_curve_genus(vd.d));
  }
  DegreeReport rep = degrees(vd);
  auto arr = [](const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(io::to_json(x));
    return a;
  };
  out << Json{{"deg_r", io::to_json(rep.deg_r)},
              {"deg_delta", io::to_json(rep.deg_delta)},
              {"r", io::to_json(rep.r)},
              {"lambda", arr(rep.lambda)},
              {"mu", arr(rep.mu_partition)}}
             .dump()
      << '\n';
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (semi)stability of pairs in torus representations", "pairstab"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto with_problem = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("problem", o.problem, "JSON problem file")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  with_problem("check", "T-semistability of the pair", cmd_check);
  with_problem("stable", "search for a stability exponent", cmd_stable)
      ->add_option("--max-m", o.max_m, "largest exponent tried")
      ->check(CLI::PositiveNumber);
  with_problem("destabilize", "destabilizing one-parameter subgroup", cmd_destabilize);
  with_problem("relinv", "relative invariant certificate", cmd_relinv)
      ->add_option("--chi", o.chi, "character in supp(v), e.g. [1,0]")
      ->required();
  auto* limit = with_problem("limit", "one-parameter subgroup degenerating onto a support", cmd_limit);
  limit->add_option("--target", o.target, "target support, e.g. [[1,0]]")->required();
  limit->add_option("--of", o.of, "which vector's support")->check(CLI::IsMember({"v", "w"}));
  auto* extend = with_problem("extend", "extension criterion for a sub-support", cmd_extend);
  extend->add_option("--target", o.target, "sub-support B")->required();
  extend->add_option("--of", o.of, "which vector's support")->check(CLI::IsMember({"v", "w"}));
  auto* energy = with_problem("energy", "pair energy along a one-parameter subgroup", cmd_energy);
  energy->add_option("--ops", o.ops, "one-parameter subgroup, e.g. [1,-1]")->required();
  energy->add_flag("--slope", o.slope, "also report the asymptotic slope");
  energy->add_option("--t", o.t, "evaluation parameter in (0,1]");
  with_problem("futaki", "Futaki characters and stabilizer subtorus", cmd_futaki);

  auto* binary = app.add_subcommand("binary", "pairs of binary forms under SL(2)");
  binary->add_option("--f", o.f_roots, "roots of f, e.g. \"1\" or \"[0:1]^2 [1:0]\"")->required();
  binary->add_option("--g", o.g_roots, "roots of g")->required();
  binary->add_flag("--oracle", o.oracle, "cross-check with the conjugated-torus oracle");
  binary->callback([&] { action = cmd_binary; });

  auto* variety = app.add_subcommand("variety", "degrees of the resultant/hyperdiscriminant pair");
  variety->add_option("--n", o.n, "dimension")->required();
  variety->add_option("--d", o.d, "degree")->required();
  variety->add_option("--mu", o.mu, "average scalar curvature (rational)")->required();
  variety->add_option("--N", o.N, "ambient projective dimension")->required();
  variety->add_flag("--genus-check", o.genus_check, "validate mu against the plane-curve genus");
  variety->add_option("--genus", o.genus, "validate mu against this curve genus");
  variety->callback([&] { action = cmd_variety; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kInputError;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace pairstab::cli
