#include <pairstab/binary_forms.hpp>
#include <pairstab/cli.hpp>
#include <pairstab/energy.hpp>
#include <pairstab/futaki.hpp>
#include <pairstab/io.hpp>
#include <pairstab/limits.hpp>
#include <pairstab/varieties.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace pairstab;

namespace {

// Python ints of any size travel as decimal strings.
Integer to_integer(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

py::int_ from_integer(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object from_rational(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(from_integer(q.get_num()), from_integer(q.get_den()));
}

std::vector<Integer> integers(const py::sequence& s) {
  std::vector<Integer> out;
  for (const auto& x : s) out.push_back(to_integer(x));
  return out;
}

LatticePoint point(const py::sequence& s) { return LatticePoint(integers(s)); }
OnePS ops(const py::sequence& s) { return OnePS(integers(s)); }

PointSet points(const py::sequence& s) {
  if (py::len(s) == 0) throw Error("point set must be nonempty");
  std::vector<LatticePoint> pts;
  for (const auto& x : s) pts.push_back(point(x.cast<py::sequence>()));
  return PointSet(std::move(pts));
}

ContainmentContext context(const py::sequence& mod) {
  ContainmentContext ctx;
  for (const auto& x : mod) ctx.mod_directions.push_back(point(x.cast<py::sequence>()));
  return ctx;
}

py::list to_list(std::span<const Integer> xs) {
  py::list out;
  for (const auto& x : xs) out.append(from_integer(x));
  return out;
}

py::list to_list(const PointSet& s) {
  py::list out;
  for (const auto& a : s) out.append(to_list(a.coords()));
  return out;
}

py::object witness(const std::optional<OnePS>& u) {
  if (!u) return py::none();
  return to_list(u->coords());
}

}  // namespace

PYBIND11_MODULE(_pairstab, m) {
  m.doc() = "Exact (semi)stability of pairs in torus representations";
  py::register_exception<Error>(m, "PairstabError", PyExc_ValueError);

  py::class_<Pair>(m, "Pair")
      .def_static("from_json", [](const std::string& text) { return io::pair_from_json(io::Json::parse(text)); })
      .def("to_json", [](const Pair& p) { return io::to_json(p).dump(); })
      .def_property_readonly("rank", [](const Pair& p) { return p.problem.rank(); })
      .def_property_readonly("v_support", [](const Pair& p) { return to_list(p.v.support()); })
      .def_property_readonly("w_support", [](const Pair& p) { return to_list(p.w.support()); })
      .def("__eq__", [](const Pair& a, const Pair& b) { return a == b; });

  m.def("load_pair", &io::load_pair, py::arg("path"));

  m.def("t_semistable", [](const Pair& p) {
    Verdict v = t_semistable(p);
    return py::make_tuple(v.semistable(), witness(v.witness));
  });
  m.def("stable", [](const Pair& p, int max_m) {
    StableVerdict sv = stable(p, max_m);
    py::dict d;
    const char* kinds[] = {"stable", "not_stable", "unstable"};
    d["status"] = kinds[static_cast<int>(sv.kind)];
    d["exponent"] = sv.exponent;
    d["witness"] = witness(sv.witness);
    return d;
  }, py::arg("pair"), py::arg("max_m") = 32);
  m.def("weight", [](const Pair& p, const py::sequence& u, const std::string& side) {
    if (side != "v" && side != "w") throw Error("side must be 'v' or 'w'");
    return from_integer(weight(ops(u), side == "v" ? p.v : p.w, p.problem));
  }, py::arg("pair"), py::arg("u"), py::arg("side") = "w");
  m.def("futaki_gen", [](const Pair& p, const py::sequence& u) { return from_integer(futaki_gen(ops(u), p)); });
  m.def("degree_of", [](const Pair& p) { return degree_of(p.v, p.problem); });
  m.def("relative_invariant", [](const Pair& p, const py::sequence& chi) {
    const LatticePoint c = point(chi);
    RelativeInvariant inv = relative_invariant(p, c);
    if (!verify_relative_invariant(p, c, inv)) throw std::logic_error("relative invariant failed verification");
    py::dict exps;
    for (const auto& [b, n] : inv.exponents) exps[py::tuple(to_list(b.coords()))] = from_integer(n);
    return py::make_tuple(from_integer(inv.degree), exps);
  });

  m.def("hull_contains", [](const py::sequence& a, const py::sequence& b, const py::sequence& mod) {
    return hull_contains(points(a), points(b), context(mod));
  }, py::arg("a"), py::arg("b"), py::arg("mod") = py::list());
  m.def("extension_criterion", [](const py::sequence& a, const py::sequence& b, const py::sequence& mod) {
    return extension_criterion(points(a), points(b), context(mod));
  }, py::arg("a"), py::arg("b"), py::arg("mod") = py::list());
  m.def("find_degeneration", [](const py::sequence& a, const py::sequence& b, const py::sequence& mod) -> py::object {
    try {
      return to_list(find_degeneration(points(a), points(b), context(mod)).coords());
    } catch (const NotALimitSupport&) {
      return py::none();
    }
  }, py::arg("a"), py::arg("b"), py::arg("mod") = py::list());
  m.def("limit_support", [](const py::sequence& a, const py::sequence& u) {
    return to_list(limit_support(points(a), ops(u)));
  });

  m.def("energy_at", [](const Pair& p, std::vector<double> s) { return energy_at(p, TorusElement{std::move(s)}); });
  m.def("energy_along", [](const Pair& p, const py::sequence& u, double t) { return energy_along(p, ops(u), t); });
  m.def("asymptotic_slope", [](const Pair& p, const py::sequence& u) { return asymptotic_slope(p, ops(u)); });
  m.def("kempf_ness_distance",
        [](const Pair& p, std::vector<double> s) { return kempf_ness_distance(p, TorusElement{std::move(s)}); });

  m.def("stabilizer_subtorus", [](const Pair& p) {
    py::list out;
    for (const auto& u : stabilizer_subtorus(p).basis) out.append(to_list(u.coords()));
    return out;
  });
  m.def("affine_spans_equal", [](const Pair& p) { return affine_span_test(p) == AffineSpans::Equal; });

  m.def("semistable_bf", [](const std::string& f, const std::string& g) {
    BinaryVerdict v = semistable_bf(BinaryForm::parse(f), BinaryForm::parse(g));
    return py::make_tuple(v.semistable(), v.point ? py::object(py::str(v.point->str())) : py::none());
  }, py::arg("f"), py::arg("g"));
  m.def("torus_oracle_bf", [](const std::string& f, const std::string& g) {
    return torus_oracle_bf(BinaryForm::parse(f), BinaryForm::parse(g)).semistable();
  }, py::arg("f"), py::arg("g"));

  m.def("degrees", [](int n, int d, const py::object& mu, int N) {
    DegreeReport rep = degrees({n, d, parse_rational(py::str(mu).cast<std::string>()), N});
    py::dict out;
    out["deg_r"] = from_integer(rep.deg_r);
    out["deg_delta"] = from_integer(rep.deg_delta);
    out["r"] = from_integer(rep.r);
    out["lambda"] = to_list(rep.lambda);
    out["mu"] = to_list(rep.mu_partition);
    return out;
  }, py::arg("n"), py::arg("d"), py::arg("mu"), py::arg("N"));
  m.def("curve_mu", [](int d, int genus) { return from_rational(curve_mu(d, genus)); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
