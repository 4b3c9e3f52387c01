#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "momentlab/catalog.hpp"
#include "momentlab/cli.hpp"
#include "momentlab/error.hpp"
#include "momentlab/identities.hpp"
#include "momentlab/jacobi.hpp"
#include "momentlab/paths.hpp"
#include "momentlab/serialize.hpp"
#include "momentlab/transforms.hpp"

namespace py = pybind11;
using namespace momentlab;

// Values cross the boundary as canonical strings ("3/2", "a_0*lambda_1"), which keeps
// them exact without a Python-side polynomial type.
namespace {

using Strings = std::vector<std::string>;

std::vector<MultiPoly> to_polys(const Strings& s) {
    std::vector<MultiPoly> out;
    out.reserve(s.size());
    for (const auto& x : s) out.push_back(MultiPoly::parse(x));
    return out;
}

Strings to_strings(const std::vector<MultiPoly>& v) {
    Strings out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
}

Discipline parse_discipline(const std::string& s) {
    if (s == "motzkin") return Discipline::Motzkin;
    if (s == "lukasiewicz") return Discipline::Lukasiewicz;
    throw py::value_error("discipline must be 'motzkin' or 'lukasiewicz'");
}

ValuationScheme symbolic_scheme(const std::string& s, std::size_t max_length) {
    using K = ValuationScheme::Kind;
    if (s == "motzkin") return ValuationScheme::symbolic(K::MotzkinFlajolet, max_length);
    if (s == "lukas-free") return ValuationScheme::symbolic(K::LukasFree, max_length);
    if (s == "lukas-classical") return ValuationScheme::symbolic(K::LukasClassical, max_length);
    throw py::value_error("scheme must be 'motzkin', 'lukas-free' or 'lukas-classical'");
}

CumulantKind parse_cumulant(const std::string& s) {
    if (s == "free") return CumulantKind::Free;
    if (s == "classical") return CumulantKind::Classical;
    if (s == "boolean") return CumulantKind::Boolean;
    throw py::value_error("kind must be 'free', 'classical' or 'boolean'");
}

MomentSeq catalog_moments(const std::string& name, std::size_t order, const std::string& t) {
    if (name == "semicircle") return catalog::semicircle(order);
    if (name == "gaussian-hermite") return catalog::gaussian_hermite(order);
    if (name == "point-mass") return catalog::point_mass(MultiPoly::parse(t), order);
    if (name == "free-poisson") return catalog::free_poisson(MultiPoly::parse(t), order);
    throw py::value_error("unknown catalog entry '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_momentlab, m) {
    m.doc() = "Exact moment, cumulant and Jacobi-parameter computations";

    static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const MathError& e) {
            py::object index = e.index() ? py::object(py::int_(*e.index())) : py::object(py::none());
            py::tuple args = py::make_tuple(std::string(to_string(e.kind())), index, std::string(e.what()));
            PyErr_SetObject(math_error.ptr(), args.ptr());
        }
    });

    m.def("normalize", [](const std::string& p) { return MultiPoly::parse(p).to_string(); },
          "Parse a polynomial and return its canonical text.");

    m.def("enumerate_paths",
          [](std::size_t n, const std::string& discipline, bool irreducible) {
              std::vector<std::vector<int>> out;
              for_each_path(n, parse_discipline(discipline), irreducible,
                            [&](const LatticePath& p) { out.push_back(p.levels()); });
              return out;
          },
          py::arg("n"), py::arg("discipline") = "motzkin", py::arg("irreducible") = false);
    m.def("count_paths",
          [](std::size_t n, const std::string& discipline, bool irreducible) {
              return count_paths(n, parse_discipline(discipline), irreducible);
          },
          py::arg("n"), py::arg("discipline") = "motzkin", py::arg("irreducible") = false);
    m.def("factorize",
          [](const std::vector<int>& levels) {
              std::vector<std::vector<int>> out;
              for (const auto& f : factorize_irreducible(LatticePath(levels))) out.push_back(f.levels());
              return out;
          },
          py::arg("levels"));
    m.def("valuate",
          [](const std::vector<int>& levels, const std::string& scheme) {
              const LatticePath p(levels);
              return valuate(p, symbolic_scheme(scheme, p.length())).to_string();
          },
          py::arg("levels"), py::arg("scheme") = "motzkin");

    m.def("cumulants_from_moments",
          [](const Strings& mu, const std::string& kind) {
              return to_strings(from_moments(MomentSeq(to_polys(mu)), parse_cumulant(kind)).values());
          },
          py::arg("moments"), py::arg("kind") = "free",
          "Moments mu_0..mu_N (mu_0 = 1) to cumulants k_1..k_N.");
    m.def("moments_from_cumulants",
          [](const Strings& k, const std::string& kind) {
              return to_strings(to_moments(CumulantSeq(parse_cumulant(kind), to_polys(k))).values());
          },
          py::arg("cumulants"), py::arg("kind") = "free");
    m.def("symbolic_moments", [](std::size_t order) { return to_strings(symbolic_moments(order).values()); });

    m.def("jacobi_from_moments",
          [](const Strings& mu) {
              const JacobiParams j = jacobi_from_moments(MomentSeq(to_polys(mu)));
              return py::make_tuple(to_strings(j.a), to_strings(j.lambda));
          },
          py::arg("moments"), "Returns (a, lambda) with lambda starting at lambda_1.");
    m.def("moments_from_jacobi",
          [](const Strings& a, const Strings& lambda, std::size_t order) {
              return to_strings(moments_from_jacobi(JacobiParams{to_polys(a), to_polys(lambda)}, order).values());
          },
          py::arg("a"), py::arg("lam"), py::arg("order"));
    m.def("orthopolys",
          [](const Strings& a, const Strings& lambda, std::size_t n_max) {
              return to_strings(orthopoly_recurrence(JacobiParams{to_polys(a), to_polys(lambda)}, n_max));
          },
          py::arg("a"), py::arg("lam"), py::arg("n_max"));

    m.def("free_cumulant_motzkin",
          [](std::size_t n) { return free_cumulant_motzkin(JacobiParams::symbolic_for_order(n), n).to_string(); },
          py::arg("n"), "Free cumulant c_n of symbolic Jacobi parameters by the signed Motzkin sum.");

    m.def("hankel_minor",
          [](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, const std::string& method,
             const std::string& scheme) {
              const HankelMinorSpec spec(rows, cols);
              const std::size_t order = spec.max_moment();
              const ValuationScheme vs = symbolic_scheme(scheme, order);
              py::dict out;
              if (method == "gv") {
                  const GvResult r = hankel_minor_gv(vs, spec);
                  out["value"] = r.value.to_string();
                  out["configurations"] = r.configurations;
              } else if (method == "det") {
                  const MomentSeq mom = vs.kind() == ValuationScheme::Kind::MotzkinFlajolet
                                            ? moments_from_jacobi(JacobiParams::symbolic_for_order(order), order)
                                            : moments_from_free(symbolic_cumulants(CumulantKind::Free, order));
                  out["value"] = hankel_minor_det(mom, spec).to_string();
              } else {
                  throw py::value_error("method must be 'det' or 'gv'");
              }
              return out;
          },
          py::arg("rows"), py::arg("cols"), py::arg("method") = "det", py::arg("scheme") = "motzkin");

    m.def("catalog", [](const std::string& name, std::size_t order, const std::string& t) {
              return to_strings(catalog_moments(name, order, t).values());
          },
          py::arg("name"), py::arg("order"), py::arg("t") = "t");

    m.def("verify",
          [](std::size_t depth, const std::string& only) {
              VerifyOptions opt;
              opt.only = only;
              const VerifyReport r = verify_suite(depth, opt);
              py::dict out;
              out["passed"] = r.all_passed();
              py::list entries;
              for (const auto& e : r.entries) {
                  py::dict d;
                  d["identity"] = e.identity;
                  d["passed"] = e.passed;
                  d["cases"] = e.cases;
                  d["detail"] = e.detail;
                  entries.append(d);
              }
              out["entries"] = entries;
              return out;
          },
          py::arg("depth") = 4, py::arg("only") = "");
    m.def("identity_names", &identity_names);

    m.def("run_cli",
          [](const Strings& args, const std::string& stdin_text) {
              std::istringstream in(stdin_text);
              std::ostringstream out, err;
              const int code = run_cli(args, in, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), py::arg("stdin") = "", "Run the command-line tool in-process: (exit code, stdout, stderr).");
}
