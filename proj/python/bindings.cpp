// Python bindings. Polynomials cross the boundary as plain dicts with Python
// ints, so arbitrary-precision coefficients survive unchanged.
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperquot/app.hpp"
#include "hyperquot/combinat.hpp"
#include "hyperquot/curve_motives.hpp"
#include "hyperquot/errors.hpp"
#include "hyperquot/formulas.hpp"
#include "hyperquot/oracle.hpp"
#include "hyperquot/smoothness.hpp"
#include "hyperquot/verify.hpp"

namespace py = pybind11;
using namespace hq;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

py::int_ to_py(const Integer& c)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& c)
{
    return Integer(py::str(static_cast<py::handle>(c)).cast<std::string>());
}

py::dict to_py(const EPoly& p)
{
    py::dict out;
    for (const auto& t : p.terms())
        out[py::make_tuple(t.pu, t.pv)] = to_py(t.c);
    return out;
}

py::dict to_py(const LaurentPoly& p)
{
    py::dict out;
    for (const auto& [e, c] : p.terms())
        out[py::int_(e)] = to_py(c);
    return out;
}

EPoly epoly_from_py(const py::dict& d)
{
    std::vector<Term> terms;
    for (auto item : d) {
        auto key = item.first.cast<std::pair<int, int>>();
        terms.push_back(Term{key.first, key.second, from_py(item.second.cast<py::int_>())});
    }
    return EPoly::from_terms(std::move(terms));
}

py::tuple degree_key(const Degree& d)
{
    py::tuple t(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        t[i] = d[i];
    return t;
}

py::dict to_py(const MSeries& s)
{
    py::dict out;
    s.for_each_term([&](const Degree& d, const EPoly& c) { out[degree_key(d)] = to_py(c); });
    return out;
}

struct Problem {
    CurveSpec curve;
    BundleSpec bundle;
    NestingProfile profile;
    Window window;
};

Problem problem(int genus, const std::vector<int>& degrees, const std::vector<int>& s, const Degree& dmax,
                const std::optional<Degree>& dmin)
{
    NestingProfile p(static_cast<int>(degrees.size()), s);
    BundleSpec b{degrees};
    if (static_cast<int>(dmax.size()) != p.length())
        throw InvalidInput("dmax needs one entry per nesting step");
    return {CurveSpec{genus}, b, p, make_window(b, p, dmax, dmin)};
}

py::tuple check_to_py(const CheckResult& r) { return py::make_tuple(r.passed, r.checked, r.detail); }

app::RunConfig run_config(int genus, std::vector<int> degrees, std::vector<int> s, std::vector<int> dmax,
                          std::optional<std::vector<int>> dmin, bool parallel, bool assume_smooth)
{
    app::RunConfig c;
    c.genus = genus;
    c.degrees = std::move(degrees);
    c.s = std::move(s);
    c.dmax = std::move(dmax);
    c.dmin = std::move(dmin);
    c.format = app::Format::json;
    c.parallel = parallel;
    c.assume_smooth = assume_smooth;
    return c;
}

// Runs one of the CLI reports in-process; raises on invalid input.
template <typename Fn>
std::pair<int, std::string> report(Fn&& fn)
{
    std::ostringstream out, err;
    int code = fn(out, err);
    if (code == app::kExitInvalid) {
        std::string message = err.str();
        if (message.rfind("error: ", 0) == 0)
            message.erase(0, 7);
        while (!message.empty() && message.back() == '\n')
            message.pop_back();
        throw InvalidInput(message);
    }
    return {code, out.str()};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Motivic partition functions of hyperquot schemes on curves";

    static py::exception<Error> base(m, "HyperquotError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            base(e.what());
        }
    });

    py::class_<NestingProfile>(m, "NestingProfile")
        .def(py::init<int, std::vector<int>>(), py::arg("r"), py::arg("s"))
        .def_property_readonly("rank", &NestingProfile::rank)
        .def_property_readonly("length", &NestingProfile::length)
        .def_property_readonly("coranks", &NestingProfile::coranks)
        .def_property_readonly("s", [](const NestingProfile& p) {
            return std::vector<int>(p.s_values().begin(), p.s_values().end());
        })
        .def("__repr__", &NestingProfile::to_string)
        .def("__eq__", [](const NestingProfile& a, const NestingProfile& b) { return a == b; });

    m.def("grassmannian_motive", [](int d, int r) { return to_py(grassmannian_motive(d, r)); }, py::arg("d"),
          py::arg("r"));
    m.def("flag_motive", [](int r, std::vector<int> s) { return to_py(flag_motive(NestingProfile(r, s))); },
          py::arg("r"), py::arg("s"));
    m.def("flag_dimension", [](int r, std::vector<int> s) { return flag_dimension(NestingProfile(r, s)); },
          py::arg("r"), py::arg("s"));
    m.def("virtual_dimension",
          [](int r, std::vector<int> s, Degree d, int genus, long long degE) {
              return virtual_dimension(NestingProfile(r, s), d, genus, degE);
          },
          py::arg("r"), py::arg("s"), py::arg("d"), py::arg("genus"), py::arg("degE"));
    m.def("block_permutations",
          [](int r, std::vector<int> s) {
              std::vector<std::vector<int>> out;
              for (const auto& sigma : enumerate_block_permutations(NestingProfile(r, s)))
                  out.push_back(sigma.images());
              return out;
          },
          py::arg("r"), py::arg("s"));
    m.def("h_identity_check", [](int r, std::vector<int> s) { return h_identity_check(NestingProfile(r, s)); },
          py::arg("r"), py::arg("s"));

    m.def("zeta_series",
          [](int genus, int order) {
              auto z = zeta_series(genus, order);
              py::list out;
              for (int n = 0; n <= order; ++n)
                  out.append(to_py(z[n]));
              return out;
          },
          py::arg("genus"), py::arg("order"));
    m.def("zeta_rationality_check", &zeta_rationality_check, py::arg("genus"), py::arg("order"));
    m.def("curve_class", [](int genus) { return to_py(curve_class(genus)); }, py::arg("genus"));

    m.def("specialize",
          [](const py::dict& poly, const std::string& target) -> py::object {
              EPoly p = epoly_from_py(poly);
              if (target == "euler")
                  return to_py(specialize_euler(p));
              if (target == "poincare")
                  return to_py(specialize_poincare(p));
              if (target == "chi_y")
                  return to_py(specialize_chi_y(p));
              throw InvalidInput("unknown specialization '" + target + "'");
          },
          py::arg("poly"), py::arg("target"));

    m.def("motivic_partition_function",
          [](int genus, std::vector<int> degrees, std::vector<int> s, Degree dmax, std::optional<Degree> dmin,
             bool parallel) {
              auto pr = problem(genus, degrees, s, dmax, dmin);
              MSeries out(pr.window);
              {
                  py::gil_scoped_release release;
                  out = motivic_partition_function(pr.curve, pr.bundle, pr.profile, pr.window,
                                                   ComputeOptions{parallel});
              }
              return to_py(out);
          },
          py::arg("genus"), py::arg("degrees"), py::arg("s"), py::arg("dmax"), py::arg("dmin") = py::none(),
          py::arg("parallel") = false);
    m.def("oracle_partition_function",
          [](int genus, std::vector<int> degrees, std::vector<int> s, Degree dmax, std::optional<Degree> dmin) {
              auto pr = problem(genus, degrees, s, dmax, dmin);
              MSeries out(pr.window);
              {
                  py::gil_scoped_release release;
                  out = oracle_partition_function(pr.curve, pr.bundle, pr.profile, pr.window);
              }
              return to_py(out);
          },
          py::arg("genus"), py::arg("degrees"), py::arg("s"), py::arg("dmax"), py::arg("dmin") = py::none());
    m.def("euler_partition_function",
          [](int genus, std::vector<int> degrees, std::vector<int> s, Degree dmax, std::optional<Degree> dmin) {
              auto pr = problem(genus, degrees, s, dmax, dmin);
              auto series = euler_partition_function(pr.curve, pr.bundle, pr.profile, pr.window);
              py::dict out;
              series.for_each_term(
                  [&](const Degree& d, const EPoly& c) { out[degree_key(d)] = to_py(specialize_euler(c)); });
              return out;
          },
          py::arg("genus"), py::arg("degrees"), py::arg("s"), py::arg("dmax"), py::arg("dmin") = py::none());
    m.def("genus0_closed_form",
          [](int r, std::vector<int> s, Degree dmax) {
              NestingProfile p(r, s);
              return to_py(genus0_closed_form(r, p, make_window(BundleSpec::trivial(r), p, dmax)));
          },
          py::arg("r"), py::arg("s"), py::arg("dmax"));

    m.def("smoothness_status",
          [](int genus, std::vector<int> degrees, std::vector<int> s) {
              auto v = smoothness_status(CurveSpec{genus}, BundleSpec{degrees},
                                         NestingProfile(static_cast<int>(degrees.size()), s));
              return py::make_tuple(to_string(v.status), v.reason);
          },
          py::arg("genus"), py::arg("degrees"), py::arg("s"));

    m.def("check_oracle",
          [](int genus, std::vector<int> degrees, std::vector<int> s, Degree dmax) {
              auto pr = problem(genus, degrees, s, dmax, std::nullopt);
              return check_to_py(check_oracle(pr.curve, pr.bundle, pr.profile, pr.window));
          },
          py::arg("genus"), py::arg("degrees"), py::arg("s"), py::arg("dmax"),
          "Returns (passed, checked, detail).");

    m.def("compute_json",
          [](int genus, std::vector<int> degrees, std::vector<int> s, std::vector<int> dmax,
             std::optional<std::vector<int>> dmin, const std::string& realization, bool parallel) {
              auto c = run_config(genus, degrees, s, dmax, dmin, parallel, false);
              c.realization = app::parse_realization(realization);
              return report([&](std::ostream& out, std::ostream& err) { return app::run_compute(c, out, err); })
                  .second;
          },
          py::arg("genus"), py::arg("degrees"), py::arg("s"), py::arg("dmax"), py::arg("dmin") = py::none(),
          py::arg("realization") = "motivic", py::arg("parallel") = false);
    m.def("verify_json",
          [](const std::string& suite, int genus, std::vector<int> degrees, std::vector<int> s,
             std::vector<int> dmax, bool assume_smooth) {
              auto c = run_config(genus, degrees, s, dmax, std::nullopt, false, assume_smooth);
              auto which = app::parse_suite(suite);
              return report([&](std::ostream& out, std::ostream& err) { return app::run_verify(c, which, out, err); })
                  .second;
          },
          py::arg("suite"), py::arg("genus"), py::arg("degrees"), py::arg("s"), py::arg("dmax"),
          py::arg("assume_smooth") = false);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
