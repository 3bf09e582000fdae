#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elpeq/asp.hpp"
#include "elpeq/epistemic.hpp"
#include "elpeq/equivalence.hpp"
#include "elpeq/json_io.hpp"
#include "elpeq/qbf.hpp"
#include "elpeq/syntax.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const elpeq::Json& j) {
    switch (j.type()) {
        case nlohmann::detail::value_t::null: return py::none();
        case nlohmann::detail::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::detail::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::detail::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::detail::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::detail::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::detail::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case nlohmann::detail::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

elpeq::ViewKind kind_from(const std::string& s) {
    if (s == "cwv") return elpeq::ViewKind::cwv;
    if (s == "wv") return elpeq::ViewKind::wv;
    throw std::invalid_argument("kind must be 'cwv' or 'wv'");
}

elpeq::Limits limits_from(unsigned max_atoms, unsigned max_eliterals, bool force) {
    return {max_atoms, max_eliterals, force};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solving and equivalence checking for ground epistemic logic programs";

    py::register_exception<elpeq::ParseError>(m, "ProgramParseError", PyExc_ValueError);
    py::register_exception<elpeq::GuardError>(m, "GuardError", PyExc_RuntimeError);

    py::class_<elpeq::Elp>(m, "Elp")
        .def("__eq__", [](const elpeq::Elp& a, const elpeq::Elp& b) { return a == b; })
        .def("__repr__",
             [](const elpeq::Elp& p) { return "Elp(\"\"\"" + elpeq::render(p) + "\"\"\")"; })
        .def_property_readonly("atoms", [](const elpeq::Elp& p) { return p.atoms(); })
        .def_property_readonly("eliterals", [](const elpeq::Elp& p) {
            std::vector<std::string> out;
            for (elpeq::ElitId i = 0; i < p.eliterals().size(); ++i)
                out.push_back(p.eliteral_name(i));
            return out;
        });

    py::class_<elpeq::AspProgram>(m, "AspProgram")
        .def("__eq__",
             [](const elpeq::AspProgram& a, const elpeq::AspProgram& b) { return a == b; })
        .def("__repr__",
             [](const elpeq::AspProgram& p) {
                 return "AspProgram(\"\"\"" + elpeq::render(p) + "\"\"\")";
             })
        .def_property_readonly("atoms", [](const elpeq::AspProgram& p) { return p.atoms(); });

    m.def("parse_elp", [](const std::string& text) { return elpeq::parse_elp(text); });
    m.def("parse_asp", [](const std::string& text) { return elpeq::parse_asp(text); });
    m.def("render", [](const elpeq::Elp& p) { return elpeq::render(p); });
    m.def("render_asp", [](const elpeq::AspProgram& p) { return elpeq::render(p); });
    m.def("union_elps", &elpeq::union_elps);
    m.def("align", [](const elpeq::Elp& a, const elpeq::Elp& b) { return elpeq::align(a, b); });

    m.def(
        "answer_sets",
        [](const elpeq::AspProgram& p, unsigned max_atoms, bool force) {
            auto as = elpeq::answer_sets(p, limits_from(max_atoms, 12, force));
            return json_to_py(elpeq::interpretations_to_json(as, p.atoms()));
        },
        py::arg("program"), py::arg("max_atoms") = 20, py::arg("force") = false);

    m.def(
        "epistemic_reduct",
        [](const elpeq::Elp& p, const std::vector<std::string>& guess) {
            elpeq::Guess phi;
            for (const auto& name : guess) {
                bool found = false;
                for (elpeq::ElitId e = 0; e < p.eliterals().size(); ++e)
                    if (p.eliteral_name(e) == name) {
                        phi.bits |= 1ull << e;
                        found = true;
                    }
                if (!found)
                    throw std::invalid_argument("epistemic literal not in the domain: " + name);
            }
            return elpeq::epistemic_reduct(p, phi);
        },
        py::arg("program"), py::arg("guess"));

    m.def(
        "candidate_world_views",
        [](const elpeq::Elp& p, unsigned max_atoms, unsigned max_eliterals, bool force) {
            auto ws = elpeq::candidate_world_views(p, limits_from(max_atoms, max_eliterals, force));
            return json_to_py(elpeq::world_views_to_json(ws, p));
        },
        py::arg("program"), py::arg("max_atoms") = 20, py::arg("max_eliterals") = 12,
        py::arg("force") = false);

    m.def(
        "world_views",
        [](const elpeq::Elp& p, unsigned max_atoms, unsigned max_eliterals, bool force) {
            auto ws = elpeq::world_views(p, limits_from(max_atoms, max_eliterals, force));
            return json_to_py(elpeq::world_views_to_json(ws, p));
        },
        py::arg("program"), py::arg("max_atoms") = 20, py::arg("max_eliterals") = 12,
        py::arg("force") = false);

    m.def(
        "ordinary_equivalent",
        [](const elpeq::Elp& p1, const elpeq::Elp& p2, const std::string& kind,
           unsigned max_atoms, unsigned max_eliterals, bool force) {
            auto [a1, a2] = elpeq::align(p1, p2);
            auto v = elpeq::ordinary_equivalent(a1, a2, kind_from(kind),
                                                limits_from(max_atoms, max_eliterals, force));
            return json_to_py(elpeq::verdict_to_json(v, a1));
        },
        py::arg("p1"), py::arg("p2"), py::arg("kind"), py::arg("max_atoms") = 20,
        py::arg("max_eliterals") = 12, py::arg("force") = false);

    m.def(
        "uniformly_equivalent",
        [](const elpeq::Elp& p1, const elpeq::Elp& p2, const std::string& kind,
           unsigned max_atoms, unsigned max_eliterals, bool force, unsigned jobs) {
            auto [a1, a2] = elpeq::align(p1, p2);
            auto v = elpeq::uniformly_equivalent(a1, a2, kind_from(kind),
                                                 limits_from(max_atoms, max_eliterals, force),
                                                 jobs);
            return json_to_py(elpeq::verdict_to_json(v, a1));
        },
        py::arg("p1"), py::arg("p2"), py::arg("kind"), py::arg("max_atoms") = 20,
        py::arg("max_eliterals") = 12, py::arg("force") = false, py::arg("jobs") = 1);

    m.def(
        "ue_function",
        [](const elpeq::Elp& p, const std::string& kind, unsigned max_atoms,
           unsigned max_eliterals, bool force) {
            auto t = elpeq::ue_function(p, kind_from(kind),
                                        limits_from(max_atoms, max_eliterals, force));
            return json_to_py(elpeq::ue_table_to_json(t, p));
        },
        py::arg("program"), py::arg("kind"), py::arg("max_atoms") = 20,
        py::arg("max_eliterals") = 12, py::arg("force") = false);

    m.def(
        "ue_functions_coincide",
        [](const elpeq::Elp& p1, const elpeq::Elp& p2, const std::string& kind,
           unsigned max_atoms, unsigned max_eliterals, bool force) {
            auto [a1, a2] = elpeq::align(p1, p2);
            auto v = elpeq::ue_functions_coincide(a1, a2, kind_from(kind),
                                                  limits_from(max_atoms, max_eliterals, force));
            return json_to_py(elpeq::verdict_to_json(v, a1));
        },
        py::arg("p1"), py::arg("p2"), py::arg("kind"), py::arg("max_atoms") = 20,
        py::arg("max_eliterals") = 12, py::arg("force") = false);

    m.def(
        "asp_uniform_equivalent",
        [](const elpeq::AspProgram& p1, const elpeq::AspProgram& p2, unsigned max_atoms,
           bool force) {
            auto v = elpeq::asp_uniform_equivalent(p1, p2, limits_from(max_atoms, 12, force));
            return json_to_py(elpeq::asp_verdict_to_json(v, p1));
        },
        py::arg("p1"), py::arg("p2"), py::arg("max_atoms") = 20, py::arg("force") = false);

    m.def("parse_qbf3", [](const std::string& text) { return elpeq::parse_qbf3(text); });
    py::class_<elpeq::Qbf3>(m, "Qbf3")
        .def_readonly("x_vars", &elpeq::Qbf3::x_vars)
        .def_readonly("y_vars", &elpeq::Qbf3::y_vars)
        .def_readonly("z_vars", &elpeq::Qbf3::z_vars)
        .def_property_readonly("clause_count",
                               [](const elpeq::Qbf3& q) { return q.clauses.size(); });
    m.def(
        "eval_qbf3",
        [](const elpeq::Qbf3& q, unsigned max_vars, bool force) {
            return elpeq::eval_qbf3(q, max_vars, force);
        },
        py::arg("qbf"), py::arg("max_vars") = 12, py::arg("force") = false);
    m.def(
        "check_y_top_assumption",
        [](const elpeq::Qbf3& q, unsigned max_vars, bool force) {
            return elpeq::check_y_top_assumption(q, max_vars, force);
        },
        py::arg("qbf"), py::arg("max_vars") = 12, py::arg("force") = false);
    m.def(
        "reduce_qbf",
        [](const elpeq::Qbf3& q, bool allow_unchecked, unsigned max_vars, bool force) {
            return elpeq::reduce_qbf(q, allow_unchecked, max_vars, force);
        },
        py::arg("qbf"), py::arg("allow_unchecked") = false, py::arg("max_vars") = 12,
        py::arg("force") = false);
}
