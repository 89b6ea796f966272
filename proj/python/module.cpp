#include "wsys/diagrams.hpp"
#include "wsys/families.hpp"
#include "wsys/oracle.hpp"
#include "wsys/relations.hpp"
#include "wsys/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wsys;

namespace {

py::dict poly_dict(const PolynomialQ& p) {
    nlohmann::json j = poly_to_json(p);
    py::dict d;
    auto strings = [](const nlohmann::json& arr) {
        py::list out;
        for (const auto& s : arr)
            out.append(s.get<std::string>());
        return out;
    };
    d["monomial"] = strings(j["monomial"]);
    d["binomial"] = strings(j["binomial"]);
    d["latex"] = j["latex"].get<std::string>();
    return d;
}

py::list report_list(const std::vector<CheckEntry>& report) {
    py::list out;
    for (const auto& e : report) {
        py::dict d;
        d["check"] = e.check;
        d["family"] = e.family;
        d["N"] = e.n;
        d["status"] = e.pass ? "pass" : "fail";
        d["residual"] = e.residual;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_wsys, m) {
    m.doc() = "Classical Lie weight systems on oriented chord diagrams";

    m.def("canonical", [](const std::string& word) {
        return std::visit([](const auto& d) { return format(canonicalize(d)); },
                          parse_diagram(word));
    });
    m.def("enumerate_oriented", [](int n) {
        std::vector<std::string> out;
        for (const auto& d : enumerate_oriented(n))
            out.push_back(format(d));
        return out;
    });
    m.def("enumerate_unoriented", [](int n) {
        std::vector<std::string> out;
        for (const auto& d : enumerate_unoriented(n))
            out.push_back(format(d));
        return out;
    });
    m.def("evaluate_weight", [](const std::string& word, const std::string& family) {
        return poly_dict(evaluate_weight(parse_oriented(word), family_from_tag(family)));
    });
    m.def("oracle_eval", [](const std::string& word, const std::string& family, int n) {
        return rational_to_string(oracle_eval(parse_oriented(word), family_from_tag(family), n));
    });
    m.def("casimir_eval", [](const std::string& word, const std::string& family, int n) {
        return rational_to_string(casimir_eval(parse_unoriented(word), family_from_tag(family), n));
    });
    m.def("average", [](const std::string& word) {
        std::vector<std::string> out;
        for (const auto& d : average(parse_unoriented(word)))
            out.push_back(format(d));
        return out;
    });
    m.def("check_bialgebra", [](const std::string& family, int n) {
        return report_list(check_bialgebra_identities(family_from_tag(family), n));
    });
}
