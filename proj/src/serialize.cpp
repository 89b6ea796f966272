#include "wsys/serialize.hpp"

namespace wsys {

nlohmann::json poly_to_json(const PolynomialQ& p) {
    auto strings = [](const std::vector<Rational>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : v)
            a.push_back(rational_to_string(r));
        return a;
    };
    return {{"monomial", strings(p.coeffs())},
            {"binomial", strings(p.binomial_coeffs())},
            {"latex", p.latex()}};
}

PolynomialQ poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& s : j.at("monomial"))
        c.push_back(rational_from_string(s.get<std::string>()));
    return PolynomialQ(std::move(c));
}

nlohmann::json report_to_json(const std::vector<CheckEntry>& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : report)
        out.push_back({{"check", e.check},
                       {"family", e.family},
                       {"N", e.n},
                       {"status", e.pass ? "pass" : "fail"},
                       {"residual", e.residual}});
    return out;
}

}  // namespace wsys
