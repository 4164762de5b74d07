#include "eoslab/serialize.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace eoslab {

json space_to_json(const SpaceSpec& s) {
    json j;
    switch (s.kind) {
        case SpaceKind::Torus: j["kind"] = "torus"; break;
        case SpaceKind::Line: j["kind"] = "line"; break;
        case SpaceKind::LineNu: j["kind"] = "line-nu"; break;
    }
    j["resolution"] = s.resolution;
    j["graded"] = s.graded;
    j["grading_floor"] = s.grading_floor;
    if (s.kind != SpaceKind::Torus) j["x_max"] = s.x_max;
    return j;
}

SpaceSpec space_from_json(const json& j) {
    std::string kind = j.at("kind");
    std::size_t res = j.at("resolution");
    bool graded = j.value("graded", false);
    if (kind == "torus") {
        double floor = j.value("grading_floor", 1e-160);
        return SpaceSpec::torus(res, graded, floor);
    }
    double x_max = j.at("x_max");
    double floor = j.value("grading_floor", 1e-12);
    if (kind == "line") return SpaceSpec::line(x_max, res, graded, floor);
    if (kind == "line-nu") return SpaceSpec::line_nu(x_max, res, graded, floor);
    throw std::invalid_argument("space_from_json: unknown kind " + kind);
}

json psi_spec_to_json(const std::string& kind, const json& params) {
    return json{{"kind", kind}, {"params", params}};
}

PsiFunction psi_from_json(const json& j) {
    std::string kind = j.at("kind");
    const json& p = j.value("params", json::object());
    double alpha = p.value("alpha", 2.0);
    if (kind == "power") return psi_power(p.at("m").get<double>(), alpha);
    if (kind == "power-shift")
        return psi_shift_d(psi_power(p.at("m").get<double>(), alpha),
                           p.at("d").get<double>());
    if (kind == "p-over-e")
        return make_psi(alpha, [](double q) { return q / std::exp(1.0); }, kind);
    if (kind == "p-over-log")  // increasing only beyond p = e
        return make_psi(std::max(alpha, 3.0),
                        [](double q) { return q / std::log(q); }, kind);
    if (kind == "power-log") {
        double m = p.at("m").get<double>();
        return make_psi(alpha,
                        [m](double q) { return std::pow(q, 1.0 / m) * std::log(q); },
                        kind);
    }
    throw std::invalid_argument("psi_from_json: unknown kind " + kind);
}

json n_spec_to_json(const std::string& kind, const json& params) {
    return json{{"kind", kind}, {"params", params}};
}

NFunction n_from_json(const json& j) {
    std::string kind = j.at("kind");
    const json& p = j.value("params", json::object());
    if (kind == "mr") return n_mr(p.at("m").get<double>(), p.value("r", 0.0));
    if (kind == "alpha-glued")
        return n_alpha(n_from_json(p.at("base")), p.at("alpha").get<double>());
    if (kind == "from-psi") return n_from_psi(psi_from_json(p.at("psi")));
    throw std::invalid_argument("n_from_json: unknown kind " + kind);
}

json norm_report_to_json(const NormReport& r) {
    return json{{"value", r.value},         {"argmax_p", r.argmax_p},
                {"argmin_v", r.argmin_v},   {"infinite", r.infinite},
                {"boundary_sup", r.boundary_sup}, {"diagnostics", r.diagnostics}};
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_json: cannot open " + path);
    out << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_json: cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace eoslab
