#include <doctest.h>

#include <cmath>

#include "eoslab/serialize.hpp"

using namespace eoslab;

TEST_CASE("space specs round trip") {
    for (const auto& s :
         {SpaceSpec::torus(1 << 10, true), SpaceSpec::line(8.0, 256),
          SpaceSpec::line_nu(4.0, 128, true, 1e-10)}) {
        SpaceSpec back = space_from_json(space_to_json(s));
        CHECK(back.kind == s.kind);
        CHECK(back.resolution == s.resolution);
        CHECK(back.graded == s.graded);
        REQUIRE(back.nodes.size() == s.nodes.size());
        CHECK(back.nodes.front() == doctest::Approx(s.nodes.front()));
        CHECK(back.nodes.back() == doctest::Approx(s.nodes.back()));
    }
}

TEST_CASE("psi specs reconstruct the right function") {
    auto j = psi_spec_to_json("power", {{"m", 2.0}});
    PsiFunction psi = psi_from_json(j);
    CHECK(psi(16.0) == doctest::Approx(4.0));

    auto j2 = psi_spec_to_json("power-shift", {{"m", 1.0}, {"d", 1}});
    PsiFunction psi2 = psi_from_json(j2);
    CHECK(psi2(3.0) == doctest::Approx(9.0));

    auto j3 = psi_spec_to_json("p-over-e", json::object());
    CHECK(psi_from_json(j3)(std::exp(1.0)) == doctest::Approx(1.0));

    CHECK_THROWS(psi_from_json(json{{"kind", "nope"}}));
}

TEST_CASE("n specs reconstruct the right function") {
    NFunction n = n_from_json(n_spec_to_json("mr", {{"m", 1.0}, {"r", 0.0}}));
    CHECK(n.eval(2.0) == doctest::Approx(std::exp(2.0) - 1.0));

    json glued = n_spec_to_json(
        "alpha-glued",
        {{"alpha", 1.5}, {"base", n_spec_to_json("mr", {{"m", 1.0}})}});
    NFunction g = n_from_json(glued);
    CHECK(g.piecewise.has_value());
}

TEST_CASE("norm reports serialize all fields") {
    NormReport r;
    r.value = 2.5;
    r.argmax_p = 7.0;
    r.infinite = true;
    r.diagnostics = "x";
    json j = norm_report_to_json(r);
    CHECK(j["value"] == 2.5);
    CHECK(j["argmax_p"] == 7.0);
    CHECK(j["infinite"] == true);
    CHECK(j["diagnostics"] == "x");
}

TEST_CASE("json file round trip") {
    json j{{"a", 1}, {"b", {1, 2, 3}}};
    std::string path = "/tmp/eoslab_test.json";
    write_json(j, path);
    CHECK(read_json(path) == j);
    std::remove(path.c_str());
}
