#include <colorhom/grading.hpp>

#include <doctest.h>

using namespace colorhom;

TEST_SUITE("grading") {

TEST_CASE("group operations reduce finite factors") {
    GroupSpec z2{{2}};
    CHECK(z2.op({1}, {1}) == GroupElement{0});
    CHECK(z2.inverse({1}) == GroupElement{1});
    CHECK(z2.identity() == GroupElement{0});
    CHECK(z2.reduce({-3}) == GroupElement{1});

    GroupSpec z{{0}};
    CHECK(z.op({2}, {-3}) == GroupElement{-1});
    CHECK(z.inverse({5}) == GroupElement{-5});
    CHECK(z.contains({-7}));
    CHECK(!z.is_finite());
    CHECK_THROWS(z.elements());

    GroupSpec mixed{{2, 0}};
    CHECK(mixed.op({1, 4}, {1, -1}) == GroupElement{0, 3});
    CHECK_THROWS(mixed.op({1}, {1, 0}));
}

TEST_CASE("element enumeration is lexicographic") {
    GroupSpec z2z2{{2, 2}};
    auto els = z2z2.elements();
    REQUIRE(els.size() == 4);
    CHECK(els[0] == GroupElement{0, 0});
    CHECK(els[1] == GroupElement{0, 1});
    CHECK(els[2] == GroupElement{1, 0});
    CHECK(els[3] == GroupElement{1, 1});

    GroupSpec trivial{{}};
    CHECK(trivial.elements().size() == 1);
    CHECK(group_element_to_string(trivial.identity()) == "()");
    CHECK(group_element_to_string(GroupElement{1, 0}) == "(1,0)");
}

TEST_CASE("super sign on Z_2") {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    CHECK(chi_eval(G, chi, {1}, {1}) == -Scalar::one(2));
    CHECK(chi_eval(G, chi, {1}, {0}) == Scalar::one(2));
    CHECK(chi_eval(G, chi, {0}, {0}) == Scalar::one(2));
    CHECK(parity_sign(G, chi, {1}) == -1);
    CHECK(parity_sign(G, chi, {0}) == 1);
    CHECK(validate_bicharacter(G, chi).all_pass());
}

TEST_CASE("non-super bicharacter on Z_2 x Z_2") {
    GroupSpec G{{2, 2}};
    Bicharacter chi{2, {{1, 0}, {0, 1}}};
    CHECK(validate_bicharacter(G, chi).all_pass());
    // (1,0) and (0,1) are both odd yet commute with plus sign: not a super sign.
    CHECK(parity_sign(G, chi, {1, 0}) == -1);
    CHECK(parity_sign(G, chi, {0, 1}) == -1);
    CHECK(chi_eval(G, chi, {1, 0}, {0, 1}) == Scalar::one(2));
    CHECK(parity_sign(G, chi, {1, 1}) == 1);
    CHECK(parity_sign(G, chi, {0, 0}) == 1);

    // parity is multiplicative; exhaust all pairs
    auto parity = [&](const GroupElement& g) { return parity_sign(G, chi, g); };
    for (const auto& g : G.elements())
        for (const auto& h : G.elements())
            CHECK(parity(G.op(g, h)) == parity(g) * parity(h));
}

TEST_CASE("bicharacter over a rank-0 group") {
    GroupSpec G{{}};
    Bicharacter chi{1, {}};
    CHECK(validate_bicharacter(G, chi).all_pass());
    CHECK(chi_eval(G, chi, {}, {}) == Scalar::one(1));
}

TEST_CASE("antisymmetry violation is caught with a located witness") {
    GroupSpec G{{3}};
    Bicharacter chi{3, {{1}}};
    auto report = validate_bicharacter(G, chi);
    CHECK(!report.all_pass());
    bool found = false;
    for (const auto& c : report.checks)
        if (c.name == "antisymmetry" && !c.pass) {
            found = true;
            CHECK(c.witness.find("E[0][0]") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("well-definedness violation is caught") {
    // Exponent 1 on a Z_2 factor with root order 4: 2 * 1 != 0 mod 4, so chi
    // takes different values on representatives of the same class.
    GroupSpec G{{2}};
    Bicharacter chi{4, {{1}}};
    auto report = validate_bicharacter(G, chi, /*require_antisymmetric=*/false);
    CHECK(!report.all_pass());
    CHECK(report.first_failure().find("well-definedness") != std::string::npos);
}

TEST_CASE("biadditivity holds for well-formed bicharacters") {
    GroupSpec G{{4, 0}};
    Bicharacter chi{4, {{2, 2}, {-2, 0}}};
    auto report = validate_bicharacter(G, chi);
    CHECK(report.all_pass());
    // chi((1,0),(0,1)) = zeta_4^2 = -1
    CHECK(chi_eval(G, chi, {1, 0}, {0, 1}) == -Scalar::one(4));
}

TEST_CASE("infinite factors need no well-definedness constraint") {
    GroupSpec G{{0}};
    Bicharacter chi{2, {{1}}};
    CHECK(validate_bicharacter(G, chi).all_pass());
    CHECK(chi_eval(G, chi, {3}, {5}) == -Scalar::one(2));
    CHECK(chi_eval(G, chi, {-2}, {5}) == Scalar::one(2));
}

}  // TEST_SUITE
