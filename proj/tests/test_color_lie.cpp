#include <colorhom/color_lie.hpp>

#include <doctest.h>

using namespace colorhom;

namespace {

LieElement gen(const ColorLieAlgebra& L, const char* name) {
    auto i = L.index_of(name);
    REQUIRE(i >= 0);
    return {{i, Scalar::one(L.root_order())}};
}

}  // namespace

TEST_SUITE("color_lie") {

TEST_CASE("heis3 bracket table") {
    auto L = make_heis3();
    CHECK(L.dim() == 3);
    CHECK(bracket(L, gen(L, "x"), gen(L, "y")) == gen(L, "z"));
    // both generators odd: the completed mirror bracket keeps the plus sign
    CHECK(bracket(L, gen(L, "y"), gen(L, "x")) == gen(L, "z"));
    CHECK(lie_is_zero(bracket(L, gen(L, "x"), gen(L, "x"))));
    CHECK(lie_is_zero(bracket(L, gen(L, "z"), gen(L, "x"))));
    CHECK(lie_is_zero(bracket(L, gen(L, "y"), gen(L, "z"))));
    CHECK(validate_color_lie(L).all_pass());
    CHECK(L.parity(L.index_of("x")) == -1);
    CHECK(L.parity(L.index_of("z")) == 1);
}

TEST_CASE("abelian fixtures validate") {
    for (int k : {1, 2, 3}) {
        auto L = make_abelian_odd(k);
        CHECK(L.dim() == static_cast<std::size_t>(k));
        CHECK(validate_color_lie(L).all_pass());
    }
}

TEST_CASE("glcolor fixture validates and has the intended table") {
    auto L = make_glcolor();
    CHECK(validate_color_lie(L).all_pass());
    CHECK(bracket(L, gen(L, "x"), gen(L, "y")) == gen(L, "z"));
    // eps((0,1),(1,0)) = +1 here, so the mirror picks up a genuine minus
    LieElement yx = bracket(L, gen(L, "y"), gen(L, "x"));
    CHECK(yx == lie_scale(-Scalar::one(2), gen(L, "z")));
    CHECK(bracket(L, gen(L, "x"), gen(L, "x")) == gen(L, "w"));
    CHECK(lie_is_zero(bracket(L, gen(L, "y"), gen(L, "y"))));
    CHECK(lie_is_zero(bracket(L, gen(L, "z"), gen(L, "x"))));
    CHECK(lie_is_zero(bracket(L, gen(L, "w"), gen(L, "y"))));
}

TEST_CASE("bilinearity of the bracket") {
    auto L = make_glcolor();
    Scalar two = Scalar::of_int(2, 2), three = Scalar::of_int(3, 2);
    LieElement a = lie_add(lie_scale(two, gen(L, "x")), gen(L, "y"));
    LieElement b = lie_add(gen(L, "x"), lie_scale(three, gen(L, "y")));
    LieElement lhs = bracket(L, a, b);
    // [2x + y, x + 3y] = 2*3*[x,y] + 1*1*[y,x] + 2*[x,x] = 6z - z + 2w
    LieElement expect = lie_add(lie_scale(Scalar::of_int(5, 2), gen(L, "z")),
                                lie_scale(two, gen(L, "w")));
    CHECK(lhs == expect);
}

TEST_CASE("degree violation is reported with the offending component") {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    std::vector<LieBasisElement> basis = {{"x", {1}}, {"y", {1}}, {"z", {0}}};
    // [x,y] = x has degree (1) on a degree-(0) slot
    std::vector<BracketEntry> entries = {{0, 1, {{0, Scalar::one(2)}}}};
    ColorLieAlgebra L(G, chi, basis, entries);
    auto report = validate_color_lie(L);
    CHECK(!report.all_pass());
    CHECK(report.first_failure().find("degree") != std::string::npos);
    CHECK(report.first_failure().find("x") != std::string::npos);
}

TEST_CASE("explicit antisymmetry violation is reported at the pair") {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    std::vector<LieBasisElement> basis = {{"x", {1}}, {"y", {1}}, {"z", {0}}};
    std::vector<BracketEntry> entries = {
        {0, 1, {{2, Scalar::one(2)}}},
        {1, 0, {{2, -Scalar::one(2)}}},  // should be +z for two odd generators
    };
    ColorLieAlgebra L(G, chi, basis, entries);
    auto report = validate_color_lie(L);
    CHECK(!report.all_pass());
    CHECK(report.first_failure().find("eps-antisymmetry") != std::string::npos);
    for (const auto& c : report.checks)
        if (c.name == "bracket degree compatibility") CHECK(c.pass);
}

TEST_CASE("even self-bracket must vanish") {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    std::vector<LieBasisElement> basis = {{"u", {0}}, {"v", {0}}};
    std::vector<BracketEntry> entries = {{0, 0, {{1, Scalar::one(2)}}}};
    ColorLieAlgebra L(G, chi, basis, entries);
    auto report = validate_color_lie(L);
    CHECK(!report.all_pass());
    CHECK(report.first_failure().find("eps-antisymmetry") != std::string::npos);
}

TEST_CASE("Jacobi violation is caught while other axioms pass") {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    std::vector<LieBasisElement> basis = {{"x", {1}}, {"y", {1}}, {"z", {0}}};
    std::vector<BracketEntry> entries = {
        {0, 1, {{2, Scalar::one(2)}}},  // [x,y] = z
        {0, 2, {{0, Scalar::one(2)}}},  // [x,z] = x breaks Jacobi on (x,y,z)
    };
    ColorLieAlgebra L(G, chi, basis, entries);
    auto report = validate_color_lie(L);
    CHECK(!report.all_pass());
    for (const auto& c : report.checks) {
        if (c.name == "eps-Jacobi") {
            CHECK(!c.pass);
            CHECK(c.witness.find("(") != std::string::npos);
        } else {
            CHECK(c.pass);
        }
    }
}

TEST_CASE("duplicate bracket entries are refused") {
    GroupSpec G{{2}};
    Bicharacter chi{2, {{1}}};
    std::vector<LieBasisElement> basis = {{"x", {1}}, {"y", {1}}, {"z", {0}}};
    std::vector<BracketEntry> entries = {
        {0, 1, {{2, Scalar::one(2)}}},
        {0, 1, {{2, Scalar::one(2)}}},
    };
    CHECK_THROWS(ColorLieAlgebra(G, chi, basis, entries));
}

TEST_CASE("index lookup") {
    auto L = make_heis3();
    CHECK(L.index_of("y") == 1);
    CHECK(L.index_of("nope") == -1);
    CHECK(lie_to_string(L, bracket(L, gen(L, "x"), gen(L, "y"))) == "(1)*z");
    CHECK(lie_to_string(L, LieElement{}) == "0");
}

}  // TEST_SUITE
