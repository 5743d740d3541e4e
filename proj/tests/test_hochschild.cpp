#include <colorhom/ce_cohomology.hpp>
#include <colorhom/hochschild.hpp>

#include <doctest.h>

using namespace colorhom;

namespace {

Scalar s(std::int64_t v, std::int64_t n = 2) { return Scalar::of_int(v, n); }

FiniteGradedAlgebra base_field_algebra() {
    FiniteGradedAlgebra A;
    A.root_order = 2;
    A.group = GroupSpec{{}};
    A.basis = {{"1", {}}};
    A.words = {{}};
    A.lmul = {ExactMatrix::identity(1, 2)};
    A.unit = 0;
    A.counit = {s(1)};
    A.antipode = ExactMatrix::identity(1, 2);
    A.coproduct = {ExactMatrix::identity(1, 2)};
    return A;
}

}  // namespace

TEST_SUITE("hochschild") {

TEST_CASE("truncating small enveloping algebras") {
    Enveloping U1(make_abelian_odd(1));
    FiniteGradedAlgebra A1 = truncate_enveloping(U1);
    REQUIRE(A1.dim() == 2);
    CHECK(A1.basis[0].name == "1");
    CHECK(A1.basis[1].name == "x1");
    CHECK(A1.unit == 0);
    CHECK(A1.basis[1].degree == GroupElement{1});
    // x * x = 0
    for (std::int64_t k = 0; k < 2; ++k) CHECK(A1.lmul[1].at(k, 1).is_zero());

    Enveloping U2(make_abelian_odd(2));
    FiniteGradedAlgebra A2 = truncate_enveloping(U2);
    REQUIRE(A2.dim() == 4);
    // basis in length-then-lex order: 1, x1, x2, x1.x2
    CHECK(A2.basis[3].name == "x1.x2");
    // x2 * x1 = -x1 x2
    CHECK(A2.lmul[2].at(3, 1) == s(-1));
    CHECK(A2.rmul(1).at(3, 2) == s(-1));
    CHECK(A2.rmul(2).at(3, 1) == s(1));
}

TEST_CASE("infinite enveloping algebras are rejected with the obstruction") {
    Enveloping H(make_heis3());
    CHECK_THROWS_WITH_AS(truncate_enveloping(H, 64),
                         doctest::Contains("even generator z"), std::runtime_error);
    Enveloping G(make_glcolor());
    CHECK_THROWS_WITH_AS(truncate_enveloping(G, 64),
                         doctest::Contains("not finite-dimensional"), std::runtime_error);
}

TEST_CASE("structure constants pass validation, mutants do not") {
    Enveloping U(make_abelian_odd(2));
    FiniteGradedAlgebra A = truncate_enveloping(U);
    {
        auto r = validate_finite_algebra(A);
        INFO(r.first_failure());
        CHECK(r.all_pass());
        CHECK(r.checks.size() == 6);  // unit, grading, assoc, counit, coassoc, antipode
    }
    {
        FiniteGradedAlgebra bad = A;
        bad.lmul[1].at(1, 2) = s(1);  // x1 x2 gains an x1 component, degree 1 != 0
        auto r = validate_finite_algebra(bad);
        CHECK(!r.all_pass());
        CHECK(r.first_failure().find("grading") != std::string::npos);
    }
    {
        // x1 x2 gains a unit component; degrees still match (both live in
        // degree e over Z_2) but x1 (x1 x2) becomes x1 while (x1 x1) x2 = 0
        FiniteGradedAlgebra bad = A;
        bad.lmul[1].at(0, 2) = s(1);
        auto r = validate_finite_algebra(bad);
        bool assoc_failed = false;
        for (const auto& c : r.checks) {
            if (c.name == "associativity") assoc_failed = !c.pass;
            if (c.name == "multiplicative grading") CHECK(c.pass);
        }
        CHECK(assoc_failed);
    }
    {
        FiniteGradedAlgebra bad = A;
        bad.antipode.at(1, 1) = s(1);  // S(x1) = +x1 breaks the convolution law
        auto r = validate_finite_algebra(bad);
        bool conv_failed = false;
        for (const auto& c : r.checks)
            if (c.name == "antipode convolution" && !c.pass) conv_failed = true;
        CHECK(conv_failed);
    }
    CHECK(validate_finite_algebra(base_field_algebra()).all_pass());
}

TEST_CASE("lifting a bimodule to algebra coordinates") {
    Enveloping U(make_abelian_odd(2));
    FiniteGradedAlgebra A = truncate_enveloping(U);

    // lifting the regular bimodule recovers the structure constants themselves
    AlgebraBimodule R = lift_bimodule(A, regular_bimodule(U));
    for (std::int64_t i = 0; i < A.dim(); ++i) {
        CHECK(R.left[static_cast<std::size_t>(i)] == A.lmul[static_cast<std::size_t>(i)]);
        CHECK(R.right[static_cast<std::size_t>(i)] == A.rmul(i));
    }
    {
        auto r = validate_algebra_bimodule(A, R);
        INFO(r.first_failure());
        CHECK(r.all_pass());
    }
    {
        auto r = validate_algebra_bimodule(A, lift_bimodule(A, trivial_bimodule(U)));
        INFO(r.first_failure());
        CHECK(r.all_pass());
    }
    {
        AlgebraBimodule bad = R;
        bad.left[2] = ExactMatrix::identity(4, 2);
        CHECK(!validate_algebra_bimodule(A, bad).all_pass());
    }
}

TEST_CASE("bar differential squares to zero blockwise") {
    for (int k : {1, 2}) {
        Enveloping U(make_abelian_odd(k));
        FiniteGradedAlgebra A = truncate_enveloping(U);
        for (const auto& M : {lift_bimodule(A, regular_bimodule(U)),
                              lift_bimodule(A, trivial_bimodule(U))}) {
            for (const auto& h : A.group.elements())
                for (int n = 0; n <= 2; ++n)
                    for (bool normalized : {true, false}) {
                        ExactMatrix a = hochschild_delta(A, M, n, h, normalized);
                        ExactMatrix b = hochschild_delta(A, M, n + 1, h, normalized);
                        CHECK((b * a).is_zero());
                    }
        }
    }
}

TEST_CASE("Hochschild cohomology of the odd line") {
    Enveloping U(make_abelian_odd(1));
    FiniteGradedAlgebra A = truncate_enveloping(U);

    SUBCASE("coefficients in the algebra itself") {
        auto dims = hochschild_dims(A, regular_bimodule(U), 3);
        // every differential vanishes at h = 0; at h = 1 the odd-degree
        // cochain with unit value maps to 2x
        CHECK(dims.at({0}) == std::vector<std::int64_t>{1, 1, 1, 1});
        CHECK(dims.at({1}) == std::vector<std::int64_t>{1, 0, 0, 0});
    }

    SUBCASE("trivial coefficients") {
        auto dims = hochschild_dims(A, trivial_bimodule(U), 3);
        // all differentials vanish, so each block contributes its dimension
        CHECK(dims.at({0}) == std::vector<std::int64_t>{1, 0, 1, 0});
        CHECK(dims.at({1}) == std::vector<std::int64_t>{0, 1, 0, 1});
    }

    SUBCASE("normalized and unnormalized complexes agree") {
        for (const auto& M : {regular_bimodule(U), trivial_bimodule(U)}) {
            auto norm = hochschild_dims(A, M, 2, std::nullopt, true);
            auto bar = hochschild_dims(A, M, 2, std::nullopt, false);
            CHECK(norm == bar);
        }
    }
}

TEST_CASE("degree-zero cohomology is the centralizer") {
    for (int k : {1, 2}) {
        Enveloping U(make_abelian_odd(k));
        FiniteGradedAlgebra A = truncate_enveloping(U);
        for (const auto& M : {regular_bimodule(U), trivial_bimodule(U)}) {
            AlgebraBimodule AM = lift_bimodule(A, M);
            auto direct = centralizer_dims(A, AM);
            auto table = hochschild_dims(A, AM, 0);
            for (const auto& [h, dims] : table) {
                const auto it = direct.find(h);
                CHECK(dims[0] == (it == direct.end() ? 0 : it->second));
            }
        }
    }
    // the exterior algebra on one odd generator is commutative, so the
    // degree-e central part is everything in degree e
    Enveloping U(make_abelian_odd(1));
    FiniteGradedAlgebra A = truncate_enveloping(U);
    auto direct = centralizer_dims(A, lift_bimodule(A, regular_bimodule(U)));
    CHECK(direct.at({0}) == 1);
    CHECK(direct.at({1}) == 1);
}

TEST_CASE("the base field has no higher Hochschild cohomology") {
    FiniteGradedAlgebra A = base_field_algebra();
    GradedBimodule M;
    M.basis.push_back({"1", {}});
    auto dims = hochschild_dims(A, M, 3);
    CHECK(dims.at({}) == std::vector<std::int64_t>{1, 0, 0, 0});
}

TEST_CASE("Hochschild side matches the Lie cochain side") {
    SUBCASE("one odd generator") {
        Enveloping U(make_abelian_odd(1));
        for (const auto& M : {regular_bimodule(U), trivial_bimodule(U)}) {
            ComparisonReport rep = compare_cohomology_tables(U, M, 3);
            CHECK(rep.all_equal);
            CHECK(rep.cells.size() == 8);
            for (const auto& cell : rep.cells) CHECK(cell.lhs == cell.rhs);
        }
    }
    SUBCASE("two odd generators") {
        Enveloping U(make_abelian_odd(2));
        for (const auto& M : {regular_bimodule(U), trivial_bimodule(U)}) {
            ComparisonReport rep = compare_cohomology_tables(U, M, 3);
            CHECK(rep.all_equal);
            CHECK(rep.cells.size() == 8);
        }
    }
    SUBCASE("one cell spot-checked by hand") {
        Enveloping U(make_abelian_odd(1));
        ComparisonReport rep = compare_cohomology_tables(U, regular_bimodule(U), 1);
        bool seen = false;
        for (const auto& cell : rep.cells)
            if (cell.n == 1 && cell.h == GroupElement{0}) {
                CHECK(cell.lhs == 1);
                CHECK(cell.rhs == 1);
                seen = true;
            }
        CHECK(seen);
    }
    SUBCASE("infinite-dimensional input is refused") {
        Enveloping H(make_heis3());
        CHECK_THROWS_WITH_AS(compare_cohomology_tables(H, trivial_bimodule(H), 1),
                             doctest::Contains("even generator z"), std::runtime_error);
    }
}

TEST_CASE("shifting the coefficients permutes the Hochschild table") {
    // HH^n(A, M)_h computed from M[k] at twist h equals the table of M at kh
    Enveloping U(make_abelian_odd(1));
    FiniteGradedAlgebra A = truncate_enveloping(U);
    const GroupSpec& G = U.lie().group();
    GradedBimodule M = regular_bimodule(U);
    auto plain = hochschild_dims(A, M, 2);
    auto shifted = hochschild_dims(A, shift_bimodule(G, M, {1}), 2);
    for (const auto& [h, dims] : shifted) CHECK(dims == plain.at(G.op({1}, h)));
}

}  // TEST_SUITE
