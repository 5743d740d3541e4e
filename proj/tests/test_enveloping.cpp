#include <colorhom/enveloping.hpp>

#include <doctest.h>

#include <random>

using namespace colorhom;

namespace {

UElement mono(const Enveloping& U, Monomial m, std::int64_t num = 1, std::int64_t den = 1) {
    return {{std::move(m), Scalar(Rational(num, den), U.root_order())}};
}

}  // namespace

TEST_SUITE("enveloping") {

TEST_CASE("normal form on heis3") {
    auto L = make_heis3();
    Enveloping U(L);
    // y x = -x y + z
    UElement yx = U.normal_form({1, 0}, Scalar::one(2));
    CHECK(yx == u_add(mono(U, {0, 1}, -1), mono(U, {2})));
    // odd squares with zero self-bracket vanish
    CHECK(U.normal_form({0, 0}, Scalar::one(2)).empty());
    CHECK(U.normal_form({1, 1}, Scalar::one(2)).empty());
    // z is central: z x = x z with no correction
    CHECK(U.normal_form({2, 0}, Scalar::one(2)) == mono(U, {0, 2}));
    // already normal words pass through
    CHECK(U.normal_form({0, 1, 2}, Scalar::one(2)) == mono(U, {0, 1, 2}));
    CHECK(U.is_pbw({0, 1, 2, 2}));
    CHECK(!U.is_pbw({1, 0}));
    CHECK(!U.is_pbw({0, 0}));
}

TEST_CASE("odd square with nonzero self-bracket on glcolor") {
    auto L = make_glcolor();
    Enveloping U(L);
    // x x = w / 2
    CHECK(U.normal_form({0, 0}, Scalar::one(2)) == mono(U, {3}, 1, 2));
    // x and y are both odd yet mutually commuting here, so
    // y x = x y + [y,x] = x y - z
    CHECK(U.lie().eps_basis(1, 0) == Scalar::one(2));
    UElement yx = U.normal_form({1, 0}, Scalar::one(2));
    CHECK(yx == u_add(mono(U, {0, 1}), mono(U, {2}, -1)));
}

TEST_CASE("multiplication is associative") {
    auto L = make_heis3();
    Enveloping U(L);
    auto words = U.pbw_monomials(2);
    for (const auto& a : words)
        for (const auto& b : words)
            for (const auto& c : words) {
                UElement ua = mono(U, a), ub = mono(U, b), uc = mono(U, c);
                CHECK(U.u_multiply(U.u_multiply(ua, ub), uc) ==
                      U.u_multiply(ua, U.u_multiply(ub, uc)));
            }
}

TEST_CASE("monomial degrees multiply") {
    auto L = make_heis3();
    Enveloping U(L);
    CHECK(U.degree({0, 1}) == GroupElement{0});
    CHECK(U.degree({0, 2}) == GroupElement{1});
    CHECK(U.degree({}) == GroupElement{0});
}

TEST_CASE("twisted products") {
    auto L = make_heis3();
    Enveloping U(L);
    UElement x = U.gen(0), y = U.gen(1);
    // x *_chi y = chi(1,1) x y = -x y
    CHECK(U.twisted_product(x, y) == mono(U, {0, 1}, -1));
    // x ._chi y = chi(1,1) y x = -(-x y + z) = x y - z
    CHECK(U.twisted_opposite_product(x, y) ==
          u_add(mono(U, {0, 1}), mono(U, {2}, -1)));
}

TEST_CASE("Lusztig product sign rule") {
    auto L = make_heis3();
    Enveloping U(L);
    const Scalar one = Scalar::one(2);
    TensorUElement a{{{Monomial{}, Monomial{0}}, one}};   // 1 @ x
    TensorUElement b{{{Monomial{1}, Monomial{}}, one}};   // y @ 1
    TensorUElement got = U.lusztig_multiply(a, b);
    TensorUElement expect{{{Monomial{1}, Monomial{0}}, -one}};  // -(y @ x)
    CHECK(got == expect);
}

TEST_CASE("coproduct of a product of odd generators") {
    auto L = make_heis3();
    Enveloping U(L);
    const Scalar one = Scalar::one(2);
    TensorUElement d = U.coproduct(mono(U, {0, 1}));
    TensorUElement expect;
    t_acc(expect, {Monomial{}, Monomial{0, 1}}, one);
    t_acc(expect, {Monomial{1}, Monomial{0}}, -one);
    t_acc(expect, {Monomial{0}, Monomial{1}}, one);
    t_acc(expect, {Monomial{0, 1}, Monomial{}}, one);
    CHECK(d == expect);

    TensorUElement dz = U.coproduct(U.gen(2));
    TensorUElement expect_z;
    t_acc(expect_z, {Monomial{}, Monomial{2}}, one);
    t_acc(expect_z, {Monomial{2}, Monomial{}}, one);
    CHECK(dz == expect_z);
}

TEST_CASE("counit extracts the unit coefficient") {
    auto L = make_heis3();
    Enveloping U(L);
    CHECK(U.counit(U.one()) == Scalar::one(2));
    CHECK(U.counit(U.gen(0)).is_zero());
    UElement a = u_add(u_scale(Scalar::of_int(2, 2), U.one()), U.gen(1));
    CHECK(U.counit(a) == Scalar::of_int(2, 2));
}

TEST_CASE("antipode values") {
    auto L = make_heis3();
    Enveloping U(L);
    CHECK(U.antipode(U.one()) == U.one());
    CHECK(U.antipode(U.gen(0)) == mono(U, {0}, -1));
    // S(x y) = x y - z
    CHECK(U.antipode(mono(U, {0, 1})) == u_add(mono(U, {0, 1}), mono(U, {2}, -1)));
    CHECK(U.antipode_inverse(U.antipode(mono(U, {0, 1, 2}))) == mono(U, {0, 1, 2}));
}

TEST_CASE("Hopf axiom suite passes on the fixtures") {
    {
        Enveloping U(make_heis3());
        auto report = U.check_hopf_axioms(3);
        INFO(report.first_failure());
        CHECK(report.all_pass());
    }
    {
        Enveloping U(make_abelian_odd(2));
        auto report = U.check_hopf_axioms(4);
        INFO(report.first_failure());
        CHECK(report.all_pass());
    }
    {
        Enveloping U(make_glcolor());
        auto report = U.check_hopf_axioms(3);
        INFO(report.first_failure());
        CHECK(report.all_pass());
    }
}

TEST_CASE("psi on 1 @ x") {
    auto L = make_heis3();
    Enveloping U(L);
    const Scalar one = Scalar::one(2);
    TensorUElement t{{{Monomial{}, Monomial{0}}, one}};
    TensorUElement fwd = U.psi_map(t, false);
    TensorUElement expect_fwd;
    t_acc(expect_fwd, {Monomial{}, Monomial{0}}, one);
    t_acc(expect_fwd, {Monomial{0}, Monomial{}}, -one);
    CHECK(fwd == expect_fwd);

    TensorUElement inv = U.psi_map(t, true);
    TensorUElement expect_inv;
    t_acc(expect_inv, {Monomial{}, Monomial{0}}, one);
    t_acc(expect_inv, {Monomial{0}, Monomial{}}, one);
    CHECK(inv == expect_inv);
}

TEST_CASE("psi round trip on small tensors") {
    auto L = make_heis3();
    Enveloping U(L);
    const Scalar one = Scalar::one(2);
    auto monomials = U.pbw_monomials(3);
    for (const auto& a : monomials)
        for (const auto& b : monomials) {
            if (a.size() + b.size() > 3) continue;
            TensorUElement t{{{a, b}, one}};
            CHECK(U.psi_map(U.psi_map(t, false), true) == t);
            CHECK(U.psi_map(U.psi_map(t, true), false) == t);
        }
}

TEST_CASE("psi intertwines the right actions") {
    auto L = make_heis3();
    Enveloping U(L);
    const Scalar one = Scalar::one(2);
    auto monomials = U.pbw_monomials(2);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const Monomial& a = monomials[rng() % monomials.size()];
        const Monomial& b = monomials[rng() % monomials.size()];
        const Monomial& c = monomials[rng() % monomials.size()];
        TensorUElement t{{{a, b}, one}};
        UElement act{{c, one}};
        CHECK(U.psi_map(U.tensor_right_action(t, act), false) ==
              U.free_right_action(U.psi_map(t, false), act));
    }
}

TEST_CASE("PBW monomial enumeration") {
    {
        Enveloping U(make_heis3());
        CHECK(U.pbw_monomials_of_length(0).size() == 1);
        CHECK(U.pbw_monomials_of_length(1).size() == 3);
        CHECK(U.pbw_monomials_of_length(2).size() == 4);  // xy, xz, yz, zz
        CHECK(U.pbw_monomials_of_length(3).size() == 4);  // xyz, xzz, yzz, zzz
        CHECK(U.pbw_monomials(3).size() == 12);
        CHECK(!U.pbw_monomials_finite(64).has_value());
    }
    {
        Enveloping U(make_abelian_odd(2));
        auto all = U.pbw_monomials_finite(64);
        REQUIRE(all.has_value());
        CHECK(all->size() == 4);  // 1, x1, x2, x1 x2
    }
    {
        Enveloping U(make_abelian_odd(1));
        auto all = U.pbw_monomials_finite(64);
        REQUIRE(all.has_value());
        CHECK(all->size() == 2);
    }
}

TEST_CASE("rewriting is confluent on small words") {
    for (auto make : {make_heis3, make_glcolor}) {
        Enveloping U(make());
        auto report = U.check_confluence(3);
        INFO(report.first_failure());
        CHECK(report.all_pass());
    }
}

TEST_CASE("printing") {
    auto L = make_heis3();
    Enveloping U(L);
    CHECK(U.monomial_to_string({}) == "1");
    CHECK(U.monomial_to_string({0, 1, 2, 2}) == "x.y.z.z");
    CHECK(U.u_to_string(UElement{}) == "0");
    CHECK(U.u_to_string(mono(U, {0, 1}, -1)) == "(-1)*x.y");
}

}  // TEST_SUITE
