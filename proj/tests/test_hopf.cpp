#include <doctest.h>

#include "hopfforge/hopf.hpp"

using namespace hopfforge;

namespace {

// k<g,x>/(g^N - 1, gx - chi xg, x^e - rhs) with Delta(x) = x (x) 1 + g^s (x) x.
HopfPresentation skew_case(std::shared_ptr<const FieldCtx> F, long N, Fq chi, long s,
                           NcPoly x_power_rhs, long e) {
    HopfData data;
    data.field = F;
    data.gens = GenSet{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    data.relations = {NcPoly::from_word(F.get(), word_of(1, static_cast<int>(N)), F->one()) -
                          NcPoly::unit(F.get()),
                      g * x - (x * g).scaled(chi), x.pow(e) - x_power_rhs};
    data.grouplike_gens = {1};
    data.grouplike_orders[1] = N;
    data.coproduct[1] = TensorPoly::tensor(g, g);
    data.coproduct[0] =
        TensorPoly::tensor(x, NcPoly::unit(F.get())) +
        TensorPoly::from_key(F.get(), {word_of(1, static_cast<int>(s)), word_of(0)}, F->one());
    data.counit[1] = F->one();
    data.counit[0] = F->zero();
    return HopfPresentation::build(std::move(data));
}

}  // namespace

TEST_CASE("extend_coproduct") {
    auto F = FieldCtx::make(2, {});
    HopfPresentation H = skew_case(F, 6, F->one(), 1, NcPoly(F.get()), 2);
    REQUIRE(H.valid());
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    NcPoly one = NcPoly::unit(F.get());
    // Delta(x^2) = x^2 (x) 1 + g^2 (x) x^2 in characteristic 2 (the cross
    // terms xg (x) x + gx (x) x cancel since gx = xg).
    TensorPoly d = extend_coproduct(H, x * x);
    CHECK(d == H.sys().reduce(TensorPoly::tensor(x * x, one) +
                              TensorPoly::tensor(g * g, x * x)));
    // Group-like powers stay group-like.
    NcPoly g4 = H.sys().reduce(g.pow(4));
    CHECK(H.delta(g.pow(4)) == TensorPoly::tensor(g4, g4));
}

TEST_CASE("A3 combination x^p - lambda1 x is (1, g^p)-skew-primitive") {
    auto F = FieldCtx::make(2, {});
    HopfData data;
    data.field = F;
    data.gens = GenSet{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    NcPoly one = NcPoly::unit(F.get());
    data.relations = {NcPoly::from_word(F.get(), word_of(1, 6), F->one()) - one,
                      g * x - x * g - g + g * g, x * x - x};
    data.grouplike_gens = {1};
    data.grouplike_orders[1] = 6;
    data.coproduct[1] = TensorPoly::tensor(g, g);
    data.coproduct[0] = TensorPoly::tensor(x, one) + TensorPoly::tensor(g, x);
    data.counit[1] = F->one();
    data.counit[0] = F->zero();
    HopfPresentation H = HopfPresentation::build(std::move(data));
    REQUIRE(H.valid());
    NcPoly v = x * x - x;
    TensorPoly lhs = H.delta(v);
    TensorPoly rhs = H.sys().reduce(TensorPoly::tensor(v, one) + TensorPoly::tensor(g * g, v));
    CHECK(lhs == rhs);
}

TEST_CASE("check_bialgebra catches a corrupted coproduct") {
    auto F = FieldCtx::make(2, {3});
    HopfPresentation good = skew_case(F, 6, F->one(), 0, NcPoly(F.get()), 2);
    CHECK(check_bialgebra(good).pass);

    HopfData bad;
    bad.field = F;
    bad.gens = GenSet{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    bad.relations = {NcPoly::from_word(F.get(), word_of(1, 6), F->one()) -
                         NcPoly::unit(F.get()),
                     g * x - x * g, x * x};
    bad.grouplike_gens = {1};
    bad.grouplike_orders[1] = 6;
    bad.coproduct[1] = TensorPoly::tensor(g, g);
    bad.coproduct[0] = TensorPoly::tensor(x, NcPoly::unit(F.get()));  // missing 1 (x) x
    bad.counit[1] = F->one();
    bad.counit[0] = F->zero();
    HopfPresentation H = HopfPresentation::build(std::move(bad));
    BialgebraReport rep = check_bialgebra(H);
    CHECK(!rep.pass);
    CHECK(rep.failure.find("counit") != std::string::npos);
}

TEST_CASE("antipode of a Taft-like algebra") {
    auto F = FieldCtx::make(2, {3});
    // AA1 shape: g^6 = 1, gx = xi xg, x^3 = 0, Delta(x) = x (x) 1 + g (x) x.
    HopfPresentation H = skew_case(F, 6, F->root(3), 1, NcPoly(F.get()), 3);
    REQUIRE(H.valid());
    REQUIRE(check_bialgebra(H).pass);
    auto S = derive_antipode(H);
    CHECK(S[1] == NcPoly::from_word(F.get(), word_of(1, 5), F->one()));
    NcPoly expect = H.sys().reduce(
        -NcPoly::from_word(F.get(), word_of(1, 5), F->one()) * NcPoly::generator(F.get(), 0));
    CHECK(S[0] == expect);
    int ord = antipode_order(H);
    CHECK(ord > 2);  // S^2(x) = xi^{-1} x: genuinely non-involutive
    CHECK(ord % 2 == 0);
}

TEST_CASE("group algebra: S(g) = g^{N-1}, S^2 = id, filtration constant") {
    auto F = FieldCtx::make(2, {});
    HopfData data;
    data.field = F;
    data.gens = GenSet{{"g", 0}};
    NcPoly g = NcPoly::generator(F.get(), 0);
    data.relations = {NcPoly::from_word(F.get(), word_of(0, 3), F->one()) -
                      NcPoly::unit(F.get())};
    data.grouplike_gens = {0};
    data.grouplike_orders[0] = 3;
    data.coproduct[0] = TensorPoly::tensor(g, g);
    data.counit[0] = F->one();
    HopfPresentation H = HopfPresentation::build(std::move(data));
    REQUIRE(H.dim() == 3);
    derive_antipode(H);
    CHECK(antipode_order(H) == 2);
    CHECK(group_likes(H).size() == 3);
    SkewPrimitiveSpace sp = skew_primitives(H, Word{}, word_of(0));
    CHECK(sp.dim() == 1);  // K(1 - g) only
    FiltrationReport fr = coradical_filtration(H);
    CHECK(fr.exhausts);
    CHECK(fr.dims == std::vector<size_t>{3});
}

TEST_CASE("P_{g,g} of the commutative skew case is spanned by xg") {
    auto F = FieldCtx::make(2, {});
    HopfPresentation H = skew_case(F, 6, F->one(), 0, NcPoly(F.get()), 2);  // A1 shape
    // Delta(xg) = xg (x) g + g (x) xg: translating the primitive x by the
    // group-like g lands in P_{g,g}. Nothing else does.
    SkewPrimitiveSpace sp = skew_primitives(H, word_of(1), word_of(1));
    REQUIRE(sp.dim() == 1);
    NcPoly xg = NcPoly::from_word(F.get(), Word({0, 1}), F->one());
    CHECK((sp.basis[0] == xg || sp.basis[0] == -xg));
}

TEST_CASE("bosonize reproduces the graded skew cases") {
    auto F = FieldCtx::make(2, {3});
    SUBCASE("x in V_g^eps over C_6: graded A3") {
        YDRealization yd;
        yd.group = GroupSpec::cyclic(6);
        yd.basis.push_back({"x", {1}, {F->one()}});
        HopfPresentation H = HopfPresentation::build(bosonize({{2}}, yd, F));
        REQUIRE(H.valid());
        CHECK(H.dim() == 12);
        CHECK(check_bialgebra(H).pass);
        CHECK(H.coproduct(0) ==
              TensorPoly::from_key(F.get(), {word_of(0), Word{}}, F->one()) +
                  TensorPoly::from_key(F.get(), {word_of(1), word_of(0)}, F->one()));
    }
    SUBCASE("x in V_1^chi: graded A2 with gx = xi xg") {
        YDRealization yd;
        yd.group = GroupSpec::cyclic(6);
        yd.basis.push_back({"x", {0}, {F->root(3)}});
        HopfPresentation H = HopfPresentation::build(bosonize({{2}}, yd, F));
        CHECK(H.dim() == 12);
        CHECK(check_bialgebra(H).pass);
        bool found = false;
        for (auto& r : H.sys().rules())
            if (r.lhs == Word({1, 0}) && r.rhs.coeff(Word({0, 1})) == F->root(3)) found = true;
        CHECK(found);
    }
    SUBCASE("trivial realization: tensor-product Hopf algebra") {
        YDRealization yd;
        yd.group = GroupSpec::cyclic(6);
        yd.basis.push_back({"x", {0}, {F->one()}});
        HopfPresentation H = HopfPresentation::build(bosonize({{2}}, yd, F));
        CHECK(H.dim() == 12);
        CHECK(check_bialgebra(H).pass);
        derive_antipode(H);
        CHECK(antipode_order(H) <= 2);
    }
    SUBCASE("incompatible chi(deg) data is rejected") {
        YDRealization yd;
        yd.group = GroupSpec::cyclic(3);
        yd.basis.push_back({"x", {1}, {F->root(3)}});  // self-braiding xi, truncation p
        CHECK_THROWS_AS(bosonize({{2}}, yd, F), Error);
    }
    SUBCASE("semidirect group bosonization") {
        auto F3 = FieldCtx::make(3, {2});
        YDRealization yd;
        yd.group = GroupSpec::semidirect(2, 3, 2);  // g^2 = h^3 = 1, g h g^-1 = h^2
        yd.basis.push_back({"x", {0, 0}, {F3->root(2), F3->one()}});
        HopfPresentation H = HopfPresentation::build(bosonize({{3}}, yd, F3));
        CHECK(H.dim() == 18);
        CHECK(check_bialgebra(H).pass);
    }
}

TEST_CASE("coproduct tails") {
    SUBCASE("omega_0 at p = 2 is x (x) x") {
        auto F = FieldCtx::make(2, {});
        TensorPoly t = coproduct_tail(TailKind::Omega0, F.get(), 0, 1, 2);
        CHECK(t == TensorPoly::from_key(F.get(), {word_of(0), word_of(0)}, F->one()));
    }
    SUBCASE("omega_theta at p = 2, theta = 1 is xg (x) x") {
        auto F = FieldCtx::make(2, {});
        TensorPoly t = coproduct_tail(TailKind::OmegaTheta, F.get(), 0, 1, 2, 1);
        CHECK(t ==
              TensorPoly::from_key(F.get(), {word_of(0) + word_of(1), word_of(0)}, F->one()));
    }
    SUBCASE("omega_0 coefficients at p = 5 are (p-1)!/(i!(p-i)!) mod 5") {
        auto F = FieldCtx::make(5, {});
        TensorPoly t = coproduct_tail(TailKind::Omega0, F.get(), 0, 1, 5);
        CHECK(t.terms().at({word_of(0, 1), word_of(0, 4)}) == F->from_int(1));
        CHECK(t.terms().at({word_of(0, 2), word_of(0, 3)}) == F->from_int(2));
    }
    SUBCASE("theta tail at q = 3 has unit coefficients") {
        auto F = FieldCtx::make(2, {3});
        TensorPoly t = coproduct_tail(TailKind::ThetaQ, F.get(), 0, 1, 3);
        // (q-1)_xi!/((i)_xi!(q-i)_xi!) = 1 for i = 1, 2 at q = 3.
        CHECK(t.terms().at({word_of(0) + word_of(1, 2), word_of(0, 2)}) == F->one());
        CHECK(t.terms().at({word_of(0, 2) + word_of(1), word_of(0)}) == F->one());
    }
}

TEST_CASE("iso_check") {
    auto F = FieldCtx::make(3, {});
    SUBCASE("identity map passes") {
        HopfPresentation B = make_pq_family(PqFamily::B, 3, 2, F->one(), F);
        std::vector<NcPoly> id = {NcPoly::generator(F.get(), 0), NcPoly::generator(F.get(), 1)};
        CHECK(iso_check(B, B, id).pass);
    }
    SUBCASE("cross-family map fails on the commutation relation") {
        HopfPresentation A = make_pq_family(PqFamily::A, 3, 2, F->one(), F);
        HopfPresentation B = make_pq_family(PqFamily::B, 3, 2, F->one(), F);
        std::vector<NcPoly> id = {NcPoly::generator(F.get(), 0), NcPoly::generator(F.get(), 1)};
        IsoReport rep = iso_check(A, B, id);
        CHECK(!rep.pass);
    }
}

TEST_CASE("find_pq_iso witnesses") {
    SUBCASE("lambda = gamma gives a = 0") {
        auto F = FieldCtx::make(2, {}, 2);
        auto w = find_pq_iso(PqFamily::A, 2, 3, F->one(), F->one(), F);
        REQUIRE(w.has_value());
        CHECK(w->a == w->field->zero());
        CHECK(!w->extended);
    }
    SUBCASE("lambda - gamma = 1 over GF(4) finds a = w") {
        auto F = FieldCtx::make(2, {}, 2);
        // a^2 - a + 1 = 0 has the generator as a root: w^2 + w + 1 = 0.
        auto w = find_pq_iso(PqFamily::A, 2, 3, F->one(), F->zero(), F);
        REQUIRE(w.has_value());
        CHECK(w->field->add(w->field->sub(w->field->pow(w->a, 2), w->a), w->field->one()) ==
              w->field->zero());
        CHECK(w->a == F->generator());
    }
    SUBCASE("family B scans b in the prime field") {
        auto F = FieldCtx::make(3, {}, 2);
        auto w = find_pq_iso(PqFamily::B, 3, 2, F->generator(), F->zero(), F);
        REQUIRE(w.has_value());
        CHECK(w->field->pow(w->b, 3) == w->b);
        CHECK(w->b != w->field->zero());
    }
}

TEST_CASE("verify_identity rejects missing parameters") {
    auto F = FieldCtx::make(2, {});
    CHECK_THROWS_AS(verify_identity(LemmaId::AdjointPowerGroup, 2, {}, {}, F), Error);
}
