#include <doctest.h>

#include <random>

#include "hopfforge/rewrite.hpp"

using namespace hopfforge;

namespace {

// g^3 -> 1, gx -> xg over GF(3): the commutative toy quotient.
RewriteSystem toy(std::shared_ptr<const FieldCtx>& F) {
    F = FieldCtx::make(3, {2});
    GenSet gens{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    return RewriteSystem::orient(F.get(), gens,
                                 {g.pow(3) - NcPoly::unit(F.get()), g * x - x * g});
}

}  // namespace

TEST_CASE("orientation picks the strict maximum") {
    std::shared_ptr<const FieldCtx> F;
    RewriteSystem sys = toy(F);
    REQUIRE(sys.rules().size() == 2);
    CHECK(sys.rules()[0].lhs == Word({1, 1, 1}));  // g^3
    CHECK(sys.rules()[1].lhs == Word({1, 0}));     // gx
}

TEST_CASE("weighted orientation: gy -> yg + lower-weight tail") {
    // gy = yg + xg^2 + xg + g^2 + g orientable because weight(y) = 2 dominates.
    auto F = FieldCtx::make(2, {});
    GenSet gens{{"y", 2}, {"x", 1}, {"g", 0}};
    NcPoly y = NcPoly::generator(F.get(), 0), x = NcPoly::generator(F.get(), 1),
           g = NcPoly::generator(F.get(), 2);
    NcPoly rel = g * y - y * g - (x * g.pow(2) + x * g + g.pow(2) + g);
    RewriteSystem sys = RewriteSystem::orient(F.get(), gens, {rel});
    REQUIRE(sys.rules().size() == 1);
    CHECK(sys.rules()[0].lhs == Word({2, 0}));  // gy
    CHECK(sys.rules()[0].rhs.term_count() == 5);
}

TEST_CASE("affine interpretation orients gh -> h^2 g") {
    auto F = FieldCtx::make(2, {});
    GenSet gens{{"h", 0}, {"g", 0}};
    NcPoly h = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    NcPoly rel = g * h - h * h * g;
    // WLL compares by length, so it orients the long side down: h^2 g -> gh.
    RewriteSystem wll = RewriteSystem::orient(F.get(), gens, {rel});
    CHECK(wll.rules()[0].lhs == Word({0, 0, 1}));
    // [g](n) = 3n, [h](n) = n+1 certifies gh > h^2 g, the convention the
    // group-ordered bases x^a h^b g^c need.
    RewriteSystem sys =
        RewriteSystem::orient(F.get(), gens, {rel}, ReductionOrder::affine({1, 3}, {1, 1}));
    REQUIRE(sys.rules().size() == 1);
    CHECK(sys.rules()[0].lhs == Word({1, 0}));  // gh

    SUBCASE("incomparable words fail loudly") {
        NcPoly bad = h * h - g;  // (1,2) vs (3,1): incomparable under the interpretation
        CHECK_THROWS_AS(
            RewriteSystem::orient(F.get(), gens, {bad}, ReductionOrder::affine({1, 3}, {1, 1})),
            UnorientableError);
    }
    SUBCASE("a relation reducing to a nonzero scalar fails loudly") {
        NcPoly x = h;
        CHECK_THROWS_AS(
            RewriteSystem::orient(F.get(), gens, {x - NcPoly::unit(F.get()), x}),
            UnorientableError);
    }
}

TEST_CASE("reduce") {
    std::shared_ptr<const FieldCtx> F;
    RewriteSystem sys = toy(F);
    // g^3 x -> x
    NcPoly r = sys.reduce_word(Word({1, 1, 1, 0}));
    CHECK(r == NcPoly::generator(F.get(), 0));
    SUBCASE("two twisted steps") {
        auto F4 = FieldCtx::make(2, {3});
        GenSet gens{{"x", 1}, {"g", 0}};
        NcPoly x = NcPoly::generator(F4.get(), 0), g = NcPoly::generator(F4.get(), 1);
        Fq xi = F4->root(3);
        RewriteSystem tw =
            RewriteSystem::orient(F4.get(), gens, {g * x - (x * g).scaled(xi)});
        NcPoly out = tw.reduce(g * x * x);
        // gx^2 -> xi^2 x^2 g
        CHECK(out == (x * x * g).scaled(F4->pow(xi, 2)));
    }
    SUBCASE("x^2 -> x at lambda = 1") {
        auto F2 = FieldCtx::make(2, {});
        GenSet gens{{"x", 1}};
        NcPoly x = NcPoly::generator(F2.get(), 0);
        RewriteSystem sys2 = RewriteSystem::orient(F2.get(), gens, {x * x - x});
        CHECK(sys2.reduce(x * x) == x);
        CHECK(sys2.reduce(x.pow(5)) == x);
    }
}

TEST_CASE("reduce is idempotent") {
    std::shared_ptr<const FieldCtx> F;
    RewriteSystem sys = toy(F);
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Word w;
        int len = static_cast<int>(rng() % 8);
        for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(rng() % 2));
        NcPoly once = sys.reduce_word(w);
        CHECK(sys.reduce(once) == once);
    }
}

TEST_CASE("ambiguity enumeration") {
    std::shared_ptr<const FieldCtx> F;
    RewriteSystem sys = toy(F);
    auto ambs = sys.ambiguities();
    // g^3 self-overlaps at shifts 1 and 2, and overlaps gx at g^3 x.
    bool found_g3x = false, found_self = false;
    for (auto& a : ambs) {
        if (a.word == Word({1, 1, 1, 0})) found_g3x = true;
        if (a.word == Word({1, 1, 1, 1}) || a.word == Word({1, 1, 1, 1, 1})) found_self = true;
    }
    CHECK(found_g3x);
    CHECK(found_self);

    SUBCASE("self-overlap of x^2") {
        auto F2 = FieldCtx::make(2, {});
        GenSet gens{{"x", 1}};
        NcPoly x = NcPoly::generator(F2.get(), 0);
        RewriteSystem sys2 = RewriteSystem::orient(F2.get(), gens, {x * x - x});
        auto a2 = sys2.ambiguities();
        REQUIRE(a2.size() == 1);
        CHECK(a2[0].word == Word({0, 0, 0}));  // x^3
    }
}

TEST_CASE("confluence and its failure") {
    // gx = xi x g with x^p = lambda x: resolvable iff lambda (xi - xi^p) = 0.
    auto check_a2 = [](int p, int q, int lambda) {
        auto F = FieldCtx::make(p, {q});
        GenSet gens{{"x", 1}, {"g", 0}};
        NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
        RewriteSystem sys = RewriteSystem::orient(
            F.get(), gens,
            {g.pow(p * q) - NcPoly::unit(F.get()), g * x - (x * g).scaled(F->root(q)),
             x.pow(p) - x.scaled(F->from_int(lambda))});
        return sys.check_confluence();
    };
    ConfluenceReport bad = check_a2(2, 3, 1);
    CHECK(!bad.all_resolvable());
    const ConfluenceEntry* obs = bad.first_obstruction();
    REQUIRE(obs != nullptr);
    CHECK(obs->amb.word == Word({1, 0, 0}));  // the overlap g x^2
    // obstruction proportional to (xi - xi^2) x, times the trailing g.
    REQUIRE(obs->obstruction.term_count() == 1);
    CHECK(obs->obstruction.terms().begin()->first == Word({0, 1}));  // x g
    auto F4 = FieldCtx::make(2, {3});
    Fq xi = F4->root(3);
    Fq diff = F4->sub(xi, F4->pow(xi, 2));
    CHECK((obs->obstruction.terms().begin()->second == diff ||
           obs->obstruction.terms().begin()->second == F4->neg(diff)));

    CHECK(check_a2(2, 3, 0).all_resolvable());
    CHECK(check_a2(3, 2, 1).all_resolvable());  // xi = -1, xi^3 = xi in GF(3)
}

TEST_CASE("normal words: finite enumeration and counting") {
    std::shared_ptr<const FieldCtx> F;
    SUBCASE("A1-style basis of 12") {
        auto F2 = FieldCtx::make(2, {});
        GenSet gens{{"x", 1}, {"g", 0}};
        NcPoly x = NcPoly::generator(F2.get(), 0), g = NcPoly::generator(F2.get(), 1);
        RewriteSystem sys = RewriteSystem::orient(
            F2.get(), gens,
            {g.pow(6) - NcPoly::unit(F2.get()), g * x - x * g, x * x - x});
        NormalBasis nb = sys.normal_words();
        REQUIRE(nb.finite);
        CHECK(nb.count == 12);  // x^j g^i, j < 2, i < 6
        // enumerated by length then lex
        CHECK(nb.words[0] == Word{});
        CHECK(nb.words[1] == Word({0}));
        CHECK(nb.words[2] == Word({1}));
    }
    SUBCASE("infinite language is detected with a witness") {
        auto F2 = FieldCtx::make(2, {});
        GenSet gens{{"x", 1}, {"g", 0}};
        NcPoly x = NcPoly::generator(F2.get(), 0), g = NcPoly::generator(F2.get(), 1);
        RewriteSystem sys = RewriteSystem::orient(F2.get(), gens, {g * x - x * g});
        NormalBasis nb = sys.normal_words();
        CHECK(!nb.finite);
        CHECK(!nb.cycle_witness.empty());
    }
}

TEST_CASE("confluent reduction is strategy-independent") {
    // For a confluent system, reducing with randomized rule-application order
    // must give the same normal form.
    auto F = FieldCtx::make(2, {3});
    GenSet gens{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    RewriteSystem sys = RewriteSystem::orient(
        F.get(), gens,
        {g.pow(6) - NcPoly::unit(F.get()), g * x - (x * g).scaled(F->root(3)), x.pow(2)});
    REQUIRE(sys.check_confluence().all_resolvable());

    // Randomized single-step reducer.
    std::mt19937 rng(99);
    auto random_reduce = [&](Word w) {
        NcPoly acc(F.get());
        std::vector<std::pair<Word, Fq>> work{{w, F->one()}};
        while (!work.empty()) {
            auto [cur, coeff] = work.back();
            work.pop_back();
            std::vector<std::pair<size_t, size_t>> redexes;  // (rule, pos)
            for (size_t ri = 0; ri < sys.rules().size(); ++ri) {
                const Word& lhs = sys.rules()[ri].lhs;
                for (size_t at = 0; at + lhs.size() <= cur.size(); ++at)
                    if (cur.compare(at, lhs.size(), lhs) == 0) redexes.emplace_back(ri, at);
            }
            if (redexes.empty()) {
                acc.add_term(cur, coeff);
                continue;
            }
            auto [ri, at] = redexes[rng() % redexes.size()];
            const Rule& r = sys.rules()[ri];
            for (auto& [m, c] : r.rhs.terms())
                work.emplace_back(cur.substr(0, at) + m + cur.substr(at + r.lhs.size()),
                                  F->mul(coeff, c));
        }
        return acc;
    };
    std::vector<Word> samples = {Word({1, 1, 1, 1, 1, 1, 0}), Word({1, 0, 1, 0}),
                                 Word({0, 1, 1, 0, 1})};
    for (auto& w : samples) {
        NcPoly expect = sys.reduce_word(w);
        for (int t = 0; t < 200; ++t) REQUIRE(random_reduce(w) == expect);
    }
}

TEST_CASE("completion collapses an inconsistent system") {
    // A2 at (2,3) with lambda = 1: completion drives the count below 12.
    auto F = FieldCtx::make(2, {3});
    GenSet gens{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
    RewriteSystem sys = RewriteSystem::orient(
        F.get(), gens,
        {g.pow(6) - NcPoly::unit(F.get()), g * x - (x * g).scaled(F->root(3)), x.pow(2) - x});
    REQUIRE(!sys.check_confluence().all_resolvable());
    auto done = sys.complete(16);
    CHECK(done.confluent);
    CHECK(!done.added.empty());
    NormalBasis nb = done.system.normal_words();
    REQUIRE(nb.finite);
    CHECK(nb.count < 12);

    SUBCASE("already-confluent input is unchanged") {
        RewriteSystem ok = RewriteSystem::orient(
            F.get(), gens,
            {g.pow(6) - NcPoly::unit(F.get()), g * x - (x * g).scaled(F->root(3)), x.pow(2)});
        auto done2 = ok.complete(16);
        CHECK(done2.confluent);
        CHECK(done2.added.empty());
        CHECK(done2.system.rules().size() == ok.rules().size());
    }
}

TEST_CASE("xi-binomial theorem in the twisted plane") {
    // With yx = xi xy: (x+y)^n = sum C(n,i)_xi x^i y^(n-i).
    auto F = FieldCtx::make(2, {3});
    GenSet gens{{"x", 1}, {"y", 1}};
    NcPoly x = NcPoly::generator(F.get(), 0), y = NcPoly::generator(F.get(), 1);
    Fq xi = F->root(3);
    RewriteSystem sys =
        RewriteSystem::orient(F.get(), gens, {y * x - (x * y).scaled(xi)});
    for (long n = 0; n <= 6; ++n) {
        NcPoly lhs = sys.reduce((x + y).pow(n));
        NcPoly rhs(F.get());
        for (long i = 0; i <= n; ++i)
            rhs += (x.pow(i) * y.pow(n - i)).scaled(xi_binomial(*F, n, i, xi));
        REQUIRE(lhs == rhs);
    }
}
