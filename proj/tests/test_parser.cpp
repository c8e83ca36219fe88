#include <doctest.h>

#include "hopfforge/parser.hpp"

using namespace hopfforge;

namespace {
struct Fixture {
    std::shared_ptr<const FieldCtx> F = FieldCtx::make(2, {3});
    GenSet gens{{"x", 1}, {"g", 0}};
    ExprEnv env{F.get(), &gens, {{"xi", F->root(3)}, {"w", F->generator()}}};
};
}  // namespace

TEST_CASE("expression grammar") {
    Fixture fx;
    NcPoly x = NcPoly::generator(fx.F.get(), 0), g = NcPoly::generator(fx.F.get(), 1);
    CHECK(parse_expr("g*x - xi*x*g", fx.env) ==
          g * x - (x * g).scaled(fx.F->root(3)));
    CHECK(parse_expr("g^6 - 1", fx.env) == g.pow(6) - NcPoly::unit(fx.F.get()));
    CHECK(parse_expr("(g - g^2)*x", fx.env) == (g - g.pow(2)) * x);
    CHECK(parse_expr("-x", fx.env) == -x);
    CHECK(parse_expr("2", fx.env) == NcPoly(fx.F.get()));  // 2 = 0 in char 2
    CHECK(parse_expr("xi^3", fx.env) == NcPoly::unit(fx.F.get()));
}

TEST_CASE("parse errors are loud") {
    Fixture fx;
    CHECK_THROWS_AS(parse_expr("g x", fx.env), Error);       // juxtaposition
    CHECK_THROWS_AS(parse_expr("q*x", fx.env), Error);       // unknown identifier
    CHECK_THROWS_AS(parse_expr("g^", fx.env), Error);
    CHECK_THROWS_AS(parse_expr("(g", fx.env), Error);
    CHECK_THROWS_AS(parse_expr("", fx.env), Error);
}

TEST_CASE("tensor expressions") {
    Fixture fx;
    NcPoly x = NcPoly::generator(fx.F.get(), 0), g = NcPoly::generator(fx.F.get(), 1);
    NcPoly one = NcPoly::unit(fx.F.get());
    TensorPoly t = parse_tensor_expr("x(#)1 + g(#)x", fx.env);
    CHECK(t == TensorPoly::tensor(x, one) + TensorPoly::tensor(g, x));
    TensorPoly t2 = parse_tensor_expr("x*g(#)x - (g - 1)(#)1", fx.env);
    CHECK(t2 == TensorPoly::tensor(x * g, x) - TensorPoly::tensor(g - one, one));
    CHECK_THROWS_AS(parse_tensor_expr("x + g", fx.env), Error);  // missing separator
}

TEST_CASE("scalar expressions") {
    Fixture fx;
    CHECK(parse_scalar("xi^2 + xi + 1", fx.env) == fx.F->zero());
    CHECK(parse_scalar("1", fx.env) == fx.F->one());
    CHECK(parse_scalar("w", fx.env) == fx.F->generator());
    CHECK_THROWS_AS(parse_scalar("x", fx.env), Error);  // generators not allowed
}
