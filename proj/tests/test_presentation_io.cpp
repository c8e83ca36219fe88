#include <doctest.h>

#include "hopfforge/presentation_io.hpp"

using namespace hopfforge;

namespace {

nlohmann::json taft_json() {
    return nlohmann::json::parse(R"({
        "field": {"p": 2, "orders": [3]},
        "generators": [
            {"name": "x", "weight": 1},
            {"name": "g", "weight": 0, "grouplike": true, "order": 3}
        ],
        "relations": ["g*x - xi*x*g", "x^3"],
        "coproduct": {"x": "x(#)1 + g(#)x"},
        "counit": {"x": "0"}
    })");
}

}  // namespace

TEST_CASE("load a Taft presentation from JSON") {
    HopfData data = load_presentation(taft_json());
    HopfPresentation H = HopfPresentation::build(std::move(data));
    REQUIRE(H.valid());
    CHECK(H.dim() == 9);
    CHECK(check_bialgebra(H).pass);
    derive_antipode(H);
    CHECK(antipode_order(H) == 6);  // 2q for the Taft algebra at q = 3
}

TEST_CASE("save/load round trip preserves the quotient") {
    HopfData data = load_presentation(taft_json());
    nlohmann::ordered_json saved = save_presentation(data);
    HopfData reloaded = load_presentation(saved);
    HopfPresentation H1 = HopfPresentation::build(std::move(data));
    HopfPresentation H2 = HopfPresentation::build(std::move(reloaded));
    CHECK(H1.dim() == H2.dim());
    CHECK(H1.basis().words == H2.basis().words);
}

TEST_CASE("missing coproduct assignments are rejected") {
    nlohmann::json j = taft_json();
    j.erase("coproduct");
    CHECK_THROWS_AS(load_presentation(j), Error);
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_AS(load_presentation_file("/nonexistent/path.json"), Error);
}
