#include <doctest.h>

#include "support.hpp"
#include "valtree/keypoly.hpp"

using namespace testing;

TEST_CASE("q_expand examples") {
    auto e = q_expand(P("y^3+x"), P("y^2-x^3"));
    REQUIRE(e.coeffs.size() == 2);
    CHECK(e.coeffs[0] == P("x^3*y+x"));
    CHECK(e.coeffs[1] == P("y"));
    e = q_expand(P("(y^2-x^3)^2"), P("y^2-x^3"));
    REQUIRE(e.coeffs.size() == 3);
    CHECK(e.coeffs[0].is_zero());
    CHECK(e.coeffs[1].is_zero());
    CHECK(e.coeffs[2] == P("1"));
    e = q_expand(P("x^5"), P("y-x"));
    REQUIRE(e.coeffs.size() == 1);
    CHECK(e.coeffs[0] == P("x^5"));
    CHECK_THROWS_AS(q_expand(P("y"), P("2*y")), Error);
}

TEST_CASE("q_expand reconstructs random inputs") {
    Rng rng(21);
    for (int n = 0; n < 300; ++n) {
        const BaseField f = n % 4 == 0 ? BaseField::prime(7) : BaseField();
        BivarPoly g = random_poly(rng, f, 8, 6, 10);
        BivarPoly Q = BivarPoly::y(static_cast<int>(rng.uniform(1, 4))) + random_poly(rng, f, 0, 5, 10);
        auto e = q_expand(g, Q);
        CHECK(e.reconstruct() == g);
        CHECK(e.base == Q);
        REQUIRE(!e.coeffs.empty());
        CHECK(!e.coeffs.back().is_zero());
        for (const auto& c : e.coeffs) CHECK(c.degree() < Q.degree());
    }
}

TEST_CASE("epsilon_data examples") {
    auto d = epsilon_data(chain(R"({"field":"Q","swap_xy":false,"chain":[{"Q":"y","beta":"3/2"}],"omega":null})"),
                          P("y^2-x^3"));
    CHECK(d.epsilon == Value(mpq_class(3, 2)));
    CHECK(d.I == std::set<int>{1, 2});
    CHECK(d.b == 1);
    const auto root = root_valuation();
    d = epsilon_data(root, P("y"));
    CHECK(d.epsilon == Value(1));
    CHECK(d.I == std::set<int>{1});
    CHECK(d.b == 1);
    d = epsilon_data(root, P("y^2-x^2"));
    CHECK(d.epsilon == Value(1));
    CHECK(d.I == std::set<int>{1, 2});
    CHECK(d.b == 1);
}

TEST_CASE("epsilon_data rejects constants") {
    for (const auto& nu : bundled_chains()) {
        try {
            epsilon_data(nu, BivarPoly(nu.field().from_int(3)));
            FAIL("constant accepted");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ConstantPolynomial);
        }
    }
}

TEST_CASE("epsilon of a monic linear polynomial is its value") {
    Rng rng(22);
    for (const auto& nu : bundled_chains()) {
        for (int n = 0; n < 20; ++n) {
            BivarPoly lin = BivarPoly::y() + random_poly(rng, nu.field(), 0, 5, 10);
            BivarPoly Q = to_ambient(nu, lin);
            auto d = epsilon_data(nu, Q);
            CHECK(d.epsilon == evaluate(nu, Q));
            CHECK(d.I == std::set<int>{1});
            CHECK(d.b == 1);
        }
    }
}

TEST_CASE("epsilon of a key polynomial grows past its truncation") {
    for (const auto& nu : bundled_chains()) {
        for (int i = 1; i < nu.length(); ++i) {
            const BivarPoly Q = i < nu.size() ? nu.key(i + 1) : *nu.omega();
            const Value beta = i < nu.size() ? nu.beta(i + 1) : Value::infinity();
            const MacLaneChain lower = truncate(nu, i);
            const BivarPoly amb = to_ambient(nu, Q);
            REQUIRE(beta > evaluate(lower, amb));
            CAPTURE(chain_to_text(nu));
            CHECK(epsilon_data(lower, amb).epsilon < epsilon_data(nu, amb).epsilon);
        }
    }
}

TEST_CASE("epsilon_data invariants on random polynomials") {
    Rng rng(23);
    for (const auto& nu : bundled_chains()) {
        for (int n = 0; n < 30; ++n) {
            BivarPoly P0 = random_poly(rng, nu.field(), 6, 6, 10);
            if (to_working(nu, P0).degree() < 1) continue;
            auto d = epsilon_data(nu, P0);
            REQUIRE(!d.I.empty());
            CHECK(d.b == *d.I.begin());
            const BivarPoly w = to_working(nu, P0);
            for (int b : d.I) {
                const Value vb = evaluate(nu, to_ambient(nu, hasse_derivative(w, b)));
                if (d.epsilon.is_finite()) CHECK((evaluate(nu, P0) - vb) / mpq_class(b) == d.epsilon);
            }
        }
    }
}
