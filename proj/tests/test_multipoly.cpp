#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc/catalog.hpp"
#include "qc/parse.hpp"
#include "qc/point.hpp"

#include <random>
#include <set>

using namespace qc;

namespace {

Poly<Cyclo> random_homogeneous(std::mt19937_64& rng, int d, int terms) {
    auto r = standard_ring();
    auto monos = monomials_of_degree(r, d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> c(-6, 6), k(0, 4);
    Poly<Cyclo> p(r);
    for (int i = 0; i < terms; ++i) p += Poly<Cyclo>::term(r, monos[pick(rng)], Cyclo(c(rng)) * Cyclo::zeta_pow(k(rng)));
    return p;
}

Poly<Cyclo> P(const std::string& s) { return parse_poly(s); }

std::set<std::string> support(const Poly<Cyclo>& p) {
    std::set<std::string> s;
    for (const auto& [m, c] : p.terms()) s.insert(mono_str(m, *p.ring()));
    return s;
}

}  // namespace

TEST_CASE("parse the quartic string") {
    auto Q = parse_poly(kNewQuarticText);
    CHECK(Q.is_homogeneous());
    CHECK(Q.degree() == 4);
    CHECK(support(Q) == std::set<std::string>{"x^4", "x^2*z*w", "x*y*z^2", "y^3*z", "y*w^3", "z^2*w^2", "x*y^2*w"});
}

TEST_CASE("parse the quintic string") {
    auto S = parse_poly(kNewQuinticText);
    CHECK(S.is_homogeneous());
    CHECK(S.degree() == 5);
    Mono z5 = Mono::var(2, 5);
    CHECK(S.coeff(z5) == Cyclo(Rational(-136, 3)) + golden_alpha() * Cyclo(Rational(220, 3)));
}

TEST_CASE("parse edge cases and errors") {
    CHECK(P("0").is_zero_poly());
    CHECK(P("x*y-y*x").is_zero_poly());
    CHECK(P("2*(x+y)^2") == P("2*x^2+4*x*y+2*y^2"));
    CHECK_THROWS_AS(P("x y"), ParseError);
    CHECK_THROWS_AS(P("2x"), ParseError);
    CHECK_THROWS_AS(P("x+q"), ParseError);
    CHECK_THROWS_AS(P("(x+y"), ParseError);
    try {
        P("x+$");
        CHECK(false);
    } catch (const ParseError& err) {
        CHECK(err.position() == 2);
    }
}

TEST_CASE("print and parse round trip on the catalog") {
    for (const auto& name : catalog_names()) {
        auto F = catalog_get(name).F;
        std::string s = print_poly(F);
        CHECK(parse_poly(s) == F);
        CHECK(print_poly(parse_poly(s)) == s);
    }
}

TEST_CASE("term order invariants") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto p = random_homogeneous(rng, 3, 8) + random_homogeneous(rng, 2, 4);
        const auto& terms = p.terms();
        for (std::size_t i = 1; i < terms.size(); ++i) REQUIRE(p.ring()->cmp(terms[i - 1].first, terms[i].first) > 0);
        for (const auto& [m, c] : terms) REQUIRE(!c.is_zero());
    }
}

TEST_CASE("partial derivative examples") {
    CHECK(partial(P("x^4"), 0) == P("4*x^3"));
    auto Q = parse_poly(kNewQuarticText);
    for (const auto& pt : {std::vector<Cyclo>(4, Cyclo(1)), std::vector<Cyclo>{0, 0, 1, 0}})
        for (const auto& d : jacobian(Q)) CHECK(evaluate(d, pt).is_zero());
}

TEST_CASE("Euler relation and Hessian symmetry on random polynomials") {
    std::mt19937_64 rng(20240605);
    auto r = standard_ring();
    for (int t = 0; t < 100; ++t) {
        int d = 2 + t % 4;
        auto p = random_homogeneous(rng, d, 6);
        Poly<Cyclo> euler(r);
        auto J = jacobian(p);
        for (int i = 0; i < 4; ++i) euler += Poly<Cyclo>::var(r, i) * J[i];
        REQUIRE(euler == p.scaled(Cyclo(d)));
        auto H = hessian(p);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                REQUIRE(H[i][j] == H[j][i]);
                REQUIRE(partial(partial(p, i), j) == partial(partial(p, j), i));
            }
        // Hessian rows contract with x to (d-1) times the gradient
        for (int i = 0; i < 4; ++i) {
            Poly<Cyclo> row(r);
            for (int j = 0; j < 4; ++j) row += H[i][j] * Poly<Cyclo>::var(r, j);
            REQUIRE(row == J[i].scaled(Cyclo(d - 1)));
        }
    }
}

TEST_CASE("Hessian annihilates singular points") {
    auto Q = catalog_get("new_quartic").F;
    for (const auto& pt : {std::vector<Cyclo>(4, Cyclo(1)), std::vector<Cyclo>{0, 0, 1, 0}}) {
        auto H = evaluate_matrix(hessian(Q), pt);
        for (int i = 0; i < 4; ++i) {
            Cyclo s(0);
            for (int j = 0; j < 4; ++j) s += H[i][j] * pt[j];
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("minors") {
    std::vector<std::vector<Cyclo>> m{{1, 2}, {3, 4}};
    auto m1 = minors(m, 1);
    CHECK(m1 == std::vector<Cyclo>{1, 2, 3, 4});
    CHECK(minors(m, 2) == std::vector<Cyclo>{Cyclo(-2)});
    auto Q = catalog_get("new_quartic").F;
    auto m3 = minors(evaluate_matrix(hessian(Q), std::vector<Cyclo>(4, Cyclo(1))), 3);
    CHECK(m3.size() == 16);
    CHECK(std::any_of(m3.begin(), m3.end(), [](const Cyclo& c) { return !c.is_zero(); }));
    auto S = catalog_get("new_quintic").F;
    auto s3 = minors(evaluate_matrix(hessian(S), std::vector<Cyclo>(4, Cyclo(1))), 3);
    CHECK(std::all_of(s3.begin(), s3.end(), [](const Cyclo& c) { return c.is_zero(); }));
    CHECK(k_subsets(4, 2).front() == std::vector<int>{0, 1});
    CHECK(k_subsets(4, 2).back() == std::vector<int>{2, 3});
}

TEST_CASE("restriction and dehomogenization") {
    auto Q = catalog_get("new_quartic").F;
    auto R = restrict_to_plane(Q, P("y"));
    auto a = "(e^3+e^2)";
    CHECK(R == P(std::string("x^4+(2-4*") + a + ")*x^2*z*w+(5-8*" + a + ")*z^2*w^2"));
    auto c = P(std::string("x^2+(1-2*") + a + ")*z*w");
    CHECK(R == c * c);
    auto D = dehomogenize(P("x^4+w^4"), 3);
    CHECK(D.degree() == 4);
    CHECK(D.ring()->nvars() == 3);
    CHECK(print_poly(D) == "x^4+1");
    CHECK(restrict_to_plane(P("x^2+y^2+z^2+w^2"), P("x")) == P("y^2+z^2+w^2"));
    CHECK_THROWS(restrict_to_plane(P("x^2"), P("x^2")));
}

TEST_CASE("projective points normalize the last nonzero coordinate") {
    RatPoint p(std::vector<Cyclo>{2, 4, 6, 2});
    CHECK(p.c[3] == Cyclo(1));
    CHECK(p == RatPoint(std::vector<Cyclo>{1, 2, 3, 1}));
    RatPoint q(std::vector<Cyclo>{0, Cyclo::zeta(), 0, 0});
    CHECK(q.c[1] == Cyclo(1));
    CHECK_THROWS(RatPoint(std::vector<Cyclo>(4, Cyclo(0))));
}
