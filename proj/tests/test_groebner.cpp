#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc/catalog.hpp"
#include "qc/roots.hpp"
#include "qc/singcert.hpp"

#include <random>

using namespace qc;

namespace {

Poly<Cyclo> P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

std::vector<Poly<Cyclo>> random_ideal(std::mt19937_64& rng, const RingPtr& r) {
    std::uniform_int_distribution<int> c(-3, 3), deg(1, 2), ngen(2, 3), nterm(2, 4);
    const int n = r->nvars();
    std::vector<Poly<Cyclo>> gens;
    int k = ngen(rng);
    for (int g = 0; g < k; ++g) {
        Poly<Cyclo> p(r);
        int t = nterm(rng);
        for (int i = 0; i < t; ++i) {
            Mono m;
            int d = deg(rng);
            for (int j = 0; j < d; ++j) m = m * Mono::var(std::uniform_int_distribution<int>(0, n - 1)(rng));
            Cyclo a(c(rng));
            if (i == 0 && a.is_zero()) a = Cyclo(1);
            p += Poly<Cyclo>::term(r, m, a);
        }
        p += Poly<Cyclo>(r, Cyclo(c(rng)));
        if (!p.is_zero_poly()) gens.push_back(p);
    }
    return gens;
}

}  // namespace

TEST_CASE("small bases") {
    auto r = make_ring({"x", "y"});
    auto g = buchberger<Cyclo>({P("x", r), P("x", r)}, r);
    REQUIRE(g.basis.size() == 1);
    CHECK(g.basis[0] == P("x", r));

    auto lex = make_ring({"y", "x"}, Order::Lex);
    auto h = buchberger<Cyclo>({P("x-1", lex), P("y-x", lex)}, lex);
    REQUIRE(h.basis.size() == 2);
    CHECK(h.basis[0] == P("x-1", lex));
    CHECK(h.basis[1] == P("y-1", lex));

    auto z = buchberger<Cyclo>({Poly<Cyclo>(r)}, r);
    CHECK(z.basis.empty());
    CHECK(buchberger<Cyclo>({P("x", r), P("x-1", r)}, r).is_unit());
}

TEST_CASE("normal forms and membership") {
    auto r = make_ring({"x", "y"});
    auto g = buchberger<Cyclo>({P("x", r)}, r);
    CHECK(normal_form(P("x^2", r), g).is_zero_poly());
    CHECK(normal_form(P("x^2+y", r), g) == P("y", r));
    auto gens = std::vector<Poly<Cyclo>>{P("x^2-y", r), P("x*y-1", r)};
    auto G = buchberger(gens, r);
    for (const auto& f : gens) CHECK(is_member(f, G));
    CHECK(!is_member(P("1", r), G));
}

TEST_CASE("zero-dimensional analysis") {
    auto r = make_ring({"x", "y"});
    auto s = zero_dim_analyze(buchberger<Cyclo>({P("x^2", r), P("y", r)}, r));
    CHECK(s.degree == 2);
    REQUIRE(s.std_monos.size() == 2);
    CHECK(s.std_monos[0] == Mono{});
    CHECK(s.std_monos[1] == Mono::var(0));
    CHECK_THROWS_AS(zero_dim_analyze(buchberger<Cyclo>({P("x^2", r)}, r)), NotZeroDimensional);

    auto rad = radical_zero_dim(s);
    REQUIRE(rad.basis.size() == 2);
    CHECK(zero_dim_analyze(rad).degree == 1);
    CHECK(is_member(P("x", r), rad));
}

TEST_CASE("quartic Jacobian ideal in the chart x=1") {
    auto Q = catalog_get("new_quartic").F;
    auto gens = jacobian_ideal_chart(Q, 0);
    auto G = buchberger(gens);
    CHECK(satisfies_s_criterion(G));
    CHECK(is_reduced(G));
    auto s = zero_dim_analyze(G);
    CHECK(s.degree > 0);
    for (const auto& f : gens) CHECK(is_member(f, G));
}

TEST_CASE("singular scheme degrees") {
    auto Q = singular_scheme(catalog_get("new_quartic").F);
    CHECK(Q.zero_dim);
    CHECK(Q.tau_total == 16);
    CHECK(Q.n_points == 16);
    CHECK(Q.points.size() == 16);
    CHECK(Q.tower_degree == 0);

    auto S = singular_scheme(catalog_get("new_quintic").F);
    CHECK(S.tau_total == 30);
    CHECK(S.n_points == 15);
    CHECK(S.tower_degree == 0);
}

TEST_CASE("point extraction") {
    auto r = make_ring({"x", "y"});
    auto s = zero_dim_analyze(buchberger<Cyclo>({P("x^2-2*x", r), P("y-x", r)}, r));
    auto sh = shape_position(s, 1);
    CHECK(sh.g.degree() == 2);
    auto roots = peel_linear_factors(sh.g).roots;
    std::set<std::pair<std::string, std::string>> pts;
    for (const auto& t : roots) pts.insert({sh.h[0](t).str(), sh.h[1](t).str()});
    CHECK(pts == std::set<std::pair<std::string, std::string>>{{"0", "0"}, {"2", "2"}});

    // e = (e^3)^2, so x^2 - e has two Q(e)-rational roots
    auto r1 = make_ring({"x"});
    auto s1 = zero_dim_analyze(buchberger<Cyclo>({P("x^2-e", r1)}, r1));
    auto sh1 = shape_position(s1, 1);
    auto pe = peel_linear_factors(sh1.g);
    CHECK(pe.roots.size() == 2);
    CHECK(pe.residual.degree() == 0);
    for (const auto& t : pe.roots) CHECK(sh1.h[0](t) * sh1.h[0](t) == Cyclo::zeta());

    // x^2 - 2 stays irreducible and lands in a degree-2 tower
    auto s2 = zero_dim_analyze(buchberger<Cyclo>({P("x^2-2", r1)}, r1));
    auto pe2 = peel_linear_factors(shape_position(s2, 1).g);
    CHECK(pe2.roots.empty());
    CHECK(pe2.residual.degree() == 2);
}

TEST_CASE("extracted singular points satisfy every generator") {
    auto F = catalog_get("new_quartic").F;
    auto Z = singular_scheme(F);
    auto J = jacobian(F);
    for (const auto& p : Z.points) {
        REQUIRE(evaluate(F, p.c).is_zero());
        for (const auto& d : J) REQUIRE(evaluate(d, p.c).is_zero());
    }
}

TEST_CASE("Groebner contract on random ideals") {
    std::mt19937_64 rng(20240605);
    auto grevlex = make_ring({"x", "y", "z"});
    auto lex = make_ring({"x", "y", "z"}, Order::Lex);
    int ideals = 0;
    for (int t = 0; t < 120; ++t) {
        auto gens = random_ideal(rng, grevlex);
        if (gens.empty()) continue;
        auto G = buchberger(gens, grevlex);
        REQUIRE(satisfies_s_criterion(G));
        REQUIRE(is_reduced(G));
        for (const auto& f : gens) REQUIRE(is_member(f, G));

        std::vector<Poly<Cyclo>> lg;
        for (const auto& f : gens) lg.push_back(f.in_ring(lex));
        auto L = buchberger(lg, lex);
        REQUIRE(satisfies_s_criterion(L));
        // membership agrees between the two orders
        auto probe = random_ideal(rng, grevlex);
        for (const auto& f : probe) {
            Poly<Cyclo> pr = f * gens[0] + f;
            REQUIRE(is_member(pr, G) == is_member(pr.in_ring(lex), L));
            REQUIRE(is_member(f * gens[0], G));
        }
        // deterministic output
        REQUIRE(buchberger(gens, grevlex).basis == G.basis);
        ++ideals;
    }
    CHECK(ideals >= 100);
}

TEST_CASE("radical idempotence on random zero-dimensional ideals") {
    std::mt19937_64 rng(99);
    auto r = make_ring({"x", "y"});
    std::uniform_int_distribution<int> c(-3, 3);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        // (x - a)^2 (x - b), (y - c x - d)^k: non-reduced in general
        Poly<Cyclo> x = Poly<Cyclo>::var(r, 0), y = Poly<Cyclo>::var(r, 1);
        Poly<Cyclo> a(r, Cyclo(c(rng))), b(r, Cyclo(c(rng))), cc(r, Cyclo(c(rng))), d(r, Cyclo(c(rng)));
        Poly<Cyclo> f = (x - a) * (x - a) * (x - b);
        Poly<Cyclo> g = y - cc * x - d;
        g = g * g;
        auto s = zero_dim_analyze(buchberger<Cyclo>({f, g}, r));
        auto R1 = radical_zero_dim(s);
        auto s1 = zero_dim_analyze(R1);
        auto R2 = radical_zero_dim(s1);
        REQUIRE(R2.basis == R1.basis);
        REQUIRE(s1.degree == (a == b ? 1 : 2));
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("localized degree counts points off a hyperplane") {
    auto r = make_ring({"x", "y"});
    auto s = zero_dim_analyze(buchberger<Cyclo>({P("x^2-x", r), P("y^2-y", r)}, r));
    CHECK(s.degree == 4);
    CHECK(s.localized_degree(P("x", r)) == 2);
    CHECK(s.localized_degree(P("x*y", r)) == 1);
    CHECK(s.minpoly(P("x+2*y", r)).degree() == 4);
}
