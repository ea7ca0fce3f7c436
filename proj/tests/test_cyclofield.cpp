#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc/parse.hpp"
#include "qc/tower.hpp"

#include <random>
#include <set>

using namespace qc;

namespace {

Cyclo random_cyclo(std::mt19937_64& rng, int range = 9) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 7);
    std::array<Rational, 4> c;
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return Cyclo(c);
}

const Cyclo e = Cyclo::zeta();
const Cyclo alpha = e * e * e + e * e;

UPoly<Cyclo> up(std::vector<long> c) {
    std::vector<Cyclo> v(c.begin(), c.end());
    return UPoly<Cyclo>(v);
}

}  // namespace

TEST_CASE("rational invariants") {
    Rational r = parse_rational("6/-4");
    CHECK(r == Rational(-3, 2));
    CHECK(r.get_den() > 0);
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("multiplication examples") {
    CHECK(e * Cyclo::zeta_pow(4) == Cyclo(1));
    CHECK(Cyclo::zeta_pow(4) == Cyclo(-1) - e - e * e - e * e * e);
    CHECK(alpha * alpha == Cyclo(1) - alpha);
    CHECK(alpha + (e + Cyclo::zeta_pow(4)) == Cyclo(-1));
    CHECK(golden_alpha() == alpha);
}

TEST_CASE("inversion examples") {
    CHECK(Cyclo(1).inverse() == Cyclo(1));
    CHECK(e.inverse() == Cyclo::zeta_pow(4));
    Cyclo a = Cyclo(1) + e;
    CHECK(a * a.inverse() == Cyclo(1));
    CHECK_THROWS_AS(Cyclo(0).inverse(), std::domain_error);
}

TEST_CASE("galois examples") {
    CHECK(alpha.galois(2) == e + Cyclo::zeta_pow(4));
    CHECK(Cyclo(Rational(-136, 3)).galois(3) == Cyclo(Rational(-136, 3)));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Cyclo a = random_cyclo(rng);
        CHECK(a.galois(2).galois(3) == a);
        CHECK(a.galois(1) == a);
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20240605);
    int cases = 0;
    for (int i = 0; i < 10000; ++i) {
        Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a - a == Cyclo(0));
        if (!a.is_zero()) REQUIRE(a * a.inverse() == Cyclo(1));
        ++cases;
    }
    CHECK(cases == 10000);
}

TEST_CASE("galois maps are homomorphisms composing as (Z/5)^x") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
        for (int k = 1; k <= 4; ++k) {
            REQUIRE((a + b).galois(k) == a.galois(k) + b.galois(k));
            REQUIRE((a * b).galois(k) == a.galois(k) * b.galois(k));
            for (int l = 1; l <= 4; ++l) REQUIRE(a.galois(k).galois(l) == a.galois(k * l % 5));
        }
        REQUIRE(Cyclo(a.norm()) == a * a.galois(2) * a.galois(3) * a.galois(4));
    }
}

TEST_CASE("cyclotomic relation") {
    Cyclo s(0);
    for (int k = 0; k < 5; ++k) s += Cyclo::zeta_pow(k);
    CHECK(s.is_zero());
    CHECK(Cyclo::zeta_pow(5) == Cyclo(1));
    CHECK(Cyclo::zeta_pow(-1) == Cyclo::zeta_pow(4));
}

TEST_CASE("print and parse round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        Cyclo a = random_cyclo(rng);
        std::string s = a.str();
        Cyclo b = parse_cyclo(s);
        REQUIRE(b == a);
        REQUIRE(b.str() == s);
    }
    CHECK(parse_cyclo("(e^3+e^2)") == alpha);
    CHECK(parse_cyclo("-136/3") == Cyclo(Rational(-136, 3)));
}

TEST_CASE("tower inversion without split") {
    TowerPtr t = tower_from(up({-2, 0, 1}), "b");
    ExtElem two(2);
    ExtElem inv = ExtElem(t, {Cyclo(2), Cyclo(0)}).inverse();
    CHECK(inv == ExtElem(Rational(1, 2)));
    CHECK((two * inv) == ExtElem(1));
    ExtElem b = ExtElem::gen(t, 0);
    CHECK(b * b == ExtElem(2));
    CHECK(b * b.inverse() == ExtElem(1));
}

TEST_CASE("tower inversion splits on a zero divisor") {
    TowerPtr t = tower_from(up({0, -1, 1}), "b");
    ExtElem b = ExtElem::gen(t, 0);
    bool split = false;
    try {
        (void)(b - ExtElem(1)).inverse();
    } catch (const SplitEvent& ev) {
        split = true;
        CHECK(ev.level == 0);
        // factors multiply back to b^2 - b
        UPoly<Cyclo> f1, f2;
        {
            std::vector<Cyclo> c;
            for (const auto& blk : ev.factor1) c.push_back(blk.at(0));
            f1 = UPoly<Cyclo>(c);
            c.clear();
            for (const auto& blk : ev.factor2) c.push_back(blk.at(0));
            f2 = UPoly<Cyclo>(c);
        }
        CHECK(f1 * f2 == up({0, -1, 1}));
        std::set<int> degs{f1.degree(), f2.degree()};
        CHECK(degs == std::set<int>{1});
        CHECK(ev.branch1->degree() + ev.branch2->degree() == t->degree());
    }
    CHECK(split);
}

TEST_CASE("run_branches covers both branches") {
    TowerPtr t = tower_from(up({0, -1, 1}), "b");
    auto out = run_branches(t, [](const TowerPtr& cur) {
        ExtElem b = ExtElem::gen(cur, 0);
        ExtElem d = b - ExtElem(1);
        return d.is_zero_or_split() ? 0 : 1;
    });
    REQUIRE(out.size() == 2);
    int total = 0;
    for (const auto& [tw, r] : out) {
        total += tw->degree();
        (void)r;
    }
    CHECK(total == 2);
}

TEST_CASE("generic unit over a golden tower") {
    TowerPtr t = tower_from(up({-1, 1, 1}), "b");
    ExtElem b = ExtElem::gen(t, 0);
    ExtElem u = b * ExtElem(e) + ExtElem(Cyclo(3));
    CHECK(u * u.inverse() == ExtElem(1));
    CHECK_THROWS_AS(ExtElem(t, {Cyclo(0), Cyclo(0)}).inverse(), std::domain_error);
}

TEST_CASE("split degree additivity on random products") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        int r1 = d(rng), r2 = d(rng), r3 = d(rng);
        if (r1 == r2 || r1 == r3 || r2 == r3) continue;
        auto g = UPoly<Cyclo>::linear_root(Cyclo(r1)) * UPoly<Cyclo>::linear_root(Cyclo(r2)) *
                 UPoly<Cyclo>::linear_root(Cyclo(r3));
        TowerPtr t = tower_from(g, "b");
        auto out = run_branches(t, [&](const TowerPtr& cur) {
            ExtElem b = ExtElem::gen(cur, 0);
            ExtElem x = (b - ExtElem(Cyclo(r1))) * (b - ExtElem(Cyclo(r2)));
            return x.is_zero_or_split() ? 1 : 0;
        });
        int total = 0;
        for (const auto& [tw, r] : out) total += tw->degree();
        REQUIRE(total == 3);
    }
}

TEST_CASE("squarefree levels are enforced") {
    CHECK_THROWS_AS(tower_from(up({1, 2, 1}), "b"), std::invalid_argument);
}
