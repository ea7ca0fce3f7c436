#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc/lattice.hpp"

#include <random>

using namespace qc;

namespace {

IVec vec(std::initializer_list<long long> x) {
    IVec v(static_cast<Eigen::Index>(x.size()));
    Eigen::Index i = 0;
    for (auto a : x) v[i++] = a;
    return v;
}

IntersectionLattice lattice_of(const IMat& m) {
    IntersectionLattice L;
    L.labels = {"A1", "A1'", "A2", "A2'", "A3", "A3'", "T1", "T2", "T3"};
    L.matrix = m;
    L.k_degree = {0, 0, 0, 0, 0, 0, 2, 2, 5};
    L.assumptions = default_assumptions();
    return L;
}

LatticeInput cusps_only(int n) {
    LatticeInput in;
    in.cusp_orbits = n;
    return in;
}

}  // namespace

TEST_CASE("assembly") {
    auto L = assemble(cusps_only(3));
    REQUIRE(L.matrix.rows() == 6);
    CHECK(determinant(L.matrix) == 27);
    for (int i = 0; i < 3; ++i) {
        CHECK(L.matrix(2 * i, 2 * i) == -2);
        CHECK(L.matrix(2 * i, 2 * i + 1) == 1);
        CHECK(L.matrix(2 * i + 1, 2 * i + 1) == -2);
    }
    CHECK(L.labels == std::vector<std::string>{"A1", "A1'", "A2", "A2'", "A3", "A3'"});
    CHECK(L.assumptions.size() == 4);

    LatticeInput c;
    c.class_names = {"C"};
    c.orbit_sum_t = {{-10}};
    c.class_k_degree = {0};
    auto single = assemble(c);
    REQUIRE(single.matrix.rows() == 1);
    CHECK(single.matrix(0, 0) == -2);

    LatticeInput bad = c;
    bad.orbit_sum_t = {{-7}};
    CHECK_THROWS_AS(assemble(bad), NonIntegral);
}

TEST_CASE("assembly from orbit sums") {
    LatticeInput in;
    in.cusp_orbits = 1;
    in.class_names = {"T"};
    in.orbit_sum_a = {{5}};
    in.orbit_sum_a2 = {{10}};
    in.orbit_sum_t = {{-20}};
    in.class_k_degree = {2};
    auto L = assemble(in);
    IMat want(3, 3);
    want << -2, 1, 1, 1, -2, 2, 1, 2, -4;
    CHECK(L.matrix == want);
    CHECK(L.k_degree == std::vector<long long>{0, 0, 2});
}

TEST_CASE("integer nullspace") {
    CHECK(nullspace_int(IMat::Identity(4, 4)).empty());
    auto z = nullspace_int(IMat::Zero(2, 2));
    CHECK(z.size() == 2);
    IMat m(1, 2);
    m << 2, 4;
    auto k = nullspace_int(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == vec({2, -1}));

    auto R = reference_matrix();
    CHECK(R == R.transpose());
    CHECK(determinant(R) == 0);
    CHECK(int_rank(R) == 8);
    auto ns = nullspace_int(R);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == reference_nullvector());
    CHECK(reference_nullvector() == vec({2, 4, 2, -2, -2, -4, -3, 3, 0}));
}

TEST_CASE("nullspace bases are primitive kernels") {
    std::mt19937_64 rng(20240605);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + t % 4, n = 2 + t % 5;
        IMat m(r, n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = c(rng);
        auto ns = nullspace_int(m);
        REQUIRE(ns.size() + int_rank(m) == static_cast<std::size_t>(n));
        for (const auto& v : ns) {
            REQUIRE((m * v).isZero());
            long long g = 0;
            for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, std::abs(v[i]));
            REQUIRE(g == 1);
            Eigen::Index f = 0;
            while (v[f] == 0) ++f;
            REQUIRE(v[f] > 0);
        }
    }
}

TEST_CASE("certificate on the displayed matrix") {
    auto L = lattice_of(reference_matrix());
    auto C = divisibility_certificate(L, reference_nullvector(), 3);
    REQUIRE(C.ok);
    CHECK(C.swaps == std::vector<bool>{false, false, true});
    CHECK(!C.class_swap);
    CHECK(C.relation == "2A1+A1'+2A2+A2'+A3+2A3' ≡ 3L");
    CHECK(C.residues == vec({2, 1, 2, 1, 2, 1, 0, 0, 0}));
    CHECK(C.k_dot_v == 0);
    CHECK(C.numerically_trivial);
    CHECK(C.assumptions == default_assumptions());
    // replay in the swapped labelling
    Labelling S;
    S.swap = C.swaps;
    CHECK(C.pattern + 3 * C.w == relabel(C.v, S, 3));

    auto from_ns = certify_from_nullspace(L, nullspace_int(L.matrix), 3);
    CHECK(from_ns.ok);
    CHECK(from_ns.relation == C.relation);
}

TEST_CASE("certificate patterns") {
    auto Z = lattice_of(IMat::Zero(9, 9));
    auto bad = divisibility_certificate(Z, vec({3, 3, 3, 3, 3, 3, 0, 0, 0}), 3);
    CHECK(!bad.ok);
    CHECK(bad.failure == "no mod-3 labelling");
    auto good = divisibility_certificate(Z, vec({2, 1, 2, 1, 2, 1, 0, 0, 0}), 3);
    CHECK(good.ok);
    CHECK(good.swaps == std::vector<bool>{false, false, false});
    CHECK(good.relation == "2A1+A1'+2A2+A2'+2A3+A3' ≡ 3L");
    CHECK(good.w.isZero());
    auto scaled = divisibility_certificate(Z, vec({4, 2, 4, 2, 4, 2, 0, 0, 0}), 3);
    CHECK(!scaled.ok);
    auto off = divisibility_certificate(lattice_of(reference_matrix()), vec({1, 0, 0, 0, 0, 0, 0, 0, 0}), 3);
    CHECK(!off.ok);
    CHECK(off.failure == "v is not in the nullspace");
    auto inv = divisibility_certificate(lattice_of(IMat::Identity(9, 9)), IVec::Zero(9), 3);
    CHECK(!inv.ok);
}

TEST_CASE("verdict is invariant under relabelling") {
    auto R = reference_matrix();
    auto v = reference_nullvector();
    std::vector<int> perm{0, 1, 2}, cperm{0, 1, 2};
    int tried = 0;
    do {
        do {
            for (int mask = 0; mask < 8; ++mask) {
                Labelling L;
                L.cusp_perm = perm;
                L.class_perm = cperm;
                for (int i = 0; i < 3; ++i) L.swap.push_back((mask >> i) & 1);
                auto lat = lattice_of(relabel(R, L, 3));
                auto map = L.index_map(3, 3);
                for (int a = 0; a < 9; ++a) lat.k_degree[a] = lattice_of(R).k_degree[map[a]];
                auto C = divisibility_certificate(lat, relabel(v, L, 3), 3);
                REQUIRE(C.ok);
                REQUIRE(C.numerically_trivial);
                auto C2 = certify_from_nullspace(lat, nullspace_int(lat.matrix), 3);
                REQUIRE(C2.ok);
                ++tried;
            }
        } while (std::next_permutation(cperm.begin(), cperm.end()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(tried == 6 * 6 * 8);
}

TEST_CASE("matching up to relabelling") {
    auto R = reference_matrix();
    Labelling L;
    L.cusp_perm = {2, 0, 1};
    L.swap = {true, false, true};
    L.class_perm = {1, 0, 2};
    auto M = relabel(R, L, 3);
    auto m = match_up_to_relabelling(M, R, 3);
    CHECK(m.equal());
    CHECK(relabel(M, m.labelling, 3) == R);
    IMat N = M;
    N(8, 8) += 1;
    auto n = match_up_to_relabelling(N, R, 3);
    CHECK(n.mismatches == 1);
    REQUIRE(n.differing.size() == 1);
    CHECK(n.differing[0] == std::pair<int, int>{8, 8});
}
