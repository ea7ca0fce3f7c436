#pragma once

#include "qc/linalg.hpp"
#include "qc/point.hpp"
#include "qc/zerodim.hpp"
#include "qc/zfive.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qc {

using Log = std::function<void(const std::string&)>;

struct ChartReport {
    int chart = 0;
    bool zero_dim = true;
    std::string witness;  // variable without pure power when not zero-dimensional
    std::size_t gb_size = 0;
    int tau_degree = 0;     // degree of the Jacobian scheme in this chart
    int radical_degree = 0; // distinct points in this chart
    int new_tau = 0;        // contribution not seen in earlier charts
    int new_points = 0;
};

struct TowerBranch {
    int chart = 0;
    TowerPtr tower;
    std::vector<ExtElem> coords;  // projective coordinates over the tower
};

struct SingularScheme {
    Poly<Cyclo> F;
    std::vector<ChartReport> charts;
    std::vector<std::optional<ZeroDimScheme<Cyclo>>> jac, rad;
    bool zero_dim = true;
    int tau_total = 0;
    int n_points = 0;
    std::vector<RatPoint> points;         // Q(e)-rational singular points
    std::vector<TowerBranch> tower_points; // remaining points over extensions
    int tower_degree = 0;                  // total degree of tower branches
};

struct SingOptions {
    std::uint64_t seed = 20240605;
    bool extract = true;
    int only_chart = -1;  // restrict per-chart work (the merged counts then cover that chart only)
    Log log;
};

// Jacobian ideal (F, dF/dx, ..., dF/dw) in affine chart `chart`.
std::vector<Poly<Cyclo>> jacobian_ideal_chart(const Poly<Cyclo>& F, int chart);

SingularScheme singular_scheme(const Poly<Cyclo>& F, const SingOptions& opt = {});

struct PointClass {
    std::string type;  // "A1", "A2", "needs higher jet", "other"
    int hessian_rank = 0;
};

inline bool decide_zero(const Cyclo& x) { return x.is_zero(); }
inline bool decide_zero(const ExtElem& x) { return x.is_zero_or_split(); }

// Local expansion at p in the chart of its last nonzero coordinate.
template <class K>
struct LocalJet {
    int chart = 0;
    RingPtr ring;       // chart variables u_0,u_1,u_2
    Poly<K> f;          // translated affine equation, p at the origin
    std::vector<int> vars;  // projective index of each local variable
};

template <class K>
LocalJet<K> local_jet(const Poly<Cyclo>& F, const ProjPoint<K>& p) {
    LocalJet<K> J;
    J.chart = p.last_nonzero();
    RingPtr cr = chart_ring(F.ring(), J.chart);
    J.ring = cr;
    for (int i = 0; i < 4; ++i)
        if (i != J.chart) J.vars.push_back(i);
    Poly<Cyclo> fa = dehomogenize(F, J.chart, cr);
    Poly<K> fk = map_coeffs<K>(fa, [](const Cyclo& c) { return K(c); });
    std::vector<Poly<K>> img;
    for (int k = 0; k < 3; ++k) img.push_back(Poly<K>::var(cr, k) + Poly<K>(cr, p.c[J.vars[k]]));
    J.f = substitute(fk, img, cr);
    return J;
}

template <class K>
Poly<K> homogeneous_part(const Poly<K>& f, int d) {
    std::vector<typename Poly<K>::Term> t;
    for (const auto& term : f.terms())
        if (term.first.deg == d) t.push_back(term);
    return Poly<K>::from_terms(f.ring(), std::move(t));
}

// symmetric matrix of second derivatives of a quadratic form
template <class K>
Mat<K> quadratic_matrix(const Poly<K>& q, int n) {
    Mat<K> M = zero_mat<K>(n, n);
    for (const auto& [m, c] : q.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m.e[i]; ++k) idx.push_back(i);
        if (idx.size() != 2) continue;
        if (idx[0] == idx[1]) M[idx[0]][idx[0]] = c * K(2);
        else {
            M[idx[0]][idx[1]] = c;
            M[idx[1]][idx[0]] = c;
        }
    }
    return M;
}

template <class K>
PointClass classify_at_point(const Poly<Cyclo>& F, const ProjPoint<K>& p) {
    LocalJet<K> J = local_jet(F, p);
    for (int d = 0; d <= 1; ++d)
        for (const auto& [m, c] : homogeneous_part(J.f, d).terms())
            if (!decide_zero(c)) throw std::invalid_argument("classify_at_point: point is not singular");
    Mat<K> H = quadratic_matrix(homogeneous_part(J.f, 2), 3);
    PointClass pc;
    pc.hessian_rank = static_cast<int>(rank(H));
    if (pc.hessian_rank == 3) {
        pc.type = "A1";
    } else if (pc.hessian_rank == 2) {
        auto ker = kernel(H, 3);
        K v3 = evaluate(homogeneous_part(J.f, 3), ker.at(0));
        pc.type = decide_zero(v3) ? "needs higher jet" : "A2";
    } else {
        pc.type = "other";
    }
    return pc;
}

struct OrbitInfo {
    std::size_t size = 0;
    std::optional<RatPoint> representative;
};

struct SingularityCertificate {
    std::string surface;
    std::vector<ChartReport> charts;
    bool zero_dim = true;
    int tau_total = 0;
    int n_points = 0;
    std::string rank_le1;    // "empty" | "nonempty"
    std::string degenerate;  // "all" | "empty" | "mixed"
    std::string verdict;     // "all A1" | "all A2" | "smooth" | "mixed or worse" | "singular in codimension one"
    int n_a1 = 0, n_a2 = 0;
    std::vector<OrbitInfo> orbits;
    bool orbits_closed = true;
    std::size_t extracted_rational = 0;
    int tower_degree = 0;
    bool pointwise_agrees = true;  // classify_at_point on extracted points matches the verdict
    std::vector<RatPoint> points;
    FreeActionVerdict free_action;

    bool all_a1() const { return verdict == "all A1"; }
    bool all_a2() const { return verdict == "all A2"; }
};

SingularityCertificate classify_all(const Poly<Cyclo>& F, const std::string& name = "", const SingOptions& opt = {});
SingularityCertificate classify_scheme(const SingularScheme& Z, const std::string& name, const SingOptions& opt);

}  // namespace qc
