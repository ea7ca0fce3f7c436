#include "qc/singcert.hpp"

#include "qc/roots.hpp"

#include <set>

namespace qc {

namespace {

void say(const SingOptions& opt, const std::string& s) {
    if (opt.log) opt.log(s);
}

}  // namespace

std::vector<Poly<Cyclo>> jacobian_ideal_chart(const Poly<Cyclo>& F, int chart) {
    RingPtr cr = chart_ring(F.ring(), chart);
    std::vector<Poly<Cyclo>> gens{dehomogenize(F, chart, cr)};
    for (const auto& d : jacobian(F)) {
        Poly<Cyclo> a = dehomogenize(d, chart, cr);
        if (!a.is_zero_poly()) gens.push_back(a);
    }
    return gens;
}

SingularScheme singular_scheme(const Poly<Cyclo>& F, const SingOptions& opt) {
    SingularScheme Z;
    Z.F = F;
    Z.jac.resize(4);
    Z.rad.resize(4);
    for (int i = 0; i < 4; ++i) {
        if (opt.only_chart >= 0 && i != opt.only_chart) continue;
        ChartReport cr;
        cr.chart = i;
        auto gens = jacobian_ideal_chart(F, i);
        auto gb = buchberger(gens);
        cr.gb_size = gb.basis.size();
        try {
            Z.jac[i] = zero_dim_analyze(gb);
        } catch (const NotZeroDimensional& e) {
            cr.zero_dim = false;
            cr.witness = gb.ring->name(e.witness);
            Z.zero_dim = false;
            Z.charts.push_back(cr);
            say(opt, "chart " + F.ring()->name(i) + "=1: singular scheme is not zero-dimensional");
            continue;
        }
        Z.rad[i] = zero_dim_analyze(radical_zero_dim(*Z.jac[i]));
        cr.tau_degree = Z.jac[i]->degree;
        cr.radical_degree = Z.rad[i]->degree;
        Z.charts.push_back(cr);
        say(opt, "chart " + F.ring()->name(i) + "=1: basis " + std::to_string(cr.gb_size) + ", degree " +
                     std::to_string(cr.tau_degree) + ", distinct " + std::to_string(cr.radical_degree));
    }
    if (!Z.zero_dim) return Z;

    // points of chart i not in charts j < i, by inclusion-exclusion over
    // localizations at products of earlier chart coordinates
    for (auto& cr : Z.charts) {
        const int i = cr.chart;
        const RingPtr& r = Z.jac[i]->ring();
        const int earlier = opt.only_chart >= 0 ? 0 : i;
        for (int mask = 0; mask < (1 << earlier); ++mask) {
            Poly<Cyclo> f(r, Cyclo(1));
            int bits = 0;
            for (int j = 0; j < earlier; ++j)
                if (mask & (1 << j)) {
                    f = f * Poly<Cyclo>::var(r, j);
                    ++bits;
                }
            int sign = bits % 2 ? -1 : 1;
            cr.new_tau += sign * (mask ? Z.jac[i]->localized_degree(f) : Z.jac[i]->degree);
            cr.new_points += sign * (mask ? Z.rad[i]->localized_degree(f) : Z.rad[i]->degree);
        }
        Z.tau_total += cr.new_tau;
        Z.n_points += cr.new_points;
    }

    if (!opt.extract) return Z;
    for (const auto& cr : Z.charts) {
        if (cr.new_points == 0) continue;
        const int i = cr.chart;
        const RingPtr& r = Z.rad[i]->ring();
        std::vector<Poly<Cyclo>> gens = Z.rad[i]->gb.basis;
        const int earlier = opt.only_chart >= 0 ? 0 : i;
        for (int j = 0; j < earlier; ++j) gens.push_back(Poly<Cyclo>::var(r, j));
        auto N0 = zero_dim_analyze(buchberger(gens, r));
        auto N = zero_dim_analyze(radical_zero_dim(N0));
        if (N.degree != cr.new_points)
            throw std::logic_error("new-point scheme degree disagrees with inclusion-exclusion count");
        auto sh = shape_position(N, opt.seed + static_cast<std::uint64_t>(i));
        auto peeled = peel_linear_factors(sh.g, opt.seed);
        for (const auto& root : peeled.roots) {
            std::vector<Cyclo> c(4, Cyclo(1));
            int k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != i) c[v] = sh.h[k++](root);
            Z.points.push_back(RatPoint(c));
        }
        if (peeled.residual.degree() > 0) {
            TowerBranch tb;
            tb.chart = i;
            tb.tower = tower_from(peeled.residual, "t");
            ExtElem t = ExtElem::gen(tb.tower, 0);
            int k = 0;
            for (int v = 0; v < 4; ++v) {
                if (v == i) tb.coords.emplace_back(Cyclo(1));
                else tb.coords.push_back(sh.h[k++].eval_as(t));
            }
            Z.tower_degree += peeled.residual.degree();
            Z.tower_points.push_back(std::move(tb));
        }
        say(opt, "chart " + F.ring()->name(i) + "=1: " + std::to_string(peeled.roots.size()) +
                     " rational points, residual degree " + std::to_string(peeled.residual.degree()));
    }
    std::sort(Z.points.begin(), Z.points.end());
    return Z;
}

SingularityCertificate classify_scheme(const SingularScheme& Z, const std::string& name, const SingOptions& opt) {
    SingularityCertificate C;
    C.surface = name;
    C.charts = Z.charts;
    C.zero_dim = Z.zero_dim;
    C.tau_total = Z.tau_total;
    C.n_points = Z.n_points;
    C.free_action = free_action_check(Z.F);
    if (!Z.zero_dim) {
        C.verdict = "singular in codimension one";
        C.rank_le1 = "unknown";
        C.degenerate = "unknown";
        return C;
    }
    const Poly<Cyclo>& F = Z.F;
    auto H = hessian(F);
    auto m2 = minors(H, 2);
    auto m3 = minors(H, 3);
    bool rank_empty = true, deg_all = true, deg_empty = true;
    for (const auto& cr : Z.charts) {
        const int i = cr.chart;
        if (!Z.rad[i] || Z.rad[i]->degree == 0) continue;
        const auto& R = *Z.rad[i];
        const RingPtr& r = R.ring();
        std::vector<Poly<Cyclo>> g2 = R.gb.basis, g3 = R.gb.basis;
        for (const auto& m : m2) g2.push_back(dehomogenize(m, i, r));
        bool chart_all = true;
        for (const auto& m : m3) {
            Poly<Cyclo> d = dehomogenize(m, i, r);
            g3.push_back(d);
            if (!is_member(d, R.gb)) chart_all = false;
        }
        if (!buchberger(g2, r).is_unit()) rank_empty = false;
        bool chart_empty = buchberger(g3, r).is_unit();
        deg_all = deg_all && chart_all;
        deg_empty = deg_empty && chart_empty;
        say(opt, "chart " + F.ring()->name(i) + "=1 strata: rank<=1 " +
                     std::string(rank_empty ? "empty" : "nonempty") + ", degenerate " +
                     (chart_all ? "all" : chart_empty ? "empty" : "mixed"));
    }
    C.rank_le1 = rank_empty ? "empty" : "nonempty";
    C.degenerate = deg_all ? "all" : deg_empty ? "empty" : "mixed";
    if (Z.n_points == 0) {
        C.verdict = "smooth";
        C.degenerate = "empty";
    } else if (deg_empty && C.tau_total == C.n_points) {
        C.verdict = "all A1";
        C.n_a1 = C.n_points;
    } else if (rank_empty && deg_all && C.tau_total == 2 * C.n_points) {
        C.verdict = "all A2";
        C.n_a2 = C.n_points;
    } else {
        C.verdict = "mixed or worse";
    }

    C.points = Z.points;
    C.extracted_rational = Z.points.size();
    C.tower_degree = Z.tower_degree;
    const std::string want = C.verdict == "all A1" ? "A1" : C.verdict == "all A2" ? "A2" : "";
    for (const auto& p : Z.points) {
        PointClass pc = classify_at_point(F, p);
        if (!want.empty() && pc.type != want) C.pointwise_agrees = false;
    }
    for (const auto& tb : Z.tower_points) {
        auto res = run_branches(tb.tower, [&](const TowerPtr& t) {
            ProjPoint<ExtElem> q;
            for (const auto& x : tb.coords) q.c.push_back(x.lift(t));
            q.normalize();
            return classify_at_point(F, q).type;
        });
        for (const auto& [t, type] : res)
            if (!want.empty() && type != want) C.pointwise_agrees = false;
    }
    if (Z.tower_degree == 0 && !Z.points.empty()) {
        try {
            for (const auto& o : group_orbits(Z.points)) {
                OrbitInfo oi;
                oi.size = o.points.size();
                oi.representative = o.rep();
                C.orbits.push_back(oi);
            }
        } catch (const std::runtime_error&) {
            C.orbits_closed = false;
        }
    }
    return C;
}

SingularityCertificate classify_all(const Poly<Cyclo>& F, const std::string& name, const SingOptions& opt) {
    return classify_scheme(singular_scheme(F, opt), name, opt);
}

}  // namespace qc
