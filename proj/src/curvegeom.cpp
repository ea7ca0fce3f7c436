#include "qc/curvegeom.hpp"

#include "qc/groebner.hpp"
#include "qc/linalg.hpp"
#include "qc/parse.hpp"
#include "qc/roots.hpp"
#include "qc/singcert.hpp"
#include "qc/zfive.hpp"

#include <random>

namespace qc {

namespace {

template <class K>
std::vector<K> cross(const std::vector<K>& a, const std::vector<K>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
K dot(const std::vector<K>& a, const std::vector<K>& b) {
    K s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

template <class K>
bool all_zero(const std::vector<K>& v) {
    for (const auto& x : v)
        if (!decide_zero(x)) return false;
    return true;
}

std::vector<ExtElem> ext(const std::vector<Cyclo>& v) { return {v.begin(), v.end()}; }

// Tangent cone of a plane curve C at p, as a binary form in coordinates
// (s, r) on the plane's direction space spanned by b1, b2.
struct Cone {
    int m = 0;  // 0: p not on C
    std::vector<Cyclo> h;       // plane in local coordinates
    std::vector<Cyclo> b1, b2;  // basis of h = 0
    Poly<Cyclo> form;           // ring (s, r)
    int chart = 0;
    std::vector<int> vars;
};

RingPtr binary_ring() {
    static RingPtr r = make_ring({"s", "r"});
    return r;
}

Cone tangent_cone(const CurveOnSurface& C, const RatPoint& p) {
    Cone K;
    if (!evaluate(C.plane, p.c).is_zero() || !evaluate(C.eq, p.c).is_zero()) return K;
    LocalJet<Cyclo> J = local_jet(C.eq, p);
    K.chart = J.chart;
    K.vars = J.vars;
    auto lc = linear_coeffs(C.plane);
    for (int v : J.vars) K.h.push_back(lc[v]);
    Mat<Cyclo> hm{K.h};
    auto ker = kernel(hm, 3);
    if (ker.size() != 2) throw std::invalid_argument("plane is degenerate in the cusp chart");
    K.b1 = ker[0];
    K.b2 = ker[1];
    RingPtr br = binary_ring();
    std::vector<Poly<Cyclo>> img;
    for (int k = 0; k < 3; ++k)
        img.push_back(Poly<Cyclo>::term(br, Mono::var(0), K.b1[k]) + Poly<Cyclo>::term(br, Mono::var(1), K.b2[k]));
    Poly<Cyclo> phi = substitute(J.f, img, br);
    if (phi.is_zero_poly()) throw std::invalid_argument("curve equation vanishes on its plane");
    int m = 1 << 20;
    for (const auto& [mono, c] : phi.terms()) m = std::min<int>(m, mono.deg);
    K.m = m;
    K.form = homogeneous_part(phi, m);
    return K;
}

// order of the direction d (local coordinates, d in the plane) as a root of the cone
int direction_order(const Cone& K, const std::vector<ExtElem>& d) {
    if (K.m == 0) return 0;
    if (!decide_zero(dot(ext(K.h), d))) return 0;
    // d = alpha b1 + beta b2
    int i = -1, j = -1;
    for (int a = 0; a < 3 && i < 0; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (!(K.b1[a] * K.b2[b] - K.b1[b] * K.b2[a]).is_zero()) {
                i = a;
                j = b;
                break;
            }
    Cyclo det = K.b1[i] * K.b2[j] - K.b1[j] * K.b2[i];
    ExtElem alpha = (d[i] * ExtElem(K.b2[j]) - d[j] * ExtElem(K.b2[i])) / ExtElem(det);
    ExtElem beta = (ExtElem(K.b1[i]) * d[j] - ExtElem(K.b1[j]) * d[i]) / ExtElem(det);
    // move along (gamma, delta) independent of (alpha, beta)
    ExtElem gamma(0), delta(1);
    if (decide_zero(alpha)) {
        gamma = ExtElem(1);
        delta = ExtElem(0);
    }
    using UP = UPoly<ExtElem>;
    std::vector<UP> vals{UP(std::vector<ExtElem>{alpha, gamma}), UP(std::vector<ExtElem>{beta, delta})};
    UP psi = evaluate(K.form, vals);
    int k = 0;
    while (k <= psi.degree() && decide_zero(psi.coeff(k))) ++k;
    return k;
}

bool binary_squarefree(const Poly<Cyclo>& form) {
    // dehomogenize at r = 1; the root at infinity is the power of r dividing out... of s
    std::vector<Cyclo> c(form.degree() + 1, Cyclo(0));
    for (const auto& [m, v] : form.terms()) c[m.e[0]] = v;
    UPoly<Cyclo> g(c);
    int inf = form.degree() - g.degree();
    if (inf > 1) return false;
    if (g.degree() <= 0) return true;
    return gcd(g, g.derivative()).degree() == 0;
}

}  // namespace

std::optional<Poly<Cyclo>> poly_sqrt(const Poly<Cyclo>& p0) {
    if (p0.is_zero_poly()) return p0;
    Poly<Cyclo> p = p0.monic();
    Mono lead = p.lm();
    Mono half;
    for (int i = 0; i < kMaxVars; ++i) {
        if (lead.e[i] % 2) return std::nullopt;
        half.e[i] = static_cast<std::uint8_t>(lead.e[i] / 2);
    }
    half.deg = static_cast<std::uint16_t>(lead.deg / 2);
    const RingPtr& r = p.ring();
    Poly<Cyclo> c = Poly<Cyclo>::term(r, half, Cyclo(1));
    Poly<Cyclo> rem = p - c * c;
    const Cyclo inv2 = Cyclo(Rational(1, 2));
    for (std::size_t it = 0; !rem.is_zero_poly(); ++it) {
        if (it > p.size() + 64) return std::nullopt;
        if (!divides(half, rem.lm())) return std::nullopt;
        Mono q = quotient(rem.lm(), half);
        if (r->cmp(q, half) >= 0) return std::nullopt;
        c += Poly<Cyclo>::term(r, q, rem.lc() * inv2);
        rem = p - c * c;
    }
    return c;
}

std::optional<Poly<Cyclo>> plane_through(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    Mat<Cyclo> m{a.c, b.c, c.c};
    auto ker = kernel(m, 4);
    if (ker.size() != 1) return std::nullopt;
    return linear_form(standard_ring(), ker[0]).monic();
}

bool on_plane(const Poly<Cyclo>& plane, const RatPoint& p) { return evaluate(plane, p.c).is_zero(); }

TropeCensus find_tropes(const Poly<Cyclo>& Q, const std::vector<RatPoint>& nodes, const std::optional<RatPoint>& fixed) {
    TropeCensus T;
    std::vector<Poly<Cyclo>> seen;
    const int n = static_cast<int>(nodes.size());
    for (const auto& tri : k_subsets(n, 3)) {
        auto pl = plane_through(nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]);
        if (!pl || std::find(seen.begin(), seen.end(), *pl) != seen.end()) continue;
        seen.push_back(*pl);
        std::vector<std::size_t> on;
        for (int i = 0; i < n; ++i)
            if (on_plane(*pl, nodes[i])) on.push_back(static_cast<std::size_t>(i));
        if (on.size() < 6) continue;
        ++T.candidates;
        Poly<Cyclo> R = restrict_to_plane(Q, *pl);
        auto root = poly_sqrt(R);
        if (!root) {
            ++T.square_failures;
            continue;
        }
        Trope t;
        t.plane = *pl;
        t.conic = *root;
        t.scalar = R.lc();
        t.nodes = on;
        t.through_fixed = fixed && on_plane(*pl, *fixed);
        t.invariant = act_on_poly(*pl, 0).monic() == *pl;
        T.tropes.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < T.tropes.size(); ++i) {
        const auto& t = T.tropes[i];
        if (!t.through_fixed) T.not_through_fixed.push_back(i);
        else if (t.invariant) T.invariant_through_fixed.push_back(i);
        else T.through_fixed.push_back(i);
    }
    return T;
}

std::vector<std::vector<Poly<Cyclo>>> plane_orbits(const std::vector<Poly<Cyclo>>& planes) {
    std::vector<std::vector<Poly<Cyclo>>> out;
    std::vector<bool> used(planes.size(), false);
    for (std::size_t i = 0; i < planes.size(); ++i) {
        if (used[i]) continue;
        std::vector<Poly<Cyclo>> orb{planes[i]};
        used[i] = true;
        for (Poly<Cyclo> q = act_on_poly(planes[i], 0).monic(); !(q == planes[i]); q = act_on_poly(q, 0).monic()) {
            auto it = std::find(planes.begin(), planes.end(), q);
            if (it == planes.end()) throw std::runtime_error("plane set is not closed under the action");
            used[static_cast<std::size_t>(it - planes.begin())] = true;
            orb.push_back(q);
        }
        out.push_back(std::move(orb));
    }
    return out;
}

CurveOnSurface plane_section(const std::string& label, const Poly<Cyclo>& S, const Poly<Cyclo>& plane) {
    CurveOnSurface C;
    C.label = label;
    C.plane = plane;
    C.eq = S;
    C.degree = S.degree();
    C.genus = (C.degree - 1) * (C.degree - 2) / 2;
    C.full_section = true;
    return C;
}

CurveOnSurface trope_conic(const std::string& label, const Trope& t) {
    CurveOnSurface C;
    C.label = label;
    C.plane = t.plane;
    C.eq = t.conic;
    C.degree = 2;
    C.genus = 0;
    return C;
}

bool curve_on_surface(const Poly<Cyclo>& S, const CurveOnSurface& C) {
    if (C.full_section) return C.eq == S;
    Poly<Cyclo> R = restrict_to_plane(S, C.plane);
    Poly<Cyclo> c = restrict_to_plane(C.eq, C.plane);
    return is_member(R, buchberger(std::vector<Poly<Cyclo>>{c}, R.ring()));
}

IntersectionReport intersect_surfaces(const Poly<Cyclo>& S, const Poly<Cyclo>& Q, const std::vector<Trope>& conics,
                                      std::uint64_t seed) {
    IntersectionReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<UPoly<Cyclo>> line;
        for (int i = 0; i < 4; ++i) line.emplace_back(std::vector<Cyclo>{Cyclo(dist(rng)), Cyclo(dist(rng))});
        auto gs = evaluate(S, line), gq = evaluate(Q, line);
        if (gs.degree() != S.degree() || gq.degree() != Q.degree()) continue;
        rep.no_common_factor = gcd(gs, gq).degree() == 0;
        break;
    }
    rep.expected_degree = S.degree() * Q.degree();
    bool all = rep.no_common_factor;
    for (const auto& t : conics) {
        bool in = curve_on_surface(S, trope_conic("", t)) && curve_on_surface(Q, trope_conic("", t));
        rep.contained.push_back(in);
        if (in) rep.conic_degree_total += 2;
        all = all && in;
    }
    rep.exact = all && rep.conic_degree_total == rep.expected_degree;
    return rep;
}

std::pair<int, int> tangent_multiplicity(const CurveOnSurface& C, const RatPoint& p, const std::vector<ExtElem>& d) {
    Cone K = tangent_cone(C, p);
    return {K.m, direction_order(K, d)};
}

namespace {

void fill_incidences(CuspResolution& R, const std::vector<CurveOnSurface>& curves) {
    R.curves.clear();
    for (const auto& C : curves) {
        CurveIncidence inc;
        Cone K = tangent_cone(C, R.cusp);
        inc.mult = K.m;
        if (K.m > 0) {
            auto h = ext(K.h);
            auto dA = cross(h, R.lambda_a), dA2 = cross(h, R.lambda_a2);
            if (all_zero(cross(dA, ext(R.v0))))
                throw std::runtime_error("plane of " + C.label + " contains the node direction");
            inc.with_a = direction_order(K, dA);
            inc.with_a2 = direction_order(K, dA2);
        }
        R.transcript.push_back(C.label + ": mult " + std::to_string(inc.mult) + ", .A " + std::to_string(inc.with_a) +
                               ", .A' " + std::to_string(inc.with_a2));
        R.curves.push_back(inc);
    }
}

// q = c * lambda_a * lambda_a2 for some constant c
bool factors_cone(const Poly<Cyclo>& q, const std::vector<ExtElem>& la, const std::vector<ExtElem>& lb) {
    const RingPtr& r = q.ring();
    Poly<ExtElem> A(r), B(r);
    for (int k = 0; k < 3; ++k) {
        A += Poly<ExtElem>::term(r, Mono::var(k), la[k]);
        B += Poly<ExtElem>::term(r, Mono::var(k), lb[k]);
    }
    Poly<ExtElem> P = A * B;
    Poly<ExtElem> qe = map_coeffs<ExtElem>(q, [](const Cyclo& c) { return ExtElem(c); });
    if (P.is_zero_poly()) return false;
    ExtElem c = qe.lc() / P.coeff(qe.lm());
    Poly<ExtElem> diff = qe - P.scaled(c);
    for (const auto& [m, v] : diff.terms())
        if (!decide_zero(v)) return false;
    return true;
}

Poly<Cyclo> local_quadric(const Poly<Cyclo>& S, const RatPoint& p, LocalJet<Cyclo>& J) {
    J = local_jet(S, p);
    for (int d = 0; d <= 1; ++d)
        if (!homogeneous_part(J.f, d).is_zero_poly()) throw std::invalid_argument("resolve_cusp: point is not singular");
    return homogeneous_part(J.f, 2);
}

}  // namespace

CuspResolution resolve_cusp(const Poly<Cyclo>& S, const RatPoint& cusp, const std::vector<CurveOnSurface>& curves) {
    CuspResolution R;
    R.cusp = cusp;
    LocalJet<Cyclo> J;
    Poly<Cyclo> q = local_quadric(S, cusp, J);
    R.chart = J.chart;
    R.vars = J.vars;
    Mat<Cyclo> M = quadratic_matrix(q, 3);
    if (rank(M) != 2) throw std::runtime_error("resolve_cusp: tangent cone does not have rank 2");
    R.v0 = kernel(M, 3).at(0);
    R.transcript.push_back("cusp " + cusp.str() + ", chart " + S.ring()->name(R.chart) + "=1, tangent cone " +
                           print_poly(q));

    // binary form on a complement of v0
    int piv = 0;
    while (R.v0[piv].is_zero()) ++piv;
    std::vector<Cyclo> e1(3, Cyclo(0)), e2(3, Cyclo(0));
    e1[(piv + 1) % 3] = Cyclo(1);
    e2[(piv + 2) % 3] = Cyclo(1);
    auto qv = [&](const std::vector<Cyclo>& u) { return evaluate(q, u); };
    auto add = [](const std::vector<Cyclo>& u, const std::vector<Cyclo>& v) {
        return std::vector<Cyclo>{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
    };
    Cyclo a = qv(e1), c = qv(e2);
    if (a.is_zero() && !c.is_zero()) {
        std::swap(e1, e2);
        std::swap(a, c);
    }
    Cyclo b = qv(add(e1, e2)) - a - c;
    std::vector<ExtElem> wA, wA2;
    if (a.is_zero()) {
        // q restricted to the complement is b*s*t
        R.disc = b * b;
        wA = ext(e1);
        wA2 = ext(e2);
    } else {
        R.disc = b * b - Cyclo(4) * a * c;
        UPoly<Cyclo> g(std::vector<Cyclo>{-R.disc, Cyclo(0), Cyclo(1)});
        auto roots = cyclo_roots(g);
        ExtElem sigma;
        if (!roots.empty()) {
            sigma = ExtElem(roots.front());
        } else {
            R.tower = tower_from(g, "sigma");
            sigma = ExtElem::gen(R.tower, 0);
        }
        ExtElem den = ExtElem(Cyclo(2) * a);
        ExtElem r1 = (ExtElem(-b) + sigma) / den, r2 = (ExtElem(-b) - sigma) / den;
        for (int k = 0; k < 3; ++k) {
            wA.push_back(r1 * ExtElem(e1[k]) + ExtElem(e2[k]));
            wA2.push_back(r2 * ExtElem(e1[k]) + ExtElem(e2[k]));
        }
    }
    R.lambda_a = cross(ext(R.v0), wA);
    R.lambda_a2 = cross(ext(R.v0), wA2);
    if (!factors_cone(q, R.lambda_a, R.lambda_a2)) throw std::logic_error("tangent cone does not split as computed");
    R.transcript.push_back("node direction " + ProjPoint<Cyclo>(R.v0).str() + ", discriminant " + R.disc.str() +
                           (R.tower ? " (lines over a quadratic extension)" : " (lines over Q(e))"));

    // strict transform in the three blow-up charts u_i = y_i y_k (i != k), u_k = y_k
    R.smooth = true;
    const RingPtr& lr = J.ring;
    for (int k = 0; k < 3; ++k) {
        std::vector<Poly<Cyclo>> img;
        for (int i = 0; i < 3; ++i) {
            Poly<Cyclo> yi = Poly<Cyclo>::var(lr, i);
            img.push_back(i == k ? yi : yi * Poly<Cyclo>::var(lr, k));
        }
        Poly<Cyclo> g = substitute(J.f, img, lr);
        std::vector<Poly<Cyclo>::Term> t;
        for (auto [m, v] : g.terms()) {
            if (m.e[k] < 2) throw std::logic_error("blow-up: exceptional factor missing");
            m.e[k] -= 2;
            m.deg -= 2;
            t.emplace_back(m, v);
        }
        Poly<Cyclo> st = Poly<Cyclo>::from_terms(lr, std::move(t));
        std::vector<Poly<Cyclo>> gens{Poly<Cyclo>::var(lr, k), st};
        for (const auto& d : jacobian(st)) gens.push_back(d);
        bool ok = buchberger(gens, lr).is_unit();
        R.smooth = R.smooth && ok;
        R.transcript.push_back("blow-up chart " + std::to_string(k) + ": strict transform " +
                               (ok ? "smooth" : "SINGULAR") + " along the exceptional curve");
    }
    if (!R.smooth) throw std::runtime_error("not resolved by one blow-up");
    fill_incidences(R, curves);
    return R;
}

CuspResolution transport_resolution(const Poly<Cyclo>& S, const CuspResolution& r, int times,
                                    const std::vector<CurveOnSurface>& curves) {
    CuspResolution R;
    R.cusp = act_on_point(r.cusp, times);
    LocalJet<Cyclo> J;
    Poly<Cyclo> q = local_quadric(S, R.cusp, J);
    if (J.chart != r.chart) throw std::logic_error("transport changed chart");
    R.chart = r.chart;
    R.vars = r.vars;
    R.disc = r.disc;
    R.tower = r.tower;
    R.smooth = r.smooth;
    for (int k = 0; k < 3; ++k) {
        long e = static_cast<long>(times) * (R.vars[k] - R.chart);
        R.v0.push_back(r.v0[k] * Cyclo::zeta_pow(e));
        R.lambda_a.push_back(r.lambda_a[k] * ExtElem(Cyclo::zeta_pow(-e)));
        R.lambda_a2.push_back(r.lambda_a2[k] * ExtElem(Cyclo::zeta_pow(-e)));
    }
    if (!factors_cone(q, R.lambda_a, R.lambda_a2))
        throw std::runtime_error("transported lines are not the tangent cone components");
    if (!mat_vec(quadratic_matrix(q, 3), R.v0)[0].is_zero() || !all_zero(mat_vec(quadratic_matrix(q, 3), R.v0)))
        throw std::runtime_error("transported node direction is not in the cone kernel");
    R.transcript.push_back("cusp " + R.cusp.str() + " = a^" + std::to_string(times) + "(" + r.cusp.str() +
                           "), lines transported");
    fill_incidences(R, curves);
    return R;
}

int self_intersection(const CurveOnSurface& C, const std::vector<RatPoint>& cusps) {
    int pa = C.genus;
    for (const auto& p : cusps) {
        Cone K = tangent_cone(C, p);
        if (K.m < 2) continue;
        if (!binary_squarefree(K.form))
            throw std::runtime_error(C.label + ": singularity at " + p.str() + " not resolved by one blow-up");
        pa -= K.m * (K.m - 1) / 2;
    }
    return 2 * pa - 2 - C.degree;
}

int strict_intersection(const CurveOnSurface& C1, const CurveOnSurface& C2, const std::vector<RatPoint>& cusps) {
    Mat<Cyclo> m{linear_coeffs(C1.plane), linear_coeffs(C2.plane)};
    auto ker = kernel(m, 4);
    if (ker.size() != 2) throw std::invalid_argument("strict_intersection: curves lie in the same plane");
    const auto &P1 = ker[0], &P2 = ker[1];
    std::vector<UPoly<Cyclo>> line;
    for (int i = 0; i < 4; ++i) line.emplace_back(std::vector<Cyclo>{P2[i], P1[i]});
    auto g1 = evaluate(C1.eq, line), g2 = evaluate(C2.eq, line);
    if (g1.is_zero_poly() || g2.is_zero_poly())
        throw std::runtime_error("strict_intersection: a curve contains the common line");
    int inf1 = C1.eq.degree() - g1.degree(), inf2 = C2.eq.degree() - g2.degree();
    UPoly<Cyclo> G = gcd(g1, g2);
    int total = G.degree() + std::min(inf1, inf2);
    for (const auto& p : cusps) {
        if (!evaluate(C1.eq, p.c).is_zero() || !evaluate(C2.eq, p.c).is_zero()) continue;
        if (!on_plane(C1.plane, p) || !on_plane(C2.plane, p)) continue;
        // p = s0 P1 + t0 P2
        Mat<Cyclo> A = zero_mat<Cyclo>(4, 3);
        for (int i = 0; i < 4; ++i) {
            A[i][0] = P1[i];
            A[i][1] = P2[i];
            A[i][2] = p.c[i];
        }
        auto k2 = kernel(A, 3).at(0);  // s0 P1 + t0 P2 - c p = 0 up to sign
        Cyclo s0 = k2[0], t0 = k2[1];
        int mult = 0;
        if (t0.is_zero()) {
            mult = std::min(inf1, inf2);
        } else {
            Cyclo root = s0 / t0;
            UPoly<Cyclo> lin = UPoly<Cyclo>::linear_root(root);
            UPoly<Cyclo> g = G;
            while (g.degree() > 0 && (g % lin).is_zero_poly()) {
                g = g / lin;
                ++mult;
            }
        }
        // direction of the line at p, in the local coordinates of its chart
        const auto& Q = (kernel(Mat<Cyclo>{p.c, P1}, 4).size() == 3) ? P2 : P1;
        int j = p.last_nonzero();
        std::vector<ExtElem> dir;
        for (int v = 0; v < 4; ++v)
            if (v != j) dir.emplace_back(Q[v] - Q[j] * p.c[v]);
        int k1 = direction_order(tangent_cone(C1, p), dir);
        int kk = direction_order(tangent_cone(C2, p), dir);
        total += std::min(k1, kk) - mult;
    }
    return total;
}

}  // namespace qc
