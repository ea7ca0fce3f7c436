#include "qc/linsys.hpp"

#include "qc/linalg.hpp"
#include "qc/roots.hpp"
#include "qc/singcert.hpp"
#include "qc/zfive.hpp"

#include <map>

namespace qc {

namespace {

TowerPtr point_tower(const ProjPoint<ExtElem>& p) {
    for (const auto& x : p.c)
        if (x.tower()) return x.tower();
    return nullptr;
}

// Q(e)-coordinates of x in tower t (a single coordinate when t is null)
Block components(const ExtElem& x, const TowerPtr& t) {
    if (!t) return Block{x.base_value()};
    return x.lift(t).data();
}

// value at p of the monomial m, or of d m / d x_v when v >= 0
ExtElem mono_value(const Mono& m, const std::vector<ExtElem>& p, int v) {
    Mono q = m;
    ExtElem c(1);
    if (v >= 0) {
        if (q.e[v] == 0) return ExtElem(0);
        c = ExtElem(static_cast<long>(q.e[v]));
        q.e[v]--;
        q.deg--;
    }
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < q.e[i]; ++k) c = c * p[i];
    return c;
}

Poly<Cyclo> mono_value_poly(const Mono& m, const std::vector<Poly<Cyclo>>& p, int v, const RingPtr& r) {
    Mono q = m;
    Poly<Cyclo> c(r, Cyclo(1));
    if (v >= 0) {
        if (q.e[v] == 0) return Poly<Cyclo>(r);
        c = Poly<Cyclo>(r, Cyclo(static_cast<long>(q.e[v])));
        q.e[v]--;
        q.deg--;
    }
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < q.e[i]; ++k) c = c * p[i];
    return c;
}

bool all_zero_at(const Poly<Cyclo>& F, const RatPoint& p, std::string& detail) {
    if (!is_zero(evaluate(F, p.c))) {
        detail = "F(p) != 0";
        return false;
    }
    auto J = jacobian(F);
    for (int v = 0; v < 4; ++v)
        if (!is_zero(evaluate(J[v], p.c))) {
            detail = "dF/d" + F.ring()->name(v) + "(p) != 0";
            return false;
        }
    return true;
}

}  // namespace

Condition double_point(const RatPoint& p) { return Condition{to_ext(p), 2}; }

std::vector<Condition> double_points(const std::vector<RatPoint>& pts) {
    std::vector<Condition> out;
    for (const auto& p : pts) out.push_back(double_point(p));
    return out;
}

LinearSystem conditioned_system(int d, int k, const std::vector<Condition>& conditions, const RingPtr& r) {
    LinearSystem L;
    L.degree = d;
    L.action = k;
    L.conditions = conditions;
    L.monos = k >= 0 ? invariant_basis(d, k, r) : monomials_of_degree(r, d);
    const std::size_t n = L.monos.size();
    Mat<Cyclo> M;
    for (const auto& cond : conditions) {
        TowerPtr t = point_tower(cond.p);
        std::vector<ExtElem> pc;
        for (const auto& x : cond.p.c) pc.push_back(t ? x.lift(t) : x);
        const std::size_t width = t ? static_cast<std::size_t>(t->size()) : 1;
        std::vector<int> derivs;
        if (cond.order == 1) derivs = {-1};
        else if (cond.order == 2) derivs = {0, 1, 2, 3};
        else throw std::invalid_argument("condition order must be 1 or 2");
        for (int v : derivs) {
            std::vector<Block> vals;
            for (const auto& m : L.monos) vals.push_back(components(mono_value(m, pc, v), t));
            for (std::size_t c = 0; c < width; ++c) {
                std::vector<Cyclo> row(n);
                bool nz = false;
                for (std::size_t j = 0; j < n; ++j) {
                    row[j] = vals[j][c];
                    nz = nz || !row[j].is_zero();
                }
                if (nz) M.push_back(std::move(row));
            }
        }
    }
    L.rows = M.size();
    std::vector<std::vector<Cyclo>> ker;
    if (M.empty()) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Cyclo> v(n, Cyclo(0));
            v[j] = Cyclo(1);
            ker.push_back(std::move(v));
        }
    } else {
        ker = kernel(M, n);
    }
    for (const auto& v : ker) {
        Poly<Cyclo> p(r);
        for (std::size_t j = 0; j < n; ++j) p += Poly<Cyclo>::term(r, L.monos[j], v[j]);
        L.basis.push_back(p);
    }
    return L;
}

bool satisfies_conditions(const Poly<Cyclo>& F, const std::vector<Condition>& conditions) {
    for (const auto& cond : conditions) {
        if (cond.order == 1) {
            if (!evaluate(F, cond.p.c).is_zero()) return false;
            continue;
        }
        for (const auto& d : jacobian(F))
            if (!evaluate(d, cond.p.c).is_zero()) return false;
    }
    return true;
}

std::optional<std::vector<Cyclo>> span_coordinates(const Poly<Cyclo>& P, const std::vector<Poly<Cyclo>>& basis) {
    std::map<std::vector<int>, std::size_t> row_of;
    auto key = [](const Mono& m) { return std::vector<int>(m.e.begin(), m.e.end()); };
    auto collect = [&](const Poly<Cyclo>& q) {
        for (const auto& [m, c] : q.terms()) row_of.emplace(key(m), row_of.size());
    };
    for (const auto& b : basis) collect(b);
    collect(P);
    const std::size_t n = basis.size();
    Mat<Cyclo> M = zero_mat<Cyclo>(row_of.size(), n + 1);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [m, c] : basis[j].terms()) M[row_of[key(m)]][j] = c;
    for (const auto& [m, c] : P.terms()) M[row_of[key(m)]][n] = c;
    auto piv = rref(M);
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    std::vector<Cyclo> x(n, Cyclo(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = M[i][n];
    return x;
}

bool proportional(const Poly<Cyclo>& P, const Poly<Cyclo>& Q) {
    if (P.is_zero_poly() || Q.is_zero_poly()) return false;
    return P.monic() == Q.monic();
}

CommonRoots common_roots(const std::vector<UPoly<Cyclo>>& constraints, std::uint64_t seed) {
    CommonRoots out;
    UPoly<Cyclo> g;
    for (const auto& c : constraints) {
        if (c.is_zero_poly()) continue;
        ++out.constraints;
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    out.gcd = g;
    if (out.constraints == 0) {
        out.status = "constraints vanish identically";
        return out;
    }
    if (g.degree() <= 0) {
        out.status = "no common root";
        return out;
    }
    auto peeled = peel_linear_factors(squarefree_part(g), seed);
    out.roots = peeled.roots;
    out.residual = peeled.residual;
    out.status = peeled.residual.degree() > 0 ? "residual factor of degree > 1" : "ok";
    return out;
}

std::vector<UPoly<Cyclo>> cusp_constraints(const Poly<Cyclo>& L1, const Poly<Cyclo>& L2,
                                           const std::vector<ProjPoint<ExtElem>>& points) {
    auto H1 = hessian(L1), H2 = hessian(L2);
    auto J1 = jacobian(L1), J2 = jacobian(L2);
    std::vector<UPoly<Cyclo>> out;
    for (const auto& p : points) {
        TowerPtr t = point_tower(p);
        std::vector<ExtElem> pc;
        for (const auto& x : p.c) pc.push_back(t ? x.lift(t) : x);
        std::vector<UPoly<ExtElem>> polys;
        for (int v = 0; v < 4; ++v)
            polys.emplace_back(std::vector<ExtElem>{evaluate(J1[v], pc), evaluate(J2[v], pc)});
        auto A = evaluate_matrix(H1, pc), B = evaluate_matrix(H2, pc);
        std::vector<std::vector<UPoly<ExtElem>>> M(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) M[i].emplace_back(std::vector<ExtElem>{A[i][j], B[i][j]});
        for (auto& m : minors(M, 3)) polys.push_back(std::move(m));
        const std::size_t width = t ? static_cast<std::size_t>(t->size()) : 1;
        for (const auto& q : polys) {
            std::vector<Block> cs;
            for (const auto& c : q.coeffs()) cs.push_back(components(c, t));
            for (std::size_t k = 0; k < width; ++k) {
                std::vector<Cyclo> v;
                for (const auto& b : cs) v.push_back(b[k]);
                out.emplace_back(std::move(v));
            }
        }
    }
    return out;
}

CommonRoots impose_cusps(const Poly<Cyclo>& L1, const Poly<Cyclo>& L2,
                         const std::vector<ProjPoint<ExtElem>>& points, std::uint64_t seed) {
    return common_roots(cusp_constraints(L1, L2, points), seed);
}

CommonRoots impose_cusps(const Poly<Cyclo>& L1, const Poly<Cyclo>& L2, const std::vector<RatPoint>& points,
                         std::uint64_t seed) {
    std::vector<ProjPoint<ExtElem>> q;
    for (const auto& p : points) q.push_back(to_ext(p));
    return impose_cusps(L1, L2, q, seed);
}

ScVerdict verify_sc_membership(const ScAssignment& a) {
    ScVerdict V;
    auto basis = invariant_basis(4, 0);
    if (a.coeffs.size() != basis.size())
        throw std::invalid_argument("assignment needs " + std::to_string(basis.size()) + " coefficients");
    Poly<Cyclo> F = invariant_combination(basis, a.coeffs);
    const RatPoint P(std::vector<Cyclo>(4, Cyclo(1)));
    const std::pair<const char*, const RatPoint*> reps[] = {{"(1:1:1:1)", &P}, {"X", &a.X}, {"A", &a.A}};
    for (const auto& [label, p] : reps) {
        ScGroup g;
        g.name = std::string("singular at ") + label;
        g.pass = all_zero_at(F, *p, g.detail);
        V.groups.push_back(g);
    }
    ScGroup ord;
    ord.name = "ordinary at (1:1:1:1)";
    auto m3 = minors(evaluate_matrix(hessian(F), P.c), 3);
    for (std::size_t i = 0; i < m3.size() && !ord.pass; ++i)
        if (!m3[i].is_zero()) {
            ord.pass = true;
            ord.detail = "minor " + std::to_string(i) + " = " + m3[i].str();
        }
    if (!ord.pass) ord.detail = "all order-3 Hessian minors vanish";
    V.groups.push_back(ord);

    ScGroup sep;
    sep.name = "orbit separation";
    auto oP = orbit(P), oX = orbit(a.X), oA = orbit(a.A);
    auto in = [](const std::vector<RatPoint>& o, const RatPoint& q) { return std::find(o.begin(), o.end(), q) != o.end(); };
    sep.pass = true;
    if (in(oP, a.X)) {
        sep.pass = false;
        sep.detail = "X in the orbit of (1:1:1:1)";
    } else if (in(oP, a.A) || in(oX, a.A)) {
        sep.pass = false;
        sep.detail = "A in an earlier orbit";
    } else if (oX.size() != 5 || oA.size() != 5) {
        sep.pass = false;
        sep.detail = "fixed point among representatives";
    }
    V.groups.push_back(sep);
    return V;
}

SearchScheme build_search_scheme(int minor_index) {
    SearchScheme S;
    S.minor_index = minor_index;
    std::vector<std::string> names{"a1", "a2", "a3", "a4", "a5", "a6", "a7", "X", "Y", "Z", "A", "B", "C", "s"};
    S.ring = make_ring(names);
    const RingPtr& r = S.ring;
    auto basis = invariant_basis(4, 0);
    auto var = [&](int i) { return Poly<Cyclo>::var(r, i); };
    Poly<Cyclo> one(r, Cyclo(1));
    const std::vector<std::vector<Poly<Cyclo>>> pts{
        {one, one, one, one}, {var(7), var(8), var(9), one}, {var(10), var(11), var(12), one}};
    for (const auto& p : pts)
        for (int v = 0; v < 4; ++v) {
            Poly<Cyclo> g(r);
            for (std::size_t i = 0; i < basis.size(); ++i)
                g += var(static_cast<int>(i)) * mono_value_poly(basis[i], p, v, r);
            S.generators.push_back(g);
        }
    // Hessian of F at (1:1:1:1) is linear in the a_i
    std::vector<std::vector<Poly<Cyclo>>> H(4, std::vector<Poly<Cyclo>>(4, Poly<Cyclo>(r)));
    RingPtr xr = standard_ring();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto Hm = hessian(Poly<Cyclo>::term(xr, basis[i], Cyclo(1)));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                H[a][b] += var(static_cast<int>(i)).scaled(evaluate(Hm[a][b], std::vector<Cyclo>(4, Cyclo(1))));
    }
    auto m3 = minors(H, 3);
    S.generators.push_back(var(13) * m3.at(minor_index) - one);
    return S;
}

std::vector<Cyclo> specialize_search(const SearchScheme& S, const ScAssignment& a) {
    std::vector<Cyclo> vals(a.coeffs);
    for (int i = 0; i < 3; ++i) vals.push_back(a.X.c[i] / a.X.c[3]);
    for (int i = 0; i < 3; ++i) vals.push_back(a.A.c[i] / a.A.c[3]);
    Poly<Cyclo> F = invariant_combination(invariant_basis(4, 0), a.coeffs);
    auto m3 = minors(evaluate_matrix(hessian(F), std::vector<Cyclo>(4, Cyclo(1))), 3);
    const Cyclo& m = m3.at(S.minor_index);
    vals.push_back(m.is_zero() ? Cyclo(0) : m.inverse());
    std::vector<Cyclo> out;
    for (const auto& g : S.generators) out.push_back(evaluate(g, vals));
    return out;
}

KummerReport kummer_check(const std::vector<RatPoint>& cusps, const Poly<Cyclo>& candidate) {
    KummerReport K;
    LinearSystem L = conditioned_system(4, -1, double_points(cusps));
    K.dimension = L.dimension();
    K.contains_candidate = span_coordinates(candidate, L.basis).has_value();
    K.dimension_settles = K.dimension == 1 && K.contains_candidate;
    SingOptions opt;
    opt.extract = false;
    for (const auto& b : L.basis) {
        SingularScheme Z = singular_scheme(b, opt);
        int n = Z.zero_dim ? Z.n_points : -1;
        K.member_points.push_back(n);
        if (n == 16) K.sixteen_nodal_member = true;
    }
    return K;
}

}  // namespace qc
