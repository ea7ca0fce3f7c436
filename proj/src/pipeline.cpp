#include "qc/pipeline.hpp"

#include "qc/curvegeom.hpp"
#include "qc/linsys.hpp"
#include "qc/parse.hpp"
#include "qc/zfive.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace qc {

json Report::to_json(bool with_transcript) const {
    json j = body;
    j["pass"] = pass;
    j["stages"] = json::array();
    for (const auto& s : stages) j["stages"].push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    if (with_transcript) j["transcript"] = transcript;
    return j;
}

namespace {

void progress(const RunOptions& opt, const std::string& s) {
    if (opt.log) opt.log(s);
}

// Adds a stage; returns its pass flag so callers can halt.
bool stage(Report& R, const RunOptions& opt, const std::string& name, bool pass, const std::string& detail) {
    R.stages.push_back({name, pass, detail});
    progress(opt, std::string(pass ? "[pass] " : "[FAIL] ") + name + ": " + detail);
    R.transcript.push_back(name + ": " + detail);
    return pass;
}

Report finish(Report R) {
    R.pass = !R.stages.empty() && std::all_of(R.stages.begin(), R.stages.end(), [](const Stage& s) { return s.pass; });
    return R;
}

std::vector<std::string> point_strs(const std::vector<RatPoint>& pts) {
    std::vector<std::string> out;
    for (const auto& p : pts) out.push_back(p.str());
    return out;
}

SingOptions sing_options(const RunOptions& opt) {
    SingOptions so;
    so.seed = opt.seed;
    so.only_chart = opt.chart;
    so.log = opt.log;
    return so;
}

std::optional<RatPoint> fixed_node(const std::vector<RatPoint>& nodes) {
    for (int i = 0; i < 4; ++i)
        if (std::find(nodes.begin(), nodes.end(), coordinate_point(i)) != nodes.end()) return coordinate_point(i);
    return std::nullopt;
}

std::string orbit_sizes(const std::vector<OrbitInfo>& orbits) {
    std::string s;
    for (const auto& o : orbits) s += (s.empty() ? "" : "+") + std::to_string(o.size);
    return s.empty() ? "none" : s;
}

}  // namespace

CatalogEntry load_surface(const std::string& name_or_path) {
    if (auto e = catalog_lookup(name_or_path)) return *e;
    std::ifstream in(name_or_path);
    if (!in) throw InputError("unknown surface '" + name_or_path + "' (not in the catalog and not a readable file)");
    std::stringstream ss;
    ss << in.rdbuf();
    CatalogEntry e;
    e.name = name_or_path;
    e.source = ss.str();
    try {
        e.F = parse_poly(e.source);
    } catch (const ParseError& err) {
        throw InputError(name_or_path + ": " + err.what());
    }
    if (e.F.is_zero_poly() || !e.F.is_homogeneous()) throw InputError(name_or_path + ": not a nonzero homogeneous polynomial");
    e.degree = e.F.degree();
    return e;
}

bool squarefree_check(const Poly<Cyclo>& F, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<UPoly<Cyclo>> line;
        for (int i = 0; i < 4; ++i) line.emplace_back(std::vector<Cyclo>{Cyclo(dist(rng)), Cyclo(dist(rng))});
        auto g = evaluate(F, line);
        if (g.degree() != F.degree()) continue;
        if (gcd(g, g.derivative()).degree() == 0) return true;
    }
    return false;
}

json to_json(const IMat& m) {
    json j = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        j.push_back(row);
    }
    return j;
}

json to_json(const IVec& v) {
    json j = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
    return j;
}

json to_json(const SingularityCertificate& c) {
    json j;
    j["surface"] = c.surface;
    j["charts"] = json::array();
    for (const auto& ch : c.charts)
        j["charts"].push_back({{"chart", ch.chart},
                               {"zero_dim", ch.zero_dim},
                               {"witness", ch.witness},
                               {"gb_size", ch.gb_size},
                               {"tau_degree", ch.tau_degree},
                               {"radical_degree", ch.radical_degree},
                               {"new_tau", ch.new_tau},
                               {"new_points", ch.new_points}});
    j["zero_dim"] = c.zero_dim;
    j["tau_total"] = c.tau_total;
    j["n_points"] = c.n_points;
    j["rank_le1"] = c.rank_le1;
    j["degenerate"] = c.degenerate;
    j["verdict"] = c.verdict;
    j["n_a1"] = c.n_a1;
    j["n_a2"] = c.n_a2;
    j["extracted_rational"] = c.extracted_rational;
    j["tower_degree"] = c.tower_degree;
    j["pointwise_agrees"] = c.pointwise_agrees;
    j["points"] = point_strs(c.points);
    j["orbits"] = json::array();
    for (const auto& o : c.orbits)
        j["orbits"].push_back({{"size", o.size}, {"representative", o.representative ? o.representative->str() : ""}});
    j["orbits_closed"] = c.orbits_closed;
    j["free_action"] = {{"free", c.free_action.free}, {"offending", c.free_action.offending}};
    return j;
}

json to_json(const DivisibilityCertificate& c) {
    json j;
    j["ok"] = c.ok;
    j["failure"] = c.failure;
    j["v"] = to_json(c.v);
    j["swaps"] = c.swaps;
    j["class_swap"] = c.class_swap;
    j["residues"] = c.residues.size() ? to_json(c.residues) : json::array();
    j["w"] = c.w.size() ? to_json(c.w) : json::array();
    j["relation_v"] = c.relation_v;
    j["relation"] = c.relation;
    j["l_expression"] = c.l_expression;
    j["k_dot_v"] = c.k_dot_v;
    j["numerically_trivial"] = c.numerically_trivial;
    j["assumptions"] = c.assumptions;
    j["transcript"] = c.transcript;
    return j;
}

Report surface_report(const CatalogEntry& e, const RunOptions& opt) {
    Report R;
    R.body["command"] = "surface-report";
    R.body["surface"] = e.name;
    R.body["degree"] = e.degree;
    R.body["action"] = e.frame ? "cyclic permutation of (x,y,z,w,t)" : "a_" + std::to_string(opt.action);
    if (!squarefree_check(e.F, opt.seed)) throw InputError(e.name + ": polynomial is not reduced");
    progress(opt, "singular scheme of " + e.name);
    auto c = classify_all(e.F, e.name, sing_options(opt));
    json cj = to_json(c);
    if (e.frame) {
        // orbits and fixed points in the coordinates that diagonalize the permutation
        Frame M = cyclic_frame();
        auto G = to_frame(e.F, cyclic_frame_inverse());
        c.free_action = free_action_check(G);
        std::vector<RatPoint> img;
        for (const auto& p : c.points) img.push_back(frame_point(M, p));
        c.orbits.clear();
        c.orbits_closed = c.tower_degree == 0;
        if (c.orbits_closed) {
            try {
                for (const auto& o : group_orbits(img)) {
                    auto it = std::find(img.begin(), img.end(), o.rep());
                    c.orbits.push_back({o.points.size(), c.points[it - img.begin()]});
                }
            } catch (const std::runtime_error&) {
                c.orbits_closed = false;
            }
        }
        cj = to_json(c);
        cj["frame"] = "X_k = sum_i (e^(i(4-k)) - e^(4(4-k))) x_i";
    }
    R.body["certificate"] = cj;
    std::ostringstream sc;
    sc << "zero-dimensional: " << (c.zero_dim ? "yes" : "no") << ", tau = " << c.tau_total << ", points = " << c.n_points;
    if (opt.chart >= 0) sc << " (chart " << opt.chart << " only)";
    bool ok = stage(R, opt, "singular scheme", c.zero_dim, sc.str());
    const bool typed = c.all_a1() || c.all_a2();
    ok = stage(R, opt, "classification", typed,
               c.verdict + " (rank<=1 stratum " + c.rank_le1 + ", degenerate " + c.degenerate + ")") &&
         ok;
    stage(R, opt, "pointwise check", c.pointwise_agrees,
          std::to_string(c.extracted_rational) + " rational points, tower degree " + std::to_string(c.tower_degree));
    if (c.tower_degree == 0)
        stage(R, opt, "orbits", c.orbits_closed, orbit_sizes(c.orbits) + (c.orbits_closed ? "" : " (not closed)"));
    std::string fixed;
    for (int i : c.free_action.offending) fixed += (fixed.empty() ? "" : ", ") + coordinate_point(i).str();
    stage(R, opt, "free action", true, c.free_action.free ? "yes" : "no, fixed points " + fixed);
    return finish(std::move(R));
}

Report reproduce_construction(const RunOptions& opt, const std::optional<Poly<Cyclo>>& quartic, bool search) {
    Report R;
    R.body["command"] = "reproduce-construction";
    R.body["action"] = opt.action;
    if (opt.action != 0 && !quartic) {
        stage(R, opt, "quartic", false, "no built-in a_" + std::to_string(opt.action) + " quartic");
        return finish(std::move(R));
    }
    const auto Q = quartic ? *quartic : catalog_get("new_quartic").F;
    const auto S = catalog_get("new_quintic").F;
    R.body["quartic"] = print_poly(Q);

    auto basis = invariant_basis(4, opt.action);
    std::set<std::string> bset, qset;
    for (const auto& m : basis) bset.insert(mono_str(m, *Q.ring()));
    for (const auto& [m, c] : Q.terms()) qset.insert(mono_str(m, *Q.ring()));
    bool inv = std::includes(bset.begin(), bset.end(), qset.begin(), qset.end());
    if (!stage(R, opt, "invariant basis", inv && basis.size() == 7,
               std::to_string(basis.size()) + " invariant quartic monomials, quartic support " +
                   (qset == bset ? "equal to the basis" : inv ? "inside the basis" : "not invariant")))
        return finish(std::move(R));

    progress(opt, "node certificate");
    auto cq = classify_all(Q, "quartic", sing_options(opt));
    auto fixed = fixed_node(cq.points);
    std::vector<RatPoint> nodes;
    for (const auto& p : cq.points)
        if (!fixed || !(p == *fixed)) nodes.push_back(p);
    std::size_t five = std::count_if(cq.orbits.begin(), cq.orbits.end(), [](const OrbitInfo& o) { return o.size == 5; });
    bool nodes_ok = cq.all_a1() && cq.n_points == 16 && cq.pointwise_agrees && cq.orbits_closed && fixed &&
                    *fixed == coordinate_point(2) && nodes.size() == 15 && five == 3;
    R.body["nodes"] = point_strs(cq.points);
    if (!stage(R, opt, "node certificate", nodes_ok,
               cq.verdict + ", " + std::to_string(cq.n_points) + " points, tau " + std::to_string(cq.tau_total) +
                   ", orbits " + orbit_sizes(cq.orbits) + (fixed ? ", fixed node " + fixed->str() : ", no fixed node")))
        return finish(std::move(R));

    // SC membership of the quartic with its orbit representatives
    const RatPoint one(std::vector<Cyclo>(4, Cyclo(1)));
    std::vector<RatPoint> reps;
    for (const auto& o : group_orbits(nodes)) {
        auto orb = o.points;
        if (std::find(orb.begin(), orb.end(), one) != orb.end()) continue;
        auto it = std::find_if(orb.begin(), orb.end(), [](const RatPoint& p) { return !p.c[3].is_zero(); });
        reps.push_back(it != orb.end() ? *it : orb.front());
    }
    bool has_one = std::find(nodes.begin(), nodes.end(), one) != nodes.end();
    if (!stage(R, opt, "orbit representatives", has_one && reps.size() == 2 && !reps[0].c[3].is_zero() && !reps[1].c[3].is_zero(),
               has_one ? "(1:1:1:1), " + (reps.size() == 2 ? reps[0].str() + ", " + reps[1].str() : std::string("?"))
                       : "(1:1:1:1) is not a node"))
        return finish(std::move(R));
    ScAssignment a;
    for (const auto& m : basis) a.coeffs.push_back(Q.coeff(m));
    a.X = reps[0];
    a.A = reps[1];
    auto V = verify_sc_membership(a);
    std::string vd;
    for (const auto& g : V.groups) vd += (vd.empty() ? "" : "; ") + g.name + (g.pass ? " ok" : " FAILED " + g.detail);
    auto scheme = build_search_scheme(0);
    auto vals = specialize_search(scheme, a);
    bool gens_vanish = std::all_of(vals.begin(), vals.end(), [](const Cyclo& c) { return c.is_zero(); });
    if (!stage(R, opt, "search conditions", V.pass() && gens_vanish,
               vd + "; " + std::to_string(scheme.generators.size()) + " generators " +
                   (gens_vanish ? "vanish at the solution" : "do not vanish")))
        return finish(std::move(R));

    if (search) {
        // experimental: points fixed to the certified representatives, quartic coefficients solved
        RingPtr r = make_ring({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "s"});
        std::vector<Poly<Cyclo>> images;
        for (int i = 0; i < 7; ++i) images.push_back(Poly<Cyclo>::var(r, i));
        for (int i = 0; i < 3; ++i) images.emplace_back(r, a.X.c[i] / a.X.c[3]);
        for (int i = 0; i < 3; ++i) images.emplace_back(r, a.A.c[i] / a.A.c[3]);
        images.push_back(Poly<Cyclo>::var(r, 7));
        std::vector<Poly<Cyclo>> gens;
        for (const auto& g : scheme.generators) gens.push_back(substitute(g, images, r));
        std::size_t lead = 0;
        while (lead < a.coeffs.size() && a.coeffs[lead].is_zero()) ++lead;
        gens.push_back(Poly<Cyclo>::var(r, static_cast<int>(lead)) - Poly<Cyclo>(r, a.coeffs[lead]));
        auto gb = buchberger(gens, r);
        std::string detail;
        bool found = false;
        try {
            auto Z = zero_dim_analyze(gb);
            detail = "degree " + std::to_string(Z.degree);
            if (Z.degree == 1) {
                std::vector<Cyclo> sol;
                for (int i = 0; i < 7; ++i) sol.push_back(normal_form(Poly<Cyclo>::var(r, i), gb).constant_term());
                found = sol == a.coeffs;
                detail += found ? ", unique solution equals the quartic" : ", unique solution differs from the quartic";
            }
        } catch (const NotZeroDimensional& err) {
            detail = err.what();
        }
        stage(R, opt, "search (experimental)", found, detail);
    }

    progress(opt, "quintic systems");
    auto L = conditioned_system(5, opt.action, double_points(nodes));
    auto U = conditioned_system(5, -1, double_points(nodes));
    R.body["invariant_quintic_dimension"] = L.dimension();
    R.body["quintic_dimension"] = U.dimension();
    if (!stage(R, opt, "quintic system", L.dimension() == 2 && U.dimension() == 5,
               "invariant basis " + std::to_string(L.dimension()) + ", all quintics: basis " +
                   std::to_string(U.dimension()) + " (projective dimension " + std::to_string(U.dimension() - 1) + ")"))
        return finish(std::move(R));
    R.body["L1"] = print_poly(L.basis[0]);
    R.body["L2"] = print_poly(L.basis[1]);

    progress(opt, "cusp imposition");
    auto cr = impose_cusps(L.basis[0], L.basis[1], nodes, opt.seed);
    std::vector<std::string> bs;
    for (const auto& b : cr.roots) bs.push_back(b.str());
    R.body["b"] = bs;
    if (!stage(R, opt, "cusp imposition", cr.status == "ok" && cr.roots.size() == 1,
               cr.status + ", " + std::to_string(cr.constraints) + " constraints, gcd degree " +
                   std::to_string(cr.gcd.degree()) + (cr.roots.size() == 1 ? ", b = " + cr.roots[0].str() : "")))
        return finish(std::move(R));
    Poly<Cyclo> F = L.basis[0] + L.basis[1].scaled(cr.roots[0]);
    R.body["quintic"] = print_poly(F.monic());

    progress(opt, "quintic certificate");
    auto cs = classify_all(F, "recovered quintic", sing_options(opt));
    if (!stage(R, opt, "quintic certificate",
               cs.all_a2() && cs.n_points == 15 && cs.free_action.free && cs.orbits_closed && cs.pointwise_agrees,
               cs.verdict + ", " + std::to_string(cs.n_points) + " points, orbits " + orbit_sizes(cs.orbits) +
                   ", free action " + (cs.free_action.free ? "yes" : "no")))
        return finish(std::move(R));
    bool same_points = std::is_permutation(cs.points.begin(), cs.points.end(), nodes.begin(), nodes.end());
    stage(R, opt, "cusps at the nodes", same_points, same_points ? "yes" : "no");
    stage(R, opt, "comparison", proportional(F, S),
          proportional(F, S) ? "proportional to the catalog quintic" : "differs from the catalog quintic");
    return finish(std::move(R));
}

namespace {

struct ClassData {
    std::string name;
    std::vector<CurveOnSurface> members;  // a_0-images of the first member
    std::string kind;
};

}  // namespace

Report divisibility(const CatalogEntry& e, const RunOptions& opt) {
    Report R;
    R.body["command"] = "divisibility";
    R.body["surface"] = e.name;
    if (!squarefree_check(e.F, opt.seed)) throw InputError(e.name + ": polynomial is not reduced");
    Poly<Cyclo> S = e.F;
    if (e.frame) {
        S = to_frame(S, cyclic_frame_inverse());
        R.body["frame"] = "X_k = sum_i (e^(i(4-k)) - e^(4(4-k))) x_i";
    }
    progress(opt, "cusp certificate");
    auto cs = classify_all(S, e.name, sing_options(opt));
    bool cusps_ok = cs.all_a2() && cs.tower_degree == 0 && cs.orbits_closed && cs.free_action.free &&
                    std::all_of(cs.orbits.begin(), cs.orbits.end(), [](const OrbitInfo& o) { return o.size == 5; });
    std::string why = cs.all_a2() ? "" : " (needs cusps)";
    if (!stage(R, opt, "cusp certificate", cusps_ok,
               cs.verdict + why + ", " + std::to_string(cs.n_points) + " points, orbits " + orbit_sizes(cs.orbits) +
                   ", free action " + (cs.free_action.free ? "yes" : "no")))
        return finish(std::move(R));
    R.body["cusps"] = point_strs(cs.points);

    progress(opt, "quartic through the cusps");
    auto L4 = conditioned_system(4, -1, double_points(cs.points));
    if (!stage(R, opt, "quartic", L4.dimension() == 1,
               "quartics singular at the cusps: basis " + std::to_string(L4.dimension())))
        return finish(std::move(R));
    Poly<Cyclo> Q = L4.basis[0].monic();
    R.body["quartic"] = print_poly(Q);
    auto cq = classify_all(Q, "quartic", sing_options(opt));
    auto fixed = fixed_node(cq.points);
    bool nodes_ok = cq.all_a1() && std::includes(cq.points.begin(), cq.points.end(), cs.points.begin(), cs.points.end());
    if (!stage(R, opt, "quartic nodes", nodes_ok,
               cq.verdict + ", " + std::to_string(cq.n_points) + " nodes" +
                   (fixed ? ", fixed node " + fixed->str() : ", no fixed node")))
        return finish(std::move(R));

    progress(opt, "tropes");
    auto T = find_tropes(Q, cq.points, fixed);
    std::vector<Trope> conics;
    for (auto i : T.not_through_fixed) conics.push_back(T.tropes[i]);
    auto ir = intersect_surfaces(S, Q, conics, opt.seed);
    json tj;
    tj["count"] = T.tropes.size();
    tj["candidates"] = T.candidates;
    tj["invariant_through_fixed"] = T.invariant_through_fixed.size();
    tj["through_fixed"] = T.through_fixed.size();
    tj["not_through_fixed"] = T.not_through_fixed.size();
    tj["section_is_conics"] = ir.exact;
    R.body["tropes"] = tj;
    if (!stage(R, opt, "tropes", ir.exact,
               std::to_string(T.tropes.size()) + " tropes (" + std::to_string(T.invariant_through_fixed.size()) + "+" +
                   std::to_string(T.through_fixed.size()) + "+" + std::to_string(T.not_through_fixed.size()) +
                   "), S.Q = " + std::to_string(ir.conic_degree_total / 2) + " conics" + (ir.exact ? " exactly" : " (incomplete)")))
        return finish(std::move(R));

    // curve classes: conic orbits, then plane sections through the fixed node
    std::vector<ClassData> classes;
    {
        std::vector<Poly<Cyclo>> planes;
        for (const auto& t : conics) planes.push_back(t.plane);
        for (const auto& orb : plane_orbits(planes)) {
            ClassData c;
            c.name = "T" + std::to_string(classes.size() + 1);
            c.kind = "trope conic";
            for (const auto& pl : orb)
                for (const auto& t : conics)
                    if (t.plane == pl) c.members.push_back(trope_conic(c.name, t));
            classes.push_back(std::move(c));
        }
        std::vector<Poly<Cyclo>> sections;
        for (auto i : T.through_fixed) sections.push_back(T.tropes[i].plane);
        for (const auto& orb : plane_orbits(sections)) {
            ClassData c;
            c.name = "T" + std::to_string(classes.size() + 1);
            c.kind = "plane section";
            for (const auto& pl : orb) c.members.push_back(plane_section(c.name, S, pl));
            classes.push_back(std::move(c));
        }
    }
    bool classes_ok = !classes.empty();
    std::string cd;
    for (const auto& c : classes) {
        classes_ok = classes_ok && c.members.size() == 5;
        for (const auto& m : c.members) classes_ok = classes_ok && curve_on_surface(S, m);
        cd += (cd.empty() ? "" : ", ") + c.name + ": " + std::to_string(c.members.size()) + " " + c.kind + "s";
    }
    json cls = json::array();
    for (const auto& c : classes) {
        std::vector<std::string> pl;
        for (const auto& m : c.members) pl.push_back(print_poly(m.plane));
        cls.push_back({{"name", c.name}, {"kind", c.kind}, {"degree", c.members.front().degree}, {"planes", pl}});
    }
    R.body["classes"] = cls;
    if (!stage(R, opt, "curve classes", classes_ok, cd)) return finish(std::move(R));

    std::vector<CurveOnSurface> all;
    for (const auto& c : classes)
        for (const auto& m : c.members) all.push_back(m);

    progress(opt, "resolutions");
    const auto orbits = group_orbits(cs.points);
    const int nc = static_cast<int>(classes.size());
    LatticeInput in;
    in.cusp_orbits = static_cast<int>(orbits.size());
    for (const auto& c : classes) {
        in.class_names.push_back(c.name);
        in.class_k_degree.push_back(c.members.front().degree);
    }
    in.orbit_sum_a.assign(nc, std::vector<long long>(in.cusp_orbits, 0));
    in.orbit_sum_a2 = in.orbit_sum_a;
    in.orbit_sum_t.assign(nc, std::vector<long long>(nc, 0));
    bool smooth = true;
    json res = json::array();
    for (int oi = 0; oi < in.cusp_orbits; ++oi) {
        auto R0 = resolve_cusp(S, orbits[oi].rep(), all);
        smooth = smooth && R0.smooth;
        for (const auto& line : R0.transcript) R.transcript.push_back("A" + std::to_string(oi + 1) + ": " + line);
        std::vector<std::string> la, la2;
        for (const auto& x : R0.lambda_a) la.push_back(x.str());
        for (const auto& x : R0.lambda_a2) la2.push_back(x.str());
        res.push_back({{"cusp", R0.cusp.str()}, {"chart", R0.chart}, {"disc", R0.disc.str()},
                       {"tower", R0.tower != nullptr}, {"lambda_a", la}, {"lambda_a2", la2}, {"smooth", R0.smooth}});
        for (int k = 0; k < 5; ++k) {
            auto Rk = k == 0 ? R0 : transport_resolution(S, R0, k, all);
            smooth = smooth && Rk.smooth;
            std::size_t idx = 0;
            for (int c = 0; c < nc; ++c)
                for (std::size_t l = 0; l < classes[c].members.size(); ++l, ++idx) {
                    in.orbit_sum_a[c][oi] += Rk.curves[idx].with_a;
                    in.orbit_sum_a2[c][oi] += Rk.curves[idx].with_a2;
                }
        }
    }
    R.body["resolutions"] = res;
    if (!stage(R, opt, "resolutions", smooth,
               std::to_string(in.cusp_orbits) + " orbit representatives, one blow-up each, transported to all cusps" +
                   (smooth ? "" : " (NOT smooth)")))
        return finish(std::move(R));

    progress(opt, "curve intersections");
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            for (std::size_t k = 0; k < classes[a].members.size(); ++k)
                for (std::size_t l = 0; l < classes[b].members.size(); ++l)
                    in.orbit_sum_t[a][b] += (a == b && k == l)
                                                ? self_intersection(classes[a].members[k], cs.points)
                                                : strict_intersection(classes[a].members[k], classes[b].members[l], cs.points);
    IntersectionLattice lat;
    try {
        lat = assemble(in);
    } catch (const NonIntegral& err) {
        stage(R, opt, "lattice", false, err.what());
        return finish(std::move(R));
    }
    const int n = static_cast<int>(lat.labels.size());
    Integer det = determinant(lat.matrix);
    auto ns = nullspace_int(lat.matrix);
    R.body["labels"] = lat.labels;
    R.body["matrix"] = to_json(lat.matrix);
    R.body["det"] = det.get_str();
    R.body["rank"] = int_rank(lat.matrix);
    R.body["nullspace"] = json::array();
    for (const auto& v : ns) R.body["nullspace"].push_back(to_json(v));
    R.body["assumptions"] = lat.assumptions;
    {
        std::ostringstream ms;
        ms << lat.matrix;
        std::string row;
        for (std::istringstream is(ms.str()); std::getline(is, row);) R.transcript.push_back("  [" + row + "]");
    }
    stage(R, opt, "lattice", true,
          std::to_string(n) + "x" + std::to_string(n) + ", det " + det.get_str() + ", nullspace rank " +
              std::to_string(ns.size()));

    // plane-section classes: pi^*T = 5H - E forces T^2 = 25 K^2 + E^2
    json checks = json::array();
    for (int c = 0; c < nc; ++c) {
        if (classes[c].kind != "plane section") continue;
        long long e2 = 0;
        bool integral = true;
        for (int i = 0; i < in.cusp_orbits; ++i) {
            long long ta = lat.matrix(2 * i, 2 * in.cusp_orbits + c), tb = lat.matrix(2 * i + 1, 2 * in.cusp_orbits + c);
            // T.A = 2a - b, T.A' = 2b - a
            if ((2 * ta + tb) % 3 || (ta + 2 * tb) % 3) integral = false;
            long long x = (2 * ta + tb) / 3, y = (ta + 2 * tb) / 3;
            e2 += -2 * x * x + 2 * x * y - 2 * y * y;
        }
        long long deg = classes[c].members.front().degree;
        long long predicted = deg * deg * lat.k_square + e2;
        long long computed = lat.matrix(2 * in.cusp_orbits + c, 2 * in.cusp_orbits + c);
        checks.push_back({{"class", classes[c].name}, {"predicted", predicted}, {"computed", computed}});
        stage(R, opt, "hyperplane check " + classes[c].name, integral && predicted == computed,
              classes[c].name + "^2 = " + std::to_string(computed) + ", from " + classes[c].name + " = " +
                  std::to_string(deg) + "K - E: " + std::to_string(predicted));
    }
    R.body["hyperplane_checks"] = checks;

    auto cert = certify_from_nullspace(lat, ns, in.cusp_orbits);
    R.body["certificate"] = to_json(cert);
    R.body["swaps"] = cert.swaps;
    R.body["relation"] = cert.relation;
    for (const auto& s : cert.transcript) R.transcript.push_back(s);
    stage(R, opt, "certificate", cert.ok && cert.numerically_trivial,
          cert.ok ? cert.relation + ", " + cert.l_expression : cert.failure);

    if (n == 9 && e.name == "new_quintic") {
        // comparison with the displayed matrix and its nullspace generator
        auto m = match_up_to_relabelling(lat.matrix, reference_matrix(), in.cusp_orbits);
        IMat ours = relabel(lat.matrix, m.labelling, in.cusp_orbits);
        auto ref_v = reference_nullvector();
        bool v_in = (ours * ref_v).cwiseAbs().sum() == 0;
        json diff = json::array();
        for (auto [a, b] : m.differing)
            diff.push_back({{"row", a}, {"col", b}, {"computed", ours(a, b)}, {"reference", reference_matrix()(a, b)}});
        json ref;
        ref["labelling"] = m.labelling.str(in.cusp_orbits, nc);
        ref["mismatches"] = m.mismatches;
        ref["differing"] = diff;
        ref["reference_vector_in_nullspace"] = v_in;
        if (v_in) {
            IntersectionLattice rl = lat;
            rl.matrix = ours;
            auto map = m.labelling.index_map(in.cusp_orbits, nc);
            for (int a = 0; a < n; ++a) rl.k_degree[a] = lat.k_degree[map[a]];
            rl.labels = {"A1", "A1'", "A2", "A2'", "A3", "A3'", "T1", "T2", "T3"};
            auto rc = divisibility_certificate(rl, ref_v, in.cusp_orbits);
            ref["certificate"] = to_json(rc);
        }
        R.body["reference_comparison"] = ref;
        auto rl_label = [&](int i) { return std::string(i < 6 ? "A" : "T") + std::to_string(i < 6 ? i / 2 + 1 : i - 5) + (i < 6 && i % 2 ? "'" : ""); };
        std::string d = m.equal() ? "equal after " + m.labelling.str(in.cusp_orbits, nc)
                                  : std::to_string(m.mismatches) + " entries differ after " +
                                        m.labelling.str(in.cusp_orbits, nc);
        for (auto [a, b] : m.differing)
            d += "; entry (" + rl_label(a) + "," + rl_label(b) + ") computed " + std::to_string(ours(a, b)) +
                 ", displayed " + std::to_string(reference_matrix()(a, b));
        R.transcript.push_back("reference: " + d);
        R.body["reference_comparison"]["summary"] = d;
        R.body["notes"].push_back("reference matrix: " + d);
        R.body["notes"].push_back(std::string("reference nullspace vector ") + vec_str(ref_v) +
                                  (v_in ? " lies in the computed nullspace (relabelled)" : " is not in the computed nullspace"));
        if (v_in) R.body["notes"].push_back("reference vector certificate: " + R.body["reference_comparison"]["certificate"]["relation"].get<std::string>());
        progress(opt, "reference: " + d);
    }
    return finish(std::move(R));
}

Report invariant_basis_table(int max_degree) {
    Report R;
    R.body["command"] = "invariant-basis";
    json rows = json::array();
    for (int d = 1; d <= max_degree; ++d) {
        json row = {{"d", d}};
        std::string line = "d=" + std::to_string(d) + ":";
        for (int k = 0; k < 5; ++k) {
            auto b = invariant_basis(d, k);
            row["a" + std::to_string(k)] = b.size();
            line += " a" + std::to_string(k) + "=" + std::to_string(b.size());
        }
        rows.push_back(row);
        R.transcript.push_back(line);
        R.body["notes"].push_back(line);
    }
    R.body["table"] = rows;
    std::vector<std::string> q;
    for (const auto& m : invariant_basis(4, 0)) q.push_back(mono_str(m, *standard_ring()));
    R.body["quartic_a0"] = q;
    R.stages.push_back({"table", true, std::to_string(max_degree) + " degrees x 5 actions"});
    return finish(std::move(R));
}

}  // namespace qc
