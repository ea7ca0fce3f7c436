#include "qc/catalog.hpp"

#include "qc/parse.hpp"

#include <stdexcept>

namespace qc {

const char* const kNewQuarticText =
    "x^4+2*x^2*z*w-8*x*y*z^2+4*y^3*z-4*y*w^3+5*z^2*w^2+(e^3+e^2)*"
    "(-4*x^2*z*w-4*x*y^2*w+12*x*y*z^2-4*y^3*z+8*y*w^3-8*z^2*w^2)";

const char* const kNewQuinticText =
    "x^5+10/3*x^3*z*w-20*x^2*y*z^2+20*x*y^3*z-20*x*y*w^3+25*x*z^2*w^2-"
    "4/3*y^5-140/3*y^2*z*w^2+80*y*z^3*w-136/3*z^5+4*w^5+(e^3+e^2)*"
    "(-20/3*x^3*z*w-10*x^2*y^2*w+30*x^2*y*z^2-20*x*y^3*z+40*x*y*w^3-"
    "40*x*z^2*w^2+70*y^2*z*w^2-130*y*z^3*w+220/3*z^5-20/3*w^5)";

Poly<Cyclo> eliminated_power_sum(int i, const RingPtr& r) {
    Poly<Cyclo> t(r);
    Poly<Cyclo> s(r);
    for (int v = 0; v < 4; ++v) {
        Poly<Cyclo> x = Poly<Cyclo>::var(r, v);
        t -= x;
        s += x.pow(i);
    }
    return s + t.pow(i);
}

Frame cyclic_frame() {
    Frame M;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            M[k][i] = Cyclo::zeta_pow(i * (4 - k)) - Cyclo::zeta_pow(4 * (4 - k));
    return M;
}

Frame cyclic_frame_inverse() {
    Frame N;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) N[i][k] = Cyclo::zeta_pow(i * (k + 1)) * Cyclo(Rational(1, 5));
    return N;
}

Poly<Cyclo> to_frame(const Poly<Cyclo>& F, const Frame& inverse) {
    const RingPtr& r = F.ring();
    std::vector<Poly<Cyclo>> img;
    for (int i = 0; i < 4; ++i) {
        Poly<Cyclo> s(r);
        for (int k = 0; k < 4; ++k) s += Poly<Cyclo>::term(r, Mono::var(k), inverse[i][k]);
        img.push_back(s);
    }
    return substitute(F, img, r);
}

RatPoint frame_point(const Frame& M, const RatPoint& p) {
    std::vector<Cyclo> c(4, Cyclo(0));
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i) c[k] += M[k][i] * p.c[i];
    return RatPoint(c);
}

std::vector<std::string> catalog_names() {
    return {"new_quartic", "new_quintic", "vdgz_quartic", "vdgz_quintic"};
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    if (name == "new_quartic") {
        e.source = kNewQuarticText;
        e.F = parse_poly(e.source);
    } else if (name == "new_quintic") {
        e.source = kNewQuinticText;
        e.F = parse_poly(e.source);
    } else if (name == "vdgz_quartic") {
        e.source = "4s_4-s_2^2, s_1=0";
        auto s2 = eliminated_power_sum(2);
        e.F = eliminated_power_sum(4).scaled(Cyclo(4)) - s2 * s2;
    } else if (name == "vdgz_quintic") {
        e.source = "12s_5-5s_2s_3, s_1=0";
        e.F = eliminated_power_sum(5).scaled(Cyclo(12)) -
              (eliminated_power_sum(2) * eliminated_power_sum(3)).scaled(Cyclo(5));
    } else {
        return std::nullopt;
    }
    if (name.rfind("vdgz", 0) == 0) e.frame = cyclic_frame();
    e.degree = e.F.degree();
    return e;
}

CatalogEntry catalog_get(const std::string& name) {
    auto e = catalog_lookup(name);
    if (!e) throw std::out_of_range("unknown surface '" + name + "'");
    return *e;
}

}  // namespace qc
