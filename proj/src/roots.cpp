#include "qc/roots.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace qc {

namespace {

using u64 = std::uint64_t;

struct Fq {
    std::array<u64, 4> c{};
    bool is_zero() const { return !c[0] && !c[1] && !c[2] && !c[3]; }
};

class FqField {
public:
    explicit FqField(u64 p) : p_(p) {
        q_ = Integer(static_cast<unsigned long>(p));
        q_ = q_ * q_ * q_ * q_;
    }
    u64 p() const { return p_; }
    const Integer& q() const { return q_; }

    Fq from(long a) const {
        Fq r;
        long m = a % static_cast<long>(p_);
        if (m < 0) m += static_cast<long>(p_);
        r.c[0] = static_cast<u64>(m);
        return r;
    }
    Fq add(const Fq& a, const Fq& b) const {
        Fq r;
        for (int i = 0; i < 4; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
        return r;
    }
    Fq sub(const Fq& a, const Fq& b) const {
        Fq r;
        for (int i = 0; i < 4; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
        return r;
    }
    Fq mul(const Fq& a, const Fq& b) const {
        std::array<u64, 7> t{};
        for (int i = 0; i < 4; ++i) {
            if (!a.c[i]) continue;
            for (int j = 0; j < 4; ++j) t[i + j] = (t[i + j] + a.c[i] * b.c[j] % p_) % p_;
        }
        t[0] = (t[0] + t[5]) % p_;
        t[1] = (t[1] + t[6]) % p_;
        Fq r;
        for (int i = 0; i < 4; ++i) r.c[i] = (t[i] + p_ - t[4]) % p_;
        return r;
    }
    Fq pow(Fq b, const Integer& e) const {
        Fq r = from(1);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = mul(r, r);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
        }
        return r;
    }
    Fq inv(const Fq& a) const {
        if (a.is_zero()) throw std::domain_error("inverse of zero in F_q");
        return pow(a, q_ - 2);
    }
    Fq random(std::mt19937_64& rng) const {
        Fq r;
        for (auto& x : r.c) x = rng() % p_;
        return r;
    }

private:
    u64 p_;
    Integer q_;
};

using FqPoly = std::vector<Fq>;

void trim(FqPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

struct FqPolyOps {
    const FqField& F;

    FqPoly mul(const FqPoly& a, const FqPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FqPoly c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
        trim(c);
        return c;
    }
    void divmod(FqPoly a, const FqPoly& b, FqPoly* q, FqPoly& r) const {
        Fq il = F.inv(b.back());
        FqPoly qq(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
        while (a.size() >= b.size()) {
            Fq c = F.mul(a.back(), il);
            std::size_t s = a.size() - b.size();
            qq[s] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = F.sub(a[s + i], F.mul(c, b[i]));
            a.pop_back();
            trim(a);
        }
        if (q) {
            trim(qq);
            *q = std::move(qq);
        }
        r = std::move(a);
    }
    FqPoly mod(const FqPoly& a, const FqPoly& m) const {
        FqPoly r;
        divmod(a, m, nullptr, r);
        return r;
    }
    FqPoly gcd(FqPoly a, FqPoly b) const {
        while (!b.empty()) {
            FqPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.empty()) return a;
        Fq il = F.inv(a.back());
        for (auto& x : a) x = F.mul(x, il);
        return a;
    }
    FqPoly powmod(FqPoly b, const Integer& e, const FqPoly& m) const {
        FqPoly r{F.from(1)};
        b = mod(b, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, b), m);
        }
        return r;
    }
    FqPoly derivative(const FqPoly& a) const {
        FqPoly d;
        for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], F.from(static_cast<long>(i))));
        trim(d);
        return d;
    }
};

// Z[e] element with mpz coordinates, reduced modulo N on demand.
using ZE = std::array<Integer, 4>;

ZE ze_mul(const ZE& a, const ZE& b, const Integer& N) {
    std::array<Integer, 7> t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i + j] += a[i] * b[j];
    t[0] += t[5];
    t[1] += t[6];
    ZE r;
    for (int i = 0; i < 4; ++i) {
        r[i] = (t[i] - t[4]) % N;
        if (r[i] < 0) r[i] += N;
    }
    return r;
}

ZE ze_add(const ZE& a, const ZE& b, const Integer& N) {
    ZE r;
    for (int i = 0; i < 4; ++i) {
        r[i] = (a[i] + b[i]) % N;
        if (r[i] < 0) r[i] += N;
    }
    return r;
}

ZE ze_sub(const ZE& a, const ZE& b, const Integer& N) {
    ZE r;
    for (int i = 0; i < 4; ++i) {
        r[i] = (a[i] - b[i]) % N;
        if (r[i] < 0) r[i] += N;
    }
    return r;
}

ZE ze_eval(const std::vector<ZE>& G, const ZE& x, const Integer& N) {
    ZE acc{};
    for (std::size_t i = G.size(); i-- > 0;) acc = ze_add(ze_mul(acc, x, N), G[i], N);
    return acc;
}

bool ratrecon(const Integer& a, const Integer& N, Rational& out) {
    Integer B;
    mpz_sqrt(B.get_mpz_t(), Integer(N / 2).get_mpz_t());
    Integer r0 = N, r1 = a % N, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += N;
    while (r1 > B) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (abs(t1) > B || t1 == 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return false;
    out = Rational(r1, t1);
    out.canonicalize();
    return true;
}

bool is_prime(u64 n) { return mpz_probab_prime_p(Integer(static_cast<unsigned long>(n)).get_mpz_t(), 30) > 0; }

}  // namespace

std::vector<Cyclo> cyclo_roots(const UPoly<Cyclo>& g0, std::uint64_t seed) {
    UPoly<Cyclo> g = squarefree_part(g0);
    std::vector<Cyclo> out;
    if (g.degree() <= 0) return out;
    if (g.degree() == 1) return {-g.coeff(0) / g.coeff(1)};

    // integral model G = D * g over Z[e]
    Integer D = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.den().get_mpz_t());
    std::vector<ZE> G;
    for (const auto& c : g.coeffs()) {
        ZE z;
        for (int i = 0; i < 4; ++i) z[i] = c.num(i) * (D / c.den());
        G.push_back(z);
    }
    std::vector<ZE> dG;
    for (std::size_t i = 1; i < G.size(); ++i) {
        ZE z;
        for (int k = 0; k < 4; ++k) z[k] = G[i][k] * static_cast<long>(i);
        dG.push_back(z);
    }

    std::mt19937_64 rng(seed);
    u64 p = 2147483647ULL;
    for (int tries = 0; tries < 200; ++tries, p -= 1) {
        while (!(is_prime(p) && (p % 5 == 2 || p % 5 == 3))) --p;
        FqField F(p);
        FqPolyOps P{F};
        FqPoly gb;
        for (const auto& z : G) {
            Fq e;
            for (int i = 0; i < 4; ++i) {
                Integer m = z[i] % static_cast<unsigned long>(p);
                if (m < 0) m += static_cast<unsigned long>(p);
                e.c[i] = m.get_ui();
            }
            gb.push_back(e);
        }
        if (gb.back().is_zero()) continue;
        trim(gb);
        if (P.gcd(gb, P.derivative(gb)).size() != 1) continue;

        // product of the distinct linear factors over F_q
        FqPoly X{F.from(0), F.from(1)};
        FqPoly Xq = P.powmod(X, F.q(), gb);
        FqPoly h;
        {
            FqPoly d = Xq;
            d.resize(std::max<std::size_t>(d.size(), 2));
            d[1] = F.sub(d[1], F.from(1));
            trim(d);
            h = P.gcd(gb, d);
        }
        std::vector<Fq> modroots;
        std::vector<FqPoly> todo{h};
        Integer half = (F.q() - 1) / 2;
        while (!todo.empty()) {
            FqPoly f = todo.back();
            todo.pop_back();
            if (f.size() <= 1) continue;
            if (f.size() == 2) {
                modroots.push_back(F.sub(F.from(0), F.mul(f[0], F.inv(f[1]))));
                continue;
            }
            while (true) {
                FqPoly lin{F.random(rng), F.from(1)};
                FqPoly w = P.powmod(lin, half, f);
                if (w.empty()) continue;
                w[0] = F.sub(w[0], F.from(1));
                trim(w);
                FqPoly d = P.gcd(f, w);
                if (d.size() > 1 && d.size() < f.size()) {
                    FqPoly q, r;
                    P.divmod(f, d, &q, r);
                    todo.push_back(d);
                    todo.push_back(q);
                    break;
                }
            }
        }

        const std::size_t cap_bits = 20000;
        for (const Fq& r0 : modroots) {
            ZE r, s;
            Integer N = static_cast<unsigned long>(p);
            Fq dv;
            {
                FqPoly dgb = P.derivative(gb);
                Fq acc = F.from(0);
                for (std::size_t i = dgb.size(); i-- > 0;) acc = F.add(F.mul(acc, r0), dgb[i]);
                dv = F.inv(acc);
            }
            for (int i = 0; i < 4; ++i) {
                r[i] = static_cast<unsigned long>(r0.c[i]);
                s[i] = static_cast<unsigned long>(dv.c[i]);
            }
            while (mpz_sizeinbase(N.get_mpz_t(), 2) < cap_bits) {
                Integer N2 = N * N;
                r = ze_sub(r, ze_mul(ze_eval(G, r, N2), s, N2), N2);
                ZE two{};
                two[0] = 2;
                s = ze_mul(s, ze_sub(two, ze_mul(ze_eval(dG, r, N2), s, N2), N2), N2);
                N = N2;
                if (mpz_sizeinbase(N.get_mpz_t(), 2) < 64) continue;
                std::array<Rational, 4> c;
                bool ok = true;
                for (int i = 0; i < 4 && ok; ++i) ok = ratrecon(r[i], N, c[i]);
                if (!ok) continue;
                Cyclo cand(c);
                if (g(cand).is_zero()) {
                    out.push_back(cand);
                    break;
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    throw std::runtime_error("no suitable inert prime found for root finding");
}

Peeled peel_linear_factors(const UPoly<Cyclo>& g, std::uint64_t seed) {
    Peeled out;
    out.roots = cyclo_roots(g, seed);
    UPoly<Cyclo> r = g.monic();
    for (const auto& a : out.roots) r = r / UPoly<Cyclo>::linear_root(a);
    out.residual = r.monic();
    return out;
}

}  // namespace qc
