#include "qc/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qc {

namespace {

using ZMat = std::vector<std::vector<Integer>>;

ZMat to_z(const IMat& m) {
    ZMat z(m.rows(), std::vector<Integer>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) z[i][j] = Integer(static_cast<long>(m(i, j)));
    return z;
}

long long to_ll(const Integer& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer entry exceeds 64 bits");
    return x.get_si();
}

long long mod3(long long x) { return ((x % 3) + 3) % 3; }

std::string label_term(long long c, const std::string& label, bool first) {
    if (c == 0) return "";
    std::string s;
    if (c < 0) s = "-";
    else if (!first) s = "+";
    long long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    return s + label;
}

std::string combination(const IVec& v, const std::vector<std::string>& labels) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += label_term(v[i], labels[i], s.empty());
    return s.empty() ? "0" : s;
}

}  // namespace

std::vector<std::string> default_assumptions() {
    return {"b2(G) = 9 (Godeaux surface)", "q(G) = 0, so NS(G) = Pic(G)", "K_G^2 = 1",
            "Tors Pic(G) = Z/5, so every torsion class t satisfies 5t = 0"};
}

IntersectionLattice assemble(const LatticeInput& in) {
    const int c = static_cast<int>(in.class_names.size());
    const int n = 2 * in.cusp_orbits + c;
    IntersectionLattice L;
    for (int i = 0; i < in.cusp_orbits; ++i) {
        L.labels.push_back("A" + std::to_string(i + 1));
        L.labels.push_back("A" + std::to_string(i + 1) + "'");
    }
    for (const auto& s : in.class_names) L.labels.push_back(s);
    L.matrix = IMat::Zero(n, n);
    L.k_degree.assign(n, 0);
    for (int i = 0; i < in.cusp_orbits; ++i) {
        L.matrix(2 * i, 2 * i) = L.matrix(2 * i + 1, 2 * i + 1) = -2;
        L.matrix(2 * i, 2 * i + 1) = L.matrix(2 * i + 1, 2 * i) = 1;
    }
    auto quotient = [&](long long s, const std::string& what) {
        if (s % in.group_order != 0)
            throw NonIntegral(what + ": orbit sum " + std::to_string(s) + " not divisible by " +
                              std::to_string(in.group_order));
        return s / in.group_order;
    };
    const int off = 2 * in.cusp_orbits;
    for (int k = 0; k < c; ++k) {
        L.k_degree[off + k] = in.class_k_degree.at(k);
        for (int i = 0; i < in.cusp_orbits; ++i) {
            long long a = quotient(in.orbit_sum_a[k][i], in.class_names[k] + ".A" + std::to_string(i + 1));
            long long b = quotient(in.orbit_sum_a2[k][i], in.class_names[k] + ".A" + std::to_string(i + 1) + "'");
            L.matrix(2 * i, off + k) = L.matrix(off + k, 2 * i) = a;
            L.matrix(2 * i + 1, off + k) = L.matrix(off + k, 2 * i + 1) = b;
        }
        for (int j = 0; j < c; ++j) {
            if (in.orbit_sum_t[k][j] != in.orbit_sum_t[j][k]) throw std::logic_error("class pairing not symmetric");
            L.matrix(off + k, off + j) = quotient(in.orbit_sum_t[k][j], in.class_names[k] + "." + in.class_names[j]);
        }
    }
    L.assumptions = default_assumptions();
    return L;
}

Integer determinant(const IMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    ZMat a = to_z(m);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::size_t int_rank(const IMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    ZMat a = to_z(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Integer f = a[i][c], g = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
        }
        ++r;
    }
    return r;
}

std::vector<IVec> nullspace_int(const IMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    ZMat a = to_z(m);
    ZMat u(cols, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
    // unimodular column operations: a <- a U, bring a to column echelon form
    auto col_op = [&](std::size_t c1, std::size_t c2, const Integer& p, const Integer& q, const Integer& r,
                      const Integer& s) {
        // (col c1, col c2) <- (p c1 + q c2, r c1 + s c2)
        for (std::size_t i = 0; i < rows; ++i) {
            Integer x = a[i][c1], y = a[i][c2];
            a[i][c1] = p * x + q * y;
            a[i][c2] = r * x + s * y;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            Integer x = u[i][c1], y = u[i][c2];
            u[i][c1] = p * x + q * y;
            u[i][c2] = r * x + s * y;
        }
    };
    std::size_t piv = 0;
    for (std::size_t r = 0; r < rows && piv < cols; ++r) {
        for (std::size_t c = piv + 1; c < cols; ++c) {
            if (a[r][c] == 0) continue;
            Integer x = a[r][piv], y = a[r][c], g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            // [s, -y/g; t, x/g] has determinant 1
            col_op(piv, c, s, t, Integer(-y / g), Integer(x / g));
        }
        if (a[r][piv] != 0) ++piv;
    }
    // columns piv.. of U span the kernel
    std::vector<std::vector<Integer>> basis;
    for (std::size_t c = piv; c < cols; ++c) {
        std::vector<Integer> v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][c];
        basis.push_back(std::move(v));
    }
    // Hermite normal form of the basis rows
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < basis.size(); ++c) {
        for (std::size_t i = row + 1; i < basis.size(); ++i) {
            while (basis[i][c] != 0) {
                Integer q = basis[row][c] / basis[i][c];
                for (std::size_t j = 0; j < cols; ++j) basis[row][j] -= q * basis[i][j];
                std::swap(basis[row], basis[i]);
            }
        }
        if (basis[row][c] == 0) continue;
        if (basis[row][c] < 0)
            for (auto& x : basis[row]) x = -x;
        for (std::size_t i = 0; i < row; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), basis[i][c].get_mpz_t(), basis[row][c].get_mpz_t());
            for (std::size_t j = 0; j < cols; ++j) basis[i][j] -= q * basis[row][j];
        }
        ++row;
    }
    std::vector<IVec> out;
    for (const auto& b : basis) {
        IVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = to_ll(b[i]);
        out.push_back(v);
    }
    return out;
}

std::vector<int> Labelling::index_map(int cusps, int classes) const {
    std::vector<int> map;
    for (int i = 0; i < cusps; ++i) {
        int o = cusp_perm.empty() ? i : cusp_perm[i];
        bool s = !swap.empty() && swap[i];
        map.push_back(2 * o + (s ? 1 : 0));
        map.push_back(2 * o + (s ? 0 : 1));
    }
    for (int c = 0; c < classes; ++c) map.push_back(2 * cusps + (class_perm.empty() ? c : class_perm[c]));
    return map;
}

std::string Labelling::str(int cusps, int classes) const {
    std::string s = "cusp orbits (";
    for (int i = 0; i < cusps; ++i) s += (i ? "," : "") + std::to_string((cusp_perm.empty() ? i : cusp_perm[i]) + 1);
    s += "), swapped pairs {";
    bool first = true;
    for (int i = 0; i < cusps; ++i)
        if (!swap.empty() && swap[i]) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    s += "}, classes (";
    for (int c = 0; c < classes; ++c) s += (c ? "," : "") + std::to_string((class_perm.empty() ? c : class_perm[c]) + 1);
    return s + ")";
}

IMat relabel(const IMat& m, const Labelling& L, int cusps) {
    const int n = static_cast<int>(m.rows());
    auto map = L.index_map(cusps, n - 2 * cusps);
    IMat r(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r(a, b) = m(map[a], map[b]);
    return r;
}

IVec relabel(const IVec& v, const Labelling& L, int cusps) {
    const int n = static_cast<int>(v.size());
    auto map = L.index_map(cusps, n - 2 * cusps);
    IVec r(n);
    for (int a = 0; a < n; ++a) r[a] = v[map[a]];
    return r;
}

LabelMatch match_up_to_relabelling(const IMat& m, const IMat& target, int cusps) {
    const int n = static_cast<int>(m.rows());
    const int classes = n - 2 * cusps;
    if (target.rows() != n || target.cols() != n) throw std::invalid_argument("matrix sizes differ");
    LabelMatch best;
    best.mismatches = static_cast<std::size_t>(-1);
    std::vector<int> cp(cusps), kp(classes);
    std::iota(cp.begin(), cp.end(), 0);
    do {
        for (int mask = 0; mask < (1 << cusps); ++mask) {
            std::iota(kp.begin(), kp.end(), 0);
            do {
                Labelling L;
                L.cusp_perm = cp;
                for (int i = 0; i < cusps; ++i) L.swap.push_back((mask >> i) & 1);
                L.class_perm = kp;
                IMat r = relabel(m, L, cusps);
                std::vector<std::pair<int, int>> diff;
                for (int a = 0; a < n; ++a)
                    for (int b = a; b < n; ++b)
                        if (r(a, b) != target(a, b)) diff.emplace_back(a, b);
                if (diff.size() < best.mismatches) {
                    best.labelling = L;
                    best.mismatches = diff.size();
                    best.differing = diff;
                }
            } while (std::next_permutation(kp.begin(), kp.end()));
        }
    } while (std::next_permutation(cp.begin(), cp.end()));
    return best;
}

DivisibilityCertificate divisibility_certificate(const IntersectionLattice& lat, const IVec& v, int cusps) {
    DivisibilityCertificate C;
    C.v = v;
    C.assumptions = lat.assumptions;
    const int n = static_cast<int>(v.size());
    const int classes = n - 2 * cusps;
    if (lat.matrix.rows() != n) throw std::invalid_argument("vector length does not match the lattice");
    if ((lat.matrix * v).cwiseAbs().sum() != 0) {
        C.failure = "v is not in the nullspace";
        return C;
    }
    if (determinant(lat.matrix) != 0) {
        C.failure = "determinant is nonzero";
        return C;
    }
    C.relation_v = combination(v, lat.labels) + " ≡ t";
    C.transcript.push_back("M v = 0, so D_v = " + combination(v, lat.labels) + " has D_v . X = 0 for every listed curve X");
    if (!lat.k_degree.empty()) {
        for (int i = 0; i < n; ++i) C.k_dot_v += lat.k_degree[i] * v[i];
        C.numerically_trivial = C.k_dot_v == 0;
        C.transcript.push_back("K . D_v = " + std::to_string(C.k_dot_v) + ", D_v^2 = 0, K^2 = " +
                               std::to_string(lat.k_square));
        C.numerically_trivial = C.numerically_trivial && lat.k_square > 0;
        if (C.numerically_trivial)
            C.transcript.push_back("Hodge index: D_v is numerically trivial, hence a torsion class t");
    }
    // swaps in order of increasing count; class exchange last
    std::vector<std::pair<int, bool>> order;
    for (int cs = 0; cs < (classes >= 2 ? 2 : 1); ++cs)
        for (int mask = 0; mask < (1 << cusps); ++mask) order.emplace_back(mask, cs == 1);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int pa = __builtin_popcount(a.first) + a.second, pb = __builtin_popcount(b.first) + b.second;
        return pa < pb;
    });
    IVec pattern = IVec::Zero(n);
    for (int i = 0; i < cusps; ++i) {
        pattern[2 * i] = 2;
        pattern[2 * i + 1] = 1;
    }
    for (const auto& [mask, cswap] : order) {
        Labelling L;
        for (int i = 0; i < cusps; ++i) L.swap.push_back((mask >> i) & 1);
        if (cswap) {
            L.class_perm.resize(classes);
            std::iota(L.class_perm.begin(), L.class_perm.end(), 0);
            std::swap(L.class_perm[0], L.class_perm[1]);
        }
        IVec w = relabel(v, L, cusps);
        IVec r(n);
        for (int i = 0; i < n; ++i) r[i] = mod3(w[i]);
        if (r != pattern) continue;
        long long g = 0;
        for (int i = 0; i < n; ++i) g = std::gcd(g, v[i] < 0 ? -v[i] : v[i]);
        if (g != 1) {
            C.failure = "v is not primitive";
            return C;
        }
        C.ok = true;
        C.swaps = L.swap;
        C.class_swap = cswap;
        C.residues = r;
        C.pattern = pattern;
        C.w = (w - pattern) / 3;
        auto map = L.index_map(cusps, classes);
        std::vector<std::string> lab;
        for (int a = 0; a < n; ++a) lab.push_back(lat.labels[map[a]]);
        // relation in the original labels, listed pair by pair
        std::string rel;
        for (int i = 0; i < cusps; ++i) {
            bool s = L.swap[i];
            const std::string& A = lat.labels[2 * i];
            const std::string& A2 = lat.labels[2 * i + 1];
            rel += label_term(s ? 1 : 2, A, rel.empty()) + label_term(s ? 2 : 1, A2, false);
        }
        C.relation = rel + " ≡ 3L";
        IVec wo = IVec::Zero(n);
        for (int a = 0; a < n; ++a) wo[map[a]] = C.w[a];
        C.l_expression = "L = 2t - (" + combination(wo, lat.labels) + ")";
        // replay: pattern + 3 W = v in the swapped labels
        bool replay = (pattern + 3 * C.w) == w;
        C.transcript.push_back("swapped pairs: " + L.str(cusps, classes));
        C.transcript.push_back("v mod 3 = " + vec_str(r) + " in the swapped labelling");
        C.transcript.push_back("v = P + 3W with W = " + vec_str(C.w) + (replay ? " (replayed)" : " (REPLAY FAILED)"));
        C.transcript.push_back("t = 6t since 5t = 0, so P = t - 3W = 3(2t - W)");
        C.transcript.push_back(C.relation + ", " + C.l_expression);
        if (!replay) {
            C.ok = false;
            C.failure = "replay failed";
        }
        return C;
    }
    C.failure = "no mod-3 labelling";
    return C;
}

DivisibilityCertificate certify_from_nullspace(const IntersectionLattice& lat, const std::vector<IVec>& basis,
                                               int cusps) {
    DivisibilityCertificate last;
    last.failure = "empty nullspace";
    last.assumptions = lat.assumptions;
    if (basis.empty()) return last;
    const int k = static_cast<int>(basis.size());
    if (k > 12) throw std::invalid_argument("nullspace too large for the residue search");
    const Eigen::Index n = basis[0].size();
    std::vector<std::vector<int>> combos;
    int total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (int code = 1; code < total; ++code) {
        std::vector<int> c(k);
        for (int i = 0, x = code; i < k; ++i, x /= 3) c[i] = x % 3 == 2 ? -1 : x % 3;
        combos.push_back(c);
    }
    auto weight = [](const std::vector<int>& c) { return std::count_if(c.begin(), c.end(), [](int x) { return x; }); };
    std::stable_sort(combos.begin(), combos.end(), [&](const auto& a, const auto& b) { return weight(a) < weight(b); });
    last.failure = "no nullspace vector has the mod-3 pattern";
    for (const auto& co : combos) {
        IVec v = IVec::Zero(n);
        for (int i = 0; i < k; ++i) v += co[i] * basis[i];
        bool fits = true;
        for (int i = 0; i < cusps && fits; ++i) {
            long long a = mod3(v[2 * i]), b = mod3(v[2 * i + 1]);
            fits = a != 0 && (a + b) % 3 == 0;
        }
        for (Eigen::Index i = 2 * cusps; i < n && fits; ++i) fits = mod3(v[i]) == 0;
        if (!fits) continue;
        long long g = 0;
        for (Eigen::Index i = 0; i < n; ++i) g = std::gcd(g, v[i] < 0 ? -v[i] : v[i]);
        v /= g;  // g is prime to 3 here
        for (Eigen::Index i = 0; i < n; ++i)
            if (v[i] != 0) {
                if (v[i] < 0) v = -v;
                break;
            }
        auto cert = divisibility_certificate(lat, v, cusps);
        if (cert.ok) return cert;
        last = cert;
    }
    return last;
}

IMat reference_matrix() {
    IMat m(9, 9);
    m << -2, 1, 0, 0, 0, 0, 1, 1, 2,
          1, -2, 0, 0, 0, 0, 0, 2, 2,
          0, 0, -2, 1, 0, 0, 0, 2, 1,
          0, 0, 1, -2, 0, 0, 2, 0, 1,
          0, 0, 0, 0, -2, 1, 1, 1, 2,
          0, 0, 0, 0, 1, -2, 2, 0, 2,
          1, 0, 0, 2, 1, 2, -4, 0, 0,
          1, 2, 2, 0, 1, 0, 0, -4, 0,
          2, 2, 1, 1, 2, 2, 0, 0, -1;
    return m;
}

IVec reference_nullvector() {
    IVec v(9);
    v << 2, 4, 2, -2, -2, -4, -3, 3, 0;
    return v;
}

std::string vec_str(const IVec& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace qc
