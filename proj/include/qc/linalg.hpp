#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qc {

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
Mat<K> zero_mat(std::size_t r, std::size_t c) {
    return Mat<K>(r, std::vector<K>(c, K(0)));
}

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Mat<K> c = zero_mat<K>(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!is_zero(b[l][j])) c[i][j] = c[i][j] + a[i][l] * b[l][j];
        }
    return c;
}

template <class K>
std::vector<K> mat_vec(const Mat<K>& a, const std::vector<K>& v) {
    std::vector<K> r(a.size(), K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero(a[i][j]) && !is_zero(v[j])) r[i] = r[i] + a[i][j] * v[j];
    return r;
}

// In-place reduced row echelon form; returns pivot columns. Pivots are the
// first structurally nonzero entries (exact arithmetic); over a non-field
// tower the pivot inversion may raise a split.
template <class K>
std::vector<std::size_t> rref(Mat<K>& a) {
    std::vector<std::size_t> piv;
    const std::size_t rows = a.size();
    if (!rows) return piv;
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        K inv = inverse(a[r][c]);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            K f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(a[r][j])) a[i][j] = a[i][j] - f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class K>
std::size_t rank(Mat<K> a) {
    return rref(a).size();
}

// Basis of {v : a v = 0}: one vector per free column, with that entry 1.
template <class K>
std::vector<std::vector<K>> kernel(Mat<K> a, std::size_t cols) {
    std::vector<std::size_t> piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<K>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<K> v(cols, K(0));
        v[f] = K(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

// Solves a X = B for square invertible a (columns of B are right-hand sides).
template <class K>
Mat<K> solve(const Mat<K>& a, const Mat<K>& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    Mat<K> aug = a;
    for (std::size_t i = 0; i < n; ++i) aug[i].insert(aug[i].end(), b[i].begin(), b[i].end());
    auto piv = rref(aug);
    if (piv.size() < n || piv.back() >= n) throw std::domain_error("singular system");
    Mat<K> x = zero_mat<K>(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x[i][j] = aug[i][n + j];
    return x;
}

// Incremental detection of the first linear dependency in a sequence of
// vectors v_0, v_1, ...: add() returns true once the new vector depends on
// the previous ones, with relation() giving c (c_k = 1) such that sum c_i v_i = 0.
template <class K>
class DependencyFinder {
public:
    explicit DependencyFinder(std::size_t dim) : dim_(dim) {}

    bool add(std::vector<K> v) {
        const std::size_t k = count_++;
        std::vector<K> t(k + 1, K(0));
        t[k] = K(1);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t pc = pivots_[r];
            if (is_zero(v[pc])) continue;
            K f = v[pc];
            for (std::size_t j = 0; j < dim_; ++j)
                if (!is_zero(rows_[r][j])) v[j] = v[j] - f * rows_[r][j];
            for (std::size_t j = 0; j < trans_[r].size(); ++j)
                if (!is_zero(trans_[r][j])) t[j] = t[j] - f * trans_[r][j];
        }
        std::size_t pc = 0;
        while (pc < dim_ && is_zero(v[pc])) ++pc;
        if (pc == dim_) {
            relation_ = std::move(t);
            return true;
        }
        K inv = inverse(v[pc]);
        for (auto& x : v) x = x * inv;
        for (auto& x : t) x = x * inv;
        rows_.push_back(std::move(v));
        trans_.push_back(std::move(t));
        pivots_.push_back(pc);
        return false;
    }
    const std::vector<K>& relation() const { return relation_; }

private:
    std::size_t dim_, count_ = 0;
    std::vector<std::vector<K>> rows_, trans_;
    std::vector<std::size_t> pivots_;
    std::vector<K> relation_;
};

}  // namespace qc
