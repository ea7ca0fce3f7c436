#pragma once

#include "qc/parse.hpp"
#include "qc/tower.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qc {

// Point of P^3 normalized so that the last nonzero coordinate is 1.
template <class K>
struct ProjPoint {
    std::vector<K> c;

    ProjPoint() = default;
    explicit ProjPoint(std::vector<K> coords) : c(std::move(coords)) { normalize(); }

    int last_nonzero() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!is_zero(c[i])) return i;
        return -1;
    }
    void normalize() {
        int j = last_nonzero();
        if (j < 0) throw std::invalid_argument("projective point with all coordinates zero");
        K inv = inverse(c[j]);
        for (auto& x : c) x = x * inv;
    }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c == b.c; }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ":";
            s += to_string(c[i]);
        }
        return s + ")";
    }
};

inline std::strong_ordering operator<=>(const ProjPoint<Cyclo>& a, const ProjPoint<Cyclo>& b) {
    return a.c <=> b.c;
}

using RatPoint = ProjPoint<Cyclo>;

inline ProjPoint<ExtElem> to_ext(const RatPoint& p) {
    ProjPoint<ExtElem> q;
    for (const auto& x : p.c) q.c.emplace_back(x);
    return q;
}

}  // namespace qc
