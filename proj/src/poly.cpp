#include "qc/poly.hpp"

#include <functional>

namespace qc {

Ring::Ring(std::vector<std::string> names, Order order, int block)
    : names_(std::move(names)), order_(order), block_(block) {
    if (static_cast<int>(names_.size()) > kMaxVars) throw std::invalid_argument("too many ring variables");
}

int Ring::index_of(const std::string& n) const {
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == n) return i;
    return -1;
}

namespace {

int grevlex(const Mono& a, const Mono& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

}  // namespace

int Ring::cmp(const Mono& a, const Mono& b) const {
    const int n = nvars();
    switch (order_) {
        case Order::DegRevLex:
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            for (int i = n - 1; i >= 0; --i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            return 0;
        case Order::Lex:
            for (int i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case Order::Block:
            if (int c = grevlex(a, b, 0, block_)) return c;
            return grevlex(a, b, block_, n);
    }
    return 0;
}

RingPtr make_ring(std::vector<std::string> names, Order order, int block) {
    return std::make_shared<const Ring>(std::move(names), order, block);
}

RingPtr standard_ring() {
    static const RingPtr r = make_ring({"x", "y", "z", "w"});
    return r;
}

RingPtr chart_ring(const RingPtr& r, int chart) {
    std::vector<std::string> names;
    for (int i = 0; i < r->nvars(); ++i)
        if (i != chart) names.push_back(r->name(i));
    return make_ring(std::move(names), r->order(), r->block());
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Mono> monomials_of_degree(const RingPtr& r, int d) {
    std::vector<Mono> out;
    const int n = r->nvars();
    Mono m;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            m.e[i] = static_cast<std::uint8_t>(left);
            m.deg = static_cast<std::uint16_t>(d);
            out.push_back(m);
            m.e[i] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            m.e[i] = static_cast<std::uint8_t>(k);
            rec(i + 1, left - k);
        }
        m.e[i] = 0;
    };
    if (n == 0) {
        if (d == 0) out.push_back(m);
        return out;
    }
    rec(0, d);
    std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return r->cmp(a, b) > 0; });
    return out;
}

}  // namespace qc
