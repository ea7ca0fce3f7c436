#include "qc/tower.hpp"

#include <stdexcept>
#include <utility>

namespace qc {

namespace {

bool block_zero(const Block& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

using BPoly = std::vector<Block>;  // polynomial over a tower level, low degree first

void btrim(BPoly& p) {
    while (!p.empty() && block_zero(p.back())) p.pop_back();
}

Block slice(const Block& a, int i, int width) {
    return Block(a.begin() + i * width, a.begin() + (i + 1) * width);
}

}  // namespace

std::vector<int> Tower::level_degrees() const {
    std::vector<int> d;
    for (const auto& l : levels_) d.push_back(l.deg);
    return d;
}

std::string Tower::str() const {
    std::string out = "Q(e)";
    for (int L = 0; L < height(); ++L) {
        out += "[" + levels_[L].var + "]/(deg " + std::to_string(levels_[L].deg) + ")";
    }
    return out;
}

Block Tower::add(const Block& a, const Block& b) const {
    Block c = a.size() >= b.size() ? a : b;
    const Block& o = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < o.size(); ++i) c[i] = a.size() >= b.size() ? c[i] + o[i] : o[i] + c[i];
    return c;
}

Block Tower::sub(const Block& a, const Block& b) const {
    Block c(std::max(a.size(), b.size()), Cyclo(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

Block Tower::neg(const Block& a) const {
    Block c = a;
    for (auto& x : c) x = -x;
    return c;
}

Block Tower::embed(int L, const Block& a) const {
    Block c = a;
    c.resize(size(L), Cyclo(0));
    return c;
}

Block Tower::generator(int L) const {
    Block g = zero(L + 1);
    if (levels_[L].deg >= 2) {
        g[stride_[L]] = Cyclo(1);
    } else {
        g = neg(levels_[L].poly[0]);
    }
    return g;
}

Block Tower::mul(int L, const Block& a, const Block& b) const {
    if (L == 0) return {a[0] * b[0]};
    const int d = levels_[L - 1].deg;
    const int B = stride_[L - 1];
    if (d == 1) return mul(L - 1, a, b);
    std::vector<Block> c(2 * d - 1, zero(L - 1));
    std::vector<Block> as, bs;
    for (int i = 0; i < d; ++i) {
        as.push_back(slice(a, i, B));
        bs.push_back(slice(b, i, B));
    }
    for (int i = 0; i < d; ++i) {
        if (block_zero(as[i])) continue;
        for (int j = 0; j < d; ++j) {
            if (block_zero(bs[j])) continue;
            c[i + j] = add(c[i + j], mul(L - 1, as[i], bs[j]));
        }
    }
    const auto& g = levels_[L - 1].poly;
    for (int k = 2 * d - 2; k >= d; --k) {
        if (block_zero(c[k])) continue;
        for (int j = 0; j < d; ++j) c[k - d + j] = sub(c[k - d + j], mul(L - 1, c[k], g[j]));
    }
    Block out;
    out.reserve(size(L));
    for (int i = 0; i < d; ++i) out.insert(out.end(), c[i].begin(), c[i].end());
    return out;
}

namespace {

// Polynomial arithmetic over the ring generated by the first L levels.
struct LevelRing {
    const Tower& t;
    int L;

    BPoly mulp(const BPoly& a, const BPoly& b) const {
        if (a.empty() || b.empty()) return {};
        BPoly c(a.size() + b.size() - 1, t.zero(L));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = t.add(c[i + j], t.mul(L, a[i], b[j]));
        btrim(c);
        return c;
    }
    BPoly subp(const BPoly& a, const BPoly& b) const {
        BPoly c(std::max(a.size(), b.size()), t.zero(L));
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) c[i] = t.sub(c[i], b[i]);
        btrim(c);
        return c;
    }
    void divmod(BPoly a, const BPoly& b, BPoly& q, BPoly& r) const {
        Block ilc = t.inv(L, b.back());
        q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, t.zero(L));
        while (a.size() >= b.size()) {
            Block c = t.mul(L, a.back(), ilc);
            std::size_t s = a.size() - b.size();
            q[s] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = t.sub(a[s + i], t.mul(L, c, b[i]));
            a.pop_back();
            btrim(a);
        }
        btrim(q);
        r = std::move(a);
    }
    BPoly monic(const BPoly& a) const {
        Block ilc = t.inv(L, a.back());
        BPoly m;
        for (const auto& c : a) m.push_back(t.mul(L, c, ilc));
        return m;
    }
    BPoly derivative(const BPoly& a) const {
        BPoly d;
        for (std::size_t i = 1; i < a.size(); ++i) {
            Block c = a[i];
            for (auto& x : c) x *= Cyclo(static_cast<long>(i));
            d.push_back(c);
        }
        btrim(d);
        return d;
    }
};

}  // namespace

Block Tower::inv(int L, const Block& a) const {
    if (L == 0) return {a[0].inverse()};
    if (block_zero(a)) throw std::domain_error("inverting zero in tower");
    const int d = levels_[L - 1].deg;
    const int B = stride_[L - 1];
    LevelRing R{*this, L - 1};
    BPoly r0 = levels_[L - 1].poly;
    r0.push_back(embed(L - 1, {Cyclo(1)}));
    BPoly r1;
    for (int i = 0; i < d; ++i) r1.push_back(slice(a, i, B));
    btrim(r1);
    BPoly s0, s1{embed(L - 1, {Cyclo(1)})};
    while (r1.size() > 1) {
        BPoly q, r;
        R.divmod(r0, r1, q, r);
        BPoly s = R.subp(s0, R.mulp(q, s1));
        if (r.empty()) {
            BPoly f1 = R.monic(r1);
            BPoly g = levels_[L - 1].poly;
            g.push_back(embed(L - 1, {Cyclo(1)}));
            BPoly f2, rem;
            R.divmod(g, f1, f2, rem);
            throw SplitEvent(*this, L - 1, f1, f2);
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Block ci = inv(L - 1, r1[0]);
    Block out;
    for (int i = 0; i < d; ++i) {
        Block c = i < static_cast<int>(s1.size()) ? mul(L - 1, s1[i], ci) : zero(L - 1);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

TowerPtr Tower::extend(const std::string& var, const std::vector<Block>& poly) const {
    const int H = height();
    LevelRing R{*this, H};
    BPoly g;
    for (const auto& c : poly) g.push_back(embed(H, c));
    btrim(g);
    if (g.size() < 2) throw std::invalid_argument("defining polynomial must have positive degree");
    g = R.monic(g);
    // squarefree: gcd(g, g') must be a unit
    BPoly a = g, b = R.derivative(g);
    while (!b.empty()) {
        BPoly q, r;
        R.divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() > 1) throw std::invalid_argument("defining polynomial of '" + var + "' is not squarefree");
    inv(H, a[0]);  // the final remainder must be invertible, may split
    auto t = std::make_shared<Tower>(*this);
    Level lv;
    lv.var = var;
    lv.deg = static_cast<int>(g.size()) - 1;
    lv.poly.assign(g.begin(), g.end() - 1);
    t->levels_.push_back(std::move(lv));
    t->stride_.push_back(size() * t->levels_.back().deg);
    return t;
}

Block Tower::reembed_rec(const Tower& from, int L, const Block& a) const {
    if (L == 0) return {a[0]};
    const int d = from.levels_[L - 1].deg;
    const int B = from.stride_[L - 1];
    Block T = generator(L - 1);
    Block acc = zero(L);
    for (int i = d; i-- > 0;) {
        acc = mul(L, acc, T);
        acc = add(acc, embed(L, reembed_rec(from, L - 1, slice(a, i, B))));
    }
    return acc;
}

Block Tower::reembed(const Tower& from, const Block& a) const {
    if (from.height() != height()) throw std::logic_error("reembed between towers of different height");
    return reembed_rec(from, height(), a);
}

TowerPtr Tower::base() {
    static const TowerPtr b = std::make_shared<Tower>();
    return b;
}

SplitEvent::SplitEvent(const Tower& parent, int level, std::vector<Block> f1, std::vector<Block> f2)
    : origin(&parent), level(level), factor1(std::move(f1)), factor2(std::move(f2)) {
    branch1 = make_branch(parent, level, factor1);
    branch2 = make_branch(parent, level, factor2);
}

TowerPtr SplitEvent::make_branch(const Tower& parent, int level, const std::vector<Block>& f) {
    auto t = std::make_shared<Tower>(parent);
    t->levels_[level].deg = static_cast<int>(f.size()) - 1;
    t->levels_[level].poly.assign(f.begin(), f.end() - 1);
    for (int L = 0; L < t->height(); ++L) t->stride_[L + 1] = t->stride_[L] * t->levels_[L].deg;
    // restrict the helper tower so reembed_rec sees only the finished levels
    for (int L = level + 1; L < t->height(); ++L) {
        for (auto& c : t->levels_[L].poly) c = t->reembed_rec(parent, L, c);
    }
    return t;
}

ExtElem::ExtElem(TowerPtr t, Block v) : t_(std::move(t)), v_(std::move(v)) {
    if (t_ && t_->height() == 0) t_.reset();
    const int want = t_ ? t_->size() : 1;
    if (static_cast<int>(v_.size()) != want) throw std::logic_error("tower element of wrong size");
}

ExtElem ExtElem::gen(const TowerPtr& t, int level) {
    return ExtElem(t, t->embed(t->height(), t->generator(level)));
}

bool ExtElem::is_zero() const { return block_zero(v_); }

bool ExtElem::is_base() const {
    for (std::size_t i = 1; i < v_.size(); ++i)
        if (!v_[i].is_zero()) return false;
    return true;
}

TowerPtr ExtElem::common(const ExtElem& a, const ExtElem& b) {
    if (a.t_ == b.t_) return a.t_;
    if (!a.t_) return b.t_;
    if (!b.t_) return a.t_;
    throw std::logic_error("arithmetic between elements of different towers");
}

Block ExtElem::on(const TowerPtr& t) const {
    if (t_ == t) return v_;
    return t->embed(t->height(), v_);
}

ExtElem ExtElem::operator-() const {
    Block c = v_;
    for (auto& x : c) x = -x;
    return ExtElem(t_, std::move(c));
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    TowerPtr t = ExtElem::common(a, b);
    if (!t) return ExtElem(a.v_[0] + b.v_[0]);
    Block x = a.on(t), y = b.on(t);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return ExtElem(t, std::move(x));
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    TowerPtr t = ExtElem::common(a, b);
    if (!t) return ExtElem(a.v_[0] - b.v_[0]);
    Block x = a.on(t), y = b.on(t);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return ExtElem(t, std::move(x));
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    TowerPtr t = ExtElem::common(a, b);
    if (!t) return ExtElem(a.v_[0] * b.v_[0]);
    if (!a.t_ || !b.t_) {
        const Cyclo& s = a.t_ ? b.v_[0] : a.v_[0];
        Block x = a.t_ ? a.v_ : b.v_;
        for (auto& c : x) c *= s;
        return ExtElem(t, std::move(x));
    }
    return ExtElem(t, t->mul(t->height(), a.v_, b.v_));
}

ExtElem ExtElem::inverse() const {
    if (!t_) return ExtElem(v_[0].inverse());
    if (is_base()) {
        Block x = t_->zero(t_->height());
        x[0] = v_[0].inverse();
        return ExtElem(t_, std::move(x));
    }
    return ExtElem(t_, t_->inv(t_->height(), v_));
}

bool ExtElem::is_zero_or_split() const {
    if (is_zero()) return true;
    (void)inverse();
    return false;
}

ExtElem ExtElem::lift(const TowerPtr& to) const {
    if (!to || to->height() == 0) {
        if (t_) throw std::logic_error("cannot lift a tower element to the base field");
        return *this;
    }
    if (!t_ || t_ == to) return ExtElem(to, on(to));
    return ExtElem(to, to->reembed(*t_, v_));
}

bool operator==(const ExtElem& a, const ExtElem& b) {
    TowerPtr t = ExtElem::common(a, b);
    if (!t) return a.v_[0] == b.v_[0];
    return a.on(t) == b.on(t);
}

std::string ExtElem::str() const {
    if (!t_ || is_base()) return v_[0].str();
    std::string out;
    const int H = t_->height();
    for (int idx = 0; idx < static_cast<int>(v_.size()); ++idx) {
        if (v_[idx].is_zero()) continue;
        std::string mono;
        for (int L = 0; L < H; ++L) {
            int e = (idx / t_->size(L)) % t_->level(L).deg;
            if (e == 0) continue;
            mono += "*" + t_->level(L).var + (e > 1 ? "^" + std::to_string(e) : "");
        }
        if (!out.empty()) out += "+";
        out += "(" + v_[idx].str() + ")" + mono;
    }
    return out.empty() ? "0" : out;
}

TowerPtr tower_from(const UPoly<Cyclo>& g, const std::string& var) {
    std::vector<Block> p;
    for (const auto& c : g.coeffs()) p.push_back({c});
    return Tower::base()->extend(var, p);
}

TowerPtr tower_extend(const TowerPtr& t0, const UPoly<ExtElem>& g, const std::string& var) {
    TowerPtr t = t0 ? t0 : Tower::base();
    std::vector<Block> p;
    for (const auto& c : g.coeffs()) p.push_back(c.lift(t).data());
    return t->extend(var, p);
}

}  // namespace qc
