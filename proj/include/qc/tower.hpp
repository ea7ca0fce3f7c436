#pragma once

#include "qc/cyclo.hpp"
#include "qc/upoly.hpp"

#include <exception>
#include <memory>
#include <string>
#include <vector>

namespace qc {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Raw element of a tower: dense coefficient vector in the monomial basis
// t_0^{e_0}...t_{h-1}^{e_{h-1}}, 0 <= e_i < deg_i, with t_0 varying fastest.
using Block = std::vector<Cyclo>;

// Triangular tower Q(e)[t_0]/(g_0)[t_1]/(g_1)... with squarefree monic g_L
// whose coefficients live on the lower levels. Levels need not be fields.
class Tower {
public:
    struct Level {
        std::string var;
        int deg = 0;
        std::vector<Block> poly;  // deg coefficients below the leading 1, each of size(level)
    };

    Tower() = default;

    int height() const { return static_cast<int>(levels_.size()); }
    const Level& level(int L) const { return levels_[L]; }
    // number of Q(e)-coordinates of an element using the first L levels
    int size(int L) const { return stride_[L]; }
    int size() const { return stride_.back(); }
    // total degree over Q(e)
    int degree() const { return size(); }
    std::vector<int> level_degrees() const;
    std::string str() const;

    // Raw arithmetic on elements using the first L levels.
    Block mul(int L, const Block& a, const Block& b) const;
    Block add(const Block& a, const Block& b) const;
    Block sub(const Block& a, const Block& b) const;
    Block neg(const Block& a) const;
    // Throws SplitEvent if a is a zero divisor, std::domain_error if a == 0.
    Block inv(int L, const Block& a) const;
    Block zero(int L) const { return Block(size(L), Cyclo(0)); }
    Block embed(int L, const Block& a) const;  // pad a lower-level element to level L
    Block generator(int L) const;               // t_L as an element of size(L+1)

    std::shared_ptr<Tower> clone() const { return std::make_shared<Tower>(*this); }
    // Build a tower with one more level. poly is given low degree first,
    // each coefficient a Block of size(); it is made monic and checked squarefree.
    // Throws std::invalid_argument if not squarefree; may throw SplitEvent.
    TowerPtr extend(const std::string& var, const std::vector<Block>& poly) const;

    // Maps an element of `from` (same height, defining polynomials dividing
    // those of from) into this tower.
    Block reembed(const Tower& from, const Block& a) const;

    static TowerPtr base();

private:
    friend class SplitEvent;
    std::vector<Level> levels_;
    std::vector<int> stride_{1};
    Block reembed_rec(const Tower& from, int L, const Block& a) const;
};

// Raised when a zero divisor is met at `level`: the defining polynomial there
// factors as f1*f2 (coprime, monic); branch towers carry each factor with all
// higher levels reduced accordingly.
class SplitEvent : public std::exception {
public:
    SplitEvent(const Tower& parent, int level, std::vector<Block> f1, std::vector<Block> f2);
    const char* what() const noexcept override { return "tower split"; }

    const Tower* origin;  // identity of the tower that raised the split
    int level;
    std::vector<Block> factor1, factor2;  // low degree first, monic (leading 1 included)
    TowerPtr branch1, branch2;

private:
    static TowerPtr make_branch(const Tower& parent, int level, const std::vector<Block>& f);
};

// Element of a tower, or a bare Q(e) constant when tower is null.
class ExtElem {
public:
    ExtElem() : v_{Cyclo(0)} {}
    ExtElem(long n) : v_{Cyclo(n)} {}            // NOLINT(implicit)
    ExtElem(const Cyclo& c) : v_{c} {}         // NOLINT(implicit)
    ExtElem(const Rational& c) : v_{Cyclo(c)} {}  // NOLINT(implicit)
    ExtElem(TowerPtr t, Block v);

    static ExtElem gen(const TowerPtr& t, int level);

    const TowerPtr& tower() const { return t_; }
    const Block& data() const { return v_; }
    // structural zero test (exact: representatives are reduced)
    bool is_zero() const;
    // true when the element lies in Q(e)
    bool is_base() const;
    Cyclo base_value() const { return v_[0]; }

    ExtElem operator-() const;
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }
    ExtElem& operator+=(const ExtElem& b) { return *this = *this + b; }
    ExtElem& operator-=(const ExtElem& b) { return *this = *this - b; }
    ExtElem& operator*=(const ExtElem& b) { return *this = *this * b; }

    // dynamic inversion: throws SplitEvent on zero divisors
    ExtElem inverse() const;
    // Decides zero vs unit; a zero divisor that is not zero raises SplitEvent.
    bool is_zero_or_split() const;

    ExtElem lift(const TowerPtr& to) const;
    friend bool operator==(const ExtElem& a, const ExtElem& b);

    std::string str() const;

private:
    static TowerPtr common(const ExtElem& a, const ExtElem& b);
    Block on(const TowerPtr& t) const;
    TowerPtr t_;
    Block v_;
};

inline bool is_zero(const ExtElem& a) { return a.is_zero(); }
inline ExtElem inverse(const ExtElem& a) { return a.inverse(); }
inline std::string to_string(const ExtElem& a) { return a.str(); }

// Convenience: a one-level tower Q(e)[t]/(g) for a univariate g over Q(e).
TowerPtr tower_from(const UPoly<Cyclo>& g, const std::string& var = "t");
// Adds level `var` with defining polynomial g (coefficients over `t`).
TowerPtr tower_extend(const TowerPtr& t, const UPoly<ExtElem>& g, const std::string& var);

// Runs fn(tower) and re-runs it on both branches whenever a split of that
// tower (or a refinement of it) is raised. Returns (branch tower, result) pairs.
template <class Fn>
auto run_branches(const TowerPtr& t, Fn&& fn) {
    using R = decltype(fn(t));
    std::vector<std::pair<TowerPtr, R>> out;
    std::vector<TowerPtr> todo{t};
    while (!todo.empty()) {
        TowerPtr cur = todo.back();
        todo.pop_back();
        try {
            out.emplace_back(cur, fn(cur));
        } catch (const SplitEvent& e) {
            if (e.origin != cur.get()) throw;
            todo.push_back(e.branch2);
            todo.push_back(e.branch1);
        }
    }
    return out;
}

}  // namespace qc
