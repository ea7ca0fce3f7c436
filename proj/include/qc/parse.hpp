#pragma once

#include "qc/poly.hpp"
#include "qc/tower.hpp"

#include <stdexcept>
#include <string>

namespace qc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Grammar: sums of products of factors; factor = atom ['^' integer];
// atom = integer | integer '/' integer | variable | 'e' | '(' expr ')'.
// Multiplication must be written with '*'.
Poly<Cyclo> parse_poly(const std::string& text, const RingPtr& ring = standard_ring());
Cyclo parse_cyclo(const std::string& text);

struct CoeffText {
    bool negative = false;
    std::string body;  // magnitude or parenthesized value
    bool unit = false;  // body is "1"
};

CoeffText coeff_text(const Rational& c);
CoeffText coeff_text(const Cyclo& c);
CoeffText coeff_text(const ExtElem& c);

std::string mono_str(const Mono& m, const Ring& r);

template <class K>
std::string print_poly(const Poly<K>& p) {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        CoeffText t = coeff_text(c);
        std::string ms = mono_str(m, *p.ring());
        if (t.negative) out += "-";
        else if (!out.empty()) out += "+";
        if (ms.empty()) out += t.body;
        else if (t.unit) out += ms;
        else out += t.body + "*" + ms;
    }
    return out;
}

}  // namespace qc
