#include "qc/parse.hpp"

#include <cctype>

namespace qc {

namespace {

class Parser {
public:
    Parser(const std::string& s, const RingPtr& r) : s_(s), r_(r) {}

    Poly<Cyclo> run() {
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "empty input");
        Poly<Cyclo> p = expr();
        skip();
        if (pos_ != s_.size()) fail_trailing();
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail_trailing() {
        char c = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
            throw ParseError(pos_, "implicit multiplication is not allowed, expected '*'");
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    Poly<Cyclo> expr() {
        Poly<Cyclo> acc(r_);
        bool first = true;
        while (true) {
            char c = peek();
            bool neg = false;
            if (c == '+' || c == '-') {
                neg = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            Poly<Cyclo> t = term();
            acc = neg ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    Poly<Cyclo> term() {
        Poly<Cyclo> acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Poly<Cyclo> factor() {
        Poly<Cyclo> b = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t at = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError(at, "expected integer exponent after '^'");
            if (digits.size() > 4) throw ParseError(at, "exponent too large");
            b = b.pow(std::stoi(digits));
        }
        return b;
    }

    std::string read_digits() {
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(st, pos_ - st);
    }

    Poly<Cyclo> atom() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Poly<Cyclo> p = expr();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n(read_digits());
            Integer d(1);
            if (peek() == '/') {
                ++pos_;
                skip();
                std::size_t dat = pos_;
                std::string ds = read_digits();
                if (ds.empty()) throw ParseError(dat, "expected denominator after '/'");
                d = Integer(ds);
                if (d == 0) throw ParseError(dat, "zero denominator");
            }
            Rational q(n, d);
            q.canonicalize();
            return Poly<Cyclo>(r_, Cyclo(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(st, pos_ - st);
            int v = r_->index_of(id);
            if (v >= 0) return Poly<Cyclo>::var(r_, v);
            if (id == "e") return Poly<Cyclo>(r_, Cyclo::zeta());
            throw ParseError(st, "unknown identifier '" + id + "'");
        }
        if (c == '\0') throw ParseError(at, "unexpected end of input");
        throw ParseError(at, std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    RingPtr r_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly<Cyclo> parse_poly(const std::string& text, const RingPtr& ring) { return Parser(text, ring).run(); }

Cyclo parse_cyclo(const std::string& text) {
    static const RingPtr none = make_ring({});
    Poly<Cyclo> p = parse_poly(text, none);
    return p.constant_term();
}

CoeffText coeff_text(const Rational& c) {
    CoeffText t;
    t.negative = sgn(c) < 0;
    t.body = to_string(Rational(abs(c)));
    t.unit = t.body == "1";
    return t;
}

CoeffText coeff_text(const Cyclo& c) {
    if (c.is_rational()) return coeff_text(c.coeff(0));
    CoeffText t;
    t.body = "(" + c.str() + ")";
    return t;
}

CoeffText coeff_text(const ExtElem& c) {
    if (!c.tower() || c.is_base()) return coeff_text(c.base_value());
    CoeffText t;
    t.body = "(" + c.str() + ")";
    return t;
}

std::string mono_str(const Mono& m, const Ring& r) {
    std::string out;
    for (int i = 0; i < r.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += r.name(i);
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

}  // namespace qc
