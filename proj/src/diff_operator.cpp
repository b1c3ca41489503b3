#include "gseed/diff_operator.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "gseed/errors.hpp"
#include "gseed/rational.hpp"

namespace gseed {

namespace {

void trim_op(DiffOperator& a) {
    while (!a.P.empty() && a.P.back().is_zero()) a.P.pop_back();
}

DiffOperator constant_op(const Rat& c) {
    DiffOperator r;
    if (c != 0) r.P.push_back(RationalPoly::monomial(c, 0));
    return r;
}

}  // namespace

DiffOperator op_add(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r = a;
    if (r.P.size() < b.P.size()) r.P.resize(b.P.size());
    for (size_t k = 0; k < b.P.size(); ++k) r.P[k] += b.P[k];
    trim_op(r);
    return r;
}

DiffOperator op_sub(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r = a;
    if (r.P.size() < b.P.size()) r.P.resize(b.P.size());
    for (size_t k = 0; k < b.P.size(); ++k) r.P[k] -= b.P[k];
    trim_op(r);
    return r;
}

/* a o b. D^i o (q D^j) = sum_t C(i,t) q^(t) D^(i+j-t), so the product has
 * polynomial coefficients and order ord(a)+ord(b).
 */
DiffOperator op_mul(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r;
    if (a.is_zero() || b.is_zero()) return r;
    int na = a.order(), nb = b.order();
    r.P.assign((size_t)(na + nb) + 1, RationalPoly{});
    for (int j = 0; j <= nb; ++j) {
        if (b.P[(size_t)j].is_zero()) continue;
        /* derivatives of b's j-th coefficient, reused across i */
        std::vector<RationalPoly> der{b.P[(size_t)j]};
        for (int t = 1; t <= na; ++t) der.push_back(der.back().derivative());
        for (int i = 0; i <= na; ++i) {
            if (a.P[(size_t)i].is_zero()) continue;
            for (int t = 0; t <= i; ++t) {
                if (der[(size_t)t].is_zero()) continue;
                RationalPoly term = a.P[(size_t)i] * der[(size_t)t];
                term *= Rat(binomial(i, t));
                r.P[(size_t)(i + j - t)] += term;
            }
        }
    }
    trim_op(r);
    return r;
}

DiffOperator op_pow(const DiffOperator& a, unsigned e) {
    DiffOperator r = constant_op(Rat(1));
    for (unsigned i = 0; i < e; ++i) r = op_mul(r, a);
    return r;
}

RationalPoly apply_operator(const DiffOperator& L, const RationalPoly& f) {
    RationalPoly out;
    RationalPoly g = f;
    for (size_t k = 0; k < L.P.size(); ++k) {
        if (!L.P[k].is_zero()) out += L.P[k] * g;
        g = g.derivative();
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* expression parser                                                   */

namespace {

enum class Tok { Num, Z, D, T, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;  // digits for Num
    size_t pos;        // 1-based position in the input
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        size_t pos = i + 1;
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            out.push_back({Tok::Num, s.substr(i, j - i), pos});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case 'z': k = Tok::Z; break;
            case 'D': k = Tok::D; break;
            case 'T': k = Tok::T; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw input_error("operator expression: unexpected character '" +
                                  std::string(1, c) + "' at position " + std::to_string(pos));
        }
        out.push_back({k, std::string(1, c), pos});
        ++i;
    }
    out.push_back({Tok::End, "", s.size() + 1});
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    DiffOperator run() {
        DiffOperator r = expr();
        expect(Tok::End, "end of input");
        return r;
    }

  private:
    std::vector<Token> toks_;
    size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }

    [[noreturn]] void fail(const std::string& what, const Token& t) const {
        throw input_error("operator expression: " + what + " at position " +
                          std::to_string(t.pos));
    }

    void expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail("expected " + what, peek());
        next();
    }

    DiffOperator expr() {
        DiffOperator r = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Tok k = next().kind;
            DiffOperator rhs = term();
            r = (k == Tok::Plus) ? op_add(r, rhs) : op_sub(r, rhs);
        }
        return r;
    }

    DiffOperator term() {
        DiffOperator r = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            Token t = next();
            DiffOperator rhs = factor();
            if (t.kind == Tok::Star) {
                r = op_mul(r, rhs);
            } else {
                /* only division by a nonzero constant keeps coefficients polynomial */
                if (rhs.order() != 0 || rhs.P[0].degree() > 0)
                    fail("'/' requires a constant divisor", t);
                Rat c = rhs.P[0].coeff(0);
                if (c == 0) fail("division by zero", t);
                r = op_mul(r, constant_op(Rat(1) / c));
            }
        }
        return r;
    }

    DiffOperator factor() {
        if (peek().kind == Tok::Minus) {
            Token t = next();
            (void)t;
            return op_sub(DiffOperator{}, factor());
        }
        if (peek().kind == Tok::Plus) {
            next();
            return factor();
        }
        DiffOperator base = atom();
        if (peek().kind == Tok::Caret) {
            Token caret = next();
            if (peek().kind != Tok::Num) fail("'^' requires a nonnegative integer exponent", peek());
            Token e = next();
            if (e.text.size() > 4) fail("exponent too large", e);
            long v = std::strtol(e.text.c_str(), nullptr, 10);
            if (v > 512) fail("exponent too large", e);
            (void)caret;
            return op_pow(base, (unsigned)v);
        }
        return base;
    }

    DiffOperator atom() {
        Token t = next();
        switch (t.kind) {
            case Tok::Num:
                return constant_op(rat_from_string(t.text));
            case Tok::Z: {
                DiffOperator r;
                r.P.push_back(RationalPoly::monomial(Rat(1), 1));
                return r;
            }
            case Tok::D: {
                DiffOperator r;
                r.P.push_back(RationalPoly{});
                r.P.push_back(RationalPoly::monomial(Rat(1), 0));
                return r;
            }
            case Tok::T: {
                DiffOperator r;
                r.P.push_back(RationalPoly{});
                r.P.push_back(RationalPoly::monomial(Rat(1), 1));
                return r;
            }
            case Tok::LParen: {
                DiffOperator r = expr();
                expect(Tok::RParen, "')'");
                return r;
            }
            default:
                fail("expected a term", t);
        }
    }
};

}  // namespace

DiffOperator parse_operator(const std::string& text) {
    Parser p(text);
    DiffOperator r = p.run();
    if (r.is_zero()) throw input_error("operator expression is identically zero");
    if (r.order() == 0)
        throw input_error("operator expression has order 0: no differentiation present");
    return r;
}

DiffOperator operator_from_coefficients(const std::vector<std::vector<std::string>>& P) {
    DiffOperator r;
    for (const auto& row : P) {
        std::vector<Rat> c;
        c.reserve(row.size());
        for (const auto& s : row) c.push_back(rat_from_string(s));
        r.P.push_back(RationalPoly(std::move(c)));
    }
    trim_op(r);
    if (r.is_zero()) throw input_error("operator document: all coefficients are zero");
    if (r.order() == 0)
        throw input_error("operator document has order 0: no differentiation present");
    return r;
}

DiffOperator hypergeometric_operator(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size() + 1)
        throw input_error("hypergeometric parameters: need one more upper than lower parameter");
    for (const Rat& bj : b) {
        if (denominator(bj) == 1 && bj <= 0)
            throw input_error("hypergeometric parameters: lower parameter " + rat_to_string(bj) +
                              " is a nonpositive integer");
    }
    DiffOperator theta;
    theta.P.push_back(RationalPoly{});
    theta.P.push_back(RationalPoly::monomial(Rat(1), 1));

    DiffOperator lhs = theta;
    for (const Rat& bj : b) lhs = op_mul(lhs, op_add(theta, constant_op(bj - 1)));

    DiffOperator rhs = constant_op(Rat(1));
    for (const Rat& ai : a) rhs = op_mul(rhs, op_add(theta, constant_op(ai)));

    DiffOperator z;
    z.P.push_back(RationalPoly::monomial(Rat(1), 1));
    return op_sub(lhs, op_mul(z, rhs));
}

}  // namespace gseed
