#include "gseed/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gseed {

RationalPoly RationalPoly::monomial(const Rat& c, size_t pow) {
    RationalPoly p;
    if (c != 0) {
        p.c_.assign(pow + 1, Rat(0));
        p.c_[pow] = c;
    }
    return p;
}

RationalPoly RationalPoly::linear(const Rat& a) {
    RationalPoly p;
    p.c_ = {a, Rat(1)};
    return p;
}

const Rat& RationalPoly::operator[](size_t i) const { return c_[i]; }

Rat RationalPoly::coeff(long i) const {
    if (i < 0 || i >= (long)c_.size()) return Rat(0);
    return c_[(size_t)i];
}

void RationalPoly::set_coeff(size_t i, const Rat& v) {
    if (i >= c_.size()) {
        if (v == 0) return;
        c_.resize(i + 1, Rat(0));
    }
    c_[i] = v;
    trim();
}

const Rat& RationalPoly::leading() const {
    static const Rat zero(0);
    return c_.empty() ? zero : c_.back();
}

int RationalPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return (int)i;
    return -1;
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(out);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Rat RationalPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    RationalPoly out;
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = c_[i] * Rat((long)i);
    out.trim();
    return out;
}

RationalPoly RationalPoly::shift(const Rat& a) const {
    /* Horner in (X + a): P(X + a) built from the top coefficient down. */
    RationalPoly out;
    RationalPoly xa = RationalPoly::linear(a);
    for (size_t i = c_.size(); i-- > 0;) {
        out *= xa;
        out += RationalPoly(c_[i]);
    }
    return out;
}

RationalPoly RationalPoly::reflect() const {
    RationalPoly out(*this);
    for (size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
    return out;
}

RationalPoly RationalPoly::shift_up(size_t k) const {
    if (c_.empty() || k == 0) return k == 0 ? *this : RationalPoly();
    RationalPoly out;
    out.c_.assign(c_.size() + k, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i + k] = c_[i];
    return out;
}

RationalPoly RationalPoly::deflate(const Rat& root) const {
    if (c_.empty()) throw input_error("cannot deflate the zero polynomial");
    std::vector<Rat> q(c_.size() - 1, Rat(0));
    Rat carry(0);
    for (size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * root;
        q[i - 1] = carry;
    }
    Rat rem = c_[0] + carry * root;
    if (rem != 0) throw input_error("deflation by a non-root");
    RationalPoly out;
    out.c_ = std::move(q);
    out.trim();
    return out;
}

Int RationalPoly::denominator_lcm() const {
    Int d(1);
    for (const auto& c : c_) d = int_lcm(d, denominator(c));
    return d;
}

Rat RationalPoly::height() const {
    Rat h(0);
    for (const auto& c : c_) {
        Rat a = rat_abs(c);
        if (a > h) h = a;
    }
    return h;
}

std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    RationalPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = (size_t)(r.degree() - b.degree());
        Rat f = r.leading() / b.leading();
        q += RationalPoly::monomial(f, shift);
        r -= b.shift_up(shift) * f;
    }
    return {q, r};
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
    auto monic = [](RationalPoly p) {
        if (!p.is_zero()) p *= Rat(1) / p.leading();
        return p;
    };
    while (!b.is_zero()) {
        RationalPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

RationalPoly square_free_part(const RationalPoly& p) {
    if (p.degree() <= 1) return p;
    RationalPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return poly_divmod(p, g).first;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat a = rat_abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace gseed
