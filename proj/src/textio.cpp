#include "wsuper/textio.hpp"

#include <cctype>

namespace wsuper {

namespace {

std::string render_term(const Rational& coeff, int exp, bool leading) {
    // One monomial, sign folded into the separator for non-leading terms.
    std::string out;
    Rational mag = coeff.sign() < 0 ? -coeff : coeff;
    if (leading) {
        if (coeff.sign() < 0)
            out += "-";
    } else {
        out += coeff.sign() < 0 ? "-" : "+";
    }
    if (exp == 0) {
        out += mag.to_string();
        return out;
    }
    if (!mag.is_one())
        out += mag.to_string() + "*";
    out += "l";
    if (exp >= 2)
        out += "^" + std::to_string(exp);
    return out;
}

} // namespace

std::string render_poly(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool leading = true;
    for (int e = p.degree(); e >= 0; --e) {
        Rational c = p.coeff(e);
        if (c.is_zero())
            continue;
        out += render_term(c, e, leading);
        leading = false;
    }
    return out;
}

std::string render_scalar(const Scalar& s) {
    if (s.is_constant())
        return s.constant_value().to_string();
    const RatFunc& f = s.func();
    std::string out = "(" + render_poly(f.num()) + ")";
    if (f.den().degree() != 0 || !f.den().coeff(0).is_one())
        out += "/(" + render_poly(f.den()) + ")";
    return out;
}

std::string render_element(const Element& e) {
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : e.terms()) {
        if (!first)
            out += " + ";
        if (!c.is_one())
            out += render_scalar(c) + "*";
        out += b.to_string();
        first = false;
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char take() { return text[pos++]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseFailure(pos, std::string("expected '") + c + "'");
        ++pos;
    }
    [[noreturn]] void error(const std::string& what) const { throw ParseFailure(pos, what); }
};

mpz_class parse_digits(Cursor& cur) {
    std::size_t start = cur.pos;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        ++cur.pos;
    if (cur.pos == start)
        cur.error("expected digits");
    return mpz_class(cur.text.substr(start, cur.pos - start));
}

Rational parse_unsigned_rational(Cursor& cur) {
    mpz_class num = parse_digits(cur);
    mpz_class den = 1;
    // A '/' starts a denominator only when digits follow; "(l)/(l+1)" handles '(' elsewhere.
    if (cur.peek() == '/' && cur.pos + 1 < cur.text.size() &&
        std::isdigit(static_cast<unsigned char>(cur.text[cur.pos + 1]))) {
        ++cur.pos;
        den = parse_digits(cur);
        if (den == 0)
            cur.error("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

Rational parse_signed_rational(Cursor& cur) {
    bool neg = false;
    if (cur.peek() == '-') {
        neg = true;
        cur.take();
    }
    Rational r = parse_unsigned_rational(cur);
    return neg ? -r : r;
}

// poly := ['-'] mono (('+'|'-') mono)* ; mono := rational ['*' l-part] | l-part ; l-part := 'l' ['^' uint]
Poly parse_poly(Cursor& cur) {
    Poly acc;
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (cur.peek() == '-') {
                sign = -1;
                cur.take();
            }
        } else {
            if (cur.peek() == '+')
                cur.take();
            else if (cur.peek() == '-') {
                sign = -1;
                cur.take();
            } else
                break;
        }
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = parse_unsigned_rational(cur);
            have_coeff = true;
            if (cur.peek() == '*')
                cur.take();
        }
        int exp = 0;
        if (cur.peek() == 'l') {
            cur.take();
            exp = 1;
            if (cur.peek() == '^') {
                cur.take();
                mpz_class e = parse_digits(cur);
                if (e > 64)
                    cur.error("exponent too large");
                exp = static_cast<int>(e.get_si());
            }
        } else if (!have_coeff) {
            cur.error("expected monomial");
        }
        if (sign < 0)
            coeff = -coeff;
        acc = acc + Poly::monomial(coeff, exp);
        first = false;
    }
    if (first)
        cur.error("empty polynomial");
    return acc;
}

RatFunc parse_ratfunc_literal(Cursor& cur) {
    cur.expect('(');
    Poly num = parse_poly(cur);
    cur.expect(')');
    Poly den(Rational(1));
    if (cur.peek() == '/') {
        cur.take();
        cur.expect('(');
        den = parse_poly(cur);
        cur.expect(')');
        if (den.is_zero())
            cur.error("zero denominator polynomial");
    }
    return RatFunc(num, den);
}

Scalar parse_scalar_at(Cursor& cur, const ScalarMode& mode) {
    if (cur.peek() == '(')
        return Scalar::from_ratfunc(parse_ratfunc_literal(cur), mode);
    if (cur.peek() == 'l') {
        cur.take();
        return Scalar::lambda(mode);
    }
    return Scalar::from_rational(parse_signed_rational(cur), mode);
}

HalfInt parse_halfint_at(Cursor& cur) {
    bool neg = false;
    if (cur.peek() == '-') {
        neg = true;
        cur.take();
    }
    mpz_class num = parse_digits(cur);
    if (!num.fits_slong_p())
        cur.error("index out of range");
    std::int64_t twice = 2 * num.get_si();
    if (cur.peek() == '/') {
        cur.take();
        if (cur.peek() != '2')
            cur.error("half-integers use denominator 2");
        cur.take();
        twice /= 2;
    }
    return HalfInt(neg ? -twice : twice);
}

std::optional<Family> family_of(char c) {
    switch (c) {
        case 'L': return Family::L;
        case 'I': return Family::I;
        case 'G': return Family::G;
        case 'H': return Family::H;
        default: return std::nullopt;
    }
}

BasisIndex parse_basis_at(Cursor& cur, const AlgebraConfig& cfg) {
    auto fam = family_of(cur.peek());
    if (!fam)
        cur.error("expected generator L, I, G or H");
    cur.take();
    cur.expect('[');
    HalfInt idx = parse_halfint_at(cur);
    cur.expect(']');
    BasisIndex b{*fam, idx};
    std::size_t at = cur.pos;
    if (!cfg.index_valid(b))
        throw ParseFailure(at, b.to_string() + " is not a basis index for s = " + cfg.s_string());
    return b;
}

} // namespace

HalfInt parse_halfint(const std::string& text) {
    Cursor cur{text};
    HalfInt h = parse_halfint_at(cur);
    if (!cur.done())
        cur.error("trailing characters after half-integer");
    return h;
}

Scalar parse_scalar(const std::string& text, const ScalarMode& mode) {
    Cursor cur{text};
    cur.skip_ws();
    Scalar s = parse_scalar_at(cur, mode);
    cur.skip_ws();
    if (!cur.done())
        cur.error("trailing characters after scalar");
    return s;
}

Element parse_element(const std::string& text, const AlgebraConfig& cfg) {
    Cursor cur{text};
    cur.skip_ws();
    if (cur.done())
        cur.error("empty element");
    Element out;
    if (cur.peek() == '0') {
        cur.take();
        cur.skip_ws();
        if (!cur.done())
            cur.error("trailing characters after zero element");
        return out;
    }
    bool first = true;
    while (true) {
        cur.skip_ws();
        Scalar sign = Scalar::one(cfg.mode);
        if (first) {
            if (cur.peek() == '-') {
                // leading minus binds to the first coefficient
            }
        } else {
            if (cur.peek() == '+')
                cur.take();
            else if (cur.peek() == '-') {
                cur.take();
                sign = -sign;
            } else if (cur.done())
                break;
            else
                cur.error("expected '+' or '-' between terms");
            cur.skip_ws();
        }
        Scalar coeff = Scalar::one(cfg.mode);
        if (!family_of(cur.peek())) {
            coeff = parse_scalar_at(cur, cfg.mode);
            cur.skip_ws();
            cur.expect('*');
            cur.skip_ws();
        }
        BasisIndex b = parse_basis_at(cur, cfg);
        out.add_term(b, coeff * sign);
        first = false;
        cur.skip_ws();
        if (cur.done())
            break;
    }
    return out;
}

std::string Scalar::to_string() const { return render_scalar(*this); }

} // namespace wsuper
