#include "wshom/local_element.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace wshom {

LocalElement LocalElement::from_poly(Poly p) {
    Field f = p.field();
    return LocalElement(std::move(p), Poly::constant(f, 1));
}

LocalElement LocalElement::from_fraction(Poly num, Poly den) {
    if (num.field() != den.field()) fail(errc::field_mismatch, "fraction parts from different fields");
    if (den.is_zero()) fail(errc::zero_input, "fraction with zero denominator");
    LocalElement e(std::move(num), std::move(den));
    e.canonicalize();
    return e;
}

void LocalElement::canonicalize() {
    const Field f = num_.field();
    if (num_.is_zero()) {
        den_ = Poly::constant(f, 1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const FieldElem c = den_.at_zero();
    if (c.is_zero())
        fail(errc::not_divisible, "value lies outside the local ring (denominator vanishes at pi = 0)");
    if (!c.is_one()) {
        const FieldElem inv = c.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Valuation LocalElement::valuation() const {
    auto ord = num_.order();
    return ord ? Valuation::of(*ord) : Valuation::inf();
}

FieldElem LocalElement::residue() const {
    return num_.at_zero();
}

bool LocalElement::is_monomial() const {
    if (!den_.is_one() || num_.is_zero()) return false;
    return num_.order() && static_cast<int>(*num_.order()) == num_.degree();
}

unsigned LocalElement::monomial_degree() const {
    if (!is_monomial()) fail(errc::domain_error, "element is not a monomial");
    return *num_.order();
}

FieldElem LocalElement::monomial_coeff() const {
    if (!is_monomial()) fail(errc::domain_error, "element is not a monomial");
    return num_.coeff(*num_.order());
}

LocalElement LocalElement::operator-() const {
    return LocalElement(-num_, den_);
}

LocalElement& LocalElement::operator+=(const LocalElement& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

LocalElement& LocalElement::operator-=(const LocalElement& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

LocalElement& LocalElement::operator*=(const LocalElement& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

LocalElement LocalElement::inverse() const {
    if (is_zero()) fail(errc::zero_input, "inverse of zero");
    if (valuation().value > 0)
        fail(errc::not_a_unit, "inverse of a non-unit (valuation " + valuation().to_string() + ")");
    LocalElement r(den_, num_);
    r.canonicalize();
    return r;
}

LocalElement LocalElement::divide_exact(const LocalElement& a, const LocalElement& b) {
    if (b.is_zero()) fail(errc::zero_input, "exact division by zero");
    if (a.is_zero()) return zero(a.field());
    if (b.valuation() < a.valuation() || b.valuation() == a.valuation()) {
        LocalElement r(a.num_ * b.den_, a.den_ * b.num_);
        r.canonicalize();
        return r;
    }
    fail(errc::not_divisible, "exact division failure: valuation " + a.valuation().to_string() +
                                  " < " + b.valuation().to_string());
}

// ---- rendering ----------------------------------------------------------

namespace {

// Over Q, scale both parts by the lcm of all coefficient denominators so
// the printed form has integer coefficients ("pi/2" instead of "1/2*pi").
mpz_class coeff_denominator_lcm(const Poly& p) {
    mpz_class l = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        const FieldElem c = p.coeff(static_cast<unsigned>(i));
        if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den().get_mpz_t());
    }
    return l;
}

int term_count(const Poly& p) {
    int n = 0;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(static_cast<unsigned>(i)).is_zero()) ++n;
    return n;
}

std::string fraction_part(const Poly& p) {
    const std::string s = p.to_string();
    return term_count(p) > 1 ? "(" + s + ")" : s;
}

} // namespace

std::string LocalElement::to_string() const {
    Poly num = num_, den = den_;
    if (field().kind == field_kind::rationals) {
        mpz_class l = coeff_denominator_lcm(num_);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coeff_denominator_lcm(den_).get_mpz_t());
        if (l != 1) {
            const FieldElem scale(field(), mpq_class(l));
            num = num.scaled(scale);
            den = den.scaled(scale);
        }
    }
    if (den.is_one()) return num.to_string();
    return fraction_part(num) + "/" + fraction_part(den);
}

// ---- parsing ------------------------------------------------------------

namespace {

struct Token {
    enum Kind { number, pi, caret, star, slash, plus, minus, lparen, rparen, end };
    Kind kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (c == 'p' && i + 1 < s.size() && s[i + 1] == 'i') {
            out.push_back({Token::pi, "pi", i});
            i += 2;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '^': k = Token::caret; break;
            case '*': k = Token::star; break;
            case '/': k = Token::slash; break;
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            default:
                fail(errc::parse_error,
                     "parse error at position " + std::to_string(i) + ": unexpected '" + std::string(1, c) + "'");
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::end, "", s.size()});
    return out;
}

class ElementParser {
public:
    ElementParser(Field f, const std::vector<Token>& toks) : f_(f), t_(toks) {}

    LocalElement run() {
        LocalElement v = sum();
        expect(Token::end, "end of input");
        return v;
    }

private:
    const Token& peek() const { return t_[i_]; }
    Token take() { return t_[i_++]; }

    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            fail(errc::parse_error, "parse error at position " + std::to_string(peek().pos) + ": expected " +
                                        what + ", got '" + peek().text + "'");
        take();
    }

    LocalElement sum() {
        bool neg = false;
        if (peek().kind == Token::plus || peek().kind == Token::minus) neg = take().kind == Token::minus;
        LocalElement v = product();
        if (neg) v = -v;
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            const bool sub = take().kind == Token::minus;
            LocalElement rhs = product();
            if (sub)
                v -= rhs;
            else
                v += rhs;
        }
        return v;
    }

    LocalElement product() {
        LocalElement v = atom();
        while (peek().kind == Token::star || peek().kind == Token::slash) {
            const bool div = take().kind == Token::slash;
            LocalElement rhs = atom();
            if (div) {
                if (rhs.is_zero())
                    fail(errc::parse_error,
                         "parse error at position " + std::to_string(peek().pos) + ": division by zero");
                v = LocalElement::from_fraction(v.num() * rhs.den(), v.den() * rhs.num());
            } else {
                v *= rhs;
            }
        }
        return v;
    }

    LocalElement atom() {
        const Token tok = peek();
        switch (tok.kind) {
            case Token::number:
                take();
                return LocalElement::from_poly(Poly::constant(f_, FieldElem(f_, mpq_class(tok.text))));
            case Token::pi: {
                take();
                unsigned deg = 1;
                if (peek().kind == Token::caret) {
                    take();
                    if (peek().kind != Token::number)
                        fail(errc::parse_error, "parse error at position " + std::to_string(peek().pos) +
                                                    ": expected exponent after '^'");
                    deg = static_cast<unsigned>(std::stoul(take().text));
                }
                return LocalElement::pi_power(f_, deg);
            }
            case Token::lparen: {
                take();
                LocalElement v = sum();
                expect(Token::rparen, "')'");
                return v;
            }
            default:
                fail(errc::parse_error, "parse error at position " + std::to_string(tok.pos) + ": unexpected '" +
                                            (tok.kind == Token::end ? "end of input" : tok.text) + "'");
        }
    }

    Field f_;
    const std::vector<Token>& t_;
    size_t i_ = 0;
};

} // namespace

LocalElement LocalElement::parse(Field f, const std::string& text) {
    const std::vector<Token> toks = lex(text);
    return ElementParser(f, toks).run();
}

} // namespace wshom
