#include "wshom/polynomial.hpp"

#include <sstream>

namespace wshom {

Poly::Poly(Field f, std::vector<FieldElem> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.field() != f_) fail(errc::field_mismatch, "polynomial coefficient from a different field");
    prune();
}

Poly Poly::monomial(Field f, FieldElem c, unsigned deg) {
    Poly p(f);
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, FieldElem(f, 0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

void Poly::prune() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<unsigned> Poly::order() const {
    for (unsigned i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

FieldElem Poly::coeff(unsigned deg) const {
    return deg < c_.size() ? c_[deg] : FieldElem(f_, 0);
}

Poly Poly::operator-() const {
    Poly r(f_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (f_ != o.f_) fail(errc::field_mismatch, "polynomial addition across fields");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElem(f_, 0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    prune();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (f_ != o.f_) fail(errc::field_mismatch, "polynomial subtraction across fields");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldElem(f_, 0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    prune();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) fail(errc::field_mismatch, "polynomial multiplication across fields");
    Poly r(a.f_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElem(a.f_, 0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.prune();
    return r;
}

Poly Poly::scaled(const FieldElem& c) const {
    Poly r(f_);
    if (c.is_zero() || is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * c);
    r.prune();
    return r;
}

Poly Poly::shifted(unsigned k) const {
    Poly r(f_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + k, FieldElem(f_, 0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) fail(errc::zero_input, "polynomial division by zero");
    Poly q(f_), r = *this;
    const FieldElem lead_inv = d.c_.back().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const unsigned k = static_cast<unsigned>(r.degree() - d.degree());
        const FieldElem c = r.c_.back() * lead_inv;
        q += monomial(f_, c, k);
        r -= d.shifted(k).scaled(c);
    }
    return {std::move(q), std::move(r)};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.c_.back().inverse()); // monic
    return a;
}

bool Poly::operator==(const Poly& o) const {
    if (f_ != o.f_ || c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << "pi";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace wshom
