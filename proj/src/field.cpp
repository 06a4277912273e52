#include "wshom/field.hpp"

namespace wshom {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) fail(errc::domain_error, "field modulus " + std::to_string(p) + " is not prime");
    return Field{field_kind::prime, p};
}

std::string Field::to_string() const {
    return kind == field_kind::rationals ? "Q" : "Fp:" + std::to_string(p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            fail(errc::parse_error, "bad field spec '" + text + "'");
        unsigned long p = std::stoul(num);
        if (p > 0xffffffffUL) fail(errc::parse_error, "field modulus out of range in '" + text + "'");
        return prime(static_cast<std::uint32_t>(p));
    }
    fail(errc::parse_error, "bad field spec '" + text + "' (expected Q or Fp:<p>)");
}

void FieldElem::normalize() {
    v_.canonicalize();
    if (f_.kind == field_kind::prime) {
        // Reduce to the canonical residue. Denominators can appear while
        // parsing ("1/2" over F_5); fold them in via the modular inverse.
        mpz_class den = v_.get_den();
        mpz_class num = v_.get_num();
        mpz_class mod(f_.p);
        if (den != 1) {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
                fail(errc::zero_input, "denominator vanishes in F_" + std::to_string(f_.p));
            num *= inv;
        }
        mpz_class r = num % mod;
        if (r < 0) r += mod;
        v_ = mpq_class(r);
    }
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (f_ != o.f_)
        fail(errc::field_mismatch,
             "field mismatch: " + f_.to_string() + " vs " + o.f_.to_string());
}

FieldElem FieldElem::operator-() const {
    FieldElem r(f_, -v_);
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same_field(o);
    v_ += o.v_;
    normalize();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    check_same_field(o);
    v_ -= o.v_;
    normalize();
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same_field(o);
    v_ *= o.v_;
    normalize();
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(errc::zero_input, "inverse of zero in " + f_.to_string());
    if (f_.kind == field_kind::rationals) return FieldElem(f_, 1 / v_);
    mpz_class inv, mod(f_.p);
    mpz_invert(inv.get_mpz_t(), mpz_class(v_.get_num()).get_mpz_t(), mod.get_mpz_t());
    return FieldElem(f_, mpq_class(inv));
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(o);
    return v_ == o.v_;
}

std::string FieldElem::to_string() const {
    return v_.get_str();
}

} // namespace wshom
