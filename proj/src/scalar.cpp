#include "frobkit/scalar.hpp"

#include <cctype>
#include <limits>

namespace frobkit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p > (std::uint64_t{1} << 62)) throw std::invalid_argument("characteristic too large");
    return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
    std::string digits;
    if (text.rfind("Fp:", 0) == 0) digits = text.substr(3);
    else if (text.rfind("GF(", 0) == 0 && text.back() == ')') digits = text.substr(3, text.size() - 4);
    else if (!text.empty() && (text[0] == 'F' || text[0] == 'p')) digits = text.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("unrecognised field '" + text + "' (expected Q, F<p> or Fp:<p>)");
    return prime(std::stoull(digits));
}

std::string FieldSpec::to_string() const {
    return is_prime_field() ? "F" + std::to_string(characteristic) : "Q";
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto valid = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::domain_error("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

// --- Zp ---------------------------------------------------------------------

std::int64_t Zp::reduce(std::int64_t v, std::uint64_t p) {
    auto m = static_cast<std::int64_t>(p);
    v %= m;
    return v < 0 ? v + m : v;
}

Zp::Zp(long v, std::uint64_t p) : v_(p ? reduce(v, p) : v), p_(p) {}

std::uint64_t Zp::residue() const {
    if (!p_) throw std::logic_error("residue of an unbound constant");
    return static_cast<std::uint64_t>(v_);
}

Zp Zp::bound_to(std::uint64_t p) const {
    if (p_ && p_ != p) throw FieldMismatchError("F" + std::to_string(p_) + " vs F" + std::to_string(p));
    return p_ ? *this : Zp(v_, p);
}

std::uint64_t Zp::common_modulus(const Zp& a, const Zp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
        throw FieldMismatchError("F" + std::to_string(a.p_) + " vs F" + std::to_string(b.p_));
    return a.p_ ? a.p_ : b.p_;
}

Zp& Zp::operator+=(const Zp& o) {
    auto p = common_modulus(*this, o);
    if (!p) {
        v_ += o.v_;
        return *this;
    }
    auto a = static_cast<unsigned __int128>(reduce(v_, p)) + static_cast<unsigned __int128>(reduce(o.v_, p));
    v_ = static_cast<std::int64_t>(a % p);
    p_ = p;
    return *this;
}

Zp& Zp::operator-=(const Zp& o) {
    auto p = common_modulus(*this, o);
    if (!p) {
        v_ -= o.v_;
        return *this;
    }
    auto a = reduce(v_, p), b = reduce(o.v_, p);
    v_ = a >= b ? a - b : static_cast<std::int64_t>(p) - (b - a);
    p_ = p;
    return *this;
}

Zp& Zp::operator*=(const Zp& o) {
    auto p = common_modulus(*this, o);
    if (!p) {
        v_ *= o.v_;
        return *this;
    }
    auto a = static_cast<unsigned __int128>(reduce(v_, p)) * static_cast<unsigned __int128>(reduce(o.v_, p));
    v_ = static_cast<std::int64_t>(a % p);
    p_ = p;
    return *this;
}

Zp Zp::inverse() const {
    if (!p_) {
        if (v_ == 1 || v_ == -1) return *this;
        throw std::domain_error("inverse of an unbound constant");
    }
    if (v_ == 0) throw std::domain_error("division by zero");
    // extended Euclid on (v, p)
    __int128 r0 = static_cast<__int128>(p_), r1 = v_, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    __int128 inv = s0 % static_cast<__int128>(p_);
    if (inv < 0) inv += p_;
    Zp out;
    out.v_ = static_cast<std::int64_t>(inv);
    out.p_ = p_;
    return out;
}

bool operator==(const Zp& a, const Zp& b) {
    auto p = Zp::common_modulus(a, b);
    if (!p) return a.v_ == b.v_;
    return Zp::reduce(a.v_, p) == Zp::reduce(b.v_, p);
}

Zp ScalarTraits<Zp>::parse(const std::string& text, const FieldSpec& f) {
    Rational q = Rational::parse(text);
    auto p = f.characteristic;
    mpz_class num = q.numerator() % mpz_class(static_cast<unsigned long>(p));
    mpz_class den = q.denominator() % mpz_class(static_cast<unsigned long>(p));
    if (den == 0) throw std::domain_error("'" + text + "' has a denominator divisible by " + std::to_string(p));
    return Zp(num.get_si(), p) / Zp(den.get_si(), p);
}

}  // namespace frobkit
