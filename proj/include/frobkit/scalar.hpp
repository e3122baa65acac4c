#ifndef FROBKIT_SCALAR_HPP
#define FROBKIT_SCALAR_HPP

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace frobkit {

// ---------------------------------------------------------------------------
// Errors shared by every layer.
// ---------------------------------------------------------------------------

struct FieldMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DoesNotSplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

/// The exact coefficient field: Q, or F_p for a prime p.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t characteristic = 0;

    static FieldSpec rationals() { return {}; }
    /// Throws std::invalid_argument unless p is prime.
    static FieldSpec prime(std::uint64_t p);
    /// Parses "Q", "F5", "Fp:5" or "GF(5)".
    static FieldSpec parse(const std::string& text);

    [[nodiscard]] bool is_prime_field() const { return kind == Kind::PrimeField; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Rational: arbitrary precision, always canonical (gmp keeps lowest terms).
// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "a", "-a", "a/b".
    static Rational parse(const std::string& text);

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] const mpq_class& value() const { return v_; }
    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
    [[nodiscard]] std::string to_string() const { return v_.get_str(); }
    [[nodiscard]] Rational inverse() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

// ---------------------------------------------------------------------------
// Zp: residue modulo a prime carried per element.
//
// A value with modulus 0 is an integer constant not yet bound to a field
// (what Eigen produces for Zero()/Identity()); it binds to the modulus of the
// other operand on first contact. Two different nonzero moduli never mix.
// ---------------------------------------------------------------------------

class Zp {
public:
    Zp() = default;
    Zp(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Zp(long v, std::uint64_t p);

    [[nodiscard]] std::uint64_t modulus() const { return p_; }
    [[nodiscard]] bool is_bound() const { return p_ != 0; }
    /// Residue in [0, p); requires a bound value.
    [[nodiscard]] std::uint64_t residue() const;
    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] std::string to_string() const { return std::to_string(v_); }
    [[nodiscard]] Zp inverse() const;
    [[nodiscard]] Zp bound_to(std::uint64_t p) const;

    Zp& operator+=(const Zp& o);
    Zp& operator-=(const Zp& o);
    Zp& operator*=(const Zp& o);
    Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend Zp operator-(const Zp& a) { return Zp(0) - a; }

    friend bool operator==(const Zp& a, const Zp& b);
    friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.to_string(); }

private:
    static std::uint64_t common_modulus(const Zp& a, const Zp& b);
    static std::int64_t reduce(std::int64_t v, std::uint64_t p);

    std::int64_t v_ = 0;
    std::uint64_t p_ = 0;
};

// ---------------------------------------------------------------------------
// Scalar concept and per-type traits used by the generic code.
// ---------------------------------------------------------------------------

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr FieldSpec::Kind kind = FieldSpec::Kind::Rationals;
    static Rational from_int(long v, const FieldSpec&) { return Rational(v); }
    static Rational parse(const std::string& text, const FieldSpec&) { return Rational::parse(text); }
};

template <>
struct ScalarTraits<Zp> {
    static constexpr FieldSpec::Kind kind = FieldSpec::Kind::PrimeField;
    static Zp from_int(long v, const FieldSpec& f) { return Zp(v, f.characteristic); }
    static Zp parse(const std::string& text, const FieldSpec& f);
};

template <class S>
concept ExactScalar = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
    ScalarTraits<S>::kind;
};

template <ExactScalar S>
S scalar(long v, const FieldSpec& f) {
    return ScalarTraits<S>::from_int(v, f);
}

/// Throws FieldMismatchError when the scalar type cannot represent `f`.
template <ExactScalar S>
void require_field_kind(const FieldSpec& f) {
    if (ScalarTraits<S>::kind != f.kind) throw FieldMismatchError("scalar type does not match field " + f.to_string());
}

/// Small uniformly drawn element: residues in [0,p) over F_p, integers in
/// [-3, 3] over Q. Uses raw engine output so the stream is portable.
template <ExactScalar S>
S random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
    if (f.is_prime_field()) return scalar<S>(static_cast<long>(rng() % f.characteristic), f);
    return scalar<S>(static_cast<long>(rng() % 7) - 3, f);
}

}  // namespace frobkit

namespace Eigen {

template <>
struct NumTraits<frobkit::Rational> : GenericNumTraits<frobkit::Rational> {
    using Real = frobkit::Rational;
    using NonInteger = frobkit::Rational;
    using Nested = frobkit::Rational;
    using Literal = frobkit::Rational;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};

template <>
struct NumTraits<frobkit::Zp> : GenericNumTraits<frobkit::Zp> {
    using Real = frobkit::Zp;
    using NonInteger = frobkit::Zp;
    using Nested = frobkit::Zp;
    using Literal = frobkit::Zp;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // FROBKIT_SCALAR_HPP
