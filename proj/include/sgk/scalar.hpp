#pragma once

// Exact scalar fields: the rationals (ground truth) and prime fields F_p with
// a 64-bit modulus. Every scalar carries its field; mixing fields throws.

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>

namespace sgk {

class Field {
public:
    enum class Kind { Rational, Prime };

    static Field rational() { return Field(Kind::Rational, 0); }

    /// Prime field F_p. Requires p prime and p > 2^30.
    static Field prime(std::uint64_t p);

    /// Parses "rational" or "fp:<p>".
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    std::uint64_t modulus() const { return p_; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

class Scalar {
public:
    /// Rational zero.
    Scalar() : field_(Field::rational()), value_(mpq_class(0)) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_rational(const Field& f, const mpq_class& q);

    /// Accepts "n", "n/d", and finite decimals such as "-1.25".
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;

    /// Canonical text: "n" or "n/d" in lowest terms for rationals, the residue
    /// in [0, p) for prime fields.
    std::string to_string() const;

    /// The underlying rational. Throws for prime-field scalars.
    const mpq_class& rational() const;

    Scalar inverse() const;
    Scalar pow(long long e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    struct Residue {
        std::uint64_t v;
    };
    Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
    Scalar(Field f, Residue r) : field_(f), value_(r) {}

    void require_same_field(const Scalar& o) const;
    std::uint64_t residue() const { return std::get<Residue>(value_).v; }

    Field field_;
    std::variant<mpq_class, Residue> value_;
};

} // namespace sgk
