#include "sgk/scalar.hpp"

#include <stdexcept>

namespace sgk {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

static_assert(sizeof(unsigned long) == sizeof(u64));

u64 reduce(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    std::string_view body = s;
    bool neg = false;
    if (body.front() == '-' || body.front() == '+') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction literal: " + s);
        mpz_class d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        q = mpq_class(mpz_class(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed decimal literal: " + s);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class digits(std::string(ip.empty() ? "0" : ip) + std::string(fp));
        q = mpq_class(digits, scale);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("malformed integer literal: " + s);
        q = mpq_class(mpz_class(std::string(body)));
    }
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(u64 p) {
    if (p <= (u64{1} << 30)) throw std::invalid_argument("prime field modulus must exceed 2^30");
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text) {
    if (text == "rational") return rational();
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        if (!all_digits(digits) || digits.size() > 20)
            throw std::invalid_argument("malformed field modulus: " + std::string(text));
        return prime(std::stoull(std::string(digits)));
    }
    throw std::invalid_argument("unknown field: " + std::string(text));
}

std::string Field::to_string() const {
    return is_rational() ? std::string("rational") : "fp:" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& f, long long v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    if (f.is_rational()) return Scalar(f, mpq_class(z));
    return Scalar(f, Residue{reduce(z, f.modulus())});
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
    if (f.is_rational()) {
        mpq_class c = q;
        c.canonicalize();
        return Scalar(f, c);
    }
    u64 p = f.modulus();
    u64 den = reduce(q.get_den(), p);
    if (den == 0) throw std::domain_error("denominator vanishes modulo p");
    u64 num = reduce(q.get_num(), p);
    return Scalar(f, Residue{mulmod(num, powmod(den, p - 2, p), p)});
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
    return from_rational(f, parse_rational(text));
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
    return residue() == 0;
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(residue());
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw std::logic_error("scalar is not rational");
    return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("field mismatch: " + field_.to_string() + " vs " +
                                    o.field_.to_string());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_.is_rational()) {
        mpq_class inv = 1 / std::get<mpq_class>(value_);
        inv.canonicalize();
        return Scalar(field_, inv);
    }
    u64 p = field_.modulus();
    return Scalar(field_, Residue{powmod(residue(), p - 2, p)});
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    if (field_.is_rational()) {
        const mpq_class& q = std::get<mpq_class>(value_);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Scalar(field_, mpq_class(num, den));
    }
    return Scalar(field_, Residue{powmod(residue(), static_cast<u64>(e), field_.modulus())});
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
    u64 v = residue();
    return Scalar(field_, Residue{v == 0 ? 0 : field_.modulus() - v});
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        u64 p = field_.modulus();
        value_ = Residue{static_cast<u64>((static_cast<u128>(residue()) + o.residue()) % p)};
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        value_ = Residue{mulmod(residue(), o.residue(), field_.modulus())};
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    return a.residue() == b.residue();
}

} // namespace sgk
