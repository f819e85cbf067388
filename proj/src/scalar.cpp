#include "homdim/scalar.hpp"

#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace homdim {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

std::int64_t reduce_mod(long long v, std::uint64_t p)
{
    const auto sp = static_cast<long long>(p);
    long long r = v % sp;
    if (r < 0) r += sp;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31U) || !is_prime(p)) {
        throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    }
    return FieldSpec(p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const
{
    if (p_ == 0) return Scalar::rational(v);
    return Scalar::residue(v, p_);
}

Scalar FieldSpec::from_fraction(const mpz_class& num, const mpz_class& den) const
{
    if (den == 0) throw std::domain_error("zero denominator");
    if (p_ == 0) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar::rational(q);
    }
    const mpz_class p(static_cast<unsigned long>(p_));
    mpz_class n = num % p;
    mpz_class d = den % p;
    if (d == 0) throw std::domain_error("denominator vanishes in " + name());
    if (n < 0) n += p;
    if (d < 0) d += p;
    return Scalar::residue(n.get_si(), p_) / Scalar::residue(d.get_si(), p_);
}

std::string FieldSpec::name() const
{
    return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::rational(const mpq_class& q) { return from_big(q); }

Scalar Scalar::residue(long long v, std::uint64_t p)
{
    assert(p > 0);
    return Scalar(reduce_mod(v, p), 1, p);
}

Scalar Scalar::from_big(mpq_class q)
{
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        const long n = q.get_num().get_si();
        const long d = q.get_den().get_si();
        if (n != kMin) return Scalar(n, d, 0);
    }
    Scalar s;
    s.num_ = q < 0 ? -1 : 1;  // sign hint only; value lives in big_
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

mpq_class Scalar::to_mpq() const
{
    assert(mod_ == 0);
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::operator+(const Scalar& o) const
{
    assert(mod_ == o.mod_);
    if (mod_ != 0) {
        std::uint64_t s = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_);
        if (s >= mod_) s -= mod_;
        return Scalar(static_cast<std::int64_t>(s), 1, mod_);
    }
    if (!big_ && !o.big_) {
        if (o.num_ == 0) return *this;
        if (num_ == 0) return o;
        const std::int64_t g = std::gcd(den_, o.den_);
        std::int64_t a = 0, b = 0, n = 0, d = 0;
        if (!__builtin_mul_overflow(num_, o.den_ / g, &a) && !__builtin_mul_overflow(o.num_, den_ / g, &b) &&
            !__builtin_add_overflow(a, b, &n) && !__builtin_mul_overflow(den_, o.den_ / g, &d) && n != kMin) {
            if (n == 0) return Scalar(0, 1, 0);
            const std::int64_t h = std::gcd(n, d);
            return Scalar(n / h, d / h, 0);
        }
    }
    return from_big(to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-() const
{
    if (mod_ != 0) return Scalar(num_ == 0 ? 0 : static_cast<std::int64_t>(mod_) - num_, 1, mod_);
    if (big_) return from_big(-*big_);
    return Scalar(-num_, den_, 0);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const
{
    assert(mod_ == o.mod_);
    if (mod_ != 0) {
        return Scalar(static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) % mod_), 1,
                      mod_);
    }
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) return Scalar(0, 1, 0);
        const std::int64_t g1 = std::gcd(num_, o.den_);
        const std::int64_t g2 = std::gcd(o.num_, den_);
        std::int64_t n = 0, d = 0;
        if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) && !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d) &&
            n != kMin) {
            return Scalar(n, d, 0);
        }
    }
    return from_big(to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero");
    if (mod_ != 0) {
        return Scalar(static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(num_), mod_ - 2, mod_)), 1, mod_);
    }
    if (big_) return from_big(1 / *big_);
    if (num_ < 0) return Scalar(-den_, -num_, 0);
    return Scalar(den_, num_, 0);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const
{
    if (mod_ != o.mod_) return false;
    if (big_ || o.big_) {
        if (!big_ || !o.big_) return false;  // canonical: small values never spill
        return *big_ == *o.big_;
    }
    return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::to_string() const
{
    if (big_) return big_->get_str();
    if (mod_ != 0 || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace homdim
