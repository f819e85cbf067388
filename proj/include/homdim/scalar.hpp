#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace homdim {

class Scalar;

/// The ground field: either the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    /// Maps num/den into the field; throws std::domain_error if den vanishes in it.
    Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator; values that
/// fit in 64-bit words stay inline, larger ones spill to a shared immutable
/// GMP rational. Prime-field elements are residues in [0, p) tagged with p.
/// Mixing elements of different fields is a logic error (asserted).
class Scalar {
public:
    Scalar() = default;

    static Scalar rational(long long v) { return Scalar(v, 1, 0); }
    static Scalar rational(const mpq_class& q);
    static Scalar residue(long long v, std::uint64_t p);

    std::uint64_t modulus() const { return mod_; }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;

    /// Exact value as a GMP rational (rational field only).
    mpq_class to_mpq() const;
    /// Residue in [0, p) (prime field only).
    std::uint64_t residue_value() const { return static_cast<std::uint64_t>(num_); }

    std::string to_string() const;

private:
    Scalar(std::int64_t num, std::int64_t den, std::uint64_t mod) : num_(num), den_(den), mod_(mod) {}
    static Scalar from_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::uint64_t mod_ = 0;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace homdim
