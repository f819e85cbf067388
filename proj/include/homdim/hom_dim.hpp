#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace homdim {

/// A homological dimension: a finite value, infinity with a certificate, or a
/// lower bound when a computation cap was hit before the answer was settled.
class HomDim {
public:
    enum class Kind { Finite, Infinite, AtLeast };

    static HomDim finite(std::size_t n) { return HomDim(Kind::Finite, n, {}); }
    static HomDim infinite(std::string certificate) { return HomDim(Kind::Infinite, 0, std::move(certificate)); }
    static HomDim at_least(std::size_t cap) { return HomDim(Kind::AtLeast, cap, {}); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_at_least() const { return kind_ == Kind::AtLeast; }

    /// Finite value or lower bound.
    std::size_t value() const { return value_; }
    const std::string& certificate() const { return certificate_; }

    /// True when the dimension is certainly >= n.
    bool certainly_at_least(std::size_t n) const { return kind_ == Kind::Infinite || value_ >= n; }

    std::string to_string() const;

    friend bool operator==(const HomDim&, const HomDim&) = default;

private:
    HomDim(Kind k, std::size_t v, std::string cert) : kind_(k), value_(v), certificate_(std::move(cert)) {}

    Kind kind_;
    std::size_t value_;
    std::string certificate_;
};

inline std::string HomDim::to_string() const
{
    switch (kind_) {
    case Kind::Finite: return std::to_string(value_);
    case Kind::Infinite: return "inf (" + certificate_ + ")";
    case Kind::AtLeast: return ">=" + std::to_string(value_);
    }
    return {};
}

inline std::ostream& operator<<(std::ostream& os, const HomDim& d) { return os << d.to_string(); }

}  // namespace homdim
