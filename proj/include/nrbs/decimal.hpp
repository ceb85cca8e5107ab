#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nrbs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact base-10 number: coefficient * 10^-scale with an arbitrary-precision
/// coefficient. All arithmetic is exact; rounding happens only on demand.
class Decimal {
public:
    using Coefficient = boost::multiprecision::cpp_int;

    Decimal() = default;
    Decimal(long long value) : coeff_(value) {}
    Decimal(Coefficient coeff, int scale);

    static Decimal parse(std::string_view text);

    Decimal operator-() const;
    Decimal operator+(const Decimal& rhs) const;
    Decimal operator-(const Decimal& rhs) const;
    Decimal operator*(const Decimal& rhs) const;
    Decimal& operator+=(const Decimal& rhs) { return *this = *this + rhs; }
    Decimal& operator-=(const Decimal& rhs) { return *this = *this - rhs; }

    bool operator==(const Decimal& rhs) const;
    std::strong_ordering operator<=>(const Decimal& rhs) const;

    /// Exact multiplication by 10^power (either sign).
    Decimal shifted(int power) const;

    /// Half-up (away from zero at the midpoint) to `decimals` fractional digits.
    Decimal round_half_up(int decimals) const;

    bool is_zero() const { return coeff_ == 0; }
    int sign() const { return coeff_ == 0 ? 0 : (coeff_ < 0 ? -1 : 1); }
    Decimal abs() const { return coeff_ < 0 ? -*this : *this; }

    /// Canonical form, no trailing fractional zeros ("1054.7", "-0.003", "0").
    std::string str() const;
    /// Exactly `decimals` fractional digits, half-up.
    std::string fixed(int decimals) const;
    /// Full precision but at least `min_decimals` fractional digits.
    std::string fixed_min(int min_decimals) const;

    double to_double() const;

    const Coefficient& coeff() const { return coeff_; }
    int scale() const { return scale_; }

private:
    Coefficient coeff_ = 0;
    int scale_ = 0;  // fractional digits, >= 0

    void canonicalize();
    static std::string format(const Coefficient& coeff, int scale);
};

/// Exact rational, used for percentages (denominators are not powers of ten).
class Fraction {
public:
    Fraction() = default;
    Fraction(const Decimal& numerator, const Decimal& denominator);

    double to_double() const;
    /// Value as a percentage with `decimals` fractional digits, half-up.
    std::string percent_fixed(int decimals) const;

private:
    Decimal::Coefficient num_ = 0;
    Decimal::Coefficient den_ = 1;  // > 0
};

}  // namespace nrbs
