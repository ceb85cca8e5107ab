#pragma once

#include <string>

#include "nrbs/decimal.hpp"
#include "nrbs/units.hpp"

namespace nrbs {

/// An exact amount of yuan. Stored unrounded; rounding is a display concern
/// (half-up to 2 decimals at the 10^9 "billion yuan" scale).
struct Money {
    Decimal yuan;

    static Money from_billions(const Decimal& billions) { return Money{billions.shifted(9)}; }

    Decimal billions() const { return yuan.shifted(-9); }
    std::string billions_str() const { return billions().fixed_min(2); }

    Money operator+(const Money& rhs) const { return Money{yuan + rhs.yuan}; }
    Money operator-(const Money& rhs) const { return Money{yuan - rhs.yuan}; }
    Money operator-() const { return Money{-yuan}; }
    Money& operator+=(const Money& rhs) {
        yuan += rhs.yuan;
        return *this;
    }
    bool operator==(const Money& rhs) const = default;
    auto operator<=>(const Money& rhs) const { return yuan <=> rhs.yuan; }
    bool is_zero() const { return yuan.is_zero(); }
};

inline Money money_add(const Money& a, const Money& b) { return a + b; }

/// Price in yuan per one unit of `per` (scale folded into the amount,
/// e.g. 26.42x10^7 yuan/km2 -> amount 264200000, per km2).
struct UnitPrice {
    Decimal yuan;
    Unit per;

    bool operator==(const UnitPrice& rhs) const = default;
};

}  // namespace nrbs
