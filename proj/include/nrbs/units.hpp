#pragma once

#include <stdexcept>
#include <string>

#include "nrbs/decimal.hpp"

namespace nrbs {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Dimension { Mass, Volume, Area, Count };

std::string to_string(Dimension d);

/// A dimensioned measurement unit with a power-of-ten scale, mirroring the
/// "x10^k symbol" table-header convention (e.g. scale 3, km2).
struct Unit {
    Dimension dimension;
    std::string symbol;  // t, m3, km2, hm2
    int scale = 0;       // power of ten applied to magnitudes, in [0, 12]

    static Unit make(const std::string& symbol, int scale = 0);

    bool operator==(const Unit& rhs) const = default;
};

struct Quantity {
    Decimal magnitude;
    Unit unit;

    bool operator==(const Quantity& rhs) const = default;
};

/// Exact rescaling of q into the target unit. Round-trips exactly.
/// km2 and hm2 interconvert (1 km2 = 100 hm2); other symbols only rescale.
Quantity normalize(const Quantity& q, const Unit& target);

Quantity quantity_add(const Quantity& a, const Quantity& b);
Quantity quantity_sub(const Quantity& a, const Quantity& b);

}  // namespace nrbs
