#include "nrbs/units.hpp"

namespace nrbs {

std::string to_string(Dimension d) {
    switch (d) {
        case Dimension::Mass: return "mass";
        case Dimension::Volume: return "volume";
        case Dimension::Area: return "area";
        case Dimension::Count: return "count";
    }
    return "?";
}

Unit Unit::make(const std::string& symbol, int scale) {
    if (scale < 0 || scale > 12)
        throw std::invalid_argument("unit scale out of range [0,12]: " + std::to_string(scale));
    Dimension dim;
    if (symbol == "t")
        dim = Dimension::Mass;
    else if (symbol == "m3")
        dim = Dimension::Volume;
    else if (symbol == "km2" || symbol == "hm2")
        dim = Dimension::Area;
    else
        throw std::invalid_argument("unknown unit symbol: " + symbol);
    return Unit{dim, symbol, scale};
}

Quantity normalize(const Quantity& q, const Unit& target) {
    if (q.unit.dimension != target.dimension)
        throw DimensionMismatch("cannot convert " + to_string(q.unit.dimension) + " to " +
                                to_string(target.dimension));
    int shift = q.unit.scale - target.scale;
    // 1 km2 = 100 hm2; both shifts are exact in decimal.
    if (q.unit.symbol == "km2" && target.symbol == "hm2") shift += 2;
    if (q.unit.symbol == "hm2" && target.symbol == "km2") shift -= 2;
    return Quantity{q.magnitude.shifted(shift), target};
}

Quantity quantity_add(const Quantity& a, const Quantity& b) {
    Quantity bn = normalize(b, a.unit);
    return Quantity{a.magnitude + bn.magnitude, a.unit};
}

Quantity quantity_sub(const Quantity& a, const Quantity& b) {
    Quantity bn = normalize(b, a.unit);
    return Quantity{a.magnitude - bn.magnitude, a.unit};
}

}  // namespace nrbs
