#include "nrbs/decimal.hpp"

#include <cctype>

namespace nrbs {

namespace {

Decimal::Coefficient pow10(int n) {
    Decimal::Coefficient p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
}

}  // namespace

Decimal::Decimal(Coefficient coeff, int scale) : coeff_(std::move(coeff)), scale_(scale) {
    if (scale_ < 0) throw std::invalid_argument("Decimal: negative scale");
    canonicalize();
}

void Decimal::canonicalize() {
    if (coeff_ == 0) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && coeff_ % 10 == 0) {
        coeff_ /= 10;
        --scale_;
    }
}

Decimal Decimal::parse(std::string_view text) {
    size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    Coefficient coeff = 0;
    int scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point) throw ParseError("malformed decimal: " + std::string(text));
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = coeff * 10 + (c - '0');
            if (seen_point) ++scale;
            seen_digit = true;
        } else {
            throw ParseError("malformed decimal: " + std::string(text));
        }
    }
    if (!seen_digit) throw ParseError("malformed decimal: " + std::string(text));
    if (negative) coeff = -coeff;
    return Decimal(std::move(coeff), scale);
}

Decimal Decimal::operator-() const {
    Decimal r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

Decimal Decimal::operator+(const Decimal& rhs) const {
    int scale = std::max(scale_, rhs.scale_);
    Coefficient a = coeff_ * pow10(scale - scale_);
    Coefficient b = rhs.coeff_ * pow10(scale - rhs.scale_);
    return Decimal(a + b, scale);
}

Decimal Decimal::operator-(const Decimal& rhs) const { return *this + (-rhs); }

Decimal Decimal::operator*(const Decimal& rhs) const {
    return Decimal(coeff_ * rhs.coeff_, scale_ + rhs.scale_);
}

bool Decimal::operator==(const Decimal& rhs) const {
    return scale_ == rhs.scale_ && coeff_ == rhs.coeff_;
}

std::strong_ordering Decimal::operator<=>(const Decimal& rhs) const {
    int scale = std::max(scale_, rhs.scale_);
    Coefficient a = coeff_ * pow10(scale - scale_);
    Coefficient b = rhs.coeff_ * pow10(scale - rhs.scale_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Decimal Decimal::shifted(int power) const {
    if (power >= 0) {
        int from_scale = std::min(scale_, power);
        return Decimal(coeff_ * pow10(power - from_scale), scale_ - from_scale);
    }
    return Decimal(coeff_, scale_ - power);
}

Decimal Decimal::round_half_up(int decimals) const {
    if (decimals < 0) throw std::invalid_argument("round_half_up: negative decimals");
    if (scale_ <= decimals) return *this;
    Coefficient divisor = pow10(scale_ - decimals);
    Coefficient q = coeff_ / divisor;
    Coefficient r = coeff_ % divisor;
    if (r < 0) r = -r;
    if (2 * r >= divisor) q += sign();
    return Decimal(std::move(q), decimals);
}

std::string Decimal::format(const Coefficient& coeff, int scale) {
    Coefficient mag = coeff < 0 ? Coefficient(-coeff) : coeff;
    std::string digits = mag.str();
    if (static_cast<int>(digits.size()) <= scale)
        digits.insert(0, scale - digits.size() + 1, '0');
    std::string out;
    if (coeff < 0) out += '-';
    out += digits.substr(0, digits.size() - scale);
    if (scale > 0) {
        out += '.';
        out += digits.substr(digits.size() - scale);
    }
    return out;
}

std::string Decimal::str() const { return format(coeff_, scale_); }

std::string Decimal::fixed(int decimals) const {
    Decimal r = round_half_up(decimals);
    return format(r.coeff_ * pow10(decimals - r.scale_), decimals);
}

std::string Decimal::fixed_min(int min_decimals) const {
    if (scale_ >= min_decimals) return str();
    return format(coeff_ * pow10(min_decimals - scale_), min_decimals);
}

double Decimal::to_double() const {
    return coeff_.convert_to<double>() / pow10(scale_).convert_to<double>();
}

Fraction::Fraction(const Decimal& numerator, const Decimal& denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("Fraction: zero denominator");
    Decimal::Coefficient num = numerator.coeff();
    Decimal::Coefficient den = denominator.coeff();
    int dscale = numerator.scale() - denominator.scale();
    if (dscale > 0)
        den *= pow10(dscale);
    else if (dscale < 0)
        num *= pow10(-dscale);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

double Fraction::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Fraction::percent_fixed(int decimals) const {
    // percentage = num/den * 100, half-up at `decimals` digits
    Decimal::Coefficient scaled = num_ * 100 * pow10(decimals);
    Decimal::Coefficient q = scaled / den_;
    Decimal::Coefficient r = scaled % den_;
    if (r < 0) r = -r;
    if (2 * r >= den_) q += (num_ < 0 ? -1 : 1);
    return Decimal(std::move(q), decimals).fixed(decimals);
}

}  // namespace nrbs
