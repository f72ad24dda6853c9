#include "spectra/core/rational.hpp"

#include <cctype>

namespace spectra {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto parse_int = [](const std::string& s) -> std::optional<Int> {
        if (s.empty()) return std::nullopt;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        return Int(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto p = parse_int(text);
        if (!p) return std::nullopt;
        return Rational(*p);
    }
    auto p = parse_int(text.substr(0, slash));
    auto q = parse_int(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rational(*p, *q);
}

Int floor_div(const Int& p, const Int& q) {
    Int quo = p / q;
    Int rem = p % q;
    if (rem != 0 && ((rem < 0) != (q < 0))) --quo;
    return quo;
}

Int ceil_div(const Int& p, const Int& q) { return -floor_div(-p, q); }

Int isqrt(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace spectra
