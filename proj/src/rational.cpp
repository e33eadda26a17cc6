#include "ksc/rational.hpp"

#include "ksc/errors.hpp"

#include <charconv>
#include <cctype>
#include <cmath>

namespace ksc {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    s.remove_prefix(std::min(s.find_first_not_of('0'), s.size() - 1));
    Integer v{std::string(s)};
    return negative ? Integer(-v) : v;
}

Integer pow10(long exponent)
{
    Integer r = 1;
    for (long i = 0; i < exponent; ++i) r *= 10;
    return r;
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        long parsed = 0;
        const char* first = exp_text.data();
        const char* last = first + exp_text.size();
        if (!exp_text.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, parsed);
        if (ec != std::errc() || ptr != last || first == last)
            throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
        exponent = parsed;
        s = s.substr(0, e);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        std::string_view frac = s.substr(dot + 1);
        digits = std::string(s.substr(0, dot)) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    }
    if (!all_digits(digits)) throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    // GMP treats a leading 0 as an octal prefix.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational value{Integer(digits)};
    if (exponent >= 0)
        value *= Rational(pow10(exponent));
    else
        value /= Rational(pow10(-exponent));
    return negative ? Rational(-value) : value;
}

} // namespace

std::string to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidArgument("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
        Integer den = parse_integer(den_text, text);
        if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
    return Rational(parse_integer(text, text));
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value)) throw InvalidArgument("non-finite number");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw InvalidArgument("cannot render number");
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

} // namespace ksc
