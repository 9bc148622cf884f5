#include "weylkac/rational.hpp"

#include <cctype>
#include <limits>

#include "weylkac/errors.hpp"

namespace weylkac {

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

bool is_nonnegative_integer(const Rational& q) {
    return q.get_den() == 1 && sgn(q) >= 0;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

namespace {

bool canonical_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    if (s.size() > 1 && s.front() == '0') return false;   // no leading zeros
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        // a zero denominator would make mpq canonicalization undefined
        if (den.empty() || den.front() == '-' || den == "0")
            throw Error(errc::invalid_input, "bad rational '" + std::string(text) + "'");
    }
    if (!canonical_integer_token(num) || (!den.empty() && !canonical_integer_token(den)))
        throw Error(errc::invalid_input, "bad rational '" + std::string(text) + "'");
    if (num == "-0")
        throw Error(errc::invalid_input, "bad rational '" + std::string(text) + "'");

    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw Error(errc::invalid_input, "bad rational '" + std::string(text) + "'");
    q.canonicalize();
    // "2/4", "1/1" and friends are not canonical spellings
    if (q.get_str() != text)
        throw Error(errc::invalid_input, "non-canonical rational '" + std::string(text) + "'");
    return q;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p())
        throw Error(errc::invalid_input, "integer does not fit in 64 bits: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

} // namespace weylkac
