#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace holotype {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built by hand go through make_rat.
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1)
{
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rat& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p", "p/q", with optional sign on p. Whitespace is rejected.
inline Rat parse_rat(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num_text, true) || !valid_int(den_text, false))
        throw Error("malformed rational '" + std::string(text) + "'");
    std::string num_str(num_text);
    if (num_str[0] == '+') num_str.erase(0, 1);
    mpz_class num(num_str, 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw Error("rational with zero denominator '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace holotype
