#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace lpgame {

// Exact arbitrary-precision rational; the only scalar type used in the
// library. GMP keeps values canonical (positive denominator, reduced)
// as long as they are built through arithmetic or rat()/parse_rat below.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Canonical rational num/den. Throws std::invalid_argument on den == 0.
inline Rat rat(const Int& num, const Int& den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rat: zero denominator");
    return Rat(num, den);   // mpz pair constructor canonicalizes
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

/// Parses "p", "-p" or "p/q" exactly; "3/6" normalizes to 1/2.
inline Rat parse_rat(const std::string& tok)
{
    const auto slash = tok.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(tok));
        return rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + tok + "'");
    }
}

inline std::string to_string(const Rat& r)
{
    return r.str();
}

}  // namespace lpgame
