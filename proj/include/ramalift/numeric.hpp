#ifndef RAMALIFT_NUMERIC_HPP
#define RAMALIFT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ramalift {

// All spectral claims are certified in exact arithmetic; these are the only
// scalar types the library computes with.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int pow_int(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

/// Renders a rational as "num/den" (den always present and positive).
inline std::string rat_to_string(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "num/den" or a plain integer string.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

/// Thrown when an enumeration or construction exceeds its configured cap.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a certificate comes out EXCEEDS where the construction
/// guarantees it must not; signals an implementation defect, not bad input.
struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed input files; message carries "file:line:".
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ramalift

#endif  // RAMALIFT_NUMERIC_HPP
