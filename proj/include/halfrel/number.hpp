#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "halfrel/errors.hpp"

namespace halfrel {

using Int = mpz_class;

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool fits_int64(const Int& n) {
    static const Int lo("-9223372036854775808");
    static const Int hi("9223372036854775807");
    return n >= lo && n <= hi;
}

inline std::int64_t to_int64(const Int& n) {
    if (!fits_int64(n)) throw UsageError("integer does not fit in 64 bits: " + n.get_str());
    // mpz_get_si takes a long; that is 64-bit on every platform we build for.
    static_assert(sizeof(long) == 8);
    return mpz_get_si(n.get_mpz_t());
}

struct SqrtResult {
    Int root;
    bool exact;
};

// floor(sqrt(n)) and whether n is a perfect square.
inline SqrtResult integer_sqrt(const Int& n) {
    if (sgn(n) < 0) throw UsageError("integer_sqrt of a negative number");
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    return {std::move(root), sgn(rem) == 0};
}

inline bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int parse_int(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw ParseError("bad integer: " + s);
    if (s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const Int& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const Int& num, const Int& den) {
        if (sgn(den) == 0) throw ZeroDenominator("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    const mpq_class& raw() const { return v_; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ZeroDenominator("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "num/den", or just "num" for integers.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    /// Fixed-point decimal with `places` digits, rounded half away from zero.
    std::string decimal(unsigned places) const {
        Int scale = pow_int(10, places);
        Int scaled_num = abs(num()) * scale;
        Int q, r;
        Int d = den();
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), d.get_mpz_t());
        if (2 * r >= d) q += 1;
        std::string digits = q.get_str();
        if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
        std::string out = (sign() < 0 && q != 0) ? "-" : "";
        out += digits.substr(0, digits.size() - places);
        if (places > 0) out += "." + digits.substr(digits.size() - places);
        return out;
    }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

/// Parses "n", "n/d", or a decimal such as "-2.618", "1e-9", "0.5e3".
inline Rat parse_rat(std::string_view text) {
    std::string s(text);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Int n = parse_int(s.substr(0, slash));
        Int d = parse_int(s.substr(slash + 1));
        if (sgn(d) == 0) throw ParseError("zero denominator in " + s);
        return Rat(n, d);
    }
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        Int e_val = parse_int(s.substr(e + 1));
        if (abs(e_val) > 10000) throw ParseError("exponent out of range in " + s);
        exp10 = e_val.get_si();
        s.erase(e);
    }
    std::string mantissa = s;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        mantissa = s.substr(0, dot) + frac;
        exp10 -= static_cast<long>(frac.size());
        if (mantissa.empty() || mantissa == "-" || mantissa == "+") throw ParseError("bad number: " + std::string(text));
        if (s.substr(0, dot).empty() || s.substr(0, dot) == "-" || s.substr(0, dot) == "+")
            mantissa.insert(mantissa[0] == '-' || mantissa[0] == '+' ? 1 : 0, "0");
    }
    Int m = parse_int(mantissa);
    if (exp10 >= 0) return Rat(m * pow_int(10, static_cast<unsigned long>(exp10)));
    return Rat(m, pow_int(10, static_cast<unsigned long>(-exp10)));
}

}  // namespace halfrel
