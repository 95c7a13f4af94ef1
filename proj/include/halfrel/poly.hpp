#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "halfrel/errors.hpp"
#include "halfrel/number.hpp"

namespace halfrel {

/// Dense univariate polynomial in q with coefficients in T (Int or Rat),
/// stored in ascending degree. The zero polynomial has no coefficients and
/// the leading coefficient of any other polynomial is nonzero.
template <typename T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const T& constant) : c_{constant} { trim(); }  // NOLINT(google-explicit-constructor)
    Poly(long constant) : c_{T(constant)} { trim(); }   // NOLINT(google-explicit-constructor)

    static Poly q() { return Poly({T(0), T(1)}); }
    static Poly monomial(const T& coeff, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = coeff;
        return Poly(std::move(c));
    }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const T& k) const {
        std::vector<T> out = c_;
        for (auto& x : out) x *= k;
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
        return acc;
    }

    /// p(q)/q; requires a zero constant term.
    Poly exact_div_by_q() const {
        if (is_zero()) return {};
        if (c_[0] != T(0)) throw DivisibilityError("polynomial has nonzero constant term; not divisible by q");
        return Poly(std::vector<T>(c_.begin() + 1, c_.end()));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> out;
        out.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * T(static_cast<long>(i)));
        return Poly(std::move(out));
    }

    /// Human readable form, highest degree first: "2*q^2 - 8*q + 6".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const T& a = c_[k];
            if (a == T(0)) continue;
            bool neg = a < T(0);
            T mag = neg ? T(-a) : a;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            if (k == 0) { os << mag; continue; }
            if (mag != T(1)) os << mag << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

/// Euclidean division over Q: a = quot*b + rem with deg rem < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    RatPoly quot, rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        RatPoly term = RatPoly::monomial(rem.leading() / b.leading(), shift);
        quot += term;
        rem -= term * b;
    }
    return {quot, rem};
}

inline RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rat(1) / p.leading());
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

}  // namespace halfrel
