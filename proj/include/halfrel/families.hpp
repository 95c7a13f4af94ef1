#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halfrel/engine.hpp"
#include "halfrel/errors.hpp"
#include "halfrel/number.hpp"

namespace halfrel {

struct FamilyMember {
    Rat q;
    Tuple tuple;
};

inline Rat rat_pow(const Rat& base, long exp) {
    Rat r(1);
    Rat b = exp >= 0 ? base : Rat(1) / base;
    for (long e = exp >= 0 ? exp : -exp; e > 0; --e) r *= b;
    return r;
}

/// q = (k-1) sum_{n=s}^{t} k^-n = k^{1-s} - k^-t with the length 3
/// half-relation (1, k^{t-s}(k^s + k), k^{s-1}). Needs k >= 2, 1 <= s <= t.
inline FamilyMember geom_block(long k, long s, long t) {
    if (k < 2 || s < 1 || t < s) throw BadParams("geom_block needs k >= 2, s >= 1, t >= s");
    Int kk(k);
    Rat q = rat_pow(Rat(kk), 1 - s) - rat_pow(Rat(kk), -t);
    Int mid = pow_int(kk, static_cast<unsigned long>(t - s)) * (pow_int(kk, static_cast<unsigned long>(s)) + kk);
    return {q, Tuple(std::vector<Int>{Int(1), mid, pow_int(kk, static_cast<unsigned long>(s - 1))})};
}

/// q = (k-1) sum_{n=0}^{t} k^{-s-2n} = (k-1) k^-s (k^2 - k^-2t) / (k^2 - 1)
/// with the half-relation (k^{s-2}, (k^{s-2} + k + 1) k^{2t+2}, k + 1).
/// Needs k >= 2, s >= 2, t >= 1.
inline FamilyMember geom_alternating(long k, long s, long t) {
    if (k < 2 || s < 2 || t < 1) throw BadParams("geom_alternating needs k >= 2, s >= 2, t >= 1");
    Int kk(k);
    Rat kr(kk);
    Rat q = Rat(kk - 1) * rat_pow(kr, -s) * (kr * kr - rat_pow(kr, -2 * t)) / (kr * kr - Rat(1));
    Int first = pow_int(kk, static_cast<unsigned long>(s - 2));
    Int mid = (first + kk + 1) * pow_int(kk, static_cast<unsigned long>(2 * t + 2));
    return {q, Tuple(std::vector<Int>{first, mid, Int(kk + 1)})};
}

/// Pell numbers P_n and half-companion Pell numbers H_n, both following
/// x_n = 2 x_{n-1} + x_{n-2}, with P = 0, 1, ... and H = 1, 1, ....
/// Memoized; not synchronized, so keep each table on one thread.
class PellTable {
public:
    struct State {
        long n;
        Int p, h;
    };

    State state(long n) {
        if (n < 0) throw IndexTooSmall("Pell index must be >= 0");
        extend(n);
        auto i = static_cast<std::size_t>(n);
        return {n, p_[i], h_[i]};
    }
    Int p(long n) { return state(n).p; }
    Int h(long n) { return state(n).h; }

private:
    void extend(long n) {
        while (static_cast<long>(p_.size()) <= n) {
            std::size_t m = p_.size();
            p_.push_back(2 * p_[m - 1] + p_[m - 2]);
            h_.push_back(2 * h_[m - 1] + h_[m - 2]);
        }
    }

    std::vector<Int> p_{0, 1};
    std::vector<Int> h_{1, 1};
};

inline PellTable::State pell_state(long n) {
    PellTable table;
    return table.state(n);
}

inline Tuple pell_shape(const Int& x) {
    return Tuple(std::vector<Int>{1, x, 1, -1, 1, -1});
}

/// q_n = P_{n+1}/P_n with x_n = (-1)^{n+1} 2 P_n P_{n-1}; tuple (1, x_n, 1, -1, 1, -1).
inline FamilyMember pell_tuple(long n, PellTable& table) {
    if (n < 2) throw IndexTooSmall("Pell family needs n >= 2");
    Int x = 2 * table.p(n) * table.p(n - 1);
    if (n % 2 == 0) x = -x;
    return {Rat(table.p(n + 1), table.p(n)), pell_shape(x)};
}

/// a_n = H_{n+1}/H_n with y_n = (-1)^n H_n H_{n-1}; tuple (1, y_n, 1, -1, 1, -1).
inline FamilyMember hpell_tuple(long n, PellTable& table) {
    if (n < 2) throw IndexTooSmall("half-companion Pell family needs n >= 2");
    Int y = table.h(n) * table.h(n - 1);
    if (n % 2 == 1) y = -y;
    return {Rat(table.h(n + 1), table.h(n)), pell_shape(y)};
}

inline FamilyMember pell_tuple(long n) {
    PellTable t;
    return pell_tuple(n, t);
}
inline FamilyMember hpell_tuple(long n) {
    PellTable t;
    return hpell_tuple(n, t);
}

/// f(q, x) = q^2 x - 2 q x + 2 q - x - 4, which is P_HR^6(1, x, 1, -1, 1, -1; q).
inline Rat f_check(const Rat& q, const Int& x) {
    Rat xr(x);
    return q * q * xr - Rat(2) * q * xr + Rat(2) * q - xr - Rat(4);
}

/// Exact value of a fractional base-k expansion "0.d1d2..." (or ".d1d2...").
/// Digits beyond 9 are letters, case-insensitive.
inline Rat base_k_parse(std::string_view digits, int k) {
    if (k < 2 || k > 36) throw BadParams("base must be in 2..36");
    std::string_view s = digits;
    if (s.starts_with("0.")) s.remove_prefix(2);
    else if (s.starts_with(".")) s.remove_prefix(1);
    else throw BadDigit("expected a fractional expansion starting with \"0.\": " + std::string(digits));
    Int num = 0, den = 1;
    for (char ch : s) {
        int d;
        auto c = static_cast<unsigned char>(ch);
        if (std::isdigit(c)) d = ch - '0';
        else if (std::isalpha(c)) d = std::tolower(c) - 'a' + 10;
        else throw BadDigit(std::string("invalid digit '") + ch + "'");
        if (d >= k) throw BadDigit(std::string("digit '") + ch + "' out of range for base " + std::to_string(k));
        num = num * k + d;
        den *= k;
    }
    return Rat(num, den);
}

}  // namespace halfrel
