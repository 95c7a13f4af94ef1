#pragma once

#include <ostream>

#include "halfrel/number.hpp"
#include "halfrel/poly.hpp"

namespace halfrel {

/// 2x2 matrix over a commutative ring R (Rat or IntPoly).
template <typename R>
struct Mat2 {
    R c11{0}, c12{0}, c21{0}, c22{0};

    static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.c11 * y.c11 + x.c12 * y.c21, x.c11 * y.c12 + x.c12 * y.c22,
                x.c21 * y.c11 + x.c22 * y.c21, x.c21 * y.c12 + x.c22 * y.c22};
    }

    R det() const { return c11 * c22 - c12 * c21; }
    bool is_identity() const { return *this == identity(); }
    bool is_upper_triangular() const { return c21 == R(0); }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// A^n = [[1, n], [0, 1]]
template <typename R>
Mat2<R> a_power(const Int& n) {
    return {R(1), R(n), R(0), R(1)};
}

// B_q^n = [[1, 0], [n q, 1]], with q a concrete rational.
inline Mat2<Rat> b_power(const Int& n, const Rat& q) {
    return {Rat(1), Rat(0), Rat(n) * q, Rat(1)};
}

// B_q^n with q kept symbolic.
inline Mat2<IntPoly> b_power_symbolic(const Int& n) {
    return {IntPoly(1), IntPoly(0), IntPoly({Int(0), n}), IntPoly(1)};
}

inline Mat2<Rat> specialize(const Mat2<IntPoly>& m, const Rat& q) {
    return {m.c11.eval(q), m.c12.eval(q), m.c21.eval(q), m.c22.eval(q)};
}

inline std::ostream& operator<<(std::ostream& os, const Mat2<Rat>& m) {
    return os << "[[" << m.c11 << ", " << m.c12 << "], [" << m.c21 << ", " << m.c22 << "]]";
}

}  // namespace halfrel
