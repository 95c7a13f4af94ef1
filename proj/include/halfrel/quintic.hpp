#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "halfrel/engine.hpp"
#include "halfrel/errors.hpp"
#include "halfrel/number.hpp"
#include "halfrel/parallel.hpp"
#include "halfrel/roots.hpp"

namespace halfrel {

/// P_HR^5 = c2 q^2 + c1 q + c0.
struct QuinticCoeffs {
    Int c2, c1, c0;
    Tuple source;

    Int discriminant() const { return c1 * c1 - 4 * c0 * c2; }
};

inline QuinticCoeffs quintic_coeffs(const Tuple& t) {
    if (t.size() != 5) throw WrongLength("expected a tuple of length 5, got " + std::to_string(t.size()));
    const Int &a1 = t[0], &a2 = t[1], &a3 = t[2], &a4 = t[3], &a5 = t[4];
    return {a1 * a2 * a3 * a4 * a5,
            a1 * a2 * a3 - a2 * a3 * a4 + a1 * a2 * a5 + a1 * a4 * a5 + a3 * a4 * a5,
            a1 - a2 + a3 - a4 + a5,
            t};
}

/// The discriminant of P_HR^5 viewed as a quadratic alpha x^2 + beta x + gamma
/// in one tuple entry x (the slot), with the other four entries fixed.
/// Slot 1 is the classical curve C_a; other slots cover families such as
/// (1, -1, 1, -1, N).
struct ConicSpec {
    Int alpha, beta, gamma;
    int slot = 1;                // 1-based position of the variable entry
    std::array<Int, 4> fixed;    // remaining entries in tuple order

    Int delta(const Int& x) const { return (alpha * x + beta) * x + gamma; }
    bool on_curve(const Int& x, const Int& y) const { return delta(x) == y * y; }

    /// Full 5-tuple with x in the variable slot. x must be nonzero.
    Tuple tuple_at(const Int& x) const {
        std::vector<Int> e;
        e.reserve(5);
        std::size_t k = 0;
        for (int i = 1; i <= 5; ++i) e.push_back(i == slot ? x : fixed[k++]);
        return Tuple(std::move(e));
    }
};

struct ConicPoint {
    Int x, y;  // y >= 0
    friend bool operator==(const ConicPoint&, const ConicPoint&) = default;
};

namespace detail {

// c2, c1, c0 with x in `slot` and fixed values elsewhere; x = 0 allowed.
inline std::array<Int, 3> coeffs_at(int slot, const std::array<Int, 4>& fixed, const Int& x) {
    std::array<Int, 5> a;
    std::size_t k = 0;
    for (int i = 1; i <= 5; ++i) a[i - 1] = i == slot ? x : fixed[k++];
    return {a[0] * a[1] * a[2] * a[3] * a[4],
            a[0] * a[1] * a[2] - a[1] * a[2] * a[3] + a[0] * a[1] * a[4] + a[0] * a[3] * a[4] + a[2] * a[3] * a[4],
            a[0] - a[1] + a[2] - a[3] + a[4]};
}

}  // namespace detail

/// Builds the discriminant conic for any slot. Every c_i is affine in each
/// single tuple entry, so c_i = u_i x + v_i and
/// Delta = (u1 x + v1)^2 - 4 (u0 x + v0)(u2 x + v2).
inline ConicSpec conic_for_slot(const std::array<Int, 4>& fixed, int slot) {
    if (slot < 1 || slot > 5) throw BadParams("slot must be in 1..5");
    for (const auto& v : fixed)
        if (sgn(v) == 0) throw ZeroArg("fixed tuple entries must be nonzero");
    auto at0 = detail::coeffs_at(slot, fixed, Int(0));
    auto at1 = detail::coeffs_at(slot, fixed, Int(1));
    Int u2 = at1[0] - at0[0], v2 = at0[0];
    Int u1 = at1[1] - at0[1], v1 = at0[1];
    Int u0 = at1[2] - at0[2], v0 = at0[2];
    ConicSpec c;
    c.alpha = u1 * u1 - 4 * u0 * u2;
    c.beta = 2 * u1 * v1 - 4 * (u0 * v2 + v0 * u2);
    c.gamma = v1 * v1 - 4 * v0 * v2;
    c.slot = slot;
    c.fixed = fixed;
    return c;
}

inline ConicSpec conic_from(const Int& a2, const Int& a3, const Int& a4, const Int& a5) {
    return conic_for_slot({a2, a3, a4, a5}, 1);
}

enum class AlphaClass { zero, positive_square, positive_nonsquare, negative };

inline const char* alpha_class_name(AlphaClass c) {
    switch (c) {
        case AlphaClass::zero: return "zero";
        case AlphaClass::positive_square: return "positive-square";
        case AlphaClass::positive_nonsquare: return "positive-nonsquare";
        case AlphaClass::negative: return "negative";
    }
    return "?";
}

inline AlphaClass classify_alpha(const ConicSpec& c) {
    int s = sgn(c.alpha);
    if (s == 0) return AlphaClass::zero;
    if (s < 0) return AlphaClass::negative;
    return is_perfect_square(c.alpha) ? AlphaClass::positive_square : AlphaClass::positive_nonsquare;
}

/// (0, sqrt(gamma)) when gamma is a nonzero perfect square. For slot 1,
/// gamma = (a3 a4 (a5 - a2))^2, so this exists exactly when a5 != a2.
inline std::optional<ConicPoint> base_point(const ConicSpec& c) {
    if (sgn(c.gamma) <= 0) return std::nullopt;
    auto r = integer_sqrt(c.gamma);
    if (!r.exact) return std::nullopt;
    return ConicPoint{Int(0), r.root};
}

struct PellSolution {
    Int t, u;
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Minimal t, u >= 1 with t^2 - d u^2 = 1, from the continued fraction of
/// sqrt(d).
inline PellSolution pell_fundamental(const Int& d) {
    if (sgn(d) <= 0) throw BadParams("pell_fundamental needs d > 0");
    auto root = integer_sqrt(d);
    if (root.exact) throw SquareInput("d = " + d.get_str() + " is a perfect square");
    const Int a0 = root.root;
    Int m = 0, den = 1, a = a0;
    Int h_prev = 1, h = a0;  // convergent numerators
    Int k_prev = 0, k = 1;   // convergent denominators
    while (h * h - d * k * k != 1) {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = std::exchange(h, h_next);
        k_prev = std::exchange(k, k_next);
    }
    return {h, k};
}

/// Integer points on alpha x^2 + beta x + gamma = y^2.
///
/// Every x with |x| <= x_abs_bound is found by direct scan. When alpha is a
/// positive nonsquare, each scanned point (and the base point) also seeds
/// orbit_steps applications, in both directions, of the automorphism
/// (u, v) -> (t u + alpha s v, s u + t v) of u^2 - alpha v^2 = beta^2 -
/// 4 alpha gamma, where u = 2 alpha x + beta and v = 2y. Orbit images that
/// map back to integer (x, y) are kept. Output is sorted by x, one point per
/// x with y >= 0, and every point is checked on-curve.
inline std::vector<ConicPoint> conic_points(const ConicSpec& c, long x_abs_bound, long orbit_steps,
                                            unsigned threads = 1) {
    if (x_abs_bound < 0 || orbit_steps < 0) throw BadParams("bounds must be >= 0");
    std::map<Int, Int> found;

    // Scan, chunked for the workers; chunks are merged in x order.
    const long span = 2 * x_abs_bound + 1;
    const long chunk = std::max<long>(1, std::min<long>(4096, span / std::max(1u, threads) + 1));
    const auto n_chunks = static_cast<std::size_t>((span + chunk - 1) / chunk);
    auto chunks = parallel_map(n_chunks, threads, [&](std::size_t ci) {
        std::vector<ConicPoint> pts;
        long lo = -x_abs_bound + static_cast<long>(ci) * chunk;
        long hi = std::min(x_abs_bound, lo + chunk - 1);
        Int x, d, r, rem;
        for (long xi = lo; xi <= hi; ++xi) {
            x = xi;
            d = c.delta(x);
            if (sgn(d) < 0 || !mpz_perfect_square_p(d.get_mpz_t())) continue;
            mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
            pts.push_back({x, r});
        }
        return pts;
    });
    for (const auto& pts : chunks)
        for (const auto& p : pts) found.emplace(p.x, p.y);

    if (orbit_steps > 0 && classify_alpha(c) == AlphaClass::positive_nonsquare) {
        auto [t, s] = pell_fundamental(c.alpha);
        const Int two_alpha = 2 * c.alpha;
        std::vector<ConicPoint> seeds;
        for (const auto& [x, y] : found) seeds.push_back({x, y});
        if (auto bp = base_point(c)) seeds.push_back(*bp);
        auto try_add = [&](const Int& u, const Int& v) {
            Int num = u - c.beta;
            if (!mpz_divisible_p(num.get_mpz_t(), two_alpha.get_mpz_t())) return;
            if (!mpz_even_p(v.get_mpz_t())) return;
            Int x = num / two_alpha;
            Int y = abs(v) / 2;
            if (!c.on_curve(x, y)) throw InvariantError("orbit point failed on-curve check");
            found.emplace(x, y);
        };
        for (const auto& seed : seeds) {
            for (int sign : {1, -1}) {
                for (int dir : {1, -1}) {
                    Int u = two_alpha * seed.x + c.beta;
                    Int v = 2 * seed.y * sign;
                    for (long k = 0; k < orbit_steps; ++k) {
                        Int nu = t * u + dir * c.alpha * s * v;
                        Int nv = dir * s * u + t * v;
                        u = std::move(nu);
                        v = std::move(nv);
                        try_add(u, v);
                    }
                }
            }
        }
    }

    std::vector<ConicPoint> out;
    out.reserve(found.size());
    for (auto& [x, y] : found) {
        if (!c.on_curve(x, y)) throw InvariantError("conic point failed on-curve check");
        out.push_back({x, y});
    }
    return out;
}

/// Rational roots (-c1 +- sqrt(Delta)) / (2 c2) of P_HR^5, ascending; empty
/// unless Delta is a nonnegative perfect square.
inline std::vector<Rat> rational_roots5(const Tuple& t) {
    auto qc = quintic_coeffs(t);
    if (sgn(qc.c2) == 0) throw DegenerateQuadratic("c2 = 0");
    Int delta = qc.discriminant();
    if (sgn(delta) < 0) return {};
    auto r = integer_sqrt(delta);
    if (!r.exact) return {};
    Rat lo(-qc.c1 - r.root, 2 * qc.c2), hi(-qc.c1 + r.root, 2 * qc.c2);
    if (hi < lo) std::swap(lo, hi);
    if (lo == hi) return {lo};
    return {lo, hi};
}

enum class Branch { plus, minus };

/// lim_{a1 -> inf} q^{+-} = (-L +- sqrt(alpha)) / (2 a2 a3 a4 a5), with
/// L = a2 a3 + a2 a5 + a4 a5, bracketed to width below 10^-12.
inline Interval limit_a1(const Int& a2, const Int& a3, const Int& a4, const Int& a5, Branch branch) {
    Int p = a2 * a3 * a4 * a5;
    if (sgn(p) == 0) throw ZeroDenominator("a2 a3 a4 a5 = 0");
    Int lin = a2 * a3 + a2 * a5 + a4 * a5;
    Int alpha = conic_from(a2, a3, a4, a5).alpha;
    if (sgn(alpha) < 0) throw UsageError("alpha < 0: the a1 -> infinity limit is not real");
    constexpr unsigned bits = 42;
    Int scale = Int(1) << bits;
    auto r = integer_sqrt(alpha * scale * scale);
    Rat root_lo(r.root, scale), root_hi(r.exact ? r.root : Int(r.root + 1), scale);
    Rat denom(2 * p);
    Rat e1, e2;
    if (branch == Branch::plus) {
        e1 = (Rat(-lin) + root_lo) / denom;
        e2 = (Rat(-lin) + root_hi) / denom;
    } else {
        e1 = (Rat(-lin) - root_hi) / denom;
        e2 = (Rat(-lin) - root_lo) / denom;
    }
    if (e2 < e1) std::swap(e1, e2);
    return {e1, e2};
}

/// lim_{a2} lim_{a1} q^-: -(a3 + a5) / (a3 a4 a5); the + branch tends to 0.
inline Rat limit_a1_a2(const Int& a3, const Int& a4, const Int& a5, Branch branch) {
    Int p = a3 * a4 * a5;
    if (sgn(p) == 0) throw ZeroDenominator("a3 a4 a5 = 0");
    if (branch == Branch::plus) return Rat(0);
    return Rat(-(a3 + a5), p);
}

/// lim_{a3} lim_{a2} lim_{a1} q^- = -1 / (a4 a5).
inline Rat limit_a1_a2_a3(const Int& a4, const Int& a5) {
    Int p = a4 * a5;
    if (sgn(p) == 0) throw ZeroDenominator("a4 a5 = 0");
    return Rat(Int(-1), p);
}

/// (a3, a4, a5) = (r, -s, t), so that the double limit equals (r+t)/(rst).
inline std::array<Int, 3> onestep_target_map(const OneStep& x) {
    require_nonzero(x);
    return {x.r, -x.s, x.t};
}

inline IntPoly septic_poly(const Int& n) {
    return phr_poly(Tuple(std::vector<Int>{1, -1, 1, -1, 1, n, n}));
}

/// Isolating interval of the largest real root of P_HR^7(1,-1,1,-1,1,N,N; q).
inline Interval septic_experiment(const Int& n, const Rat& precision) {
    if (n < 1) throw BadParams("N must be >= 1");
    auto roots = real_roots(septic_poly(n), precision);
    if (roots.empty()) throw InvariantError("septic polynomial has no real root");
    return roots.back();
}

}  // namespace halfrel
