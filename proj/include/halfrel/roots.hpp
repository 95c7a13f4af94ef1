#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "halfrel/errors.hpp"
#include "halfrel/number.hpp"
#include "halfrel/poly.hpp"

namespace halfrel {

/// Closed rational interval [lo, hi].
struct Interval {
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / Rat(2); }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sturm chain of the square-free part of a nonzero polynomial. Counts
/// distinct real roots on half-open intervals (a, b].
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p) {
        if (p.is_zero()) throw UsageError("Sturm chain of the zero polynomial");
        RatPoly f = to_rat(p);
        RatPoly df = f.derivative();
        if (!df.is_zero()) {
            RatPoly g = gcd(f, df);
            if (g.degree() > 0) f = divmod(f, g).first;
        }
        chain_.push_back(f);
        chain_.push_back(f.derivative());
        while (!chain_.back().is_zero()) {
            auto rem = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            chain_.push_back(-rem);
        }
        chain_.pop_back();
    }

    const RatPoly& squarefree() const { return chain_.front(); }

    int variations(const Rat& x) const {
        int count = 0, last = 0;
        for (const auto& p : chain_) {
            int s = p.eval(x).sign();
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

private:
    std::vector<RatPoly> chain_;
};

/// Strict bound on the absolute value of every complex root:
/// 1 + max |a_i / a_n|.
inline Rat cauchy_bound(const IntPoly& p) {
    Rat m(0);
    const auto& c = p.coeffs();
    Rat lead(c.back());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rat r = abs(Rat(c[i]) / lead);
        if (r > m) m = r;
    }
    return m + Rat(1);
}

/// Number of distinct real roots of p in (a, b].
inline int count_real_roots(const IntPoly& p, const Rat& a, const Rat& b) {
    return SturmChain(p).count(a, b);
}

namespace detail {

inline void isolate(const SturmChain& sc, const Rat& lo, const Rat& hi, int n,
                    const Rat& precision, std::vector<Interval>& out) {
    if (n == 0) return;
    if (n == 1 && hi - lo <= precision) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = (lo + hi) / Rat(2);
    const RatPoly& f = sc.squarefree();
    if (!f.eval(mid).is_zero()) {
        int left = sc.count(lo, mid);
        isolate(sc, lo, mid, left, precision, out);
        isolate(sc, mid, hi, n - left, precision, out);
        return;
    }
    // Exact root at the midpoint: report it as a point and step off it to
    // non-root endpoints that exclude every other root.
    Rat eps = (hi - lo) / Rat(4);
    Rat a, b;
    for (;;) {
        a = mid - eps;
        b = mid + eps;
        if (!f.eval(a).is_zero() && !f.eval(b).is_zero() && sc.count(a, b) == 1) break;
        eps /= Rat(2);
    }
    int left = sc.count(lo, a);
    isolate(sc, lo, a, left, precision, out);
    out.push_back({mid, mid});
    isolate(sc, b, hi, n - left - 1, precision, out);
}

}  // namespace detail

/// Isolating intervals for the distinct real roots of p, ascending. Each
/// interval holds exactly one root, has width <= precision, and the
/// intervals are pairwise disjoint. Endpoints of non-degenerate intervals
/// are never roots.
inline std::vector<Interval> real_roots(const IntPoly& p, const Rat& precision) {
    if (p.is_zero()) throw UsageError("real_roots of the zero polynomial");
    if (precision.sign() <= 0) throw UsageError("precision must be positive");
    std::vector<Interval> out;
    if (p.degree() == 0) return out;
    SturmChain sc(p);
    Rat bound = cauchy_bound(p);
    detail::isolate(sc, -bound, bound, sc.count(-bound, bound), precision, out);
    return out;
}

/// Decimal bracket of sqrt(n) with width 10^-places.
inline Interval sqrt_bracket(const Int& n, unsigned places) {
    Int scale = pow_int(10, places);
    auto r = integer_sqrt(n * scale * scale);
    if (r.exact) return {Rat(r.root, scale), Rat(r.root, scale)};
    return {Rat(r.root, scale), Rat(r.root + 1, scale)};
}

}  // namespace halfrel
