#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfrel/errors.hpp"
#include "halfrel/matrix.hpp"
#include "halfrel/number.hpp"
#include "halfrel/poly.hpp"
#include "halfrel/word.hpp"

namespace halfrel {

/// (a_1, ..., a_l) with every entry nonzero and l >= 1.
class Tuple {
public:
    Tuple() = default;
    explicit Tuple(std::vector<Int> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw UsageError("tuple must have at least one entry");
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (sgn(e_[i]) == 0) throw ZeroArg("tuple entry a" + std::to_string(i + 1) + " is zero");
    }
    Tuple(std::initializer_list<long> entries) : Tuple(std::vector<Int>(entries.begin(), entries.end())) {}

    const std::vector<Int>& entries() const { return e_; }
    std::size_t size() const { return e_.size(); }
    const Int& operator[](std::size_t i) const { return e_[i]; }
    bool odd() const { return e_.size() % 2 == 1; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? ", " : "") + e_[i].get_str();
        return s + ")";
    }

    friend bool operator==(const Tuple&, const Tuple&) = default;

private:
    std::vector<Int> e_;
};

// a^{a1} b^{a2} a^{a3} ...
inline Word alt_word(const Tuple& t) {
    std::vector<Syllable> s;
    Gen g = Gen::a;
    for (const auto& x : t.entries()) {
        s.push_back({g, x});
        g = other(g);
    }
    return Word::reduce(s);
}

// b^{a_l} a^{a_{l-1}} b^{a_{l-2}} ...
//
// The anti-automorphism fixing the half-relation condition is
// X -> D^-1 X^T D with D = diag(q, 1) for odd l (swaps A and B), and
// X -> K X^T K with K = [[0,1],[1,0]] for even l (fixes A and B). Either
// way the image of alt_word starts with b and carries the exponents in
// reverse order.
inline Word mirror_word(const Tuple& t) {
    std::vector<Syllable> s;
    Gen g = Gen::b;
    for (auto it = t.entries().rbegin(); it != t.entries().rend(); ++it) {
        s.push_back({g, *it});
        g = other(g);
    }
    return Word::reduce(s);
}

/// Half-relation polynomial in Z[q]: c12 - c21/q for odd length,
/// (c11 - c22)/q for even length, where c_ij are entries of alt_word(t).
inline IntPoly phr_poly(const Tuple& t) {
    auto m = eval_word_symbolic(alt_word(t));
    if (t.odd()) return (m.c12 * IntPoly::q() - m.c21).exact_div_by_q();
    return (m.c11 - m.c22).exact_div_by_q();
}

/// The defining condition evaluated directly on the matrix: q c12 = c21
/// (odd length) or c11 = c22 (even length).
inline bool half_relation_condition(const Tuple& t, const Rat& q) {
    auto m = eval_word(alt_word(t), q);
    return t.odd() ? q * m.c12 == m.c21 : m.c11 == m.c22;
}

inline bool is_half_relation(const Tuple& t, const Rat& q) {
    if (q.is_zero()) throw ZeroQ();
    return phr_poly(t).eval(q).is_zero();
}

enum class CertificateKind { half_relation, one_step };

inline const char* kind_name(CertificateKind k) {
    return k == CertificateKind::half_relation ? "half-relation" : "one-step";
}

/// Witness that q is non-free: a reduced relator word that evaluates to
/// the identity at q.
struct Certificate {
    CertificateKind kind = CertificateKind::half_relation;
    Tuple tuple;
    Rat q;
    Word relator;
    bool identity_verified = false;
    bool nontrivial_verified = false;

    bool valid() const { return identity_verified && nontrivial_verified; }
};

/// Recomputes both verdicts from the relator and q alone.
inline Certificate reverify(Certificate c) {
    c.relator = Word::reduce(c.relator.syllables());
    c.identity_verified = eval_word(c.relator, c.q).is_identity();
    c.nontrivial_verified = !c.relator.empty();
    return c;
}

inline Certificate certify_half_relation(const Tuple& t, const Rat& q) {
    if (!is_half_relation(t, q))
        throw NotAHalfRelation(t.str() + " is not a half-relation for q = " + q.str());
    Certificate c;
    c.kind = CertificateKind::half_relation;
    c.tuple = t;
    c.q = q;
    c.relator = alt_word(t) * mirror_word(t).inverse();
    c = reverify(std::move(c));
    if (!c.valid())
        throw CertificateFailure("half-relation certificate failed verification for " + t.str() +
                                 " at q = " + q.str());
    return c;
}

// ---------------------------------------------------------------------------
// 1-step relation numbers

struct OneStep {
    Int r, s, t;
    friend bool operator==(const OneStep&, const OneStep&) = default;
};

inline void require_nonzero(const OneStep& x) {
    if (sgn(x.r) == 0 || sgn(x.s) == 0 || sgn(x.t) == 0) throw ZeroArg("r, s, t must all be nonzero");
}

/// (r + t) / (r s t).
inline Rat onestep_q(const OneStep& x) {
    require_nonzero(x);
    return Rat(x.r + x.t, x.r * x.s * x.t);
}

// b^r a^{-s} b^t
inline Word onestep_word(const OneStep& x) {
    require_nonzero(x);
    return Word::reduce({{Gen::b, x.r}, {Gen::a, -x.s}, {Gen::b, x.t}});
}

inline bool is_onestep_upper_triangular(const OneStep& x, const Rat& q) {
    return eval_word(onestep_word(x), q).is_upper_triangular();
}

/// Smallest (r, s, t) with |r|,|s|,|t| <= bound and (r+t)/(rst) = q, ordered
/// by (|r|, |s|, |t|) and then by sign pattern with + before -.
inline std::optional<OneStep> onestep_search(const Rat& q, long bound) {
    if (q.is_zero()) throw ZeroQ();
    if (bound < 1) throw BadParams("bound must be >= 1");
    const Int qn = q.num(), qd = q.den();
    for (long r = 1; r <= bound; ++r)
        for (long s = 1; s <= bound; ++s)
            for (long t = 1; t <= bound; ++t)
                for (int mask = 0; mask < 8; ++mask) {
                    Int rr = (mask & 4) ? -r : r;
                    Int ss = (mask & 2) ? -s : s;
                    Int tt = (mask & 1) ? -t : t;
                    // (r+t) * den == num * r s t
                    if ((rr + tt) * qd == qn * rr * ss * tt) return OneStep{rr, ss, tt};
                }
    return std::nullopt;
}

/// Certificate from the commutator [w a w^-1, a] with w = b^r a^{-s} b^t.
inline Certificate onestep_certificate(const OneStep& x) {
    require_nonzero(x);
    if (sgn(x.r + x.t) == 0) throw ZeroArg("r + t must be nonzero");
    Rat q = onestep_q(x);
    Word w = onestep_word(x);
    Word a = Word::reduce({{Gen::a, Int(1)}});
    Word conj = w * a * w.inverse();
    Certificate c;
    c.kind = CertificateKind::one_step;
    c.tuple = Tuple(std::vector<Int>{x.r, x.s, x.t});
    c.q = q;
    c.relator = conj * a * conj.inverse() * a.inverse();
    c = reverify(std::move(c));
    if (!c.valid()) throw CertificateFailure("one-step certificate failed verification at q = " + q.str());
    return c;
}

}  // namespace halfrel
