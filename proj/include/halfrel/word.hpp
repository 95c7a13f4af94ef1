#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "halfrel/matrix.hpp"
#include "halfrel/number.hpp"
#include "halfrel/poly.hpp"

namespace halfrel {

enum class Gen : char { a = 'a', b = 'b' };

inline Gen other(Gen g) { return g == Gen::a ? Gen::b : Gen::a; }

struct Syllable {
    Gen gen;
    Int exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of the free group F(a, b) in freely reduced form: no zero
/// exponents and no two adjacent syllables on the same generator.
class Word {
public:
    Word() = default;

    /// Free reduction of an arbitrary syllable sequence.
    static Word reduce(const std::vector<Syllable>& raw) {
        Word w;
        for (const auto& s : raw) w.push(s);
        return w;
    }

    const std::vector<Syllable>& syllables() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }

    Word inverse() const {
        Word w;
        w.s_.reserve(s_.size());
        for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.s_.push_back({it->gen, -it->exp});
        return w;
    }

    friend Word operator*(const Word& u, const Word& v) {
        Word w = u;
        for (const auto& s : v.s_) w.push(s);
        return w;
    }

    friend bool operator==(const Word&, const Word&) = default;

    /// "a b^-4 a" style; the identity prints as "1".
    std::string str() const {
        if (s_.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (i) os << ' ';
            os << static_cast<char>(s_[i].gen);
            if (s_[i].exp != 1) os << '^' << s_[i].exp;
        }
        return os.str();
    }

private:
    void push(const Syllable& s) {
        if (sgn(s.exp) == 0) return;
        if (!s_.empty() && s_.back().gen == s.gen) {
            s_.back().exp += s.exp;
            if (sgn(s_.back().exp) == 0) s_.pop_back();
            return;
        }
        s_.push_back(s);
    }

    std::vector<Syllable> s_;
};

inline Word free_reduce(const std::vector<Syllable>& raw) { return Word::reduce(raw); }
inline Word word_inverse(const Word& w) { return w.inverse(); }
inline Word word_concat(const Word& u, const Word& v) { return u * v; }

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

/// Evaluates w at A = [[1,1],[0,1]], B_q = [[1,0],[q,1]].
inline Mat2<Rat> eval_word(const Word& w, const Rat& q) {
    auto m = Mat2<Rat>::identity();
    for (const auto& s : w.syllables())
        m = m * (s.gen == Gen::a ? a_power<Rat>(s.exp) : b_power(s.exp, q));
    return m;
}

/// Evaluates w with q left as an indeterminate; entries lie in Z[q].
inline Mat2<IntPoly> eval_word_symbolic(const Word& w) {
    auto m = Mat2<IntPoly>::identity();
    for (const auto& s : w.syllables())
        m = m * (s.gen == Gen::a ? a_power<IntPoly>(s.exp) : b_power_symbolic(s.exp));
    return m;
}

}  // namespace halfrel
