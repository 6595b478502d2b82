#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowdim/numeric.hpp"

namespace lowdim {

// A point of P^1(Q): the isotopy class of an essential simple closed curve on
// the torus. Stored as a primitive column vector (x, y) with slope value y/x;
// (0, 1) is the slope at infinity. Canonical representative has x > 0, or
// (x, y) = (0, 1).
struct Slope {
    Int x;
    Int y;

    Slope() : x(1), y(0) {}

    Slope(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {
        if (x == 0 && y == 0) throw std::invalid_argument("Slope: zero vector");
        if (gcd_int(x, y) != 1)
            throw std::invalid_argument("Slope: vector (" + x.str() + "," + y.str() +
                                        ") is not primitive");
        if (x < 0 || (x == 0 && y < 0)) {
            x = -x;
            y = -y;
        }
    }

    static Slope zero() { return Slope(1, 0); }          // the curve "a"
    static Slope infinity() { return Slope(0, 1); }      // the curve "b"
    static Slope of_integer(const Int& m) { return Slope(1, m); }

    bool is_infinity() const { return x == 0; }

    std::string to_string() const {
        if (is_infinity()) return "inf";
        if (x == 1) return y.str();
        return y.str() + "/" + x.str();
    }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Slope& s) {
        return os << s.to_string();
    }
};

// Algebraic intersection number <u, v> = u_x v_y - u_y v_x.
inline Int intersection(const Slope& u, const Slope& v) { return u.x * v.y - u.y * v.x; }

// Element of SL(2, Z), the mapping class group of the torus.
struct SL2 {
    Int a, b, c, d;  // [[a, b], [c, d]]

    SL2() : a(1), b(0), c(0), d(1) {}

    SL2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1) throw std::invalid_argument("SL2: determinant is not 1");
    }

    static SL2 identity() { return SL2(); }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    Int trace() const { return a + d; }
    SL2 inverse() const { return SL2(d, -b, -c, a); }

    friend SL2 operator*(const SL2& l, const SL2& r) {
        return SL2(l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                   l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d);
    }

    friend bool operator==(const SL2&, const SL2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const SL2& m) {
        return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    }
};

inline SL2 pow(const SL2& m, long long e) {
    SL2 base = e < 0 ? m.inverse() : m;
    unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
    SL2 r;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

// Right-handed Dehn twist along the curve of slope c: v -> v + <c, v> c,
// which is [[1-xy, x^2], [-y^2, 1+xy]] for c = (x, y). The convention is
// pinned by the slope-0 twist having inverse [[1,-1],[0,1]].
inline SL2 twist_matrix(const Slope& c) {
    return SL2(1 - c.x * c.y, c.x * c.x, -c.y * c.y, 1 + c.x * c.y);
}

inline Slope act_on_slope(const SL2& m, const Slope& s) {
    return Slope(m.a * s.x + m.b * s.y, m.c * s.x + m.d * s.y);
}

// One factor of a twist word: twist_matrix(slope)^exponent.
struct WordFactor {
    Slope slope;
    long long exponent = 1;

    friend bool operator==(const WordFactor&, const WordFactor&) = default;
};

// Ordered word in Dehn twists. The leftmost factor is applied last, matching
// function composition, so evaluation is the plain left-to-right matrix
// product.
class TwistWord {
public:
    TwistWord() = default;
    explicit TwistWord(std::vector<WordFactor> factors) : factors_(std::move(factors)) {
        for (const auto& f : factors_)
            if (f.exponent == 0)
                throw std::invalid_argument("TwistWord: zero exponent factor");
    }

    static TwistWord a(long long e = 1) { return single(Slope::zero(), e); }
    static TwistWord b(long long e = 1) { return single(Slope::infinity(), e); }
    static TwistWord single(const Slope& s, long long e = 1) {
        return TwistWord({WordFactor{s, e}});
    }

    const std::vector<WordFactor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    // Normal form: adjacent factors with equal slope merge, zero exponents drop.
    TwistWord normalized() const {
        std::vector<WordFactor> out;
        for (const auto& f : factors_) {
            if (f.exponent == 0) continue;
            if (!out.empty() && out.back().slope == f.slope) {
                out.back().exponent += f.exponent;
                if (out.back().exponent == 0) out.pop_back();
            } else {
                out.push_back(f);
            }
        }
        TwistWord w;
        w.factors_ = std::move(out);
        return w;
    }

    TwistWord inverse() const {
        TwistWord w;
        for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
            w.factors_.push_back(WordFactor{it->slope, -it->exponent});
        return w;
    }

    friend TwistWord operator*(const TwistWord& l, const TwistWord& r) {
        TwistWord w;
        w.factors_ = l.factors_;
        w.factors_.insert(w.factors_.end(), r.factors_.begin(), r.factors_.end());
        return w;
    }

    TwistWord repeated(long long k) const {
        if (k == 0) return TwistWord();
        const TwistWord base = k < 0 ? inverse() : *this;
        TwistWord w;
        for (long long i = 0; i < (k < 0 ? -k : k); ++i) w = w * base;
        return w;
    }

    TwistWord rotated(std::size_t r) const {
        TwistWord w;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            w.factors_.push_back(factors_[(i + r) % factors_.size()]);
        return w;
    }

    // Shorthand using a/b for the generator slopes, e.g. "a^3 b a^3 b a^3 b^2".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& f : factors_) {
            if (!first) os << " ";
            first = false;
            if (f.slope == Slope::zero())
                os << "a";
            else if (f.slope == Slope::infinity())
                os << "b";
            else
                os << "t(" << f.slope << ")";
            if (f.exponent != 1) os << "^" << f.exponent;
        }
        return os.str();
    }

    friend bool operator==(const TwistWord&, const TwistWord&) = default;
    friend std::ostream& operator<<(std::ostream& os, const TwistWord& w) {
        return os << w.to_string();
    }

private:
    std::vector<WordFactor> factors_;
};

inline SL2 eval_word(const TwistWord& w) {
    SL2 r;
    for (const auto& f : w.factors()) r = r * pow(twist_matrix(f.slope), f.exponent);
    return r;
}

inline bool is_identity_word(const TwistWord& w) { return eval_word(w).is_identity(); }

// g w g^{-1}, rewritten factor by factor: g t_c^k g^{-1} = t_{g(c)}^k.
inline TwistWord conjugate_word(const TwistWord& w, const TwistWord& g) {
    const SL2 m = eval_word(g);
    std::vector<WordFactor> out;
    out.reserve(w.size());
    for (const auto& f : w.factors())
        out.push_back(WordFactor{act_on_slope(m, f.slope), f.exponent});
    return TwistWord(std::move(out)).normalized();
}

inline std::vector<Slope> layer_slopes(const TwistWord& w) {
    std::vector<Slope> out;
    out.reserve(w.size());
    for (const auto& f : w.factors()) out.push_back(f.slope);
    return out;
}

enum class MonodromyKind { Elliptic, Parabolic, Hyperbolic };

inline std::string to_string(MonodromyKind k) {
    switch (k) {
        case MonodromyKind::Elliptic: return "elliptic";
        case MonodromyKind::Parabolic: return "parabolic";
        case MonodromyKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

// Classification of a torus-bundle monodromy by |trace|, with the order of
// the matrix reported separately. -I has |trace| = 2 and is labelled
// parabolic here; its finite order (2) is what tells it apart.
struct MonodromyClass {
    MonodromyKind kind = MonodromyKind::Parabolic;
    Int trace;
    std::optional<int> order;  // empty = infinite

    friend bool operator==(const MonodromyClass&, const MonodromyClass&) = default;
};

inline MonodromyClass classify_monodromy(const SL2& m) {
    MonodromyClass c;
    c.trace = m.trace();
    const Int t = abs_int(c.trace);
    c.kind = t < 2   ? MonodromyKind::Elliptic
             : t == 2 ? MonodromyKind::Parabolic
                      : MonodromyKind::Hyperbolic;
    SL2 p = m;
    for (int k = 1; k <= 12; ++k) {
        if (p.is_identity()) {
            c.order = k;
            break;
        }
        p = p * m;
    }
    return c;
}

}  // namespace lowdim
