#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowdim/numeric.hpp"
#include "lowdim/plumbing.hpp"

namespace lowdim {

// Exceptional fiber of a Seifert fibration: a (-q/r)-surgery along a fiber
// of the background circle bundle.
struct SeifertFiber {
    long long r = 1;
    long long q = 1;
};

// Seifert invariants (g; a; r_1/q_1, ..., r_n/q_n) over an orientable genus-g
// base with background Euler number a.
struct SeifertData {
    long long genus = 0;
    long long a = 0;
    std::vector<SeifertFiber> fibers;

    void validate() const {
        if (genus < 0) throw std::invalid_argument("SeifertData: genus < 0");
        for (const auto& f : fibers) {
            if (f.q < 1) throw std::invalid_argument("SeifertData: fiber q < 1");
            if (f.r == 0) throw std::invalid_argument("SeifertData: fiber r = 0");
            if (gcd_int(Int(f.r), Int(f.q)) != 1)
                throw std::invalid_argument("SeifertData: fiber r/q not reduced");
        }
    }
};

// The (t, xi_0, xi_i) parameters of the delta function.
struct DeltaParams {
    long long t = 0;
    Int xi0 = 0;
    std::vector<long long> xi;

    void validate(const SeifertData& data) const {
        if (t < -data.genus || t > data.genus)
            throw std::invalid_argument("DeltaParams: |t| > genus");
        if (xi.size() != data.fibers.size())
            throw std::invalid_argument("DeltaParams: xi count != fiber count");
    }
};

// delta_t(s) = (-1)^(s+1) t + xi_0 + a s + sum_i floor((xi_i + r_i s) / q_i).
inline Int delta_t(const SeifertData& data, const DeltaParams& p, long long s) {
    data.validate();
    p.validate(data);
    Int v = (s % 2 == 0 ? Int(-p.t) : Int(p.t));
    v += p.xi0;
    v += Int(data.a) * s;
    for (std::size_t i = 0; i < data.fibers.size(); ++i)
        v += floor_div(Int(p.xi[i]) + Int(data.fibers[i].r) * s, Int(data.fibers[i].q));
    return v;
}

// Partial sums of delta: h(s+1) - h(s) = delta(s) for every s.
inline Int h_t(const SeifertData& data, const DeltaParams& p, long long s) {
    Int v = 0;
    if (s > 0)
        for (long long i = 0; i < s; ++i) v += delta_t(data, p, i);
    else
        for (long long i = s; i < 0; ++i) v -= delta_t(data, p, i);
    return v;
}

// Slope of the linear bounds on delta: lambda = a + sum r_i/q_i, the Euler
// number of the fibration.
inline Rat euler_slope(const SeifertData& data) {
    Rat l(data.a);
    for (const auto& f : data.fibers) l += Rat(f.r, f.q);
    return l;
}

namespace detail {

// Exact linear bounds valid for every s:
//   lo(s) = xi0 - |t| - n + sum xi_i/q_i + lambda s  <=  delta_t(s)
//   hi(s) = xi0 + |t|     + sum xi_i/q_i + lambda s  >=  delta_t(s)
struct DeltaBounds {
    Rat intercept_lo, intercept_hi, slope;

    Rat lo(long long s) const { return intercept_lo + slope * s; }
    Rat hi(long long s) const { return intercept_hi + slope * s; }
};

inline DeltaBounds delta_bounds(const SeifertData& data, const DeltaParams& p) {
    Rat xi_sum = 0;
    for (std::size_t i = 0; i < data.fibers.size(); ++i)
        xi_sum += Rat(p.xi[i], data.fibers[i].q);
    const Int t_abs = p.t < 0 ? -p.t : p.t;
    DeltaBounds b;
    b.slope = euler_slope(data);
    b.intercept_lo = Rat(p.xi0) - t_abs - Int(static_cast<long long>(data.fibers.size())) + xi_sum;
    b.intercept_hi = Rat(p.xi0) + t_abs + xi_sum;
    return b;
}

}  // namespace detail

struct ScanWindow {
    long long lo = 0;
    long long hi = 0;
};

struct SignChangeReport {
    long long changes = 0;
    bool tail_certain = false;
    bool lambda_zero = false;  // zero Euler slope: tails can never be certified
};

// Count sign changes of delta inside [lo, hi]: indices s in [lo, hi) with
// delta(s) <= 0 < delta(s+1) or delta(s) > 0 >= delta(s+1). The tail flag is
// set when the linear bounds force constant sign outside the window (so the
// window count is the total count over all of Z).
inline SignChangeReport sign_change_count(const SeifertData& data, const DeltaParams& p,
                                          const ScanWindow& window) {
    if (window.lo >= window.hi)
        throw std::invalid_argument("sign_change_count: window lo must be < hi");
    SignChangeReport rep;
    Int prev = delta_t(data, p, window.lo);
    for (long long s = window.lo; s < window.hi; ++s) {
        Int next = delta_t(data, p, s + 1);
        if ((prev <= 0 && next > 0) || (prev > 0 && next <= 0)) ++rep.changes;
        prev = next;
    }
    const auto b = detail::delta_bounds(data, p);
    if (b.slope == 0) {
        rep.lambda_zero = true;
        return rep;
    }
    if (b.slope > 0)
        rep.tail_certain = b.hi(window.lo) < 0 && b.lo(window.hi) > 0;
    else
        rep.tail_certain = b.lo(window.lo) > 0 && b.hi(window.hi) < 0;
    return rep;
}

// Smallest symmetric window [-S, S] outside which the linear bounds pin the
// sign of delta. Requires lambda != 0.
inline ScanWindow certain_window(const SeifertData& data, const DeltaParams& p) {
    const auto b = detail::delta_bounds(data, p);
    if (b.slope == 0)
        throw std::domain_error("certain_window: zero Euler slope, tails undecidable");
    // For lambda > 0: need hi(-S) < 0 and lo(S) > 0; mirrored for lambda < 0.
    const Rat s_hi = (b.slope > 0 ? -b.intercept_lo : -b.intercept_hi) / b.slope;
    const Rat s_lo = (b.slope > 0 ? -b.intercept_hi : -b.intercept_lo) / b.slope;
    Int s = 1;
    if (ceil_rat(s_hi) + 1 > s) s = ceil_rat(s_hi) + 1;
    if (-floor_rat(s_lo) + 1 > s) s = -floor_rat(s_lo) + 1;
    const long long S = s.convert_to<long long>();
    return ScanWindow{-S, S};
}

// True iff h_t has exactly one local minimum plateau, read off the signs of
// its increments delta over the certain window: the nonzero signs must form
// the pattern -...-+...+.
inline bool unique_local_min(const SeifertData& data, const DeltaParams& p) {
    const ScanWindow w = certain_window(data, p);
    std::vector<int> signs;
    for (long long s = w.lo; s <= w.hi; ++s) {
        const int sg = sign_of(delta_t(data, p, s));
        if (sg != 0 && (signs.empty() || signs.back() != sg)) signs.push_back(sg);
    }
    return signs.size() == 2 && signs[0] < 0 && signs[1] > 0;
}

// Reproducible "arbitrarily negative" xi_0 for a scan of half-width W.
inline Int default_xi0(const SeifertData& data, const Int& window) {
    Int qs = 0;
    for (const auto& f : data.fibers) qs += f.q;
    return -(qs + abs_int(Int(data.a)) * window + data.genus + 1);
}

struct OszReport {
    bool sufficient = false;
    std::string diagnostic;
};

// Enumerate all xi tuples in prod [0, q_i) and check the single-sign-change
// criterion for every |t| <= g, with xi_0 fixed very negative. Applicable
// only when a > 2g.
inline OszReport osz_simple_sufficient(const SeifertData& data) {
    data.validate();
    OszReport rep;
    if (data.a <= 2 * data.genus) {
        rep.diagnostic = "criterion not applicable: a <= 2g";
        return rep;
    }
    Int qs = 0;
    for (const auto& f : data.fibers) qs += f.q;
    const Int w_base = qs + data.genus + 1;

    std::vector<long long> xi(data.fibers.size(), 0);
    for (;;) {
        for (long long t = -data.genus; t <= data.genus; ++t) {
            DeltaParams p{t, default_xi0(data, w_base), xi};
            if (!unique_local_min(data, p)) {
                std::ostringstream os;
                os << "scan failed at t=" << t << " xi=(";
                for (std::size_t i = 0; i < xi.size(); ++i)
                    os << (i ? "," : "") << xi[i];
                os << ")";
                rep.diagnostic = os.str();
                return rep;
            }
        }
        std::size_t i = 0;
        while (i < xi.size() && ++xi[i] == data.fibers[i].q) xi[i++] = 0;
        if (i == xi.size()) break;
    }
    rep.sufficient = true;
    return rep;
}

// Negative continued fraction: p/q = a_1 - 1/(a_2 - 1/(...)), all a_i <= -2.
// The input is normalized by gcd reduction and sign (q > 0); it must then
// satisfy p/q < -1.
inline std::vector<Int> neg_continued_fraction(Int p, Int q) {
    if (q == 0) throw std::domain_error("neg_continued_fraction: zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const Int g = gcd_int(p, q);
    p /= g;
    q /= g;
    if (p >= -q)
        throw std::domain_error("neg_continued_fraction: " + p.str() + "/" + q.str() +
                                " is not < -1");
    std::vector<Int> out;
    while (true) {
        const Int a = floor_div(p, q);
        out.push_back(a);
        const Int r = p - a * q;
        if (r == 0) break;
        p = -q;
        q = r;
    }
    return out;
}

// Star-shaped plumbing with the same boundary: central vertex from the
// background Euler number, one chain per exceptional fiber from the negative
// continued fraction of its surgery coefficient. Genus 0 only. Fibers are
// first normalized to r in (0, q); integer fibers (q = 1) fold into the
// central weight.
inline PlumbingGraph seifert_to_plumbing(const SeifertData& data) {
    data.validate();
    if (data.genus != 0)
        throw std::invalid_argument("seifert_to_plumbing: only genus 0 is star-shaped");
    Int central = data.a;
    std::vector<std::vector<Int>> legs;
    for (const auto& f : data.fibers) {
        const Int m = floor_div(Int(f.r), Int(f.q));
        const Int r_norm = Int(f.r) - m * f.q;
        central += m;
        if (r_norm == 0) continue;  // q = 1: whole fiber absorbed
        legs.push_back(neg_continued_fraction(-Int(f.q), r_norm));
    }
    PlumbingGraph g;
    g.weights.push_back(central);
    for (const auto& leg : legs) {
        std::size_t prev = 0;  // first chain vertex attaches to the center
        for (const Int& w : leg) {
            g.weights.push_back(w);
            g.edges.emplace_back(prev, g.weights.size() - 1);
            prev = g.weights.size() - 1;
        }
    }
    return g;
}

// Linking matrix of the rational surgery presentation (central a-framed
// unknot, one -q_i/r_i meridian per fiber). Its cokernel is H_1 of the
// Seifert manifold; used as the independent check against the plumbing.
inline IntMatrix surgery_presentation_matrix(const SeifertData& data) {
    data.validate();
    if (data.genus != 0)
        throw std::invalid_argument("surgery_presentation_matrix: genus 0 only");
    const std::size_t n = data.fibers.size();
    IntMatrix m(n + 1, n + 1);
    m.at(0, 0) = data.a;
    for (std::size_t i = 0; i < n; ++i) {
        m.at(0, i + 1) = 1;
        m.at(i + 1, 0) = data.fibers[i].r;
        m.at(i + 1, i + 1) = -Int(data.fibers[i].q);
    }
    return m;
}

}  // namespace lowdim
