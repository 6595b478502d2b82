#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowdim/linalg.hpp"
#include "lowdim/mcg.hpp"
#include "lowdim/plumbing.hpp"

namespace lowdim {

// One torus level T^2 x {t} carrying `count` parallel (-1)-framed surgery
// curves of the given slope.
struct SurgeryLayer {
    Rat level;
    Slope slope;
    long long count = 1;
};

struct SurgeryConfig {
    std::vector<SurgeryLayer> layers;

    void validate() const {
        for (std::size_t i = 0; i < layers.size(); ++i) {
            if (layers[i].count < 1)
                throw std::invalid_argument("SurgeryConfig: count must be >= 1");
            if (layers[i].level <= 0 || layers[i].level >= 1)
                throw std::invalid_argument("SurgeryConfig: level must lie in (0,1)");
            if (i > 0 && !(layers[i - 1].level < layers[i].level))
                throw std::invalid_argument("SurgeryConfig: levels must strictly increase");
        }
    }
};

// Regluing diffeomorphism of the surgered manifold: the twist at the highest
// level is applied last, i.e. leftmost in the product.
inline SL2 regluing_matrix(const SurgeryConfig& cfg) {
    cfg.validate();
    SL2 r;
    for (const auto& layer : cfg.layers)
        r = pow(twist_matrix(layer.slope), layer.count) * r;
    return r;
}

// One layer per word factor. Word order is top-down (leftmost factor applied
// last), so ascending levels carry the factors in reverse; by construction
// regluing_matrix(config_from_word(w)) = eval_word(w). Default levels are
// i/(k+1) for the i-th layer counted upward.
inline SurgeryConfig config_from_word(const TwistWord& w,
                                      const std::optional<std::vector<Rat>>& levels = {}) {
    const auto& fs = w.factors();
    const std::size_t k = fs.size();
    if (levels && levels->size() != k)
        throw std::invalid_argument("config_from_word: need one level per factor");
    SurgeryConfig cfg;
    for (std::size_t i = 0; i < k; ++i) {
        const WordFactor& f = fs[k - 1 - i];
        if (f.exponent <= 0)
            throw std::invalid_argument(
                "config_from_word: word not realizable, factor " + std::to_string(k - i) +
                " has non-positive exponent (Legendrian surgery gives right-handed twists)");
        cfg.layers.push_back(SurgeryLayer{
            levels ? (*levels)[i] : Rat(static_cast<long long>(i + 1),
                                        static_cast<long long>(k + 1)),
            f.slope, f.exponent});
    }
    cfg.validate();
    return cfg;
}

// Replayable handle-slide script: start matrix, congruence slides, and the
// indices of the principal block the slides expose.
struct SlideScript {
    IntMatrix start;
    struct Slide {
        std::size_t i, j;
        Int c;
    };
    std::vector<Slide> slides;
    std::vector<std::size_t> block;

    IntMatrix replay() const {
        IntMatrix m = start;
        for (const auto& s : slides) m = congruence_slide(m, s.i, s.j, s.c);
        return m;
    }
};

namespace detail {

// Linking data of the 13 canonical curves (x^3 y x^3 y x^3 y^2 read top
// level to bottom): -1 framings on the diagonal, 0 between parallel copies,
// and 1 between an x-curve and any y-curve at a lower level. The last choice
// is the gauge in which the slid curves' honest linking numbers come out
// right: a difference x_i - x_{i+1} links a y-curve once exactly when the
// y-level separates the two x-levels.
inline IntMatrix canonical_gamma_start_matrix() {
    const bool is_x[13] = {true,  true, true,  false, true,  true, true,
                           false, true, true,  true,  false, false};
    IntMatrix m(13, 13);
    for (std::size_t i = 0; i < 13; ++i) m.at(i, i) = -1;
    for (std::size_t i = 0; i < 13; ++i)
        for (std::size_t j = i + 1; j < 13; ++j) {
            if (is_x[i] == is_x[j]) continue;
            const std::size_t y_pos = is_x[i] ? j : i;
            const std::size_t x_pos = is_x[i] ? i : j;
            if (y_pos > x_pos) {
                m.at(i, j) = 1;
                m.at(j, i) = 1;
            }
        }
    return m;
}

}  // namespace detail

// The slide sequence of the b_2^+ argument: the first six x-handles collapse
// to a chain of five -2 spheres, the four y-handles to a chain of three, and
// the chains meet where a single y-level separates two consecutive x-levels.
// The exposed block is exactly the 8-vertex certificate plumbing.
inline SlideScript canonical_gamma_slide_script() {
    SlideScript s;
    s.start = detail::canonical_gamma_start_matrix();
    // v_j <- v_j - v_i (handle j slides over handle i): x-differences first.
    s.slides = {{1, 0, -1}, {2, 1, -1}, {4, 2, -1}, {5, 4, -1},
                {6, 5, -1}, {7, 3, -1}, {11, 7, -1}, {12, 11, -1}};
    s.block = {0, 1, 2, 4, 5, 3, 7, 11};
    return s;
}

// Outcome of the gamma-pattern search. When found, the certificate carries
// the 8-vertex plumbing whose intersection form has determinant -3 and a
// positive eigenvalue, which is the b_2^+ > 0 witness.
struct GammaCertificate {
    bool found = false;
    std::size_t begin = 0, end = 0;  // factor range [begin, end) in the scanned word
    std::size_t rotation = 0;
    bool swapped = false;
    TwistWord conjugator;  // scanned word = conjugator * w * conjugator^{-1}
    TwistWord scanned;
    bool canonical = false;
    bool relaxed_match = false;
    PlumbingGraph plumbing;
    Int det = 0;
    Inertia form;
    std::optional<SlideScript> script;
};

namespace detail {

// Block shapes: strict is x^e1 y^f1 x^e2 y^f2 x^e3 y^f3 with e_i >= 3,
// f_1, f_2 >= 1, f_3 >= 2. Relaxed (opt-in) trades f_3 >= 2 for a fourth
// x-group and a fourth single y: (x^(>=3) y^(>=1))^4.
inline bool block_matches(const std::vector<WordFactor>& fs, std::size_t at,
                          std::size_t len, bool relaxed) {
    if (at + len > fs.size()) return false;
    const Slope x = fs[at].slope;
    if (at + 1 >= fs.size()) return false;
    const Slope y = fs[at + 1].slope;
    if (x == y || abs_int(intersection(x, y)) != 1) return false;
    for (std::size_t k = 0; k < len; ++k) {
        const WordFactor& f = fs[at + k];
        if (f.slope != (k % 2 == 0 ? x : y)) return false;
        if (k % 2 == 0 && f.exponent < 3) return false;
        if (k % 2 == 1 && f.exponent < 1) return false;
    }
    if (!relaxed && fs[at + 5].exponent < 2) return false;
    return true;
}

// Conjugation by b^{-1} a^{-1} b^{-1} realizes the a<->b role swap: it maps
// the slope-0 curve to the slope-infinity curve and back.
inline TwistWord swap_conjugator() {
    return TwistWord({WordFactor{Slope::infinity(), -1}, WordFactor{Slope::zero(), -1},
                      WordFactor{Slope::infinity(), -1}});
}

}  // namespace detail

// Search w (normalized), its a<->b swap and its cyclic rotations for the
// gamma block. Fixed search order: rotation 0 plain, rotation 0 swapped,
// rotation 1 plain, ... — the first hit wins. All exponents must be
// positive.
inline GammaCertificate gamma_pattern(const TwistWord& word, bool relaxed = false) {
    const TwistWord w = word.normalized();
    for (const auto& f : w.factors())
        if (f.exponent <= 0)
            throw std::invalid_argument("gamma_pattern: word must have positive exponents");

    GammaCertificate cert;
    const std::size_t n = w.size();
    for (std::size_t rot = 0; rot < std::max<std::size_t>(n, 1) && !cert.found; ++rot) {
        for (int swapped = 0; swapped < 2 && !cert.found; ++swapped) {
            // Rotation physically reorders the factor list (the tori live in
            // an annular family); as a group element that is conjugation by
            // the inverse of the rotated-out prefix.
            TwistWord conj;
            TwistWord scanned = w;
            if (rot > 0) {
                TwistWord prefix;
                for (std::size_t i = 0; i < rot; ++i)
                    prefix = prefix * TwistWord::single(w.factors()[i].slope,
                                                        w.factors()[i].exponent);
                conj = prefix.inverse();
                scanned = w.rotated(rot).normalized();
            }
            if (swapped) {
                scanned = conjugate_word(scanned, detail::swap_conjugator());
                conj = detail::swap_conjugator() * conj;
            }
            const auto& fs = scanned.factors();
            for (std::size_t at = 0; at + 6 <= fs.size(); ++at) {
                const bool strict_hit = detail::block_matches(fs, at, 6, false);
                const bool hit =
                    strict_hit || (relaxed && detail::block_matches(fs, at, 8, true));
                if (!hit) continue;
                cert.found = true;
                cert.begin = at;
                cert.end = at + (strict_hit ? 6 : 8);
                cert.rotation = rot;
                cert.swapped = swapped;
                cert.conjugator = conj;
                cert.scanned = scanned;
                cert.relaxed_match = !strict_hit;
                cert.canonical =
                    strict_hit && fs[at].exponent == 3 && fs[at + 1].exponent == 1 &&
                    fs[at + 2].exponent == 3 && fs[at + 3].exponent == 1 &&
                    fs[at + 4].exponent == 3 && fs[at + 5].exponent == 2;
                break;
            }
        }
    }
    if (cert.found) {
        cert.plumbing = catalog({CatalogName::Plum, {}});
        const IntMatrix m = intersection_matrix(cert.plumbing);
        cert.det = det_exact(m);
        cert.form = inertia(m);
        if (cert.canonical) cert.script = canonical_gamma_slide_script();
    }
    return cert;
}

// gamma_pattern plus the b_2^+ soundness assertion on the attached form.
inline GammaCertificate b2plus_certificate(const TwistWord& word, bool relaxed = false) {
    GammaCertificate cert = gamma_pattern(word, relaxed);
    if (cert.found && cert.form.n_plus < 1)
        throw std::logic_error("b2plus_certificate: certificate form has no positive part");
    return cert;
}

}  // namespace lowdim
