#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lowdim/cobordism.hpp"
#include "lowdim/mcg.hpp"

namespace lowdim {

// Toric layer T^2 x I with characteristic-foliation slopes on its two
// boundary tori, measured in the layer's own coordinates.
struct ToricLayer {
    std::string name;
    Slope left;
    Slope right;

    friend bool operator==(const ToricLayer&, const ToricLayer&) = default;
};

// Ordered layers with a gluing map between consecutive ones. The gluing at
// interface i carries data of layer i+1 into layer i coordinates via its
// inverse; that convention is pinned by the A^{-1}(0 1)^T = (-1 1)^T anchor.
struct LayerDecomposition {
    std::vector<ToricLayer> layers;
    std::vector<SL2> gluings;

    void validate() const {
        if (layers.empty()) throw std::invalid_argument("LayerDecomposition: no layers");
        if (gluings.size() + 1 != layers.size())
            throw std::invalid_argument(
                "LayerDecomposition: need exactly one gluing per interior interface");
    }

    friend bool operator==(const LayerDecomposition&, const LayerDecomposition&) = default;
};

namespace detail {

// Transport of layer i's data to the frame of layer `base` (base <= i):
// the product of inverse gluings crossed on the way left.
inline SL2 transport_to(const LayerDecomposition& d, std::size_t base, std::size_t i) {
    SL2 psi;
    for (std::size_t k = base; k < i; ++k) psi = psi * d.gluings[k].inverse();
    return psi;
}

}  // namespace detail

// Boundary slopes of the union of layers [from, to], in the frame of layer
// `from`.
inline std::pair<Slope, Slope> sub_outer_slopes(const LayerDecomposition& d,
                                                std::size_t from, std::size_t to) {
    d.validate();
    if (from > to || to >= d.layers.size())
        throw std::out_of_range("sub_outer_slopes: bad layer range");
    return {d.layers[from].left,
            act_on_slope(detail::transport_to(d, from, to), d.layers[to].right)};
}

inline std::pair<Slope, Slope> outer_slopes(const LayerDecomposition& d) {
    d.validate();
    return sub_outer_slopes(d, 0, d.layers.size() - 1);
}

// k Legendrian surgeries along the interface curve: multiplies the gluing at
// the interface by twist^k. The curve must be the characteristic slope of
// the interface, i.e. the adjacent boundary slopes on both sides.
inline LayerDecomposition split_and_twist(LayerDecomposition d, std::size_t at,
                                          const Slope& curve, long long k) {
    d.validate();
    if (at >= d.gluings.size())
        throw std::out_of_range("split_and_twist: no such interface");
    if (k < 0) throw std::invalid_argument("split_and_twist: k must be >= 0");
    if (d.layers[at].right != curve || d.layers[at + 1].left != curve)
        throw std::invalid_argument(
            "split_and_twist: curve " + curve.to_string() +
            " is not the characteristic slope at interface " + std::to_string(at) +
            " (" + d.layers[at].right.to_string() + " | " +
            d.layers[at + 1].left.to_string() + ")");
    d.gluings[at] = pow(twist_matrix(curve), k) * d.gluings[at];
    return d;
}

// Equivalent decomposition with all-identity gluings: each layer's slopes are
// transported into the first layer's frame. Outer slopes are unchanged.
inline LayerDecomposition normalize(const LayerDecomposition& d) {
    d.validate();
    LayerDecomposition out;
    SL2 psi;
    for (std::size_t i = 0; i < d.layers.size(); ++i) {
        if (i > 0) psi = psi * d.gluings[i - 1].inverse();
        out.layers.push_back(ToricLayer{d.layers[i].name,
                                        act_on_slope(psi, d.layers[i].left),
                                        act_on_slope(psi, d.layers[i].right)});
    }
    out.gluings.assign(d.layers.size() - 1, SL2::identity());
    return out;
}

// One recorded step of the torsion-reduction run.
struct TraceStep {
    std::string surgery;             // e.g. "D^1_1" or "C_{3/4}"
    std::optional<std::size_t> interface_index;  // empty: outer-boundary surgery
    Slope curve;
    std::string snapshot_label;      // empty when the step records no snapshot
    std::optional<std::pair<Slope, Slope>> snapshot;
    std::string note;
};

struct TorsionTrace {
    long long n = 1;
    LayerDecomposition initial;
    LayerDecomposition final_state;
    std::vector<TraceStep> steps;
    TwistWord total_word;    // accumulated regluing word, top level leftmost
    SL2 total_matrix;
    bool regluing_identity = false;

    std::vector<std::pair<Slope, Slope>> snapshots() const {
        std::vector<std::pair<Slope, Slope>> out;
        for (const auto& s : steps)
            if (s.snapshot) out.push_back(*s.snapshot);
        return out;
    }
};

// The twelve Legendrian surgeries of the torsion-reduction argument, run on
// the six-layer decomposition with boundary slopes
// (0,inf),(inf,0),(0,inf),(inf,0),(0,inf),(inf,n). Snapshots record the
// paper's slope bookkeeping: four outer-slope readings of N1..N5, then the
// boundary slopes of the normalized tails N4..N5 and N3..N5. The surgery at
// the outer torus T_{-delta} enters the accumulated word only.
inline TorsionTrace reduce_torsion_script(long long n) {
    if (n < 1) throw std::invalid_argument("reduce_torsion_script: n must be >= 1");
    const Slope s0 = Slope::zero();
    const Slope si = Slope::infinity();

    TorsionTrace tr;
    tr.n = n;
    tr.initial.layers = {
        ToricLayer{"N1", s0, si}, ToricLayer{"N2", si, s0}, ToricLayer{"N3", s0, si},
        ToricLayer{"N4", si, s0}, ToricLayer{"N5", s0, si},
        ToricLayer{"N6", si, Slope(1, n)}};
    tr.initial.gluings.assign(5, SL2::identity());

    LayerDecomposition d = tr.initial;

    auto surger = [&](const std::string& name, std::optional<std::size_t> iface,
                      const Slope& curve) {
        if (iface) d = split_and_twist(d, *iface, curve, 1);
        tr.steps.push_back(TraceStep{name, iface, curve, "", {}, ""});
    };
    // Boundary slopes of the layers [from, to] read off the normalized
    // decomposition, i.e. in the frame of N1.
    auto snapshot = [&](std::size_t from, std::size_t to, const std::string& label,
                        const std::string& note = "") {
        const LayerDecomposition nd = normalize(d);
        tr.steps.push_back(TraceStep{
            "", {}, s0, label,
            std::make_pair(nd.layers[from].left, nd.layers[to].right), note});
    };

    // Level order, bottom to top: C at T_{-delta}; D's at T_0; C at T_{1/4};
    // D's at T_{1/2}; C at T_{3/4}; D's at T_1. The proof performs them from
    // the top down.
    surger("D^1_1", 4, si);
    surger("D^2_1", 4, si);
    surger("D^3_1", 4, si);
    surger("C_{3/4}", 3, s0);
    snapshot(0, 4, "N1..N4 u_A N5");

    surger("D^1_{1/2}", 2, si);
    snapshot(0, 4, "N1..N3 u_B N4 u_A N5");
    surger("D^2_{1/2}", 2, si);
    snapshot(0, 4, "N1..N3 u_B2 N4 u_A N5");
    surger("D^3_{1/2}", 2, si);
    snapshot(0, 4, "N1..N3 u_B3 N4 u_A N5");
    snapshot(3, 4, "N5' (normalized tail N4..N5)",
             "basic-slice signs are not tracked; slopes only");

    surger("C_{1/4}", 1, s0);
    snapshot(2, 4, "N4' (normalized tail N3..N5)");

    surger("D^1_0", 0, si);
    surger("D^2_0", 0, si);
    surger("D^3_0", 0, si);
    surger("C_{-delta}", {}, s0);  // outer boundary torus: word bookkeeping only

    tr.final_state = d;

    // Accumulated regluing, highest torus applied last (leftmost factor):
    // B^3 A B^3 A B^3 A.
    TwistWord total;
    for (int block = 0; block < 3; ++block)
        total = total * TwistWord::b(3) * TwistWord::a(1);
    tr.total_word = total;
    tr.total_matrix = eval_word(total);
    tr.regluing_identity = tr.total_matrix.is_identity();
    return tr;
}

// The surgery configuration equivalent to the script's twelve surgeries:
// levels ascend T_{-delta} < T_0 < ... < T_1 with counts (1,3,1,3,1,3).
inline SurgeryConfig reduce_torsion_config() {
    SurgeryConfig cfg;
    const Slope s0 = Slope::zero();
    const Slope si = Slope::infinity();
    const long long counts[6] = {1, 3, 1, 3, 1, 3};
    const Slope slopes[6] = {s0, si, s0, si, s0, si};
    for (int i = 0; i < 6; ++i)
        cfg.layers.push_back(SurgeryLayer{Rat(2 * i + 1, 13), slopes[i], counts[i]});
    cfg.validate();
    return cfg;
}

}  // namespace lowdim
