#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lowdim/int_matrix.hpp"
#include "lowdim/numeric.hpp"

namespace lowdim {

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
struct SNFResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};

// Signature data of a symmetric form: counts of positive, zero and negative
// diagonal entries after congruence diagonalization over Q.
struct Inertia {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Inertia& in) {
        return os << "(" << in.n_plus << "," << in.n_zero << "," << in.n_minus << ")";
    }
};

// Finitely generated abelian group in canonical form: Z^free_rank plus cyclic
// torsion factors d1 | d2 | ..., each > 1.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank == 1) {
            os << "Z";
            first = false;
        } else if (free_rank > 1) {
            os << "Z^" << free_rank;
            first = false;
        }
        for (const Int& t : torsion) {
            os << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        return os.str();
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
    friend std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) {
        return os << g.to_string();
    }
};

// Exact determinant by Bareiss fraction-free elimination.
inline Int det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && w.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

namespace detail {

// Elementary operations applied to D are mirrored on U (rows) or V (cols) so
// the invariant U*M*V = D holds throughout the Smith reduction.
struct SnfWork {
    IntMatrix d, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(dst, j) += f * d.at(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += f * u.at(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, dst) += f * d.at(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += f * v.at(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(r, j) = -d.at(r, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }

    // Smallest nonzero |entry| in the block starting at (t, t); ties broken by
    // lowest (row, col). This fixed policy makes the output reproducible.
    std::optional<std::pair<std::size_t, std::size_t>> pick_pivot(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int best_abs = 0;
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j) {
                const Int& e = d.at(i, j);
                if (e == 0) continue;
                Int a = abs_int(e);
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = a;
                }
            }
        return best;
    }

    // Clear row t and column t against the pivot at (t, t), re-selecting the
    // pivot whenever a smaller remainder appears.
    void eliminate_at(std::size_t t) {
        for (;;) {
            auto p = pick_pivot(t);
            if (!p) return;
            swap_rows(t, p->first);
            swap_cols(t, p->second);
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                add_row(i, t, -floor_div(d.at(i, t), d.at(t, t)));
                if (d.at(i, t) != 0) clean = false;  // remainder smaller than pivot
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                add_col(j, t, -floor_div(d.at(t, j), d.at(t, t)));
                if (d.at(t, j) != 0) clean = false;
            }
            if (clean) return;
        }
    }
};

}  // namespace detail

inline SNFResult smith_normal_form(const IntMatrix& m) {
    detail::SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const std::size_t steps = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        if (!w.pick_pivot(t)) break;
        for (;;) {
            w.eliminate_at(t);
            // The chain d_t | d_{t+1} | ... holds iff the pivot divides every
            // entry of the residual block. A non-multiple is folded into row t
            // and elimination repeats; the pivot shrinks to a divisor each time.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < w.d.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < w.d.cols(); ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            w.add_row(t, *bad_row, 1);
        }
    }
    for (std::size_t i = 0; i < steps; ++i)
        if (w.d.at(i, i) < 0) w.negate_row(i);

    return SNFResult{w.d, w.u, w.v};
}

// Signature of a symmetric integer matrix by congruence reduction over Q.
// No floating point: when every remaining diagonal entry vanishes but some
// off-diagonal entry does not, a hyperbolic pair contributing (1,0,1) is
// split off.
inline Inertia inertia(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));

    std::vector<std::size_t> alive(n);
    for (std::size_t i = 0; i < n; ++i) alive[i] = i;

    Inertia out;
    while (!alive.empty()) {
        std::optional<std::size_t> diag;
        for (std::size_t k : alive)
            if (w[k][k] != 0) {
                diag = k;
                break;
            }
        if (diag) {
            const std::size_t k = *diag;
            const Rat d = w[k][k];
            (d > 0 ? out.n_plus : out.n_minus)++;
            std::vector<std::size_t> rest;
            for (std::size_t i : alive)
                if (i != k) rest.push_back(i);
            std::vector<Rat> col(rest.size());
            for (std::size_t a = 0; a < rest.size(); ++a) col[a] = w[rest[a]][k];
            for (std::size_t a = 0; a < rest.size(); ++a)
                for (std::size_t b = 0; b < rest.size(); ++b)
                    w[rest[a]][rest[b]] -= col[a] * col[b] / d;
            alive = std::move(rest);
            continue;
        }
        std::optional<std::pair<std::size_t, std::size_t>> off;
        for (std::size_t a = 0; a < alive.size() && !off; ++a)
            for (std::size_t b = a + 1; b < alive.size() && !off; ++b)
                if (w[alive[a]][alive[b]] != 0) off = {alive[a], alive[b]};
        if (!off) {
            out.n_zero += static_cast<int>(alive.size());
            break;
        }
        // Hyperbolic block [[0,e],[e,0]]: v_k' = v_k - (w[k][j]/e) v_i - (w[k][i]/e) v_j
        // decouples the rest; the block itself contributes (1,0,1).
        const auto [i, j] = *off;
        const Rat e = w[i][j];
        out.n_plus++;
        out.n_minus++;
        std::vector<std::size_t> rest;
        for (std::size_t k : alive)
            if (k != i && k != j) rest.push_back(k);
        std::vector<Rat> alpha(rest.size()), beta(rest.size());
        for (std::size_t a = 0; a < rest.size(); ++a) {
            alpha[a] = w[rest[a]][j] / e;
            beta[a] = w[rest[a]][i] / e;
        }
        std::vector<Rat> wi(rest.size()), wj(rest.size());
        for (std::size_t a = 0; a < rest.size(); ++a) {
            wi[a] = w[i][rest[a]];
            wj[a] = w[j][rest[a]];
        }
        for (std::size_t a = 0; a < rest.size(); ++a)
            for (std::size_t b = 0; b < rest.size(); ++b)
                w[rest[a]][rest[b]] += -alpha[a] * wi[b] - beta[a] * wj[b] -
                                       alpha[b] * wi[a] - beta[b] * wj[a] +
                                       (alpha[a] * beta[b] + beta[a] * alpha[b]) * e;
        alive = std::move(rest);
    }
    return out;
}

// Cokernel Z^n / M Z^n in canonical form, read off the Smith diagonal.
inline AbelianGroup cokernel_invariants(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("cokernel_invariants: matrix not square");
    const SNFResult snf = smith_normal_form(m);
    AbelianGroup g;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = snf.d.at(i, i);
        if (d == 0)
            g.free_rank++;
        else if (d > 1)
            g.torsion.push_back(d);
    }
    return g;
}

// Basis change E^T M E with E = I + c*e_{ij}; models sliding handle j over
// handle i with coefficient c.
inline IntMatrix congruence_slide(const IntMatrix& m, std::size_t i, std::size_t j,
                                  const Int& c) {
    if (!m.is_symmetric())
        throw std::invalid_argument("congruence_slide: matrix not symmetric");
    if (i == j) throw std::invalid_argument("congruence_slide: indices must differ");
    if (i >= m.rows() || j >= m.rows())
        throw std::out_of_range("congruence_slide: index out of range");
    IntMatrix r = m;
    for (std::size_t k = 0; k < r.cols(); ++k) r.at(j, k) += c * r.at(i, k);
    for (std::size_t k = 0; k < r.rows(); ++k) r.at(k, j) += c * r.at(k, i);
    return r;
}

}  // namespace lowdim
