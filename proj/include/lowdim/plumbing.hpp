#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lowdim/linalg.hpp"
#include "lowdim/numeric.hpp"

namespace lowdim {

// Weighted graph of spheres. Vertices carry Euler-number weights; each edge
// is a plumbing of the corresponding disk bundles. Some catalog graphs carry
// a distinguished "arrow" vertex which callers may delete or reweight.
struct PlumbingGraph {
    std::vector<Int> weights;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::optional<std::size_t> arrow;

    std::size_t vertex_count() const { return weights.size(); }

    void validate() const {
        if (weights.empty()) throw std::invalid_argument("PlumbingGraph: no vertices");
        for (const auto& [i, j] : edges) {
            if (i >= weights.size() || j >= weights.size())
                throw std::invalid_argument("PlumbingGraph: edge endpoint out of range");
            if (i == j) throw std::invalid_argument("PlumbingGraph: self-loop");
        }
        if (arrow && *arrow >= weights.size())
            throw std::invalid_argument("PlumbingGraph: arrow vertex out of range");
    }

    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (const auto& [i, j] : edges) d += (i == v) + (j == v);
        return d;
    }
};

// Diagonal = weights, entry (i, j) = number of edges between i and j.
inline IntMatrix intersection_matrix(const PlumbingGraph& g) {
    g.validate();
    IntMatrix m(g.vertex_count(), g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) m.at(v, v) = g.weights[v];
    for (const auto& [i, j] : g.edges) {
        m.at(i, j) += 1;
        m.at(j, i) += 1;
    }
    return m;
}

// H_1 of the boundary 3-manifold of the plumbing.
inline AbelianGroup boundary_homology(const PlumbingGraph& g) {
    return cokernel_invariants(intersection_matrix(g));
}

// Inertia of the intersection form; n_plus = b_2^+ of the 4-manifold.
inline Inertia betti_signature(const PlumbingGraph& g) {
    return inertia(intersection_matrix(g));
}

// A vertex is bad when weight(v) > -degree(v).
inline std::size_t bad_vertex_count(const PlumbingGraph& g) {
    g.validate();
    std::size_t n = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.weights[v] > -Int(static_cast<long long>(g.degree(v)))) ++n;
    return n;
}

inline PlumbingGraph delete_vertex(PlumbingGraph g, std::size_t v) {
    if (v >= g.vertex_count())
        throw std::out_of_range("delete_vertex: vertex out of range");
    PlumbingGraph out;
    out.weights = g.weights;
    out.weights.erase(out.weights.begin() + static_cast<std::ptrdiff_t>(v));
    for (const auto& [i, j] : g.edges) {
        if (i == v || j == v) continue;
        out.edges.emplace_back(i > v ? i - 1 : i, j > v ? j - 1 : j);
    }
    if (g.arrow && *g.arrow != v) out.arrow = *g.arrow > v ? *g.arrow - 1 : *g.arrow;
    return out;
}

inline PlumbingGraph reweight_vertex(PlumbingGraph g, std::size_t v, const Int& w) {
    if (v >= g.vertex_count())
        throw std::out_of_range("reweight_vertex: vertex out of range");
    g.weights[v] = w;
    return g;
}

enum class CatalogName {
    E6Tilde,        // torus bundle Y_6
    E7Tilde,        // torus bundle Y_7
    E8Tilde,        // torus bundle Y_8
    SeifParabolic,  // star with four -2 legs
    Plum,           // the b_2^+ certificate plumbing
    VillaA,         // H-shaped graph, params: n
    VillaB,         // D-type chain with forked ends, params: n > 0
    Chain,          // params: length, weight
    Dtype,          // params: n >= 3
    LensChain,      // params: chain weights
};

struct CatalogId {
    CatalogName name;
    std::vector<Int> params;
};

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline PlumbingGraph path_graph(std::size_t n, const Int& weight) {
    PlumbingGraph g;
    g.weights.assign(n, weight);
    for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

inline void expect_params(const CatalogId& id, std::size_t n, const char* what) {
    if (id.params.size() != n)
        throw CatalogError(std::string("catalog: ") + what + " expects " +
                           std::to_string(n) + " parameter(s)");
}

}  // namespace detail

// The exact graphs of the paper's figures, with stable vertex order.
inline PlumbingGraph catalog(const CatalogId& id) {
    using detail::expect_params;
    using detail::path_graph;
    switch (id.name) {
        case CatalogName::E6Tilde: {
            // Path 0-1-2-3-4, vertex 5 on 2, vertex 6 on 5; all -2; arrow = 4.
            expect_params(id, 0, "e6tilde");
            PlumbingGraph g = path_graph(5, -2);
            g.weights.insert(g.weights.end(), {-2, -2});
            g.edges.emplace_back(2, 5);
            g.edges.emplace_back(5, 6);
            g.arrow = 4;
            return g;
        }
        case CatalogName::E7Tilde: {
            // Path 0-..-6, vertex 7 on 3; all -2; arrow = 6.
            expect_params(id, 0, "e7tilde");
            PlumbingGraph g = path_graph(7, -2);
            g.weights.push_back(-2);
            g.edges.emplace_back(3, 7);
            g.arrow = 6;
            return g;
        }
        case CatalogName::E8Tilde: {
            // Path 0-..-7, vertex 8 on 2; all -2; arrow = 7.
            expect_params(id, 0, "e8tilde");
            PlumbingGraph g = path_graph(8, -2);
            g.weights.push_back(-2);
            g.edges.emplace_back(2, 8);
            g.arrow = 7;
            return g;
        }
        case CatalogName::SeifParabolic: {
            // Center 1 adjacent to 0, 2, 3, 4; all -2; arrow = 2.
            expect_params(id, 0, "seif-parabolic");
            PlumbingGraph g;
            g.weights.assign(5, -2);
            g.edges = {{0, 1}, {1, 2}, {1, 3}, {1, 4}};
            g.arrow = 2;
            return g;
        }
        case CatalogName::Plum: {
            // Path 0-1-2-3-4 plus chain 5-6-7 hanging from 2; all -2.
            expect_params(id, 0, "plum");
            PlumbingGraph g = path_graph(5, -2);
            g.weights.insert(g.weights.end(), {-2, -2, -2});
            g.edges.emplace_back(2, 5);
            g.edges.emplace_back(5, 6);
            g.edges.emplace_back(6, 7);
            return g;
        }
        case CatalogName::VillaA: {
            // H-shape: leaves 0,1 on 2; path 2-3-4; leaves 5,6 on 4.
            // Weights (-2,-2,-1,n,-1,-2,-2).
            expect_params(id, 1, "villa-a");
            PlumbingGraph g;
            g.weights = {-2, -2, -1, id.params[0], -1, -2, -2};
            g.edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}};
            return g;
        }
        case CatalogName::VillaB: {
            // D-type chain of n+5 vertices, all -2: leaves 0,1 on fork 2,
            // chain 2..n+2, leaves n+3,n+4 on fork n+2; arrow = 1.
            expect_params(id, 1, "villa-b");
            if (id.params[0] <= 0) throw CatalogError("catalog: villa-b requires n > 0");
            const std::size_t n = static_cast<std::size_t>(id.params[0]);
            PlumbingGraph g;
            g.weights.assign(n + 5, -2);
            g.edges = {{0, 2}, {1, 2}};
            for (std::size_t i = 2; i < n + 2; ++i) g.edges.emplace_back(i, i + 1);
            g.edges.emplace_back(n + 2, n + 3);
            g.edges.emplace_back(n + 2, n + 4);
            g.arrow = 1;
            return g;
        }
        case CatalogName::Chain: {
            expect_params(id, 2, "chain");
            if (id.params[0] < 1) throw CatalogError("catalog: chain requires length >= 1");
            return path_graph(static_cast<std::size_t>(id.params[0]), id.params[1]);
        }
        case CatalogName::Dtype: {
            // D_n: path 0..n-3 with leaves n-2, n-1 on vertex n-3; all -2.
            expect_params(id, 1, "d-type");
            if (id.params[0] < 3) throw CatalogError("catalog: d-type requires n >= 3");
            const std::size_t n = static_cast<std::size_t>(id.params[0]);
            PlumbingGraph g = path_graph(n - 2, -2);
            g.weights.insert(g.weights.end(), {-2, -2});
            g.edges.emplace_back(n - 3, n - 2);
            g.edges.emplace_back(n - 3, n - 1);
            return g;
        }
        case CatalogName::LensChain: {
            if (id.params.empty())
                throw CatalogError("catalog: lens-chain requires at least one weight");
            PlumbingGraph g;
            g.weights = id.params;
            for (std::size_t i = 0; i + 1 < g.weights.size(); ++i)
                g.edges.emplace_back(i, i + 1);
            return g;
        }
    }
    throw CatalogError("catalog: unknown id");
}

inline CatalogId catalog_id_from_string(const std::string& name,
                                        std::vector<Int> params = {}) {
    if (name == "e6tilde") return {CatalogName::E6Tilde, std::move(params)};
    if (name == "e7tilde") return {CatalogName::E7Tilde, std::move(params)};
    if (name == "e8tilde") return {CatalogName::E8Tilde, std::move(params)};
    if (name == "seif-parabolic") return {CatalogName::SeifParabolic, std::move(params)};
    if (name == "plum") return {CatalogName::Plum, std::move(params)};
    if (name == "villa-a") return {CatalogName::VillaA, std::move(params)};
    if (name == "villa-b") return {CatalogName::VillaB, std::move(params)};
    if (name == "chain") return {CatalogName::Chain, std::move(params)};
    if (name == "d-type") return {CatalogName::Dtype, std::move(params)};
    if (name == "lens-chain") return {CatalogName::LensChain, std::move(params)};
    throw CatalogError("catalog: unknown name '" + name + "'");
}

}  // namespace lowdim
