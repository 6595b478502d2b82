#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lowdim/json_io.hpp"
#include "lowdim/plumbing.hpp"
#include "oracles.hpp"

using namespace lowdim;

TEST_CASE("intersection matrix by construction") {
    PlumbingGraph g;
    g.weights = {-2, -2};
    g.edges = {{0, 1}};
    REQUIRE(intersection_matrix(g) == IntMatrix{{-2, 1}, {1, -2}});

    // multi-edge counts
    g.edges.push_back({0, 1});
    REQUIRE(intersection_matrix(g) == IntMatrix{{-2, 2}, {2, -2}});

    g.edges.push_back({0, 0});
    REQUIRE_THROWS_AS(intersection_matrix(g), std::invalid_argument);
}

TEST_CASE("the certificate plumbing matrix") {
    const IntMatrix m = intersection_matrix(catalog({CatalogName::Plum, {}}));
    const IntMatrix want{{-2, 1, 0, 0, 0, 0, 0, 0},
                         {1, -2, 1, 0, 0, 0, 0, 0},
                         {0, 1, -2, 1, 0, 1, 0, 0},
                         {0, 0, 1, -2, 1, 0, 0, 0},
                         {0, 0, 0, 1, -2, 0, 0, 0},
                         {0, 0, 1, 0, 0, -2, 1, 0},
                         {0, 0, 0, 0, 0, 1, -2, 1},
                         {0, 0, 0, 0, 0, 0, 1, -2}};
    REQUIRE(m == want);
    REQUIRE(det_exact(m) == -3);
}

TEST_CASE("torus-bundle plumbings have degenerate forms with H_1 = Z + Z/(9-i)") {
    const std::pair<CatalogName, Int> cases[] = {
        {CatalogName::E6Tilde, 3}, {CatalogName::E7Tilde, 2}, {CatalogName::E8Tilde, 1}};
    for (const auto& [name, torsion_order] : cases) {
        const PlumbingGraph g = catalog({name, {}});
        const IntMatrix m = intersection_matrix(g);
        REQUIRE(det_exact(m) == 0);
        const AbelianGroup h1 = boundary_homology(g);
        REQUIRE(h1.free_rank == 1);
        if (torsion_order > 1) {
            REQUIRE(h1.torsion == std::vector<Int>{torsion_order});
        } else {
            REQUIRE(h1.torsion.empty());
        }
        REQUIRE(g.arrow.has_value());
        // Reweighting the arrowed vertex to -1 yields the lens-space form.
        const PlumbingGraph lens = reweight_vertex(g, *g.arrow, -1);
        REQUIRE(abs_int(det_exact(intersection_matrix(lens))) == torsion_order);
        // Deleting it yields a surgery on the trefoil with cyclic H_1.
        const AbelianGroup del = boundary_homology(delete_vertex(g, *g.arrow));
        REQUIRE(del.free_rank == 0);
        if (torsion_order > 1)
            REQUIRE(del.torsion == std::vector<Int>{torsion_order});
        else
            REQUIRE(del.torsion.empty());
    }
}

TEST_CASE("boundary homology of named graphs") {
    REQUIRE(boundary_homology(catalog({CatalogName::E6Tilde, {}})) ==
            AbelianGroup{1, {3}});
    REQUIRE(boundary_homology(catalog({CatalogName::Chain, {1, -1}})).is_trivial());
    const PlumbingGraph e7 = catalog({CatalogName::E7Tilde, {}});
    const AbelianGroup l21 = boundary_homology(reweight_vertex(e7, *e7.arrow, -1));
    REQUIRE(l21 == AbelianGroup{0, {2}});
}

TEST_CASE("betti signature") {
    REQUIRE(betti_signature(catalog({CatalogName::Plum, {}})).n_plus == 1);
    REQUIRE(betti_signature(catalog({CatalogName::Plum, {}})) == Inertia{1, 0, 7});
    REQUIRE(betti_signature(catalog({CatalogName::Chain, {5, -2}})) == Inertia{0, 0, 5});
    REQUIRE(betti_signature(catalog({CatalogName::Chain, {1, 1}})) == Inertia{1, 0, 0});
}

TEST_CASE("bad vertex count") {
    REQUIRE(bad_vertex_count(catalog({CatalogName::Chain, {3, -2}})) == 0);
    PlumbingGraph single;
    single.weights = {0};
    REQUIRE(bad_vertex_count(single) == 0);
    single.weights = {1};
    REQUIRE(bad_vertex_count(single) == 1);
    // The 8-vertex certificate graph has one vertex of degree 3 and weight
    // -2, which meets the weight > -degree criterion.
    REQUIRE(bad_vertex_count(catalog({CatalogName::Plum, {}})) == 1);
    REQUIRE(bad_vertex_count(catalog({CatalogName::SeifParabolic, {}})) == 1);

    // Direct enumeration oracle.
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        PlumbingGraph g;
        const std::size_t n = 1 + rng() % 6;
        for (std::size_t v = 0; v < n; ++v)
            g.weights.push_back(oracles::rand_int(rng, -4, 2));
        for (std::size_t v = 0; v + 1 < n; ++v)
            if (rng() % 2) g.edges.emplace_back(v, v + 1);
        std::size_t want = 0;
        for (std::size_t v = 0; v < n; ++v) {
            long long deg = 0;
            for (const auto& [x, y] : g.edges) deg += (x == v) + (y == v);
            if (g.weights[v] > -Int(deg)) ++want;
        }
        REQUIRE(bad_vertex_count(g) == want);
    }
}

TEST_CASE("catalog graphs have the documented shapes") {
    const PlumbingGraph e6 = catalog({CatalogName::E6Tilde, {}});
    REQUIRE(e6.vertex_count() == 7);
    REQUIRE(e6.edges.size() == 6);
    REQUIRE(e6.arrow == 4);

    const PlumbingGraph e7 = catalog({CatalogName::E7Tilde, {}});
    REQUIRE(e7.vertex_count() == 8);
    REQUIRE(e7.arrow == 6);

    const PlumbingGraph e8 = catalog({CatalogName::E8Tilde, {}});
    REQUIRE(e8.vertex_count() == 9);
    REQUIRE(e8.arrow == 7);

    const PlumbingGraph sp = catalog({CatalogName::SeifParabolic, {}});
    REQUIRE(sp.vertex_count() == 5);
    REQUIRE(sp.degree(1) == 4);

    const PlumbingGraph plum = catalog({CatalogName::Plum, {}});
    REQUIRE(plum.vertex_count() == 8);
    for (const Int& w : plum.weights) REQUIRE(w == -2);
    REQUIRE(plum.degree(2) == 3);

    const PlumbingGraph va = catalog({CatalogName::VillaA, {4}});
    REQUIRE(va.weights == std::vector<Int>{-2, -2, -1, 4, -1, -2, -2});

    const PlumbingGraph vb = catalog({CatalogName::VillaB, {3}});
    REQUIRE(vb.vertex_count() == 8);
    REQUIRE(vb.degree(2) == 3);

    const PlumbingGraph d5 = catalog({CatalogName::Dtype, {5}});
    REQUIRE(d5.vertex_count() == 5);
    REQUIRE(boundary_homology(d5).free_rank == 0);

    REQUIRE_THROWS_AS(catalog({CatalogName::VillaB, {0}}), CatalogError);
    REQUIRE_THROWS_AS(catalog({CatalogName::Chain, {0, -2}}), CatalogError);
    REQUIRE_THROWS_AS(catalog({CatalogName::VillaA, {}}), CatalogError);
    REQUIRE_THROWS_AS(catalog_id_from_string("nonsense"), CatalogError);
}

TEST_CASE("chains bound lens spaces: cyclic H_1 of order k+1") {
    for (long long k = 1; k <= 10; ++k) {
        const AbelianGroup h1 =
            boundary_homology(catalog({CatalogName::Chain, {Int(k), -2}}));
        REQUIRE(h1.free_rank == 0);
        REQUIRE(h1.torsion == std::vector<Int>{k + 1});
        // Oracle: the determinantal divisors give the same diagonal.
        const auto diag = oracles::snf_diagonal_by_minor_gcd(
            intersection_matrix(catalog({CatalogName::Chain, {Int(k), -2}})));
        REQUIRE(diag.back() == k + 1);
    }
}

TEST_CASE("klein-bottle bundle plumbings: parity of n decides H_1") {
    const AbelianGroup z4 = AbelianGroup{1, {4}};
    const AbelianGroup z22 = AbelianGroup{1, {2, 2}};
    for (long long n = 0; n <= 6; ++n) {
        const AbelianGroup h1 =
            boundary_homology(catalog({CatalogName::VillaA, {Int(n)}}));
        REQUIRE(h1 == (n % 2 ? z4 : z22));
    }
    REQUIRE(boundary_homology(catalog({CatalogName::VillaA, {0}})) ==
            boundary_homology(catalog({CatalogName::SeifParabolic, {}})));
    // The equivalent D-type chains carry the same homology for n > 0.
    for (long long n = 1; n <= 3; ++n)
        REQUIRE(boundary_homology(catalog({CatalogName::VillaB, {Int(n)}})) ==
                boundary_homology(catalog({CatalogName::VillaA, {Int(n)}})));
}

TEST_CASE("intersection matrices are symmetric with nonnegative off-diagonal") {
    for (const auto name : {CatalogName::E6Tilde, CatalogName::E7Tilde,
                            CatalogName::E8Tilde, CatalogName::SeifParabolic,
                            CatalogName::Plum}) {
        const IntMatrix m = intersection_matrix(catalog({name, {}}));
        REQUIRE(m.is_symmetric());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (i != j) REQUIRE(m.at(i, j) >= 0);
    }
}

TEST_CASE("vertex deletion reindexes edges and the arrow") {
    PlumbingGraph g;
    g.weights = {-1, -2, -3, -4};
    g.edges = {{0, 1}, {1, 2}, {2, 3}};
    g.arrow = 3;
    const PlumbingGraph d = delete_vertex(g, 1);
    REQUIRE(d.weights == std::vector<Int>{-1, -3, -4});
    REQUIRE(d.edges == decltype(d.edges){{1, 2}});
    REQUIRE(d.arrow == 2);
    REQUIRE_FALSE(delete_vertex(g, 3).arrow.has_value());
}

TEST_CASE("graph and matrix JSON round trips") {
    const PlumbingGraph g = catalog({CatalogName::VillaA, {2}});
    const PlumbingGraph back = graph_from_json(graph_to_json(g));
    REQUIRE(back.weights == g.weights);
    REQUIRE(back.edges == g.edges);
    REQUIRE(back.arrow == g.arrow);

    std::mt19937_64 rng(32);
    const IntMatrix m = oracles::rand_matrix(rng, 3, 4, 1000);
    REQUIRE(matrix_from_json(matrix_to_json(m)) == m);

    // inputs may use plain numbers
    const Json j = Json::parse(R"({"vertices":[{"weight":-2},{"weight":-2}],"edges":[[0,1]]})");
    REQUIRE(graph_from_json(j).weights == std::vector<Int>{-2, -2});
    REQUIRE_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), std::runtime_error);
}
