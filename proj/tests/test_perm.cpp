#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "layerline/fixed_vertex.hpp"
#include "layerline/graph.hpp"
#include "layerline/induced.hpp"
#include "layerline/layer_graphs.hpp"
#include "layerline/orbits.hpp"
#include "layerline/perm.hpp"

using namespace layerline;

TEST_CASE("cycle parsing and printing round-trip") {
    Permutation p = Permutation::from_cycles("(1 2)(3 4)", 5);
    CHECK(p(0) == 1);
    CHECK(p(1) == 0);
    CHECK(p(2) == 3);
    CHECK(p(4) == 4);
    CHECK(p.cycle_string() == "(1 2)(3 4)");

    CHECK(Permutation::from_cycles("()", 4).is_identity());
    CHECK(Permutation::from_cycles("", 4).is_identity());
    CHECK(Permutation(4).cycle_string() == "()");
    CHECK(Permutation::from_cycles("(1,2,3)", 3).cycle_string() == "(1 2 3)");

    CHECK_THROWS_AS(Permutation::from_cycles("(1 1)", 3), Error);
    CHECK_THROWS_AS(Permutation::from_cycles("(1 9)", 3), Error);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), Error);
}

TEST_CASE("composition, inverse, order and cycle type") {
    Permutation a = Permutation::from_cycles("(1 2 3)", 5);
    Permutation b = Permutation::from_cycles("(3 4 5)", 5);
    // (a * b)(i) = a(b(i))
    Permutation ab = a.compose(b);
    CHECK(ab(2) == 3);  // b: 3->4, a: 4->4
    CHECK(a.compose(a.inverse()).is_identity());
    CHECK(a.order() == 3);
    CHECK(ab.order() == 5);
    CHECK(Permutation::from_cycles("(1 2)(3 4 5)", 6).order() == 6);
    CHECK(Permutation::from_cycles("(1 2)(3 4 5)", 6).cycle_type() ==
          std::vector<int>{3, 2, 1});
    CHECK(Permutation::from_cycles("(1 2)", 5).fixed_points() == 3);
}

TEST_CASE("mask application permutes subset elements") {
    Permutation p = Permutation::from_cycles("(1 2)", 5);
    CHECK(p.apply_to_mask(0b00001) == 0b00010);  // {1} -> {2}
    CHECK(p.apply_to_mask(0b00101) == 0b00110);  // {1,3} -> {2,3}
    CHECK(p.apply_to_mask(0b00011) == 0b00011);  // {1,2} fixed setwise
}

TEST_CASE("group generation by closure") {
    std::vector<Permutation> gens{Permutation::from_cycles("(1 2)", 5),
                                  Permutation::from_cycles("(1 2 3 4 5)", 5)};
    CHECK(generate_group(gens).size() == 120);
    CHECK(generate_group({Permutation(4)}).size() == 1);
    CHECK_THROWS_AS(generate_group(gens, 50), BudgetExceeded);
}

TEST_CASE("induced vertex action without complement") {
    LayerParams p{5, 1};
    LayerIndexing ix = layer_indexing(p);
    Graph g = build_b(p);

    AutElement ident{Permutation(5), false};
    CHECK(induced_vertex_action(ident, ix).is_identity());

    AutElement swap12{Permutation::from_cycles("(1 2)", 5), false};
    VertexPermutation vp = induced_vertex_action(swap12, ix);
    CHECK(ix.masks[vp(ix.index.at(0b00001))] == 0b00010);  // {1} -> {2}
    CHECK(ix.masks[vp(ix.index.at(0b00101))] == 0b00110);  // {1,3} -> {2,3}
    CHECK(is_automorphism(g, vp));
}

TEST_CASE("complement maps a lower-layer vertex to its complement") {
    LayerParams p{5, 2};
    LayerIndexing ix = layer_indexing(p);
    AutElement comp{Permutation(5), true};
    VertexPermutation vp = induced_vertex_action(comp, ix);
    CHECK(ix.masks[vp(ix.index.at(0b00011))] == 0b11100);  // {1,2} -> {3,4,5}
    CHECK(is_automorphism(build_b(p), vp));

    LayerIndexing asym = layer_indexing(LayerParams{6, 2});
    CHECK_THROWS_AS(induced_vertex_action(comp, asym), Error);
    CHECK_THROWS_AS(induced_vertex_action(AutElement{Permutation(6), true}, asym),
                    CompNotApplicable);
}

TEST_CASE("lifting a vertex automorphism to the line graph") {
    LayerParams p{4, 1};
    LayerIndexing ix = layer_indexing(p);
    Graph g = build_b(p);
    LineGraphResult l = line_graph(g);

    VertexPermutation ident(g.order());
    CHECK(induced_line_automorphism(ident, g, l.edges).is_identity());

    AutElement rot{Permutation::from_cycles("(1 2 3 4)", 4), false};
    VertexPermutation vp = induced_vertex_action(rot, ix);
    VertexPermutation lp = induced_line_automorphism(vp, g, l.edges);
    CHECK(is_automorphism(l.graph, lp));
    CHECK(lp.fixed_points() == 0);  // no edge survives the 4-cycle setwise

    // a non-automorphism of g must be rejected
    std::vector<int> bad(g.order());
    for (int i = 0; i < g.order(); ++i) bad[i] = i;
    std::swap(bad[0], bad[g.order() - 1]);  // swaps across the two layers
    CHECK_THROWS_AS(induced_line_automorphism(VertexPermutation(bad), g, l.edges),
                    NotAutomorphism);
}

TEST_CASE("distinct vertex automorphisms lift to distinct line automorphisms") {
    LayerParams p{5, 1};
    LayerIndexing ix = layer_indexing(p);
    Graph g = build_b(p);
    LineGraphResult l = line_graph(g);

    std::vector<Permutation> sym5 = generate_group(
        {Permutation::from_cycles("(1 2)", 5), Permutation::from_cycles("(1 2 3 4 5)", 5)});
    REQUIRE(sym5.size() == 120);

    std::set<VertexPermutation> vertex_maps;
    std::set<VertexPermutation> line_maps;
    for (const auto& sigma : sym5) {
        VertexPermutation vp = induced_vertex_action({sigma, false}, ix);
        vertex_maps.insert(vp);
        line_maps.insert(induced_line_automorphism(vp, g, l.edges));
    }
    CHECK(vertex_maps.size() == 120);
    CHECK(line_maps.size() == 120);
}

TEST_CASE("line lifting is a homomorphism of compositions") {
    LayerParams p{5, 2};
    LayerIndexing ix = layer_indexing(p);
    Graph g = build_b(p);
    LineGraphResult l = line_graph(g);

    std::vector<AutElement> sample{
        {Permutation::from_cycles("(1 2)", 5), false},
        {Permutation::from_cycles("(1 2 3 4 5)", 5), false},
        {Permutation::from_cycles("(2 4)(3 5)", 5), true},
        {Permutation(5), true},
    };
    for (const auto& a : sample)
        for (const auto& b : sample) {
            VertexPermutation va = induced_vertex_action(a, ix);
            VertexPermutation vb = induced_vertex_action(b, ix);
            VertexPermutation composed_first =
                induced_line_automorphism(va.compose(vb), g, l.edges);
            VertexPermutation lifted_then_composed =
                induced_line_automorphism(va, g, l.edges)
                    .compose(induced_line_automorphism(vb, g, l.edges));
            CHECK(composed_first == lifted_then_composed);
        }
}

TEST_CASE("orbit computations on points, subsets and tuples") {
    std::vector<Permutation> sym5{Permutation::from_cycles("(1 2)", 5),
                                  Permutation::from_cycles("(1 2 3 4 5)", 5)};
    CHECK(orbit_size(0, sym5, 5) == 5);
    CHECK(is_k_homogeneous(sym5, 5, 3));
    CHECK(is_k_transitive(sym5, 5, 3));

    // x -> x+1 and x -> 2x modulo 5, acting on {0,...,4} as 1-based points
    std::vector<int> shift(5), dbl(5);
    for (int x = 0; x < 5; ++x) {
        shift[x] = (x + 1) % 5;
        dbl[x] = (2 * x) % 5;
    }
    std::vector<Permutation> affine{Permutation(shift), Permutation(dbl)};
    CHECK(generate_group(affine).size() == 20);
    CHECK(is_k_transitive(affine, 5, 2));
    CHECK(!is_k_transitive(affine, 5, 3));  // order 20 < 60 forbids 3-transitivity

    std::vector<Permutation> cyclic{Permutation::from_cycles("(1 2 3 4 5)", 5)};
    CHECK(!is_k_homogeneous(cyclic, 5, 2));
}

TEST_CASE("fixed line vertex for an involution, few transpositions") {
    FixedVertexResult r = fixed_vertex_for_involution(
        Permutation::from_cycles("(1 2)", 5), LayerParams{5, 2});
    CHECK(r.u.mask == 0b00011);            // {1,2}
    CHECK(r.w.mask == 0b10011);            // {1,2,5}
    CHECK(r.extra_element == 5);
    CHECK(r.transpositions == 1);
    CHECK(r.fixed_count == 3);
    CHECK(!r.used_case_two);
}

TEST_CASE("fixed line vertex for an involution, many transpositions") {
    FixedVertexResult r = fixed_vertex_for_involution(
        Permutation::from_cycles("(1 2)(3 4)(5 6)", 9), LayerParams{9, 4});
    CHECK(r.u.mask == 0b000001111);        // {1,2,3,4}
    CHECK(r.extra_element == 9);
    CHECK(r.w.mask == (0b000001111ULL | (1ULL << 8)));
    CHECK(r.transpositions == 3);
    CHECK(r.fixed_count == 3);
    CHECK(r.used_case_two);
}

TEST_CASE("fixed-vertex construction rejects bad inputs") {
    LayerParams p{5, 2};
    CHECK_THROWS_AS(fixed_vertex_for_involution(Permutation(5), p),
                    PreconditionViolated);  // identity
    CHECK_THROWS_AS(
        fixed_vertex_for_involution(Permutation::from_cycles("(1 2 3)", 5), p),
        PreconditionViolated);  // not an involution
    CHECK_THROWS_AS(
        fixed_vertex_for_involution(Permutation::from_cycles("(1 2)", 7),
                                    LayerParams{7, 3}),
        PreconditionViolated);  // odd k
    CHECK_THROWS_AS(
        fixed_vertex_for_involution(Permutation::from_cycles("(1 2)", 6),
                                    LayerParams{6, 2}),
        PreconditionViolated);  // n != 2k+1
}

TEST_CASE("seeded random involutions are all fixed by their constructed vertex") {
    std::mt19937 rng(424242);
    for (int k : {2, 4}) {
        int n = 2 * k + 1;
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<int> points(n);
            for (int i = 0; i < n; ++i) points[i] = i;
            std::shuffle(points.begin(), points.end(), rng);
            int pairs = 1 + static_cast<int>(rng() % (n / 2));
            std::vector<int> images(n);
            for (int i = 0; i < n; ++i) images[i] = i;
            for (int i = 0; i < pairs; ++i) {
                images[points[2 * i]] = points[2 * i + 1];
                images[points[2 * i + 1]] = points[2 * i];
            }
            Permutation theta{images};
            FixedVertexResult r =
                fixed_vertex_for_involution(theta, LayerParams{n, k});
            CHECK(theta.apply_to_mask(r.u.mask) == r.u.mask);
            CHECK(theta.apply_to_mask(r.w.mask) == r.w.mask);
            CHECK(std::popcount(r.u.mask) == k);
            CHECK((r.u.mask & r.w.mask) == r.u.mask);
            CHECK(std::popcount(r.w.mask) == k + 1);
        }
    }
}
