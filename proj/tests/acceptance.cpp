// Acceptance checks.  Each criterion is timed against a wall-clock limit
// and prints exactly one [PASS]/[FAIL] line; details of a failure follow on
// indented lines.  The process exit code is the number of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "layerline/aut_search.hpp"
#include "layerline/cayley.hpp"
#include "layerline/errors.hpp"
#include "layerline/fixed_vertex.hpp"
#include "layerline/gf.hpp"
#include "layerline/graph.hpp"
#include "layerline/group.hpp"
#include "layerline/hamilton.hpp"
#include "layerline/induced.hpp"
#include "layerline/layer_graphs.hpp"
#include "layerline/orbits.hpp"
#include "layerline/perm.hpp"
#include "layerline/regular_subgroup.hpp"
#include "layerline/spectral.hpp"

using namespace layerline;

namespace {

int failures = 0;
std::vector<std::string> pending_details;

void detail(std::string text) { pending_details.push_back(std::move(text)); }

void run_criterion(int index, const char* name, double limit_seconds,
                   const std::function<bool()>& body) {
    pending_details.clear();
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail(std::string("unexpected exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= limit_seconds) {
        ok = false;
        detail("time limit exceeded");
    }
    std::printf("[%s] %2d %s (%.2fs < %.0fs)\n", ok ? "PASS" : "FAIL", index, name,
                elapsed, limit_seconds);
    for (const std::string& line : pending_details)
        std::printf("        %s\n", line.c_str());
    if (!ok) ++failures;
}

std::vector<LayerParams> parameter_grid(int n_max) {
    std::vector<LayerParams> grid;
    for (int n = 4; n <= n_max; ++n)
        for (int k = 1; 2 * k < n; ++k) grid.push_back({n, k});
    return grid;
}

bool check(bool condition, const std::string& message) {
    if (!condition) detail(message);
    return condition;
}

std::string tag(const LayerParams& p) {
    return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
}

// q = p^m for prime p; inputs here are known prime powers.
std::pair<long long, int> split_prime_power(long long q) {
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            int m = 0;
            for (long long rest = q; rest > 1; rest /= d) ++m;
            return {d, m};
        }
    return {q, 1};
}

// ---------------------------------------------------------------------------

bool criterion_structure() {
    bool ok = true;
    for (const LayerParams& p : parameter_grid(9)) {
        Graph g = build_b(p);
        const BigInt lower = binomial(p.n, p.k);
        const BigInt upper = binomial(p.n, p.k + 1);
        ok &= check(BigInt(g.order()) == lower + upper, tag(p) + ": wrong order");
        ok &= check(BigInt(g.size()) == (p.n - p.k) * lower, tag(p) + ": wrong size");
        ok &= check(is_connected(g), tag(p) + ": not connected");

        Bipartition parts = bipartition(g);  // throws on an odd cycle
        ok &= check(BigInt(static_cast<int>(parts.part_a.size())) == lower,
                    tag(p) + ": lower layer size is off");
        ok &= check(BigInt(static_cast<int>(parts.part_b.size())) == upper,
                    tag(p) + ": upper layer size is off");

        std::map<int, BigInt> degree_counts;
        for (int v = 0; v < g.order(); ++v) ++degree_counts[g.degree(v)];
        std::map<int, BigInt> expected;
        expected[p.n - p.k] += lower;   // every k-set extends n-k ways
        expected[p.k + 1] += upper;     // every (k+1)-set contains k+1 subsets
        ok &= check(degree_counts == expected, tag(p) + ": wrong degree multiset");
    }
    return ok;
}

bool criterion_diameter() {
    bool ok = true;
    for (const LayerParams& p : parameter_grid(9)) {
        const int expected = p.n == 2 * p.k + 1 ? 2 * p.k + 1 : 2 * p.k + 2;
        const int got = diameter(build_b(p));
        ok &= check(got == expected, tag(p) + ": diameter " + std::to_string(got) +
                                         ", expected " + std::to_string(expected));
    }
    return ok;
}

bool criterion_aut_orders() {
    auto predicted = [](const LayerParams& p) {
        BigInt f = 1;
        for (int i = 2; i <= p.n; ++i) f *= i;
        return p.n == 2 * p.k + 1 ? 2 * f : f;
    };
    const std::vector<LayerParams> instances{{4, 1}, {5, 1}, {5, 2}, {6, 1}, {6, 2},
                                             {7, 1}, {7, 2}, {7, 3}, {8, 1}};
    bool ok = true;
    for (const LayerParams& p : instances) {
        AutGroup base = automorphism_group(build_b(p));
        ok &= check(BigInt(base.order) == predicted(p),
                    tag(p) + ": base automorphism order " + std::to_string(base.order));
    }
    std::vector<LayerParams> line_instances = instances;
    line_instances.push_back({9, 1});
    for (const LayerParams& p : line_instances) {
        AutGroup line = automorphism_group(line_graph(build_b(p)).graph);
        ok &= check(BigInt(line.order) == predicted(p),
                    tag(p) + ": line automorphism order " + std::to_string(line.order));
    }
    return ok;
}

bool criterion_transitivity() {
    bool ok = true;
    for (const LayerParams& p : parameter_grid(9)) {
        const Graph base = build_b(p);
        const LayerIndexing ix = layer_indexing(p);
        const LineGraphResult lg = line_graph(base);

        // lifts of the adjacent transpositions, which generate Sym(n)
        std::vector<Permutation> base_action, line_action;
        for (int i = 1; i < p.n; ++i) {
            std::string cycle = "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")";
            AutElement a{Permutation::from_cycles(cycle, p.n), false};
            VertexPermutation vp = induced_vertex_action(a, ix);
            line_action.push_back(induced_line_automorphism(vp, base, lg.edges));
            base_action.push_back(std::move(vp));
        }

        // one orbit on line vertices = one orbit on the base graph's edges
        ok &= check(orbit_size(0, line_action, lg.graph.order()) ==
                        static_cast<std::uint64_t>(lg.graph.order()),
                    tag(p) + ": line graph is not vertex-transitive under the lifts");

        // the two base layers are single orbits as well
        ok &= check(orbit_size(0, base_action, base.order()) ==
                        static_cast<std::uint64_t>(ix.layer_size),
                    tag(p) + ": lower layer is not a single orbit");
        ok &= check(orbit_size(ix.layer_size, base_action, base.order()) ==
                        static_cast<std::uint64_t>(base.order() - ix.layer_size),
                    tag(p) + ": upper layer is not a single orbit");
    }
    return ok;
}

bool verify_regular(const Graph& g, const FiniteGroup& sub, const std::string& who) {
    bool ok = check(sub.order() == g.order(), who + ": subgroup order is not the vertex count");
    const std::vector<Permutation>& perms = sub.permutations();
    for (const Permutation& perm : perms) {
        if (!is_automorphism(g, perm)) return check(false, who + ": non-automorphism element");
        if (!perm.is_identity() && perm.fixed_points() != 0)
            return check(false, who + ": non-identity element fixes a vertex");
    }
    ok &= check(orbit_size(0, perms, g.order()) == static_cast<std::uint64_t>(g.order()),
                who + ": subgroup is not transitive");
    return ok;
}

bool criterion_cayley_positive() {
    bool ok = true;
    for (int n : {4, 5, 7, 8, 9}) {
        Graph l = line_graph(build_b(LayerParams{n, 1})).graph;
        CayleyVerdict verdict = is_cayley(l);
        ok &= check(verdict.status == CayleyStatus::yes,
                    "n=" + std::to_string(n) + ": expected a Cayley verdict");
        if (verdict.status == CayleyStatus::yes)
            ok &= verify_regular(l, *verdict.subgroup, "n=" + std::to_string(n));
    }

    // the field construction hits the same graphs
    for (long long q : {4, 5, 7, 8, 9}) {
        auto [prime, m] = split_prime_power(q);
        SemidirectCayley sc = field_semidirect_cayley(find_irreducible(prime, m));
        Graph cg = cayley_graph(sc.group, sc.connection);
        auto rec = recognize_lb1(cg);
        if (!check(rec.has_value() && rec->n == q,
                   "q=" + std::to_string(q) + ": construction not recognized")) {
            ok = false;
            continue;
        }
        Graph canonical = line_graph(build_b(LayerParams{static_cast<int>(q), 1})).graph;
        ok &= check(verify_isomorphism(cg, canonical, rec->certificate),
                    "q=" + std::to_string(q) + ": certificate failed verification");
    }

    // an explicitly permutation-defined group yields the smallest instance
    std::vector<Permutation> a4 = generate_group(
        {Permutation::from_cycles("(1 2 3)", 4), Permutation::from_cycles("(1 2)(3 4)", 4)});
    FiniteGroup group = FiniteGroup::from_permutations(a4);
    std::vector<int> members;
    for (int e = 0; e < group.order(); ++e) {
        const std::string label = group.label(e);
        if (label == "(1 2 3)" || label == "(1 3 2)" || label == "(1 2)(3 4)")
            members.push_back(e);
    }
    std::sort(members.begin(), members.end());
    ok &= check(members.size() == 3, "alternating-group connection set not found");
    if (members.size() == 3) {
        auto rec = recognize_lb1(cayley_graph(group, ConnectionSet{members}));
        ok &= check(rec.has_value() && rec->n == 4,
                    "alternating-group instance not recognized");
    }
    return ok;
}

bool criterion_cayley_negative() {
    Graph l6 = line_graph(build_b(LayerParams{6, 1})).graph;
    CayleyVerdict verdict = is_cayley(l6);
    bool ok = check(verdict.status == CayleyStatus::no,
                    "expected an exhaustive non-Cayley verdict for n=6");
    ok &= check(verdict.aut_order == 720, "expected 720 automorphisms for n=6");

    ok &= check(counts(LayerParams{9, 3}).line_vertices == 504,
                "wrong closed-form line vertex count at (9,3)");
    ok &= check(counts(LayerParams{8, 2}).line_vertices == 168,
                "wrong closed-form line vertex count at (8,2)");
    ok &= check(counts(LayerParams{13, 6}).line_vertices == 12012,
                "wrong closed-form line vertex count at (13,6)");
    return ok;
}

bool criterion_fixed_vertices() {
    constexpr unsigned kSeed = 424242;
    detail("seed " + std::to_string(kSeed) +
           "; constructive fixed-vertex checks substitute for exhaustive search "
           "on the larger symmetric instances (12012 line vertices at k = 6)");
    std::mt19937 rng(kSeed);
    bool ok = true;
    for (int k : {2, 4, 6}) {
        const int n = 2 * k + 1;
        const LayerParams p{n, k};
        for (int trial = 0; trial < 200; ++trial) {
            // random involution: shuffle the points, pair up a random prefix
            std::vector<int> points(static_cast<std::size_t>(n));
            std::iota(points.begin(), points.end(), 0);
            std::shuffle(points.begin(), points.end(), rng);
            std::uniform_int_distribution<int> pairs(1, n / 2);
            const int a = pairs(rng);
            std::vector<int> images(static_cast<std::size_t>(n));
            std::iota(images.begin(), images.end(), 0);
            for (int t = 0; t < a; ++t)
                std::swap(images[points[2 * t]], images[points[2 * t + 1]]);
            Permutation theta{images};

            FixedVertexResult res = fixed_vertex_for_involution(theta, p);
            const bool fixes_u = theta.apply_to_mask(res.u.mask) == res.u.mask;
            const bool fixes_w = theta.apply_to_mask(res.w.mask) == res.w.mask;
            const bool nested = (res.u.mask & res.w.mask) == res.u.mask &&
                                std::popcount(res.w.mask ^ res.u.mask) == 1;
            const bool sizes = std::popcount(res.u.mask) == k &&
                               std::popcount(res.w.mask) == k + 1;
            const std::uint64_t extra = std::uint64_t{1} << (res.extra_element - 1);
            const bool extra_fixed = theta.apply_to_mask(extra) == extra &&
                                     (res.u.mask & extra) == 0 &&
                                     (res.w.mask & extra) == extra;
            if (!(fixes_u && fixes_w && nested && sizes && extra_fixed)) {
                ok = check(false, "k=" + std::to_string(k) + " trial " +
                                      std::to_string(trial) + ": vertex not fixed (theta " +
                                      theta.cycle_string() + ")");
                break;
            }
        }
    }
    return ok;
}

bool criterion_spectrum() {
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        Graph base = build_b(LayerParams{n, 1});
        Graph l = line_graph(base).graph;
        IntMatrix a = IntMatrix::adjacency(l);
        const std::vector<long long> roots{-2, -1, 0, n - 2, n - 1};
        const std::string who = "n=" + std::to_string(n);
        ok &= check(annihilation_check(a, roots), who + ": annihilation fails");
        auto mults = eigenvalue_multiplicities(a, roots);
        int total = 0;
        for (const auto& [root, m] : mults) {
            total += m;
            ok &= check(m > 0, who + ": root " + std::to_string(root) + " missing");
        }
        ok &= check(total == l.order(), who + ": multiplicities do not fill the dimension");
        ok &= check(mults.at(-2) == static_cast<int>(base.size()) - base.order() + 1,
                    who + ": wrong multiplicity at -2");
        ok &= check(mults.at(n - 1) == 1, who + ": top eigenvalue is not simple");
    }
    return ok;
}

bool criterion_hamilton() {
    bool ok = true;
    const std::vector<LayerParams> instances{{5, 1}, {7, 1}, {7, 3}, {9, 1}, {9, 3}};
    for (const LayerParams& p : instances) {
        Graph base = build_b(p);
        Graph l = line_graph(base).graph;
        std::vector<int> cycle = hamiltonian_cycle_of_line_graph(base);
        const BigInt expected = (p.n - p.k) * binomial(p.n, p.k);
        ok &= check(BigInt(static_cast<int>(cycle.size())) == expected,
                    tag(p) + ": wrong cycle length");
        ok &= check(validate_cycle(l, cycle), tag(p) + ": cycle failed validation");
    }
    return ok;
}

bool criterion_divisibility() {
    bool ok = true;
    for (int k = 4; k <= 40; k += 2) {
        const bool power_of_two = (k & (k - 1)) == 0;
        DivisibilityCheck c = middle_binomial_mod4(k);
        ok &= check(c.multiple_of_4 == !power_of_two,
                    "k=" + std::to_string(k) + ": residue " +
                        std::to_string(c.remainder_mod_4) + " breaks the pattern");
        ok &= check((c.value % 4 == 0) == c.multiple_of_4,
                    "k=" + std::to_string(k) + ": inconsistent residue report");
    }
    return ok;
}

bool criterion_fields() {
    const std::vector<long long> prime_powers{2,  3,  4,  5,  7,  8,  9,  11, 13,
                                              16, 17, 19, 23, 25, 27, 29, 31, 32,
                                              37, 41, 43, 47, 49, 53, 59, 61, 64};
    bool ok = true;
    for (long long q : prime_powers) {
        auto [p, m] = split_prime_power(q);
        Field f = Field::make(p, m);
        const std::string who = "q=" + std::to_string(q);
        std::vector<GfElement> elems = f.elements();
        if (!check(static_cast<long long>(elems.size()) == q, who + ": wrong element count")) {
            ok = false;
            continue;
        }
        bool laws = true;
        for (const GfElement& a : elems) {
            laws &= f.add(a, f.zero()) == a;
            laws &= f.mul(a, f.one()) == a;
            laws &= f.is_zero(f.add(a, f.neg(a)));
            if (!f.is_zero(a)) laws &= f.mul(a, f.inv(a)) == f.one();
        }
        for (const GfElement& a : elems)
            for (const GfElement& b : elems) {
                laws &= f.add(a, b) == f.add(b, a);
                laws &= f.mul(a, b) == f.mul(b, a);
            }
        for (const GfElement& a : elems)
            for (const GfElement& b : elems)
                for (const GfElement& c : elems) {
                    laws &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    laws &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
        ok &= check(laws, who + ": a field law fails");
    }

    Agl1Group affine8 = agl1(find_irreducible(2, 3));
    ok &= check(affine8.group.order() == 56, "affine group over GF(8) has the wrong order");
    affine8.group.check_axioms();

    for (long long q : {4, 5, 7, 8, 9}) {
        auto [p, m] = split_prime_power(q);
        Agl1Group affine = agl1(find_irreducible(p, m));
        const std::string who = "q=" + std::to_string(q);
        // sharp 2-transitivity: transitive on ordered pairs with |G| equal
        // to the number of pairs, so pair stabilizers are trivial
        ok &= check(affine.group.order() == q * (q - 1), who + ": wrong affine order");
        std::vector<Permutation> actions;
        for (int e = 0; e < affine.group.order(); ++e)
            actions.push_back(affine.point_action(e));
        std::set<Permutation> distinct(actions.begin(), actions.end());
        ok &= check(distinct.size() == actions.size(), who + ": the action is not faithful");
        ok &= check(is_k_transitive(actions, static_cast<int>(q), 2),
                    who + ": not 2-transitive");
    }
    return ok;
}

} // namespace

int main() {
    std::printf("acceptance checks: consecutive-layer graphs and their line graphs\n");
    run_criterion(1, "layer graph structure", 1.0, criterion_structure);
    run_criterion(2, "diameter law", 5.0, criterion_diameter);
    run_criterion(3, "automorphism group orders", 120.0, criterion_aut_orders);
    run_criterion(4, "edge- and line-vertex transitivity", 10.0, criterion_transitivity);
    run_criterion(5, "prime-power line graphs are Cayley", 60.0, criterion_cayley_positive);
    run_criterion(6, "non-Cayley verdict and closed-form counts", 120.0,
                  criterion_cayley_negative);
    run_criterion(7, "involution-fixed line vertices", 5.0, criterion_fixed_vertices);
    run_criterion(8, "integral spectra of line graphs", 30.0, criterion_spectrum);
    run_criterion(9, "Euler-derived Hamiltonian cycles", 10.0, criterion_hamilton);
    run_criterion(10, "middle binomial divisibility", 1.0, criterion_divisibility);
    run_criterion(11, "finite fields and affine groups", 10.0, criterion_fields);
    if (failures == 0)
        std::printf("all 11 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures;
}
