#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "layerline/aut_search.hpp"
#include "layerline/gf.hpp"
#include "layerline/graph.hpp"
#include "layerline/group.hpp"

namespace layerline {

// Element indices of a group, strictly ascending; must exclude the
// identity and be closed under inverse to be usable as a connection set.
struct ConnectionSet {
    std::vector<int> members;
};

// Throws InvalidConnectionSet unless members are strictly ascending, in
// range, identity-free, and closed under inverse in g.
void validate_connection_set(const FiniteGroup& g, const ConnectionSet& s);

// Graph on the group's elements with an edge {x, xs} for every element x
// and connection-set member s.  |S|-regular; vertex labels are the group's
// element labels.
Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s);

// Cayley graph data over GF(q): the group is the semidirect product of the
// additive group by the multiplicative group, on pairs (u, a) with a != 0
// and multiplication (u, a)(v, b) = (u + a^{-1} v, ab).  The connection set
// is the full multiplicative copy {(0, a) : a != 1} together with the
// adjoined involution alpha = (1, -1).  |S| = q - 1, so the Cayley graph is
// (q-1)-regular on q(q-1) vertices.
struct SemidirectCayley {
    FiniteGroup group;
    ConnectionSet connection;
    int alpha;  // element index of the adjoined involution
};

// Builds the semidirect-product group and connection set above.  Group
// axioms are checked exhaustively at construction (associativity over all
// triples for order <= 500) and alpha^2 = e is verified.  Requires
// q = p^m in [4, 32].
SemidirectCayley field_semidirect_cayley(const FieldSpec& spec);

// Vertex bijection from graph a onto graph b: mapping[v] is the image of
// a's vertex v.
struct IsoCertificate {
    std::vector<int> mapping;
};

// True iff the certificate is a bijection that maps edges to edges and
// non-edges to non-edges (checked over all vertex pairs).
bool verify_isomorphism(const Graph& a, const Graph& b, const IsoCertificate& cert);

struct RecognitionResult {
    int n;
    IsoCertificate certificate;  // input vertex -> canonical L(B(n,1)) vertex
};

// Structural recognition of L(B(n,1)): checks the input is (n-1)-regular
// on n(n-1) vertices, that edges with a common neighbor partition the
// vertices into n disjoint (n-1)-cliques, and that the remaining edges
// form exactly one bridge between each clique pair.  On success returns
// the canonical relabeling onto build_b-derived L(B(n,1)); the anchor
// clique is the one containing vertex 0 and the other cliques take labels
// 2..n in ascending order of their bridge partner inside the anchor.
std::optional<RecognitionResult> recognize_lb1(const Graph& g);

enum class CayleyStatus { yes, no, undecided };

struct CayleyVerdict {
    CayleyStatus status;
    std::uint64_t aut_order = 0;          // 0 when enumeration did not finish
    std::optional<FiniteGroup> subgroup;  // regular subgroup when status is yes
};

// Decides whether g is a Cayley graph by enumerating Aut(g) and searching
// it for a regular subgroup.  "yes" carries a verified certificate, "no"
// means the exhaustive search completed empty, and "undecided" means a
// search budget was exceeded.
CayleyVerdict is_cayley(const Graph& g, const SearchBudget& budget = {});

bool is_prime_power(long long n);

enum class ClassificationStatus { cayley, non_cayley, unresolved };

struct Classification {
    ClassificationStatus status;
    std::string reason;
};

// Settled Cayley-ness of L(B(n,k)) as a function of the parameters alone.
// Cases the underlying classification leaves open are reported as
// unresolved rather than guessed.
Classification classify_line_cayley(int n, int k);

} // namespace layerline
