#include "layerline/layer_graphs.hpp"

#include <bit>
#include <sstream>

namespace layerline {

namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 22;

// Next mask with the same popcount, ascending (Gosper's hack).
std::uint64_t next_same_weight(std::uint64_t v) {
    std::uint64_t u = v | (v - 1);
    return (u + 1) | (((~u & (u + 1)) - 1) >> (std::countr_zero(v) + 1));
}

std::vector<std::uint64_t> masks_of_weight(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t limit = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
    for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < limit;
         m = next_same_weight(m))
        out.push_back(m);
    return out;
}

} // namespace

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: result is a binomial coefficient at each step
    }
    return result;
}

std::string subset_label(std::uint64_t mask) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) {
            if (!first) out << ',';
            out << i + 1;
            first = false;
        }
    out << '}';
    return out.str();
}

std::string chi(const SubsetVertex& v) {
    if (v.n < 0 || v.n > 63) throw ParamsOutOfRange("chi: n out of range");
    if (v.n < 64 && (v.mask >> v.n) != 0)
        throw ParamsOutOfRange("chi: mask has elements beyond n");
    std::string s(static_cast<std::size_t>(v.n), '0');
    for (int i = 0; i < v.n; ++i)
        if ((v.mask >> i) & 1) s[i] = '1';
    return s;
}

void validate(const LayerParams& p) {
    if (p.n < 4 || p.n > 63)
        throw ParamsOutOfRange("LayerParams: n must satisfy 4 <= n <= 63");
    if (p.k < 1 || 2 * p.k >= p.n)
        throw ParamsOutOfRange("LayerParams: k must satisfy 1 <= k < n/2");
}

LayerIndexing layer_indexing(const LayerParams& p) {
    validate(p);
    LayerCounts c = counts(p);
    if (c.vertices > kMaxVertices)
        throw BudgetExceeded("layer graph too large to materialize");
    LayerIndexing ix;
    ix.params = p;
    auto lower = masks_of_weight(p.n, p.k);
    auto upper = masks_of_weight(p.n, p.k + 1);
    ix.layer_size = static_cast<int>(lower.size());
    ix.masks = std::move(lower);
    ix.masks.insert(ix.masks.end(), upper.begin(), upper.end());
    ix.index.reserve(ix.masks.size());
    for (int i = 0; i < static_cast<int>(ix.masks.size()); ++i)
        ix.index.emplace(ix.masks[i], i);
    return ix;
}

Graph build_b(const LayerParams& p) {
    LayerIndexing ix = layer_indexing(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ix.layer_size; ++i) {
        std::uint64_t m = ix.masks[i];
        for (int e = 0; e < p.n; ++e) {
            std::uint64_t bit = std::uint64_t{1} << e;
            if (m & bit) continue;
            edges.emplace_back(i, ix.index.at(m | bit));
        }
    }
    std::vector<std::string> labels;
    labels.reserve(ix.masks.size());
    for (std::uint64_t m : ix.masks) labels.push_back(subset_label(m));
    return Graph(static_cast<int>(ix.masks.size()), edges, std::move(labels));
}

Graph build_hypercube(int n) {
    if (n < 1 || n > 20) throw ParamsOutOfRange("hypercube: n must be in [1, 20]");
    int order = 1 << n;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(order / 2) * n);
    for (int v = 0; v < order; ++v)
        for (int e = 0; e < n; ++e)
            if (!(v >> e & 1)) edges.emplace_back(v, v | (1 << e));
    std::vector<std::string> labels;
    labels.reserve(order);
    for (int v = 0; v < order; ++v)
        labels.push_back(subset_label(static_cast<std::uint64_t>(v)));
    return Graph(order, edges, std::move(labels));
}

LayerCounts counts(const LayerParams& p) {
    validate(p);
    LayerCounts c;
    c.vertices = binomial(p.n, p.k) + binomial(p.n, p.k + 1);
    c.edges = BigInt(p.n - p.k) * binomial(p.n, p.k);
    c.line_vertices = c.edges;
    return c;
}

DivisibilityCheck middle_binomial_mod4(int k) {
    if (k <= 2 || k % 2 != 0)
        throw ParamsOutOfRange("divisibility check requires even k > 2");
    DivisibilityCheck out;
    out.value = binomial(2 * k + 1, k);
    out.remainder_mod_4 = static_cast<int>(out.value % 4);
    out.multiple_of_4 = out.remainder_mod_4 == 0;
    return out;
}

} // namespace layerline
