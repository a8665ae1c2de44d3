#include "layerline/orbits.hpp"

#include <queue>
#include <unordered_set>

#include "layerline/layer_graphs.hpp"

namespace layerline {

std::uint64_t orbit_size(int start, const std::vector<Permutation>& generators,
                         int domain) {
    if (start < 0 || start >= domain) throw IndexOutOfRange("orbit start out of range");
    for (const auto& g : generators)
        if (g.degree() != domain)
            throw PreconditionViolated("generator degree differs from the domain");
    std::vector<char> seen(domain, 0);
    std::queue<int> queue;
    seen[start] = 1;
    queue.push(start);
    std::uint64_t count = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        ++count;
        for (const auto& g : generators) {
            int y = g(x);
            if (!seen[y]) {
                seen[y] = 1;
                queue.push(y);
            }
        }
    }
    return count;
}

bool is_k_homogeneous(const std::vector<Permutation>& generators, int n, int k,
                      const SearchBudget& budget) {
    if (n < 1 || k < 1 || k > n)
        throw ParamsOutOfRange("homogeneity test requires 1 <= k <= n");
    for (const auto& g : generators)
        if (g.degree() != n)
            throw PreconditionViolated("generator degree differs from n");
    BigInt total = binomial(n, k);
    if (total > budget.max_nodes)
        throw BudgetExceeded("subset domain exceeds the search budget");
    std::uint64_t domain = static_cast<std::uint64_t>(total);
    std::uint64_t base = (std::uint64_t{1} << k) - 1;
    std::unordered_set<std::uint64_t> seen{base};
    std::queue<std::uint64_t> queue;
    queue.push(base);
    while (!queue.empty()) {
        std::uint64_t m = queue.front();
        queue.pop();
        for (const auto& g : generators) {
            std::uint64_t image = g.apply_to_mask(m);
            if (seen.insert(image).second) queue.push(image);
        }
    }
    return seen.size() == domain;
}

bool is_k_transitive(const std::vector<Permutation>& generators, int n, int k,
                     const SearchBudget& budget) {
    if (n < 1 || k < 1 || k > n)
        throw ParamsOutOfRange("transitivity test requires 1 <= k <= n");
    for (const auto& g : generators)
        if (g.degree() != n)
            throw PreconditionViolated("generator degree differs from n");
    std::uint64_t domain = 1;
    for (int i = 0; i < k; ++i) {
        domain *= static_cast<std::uint64_t>(n - i);
        if (domain > budget.max_nodes)
            throw BudgetExceeded("tuple domain exceeds the search budget");
    }
    // encode a k-tuple of distinct points in [0, n) as digits base n
    auto encode = [&](const std::vector<int>& t) {
        std::uint64_t code = 0;
        for (int x : t) code = code * n + static_cast<std::uint64_t>(x);
        return code;
    };
    std::vector<int> base(k);
    for (int i = 0; i < k; ++i) base[i] = i;
    std::unordered_set<std::uint64_t> seen{encode(base)};
    std::queue<std::vector<int>> queue;
    queue.push(base);
    std::vector<int> image(k);
    while (!queue.empty()) {
        std::vector<int> t = queue.front();
        queue.pop();
        for (const auto& g : generators) {
            for (int i = 0; i < k; ++i) image[i] = g(t[i]);
            if (seen.insert(encode(image)).second) queue.push(image);
        }
    }
    return seen.size() == domain;
}

} // namespace layerline
