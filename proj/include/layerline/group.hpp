#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "layerline/perm.hpp"

namespace layerline {

// A finite group on element indices {0, ..., order-1} with a pluggable
// multiplication.  check_axioms verifies closure, identity and inverse
// laws on every element and associativity on every triple up to the
// stated bound.
class FiniteGroup {
public:
    using MulFn = std::function<int(int, int)>;
    using LabelFn = std::function<std::string(int)>;

    FiniteGroup(int order, int identity, MulFn mul, LabelFn label);

    // Group of explicit permutations closed under composition; labels are
    // cycle strings.  Throws InvalidGroup if the list is not closed or
    // misses the identity.
    static FiniteGroup from_permutations(std::vector<Permutation> elements);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const;
    int inv(int a) const;
    std::string label(int a) const;

    std::uint64_t element_order(int a) const;

    // The permutation list backing a from_permutations group (empty
    // otherwise).
    const std::vector<Permutation>& permutations() const { return perms_; }

    // Throws InvalidGroup on any axiom violation.  Associativity is checked
    // on all order^3 triples when order <= assoc_limit, otherwise skipped.
    void check_axioms(int assoc_limit = 500) const;

private:
    int order_;
    int identity_;
    MulFn mul_;
    LabelFn label_;
    std::vector<int> inverses_;
    std::vector<Permutation> perms_;
};

} // namespace layerline
