#include "layerline/group.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace layerline {

FiniteGroup::FiniteGroup(int order, int identity, MulFn mul, LabelFn label)
    : order_(order), identity_(identity), mul_(std::move(mul)), label_(std::move(label)) {
    if (order_ <= 0) throw InvalidGroup("group order must be positive");
    if (identity_ < 0 || identity_ >= order_)
        throw InvalidGroup("identity index out of range");
    inverses_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (mul_(a, b) == identity_ && mul_(b, a) == identity_) {
                inverses_[a] = b;
                break;
            }
        }
        if (inverses_[a] < 0) throw InvalidGroup("element without a two-sided inverse");
    }
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw InvalidGroup("empty element list");
    std::map<Permutation, int> index;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i)
        index.emplace(elements[i], i);
    int identity = -1;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i)
        if (elements[i].is_identity()) identity = i;
    if (identity < 0) throw InvalidGroup("element list misses the identity");
    int order = static_cast<int>(elements.size());
    // Materialize the multiplication table; these groups stay desk-scale.
    auto table = std::make_shared<std::vector<int>>(
        static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            auto it = index.find(elements[a].compose(elements[b]));
            if (it == index.end())
                throw InvalidGroup("element list is not closed under composition");
            (*table)[static_cast<std::size_t>(a) * order + b] = it->second;
        }
    auto labels = std::make_shared<std::vector<std::string>>();
    labels->reserve(elements.size());
    for (const auto& p : elements) labels->push_back(p.cycle_string());
    FiniteGroup g(
        order, identity,
        [table, order](int a, int b) { return (*table)[static_cast<std::size_t>(a) * order + b]; },
        [labels](int a) { return (*labels)[a]; });
    g.perms_ = std::move(elements);
    return g;
}

int FiniteGroup::mul(int a, int b) const {
    if (a < 0 || a >= order_ || b < 0 || b >= order_)
        throw IndexOutOfRange("group element index out of range");
    int c = mul_(a, b);
    if (c < 0 || c >= order_) throw InvalidGroup("multiplication left the element set");
    return c;
}

int FiniteGroup::inv(int a) const {
    if (a < 0 || a >= order_) throw IndexOutOfRange("group element index out of range");
    return inverses_[a];
}

std::string FiniteGroup::label(int a) const {
    if (a < 0 || a >= order_) throw IndexOutOfRange("group element index out of range");
    return label_ ? label_(a) : std::to_string(a);
}

std::uint64_t FiniteGroup::element_order(int a) const {
    std::uint64_t n = 1;
    int x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++n;
        if (n > static_cast<std::uint64_t>(order_))
            throw InvalidGroup("element order exceeds the group order");
    }
    return n;
}

void FiniteGroup::check_axioms(int assoc_limit) const {
    for (int a = 0; a < order_; ++a) {
        if (mul(identity_, a) != a || mul(a, identity_) != a)
            throw InvalidGroup("identity law fails");
        if (mul(a, inverses_[a]) != identity_ || mul(inverses_[a], a) != identity_)
            throw InvalidGroup("inverse law fails");
        for (int b = 0; b < order_; ++b) mul(a, b);  // closure + range check
    }
    if (order_ <= assoc_limit) {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw InvalidGroup("associativity fails");
    }
}

} // namespace layerline
