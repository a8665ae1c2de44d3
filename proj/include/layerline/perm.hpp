#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "layerline/errors.hpp"

namespace layerline {

// A permutation of {0, ..., n-1} stored as its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);                    // identity
    explicit Permutation(std::vector<int> images);  // validated bijection

    // Parses 1-based disjoint-cycle notation, e.g. "(1 2)(3 4)" on n points.
    // "()" and "" denote the identity.  Entries may be separated by spaces
    // or commas.
    static Permutation from_cycles(const std::string& text, int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    // (this * other)(i) = this(other(i)): `other` acts first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    // Least positive power equal to the identity.
    std::uint64_t order() const;

    // Cycle lengths sorted descending, fixed points included.
    std::vector<int> cycle_type() const;

    // Number of fixed points.
    int fixed_points() const;

    // Image of a subset-of-points bitmask.
    std::uint64_t apply_to_mask(std::uint64_t mask) const;

    // 1-based disjoint cycles, fixed points omitted; identity renders "()".
    std::string cycle_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// A permutation read as acting on graph vertices.
using VertexPermutation = Permutation;

// Closure of `generators` under composition (all of them must share one
// degree).  Throws BudgetExceeded if the group would exceed `max_order`.
std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::uint64_t max_order = 10'000'000);

} // namespace layerline
