#include "layerline/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace layerline {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw ParamsOutOfRange("permutation degree must be non-negative");
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw PreconditionViolated("image array is not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
    if (n < 0) throw ParamsOutOfRange("permutation degree must be non-negative");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw PreconditionViolated("cycle notation: expected '('");
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start)
                throw PreconditionViolated("cycle notation: expected a number");
            int value = std::stoi(text.substr(start, pos - start));
            if (value < 1 || value > n)
                throw PreconditionViolated("cycle notation: entry out of range");
            if (used[value - 1])
                throw PreconditionViolated("cycle notation: repeated entry");
            used[value - 1] = 1;
            cycle.push_back(value - 1);
            skip_ws();
        }
        if (pos >= text.size())
            throw PreconditionViolated("cycle notation: missing ')'");
        ++pos;  // consume ')'
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw PreconditionViolated("composing permutations of different degrees");
    std::vector<int> out(images_.size());
    for (int i = 0; i < degree(); ++i) out[i] = images_[other.images_[i]];
    Permutation p;
    p.images_ = std::move(out);  // bijection by construction
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> out(images_.size());
    for (int i = 0; i < degree(); ++i) out[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

std::uint64_t Permutation::order() const {
    std::uint64_t result = 1;
    for (int len : cycle_type()) result = std::lcm<std::uint64_t>(result, len);
    return result;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

int Permutation::fixed_points() const {
    int count = 0;
    for (int i = 0; i < degree(); ++i)
        if (images_[i] == i) ++count;
    return count;
}

std::uint64_t Permutation::apply_to_mask(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (int i = 0; i < degree(); ++i)
        if ((mask >> i) & 1) out |= std::uint64_t{1} << images_[i];
    if (degree() < 64 && (mask >> degree()) != 0)
        throw PreconditionViolated("mask has bits beyond the permutation degree");
    return out;
}

std::string Permutation::cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = 1;
            continue;
        }
        out << '(';
        bool first = true;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            if (!first) out << ' ';
            out << j + 1;
            first = false;
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::uint64_t max_order) {
    if (generators.empty()) return {Permutation(0)};
    int degree = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw PreconditionViolated("generators have mixed degrees");
    std::set<Permutation> closed;
    std::vector<Permutation> frontier{Permutation(degree)};
    closed.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& element : frontier) {
            for (const auto& g : generators) {
                Permutation prod = g.compose(element);
                if (closed.insert(prod).second) {
                    if (closed.size() > max_order)
                        throw BudgetExceeded("group closure exceeds the order budget");
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return {closed.begin(), closed.end()};
}

} // namespace layerline
