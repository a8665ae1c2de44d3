#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "layerline/group.hpp"
#include "layerline/perm.hpp"

namespace layerline {

// Description of GF(p^m): characteristic, extension degree, and a monic
// irreducible modulus of degree m with little-endian coefficients
// (modulus[i] multiplies x^i; modulus[m] == 1).
struct FieldSpec {
    long long p;
    int m;
    std::vector<int> modulus;
};

// Elements are little-endian coefficient vectors of length m with entries
// in [0, p).
using GfElement = std::vector<int>;

// The lexicographically smallest monic irreducible of degree m over
// GF(p), coefficient vectors compared low-degree-first.  Primality of p
// is checked by trial division and irreducibility by exhaustive
// root/factor search; requires p^m <= 2^20 and m <= 8.
FieldSpec find_irreducible(long long p, int m);

class Field {
public:
    // Validates the spec: p prime, modulus monic of degree m and
    // irreducible.
    explicit Field(FieldSpec spec);

    // Field with the canonical modulus from find_irreducible.
    static Field make(long long p, int m);

    const FieldSpec& spec() const { return spec_; }
    long long q() const { return q_; }

    GfElement zero() const;
    GfElement one() const;

    GfElement add(const GfElement& a, const GfElement& b) const;
    GfElement sub(const GfElement& a, const GfElement& b) const;
    GfElement neg(const GfElement& a) const;
    GfElement mul(const GfElement& a, const GfElement& b) const;
    // Extended Euclid on polynomials; throws DivisionByZero on zero.
    GfElement inv(const GfElement& a) const;

    bool is_zero(const GfElement& a) const;

    // Canonical element order: coefficient vectors compared
    // low-degree-first; index 0 is zero.  element/index are inverse maps.
    GfElement element(int index) const;
    int index(const GfElement& a) const;
    std::vector<GfElement> elements() const;  // all q, canonical order

    // Polynomial rendering, e.g. "x^2+2x+1"; zero renders "0".
    std::string to_string(const GfElement& a) const;

private:
    FieldSpec spec_;
    long long q_;
    std::vector<GfElement> elements_;  // canonical order
};

// AGL(1, q): all maps x -> a x + b with a != 0, acting on the q field
// elements, as a FiniteGroup of order q(q-1) with the composition
// product.  Element index = a_position * q + index(b) where a_position
// counts nonzero elements in canonical order.
struct Agl1Group {
    Field field;
    FiniteGroup group;

    // The action of element idx on field-element indices.
    Permutation point_action(int idx) const;
};

// Requires q = p^m <= 64 (the group holds q(q-1) elements and its
// construction scans all element pairs).
Agl1Group agl1(const FieldSpec& spec);

} // namespace layerline
