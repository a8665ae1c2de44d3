#include "layerline/gf.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "layerline/errors.hpp"

namespace layerline {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long pow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Polynomials over GF(p) as little-endian coefficient vectors, trailing
// zeros trimmed.
using Poly = std::vector<long long>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

// Remainder of a modulo monic-leading b.
Poly poly_mod(Poly a, const Poly& b, long long p) {
    trim(a);
    long long lead_inv = 1;
    {
        // inverse of b's leading coefficient mod p (Fermat)
        long long lead = b.back() % p;
        long long e = p - 2;
        long long acc = 1, base = lead;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = acc;
    }
    while (deg(a) >= deg(b)) {
        long long coef = a.back() * lead_inv % p;
        int shift = deg(a) - deg(b);
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] = ((a[i + shift] - coef * b[i]) % p + p) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Extended Euclid: returns g = gcd(a, b) and u with u*a = g (mod b).
std::pair<Poly, Poly> poly_ext_gcd(Poly a, Poly b, long long p) {
    Poly r0 = std::move(a), r1 = std::move(b);
    Poly u0 = {1}, u1 = {};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // r0 = q * r1 + r2, computed by repeated leading-term elimination
        Poly q;
        Poly r2 = r0;
        long long lead = r1.back() % p;
        long long e = p - 2, acc = 1, base = lead;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        long long lead_inv = acc;
        while (deg(r2) >= deg(r1)) {
            long long coef = r2.back() * lead_inv % p;
            int shift = deg(r2) - deg(r1);
            if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
            q[shift] = (q[shift] + coef) % p;
            for (std::size_t i = 0; i < r1.size(); ++i)
                r2[i + shift] = ((r2[i + shift] - coef * r1[i]) % p + p) % p;
            trim(r2);
            if (r2.empty()) break;
        }
        // u2 = u0 - q * u1
        Poly qu1 = poly_mul(q, u1, p);
        Poly u2 = u0;
        if (u2.size() < qu1.size()) u2.resize(qu1.size(), 0);
        for (std::size_t i = 0; i < qu1.size(); ++i)
            u2[i] = ((u2[i] - qu1[i]) % p + p) % p;
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

Poly to_poly(const GfElement& a) {
    Poly out(a.begin(), a.end());
    trim(out);
    return out;
}

GfElement from_poly(const Poly& a, int m) {
    GfElement out(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<int>(a[i]);
    return out;
}

bool poly_irreducible(const Poly& f, long long p) {
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // no roots
    for (long long x = 0; x < p; ++x) {
        long long value = 0, power = 1;
        for (long long c : f) {
            value = (value + c * power) % p;
            power = power * x % p;
        }
        if (value == 0) return false;
    }
    if (d <= 3) return true;  // no roots means no linear factors; enough for d <= 3
    // trial division by all monic polynomials of degree 2..d/2
    for (int e = 2; e <= d / 2; ++e) {
        std::vector<long long> coeffs(static_cast<std::size_t>(e), 0);
        for (;;) {
            Poly divisor(coeffs.begin(), coeffs.end());
            divisor.push_back(1);  // monic
            if (poly_mod(Poly(f), divisor, p).empty()) return false;
            int i = 0;
            while (i < e && ++coeffs[i] == p) coeffs[i++] = 0;
            if (i == e) break;
        }
    }
    return true;
}

} // namespace

FieldSpec find_irreducible(long long p, int m) {
    if (!is_prime(p)) throw ParamsOutOfRange("field characteristic must be prime");
    if (m < 1 || m > 8) throw ParamsOutOfRange("extension degree must be in [1, 8]");
    double size = 1;
    for (int i = 0; i < m; ++i) size *= static_cast<double>(p);
    if (size > static_cast<double>(1 << 20))
        throw ParamsOutOfRange("field size exceeds 2^20");
    // Enumerate monic degree-m polynomials with the low-degree coefficient
    // varying fastest, i.e. ascending in the radix code sum c_i * p^i; the
    // first irreducible found is the canonical modulus.
    std::vector<long long> coeffs(static_cast<std::size_t>(m), 0);
    for (;;) {
        Poly f(coeffs.begin(), coeffs.end());
        f.push_back(1);
        if (poly_irreducible(f, p)) {
            FieldSpec spec;
            spec.p = p;
            spec.m = m;
            spec.modulus.assign(m + 1, 0);
            for (int i = 0; i < m; ++i) spec.modulus[i] = static_cast<int>(coeffs[i]);
            spec.modulus[m] = 1;
            return spec;
        }
        int i = 0;
        while (i < m && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == m) throw Error("internal: no irreducible polynomial found");
    }
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (!is_prime(spec_.p)) throw ParamsOutOfRange("field characteristic must be prime");
    if (spec_.m < 1 || spec_.m > 8)
        throw ParamsOutOfRange("extension degree must be in [1, 8]");
    if (static_cast<int>(spec_.modulus.size()) != spec_.m + 1 || spec_.modulus[spec_.m] != 1)
        throw ParamsOutOfRange("modulus must be monic of degree m");
    for (int c : spec_.modulus)
        if (c < 0 || c >= spec_.p) throw ParamsOutOfRange("modulus coefficient out of range");
    Poly f(spec_.modulus.begin(), spec_.modulus.end());
    if (!poly_irreducible(f, spec_.p))
        throw ParamsOutOfRange("modulus is not irreducible");
    q_ = pow_ll(spec_.p, spec_.m);
    if (q_ > (1 << 20)) throw ParamsOutOfRange("field size exceeds 2^20");
    // Canonical element order: ascending radix code sum c_i * p^i, so the
    // low-degree coefficient varies fastest. Index 0 is the zero element and
    // index 1 is the one element.
    elements_.reserve(static_cast<std::size_t>(q_));
    GfElement cur(static_cast<std::size_t>(spec_.m), 0);
    for (long long i = 0; i < q_; ++i) {
        elements_.push_back(cur);
        int j = 0;
        while (j < spec_.m && ++cur[j] == spec_.p) cur[j++] = 0;
    }
}

Field Field::make(long long p, int m) { return Field(find_irreducible(p, m)); }

GfElement Field::zero() const { return GfElement(static_cast<std::size_t>(spec_.m), 0); }

GfElement Field::one() const {
    GfElement e = zero();
    e[0] = 1;
    return e;
}

GfElement Field::add(const GfElement& a, const GfElement& b) const {
    GfElement out(static_cast<std::size_t>(spec_.m));
    for (int i = 0; i < spec_.m; ++i)
        out[i] = static_cast<int>((a[i] + static_cast<long long>(b[i])) % spec_.p);
    return out;
}

GfElement Field::sub(const GfElement& a, const GfElement& b) const {
    GfElement out(static_cast<std::size_t>(spec_.m));
    for (int i = 0; i < spec_.m; ++i)
        out[i] = static_cast<int>(((a[i] - static_cast<long long>(b[i])) % spec_.p + spec_.p) %
                                  spec_.p);
    return out;
}

GfElement Field::neg(const GfElement& a) const { return sub(zero(), a); }

GfElement Field::mul(const GfElement& a, const GfElement& b) const {
    Poly prod = poly_mul(to_poly(a), to_poly(b), spec_.p);
    Poly modulus(spec_.modulus.begin(), spec_.modulus.end());
    return from_poly(poly_mod(std::move(prod), modulus, spec_.p), spec_.m);
}

GfElement Field::inv(const GfElement& a) const {
    if (is_zero(a)) throw DivisionByZero("zero has no multiplicative inverse");
    Poly modulus(spec_.modulus.begin(), spec_.modulus.end());
    auto [g, u] = poly_ext_gcd(to_poly(a), modulus, spec_.p);
    if (deg(g) != 0) throw Error("internal: gcd with irreducible modulus not constant");
    // scale u by g^{-1} so that u * a == 1
    long long c = g[0] % spec_.p, e = spec_.p - 2, acc = 1, base = c;
    while (e) {
        if (e & 1) acc = acc * base % spec_.p;
        base = base * base % spec_.p;
        e >>= 1;
    }
    for (auto& coef : u) coef = coef * acc % spec_.p;
    return from_poly(poly_mod(std::move(u), modulus, spec_.p), spec_.m);
}

bool Field::is_zero(const GfElement& a) const {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

GfElement Field::element(int index) const {
    if (index < 0 || index >= q_) throw IndexOutOfRange("field element index out of range");
    return elements_[index];
}

int Field::index(const GfElement& a) const {
    if (static_cast<int>(a.size()) != spec_.m)
        throw IndexOutOfRange("coefficient vector has wrong length");
    long long code = 0, place = 1;
    for (int i = 0; i < spec_.m; ++i) {
        if (a[i] < 0 || a[i] >= spec_.p)
            throw IndexOutOfRange("coefficient out of range");
        code += a[i] * place;
        place *= spec_.p;
    }
    return static_cast<int>(code);
}

std::vector<GfElement> Field::elements() const { return elements_; }

std::string Field::to_string(const GfElement& a) const {
    std::ostringstream out;
    bool first = true;
    for (int i = spec_.m - 1; i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) out << '+';
        if (i == 0 || a[i] != 1) out << a[i];
        if (i >= 1) {
            out << 'x';
            if (i >= 2) out << '^' << i;
        }
        first = false;
    }
    if (first) out << '0';
    return out.str();
}

Permutation Agl1Group::point_action(int idx) const {
    long long q = field.q();
    int a_pos = static_cast<int>(idx / q);
    int b_idx = static_cast<int>(idx % q);
    // nonzero elements keep canonical order; zero is canonical index 0
    GfElement a = field.element(a_pos + 1);
    GfElement b = field.element(b_idx);
    std::vector<int> images(static_cast<std::size_t>(q));
    for (int x = 0; x < q; ++x)
        images[x] = field.index(field.add(field.mul(a, field.element(x)), b));
    return Permutation(std::move(images));
}

Agl1Group agl1(const FieldSpec& spec) {
    Field field(spec);
    long long q = field.q();
    if (q > 64) throw ParamsOutOfRange("affine group bound: q <= 64");
    int order = static_cast<int>(q * (q - 1));
    // element (a, b) at index (index(a) - 1) * q + index(b) represents
    // x -> a x + b; the product is composition, right factor first
    auto decode = [q](int idx) { return std::pair(static_cast<int>(idx / q) + 1,
                                                  static_cast<int>(idx % q)); };
    auto field_ptr = std::make_shared<Field>(field);
    auto mul = [field_ptr, q, decode](int lhs, int rhs) {
        auto [a1, b1] = decode(lhs);
        auto [a2, b2] = decode(rhs);
        GfElement ea1 = field_ptr->element(a1), eb1 = field_ptr->element(b1);
        GfElement ea2 = field_ptr->element(a2), eb2 = field_ptr->element(b2);
        GfElement a = field_ptr->mul(ea1, ea2);
        GfElement b = field_ptr->add(field_ptr->mul(ea1, eb2), eb1);
        return (field_ptr->index(a) - 1) * static_cast<int>(q) + field_ptr->index(b);
    };
    auto label = [field_ptr, q, decode](int idx) {
        auto [a, b] = decode(idx);
        return "x->(" + field_ptr->to_string(field_ptr->element(a)) + ")x+(" +
               field_ptr->to_string(field_ptr->element(b)) + ")";
    };
    int identity = (field.index(field.one()) - 1) * static_cast<int>(q) +
                   field.index(field.zero());
    FiniteGroup group(order, identity, mul, label);
    return {std::move(field), std::move(group)};
}

} // namespace layerline
