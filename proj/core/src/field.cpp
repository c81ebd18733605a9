#include "opoly/field.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace opoly {

namespace {

int poly_degree(std::uint32_t p) {
    return std::bit_width(p) - 1; // -1 for p == 0
}

void check_degree(int n) {
    if (n < kMinDegree || n > kMaxDegree)
        throw std::invalid_argument("extension degree must be in [1, 16], got " +
                                    std::to_string(n));
}

// Lexicographically smallest irreducible polynomial of each degree,
// produced by scan_smallest_irreducible below and cross-checked in tests.
constexpr std::uint32_t kDefaultModulus[kMaxDegree + 1] = {
    0,       0x2,     0x7,     0xb,     0x13,    0x25,    0x43,    0x83,
    0x11b,   0x203,   0x409,   0x805,   0x1009,  0x201b,  0x4021,  0x8003,
    0x1002b,
};

} // namespace

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("polynomial division by zero");
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm && a != 0) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

bool is_irreducible(std::uint32_t poly) {
    const int deg = poly_degree(poly);
    if (deg < 1)
        throw std::invalid_argument("irreducibility is undefined for degree < 1");
    for (int d = 1; d <= deg / 2; ++d) {
        for (std::uint32_t q = 1u << d; q < (2u << d); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

std::uint32_t find_default_modulus(int n) {
    check_degree(n);
    return kDefaultModulus[n];
}

FieldSpec make_field(int n) { return make_field(n, find_default_modulus(n)); }

FieldSpec make_field(int n, std::uint32_t modulus) {
    check_degree(n);
    if (poly_degree(modulus) != n)
        throw std::invalid_argument("modulus must have degree exactly " +
                                    std::to_string(n));
    if (!is_irreducible(modulus))
        throw std::invalid_argument("modulus is reducible over GF(2)");
    return FieldSpec{n, modulus};
}

Element field_pow(const FieldSpec& spec, Element a, std::uint64_t e) {
    Element r = 1;
    while (e != 0) {
        if (e & 1u) r = mul(spec, r, a);
        a = mul(spec, a, a);
        e >>= 1;
    }
    return r;
}

Element inv(const FieldSpec& spec, Element a) {
    if (a == 0) throw std::domain_error("inverse of 0 in GF(2^n)");
    return field_pow(spec, a, spec.size() - 2);
}

int trace(const FieldSpec& spec, Element a) {
    Element acc = 0;
    Element cur = a;
    for (int i = 0; i < spec.n; ++i) {
        acc ^= cur;
        cur = mul(spec, cur, cur);
    }
    if (acc > 1) throw std::logic_error("trace left GF(2); modulus not irreducible?");
    return static_cast<int>(acc);
}

} // namespace opoly
