#pragma once

#include <cstdint>

namespace opoly {

/// A field element of GF(2^n) in polynomial basis: bit i is the coefficient
/// of x^i. Addition is XOR; 0 and 1 are the identities.
using Element = std::uint32_t;

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 16;

/// Carrier of the extension degree n and the degree-n reduction polynomial.
/// Immutable after construction; every operation on it is a pure function,
/// so specs are safe to share across threads.
struct FieldSpec {
    int n = 0;
    std::uint32_t modulus = 0; // (n+1)-bit mask, bit n always set, irreducible

    std::uint32_t size() const { return 1u << n; }
    Element max_element() const { return (1u << n) - 1; }
};

/// Lexicographically smallest irreducible degree-n polynomial over GF(2),
/// served from a table verified against the trial-division scan.
std::uint32_t find_default_modulus(int n);

/// Trial division by every polynomial of degree <= deg/2. Throws on a
/// degree-0 input.
bool is_irreducible(std::uint32_t poly);

/// Remainder of GF(2)[x] division of a by m (m != 0).
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m);

FieldSpec make_field(int n);
FieldSpec make_field(int n, std::uint32_t modulus);

/// Carry-less product reduced modulo spec.modulus. Requires a, b < 2^n.
inline Element mul(const FieldSpec& spec, Element a, Element b) {
    const std::uint32_t top = spec.size();
    Element r = 0;
    while (b != 0) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= spec.modulus;
    }
    return r;
}

/// Square-and-multiply exponentiation with the convention 0^0 = 1.
Element field_pow(const FieldSpec& spec, Element a, std::uint64_t e);

/// Multiplicative inverse a^{2^n - 2}. Throws std::domain_error on a = 0.
Element inv(const FieldSpec& spec, Element a);

/// Absolute trace tr_n(a) = a + a^2 + a^4 + ... + a^{2^{n-1}}, in {0, 1}.
int trace(const FieldSpec& spec, Element a);

} // namespace opoly
