#pragma once

#include <cstdint>
#include <vector>

#include "opoly/field.hpp"

namespace opoly {

/// A function F: GF(2^n) -> GF(2^n) materialized as a full value table,
/// table[x] = F(x). Immutable after construction.
struct VecFunc {
    FieldSpec spec;
    std::vector<Element> table;

    std::uint32_t size() const { return spec.size(); }
    Element operator()(Element x) const { return table[x]; }
};

/// One monomial of a univariate polynomial over GF(2^n). Exponents live in
/// [0, 2^n - 1] and are never reduced silently: x^{2^n-1} and x^0 differ
/// at x = 0.
struct PolyTerm {
    std::uint32_t exponent = 0;
    Element coefficient = 0; // nonzero in a well-formed term list
};

using PolyTerms = std::vector<PolyTerm>;

/// table[x'] = x^d. Requires 0 <= d <= 2^n - 1; 0^0 = 1.
VecFunc from_monomial(const FieldSpec& spec, std::uint32_t d);

/// XOR of coefficient * x^exponent over the terms. Rejects duplicate
/// exponents and malformed terms.
VecFunc from_polynomial(const FieldSpec& spec, const PolyTerms& terms);

/// Wraps an explicit table of 2^n values, each < 2^n.
VecFunc from_table(const FieldSpec& spec, std::vector<Element> values);

/// True iff the table is a bijection on [0, 2^n); one occupancy pass.
bool is_permutation(const VecFunc& f);

/// The slope (difference-quotient) function through s:
/// G_s(0) = 0 and G_s(t) = (F(t+s) + F(s)) / t for t != 0.
VecFunc slope_function(const VecFunc& f, Element s);

} // namespace opoly
