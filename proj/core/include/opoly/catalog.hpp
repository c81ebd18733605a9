#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opoly/func.hpp"

namespace opoly {

/// One named o-polynomial recipe resolved at a specific degree. The
/// exponent formulas come from the classical hyperoval literature and are
/// treated as data: the test suite re-verifies every instance against the
/// in-repo characterizations.
struct FamilyInstance {
    std::string name;          // translation | segre | glynn1 | glynn2 | payne
    std::optional<int> param;  // translation shift k; empty otherwise
    PolyTerms terms;
};

/// True iff the family is defined at degree n (translation(k): gcd(k,n)=1,
/// 1 <= k < n; segre/glynn1/payne: n odd >= 3; glynn2: n = 3 mod 4).
bool family_valid(std::string_view name, std::optional<int> param, int n);

/// Resolved monomial/trinomial terms for one family instance. Fractional
/// exponents (Payne's 1/6, 1/2, 5/6) become modular inverses mod 2^n - 1.
PolyTerms family_terms(std::string_view name, std::optional<int> param, int n);

VecFunc family(std::string_view name, std::optional<int> param, const FieldSpec& spec);
VecFunc family(std::string_view name, std::optional<int> param, int n);

/// Every (name, param) instance defined at degree n.
std::vector<FamilyInstance> list_families(int n);

} // namespace opoly
