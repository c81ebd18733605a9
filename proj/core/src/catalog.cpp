#include "opoly/catalog.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace opoly {

namespace {

// Exponents e and ((e - 1) mod (2^n - 1)) + 1 define the same function:
// they agree on x != 0 by Lagrange and both send 0 to 0 when e >= 1.
std::uint32_t reduce_exponent(std::uint64_t e, int n) {
    const std::uint64_t m = (1ull << n) - 1;
    if (e == 0) return 0;
    if (m == 1) return 1;
    return static_cast<std::uint32_t>((e - 1) % m + 1);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("exponent denominator not invertible mod 2^n - 1");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

} // namespace

bool family_valid(std::string_view name, std::optional<int> param, int n) {
    if (n < 1 || n > kMaxDegree) return false;
    if (name == "translation") {
        if (!param) return false;
        const int k = *param;
        return k >= 1 && k < n && std::gcd(k, n) == 1;
    }
    if (param) return false;
    if (name == "segre" || name == "glynn1" || name == "payne") return n >= 3 && n % 2 == 1;
    if (name == "glynn2") return n >= 3 && n % 4 == 3;
    return false;
}

PolyTerms family_terms(std::string_view name, std::optional<int> param, int n) {
    require(family_valid(name, param, n),
            "family '" + std::string(name) + "' is not defined at n = " + std::to_string(n));
    if (name == "translation")
        return {{1u << *param, 1}};
    if (name == "segre")
        return {{6, 1}};
    const std::uint64_t sigma = 1ull << ((n + 1) / 2); // sigma^2 = 2 mod 2^n - 1
    if (name == "glynn1")
        return {{reduce_exponent(3 * sigma + 4, n), 1}};
    if (name == "glynn2") {
        const std::uint64_t gamma = 1ull << ((n + 1) / 4); // gamma^4 = 2 mod 2^n - 1
        return {{reduce_exponent(sigma + gamma, n), 1}};
    }
    // payne: x^{1/6} + x^{1/2} + x^{5/6}
    const std::uint64_t m = (1ull << n) - 1;
    const std::uint64_t e = inverse_mod(6, m);
    PolyTerms terms{{static_cast<std::uint32_t>(e), 1},
                    {static_cast<std::uint32_t>(3 * e % m), 1},
                    {static_cast<std::uint32_t>(5 * e % m), 1}};
    require(terms[0].exponent != terms[1].exponent && terms[0].exponent != terms[2].exponent &&
                terms[1].exponent != terms[2].exponent,
            "degenerate payne exponents at n = " + std::to_string(n));
    return terms;
}

VecFunc family(std::string_view name, std::optional<int> param, const FieldSpec& spec) {
    return from_polynomial(spec, family_terms(name, param, spec.n));
}

VecFunc family(std::string_view name, std::optional<int> param, int n) {
    return family(name, param, make_field(n));
}

std::vector<FamilyInstance> list_families(int n) {
    std::vector<FamilyInstance> out;
    for (int k = 1; k < n; ++k)
        if (family_valid("translation", k, n))
            out.push_back({"translation", k, family_terms("translation", k, n)});
    for (const char* name : {"segre", "glynn1", "glynn2", "payne"})
        if (family_valid(name, std::nullopt, n))
            out.push_back({name, std::nullopt, family_terms(name, std::nullopt, n)});
    return out;
}

} // namespace opoly
