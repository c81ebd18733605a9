#include "opoly/func.hpp"

#include <stdexcept>
#include <string>

namespace opoly {

VecFunc from_monomial(const FieldSpec& spec, std::uint32_t d) {
    if (d > spec.max_element())
        throw std::invalid_argument("monomial exponent " + std::to_string(d) +
                                    " out of [0, 2^n - 1]");
    VecFunc f{spec, std::vector<Element>(spec.size())};
    for (std::uint32_t x = 0; x < spec.size(); ++x)
        f.table[x] = field_pow(spec, static_cast<Element>(x), d);
    return f;
}

VecFunc from_polynomial(const FieldSpec& spec, const PolyTerms& terms) {
    std::vector<bool> seen(spec.size(), false);
    for (const PolyTerm& t : terms) {
        if (t.exponent > spec.max_element())
            throw std::invalid_argument("exponent " + std::to_string(t.exponent) +
                                        " out of [0, 2^n - 1]");
        if (t.coefficient == 0 || t.coefficient > spec.max_element())
            throw std::invalid_argument("coefficient must be a nonzero field element");
        if (seen[t.exponent])
            throw std::invalid_argument("duplicate exponent " + std::to_string(t.exponent));
        seen[t.exponent] = true;
    }
    VecFunc f{spec, std::vector<Element>(spec.size(), 0)};
    for (std::uint32_t x = 0; x < spec.size(); ++x) {
        Element acc = 0;
        for (const PolyTerm& t : terms)
            acc ^= mul(spec, t.coefficient, field_pow(spec, static_cast<Element>(x), t.exponent));
        f.table[x] = acc;
    }
    return f;
}

VecFunc from_table(const FieldSpec& spec, std::vector<Element> values) {
    if (values.size() != spec.size())
        throw std::invalid_argument("table has " + std::to_string(values.size()) +
                                    " entries, expected " + std::to_string(spec.size()));
    for (Element v : values) {
        if (v > spec.max_element())
            throw std::invalid_argument("table entry " + std::to_string(v) +
                                        " out of [0, 2^n)");
    }
    return VecFunc{spec, std::move(values)};
}

bool is_permutation(const VecFunc& f) {
    std::vector<bool> seen(f.size(), false);
    for (Element y : f.table) {
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

VecFunc slope_function(const VecFunc& f, Element s) {
    const FieldSpec& spec = f.spec;
    VecFunc g{spec, std::vector<Element>(spec.size())};
    g.table[0] = 0;
    for (std::uint32_t t = 1; t < spec.size(); ++t) {
        const Element num = f.table[t ^ s] ^ f.table[s];
        g.table[t] = mul(spec, num, inv(spec, static_cast<Element>(t)));
    }
    return g;
}

} // namespace opoly
