#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "opoly/checker.hpp"
#include "opoly/func.hpp"
#include "opoly/spectrum.hpp"
#include "opoly/wide.hpp"

namespace doctest {
template <>
struct StringMaker<opoly::int128> {
    static String convert(const opoly::int128& v) { return opoly::to_string(v).c_str(); }
};
} // namespace doctest

namespace testutil {

inline opoly::VecFunc random_func(const opoly::FieldSpec& spec, std::mt19937_64& rng) {
    std::vector<opoly::Element> table(spec.size());
    for (auto& v : table)
        v = static_cast<opoly::Element>(rng()) & spec.max_element();
    return opoly::from_table(spec, std::move(table));
}

// Count-side moment sum_{a, b != 0} N^j straight off count_solutions; the
// independent oracle for the Walsh-side moment_sum.
inline opoly::int128 counting_moment(const opoly::VecFunc& f, int j) {
    opoly::int128 acc = 0;
    for (std::uint32_t b = 1; b < f.size(); ++b) {
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            const std::int64_t n_sol = opoly::count_solutions(f, b, a);
            opoly::int128 p = 1;
            for (int i = 0; i < j; ++i) p *= n_sol;
            acc += p;
        }
    }
    return acc;
}

// Triple sum by the quadratic double loop over (v1, v2) per b, on
// definitional walsh_at values only; the oracle for the XOR-convolution
// fast path.
inline opoly::int128 naive_triple_sum(const opoly::VecFunc& f) {
    const opoly::FieldSpec& spec = f.spec;
    const std::uint32_t size = spec.size();
    std::vector<std::int64_t> w(static_cast<std::size_t>(size) * size);
    for (std::uint32_t u = 0; u < size; ++u)
        for (std::uint32_t v = 0; v < size; ++v)
            w[(static_cast<std::size_t>(u) << spec.n) | v] = opoly::walsh_at(f, u, v);
    const auto at = [&](opoly::Element u, opoly::Element v) {
        return w[(static_cast<std::size_t>(u) << spec.n) | v];
    };
    opoly::int128 acc = 0;
    for (std::uint32_t b = 1; b < size; ++b) {
        for (std::uint32_t v1 = 0; v1 < size; ++v1) {
            for (std::uint32_t v2 = 0; v2 < size; ++v2) {
                const opoly::Element v3 = static_cast<opoly::Element>(v1 ^ v2);
                acc += opoly::int128(at(opoly::mul(spec, b, v1), v1)) *
                       at(opoly::mul(spec, b, v2), v2) * at(opoly::mul(spec, b, v3), v3);
            }
        }
    }
    return acc;
}

} // namespace testutil
