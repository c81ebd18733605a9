#include "opoly/spectrum.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "opoly/errors.hpp"

namespace opoly {

std::vector<Element> trace_index_map(const FieldSpec& spec) {
    const std::uint32_t size = spec.size();
    // Row i of the Gram matrix of the trace form in the polynomial basis:
    // bit j is tr(x^i * x^j).
    std::vector<std::uint32_t> gram(spec.n, 0);
    for (int i = 0; i < spec.n; ++i) {
        for (int j = 0; j < spec.n; ++j) {
            const Element prod = mul(spec, 1u << i, 1u << j);
            gram[i] |= static_cast<std::uint32_t>(trace(spec, prod)) << j;
        }
    }
    // The form is nondegenerate, i.e. the Gram matrix is invertible.
    std::vector<std::uint32_t> rows = gram;
    for (int col = 0; col < spec.n; ++col) {
        int pivot = -1;
        for (int r = col; r < spec.n; ++r) {
            if (rows[r] >> col & 1u) { pivot = r; break; }
        }
        if (pivot < 0) throw std::logic_error("degenerate trace form; broken field spec");
        std::swap(rows[col], rows[pivot]);
        for (int r = 0; r < spec.n; ++r) {
            if (r != col && (rows[r] >> col & 1u)) rows[r] ^= rows[col];
        }
    }
    std::vector<Element> dmap(size);
    dmap[0] = 0;
    for (std::uint32_t u = 1; u < size; ++u)
        dmap[u] = dmap[u & (u - 1)] ^ gram[std::countr_zero(u)];
    return dmap;
}

SignVector component_sign_table(const VecFunc& f, Element v) {
    SignVector g(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x)
        g[x] = trace(f.spec, mul(f.spec, v, f.table[x])) != 0 ? -1 : 1;
    return g;
}

void fwht(std::span<std::int64_t> data) {
    const std::size_t len = data.size();
    if (len == 0 || (len & (len - 1)) != 0)
        throw std::invalid_argument("fwht length must be a power of two");
    for (std::size_t half = 1; half < len; half <<= 1) {
        for (std::size_t block = 0; block < len; block += half << 1) {
            for (std::size_t i = block; i < block + half; ++i) {
                const std::int64_t a = data[i];
                const std::int64_t b = data[i + half];
                data[i] = a + b;
                data[i + half] = a - b;
            }
        }
    }
}

std::int64_t walsh_at(const VecFunc& f, Element u, Element v) {
    const FieldSpec& spec = f.spec;
    std::int64_t acc = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        const int parity =
            trace(spec, mul(spec, v, f.table[x])) ^ trace(spec, mul(spec, u, static_cast<Element>(x)));
        acc += parity != 0 ? -1 : 1;
    }
    return acc;
}

SignVector walsh_row(const VecFunc& f, Element v) {
    return walsh_row(f, v, trace_index_map(f.spec));
}

SignVector walsh_row(const VecFunc& f, Element v, const std::vector<Element>& dmap) {
    SignVector hat = component_sign_table(f, v);
    fwht(hat);
    SignVector row(f.size());
    for (std::uint32_t u = 0; u < f.size(); ++u) row[u] = hat[dmap[u]];
    return row;
}

WalshSpectrum full_spectrum(const VecFunc& f, int max_n) {
    const FieldSpec& spec = f.spec;
    if (spec.n > max_n)
        throw resource_error("full_spectrum materializes 2^(2n) entries and is capped at n = " +
                             std::to_string(max_n) + "; stream walsh_row per component instead");
    WalshSpectrum s{spec, std::vector<std::int64_t>(static_cast<std::size_t>(spec.size()) * spec.size())};
    const std::vector<Element> dmap = trace_index_map(spec);
    for (std::uint32_t v = 0; v < spec.size(); ++v) {
        const SignVector row = walsh_row(f, static_cast<Element>(v), dmap);
        for (std::uint32_t u = 0; u < spec.size(); ++u)
            s.entries[(static_cast<std::size_t>(u) << spec.n) | v] = row[u];
    }
    return s;
}

} // namespace opoly
