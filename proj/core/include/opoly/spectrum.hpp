#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "opoly/func.hpp"

namespace opoly {

/// Before the transform: 2^n entries in {+1, -1}, entry x being
/// (-1)^{tr(v * F(x))} for a fixed component v. After the transform: one
/// integer Walsh row, entries in [-2^n, 2^n].
using SignVector = std::vector<std::int64_t>;

/// The full 2^n x 2^n array of Walsh coefficients
/// W(u, v) = sum_x (-1)^{tr(v*F(x)) + tr(u*x)}, stored u-major.
struct WalshSpectrum {
    FieldSpec spec;
    std::vector<std::int64_t> entries;

    std::int64_t at(Element u, Element v) const {
        return entries[(static_cast<std::size_t>(u) << spec.n) | v];
    }
};

/// Materialization cap for full_spectrum; larger fields stream walsh_row.
inline constexpr int kMaxSpectrumDegree = 10;

/// The reindexing D with tr(u*x) = bitdot(D[u], x) for all u, x. The trace
/// form is nondegenerate, so D is a permutation of [0, 2^n); it bridges the
/// field characters the Walsh definition uses and the plain-XOR characters
/// the fast transform computes. Without it the fast and naive paths
/// disagree on every field whose trace is not the bit-parity form.
std::vector<Element> trace_index_map(const FieldSpec& spec);

/// Entry x is +1 if tr(v * F(x)) = 0 and -1 otherwise.
SignVector component_sign_table(const VecFunc& f, Element v);

/// In-place unnormalized Walsh-Hadamard transform,
/// out[u] = sum_x in[x] * (-1)^{bitdot(u, x)}; length must be a power of
/// two. Applying it twice multiplies the input by the length.
void fwht(std::span<std::int64_t> data);

/// Definitional O(2^n) evaluation of one Walsh coefficient. This is the
/// oracle the fwht-based rows are checked against.
std::int64_t walsh_at(const VecFunc& f, Element u, Element v);

/// One component row [W(u, v) for all u], via sign table + fwht + D.
SignVector walsh_row(const VecFunc& f, Element v);
SignVector walsh_row(const VecFunc& f, Element v, const std::vector<Element>& dmap);

/// All 2^{2n} coefficients; refuses n > max_n and points callers at
/// walsh_row streaming instead.
WalshSpectrum full_spectrum(const VecFunc& f, int max_n = kMaxSpectrumDegree);

} // namespace opoly
