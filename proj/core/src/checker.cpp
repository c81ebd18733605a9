#include "opoly/checker.hpp"

#include <stdexcept>
#include <string>

#include "opoly/errors.hpp"
#include "opoly/geometry.hpp"
#include "opoly/parallel.hpp"
#include "opoly/spectrum.hpp"

namespace opoly {

namespace {

int128 pow2(int k) { return int128(1) << k; }

// hist[a] = |{x : F(x) + b*x = a}|
void solution_histogram(const VecFunc& f, Element b, std::vector<std::int64_t>& hist) {
    const FieldSpec& spec = f.spec;
    hist.assign(spec.size(), 0);
    for (std::uint32_t x = 0; x < spec.size(); ++x)
        ++hist[f.table[x] ^ mul(spec, b, static_cast<Element>(x))];
}

// 2^{-n} sum_w fwht(row)(w)^3 for one diagonal row, exactness asserted.
int128 convolution_triple(const WalshDiagonals& diag, Element b,
                          std::vector<std::int64_t>& scratch) {
    const std::uint32_t size = diag.spec.size();
    scratch.resize(size);
    const std::int32_t* row = diag.values.data() + (static_cast<std::size_t>(b) << diag.spec.n);
    for (std::uint32_t v = 0; v < size; ++v) scratch[v] = row[v];
    fwht(scratch);
    int128 acc = 0;
    for (std::uint32_t w = 0; w < size; ++w) {
        const int128 t = scratch[w];
        acc += t * t * t;
    }
    if (acc % pow2(diag.spec.n) != 0)
        throw std::logic_error("triple sum not divisible by 2^n; spectrum is corrupt");
    return acc / pow2(diag.spec.n);
}

int128 square_sum_row(const WalshDiagonals& diag, Element b) {
    const std::uint32_t size = diag.spec.size();
    const std::int32_t* row = diag.values.data() + (static_cast<std::size_t>(b) << diag.spec.n);
    int128 acc = 0;
    for (std::uint32_t v = 0; v < size; ++v) {
        const int128 w = row[v];
        acc += w * w;
    }
    return acc;
}

int128 excess_from_parts(const FieldSpec& spec, int128 triple, int128 zero_sq) {
    return triple + pow2(spec.n + 2) * zero_sq - pow2(4 * spec.n + 2) + pow2(3 * spec.n + 2);
}

} // namespace

WalshDiagonals gather_walsh_diagonals(const VecFunc& f, unsigned threads) {
    const FieldSpec& spec = f.spec;
    if (spec.n > kMaxAggregateDegree)
        throw resource_error("Walsh-side aggregates materialize 2^(2n) coefficients and are "
                             "capped at n = " + std::to_string(kMaxAggregateDegree) +
                             "; the count-side checks remain available");
    const std::uint32_t size = spec.size();
    WalshDiagonals diag{spec, std::vector<std::int32_t>(static_cast<std::size_t>(size) * size)};
    const std::vector<Element> dmap = trace_index_map(spec);
    parallel_chunks(0, size, threads, [&](std::uint32_t vlo, std::uint32_t vhi) {
        for (std::uint32_t v = vlo; v < vhi; ++v) {
            const SignVector row = walsh_row(f, static_cast<Element>(v), dmap);
            for (std::uint32_t b = 0; b < size; ++b) {
                const Element u = mul(spec, static_cast<Element>(b), static_cast<Element>(v));
                diag.values[(static_cast<std::size_t>(b) << spec.n) | v] =
                    static_cast<std::int32_t>(row[u]);
            }
        }
    });
    return diag;
}

std::int64_t count_solutions(const VecFunc& f, Element b, Element a) {
    const FieldSpec& spec = f.spec;
    std::int64_t count = 0;
    for (std::uint32_t x = 0; x < spec.size(); ++x)
        if ((f.table[x] ^ mul(spec, b, static_cast<Element>(x))) == a) ++count;
    return count;
}

int128 count_deficiency(const VecFunc& f, unsigned threads) {
    const std::uint32_t size = f.spec.size();
    return parallel_sum<int128>(1, size, threads, [&](std::uint32_t b) {
        static thread_local std::vector<std::int64_t> hist;
        solution_histogram(f, static_cast<Element>(b), hist);
        std::int64_t acc = 0;
        for (std::int64_t n_sol : hist) acc += n_sol * (n_sol - 2) * (n_sol - 2);
        return int128(acc);
    });
}

bool check_direct(const VecFunc& f) {
    std::vector<std::int64_t> hist;
    for (std::uint32_t b = 1; b < f.spec.size(); ++b) {
        solution_histogram(f, static_cast<Element>(b), hist);
        for (std::int64_t n_sol : hist)
            if (n_sol != 0 && n_sol != 2) return false;
    }
    return true;
}

bool check_slopes(const VecFunc& f) {
    if (!is_permutation(f)) return false;
    const FieldSpec& spec = f.spec;
    const std::uint32_t size = spec.size();
    std::vector<Element> inverse(size, 0);
    for (std::uint32_t t = 1; t < size; ++t)
        inverse[t] = inv(spec, static_cast<Element>(t));
    std::vector<bool> seen(size);
    for (std::uint32_t s = 0; s < size; ++s) {
        seen.assign(size, false);
        seen[0] = true; // G_s(0) = 0
        for (std::uint32_t t = 1; t < size; ++t) {
            const Element y = mul(spec, f.table[t ^ s] ^ f.table[s], inverse[t]);
            if (seen[y]) return false;
            seen[y] = true;
        }
    }
    return true;
}

int128 square_sum(const VecFunc& f, Element b) {
    const FieldSpec& spec = f.spec;
    const std::vector<Element> dmap = trace_index_map(spec);
    int128 acc = 0;
    for (std::uint32_t v = 0; v < spec.size(); ++v) {
        const SignVector row = walsh_row(f, static_cast<Element>(v), dmap);
        const int128 w = row[mul(spec, b, static_cast<Element>(v))];
        acc += w * w;
    }
    return acc;
}

std::vector<int128> square_sums(const WalshDiagonals& diag) {
    const std::uint32_t size = diag.spec.size();
    std::vector<int128> out(size);
    for (std::uint32_t b = 0; b < size; ++b)
        out[b] = square_sum_row(diag, static_cast<Element>(b));
    return out;
}

int128 square_sum_total(const WalshDiagonals& diag) {
    int128 acc = 0;
    for (std::uint32_t b = 1; b < diag.spec.size(); ++b)
        acc += square_sum_row(diag, static_cast<Element>(b));
    return acc;
}

int128 square_sum_total(const VecFunc& f, unsigned threads) {
    return square_sum_total(gather_walsh_diagonals(f, threads));
}

int128 triple_sum(const WalshDiagonals& diag, unsigned threads) {
    return parallel_sum<int128>(1, diag.spec.size(), threads, [&](std::uint32_t b) {
        static thread_local std::vector<std::int64_t> scratch;
        return convolution_triple(diag, static_cast<Element>(b), scratch);
    });
}

int128 triple_sum(const VecFunc& f, unsigned threads) {
    return triple_sum(gather_walsh_diagonals(f, threads), threads);
}

int128 zero_component_square_sum(const WalshDiagonals& diag) {
    int128 acc = 0;
    for (std::uint32_t v = 1; v < diag.spec.size(); ++v) {
        const int128 w = diag.values[v]; // row b = 0 holds W(0, v)
        acc += w * w;
    }
    return acc;
}

int128 walsh_excess(const WalshDiagonals& diag, unsigned threads) {
    return excess_from_parts(diag.spec, triple_sum(diag, threads),
                             zero_component_square_sum(diag));
}

int128 walsh_excess(const VecFunc& f, unsigned threads) {
    return walsh_excess(gather_walsh_diagonals(f, threads), threads);
}

bool check_walsh(const VecFunc& f, unsigned threads) {
    return walsh_excess(f, threads) == 0;
}

bool check_remark(const VecFunc& f, unsigned threads) {
    const WalshDiagonals diag = gather_walsh_diagonals(f, threads);
    const int128 q = diag.spec.size() - 1;
    return square_sum_total(diag) == q * pow2(2 * diag.spec.n + 1) &&
           triple_sum(diag, threads) == q * pow2(3 * diag.spec.n + 2);
}

int128 moment_sum(const WalshDiagonals& diag, int j, unsigned threads) {
    const FieldSpec& spec = diag.spec;
    switch (j) {
    case 1:
        // only v = 0 meets the constraint, so each b contributes W(0, 0)
        return int128(spec.size() - 1) * diag.at(0, 0);
    case 2: {
        const int128 total = square_sum_total(diag);
        if (total % pow2(spec.n) != 0)
            throw std::logic_error("second moment not divisible by 2^n");
        return total / pow2(spec.n);
    }
    case 3: {
        const int128 triple = triple_sum(diag, threads);
        if (triple % pow2(2 * spec.n) != 0)
            throw std::logic_error("third moment not divisible by 2^2n");
        return triple / pow2(2 * spec.n);
    }
    default:
        throw std::invalid_argument("moment order must be 1, 2 or 3");
    }
}

int128 moment_sum(const VecFunc& f, int j, unsigned threads) {
    if (j < 1 || j > 3) throw std::invalid_argument("moment order must be 1, 2 or 3");
    return moment_sum(gather_walsh_diagonals(f, threads), j, threads);
}

int128 corollary_excess(const VecFunc& f, unsigned threads) {
    const WalshDiagonals diag = gather_walsh_diagonals(f, threads);
    const std::uint32_t size = diag.spec.size();
    // Extend the b-sum over every b, then take the b = 0 term back out via
    // the explicit double loop over (v1, v2).
    const int128 extended = parallel_sum<int128>(0, size, threads, [&](std::uint32_t b) {
        static thread_local std::vector<std::int64_t> scratch;
        return convolution_triple(diag, static_cast<Element>(b), scratch);
    });
    int128 zero_term = 0;
    for (std::uint32_t v1 = 0; v1 < size; ++v1)
        for (std::uint32_t v2 = 0; v2 < size; ++v2)
            zero_term += int128(diag.values[v1]) * diag.values[v2] * diag.values[v1 ^ v2];
    return excess_from_parts(diag.spec, extended - zero_term,
                             zero_component_square_sum(diag));
}

int128 corollary_excess_exhaustive(const VecFunc& f) {
    const FieldSpec& spec = f.spec;
    if (spec.n > 3)
        throw resource_error("the quintuple-loop corollary oracle costs 2^(5n); capped at n = 3");
    const std::uint32_t size = spec.size();
    int128 constrained = 0;
    for (std::uint32_t v1 = 0; v1 < size; ++v1) {
        for (std::uint32_t v2 = 0; v2 < size; ++v2) {
            const Element v3 = static_cast<Element>(v1 ^ v2);
            for (std::uint32_t x1 = 0; x1 < size; ++x1) {
                for (std::uint32_t x2 = 0; x2 < size; ++x2) {
                    for (std::uint32_t x3 = 0; x3 < size; ++x3) {
                        const Element lhs = mul(spec, static_cast<Element>(v1), static_cast<Element>(x1)) ^
                                            mul(spec, static_cast<Element>(v2), static_cast<Element>(x2)) ^
                                            mul(spec, v3, static_cast<Element>(x3));
                        if (lhs != 0) continue;
                        const int parity = trace(spec, mul(spec, static_cast<Element>(v1), f.table[x1])) ^
                                           trace(spec, mul(spec, static_cast<Element>(v2), f.table[x2])) ^
                                           trace(spec, mul(spec, v3, f.table[x3]));
                        constrained += parity != 0 ? -1 : 1;
                    }
                }
            }
        }
    }
    const int128 extended = pow2(spec.n) * constrained;
    std::vector<int128> w0(size);
    for (std::uint32_t v = 0; v < size; ++v)
        w0[v] = walsh_at(f, 0, static_cast<Element>(v));
    int128 zero_term = 0;
    for (std::uint32_t v1 = 0; v1 < size; ++v1)
        for (std::uint32_t v2 = 0; v2 < size; ++v2)
            zero_term += w0[v1] * w0[v2] * w0[v1 ^ v2];
    int128 zero_sq = 0;
    for (std::uint32_t v = 1; v < size; ++v) zero_sq += w0[v] * w0[v];
    return excess_from_parts(spec, extended - zero_term, zero_sq);
}

CheckReport full_report(const VecFunc& f, bool include_geometry, unsigned threads) {
    const FieldSpec& spec = f.spec;
    if (spec.n > kMaxAggregateDegree)
        throw resource_error("full_report needs the Walsh-side aggregates, capped at n = " +
                             std::to_string(kMaxAggregateDegree));
    if (include_geometry && spec.n > kMaxGeometryDegree)
        throw resource_error("the geometry oracle is capped at n = " +
                             std::to_string(kMaxGeometryDegree));
    CheckReport r;
    r.verdict_direct = check_direct(f);
    r.count_deficiency = count_deficiency(f, threads);
    r.verdict_slopes = check_slopes(f);

    const WalshDiagonals diag = gather_walsh_diagonals(f, threads);
    r.triple_sum = triple_sum(diag, threads);
    r.square_sum_total = square_sum_total(diag);
    const int128 zero_sq = zero_component_square_sum(diag);
    r.walsh_excess = excess_from_parts(spec, r.triple_sum, zero_sq);
    r.moments[0] = moment_sum(diag, 1, threads);
    r.moments[1] = moment_sum(diag, 2, threads);
    r.moments[2] = moment_sum(diag, 3, threads);
    r.verdict_walsh = r.walsh_excess == 0;
    const int128 q = spec.size() - 1;
    r.verdict_remark = r.square_sum_total == q * pow2(2 * spec.n + 1) &&
                       r.triple_sum == q * pow2(3 * spec.n + 2);
    if (include_geometry)
        r.verdict_geometry = is_hyperoval(spec, hyperoval_points(f));

    if (r.walsh_excess < 0 || r.walsh_excess != r.count_deficiency * pow2(2 * spec.n))
        throw std::logic_error("internal consistency failure: walsh_excess != 2^2n * count_deficiency");
    const bool agree = r.verdict_direct == r.verdict_slopes &&
                       r.verdict_direct == r.verdict_walsh &&
                       r.verdict_direct == r.verdict_remark &&
                       (!r.verdict_geometry || *r.verdict_geometry == r.verdict_direct);
    if (!agree)
        throw std::logic_error("internal consistency failure: characterization verdicts disagree");
    return r;
}

} // namespace opoly
