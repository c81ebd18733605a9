#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "opoly/func.hpp"
#include "opoly/wide.hpp"

namespace opoly {

/// The Walsh-side aggregates gather W(b*v, v) for every (b, v), a
/// 4 * 2^{2n}-byte matrix; capped to keep the build under ~256 MiB.
inline constexpr int kMaxAggregateDegree = 13;

/// W(b*v, v) for all b and v, row-major in b. Row b = 0 holds W(0, v),
/// which is every aggregate's zero-component tail. Built once, consumed by
/// every Walsh-side sum.
struct WalshDiagonals {
    FieldSpec spec;
    std::vector<std::int32_t> values; // (b << n) | v

    std::int32_t at(Element b, Element v) const {
        return values[(static_cast<std::size_t>(b) << spec.n) | v];
    }
};

WalshDiagonals gather_walsh_diagonals(const VecFunc& f, unsigned threads = 0);

/// |{x : F(x) + b*x = a}| by direct scan. b = 0 is allowed for diagnostics;
/// the characterizations quantify over b != 0 only.
std::int64_t count_solutions(const VecFunc& f, Element b, Element a);

/// Sum over all a and b != 0 of N(N-2)^2 with N = count_solutions(f, b, a).
/// Zero exactly on o-polynomials; one histogram of F(x) + b*x per b.
int128 count_deficiency(const VecFunc& f, unsigned threads = 0);

/// Direct characterization: every F(x) + b*x = a (b != 0) has 0 or 2
/// solutions. Short-circuits on the first violation.
bool check_direct(const VecFunc& f);

/// Slope characterization: F and every slope function G_s are permutations.
bool check_slopes(const VecFunc& f);

/// sum_v W(b*v, v)^2, including v = 0.
int128 square_sum(const VecFunc& f, Element b);
/// Per-b square sums for all b (index b; entry 0 is the b = 0 diagnostic).
std::vector<int128> square_sums(const WalshDiagonals& diag);
/// sum over b != 0 of square_sum(f, b).
int128 square_sum_total(const WalshDiagonals& diag);
int128 square_sum_total(const VecFunc& f, unsigned threads = 0);

/// sum_{b != 0} sum_{v1, v2} W(b*v1, v1) W(b*v2, v2) W(b*(v1+v2), v1+v2),
/// evaluated per b as an XOR-convolution: 2^{-n} sum_w fwht(f_b)(w)^3 with
/// f_b(v) = W(b*v, v). The 2^{-n} division is asserted exact.
int128 triple_sum(const WalshDiagonals& diag, unsigned threads = 0);
int128 triple_sum(const VecFunc& f, unsigned threads = 0);

/// sum over v != 0 of W(0, v)^2.
int128 zero_component_square_sum(const WalshDiagonals& diag);

/// triple_sum + 2^{n+2} * zero_component_square_sum - 2^{4n+2} + 2^{3n+2}.
/// Nonnegative for every F; zero exactly on o-polynomials; equals
/// 2^{2n} * count_deficiency.
int128 walsh_excess(const WalshDiagonals& diag, unsigned threads = 0);
int128 walsh_excess(const VecFunc& f, unsigned threads = 0);

/// Walsh characterization: walsh_excess(f) = 0.
bool check_walsh(const VecFunc& f, unsigned threads = 0);

/// Both closed-form identities at once: square_sum_total = (2^n-1)*2^{2n+1}
/// and triple_sum = (2^n-1)*2^{3n+2}.
bool check_remark(const VecFunc& f, unsigned threads = 0);

/// j-th moment of solution counts, sum_{a, b != 0} N^j, computed from the
/// Walsh side (j = 1..3). Equals the count-side moment for every F.
int128 moment_sum(const WalshDiagonals& diag, int j, unsigned threads = 0);
int128 moment_sum(const VecFunc& f, int j, unsigned threads = 0);

/// The constrained-triple form of the excess: the b-extended triple sum
/// minus its b = 0 term, plus the same tail as walsh_excess. Identically
/// equal to walsh_excess.
int128 corollary_excess(const VecFunc& f, unsigned threads = 0);

/// Same quantity from a quintuple loop over (v1, v2, x1, x2, x3) with
/// v1 x1 + v2 x2 + (v1+v2) x3 = 0, using only definitional walsh_at values
/// otherwise. Cost 2^{5n}; capped at n <= 3. Oracle path.
int128 corollary_excess_exhaustive(const VecFunc& f);

/// Verdicts and exact aggregates from every characterization run on one
/// function. All verdicts must agree; full_report enforces that and the
/// excess/deficiency identity, and throws std::logic_error otherwise
/// (such a state is an implementation bug, never valid data).
struct CheckReport {
    bool verdict_direct = false;
    bool verdict_slopes = false;
    bool verdict_walsh = false;
    bool verdict_remark = false;
    std::optional<bool> verdict_geometry;

    int128 count_deficiency = 0;
    int128 walsh_excess = 0;
    int128 triple_sum = 0;
    int128 square_sum_total = 0;
    std::array<int128, 3> moments{}; // j = 1, 2, 3

    bool is_o_polynomial() const { return verdict_direct; }
};

CheckReport full_report(const VecFunc& f, bool include_geometry = false,
                        unsigned threads = 0);

} // namespace opoly
