#pragma once

#include <compare>
#include <vector>

#include "opoly/func.hpp"

namespace opoly {

/// The naive arc scan visits all point triples; 2^{3n} grows past desk
/// scale quickly, so the oracle is capped here.
inline constexpr int kMaxGeometryDegree = 5;

/// A point of PG(2, 2^n), stored normalized: the first nonzero coordinate
/// (in x, y, z order) is scaled to 1, so equal points compare equal.
struct ProjPoint {
    Element x = 0;
    Element y = 0;
    Element z = 0;

    auto operator<=>(const ProjPoint&) const = default;
};

/// Scales (x, y, z) != (0, 0, 0) to canonical form.
ProjPoint normalize_point(const FieldSpec& spec, Element x, Element y, Element z);

/// True iff the 3x3 coordinate determinant vanishes in GF(2^n). The three
/// points must be pairwise distinct.
bool collinear(const FieldSpec& spec, const ProjPoint& p1, const ProjPoint& p2,
               const ProjPoint& p3);

/// The candidate point set {(1, t, G(t))} + {(0,1,0), (0,0,1)}, deduplicated
/// and sorted.
std::vector<ProjPoint> hyperoval_points(const VecFunc& g);

/// True iff the set has 2^n + 2 points and no three are collinear. Naive
/// triple scan; refuses n > kMaxGeometryDegree.
bool is_hyperoval(const FieldSpec& spec, const std::vector<ProjPoint>& points);

} // namespace opoly
