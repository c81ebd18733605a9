#include "opoly/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "opoly/errors.hpp"

namespace opoly {

ProjPoint normalize_point(const FieldSpec& spec, Element x, Element y, Element z) {
    if (x == 0 && y == 0 && z == 0)
        throw std::invalid_argument("(0,0,0) is not a projective point");
    Element lead = x != 0 ? x : (y != 0 ? y : z);
    if (lead == 1) return ProjPoint{x, y, z};
    const Element s = inv(spec, lead);
    return ProjPoint{mul(spec, x, s), mul(spec, y, s), mul(spec, z, s)};
}

bool collinear(const FieldSpec& spec, const ProjPoint& p1, const ProjPoint& p2,
               const ProjPoint& p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3)
        throw std::invalid_argument("collinearity needs three distinct points");
    // 3x3 determinant; in characteristic 2 every cofactor sign is +.
    const Element d = mul(spec, p1.x, mul(spec, p2.y, p3.z) ^ mul(spec, p3.y, p2.z)) ^
                      mul(spec, p1.y, mul(spec, p2.x, p3.z) ^ mul(spec, p3.x, p2.z)) ^
                      mul(spec, p1.z, mul(spec, p2.x, p3.y) ^ mul(spec, p3.x, p2.y));
    return d == 0;
}

std::vector<ProjPoint> hyperoval_points(const VecFunc& g) {
    const FieldSpec& spec = g.spec;
    std::vector<ProjPoint> pts;
    pts.reserve(spec.size() + 2);
    for (std::uint32_t t = 0; t < spec.size(); ++t)
        pts.push_back(ProjPoint{1, static_cast<Element>(t), g.table[t]});
    pts.push_back(ProjPoint{0, 1, 0});
    pts.push_back(ProjPoint{0, 0, 1});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool is_hyperoval(const FieldSpec& spec, const std::vector<ProjPoint>& points) {
    if (spec.n > kMaxGeometryDegree)
        throw resource_error("the naive arc scan is capped at n = " +
                             std::to_string(kMaxGeometryDegree) +
                             "; use the algebraic checkers for larger fields");
    std::vector<ProjPoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() != static_cast<std::size_t>(spec.size()) + 2) return false;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (collinear(spec, pts[i], pts[j], pts[k])) return false;
    return true;
}

} // namespace opoly
