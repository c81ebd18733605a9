#include "opoly/report_json.hpp"

#include <cstdio>

#include <json.hpp>

namespace opoly {

std::string hex_mask(std::uint32_t mask) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", mask);
    return buf;
}

std::string report_to_json(const CheckReport& report, const FieldSpec& spec,
                           const std::string& function_label) {
    nlohmann::ordered_json j;
    j["n"] = spec.n;
    j["modulus"] = hex_mask(spec.modulus);
    j["function"] = function_label;
    nlohmann::ordered_json verdicts;
    verdicts["direct"] = report.verdict_direct;
    verdicts["slopes"] = report.verdict_slopes;
    verdicts["walsh"] = report.verdict_walsh;
    verdicts["remark"] = report.verdict_remark;
    if (report.verdict_geometry) verdicts["geometry"] = *report.verdict_geometry;
    j["verdicts"] = std::move(verdicts);
    nlohmann::ordered_json sums;
    sums["count_deficiency"] = to_string(report.count_deficiency);
    sums["walsh_excess"] = to_string(report.walsh_excess);
    sums["triple_sum"] = to_string(report.triple_sum);
    sums["square_sum_total"] = to_string(report.square_sum_total);
    sums["moments"] = {{"1", to_string(report.moments[0])},
                       {"2", to_string(report.moments[1])},
                       {"3", to_string(report.moments[2])}};
    j["sums"] = std::move(sums);
    return j.dump(2) + "\n";
}

} // namespace opoly
