// opoly: decide whether a polynomial over GF(2^n) is an o-polynomial
// (equivalently, defines a hyperoval of PG(2,2^n)) and compute the Walsh
// spectral sums behind the characterizations.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opoly/catalog.hpp"
#include "opoly/checker.hpp"
#include "opoly/errors.hpp"
#include "opoly/geometry.hpp"
#include "opoly/report_json.hpp"
#include "opoly/spectrum.hpp"

namespace {

using nlohmann::ordered_json;
using namespace opoly;

constexpr int kExitUsage = 2;
constexpr int kMaxMonomialSearchDegree = 8;

struct CommonOpts {
    int n = 0;
    std::string modulus_hex;
    std::string fn_spec;
    std::string family_spec;
    unsigned threads = 0;
    std::string out_path;
};

void add_field_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "extension degree of GF(2^n), 1..16")->required();
    cmd->add_option("--modulus", o.modulus_hex,
                    "reduction polynomial as a hex bitmask (default: smallest irreducible)");
}

void add_function_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--fn", o.fn_spec,
                    "function spec: mono:<d> | poly:<exp>:<coef_hex>[,...] | table:@<path>");
    cmd->add_option("--family", o.family_spec,
                    "catalog family: translation:<k> | segre | glynn1 | glynn2 | payne");
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--threads", o.threads, "worker threads (0 = machine parallelism)");
    cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
}

std::uint32_t parse_hex(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
    }
    if (used != text.size() || v > 0xffffffffUL)
        throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
    return static_cast<std::uint32_t>(v);
}

FieldSpec resolve_field(const CommonOpts& o) {
    if (o.modulus_hex.empty()) return make_field(o.n);
    return make_field(o.n, parse_hex(o.modulus_hex, "modulus"));
}

std::vector<Element> read_table_file(const FieldSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file '" + path + "'");
    std::vector<Element> values;
    std::string token;
    while (in >> token) values.push_back(parse_hex(token, "table entry"));
    if (values.size() != spec.size())
        throw std::invalid_argument("table file holds " + std::to_string(values.size()) +
                                    " values, expected " + std::to_string(spec.size()));
    return values;
}

std::pair<std::string, std::optional<int>> parse_family_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return {spec, std::nullopt};
    const std::string name = spec.substr(0, colon);
    int k = 0;
    try {
        k = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad family parameter in '" + spec + "'");
    }
    return {name, k};
}

std::string terms_label(const PolyTerms& terms) {
    if (terms.size() == 1 && terms[0].coefficient == 1)
        return "mono:" + std::to_string(terms[0].exponent);
    std::string label = "poly:";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) label += ',';
        label += std::to_string(terms[i].exponent) + ":" + hex_mask(terms[i].coefficient).substr(2);
    }
    return label;
}

// Returns the function plus the label echoed into reports.
std::pair<VecFunc, std::string> resolve_function(const FieldSpec& spec, const CommonOpts& o) {
    if (o.fn_spec.empty() == o.family_spec.empty())
        throw std::invalid_argument("give exactly one of --fn and --family");
    if (!o.family_spec.empty()) {
        auto [name, param] = parse_family_spec(o.family_spec);
        return {family(name, param, spec), terms_label(family_terms(name, param, spec.n))};
    }
    const std::string& s = o.fn_spec;
    if (s.rfind("mono:", 0) == 0) {
        std::uint32_t d = 0;
        try {
            d = static_cast<std::uint32_t>(std::stoul(s.substr(5)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in '" + s + "'");
        }
        return {from_monomial(spec, d), s};
    }
    if (s.rfind("poly:", 0) == 0) {
        PolyTerms terms;
        std::stringstream body(s.substr(5));
        std::string part;
        while (std::getline(body, part, ',')) {
            const auto colon = part.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("bad term '" + part + "' (want <exp>:<coef_hex>)");
            std::uint32_t e = 0;
            try {
                e = static_cast<std::uint32_t>(std::stoul(part.substr(0, colon)));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in term '" + part + "'");
            }
            terms.push_back({e, parse_hex(part.substr(colon + 1), "coefficient")});
        }
        return {from_polynomial(spec, terms), s};
    }
    if (s.rfind("table:@", 0) == 0)
        return {from_table(spec, read_table_file(spec, s.substr(7))), s};
    throw std::invalid_argument("unrecognized function spec '" + s + "'");
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text;
}

int run_check(const CommonOpts& o, bool geometry, const std::string& points_path) {
    const FieldSpec spec = resolve_field(o);
    const auto [f, label] = resolve_function(spec, o);
    if (!points_path.empty()) {
        std::string csv = "x,y,z\n";
        for (const ProjPoint& p : hyperoval_points(f))
            csv += hex_mask(p.x) + "," + hex_mask(p.y) + "," + hex_mask(p.z) + "\n";
        std::ofstream out(points_path);
        if (!out) throw std::invalid_argument("cannot open points file '" + points_path + "'");
        out << csv;
    }
    const CheckReport report = full_report(f, geometry, o.threads);
    write_output(o.out_path, report_to_json(report, spec, label));
    return report.is_o_polynomial() ? 0 : 1;
}

int run_spectrum(const CommonOpts& o, bool dense) {
    const FieldSpec spec = resolve_field(o);
    const auto [f, label] = resolve_function(spec, o);
    const std::vector<Element> dmap = trace_index_map(spec);
    std::string csv = "u,v,W\n";
    // Rows stream per component v, so memory stays at O(2^n) for any degree.
    for (std::uint32_t v = 0; v < spec.size(); ++v) {
        const SignVector row = walsh_row(f, static_cast<Element>(v), dmap);
        for (std::uint32_t u = 0; u < spec.size(); ++u) {
            if (!dense && row[u] == 0) continue;
            csv += std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(row[u]) + "\n";
        }
    }
    write_output(o.out_path, csv);
    return 0;
}

int run_sums(const CommonOpts& o) {
    const FieldSpec spec = resolve_field(o);
    const auto [f, label] = resolve_function(spec, o);
    const WalshDiagonals diag = gather_walsh_diagonals(f, o.threads);
    const std::vector<int128> per_b = square_sums(diag);

    ordered_json j;
    j["n"] = spec.n;
    j["modulus"] = hex_mask(spec.modulus);
    j["function"] = label;
    j["triple_sum"] = to_string(triple_sum(diag, o.threads));
    ordered_json sq;
    for (std::uint32_t b = 1; b < spec.size(); ++b) sq[hex_mask(b)] = to_string(per_b[b]);
    j["square_sums"] = std::move(sq);
    j["square_sum_total"] = to_string(square_sum_total(diag));
    j["zero_component_square_sum"] = to_string(zero_component_square_sum(diag));
    j["walsh_excess"] = to_string(walsh_excess(diag, o.threads));
    j["moments"] = {{"1", to_string(moment_sum(diag, 1, o.threads))},
                    {"2", to_string(moment_sum(diag, 2, o.threads))},
                    {"3", to_string(moment_sum(diag, 3, o.threads))}};
    const int128 q = spec.size() - 1;
    j["reference"] = {
        {"square_sum_total_o_polynomial", to_string(q * (int128(1) << (2 * spec.n + 1)))},
        {"triple_sum_o_polynomial", to_string(q * (int128(1) << (3 * spec.n + 2)))}};
    write_output(o.out_path, j.dump(2) + "\n");
    return 0;
}

int run_search(const CommonOpts& o, std::uint32_t random_count, std::uint64_t seed) {
    const FieldSpec spec = resolve_field(o);
    ordered_json j;
    j["mode"] = random_count == 0 ? "monomial" : "random";
    j["n"] = spec.n;
    j["modulus"] = hex_mask(spec.modulus);
    if (random_count == 0) {
        if (spec.n > kMaxMonomialSearchDegree)
            throw resource_error("exhaustive monomial search is capped at n = " +
                                 std::to_string(kMaxMonomialSearchDegree));
        std::vector<std::uint32_t> hits;
        for (std::uint32_t d = 1; d <= spec.size() - 2; ++d) {
            const VecFunc f = from_monomial(spec, d);
            if (!check_direct(f)) continue;
            if (!check_walsh(f, o.threads))
                throw std::logic_error("check_direct and check_walsh disagree on mono:" +
                                       std::to_string(d));
            hits.push_back(d);
        }
        j["hits"] = hits;
    } else {
        j["seed"] = seed;
        j["count"] = random_count;
        std::mt19937_64 rng(seed);
        const Element mask = spec.max_element();
        ordered_json hits = ordered_json::array();
        for (std::uint32_t i = 0; i < random_count; ++i) {
            std::vector<Element> table(spec.size());
            for (Element& v : table) v = static_cast<Element>(rng()) & mask;
            const VecFunc f = from_table(spec, table);
            if (!check_direct(f)) continue;
            if (!check_walsh(f, o.threads))
                throw std::logic_error("check_direct and check_walsh disagree on a sampled table");
            ordered_json hit;
            hit["index"] = i;
            std::vector<std::string> hex;
            hex.reserve(table.size());
            for (Element v : table) hex.push_back(hex_mask(v));
            hit["table"] = hex;
            hits.push_back(std::move(hit));
        }
        j["hits"] = std::move(hits);
    }
    write_output(o.out_path, j.dump(2) + "\n");
    return 0;
}

int run_catalog(const CommonOpts& o) {
    const FieldSpec spec = resolve_field(o);
    ordered_json j;
    j["n"] = spec.n;
    j["modulus"] = hex_mask(spec.modulus);
    ordered_json families = ordered_json::array();
    for (const FamilyInstance& inst : list_families(spec.n)) {
        ordered_json entry;
        entry["name"] = inst.name;
        if (inst.param) entry["param"] = *inst.param;
        entry["function"] = terms_label(inst.terms);
        families.push_back(std::move(entry));
    }
    j["families"] = std::move(families);
    write_output(o.out_path, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"o-polynomial / hyperoval toolkit over GF(2^n)"};
    app.require_subcommand(1);

    CommonOpts check_opts;
    bool check_geometry = false;
    std::string points_path;
    CLI::App* check = app.add_subcommand("check", "run every characterization on one function");
    add_field_options(check, check_opts);
    add_function_options(check, check_opts);
    add_output_options(check, check_opts);
    check->add_flag("--geometry", check_geometry, "also run the projective arc oracle (n <= 5)");
    check->add_option("--points", points_path, "dump the candidate point set as CSV here");

    CommonOpts spectrum_opts;
    bool dense = false;
    CLI::App* spectrum = app.add_subcommand("spectrum", "emit Walsh coefficients as CSV");
    add_field_options(spectrum, spectrum_opts);
    add_function_options(spectrum, spectrum_opts);
    add_output_options(spectrum, spectrum_opts);
    spectrum->add_flag("--dense", dense, "emit zero entries too (default: sparse)");

    CommonOpts sums_opts;
    CLI::App* sums = app.add_subcommand("sums", "emit every aggregate Walsh sum as JSON");
    add_field_options(sums, sums_opts);
    add_function_options(sums, sums_opts);
    add_output_options(sums, sums_opts);

    CommonOpts search_opts;
    std::uint32_t random_count = 0;
    std::uint64_t seed = 1;
    CLI::App* search = app.add_subcommand(
        "search", "filter candidates through the direct characterization");
    add_field_options(search, search_opts);
    add_output_options(search, search_opts);
    search->add_option("--random", random_count,
                       "sample this many random value tables instead of all monomials");
    search->add_option("--seed", seed, "PRNG seed for --random (default 1)");

    CommonOpts catalog_opts;
    CLI::App* catalog = app.add_subcommand("catalog", "list named families defined at this degree");
    add_field_options(catalog, catalog_opts);
    add_output_options(catalog, catalog_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_opts, check_geometry, points_path);
        if (spectrum->parsed()) return run_spectrum(spectrum_opts, dense);
        if (sums->parsed()) return run_sums(sums_opts);
        if (search->parsed()) return run_search(search_opts, random_count, seed);
        if (catalog->parsed()) return run_catalog(catalog_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
