#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symext/analytics.hpp"
#include "symext/profinite.hpp"

// Command-line surface. Every command computes a JSON artifact (sweep: CSV);
// text output is rendered from that JSON afterwards, so there is exactly one
// computation path per request. Artifacts are cached content-addressed by a
// fingerprint of all semantic inputs, never by time.

namespace symext {

struct RunConfig {
    std::string command;
    std::string g_token = "C1";
    std::string h_token = "C1";
    std::string action_source = "trivial";  // "trivial" or a JSON file path
    std::string format;                     // json (default) | text; sweep: csv
    std::string out_path;
    std::string cache_dir;  // empty: consult SYMEXT_CACHE_DIR, else disabled
    long long guard = 24;
    bool guard_set = false;
    std::string s_value;  // "re" or "re,im" for zeta evaluation
    long long modulus = 2;
    std::string selector = "max_order";
    long long class_index = 0;
    long long n_max = 4;
    long long m_max = 4;
    long long p = 2;
    long long kmax = 2;
    std::string claims_file;
};

inline AbelianGroup parse_abelian_token(const std::string& token) {
    std::vector<Int> factors;
    size_t pos = 0;
    while (pos < token.size()) {
        size_t next = token.find('x', pos);
        std::string part = token.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.size() < 2 || part[0] != 'C') fail_usage("unknown group token " + token);
        for (size_t i = 1; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail_usage("unknown group token " + token);
        long long n = std::stoll(part.substr(1));
        if (n < 1) fail_usage("unknown group token " + token);
        factors.push_back(Int(n));
        if (next == std::string::npos) break;
        if (next + 1 == token.size()) fail_usage("unknown group token " + token);
        pos = next + 1;
    }
    if (factors.empty()) fail_usage("unknown group token " + token);
    return make_abelian(std::move(factors));
}

inline FiniteGroup parse_group_token(const std::string& token) {
    if (!token.empty() && token[0] == 'S') {
        for (size_t i = 1; i < token.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(token[i]))) fail_usage("unknown group token " + token);
        if (token.size() < 2) fail_usage("unknown group token " + token);
        long long n = std::stoll(token.substr(1));
        if (n < 1 || n > 5) fail_usage("symmetric group token " + token + " is outside S1..S5");
        return make_symmetric_group(static_cast<int>(n));
    }
    if (!token.empty() && token[0] == 'C') return finite_group_view(parse_abelian_token(token));
    fail_usage("unknown group token " + token);
}

inline GroupAction load_action(const FiniteGroup& g, const AbelianGroup& h, const std::string& source) {
    if (source == "trivial") return trivial_action(g, h);
    std::ifstream in(source);
    if (!in) fail_usage("cannot open action file " + source);
    Json j = Json::parse(in, nullptr, true);
    const Json& rows = j.at("matrices");
    if (static_cast<int>(rows.size()) != g.order)
        fail_usage("action file needs one matrix per group element, got " + std::to_string(rows.size()));
    std::vector<IntMatrix> mats;
    mats.reserve(rows.size());
    for (const Json& m : rows) mats.push_back(matrix_from_json(m));
    return make_action(g, h, std::move(mats));
}

// --- text rendering -------------------------------------------------------

namespace detail {

inline bool json_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string scalar_str(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

inline bool array_of_scalars(const Json& j) {
    for (const Json& e : j)
        if (!json_scalar(e)) return false;
    return true;
}

inline void text_walk(const Json& j, int depth, std::ostream& out) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (json_scalar(it.value())) {
                out << pad << it.key() << ": " << scalar_str(it.value()) << "\n";
            } else if (it.value().is_array() && array_of_scalars(it.value())) {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            } else {
                out << pad << it.key() << ":\n";
                text_walk(it.value(), depth + 1, out);
            }
        }
    } else if (j.is_array()) {
        for (const Json& e : j) {
            if (json_scalar(e)) {
                out << pad << "- " << scalar_str(e) << "\n";
            } else {
                out << pad << "-\n";
                text_walk(e, depth + 1, out);
            }
        }
    } else {
        out << pad << scalar_str(j) << "\n";
    }
}

}  // namespace detail

inline std::string render_text(const Json& j) {
    std::ostringstream out;
    detail::text_walk(j, 0, out);
    return out.str();
}

// --- cache ----------------------------------------------------------------

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string cache_directory(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv("SYMEXT_CACHE_DIR")) return env;
    return "";
}

// Returns the artifact bytes for the fingerprint, computing and storing them
// on a miss. With no cache directory configured this is just compute().
inline std::string cached_artifact(const RunConfig& cfg, const std::string& fingerprint,
                                   const std::string& ext, const std::function<std::string()>& compute) {
    std::string dir = cache_directory(cfg);
    if (dir.empty()) return compute();
    std::filesystem::create_directories(dir);
    char name[32];
    std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(fnv1a(fingerprint)));
    std::filesystem::path path = std::filesystem::path(dir) / (std::string(name) + "." + ext);
    if (std::ifstream in{path}) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::string artifact = compute();
    std::ofstream out(path, std::ios::binary);
    out << artifact;
    return artifact;
}

// --- command implementations ----------------------------------------------

namespace detail {

inline Json pair_header(const RunConfig& cfg, const GroupAction& action) {
    return Json{{"g", cfg.g_token}, {"h", cfg.h_token}, {"action", action.is_trivial() ? "trivial" : "custom"}};
}

inline Json stats_json(const CocycleSystemStats& s) {
    return Json{{"h_valued_unknowns", s.h_valued_unknowns},
                {"scalar_unknowns", s.scalar_unknowns},
                {"free_scalar_unknowns", s.free_scalar_unknowns},
                {"rows", s.rows}};
}

inline Json invariants_json(const InvariantReport& r) {
    Json j;
    j["dim"] = r.dim;
    j["stab_centralizer_order"] = json_int(r.stab_centralizer_order);
    j["symmetry_locus_size"] = json_int(r.symmetry_locus_size);
    j["delta_centralizer"] = json_rational(r.delta_centralizer);
    j["delta_pair"] = json_rational(r.delta_pair);
    j["max_order"] = json_int(r.max_order);
    if (r.abelian)
        j["abelian_type"] = json_factors(r.abelian_type);
    else
        j["abelian_type"] = "nonabelian";
    return j;
}

inline Json run_h2(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h, const GroupAction& action) {
    CohomologyGroup h2 = compute_h2(g, h, action, Int(cfg.guard));
    Json j;
    j["pair"] = pair_header(cfg, action);
    j["h2"] = Json{{"factors", json_factors(h2.factors)},
                   {"order", json_int(h2.order)},
                   {"z2_order", json_int(h2.z2_order)},
                   {"b2_order", json_int(h2.b2_order)}};
    j["system"] = stats_json(h2.stats);
    return j;
}

inline Json run_h2ts(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h, const GroupAction& action) {
    SymmetricCohomology ts = compute_h2_ts(g, h, action, Int(cfg.guard));
    Json gens = Json::array();
    for (int t = 0; t < ts.rank(); ++t)
        gens.push_back(Json{{"h2_coords", json_coords(ts.embedding.col(t))},
                            {"representative", json_cochain(ts.generators[static_cast<size_t>(t)])}});
    Json j;
    j["pair"] = pair_header(cfg, action);
    j["h2"] = Json{{"factors", json_factors(ts.h2.factors)}, {"order", json_int(ts.h2.order)}};
    j["h2ts"] = Json{{"factors", json_factors(ts.factors)},
                     {"order", json_int(ts.order)},
                     {"generators", std::move(gens)}};
    j["system"] = stats_json(ts.h2.stats);
    return j;
}

inline Json run_extensions(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h,
                           const GroupAction& action) {
    SymmetricCohomology ts = compute_h2_ts(g, h, action, Int(cfg.guard));
    TsClassCensus census = enumerate_ts_classes(g, h, action, ts);
    Json classes = Json::array();
    for (int i = 0; i < census.classes(); ++i) {
        ExtensionGroup e = build_extension(g, h, action, census.reps[static_cast<size_t>(i)]);
        Json c;
        c["index"] = i;
        c["coords"] = json_coords(census.ts_coords[static_cast<size_t>(i)]);
        c["invariants"] = invariants_json(invariant_report(e));
        classes.push_back(std::move(c));
    }
    Json j;
    j["pair"] = pair_header(cfg, action);
    j["h2ts_factors"] = json_factors(ts.factors);
    j["class_count"] = census.classes();
    j["classes"] = std::move(classes);
    return j;
}

inline Json run_invariants(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h,
                           const GroupAction& action) {
    SymmetricCohomology ts = compute_h2_ts(g, h, action, Int(cfg.guard));
    TsClassCensus census = enumerate_ts_classes(g, h, action, ts);
    if (cfg.class_index < 0 || cfg.class_index >= census.classes())
        fail_usage("class index " + std::to_string(cfg.class_index) + " is out of range, the pair has " +
                   std::to_string(census.classes()) + " classes");
    const auto idx = static_cast<size_t>(cfg.class_index);
    ExtensionGroup e = build_extension(g, h, action, census.reps[idx]);
    Json j;
    j["pair"] = pair_header(cfg, action);
    j["class_index"] = cfg.class_index;
    j["coords"] = json_coords(census.ts_coords[idx]);
    j["invariants"] = invariants_json(invariant_report(e));
    return j;
}

inline Json run_density(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h,
                        const GroupAction& action) {
    SymmetricCohomology ts = compute_h2_ts(g, h, action, Int(cfg.guard));
    Json j;
    j["pair"] = pair_header(cfg, action);
    j["h2ts_order"] = json_int(ts.order);
    Rational d = extension_density(ts);
    j["density"] = json_rational(d);
    if (is_cyclic(g) && h.k() <= 1 && action.is_trivial()) {
        Rational formula(int_gcd(Int(g.order), h.order), Int(g.order) * h.order);
        j["paper_formula"] = json_rational(formula);
        j["matches_formula"] = d == formula;
    } else {
        j["paper_formula"] = nullptr;
        j["matches_formula"] = nullptr;
    }
    return j;
}

inline std::complex<double> parse_s(const std::string& s) {
    try {
        size_t used = 0;
        double re = std::stod(s, &used);
        if (used == s.size()) return {re, 0.0};
        if (s[used] != ',') throw std::invalid_argument(s);
        double im = std::stod(s.substr(used + 1));
        return {re, im};
    } catch (const std::exception&) {
        fail_usage("cannot parse complex value " + s + ", expected re or re,im");
    }
}

inline Json run_zeta(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h, const GroupAction& action) {
    ZetaSeries z = zeta_series(g, h, action, Int(cfg.guard));
    Json j;
    j["pair"] = pair_header(cfg, action);
    j["zeta"] = json_zeta(z);
    if (!cfg.s_value.empty()) {
        std::complex<double> s = parse_s(cfg.s_value);
        std::complex<double> v = z.eval(s);
        j["eval"] = Json{{"s", Json{{"re", s.real()}, {"im", s.imag()}}},
                         {"value", Json{{"re", v.real()}, {"im", v.imag()}}}};
    }
    return j;
}

inline Json run_histogram(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h,
                          const GroupAction& action) {
    SymmetricCohomology ts = compute_h2_ts(g, h, action, Int(cfg.guard));
    TsClassCensus census = enumerate_ts_classes(g, h, action, ts);
    Histogram hist = modular_histogram(g, h, census, selector_from_name(cfg.selector), Int(cfg.modulus));
    Json j;
    j["pair"] = pair_header(cfg, action);
    j["histogram"] = json_histogram(hist);
    return j;
}

inline Json run_claims(const RunConfig& cfg, const FiniteGroup& g, const AbelianGroup& h,
                       const GroupAction& action, const std::string& manifest) {
    std::vector<ClaimSpec> specs =
        manifest.empty() ? default_claim_specs() : claim_specs_from_json(Json::parse(manifest));
    ClaimReport r = verify_claims(g, h, action, specs, Int(cfg.guard), cfg.g_token, cfg.h_token,
                                  action.is_trivial() ? "trivial" : "custom");
    return json_claim_report(r);
}

inline Json run_tower(const RunConfig& cfg) {
    long long level_guard = cfg.guard_set ? cfg.guard : 16;
    Tower t = build_cyclic_tower(cfg.p, static_cast<int>(cfg.kmax), level_guard);
    AbelianGroup h = parse_abelian_token(cfg.h_token);
    TowerReport r = tower_cohomology_system(t, h, Int(cfg.guard));
    return json_tower_report(r);
}

inline std::string csv_cell_statuses(const ClaimReport& r) {
    std::string out;
    for (const ClaimEntry& c : r.claims) {
        if (!out.empty()) out += ';';
        out += c.id + "=" + c.status;
    }
    return out;
}

inline std::string run_sweep(const RunConfig& cfg) {
    if (cfg.n_max < 0 || cfg.m_max < 0) fail_usage("sweep ranges must be nonnegative");
    if (cfg.n_max > cfg.guard || cfg.m_max > cfg.guard)
        fail("sweep range exceeds the size guard " + std::to_string(cfg.guard));
    std::string csv = "n,m,class_count,density,paper_density,max_orders,claim_statuses\n";
    for (long long n = 1; n <= cfg.n_max; ++n)
        for (long long m = 1; m <= cfg.m_max; ++m) {
            FiniteGroup g = finite_group_view(make_cyclic(n));
            AbelianGroup h = make_cyclic(m);
            GroupAction triv = trivial_action(g, h);
            SymmetricCohomology ts = compute_h2_ts(g, h, triv, Int(cfg.guard));
            TsClassCensus census = enumerate_ts_classes(g, h, triv, ts);
            ClaimReport claims = verify_claims(g, h, triv, default_claim_specs(), Int(cfg.guard));
            std::string orders;
            for (int i = 0; i < census.classes(); ++i) {
                if (i) orders += ';';
                orders += census.max_orders[static_cast<size_t>(i)].str();
            }
            Rational formula(int_gcd(Int(n), Int(m)), Int(n) * m);
            csv += std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(census.classes()) +
                   "," + rational_str(extension_density(ts)) + "," + rational_str(formula) + "," + orders +
                   "," + csv_cell_statuses(claims) + "\n";
        }
    return csv;
}

}  // namespace detail

// --- driver -----------------------------------------------------------------

inline std::string read_file_or_die(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_usage("cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void emit(const RunConfig& cfg, const std::string& artifact) {
    if (cfg.out_path.empty()) {
        std::cout << artifact;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) fail("cannot write output file " + cfg.out_path);
    out << artifact;
}

inline int execute(const RunConfig& cfg) {
    static const std::vector<std::string> commands = {"h2",   "h2ts",      "extensions", "invariants", "density",
                                                      "zeta", "histogram", "claims",     "sweep",      "tower"};
    if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
        fail_usage("unknown command " + cfg.command);
    if (cfg.guard < 1) fail_usage("size guard must be positive");

    const bool is_sweep = cfg.command == "sweep";
    std::string format = cfg.format.empty() ? (is_sweep ? "csv" : "json") : cfg.format;
    if (is_sweep && format != "csv") fail_usage("sweep emits csv only");
    if (!is_sweep && format != "json" && format != "text") fail_usage("unknown output format " + format);

    // fingerprint: every semantic input, with file arguments taken by content
    std::string action_content =
        cfg.action_source == "trivial" ? std::string("trivial") : read_file_or_die(cfg.action_source);
    std::string manifest = cfg.claims_file.empty() ? "" : read_file_or_die(cfg.claims_file);
    std::ostringstream fp;
    fp << "v1\n"
       << cfg.command << "\n"
       << cfg.g_token << "\n"
       << cfg.h_token << "\n"
       << action_content << "\n"
       << cfg.guard << "\n"
       << cfg.s_value << "\n"
       << cfg.modulus << "\n"
       << cfg.selector << "\n"
       << cfg.class_index << "\n"
       << cfg.n_max << "," << cfg.m_max << "\n"
       << cfg.p << "," << cfg.kmax << "\n"
       << manifest << "\n";

    std::string artifact = cached_artifact(cfg, fp.str(), is_sweep ? "csv" : "json", [&]() -> std::string {
        if (is_sweep) return detail::run_sweep(cfg);
        if (cfg.command == "tower") return detail::run_tower(cfg).dump(2) + "\n";
        FiniteGroup g = parse_group_token(cfg.g_token);
        AbelianGroup h = parse_abelian_token(cfg.h_token);
        GroupAction action = load_action(g, h, cfg.action_source);
        Json j;
        if (cfg.command == "h2") j = detail::run_h2(cfg, g, h, action);
        else if (cfg.command == "h2ts") j = detail::run_h2ts(cfg, g, h, action);
        else if (cfg.command == "extensions") j = detail::run_extensions(cfg, g, h, action);
        else if (cfg.command == "invariants") j = detail::run_invariants(cfg, g, h, action);
        else if (cfg.command == "density") j = detail::run_density(cfg, g, h, action);
        else if (cfg.command == "zeta") j = detail::run_zeta(cfg, g, h, action);
        else if (cfg.command == "histogram") j = detail::run_histogram(cfg, g, h, action);
        else if (cfg.command == "claims") j = detail::run_claims(cfg, g, h, action, manifest);
        else fail("unhandled command " + cfg.command);
        return j.dump(2) + "\n";
    });

    int code = 0;
    if (cfg.command == "claims") {
        Json j = Json::parse(artifact);
        for (const Json& c : j.at("claims"))
            if (c.at("status") == "REFUTED") code = 3;
    }
    if (!is_sweep && format == "text") {
        emit(cfg, render_text(Json::parse(artifact)));
    } else {
        emit(cfg, artifact);
    }
    return code;
}

inline int run_cli(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"exact classification of symmetric-cocycle extensions"};
    app.set_help_flag("--help", "print usage");
    app.add_option("command", cfg.command,
                   "one of: h2 h2ts extensions invariants density zeta histogram claims sweep tower")
        ->required();
    app.add_option("--g", cfg.g_token, "base group token: C<n>, C<a>xC<b>..., or S<n>");
    app.add_option("--h", cfg.h_token, "coefficient group token: product of C<n>");
    app.add_option("--action", cfg.action_source, "trivial, or a JSON file with one matrix per element of G");
    app.add_option("--format", cfg.format, "json or text (sweep: csv)");
    app.add_option("--out", cfg.out_path, "write the artifact to this path instead of stdout");
    app.add_option("--cache", cfg.cache_dir, "cache directory; default $SYMEXT_CACHE_DIR, unset disables");
    CLI::Option* guard_opt = app.add_option("--guard", cfg.guard, "size guard on |G| (default 24)");
    app.add_option("--s", cfg.s_value, "zeta evaluation point, re or re,im");
    app.add_option("--modulus", cfg.modulus, "histogram modulus (default 2)");
    app.add_option("--selector", cfg.selector, "histogram selector: max_order, class_index, extension_order");
    app.add_option("--class-index", cfg.class_index, "class inspected by the invariants command");
    app.add_option("--n-max", cfg.n_max, "sweep bound on |G|");
    app.add_option("--m-max", cfg.m_max, "sweep bound on |H|");
    app.add_option("--p", cfg.p, "tower prime");
    app.add_option("--kmax", cfg.kmax, "tower height");
    app.add_option("--claims-file", cfg.claims_file, "claim manifest JSON; default is the built-in registry");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.guard_set = guard_opt->count() > 0;
    try {
        return execute(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace symext
