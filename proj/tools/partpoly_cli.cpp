// Command-line front end: expands the partition-statistic generating
// functions, runs divisibility/congruence certification, and emits root /
// figure artifacts. Exit codes: 0 success, 1 a mathematical assertion failed
// (machine-readable witness on stderr), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partpoly/partpoly.hpp"

using nlohmann::json;
using namespace partpoly;

namespace {

struct RunConfig {
    std::string family;
    std::string kind;
    std::string divisor = "phi";
    int t = 0;
    long ell = 0;
    long residue = -1;
    bool residue_set = false;
    long n = -1;
    long n_max = -1;
    long truncation = -1;
    double tolerance = 1e-10;
    int bins = 40;
    double delta = 0.05;
    bool strict = false;
    int jobs = 0;
    std::string out;
    std::string svg;
    std::string csv;
};

void emit_witness(const std::string& command, const std::string& family, long n,
                  const std::string& expected, const std::string& actual,
                  const std::string& context) {
    json w{{"command", command}, {"family", family},   {"n", n},
           {"expected", expected}, {"actual", actual}, {"context", context}};
    std::cerr << w.dump() << "\n";
}

// Output sink: --out when given, else stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

Statistic statistic_from_name(const std::string& fam) {
    if (fam == "rank") return Statistic::Rank;
    if (fam == "crank") return Statistic::Crank;
    if (fam == "spt-crank") return Statistic::SptCrank;
    if (fam == "o-rank") return Statistic::ORank;
    if (fam == "unimodal") return Statistic::UnimodalRank;
    if (fam == "strongly-unimodal") return Statistic::StronglyUnimodalRank;
    if (fam == "thook") return Statistic::THook;
    if (fam == "wagner" || fam == "wagner-printed") return Statistic::WagnerCrank;
    if (fam == "tcore") return Statistic::TCoreCrank;
    if (fam == "parts") return Statistic::PartsCount;
    throw CLI::ValidationError("unknown family: " + fam);
}

std::vector<LaurentPoly> expand_family(const std::string& fam, int t, long T) {
    if (fam == "rank") return expand_rank(T);
    if (fam == "crank") return expand_crank(T);
    if (fam == "spt-crank") return expand_spt_crank(std::max(T, 1L));
    if (fam == "o-rank") return expand_orank(T);
    if (fam == "unimodal") return expand_unimodal(T);
    if (fam == "strongly-unimodal") return expand_strongly_unimodal(T);
    if (fam == "thook") return expand_thook(t, T);
    if (fam == "wagner") return expand_wagner_crank(T, WagnerVariant::Symmetric);
    if (fam == "wagner-printed") return expand_wagner_crank(T, WagnerVariant::AsPrinted);
    throw CLI::ValidationError("family has no q-series expansion: " + fam);
}

StatTable oracle_family(const std::string& fam, int t, long n, bool /*strict*/) {
    int ni = static_cast<int>(n);
    if (fam == "rank") return oracle_rank(ni);
    if (fam == "crank") return oracle_crank(ni);
    if (fam == "spt-crank") return oracle_spt_crank(ni);
    if (fam == "o-rank") return oracle_orank(ni);
    if (fam == "unimodal") return oracle_unimodal(ni, false);
    if (fam == "strongly-unimodal") return oracle_unimodal(ni, true);
    if (fam == "thook") return oracle_thook(t, ni);
    if (fam == "tcore") return oracle_tcore_crank(t, ni);
    throw CLI::ValidationError("family has no enumeration oracle: " + fam);
}

long oracle_cap(const std::string& fam) {
    if (fam == "rank" || fam == "crank") return 40;
    if (fam == "spt-crank" || fam == "unimodal" || fam == "strongly-unimodal") return 25;
    if (fam == "o-rank") return 20;
    if (fam == "thook") return 30;
    if (fam == "tcore") return 20;
    return 40;
}

StatTable stat_table_for(const std::string& fam, int t, long n) {
    if (fam == "parts") return parts_count_table(n);
    if (fam == "thook") {
        auto rows = expand_thook(t, n);
        return table_from_row(Statistic::THook, t, n, rows[static_cast<std::size_t>(n)]);
    }
    auto rows = expand_family(fam, t, n);
    return table_from_row(statistic_from_name(fam), 0, n, rows[static_cast<std::size_t>(n)]);
}

int cmd_expand(const RunConfig& cfg) {
    long T = cfg.truncation >= 0 ? cfg.truncation : cfg.n_max;
    Sink sink(cfg.out);
    if (cfg.family == "tcore") {
        auto tables = tcore_crank_tables(cfg.t, T);
        write_csv(sink.stream(), std::span<const StatTable>(tables.data(), tables.size()));
        return 0;
    }
    if (cfg.family == "parts") {
        std::vector<StatTable> tables;
        for (long n = 1; n <= T; ++n) tables.push_back(parts_count_table(n));
        write_csv(sink.stream(), std::span<const StatTable>(tables.data(), tables.size()));
        return 0;
    }
    auto rows = expand_family(cfg.family, cfg.t, T);
    write_csv(sink.stream(), std::span<const LaurentPoly>(rows.data(), rows.size()));
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    long lo = cfg.n >= 0 ? cfg.n : (cfg.family == "spt-crank" ? 1 : 0);
    long hi = cfg.n >= 0 ? cfg.n : cfg.n_max;
    Sink sink(cfg.out);
    std::vector<StatTable> tables;
    for (long n = lo; n <= hi; ++n) tables.push_back(oracle_family(cfg.family, cfg.t, n, cfg.strict));
    write_csv(sink.stream(), std::span<const StatTable>(tables.data(), tables.size()));
    return 0;
}

int cmd_divide(const RunConfig& cfg) {
    auto rows = expand_family(cfg.family, cfg.t, cfg.n_max);
    Sink sink(cfg.out);
    json reports = json::array();
    int rc = 0;
    long start = cfg.residue_set ? cfg.residue : 0;
    long step = cfg.residue_set ? cfg.ell : 1;
    for (long n = start; n <= cfg.n_max; n += step) {
        auto rep = check_divisibility(rows[static_cast<std::size_t>(n)], cfg.ell, cfg.family, n);
        reports.push_back(report_to_json(rep));
        if (cfg.residue_set && !rep.divisible && rc == 0) {
            emit_witness("divide", cfg.family, n, "divisible by Phi_" + std::to_string(cfg.ell),
                         "nonzero remainder", "progression " + std::to_string(cfg.ell) + "n+" +
                                                  std::to_string(cfg.residue));
            rc = 1;
        }
    }
    sink.stream() << reports.dump(2) << "\n";
    return rc;
}

int cmd_congruence(const RunConfig& cfg) {
    std::vector<Integer> values;
    if (cfg.family == "p") {
        auto rows = expand_crank(cfg.n_max);
        for (auto& r : rows) values.push_back(r.eval_at_one());
    } else if (cfg.family == "spt") {
        auto rows = expand_spt_crank(cfg.n_max);
        for (auto& r : rows) values.push_back(r.eval_at_one());
    } else if (cfg.family == "ppbar") {
        auto rows = expand_orank(cfg.n_max);
        for (auto& r : rows) values.push_back(r.eval_at_one());
    } else if (cfg.family == "tcore") {
        auto tables = tcore_crank_tables(cfg.t, cfg.n_max);
        for (auto& t : tables) values.push_back(t.total());
    } else {
        throw CLI::ValidationError("congruence family must be p, spt, ppbar or tcore");
    }
    auto entries = congruence_sweep(values, cfg.ell, cfg.residue);
    Sink sink(cfg.out);
    sink.stream() << "n,value,value_mod\n";
    int rc = 0;
    for (const auto& e : entries) {
        sink.stream() << e.n << "," << e.value.str() << "," << e.value_mod << "\n";
        if (e.value_mod != 0 && rc == 0) {
            emit_witness("congruence", cfg.family, e.n, "0 (mod " + std::to_string(cfg.ell) + ")",
                         e.value.str() + " = " + std::to_string(e.value_mod) + " (mod " +
                             std::to_string(cfg.ell) + ")",
                         "progression " + std::to_string(cfg.ell) + "n+" + std::to_string(cfg.residue));
            rc = 1;
        }
    }
    return rc;
}

int cmd_search(const RunConfig& cfg) {
    auto rows = expand_family(cfg.family, cfg.t, cfg.n_max);
    LaurentPoly divisor = cfg.divisor == "phi2w2"
                              ? LaurentPoly::from_coeffs(0, {Integer(1), Integer(0), Integer(1)})
                              : cyclotomic(cfg.ell);
    auto res = search_progressions(rows, cfg.ell, divisor);
    json j;
    j["command"] = "search";
    j["family"] = cfg.family;
    j["mod"] = cfg.ell;
    j["divisor"] = cfg.divisor == "phi2w2" ? "Phi_2(w^2)" : "Phi_" + std::to_string(cfg.ell) + "(w)";
    j["n_max"] = cfg.n_max;
    j["note"] = "empirical over the tested range; no completeness claimed";
    j["full_residues"] = res.full_residues;
    json scans = json::array();
    for (const auto& s : res.scans) {
        json sj{{"residue", s.residue}, {"tested", s.tested}, {"all_divisible", s.all_divisible}};
        if (s.first_failure) sj["first_failure"] = *s.first_failure;
        scans.push_back(std::move(sj));
    }
    j["scans"] = std::move(scans);
    Sink sink(cfg.out);
    sink.stream() << j.dump(2) << "\n";
    return 0;
}

int cmd_stanton(const RunConfig& cfg) {
    Statistic kind = cfg.kind == "rank" ? Statistic::Rank : Statistic::Crank;
    long top_index = cfg.ell * cfg.n_max + stanton_beta(cfg.ell);
    auto rows = kind == Statistic::Rank ? expand_rank(top_index) : expand_crank(top_index);
    Sink sink(cfg.out);
    json reports = json::array();
    int rc = 0;
    for (long n = 0; n <= cfg.n_max; ++n) {
        auto f = stanton_modified(kind, cfg.ell, n, rows);
        auto rep = check_divisibility(f, cfg.ell, cfg.kind + "*", n);
        reports.push_back(report_to_json(rep));
        bool ok = rep.divisible && rep.quotient_nonnegative && *rep.quotient_nonnegative;
        if (!ok && rc == 0) {
            emit_witness("stanton", cfg.kind + "*", n,
                         "divisible by Phi_" + std::to_string(cfg.ell) + " with non-negative quotient",
                         rep.divisible ? "negative quotient coefficient" : "not divisible",
                         "modified polynomial at index " + std::to_string(cfg.ell * n + stanton_beta(cfg.ell)));
            rc = 1;
        }
    }
    sink.stream() << reports.dump(2) << "\n";
    return rc;
}

int cmd_tcore(const RunConfig& cfg) {
    Sink sink(cfg.out);
    long hi = cfg.n >= 0 ? cfg.n : cfg.n_max;
    auto tables = tcore_crank_tables(cfg.t, hi);
    if (cfg.n >= 0) {
        std::vector<StatTable> one{tables.back()};
        write_csv(sink.stream(), std::span<const StatTable>(one.data(), one.size()));
    } else {
        write_csv(sink.stream(), std::span<const StatTable>(tables.data(), tables.size()));
    }
    return 0;
}

int cmd_roots(const RunConfig& cfg, bool with_profile) {
    auto table = stat_table_for(cfg.family, cfg.t, cfg.n);
    auto poly = principal_poly(table);
    RootSet rs;
    try {
        rs = solve_roots(poly, cfg.tolerance);
    } catch (const NoConvergenceError& e) {
        emit_witness("roots", cfg.family, cfg.n, "residual_scale <= " + std::to_string(cfg.tolerance),
                     std::to_string(e.worst_residual), "solver did not converge");
        return 1;
    }
    if (!cfg.csv.empty()) {
        std::ofstream f(cfg.csv);
        write_roots_csv(rs, f);
    }
    if (!cfg.svg.empty()) {
        std::ofstream f(cfg.svg);
        write_roots_svg(rs, f);
    }
    json j;
    j["command"] = with_profile ? "figure" : "roots";
    j["family"] = cfg.family;
    if (cfg.t) j["t"] = cfg.t;
    j["n"] = cfg.n;
    j["degree"] = rs.degree;
    j["doubled"] = poly.doubled;
    j["residual_scale"] = rs.residual_scale;
    j["star_discrepancy"] = star_discrepancy(rs);
    auto et = erdos_turan_L(poly);
    j["log_L_over_d"] = et.log_L_over_d;
    if (with_profile) {
        auto prof = radial_profile(rs, cfg.bins, cfg.delta);
        json pj{{"bins", cfg.bins},       {"lo", prof.lo},           {"hi", prof.hi},
                {"min_mod", prof.min_mod}, {"max_mod", prof.max_mod}, {"mean_mod", prof.mean_mod},
                {"sporadic", prof.sporadic}, {"delta", prof.delta},   {"peaks", prof.peaks},
                {"bin_counts", prof.bin_counts}};
        j["radial_profile"] = std::move(pj);
    }
    Sink sink(cfg.out);
    sink.stream() << j.dump(2) << "\n";
    return 0;
}

int cmd_discrepancy(const RunConfig& cfg, const std::string& n_list, int jobs) {
    std::vector<long> ns;
    std::stringstream ss(n_list);
    for (std::string item; std::getline(ss, item, ',');) ns.push_back(std::stol(item));
    if (ns.empty()) throw CLI::ValidationError("--n-list must name at least one n");
    long n_top = *std::max_element(ns.begin(), ns.end());

    std::vector<StatTable> tables(ns.size());
    if (cfg.family == "parts") {
        for (std::size_t i = 0; i < ns.size(); ++i) tables[i] = parts_count_table(ns[i]);
    } else if (cfg.family == "thook") {
        auto rows = expand_thook(cfg.t, n_top);
        for (std::size_t i = 0; i < ns.size(); ++i)
            tables[i] = table_from_row(Statistic::THook, cfg.t, ns[i], rows[static_cast<std::size_t>(ns[i])]);
    } else {
        auto rows = expand_family(cfg.family, cfg.t, n_top);
        for (std::size_t i = 0; i < ns.size(); ++i)
            tables[i] = table_from_row(statistic_from_name(cfg.family), 0, ns[i],
                                       rows[static_cast<std::size_t>(ns[i])]);
    }

    struct Row {
        long n, degree;
        double dstar, logl, residual;
    };
    std::vector<Row> out(ns.size());
    std::exception_ptr error;
    parallel_for(0, static_cast<long>(ns.size()), jobs, [&](long i) {
        try {
            auto poly = principal_poly(tables[static_cast<std::size_t>(i)]);
            auto rs = solve_roots(poly, cfg.tolerance);
            out[static_cast<std::size_t>(i)] = {ns[static_cast<std::size_t>(i)], rs.degree,
                                                star_discrepancy(rs), erdos_turan_L(poly).log_L_over_d,
                                                rs.residual_scale};
        } catch (...) {
            error = std::current_exception();
        }
    });
    if (error) std::rethrow_exception(error);

    Sink sink(cfg.out);
    char buf[200];
    sink.stream() << "n,degree,star_discrepancy,log_L_over_d,residual_scale\n";
    for (const auto& r : out) {
        std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g,%.17g\n", r.n, r.degree, r.dstar, r.logl,
                      r.residual);
        sink.stream() << buf;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partpoly: exact partition-polynomial toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file pre-setting any flag (flags override)");
    app.get_config_formatter_base()->valueSeparator('=');

    RunConfig cfg;
    cfg.jobs = default_jobs();
    app.add_option("--jobs", cfg.jobs, "worker cap (default: PARTPOLY_JOBS or hardware)")
        ->check(CLI::PositiveNumber);

    const std::vector<std::string> series_families{"rank",     "crank",          "spt-crank",
                                                   "o-rank",   "unimodal",       "strongly-unimodal",
                                                   "thook",    "wagner",         "wagner-printed"};
    std::vector<std::string> expand_families = series_families;
    expand_families.push_back("tcore");
    expand_families.push_back("parts");
    const std::vector<std::string> oracle_families{"rank",    "crank",   "spt-crank",
                                                   "o-rank",  "unimodal", "strongly-unimodal",
                                                   "thook",   "tcore"};
    const std::vector<std::string> roots_families{"rank",     "crank", "spt-crank", "o-rank",
                                                  "unimodal", "strongly-unimodal", "thook",
                                                  "wagner",   "parts"};

    auto add_t = [&cfg](CLI::App* sub) {
        return sub->add_option("--t", cfg.t, "parameter t (thook: t >= 2; tcore: 5, 7 or 11)");
    };
    auto needs_valid_t = [&cfg](const std::string& cmd) {
        if (cfg.family == "thook" && cfg.t < 2)
            throw CLI::ValidationError(cmd + ": --family thook requires --t >= 2");
        if (cfg.family == "tcore" && cfg.t != 5 && cfg.t != 7 && cfg.t != 11)
            throw CLI::ValidationError(cmd + ": t-core crank is defined only for t in {5,7,11}");
    };

    auto* s_expand = app.add_subcommand("expand", "expand a family's coefficient rows to CSV");
    s_expand->add_option("--family", cfg.family)->required()->check(CLI::IsMember(expand_families));
    add_t(s_expand);
    s_expand->add_option("--n-max", cfg.n_max)->required()->check(CLI::NonNegativeNumber);
    s_expand->add_option("--truncation", cfg.truncation)->check(CLI::NonNegativeNumber);
    s_expand->add_option("--out", cfg.out);

    auto* s_oracle = app.add_subcommand("oracle", "enumeration-oracle tables to CSV (desk scale)");
    s_oracle->add_option("--family", cfg.family)->required()->check(CLI::IsMember(oracle_families));
    add_t(s_oracle);
    s_oracle->add_option("--n", cfg.n)->check(CLI::NonNegativeNumber);
    s_oracle->add_option("--n-max", cfg.n_max)->check(CLI::NonNegativeNumber);
    s_oracle->add_option("--out", cfg.out);

    auto* s_divide = app.add_subcommand("divide", "cyclotomic divisibility reports (JSON)");
    s_divide->add_option("--family", cfg.family)->required()->check(CLI::IsMember(series_families));
    add_t(s_divide);
    s_divide->add_option("--mod", cfg.ell)->required()->check(CLI::PositiveNumber);
    s_divide->add_option("--residue", cfg.residue)->check(CLI::NonNegativeNumber);
    s_divide->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
    s_divide->add_option("--out", cfg.out);

    auto* s_cong = app.add_subcommand("congruence", "verify a Ramanujan-type congruence sweep");
    s_cong->add_option("--family", cfg.family)
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"p", "spt", "ppbar", "tcore"}));
    add_t(s_cong);
    s_cong->add_option("--mod", cfg.ell)->required()->check(CLI::PositiveNumber);
    s_cong->add_option("--residue", cfg.residue)->required()->check(CLI::NonNegativeNumber);
    s_cong->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
    s_cong->add_option("--out", cfg.out);

    auto* s_search = app.add_subcommand("search", "scan residues for full divisibility (empirical)");
    s_search->add_option("--family", cfg.family)->required()->check(CLI::IsMember(series_families));
    add_t(s_search);
    s_search->add_option("--mod", cfg.ell)->required()->check(CLI::PositiveNumber);
    s_search->add_option("--divisor", cfg.divisor)
        ->check(CLI::IsMember(std::vector<std::string>{"phi", "phi2w2"}));
    s_search->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
    s_search->add_option("--out", cfg.out);

    auto* s_stanton = app.add_subcommand("stanton", "check the modified rank/crank quotients");
    s_stanton->add_option("--kind", cfg.kind)
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"rank", "crank"}));
    s_stanton->add_option("--mod", cfg.ell)->required()->check(CLI::PositiveNumber);
    s_stanton->add_option("--n-max", cfg.n_max)->required()->check(CLI::NonNegativeNumber);
    s_stanton->add_option("--out", cfg.out);

    auto* s_tcore = app.add_subcommand("tcore", "t-core crank residue tables (CSV)");
    s_tcore->add_option("--t", cfg.t)->required()->check(CLI::IsMember(std::vector<int>{5, 7, 11}));
    s_tcore->add_option("--n", cfg.n)->check(CLI::NonNegativeNumber);
    s_tcore->add_option("--n-max", cfg.n_max)->check(CLI::NonNegativeNumber);
    s_tcore->add_option("--out", cfg.out);

    auto* s_roots = app.add_subcommand("roots", "solve a principal polynomial's roots");
    s_roots->add_option("--family", cfg.family)->required()->check(CLI::IsMember(roots_families));
    add_t(s_roots);
    s_roots->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
    s_roots->add_option("--tolerance", cfg.tolerance);
    s_roots->add_option("--out", cfg.out, "summary JSON path (default stdout)");
    s_roots->add_option("--csv", cfg.csv, "roots CSV path");
    s_roots->add_option("--svg", cfg.svg, "scatter SVG path");

    auto* s_disc = app.add_subcommand("discrepancy", "star discrepancy / Erdos-Turan trend table");
    std::string n_list = "50,100,150,200";
    s_disc->add_option("--family", cfg.family)->required()->check(CLI::IsMember(roots_families));
    add_t(s_disc);
    s_disc->add_option("--n-list", n_list, "comma-separated n values");
    s_disc->add_option("--tolerance", cfg.tolerance);
    s_disc->add_option("--out", cfg.out);

    auto* s_figure = app.add_subcommand("figure", "roots + radial profile figure artifacts");
    s_figure->add_option("--family", cfg.family)->required()->check(CLI::IsMember(roots_families));
    add_t(s_figure);
    s_figure->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
    s_figure->add_option("--tolerance", cfg.tolerance);
    s_figure->add_option("--bins", cfg.bins)->check(CLI::PositiveNumber);
    s_figure->add_option("--delta", cfg.delta);
    s_figure->add_option("--out", cfg.out);
    s_figure->add_option("--csv", cfg.csv);
    s_figure->add_option("--svg", cfg.svg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.residue_set = cfg.residue >= 0;
        if (cfg.truncation >= 0 && cfg.n_max >= 0 && cfg.truncation < cfg.n_max)
            throw CLI::ValidationError("--truncation must be >= --n-max");
        if (!(cfg.tolerance > 0 && cfg.tolerance <= 1e-4))
            throw CLI::ValidationError("--tolerance must lie in (0, 1e-4]");

        if (s_expand->parsed()) {
            needs_valid_t("expand");
            return cmd_expand(cfg);
        }
        if (s_oracle->parsed()) {
            needs_valid_t("oracle");
            if (cfg.n < 0 && cfg.n_max < 0)
                throw CLI::ValidationError("oracle: give --n or --n-max");
            long top = cfg.n >= 0 ? cfg.n : cfg.n_max;
            if (top > oracle_cap(cfg.family))
                throw CLI::ValidationError("oracle: enumeration for " + cfg.family +
                                           " is capped at n <= " + std::to_string(oracle_cap(cfg.family)));
            return cmd_oracle(cfg);
        }
        if (s_divide->parsed()) {
            needs_valid_t("divide");
            if (!is_prime(cfg.ell)) throw CLI::ValidationError("divide: --mod must be prime");
            if (cfg.residue >= 0 && cfg.residue >= cfg.ell)
                throw CLI::ValidationError("divide: --residue must be < --mod");
            return cmd_divide(cfg);
        }
        if (s_cong->parsed()) {
            if (cfg.family == "tcore" && cfg.t != 5 && cfg.t != 7 && cfg.t != 11)
                throw CLI::ValidationError("congruence: t-core requires --t in {5,7,11}");
            return cmd_congruence(cfg);
        }
        if (s_search->parsed()) {
            needs_valid_t("search");
            return cmd_search(cfg);
        }
        if (s_stanton->parsed()) {
            bool rank_kind = cfg.kind == "rank";
            if ((rank_kind && cfg.ell != 5 && cfg.ell != 7) ||
                (!rank_kind && cfg.ell != 5 && cfg.ell != 7 && cfg.ell != 11))
                throw CLI::ValidationError("stanton: rank* allows mod 5,7; crank* allows mod 5,7,11");
            return cmd_stanton(cfg);
        }
        if (s_tcore->parsed()) {
            if (cfg.n < 0 && cfg.n_max < 0) throw CLI::ValidationError("tcore: give --n or --n-max");
            return cmd_tcore(cfg);
        }
        if (s_roots->parsed()) {
            needs_valid_t("roots");
            return cmd_roots(cfg, false);
        }
        if (s_disc->parsed()) {
            needs_valid_t("discrepancy");
            return cmd_discrepancy(cfg, n_list, cfg.jobs);
        }
        if (s_figure->parsed()) {
            needs_valid_t("figure");
            return cmd_roots(cfg, true);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedModulusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfScopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        emit_witness("internal", cfg.family, cfg.n, "successful run", e.what(), "unhandled failure");
        return 1;
    }
    return 2;
}
