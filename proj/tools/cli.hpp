#pragma once

// Command-line driver. run() is kept separate from main() so the tests can
// drive it with in-memory streams.

#include "dedekind_lab/dedekind_lab.hpp"
#include "suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dlab::cli {

enum ExitCode : int { ok = 0, gate_failure = 1, usage_error = 2, budget_refusal = 3 };

struct Cell {
    std::string text;
    bool numeric = false;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

inline Cell text(std::string s) { return {std::move(s), false}; }
inline Cell integer(i64 v) { return {std::to_string(v), true}; }
inline Cell boolean(bool b) { return {b ? "true" : "false", false}; }
inline Cell rational(const ExactRational& r) { return {format_rational(r), false}; }

inline Cell real(double v, int digits) {
    if (!std::isfinite(v)) return {"nan", false};
    return {suites::fmt(v, digits), true};
}

inline std::string join_digits(const std::vector<i64>& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? " " : "") + std::to_string(ds[i]);
    return out;
}

inline void render(const Table& t, const std::string& format, std::ostream& out) {
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : t.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                const Cell& c = r[i];
                if (c.numeric)
                    obj[t.columns[i]] = nlohmann::ordered_json::parse(c.text);
                else if (c.text == "true" || c.text == "false")
                    obj[t.columns[i]] = (c.text == "true");
                else
                    obj[t.columns[i]] = c.text;
            }
            rows.push_back(std::move(obj));
        }
        out << rows.dump(2) << "\n";
        return;
    }
    const char sep = format == "tsv" ? '\t' : ',';
    auto emit = [&](const std::string& s) {
        if (sep == ',' && s.find_first_of(",\"\n") != std::string::npos) {
            out << '"';
            for (char ch : s) out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
            out << '"';
        } else {
            out << s;
        }
    };
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out << sep;
        emit(t.columns[i]);
    }
    out << "\n";
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out << sep;
            emit(r[i].text);
        }
        out << "\n";
    }
}

inline Table checks_table(const std::vector<suites::Check>& checks) {
    Table t{{"check", "status", "detail", "provenance"}, {}};
    for (const auto& c : checks) t.rows.push_back({text(c.name), text(c.passed ? "PASS" : "FAIL"), text(c.detail), text(c.provenance)});
    return t;
}

struct Options {
    std::string format = "csv";
    int workers = 1;
    int digits = 10;
    std::string out_path;
    std::string alpha_text = "1/2";
    i64 qmax = 0;
    std::vector<i64> grid;
    std::string stat = "ell";
    std::string side = "lower";
    std::string suite = "identities";
    std::vector<std::string> positional;
    i64 U = 0;
    std::string beta_text, beta_prime_text;
    std::vector<i64> cf_digits;
    i64 x = 0;
};

inline ReducedFraction parse_cut(const std::string& text_in, std::ostream& err) {
    bool reduced = false;
    auto a = ReducedFraction::parse(text_in, &reduced);
    if (reduced) err << "warning: alpha " << text_in << " reduced to " << a.str() << "\n";
    counting::require_cut(a);
    return a;
}

inline void require_valid_grid(const std::vector<i64>& grid) {
    for (i64 q : grid)
        if (q < 1) throw std::invalid_argument("grid values must be positive");
    asym::require_grid(grid);
}

inline Table sum_command(const Options& o, int& status) {
    if (o.positional.size() != 2) throw std::invalid_argument("sum takes two integers: a b");
    const i64 a = std::stoll(o.positional[0]), b = std::stoll(o.positional[1]);
    if (b < 1) throw std::invalid_argument("sum: b must be positive");
    auto naive = dedekind::dedekind_naive(a, b);
    auto value = dedekind::dedekind_sum(a, b);
    ReducedFraction x(mod_floor(a, b), b);
    auto hick = cf::hickerson_sum(x);
    const bool agree = naive == value && value == hick;
    if (!agree) status = gate_failure;
    return {{"a", "b", "s", "naive", "reciprocity", "continued_fraction", "agree", "provenance"},
            {{integer(a), integer(b), rational(value), rational(naive), rational(value), rational(hick), boolean(agree),
              text("sawtooth definition; reciprocity law; continued-fraction formula")}}};
}

inline Table cf_command(const Options& o, std::ostream& err) {
    if (o.positional.size() != 1) throw std::invalid_argument("cf takes one fraction v/w in [0, 1]");
    bool reduced = false;
    auto x = ReducedFraction::parse(o.positional[0], &reduced);
    if (reduced) err << "warning: " << o.positional[0] << " reduced to " << x.str() << "\n";
    if (x.num() < 0 || x.num() > x.den()) throw std::invalid_argument("cf: x must lie in [0, 1]");
    Table t{{"x", "regular_digits", "minus_digits", "L", "ell", "sigma_odd", "sigma_even", "sigma_pm", "eps", "provenance"}, {}};
    std::vector<i64> reg, minus;
    if (x.num() != x.den()) reg = cf::regular_cf(x).digits;
    if (x.num() != 0) minus = cf::minus_cf(x).digits;
    cf::CFStats st;
    std::string eps = "";
    if (x.num() != 0 && x.num() != x.den()) {
        st = cf::cf_statistics(x);
        eps = std::to_string(st.eps);
    }
    t.rows.push_back({text(x.str()), text(join_digits(reg)), text(join_digits(minus)), integer(static_cast<i64>(reg.size())),
                      integer(static_cast<i64>(minus.size())), integer(st.sigma_odd), integer(st.sigma_even),
                      integer(st.sigma_pm), text(eps), text("l(x) = sigma_odd - eps; l(1-x) = sigma_even + eps")});
    return t;
}

inline Table average_command(const Options& o, std::ostream& err) {
    auto alpha = parse_cut(o.alpha_text, err);
    auto stat = farey::parse_statistic(o.stat);
    std::vector<i64> grid = o.grid;
    if (grid.empty() && o.qmax > 0) grid = {o.qmax};
    if (grid.empty()) throw std::invalid_argument("average needs --grid or --qmax");
    require_valid_grid(grid);
    farey::Side side;
    if (o.side == "lower")
        side = farey::Side::lower;
    else if (o.side == "complement")
        side = farey::Side::upper_complement;
    else
        throw std::invalid_argument("--side must be lower or complement");
    Table t{{"Q", "alpha", "side", "stat", "count", "cut_count", "total", "mean", "predicted", "residual", "residual_over_E",
             "provenance"},
            {}};
    SieveTables sieve(grid.back());
    for (i64 Q : grid) {
        auto r = farey::aggregate({Q, alpha, side}, stat, sieve, o.workers);
        std::string prov = "exact aggregate";
        std::optional<double> pred, res, scale;
        if (asym::has_prediction(stat)) {
            try {
                auto p = asym::predict(stat, alpha, Q, side);
                pred = p.main_terms;
                res = r.mean - p.main_terms;
                scale = p.error_scale;
                prov = p.provenance;
            } catch (const std::domain_error& e) {
                prov = std::string("no prediction: ") + e.what();
            }
        }
        auto opt = [&](std::optional<double> v) { return v ? real(*v, o.digits) : text(""); };
        t.rows.push_back({integer(Q), text(alpha.str()), text(o.side), text(std::string(farey::to_string(stat))),
                          integer(r.count), integer(r.cut_count), rational(r.total), real(r.mean, o.digits), opt(pred),
                          opt(res), opt(res && scale ? std::optional<double>(*res / *scale) : std::nullopt), text(prov)});
    }
    return t;
}

inline Table counts_command(const Options& o, std::ostream& err) {
    auto alpha = parse_cut(o.alpha_text, err);
    Table t{{"system", "Q", "alpha", "value", "method", "provenance"}, {}};
    if (o.U > 0) {
        auto c = counting::count_R_cases(o.U, alpha);
        Table cs{{"U", "alpha", "r1", "r2", "r3", "r4", "r5", "sum", "R", "provenance"}, {}};
        cs.rows.push_back({integer(o.U), text(alpha.str()), integer(c.r[0]), integer(c.r[1]), integer(c.r[2]),
                           integer(c.r[3]), integer(c.r[4]), integer(c.sum()), integer(counting::count_R(o.U * o.U, alpha).value),
                           text("five size cases of the four-variable system")});
        return cs;
    }
    if (o.qmax < 1) throw std::invalid_argument("counts needs --qmax (or --cases U)");
    auto add = [&](const std::string& name, const counting::SystemCount& c, const std::string& prov) {
        t.rows.push_back({text(name), integer(c.Q), text(alpha.str()), integer(c.value),
                          text(std::string(counting::to_string(c.method))), text(prov)});
    };
    add("N", counting::count_N(o.qmax, alpha), "sum of l(a/b) over a < alpha b <= alpha Q");
    add("T", counting::count_T(o.qmax, alpha), "eight-variable determinant system");
    add("R", counting::count_R(o.qmax, alpha), "four-variable system");
    return t;
}

inline Table constants_command(const Options& o, std::ostream& err) {
    const auto& c = asym::fundamental_constants();
    auto [C1, C2] = asym::full_interval_coefficients();
    Table t{{"name", "value", "spread", "provenance"}, {}};
    t.rows.push_back({text("zeta2"), real(c.zeta2, o.digits), real(0, o.digits), text("pi^2/6")});
    t.rows.push_back({text("zeta_prime2"), real(c.zeta_prime2, o.digits), real(c.zeta_prime2_spread, 3), text(c.provenance)});
    t.rows.push_back({text("euler_gamma"), real(c.euler_gamma, o.digits), real(c.euler_gamma_spread, 3), text(c.provenance)});
    t.rows.push_back({text("C1"), real(C1, o.digits), text(""), text("1/(2 zeta(2))")});
    t.rows.push_back({text("C2"), real(C2, o.digits), text(""), text("(2 gamma - 3/2 - 2 zeta'(2)/zeta(2))/zeta(2)")});
    auto alpha = parse_cut(o.alpha_text, err);
    t.rows.push_back({text("F(" + alpha.str() + ")"), real(asym::F_alpha(alpha), o.digits), text(""),
                      text("(1/(alpha w^2)) sum_{r<w} (1 - {alpha r}) zeta(2, r/w)")});
    return t;
}

inline Table delta_command(const Options& o, std::ostream& err) {
    if (!o.cf_digits.empty()) {
        std::vector<i64> grid = o.grid;
        if (grid.empty() && o.qmax > 0) grid = {o.qmax};
        if (grid.empty()) throw std::invalid_argument("delta --cf needs --grid or --qmax");
        require_valid_grid(grid);
        auto rows = asym::irrational_experiment(o.cf_digits, grid, true, o.workers);
        Table t{{"Q", "N", "beta", "beta_prime", "cut", "count", "cut_count", "delta_lower", "twelve_mean_s", "delta_upper",
                 "slack", "ratio", "provenance"},
                {}};
        for (const auto& r : rows)
            t.rows.push_back({integer(r.Q), integer(static_cast<i64>(r.N)), text(r.beta.str()), text(r.beta_prime.str()),
                              text(r.cut.str()), integer(r.count), integer(r.cut_count), real(r.delta_lower, o.digits),
                              real(r.twelve_mean_s, o.digits), real(r.delta_upper, o.digits), real(r.slack, o.digits),
                              real(r.ratio, o.digits), text("convergent sandwich")});
        return t;
    }
    if (o.beta_text.empty() || o.beta_prime_text.empty() || o.qmax < 1)
        throw std::invalid_argument("delta needs --beta, --beta-prime and --qmax (or --cf with a grid)");
    auto beta = parse_cut(o.beta_text, err), beta_prime = parse_cut(o.beta_prime_text, err);
    auto d = asym::delta_cuts(beta, beta_prime, o.qmax, o.workers);
    Table t{{"Q", "lower_cut", "complement_cut", "count", "lower_total", "complement_total", "delta", "provenance"}, {}};
    t.rows.push_back({integer(o.qmax), text(beta.str()), text(beta_prime.str()), integer(d.count), rational(d.lower_total),
                      rational(d.complement_total), real(d.value, o.digits),
                      text("(sum over lower cut - sum over complement cut) / #F(Q)")});
    return t;
}

inline Table tail_command(const Options& o) {
    std::vector<i64> grid = o.grid;
    if (grid.empty() && o.qmax > 0) grid = {o.qmax};
    if (grid.empty()) grid = {200, 400, 800};
    require_valid_grid(grid);
    Table t{{"Q", "set_size", "count", "sum_sba", "sum_sab", "normalized", "normalized_over_loglog", "bound_ratio", "provenance"}, {}};
    for (i64 Q : grid) {
        auto r = asym::tail_experiment(Q);
        t.rows.push_back({integer(Q), integer(r.set_size), integer(r.count), rational(r.sum_sba), rational(r.sum_sab),
                          real(r.normalized, o.digits), real(r.normalized_scaled, o.digits), real(r.bound_ratio, o.digits),
                          text("tail set a/b <= 1/log Q")});
    }
    return t;
}

inline Table residuals_command(const Options& o, std::ostream& err) {
    const i64 x = o.x > 0 ? o.x : (o.qmax > 0 ? o.qmax : 10000);
    auto alpha = parse_cut(o.alpha_text, err);
    Table t{{"x", "name", "lhs", "rhs", "residual", "scaled", "scale", "provenance"}, {}};
    for (const auto& r : asym::harmonic_residuals(x, alpha))
        t.rows.push_back({integer(x), text(r.name), real(r.lhs, o.digits), real(r.rhs, o.digits), real(r.residual, o.digits),
                          real(r.scaled, o.digits), text(r.scale), text(r.provenance)});
    return t;
}

inline Table verify_command(const Options& o, int& status) {
    std::vector<suites::Check> checks;
    const auto& cuts = suites::identity_cuts();
    const std::vector<ReducedFraction> three{{1, 2}, {1, 3}, {1, 1}};
    auto append = [&](std::vector<suites::Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (o.suite == "identities") {
        const i64 q = o.qmax > 0 ? o.qmax : 300;
        append(suites::dedekind_identities(q, std::min<i64>(q, 200), std::min<i64>(q, 200)));
        append(suites::cf_identities(q, q));
    } else if (o.suite == "counting") {
        const i64 q = o.qmax > 0 ? o.qmax : 100;
        append(suites::delta_kappa_suite(q, cuts));
        checks.push_back(suites::inversion_suite(std::min<i64>(q, 300), 10));
        checks.push_back(suites::moebius_suite({q}, three));
        i64 U = 1;
        while ((U + 1) * (U + 1) <= q && U + 1 <= counting::kCaseSplitGuard) ++U;
        append(suites::case_partition_suite({U}, three));
        checks.push_back(suites::gap_suite({std::min<i64>(q, counting::kEightVarGuard)}, {{1, 2}, {1, 1}}));
    } else if (o.suite == "constants") {
        append(suites::constants_suite());
    } else if (o.suite == "asymptotics") {
        std::vector<i64> grid = o.grid.empty() ? std::vector<i64>{500, 1000, 2000, 4000} : o.grid;
        require_valid_grid(grid);
        checks.push_back(suites::dedekind_slope_check({1, 2}, grid, 0.2, o.workers));
        checks.push_back(suites::dedekind_slope_check({1, 3}, grid, 0.2, o.workers));
        checks.push_back(suites::ell_residual_check({1, 2}, grid, 10, o.workers));
        checks.push_back(suites::ell_residual_check({1, 3}, grid, 10, o.workers));
        checks.push_back(suites::ell_residual_drift_check(grid, 0.5, o.workers));
    } else {
        throw std::invalid_argument("unknown suite '" + o.suite + "' (identities | counting | constants | asymptotics)");
    }
    for (const auto& c : checks)
        if (!c.passed) status = gate_failure;
    return checks_table(checks);
}

/// Parses `args` (without the program name), runs one subcommand and writes its
/// table to `out` or to --out. Diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Dedekind sums, continued fractions and Farey-cut averages", "dedekind-lab"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "csv | json | tsv")->check(CLI::IsMember({"csv", "json", "tsv"}));
    app.add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--digits", o.digits, "significant digits for reals")->check(CLI::Range(1, 30));
    app.add_option("--out", o.out_path, "write the table to this file");

    auto with_alpha = [&](CLI::App* s) { s->add_option("--alpha", o.alpha_text, "cut v/w in (0, 1]"); };
    auto with_grid = [&](CLI::App* s) {
        s->add_option("--grid", o.grid, "comma-separated increasing Q values")->delimiter(',');
        s->add_option("--qmax", o.qmax, "single order Q");
    };

    auto* sum = app.add_subcommand("sum", "s(a, b) by three routes");
    sum->add_option("args", o.positional)->expected(2);
    auto* cfc = app.add_subcommand("cf", "regular and minus continued fractions of v/w");
    cfc->add_option("x", o.positional)->expected(1);
    auto* avg = app.add_subcommand("average", "exact averages over a Farey cut with predictions");
    with_alpha(avg);
    with_grid(avg);
    avg->add_option("--stat", o.stat, "s | ell | L | sigma")->check(CLI::IsMember({"s", "ell", "L", "sigma"}));
    avg->add_option("--side", o.side, "lower | complement");
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", o.suite, "identities | counting | constants | asymptotics");
    with_grid(ver);
    auto* cnt = app.add_subcommand("counts", "lattice-point counts N, T, R or the case split");
    with_alpha(cnt);
    cnt->add_option("--qmax", o.qmax, "order Q");
    cnt->add_option("--cases", o.U, "case split at Q = U^2");
    auto* con = app.add_subcommand("constants", "analytic constants");
    with_alpha(con);
    auto* del = app.add_subcommand("delta", "cut differences and the convergent sandwich");
    del->add_option("--beta", o.beta_text, "lower cut");
    del->add_option("--beta-prime", o.beta_prime_text, "complement cut");
    del->add_option("--cf", o.cf_digits, "partial quotients of alpha")->delimiter(',');
    with_grid(del);
    auto* tail = app.add_subcommand("tail", "tail-set Dedekind sums");
    with_grid(tail);
    auto* res = app.add_subcommand("residuals", "totient and double-sum residuals");
    with_alpha(res);
    res->add_option("--x", o.x, "upper limit");
    res->add_option("--qmax", o.qmax, "alias for --x");
    for (auto* s : app.get_subcommands({})) s->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    int status = ok;
    Table table;
    try {
        if (*sum) table = sum_command(o, status);
        else if (*cfc) table = cf_command(o, err);
        else if (*avg) table = average_command(o, err);
        else if (*ver) table = verify_command(o, status);
        else if (*cnt) table = counts_command(o, err);
        else if (*con) table = constants_command(o, err);
        else if (*del) table = delta_command(o, err);
        else if (*tail) table = tail_command(o);
        else if (*res) table = residuals_command(o, err);
    } catch (const budget_error& e) {
        err << "budget: " << e.what() << "\n";
        return budget_refusal;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return usage_error;
    } catch (const std::domain_error& e) {
        err << "usage: " << e.what() << "\n";
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "usage: number out of range: " << e.what() << "\n";
        return usage_error;
    }

    if (o.out_path.empty()) {
        render(table, o.format, out);
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "cannot open " << o.out_path << "\n";
            return usage_error;
        }
        render(table, o.format, file);
    }
    return status;
}

}  // namespace dlab::cli
