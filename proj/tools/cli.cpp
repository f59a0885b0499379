#include "cli.hpp"

#include "verify.hpp"
#include "multizeta/multizeta.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

namespace multizeta::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct Context {
    bool json_out = false;
    bool meta = false;
    ZetaParams params;
    json parameters = json::object();
    json warnings = json::array();
    std::ostream* out = nullptr;
};

void emit_envelope(Context& ctx, const std::string& command, json results)
{
    json env;
    env["schema_version"] = "1";
    env["command"] = command;
    env["parameters"] = ctx.parameters;
    env["results"] = std::move(results);
    env["warnings"] = ctx.warnings;
    if (ctx.meta) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        env["meta"] = {{"version", kVersion},
                       {"unix_time", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                       {"em_cutoff", ctx.params.em_cutoff},
                       {"em_terms", ctx.params.em_terms}};
    }
    *ctx.out << dump_json(env);
}

void emit_text_meta(const Context& ctx)
{
    if (!ctx.meta) return;
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    *ctx.out << "# multizeta " << kVersion << " unix_time="
             << std::chrono::duration_cast<std::chrono::seconds>(now).count()
             << " em_cutoff=" << ctx.params.em_cutoff << " em_terms=" << ctx.params.em_terms << '\n';
}

std::optional<long> as_integer(const std::string& text)
{
    long v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return v;
}

double as_double(const std::string& text, const char* what)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw DomainError(std::string(what) + ": not a number: " + text);
    return v;
}

json result_json(const EvalResult<double>& r)
{
    return {{"value", r.value}, {"abs_err_est", r.abs_err_est}, {"near_pole", r.near_pole}, {"degraded", r.degraded}};
}

json result_json(const EvalResult<complex>& r)
{
    return {{"re", r.value.real()},
            {"im", r.value.imag()},
            {"abs_err_est", r.abs_err_est},
            {"near_pole", r.near_pole},
            {"degraded", r.degraded}};
}

std::string text_value(const EvalResult<double>& r)
{
    return format_double(r.value) + " " + format_double(r.abs_err_est);
}

std::string text_value(const EvalResult<complex>& r)
{
    return format_double(r.value.real()) + " " + format_double(r.value.imag()) + " " + format_double(r.abs_err_est);
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
    int r = 0;
    std::string s;
    double im = 0.0;
    bool exact = false;
    long oracle = 0;
    bool profile = false;
};

template <Scalar T>
void eval_float(Context& ctx, const EvalArgs& a, const T& s)
{
    const auto prof = eval_profile(s, a.r, ctx.params);
    const int first = a.profile ? 1 : a.r;
    json rows = json::array();
    for (int j = first; j <= a.r; ++j) {
        const auto& v = prof[j];
        if (v.degraded) ctx.warnings.push_back("degraded accuracy for zeta_" + std::to_string(j));
        json row = result_json(v);
        row["r"] = j;
        rows.push_back(row);
    }
    if (a.r == 0) rows.push_back([&] { json row = result_json(prof[0]); row["r"] = 0; return row; }());

    if (ctx.json_out) {
        emit_envelope(ctx, "eval", a.profile ? json{{"profile", rows}} : rows.back());
        return;
    }
    emit_text_meta(ctx);
    if (a.r == 0) {
        *ctx.out << "1\n";
        return;
    }
    for (int j = first; j <= a.r; ++j) {
        if (a.profile) *ctx.out << j << ' ';
        *ctx.out << text_value(prof[j]) << '\n';
    }
}

void cmd_eval(Context& ctx, const EvalArgs& a)
{
    ctx.parameters = {{"r", a.r}, {"s", a.s}, {"exact", a.exact}, {"profile", a.profile}};
    if (a.im != 0.0) ctx.parameters["im"] = a.im;
    if (a.oracle) ctx.parameters["oracle"] = a.oracle;
    if (a.r < 0) throw DomainError("eval: r must be >= 0");

    if (a.exact) {
        const auto n = as_integer(a.s);
        if (!n || *n > 0 || a.im != 0.0) throw DomainError("eval: --exact requires an integer s <= 0");
        const auto prof = eval_exact(static_cast<int>(-*n), a.r);
        const int first = a.profile ? 0 : a.r;
        json rows = json::array();
        for (int j = first; j <= a.r; ++j)
            rows.push_back({{"r", j}, {"exact", prof[j].str()}, {"decimal", prof[j].decimal_rounded(20)}});
        if (ctx.json_out) {
            emit_envelope(ctx, "eval", a.profile ? json{{"profile", rows}} : rows.back());
            return;
        }
        emit_text_meta(ctx);
        for (int j = first; j <= a.r; ++j) {
            if (a.profile) *ctx.out << j << ' ';
            *ctx.out << prof[j].str() << ' ' << prof[j].decimal_rounded(20) << '\n';
        }
        return;
    }

    const double re = as_double(a.s, "eval: -s");
    if (a.oracle) {
        if (a.im != 0.0) throw DomainError("eval: --oracle needs real s");
        const double v = eval_series_oracle(re, {a.oracle, a.r});
        if (ctx.json_out) {
            emit_envelope(ctx, "eval", {{"r", a.r}, {"value", v}, {"cutoff", a.oracle}});
            return;
        }
        emit_text_meta(ctx);
        *ctx.out << format_double(v) << '\n';
        return;
    }
    if (a.im != 0.0)
        eval_float(ctx, a, complex(re, a.im));
    else
        eval_float(ctx, a, re);
}

// ---- table ----------------------------------------------------------------

// The reference table truncates zeta_r(-1) to 11 places and rounds zeta_r(0) to 15
// places with exact ties dropped (r = 9 ends in ...6875).
std::string printed_digits(const Rational& q, int n)
{
    return n == 1 ? q.decimal_truncated(11, true) : q.decimal_half_down(15, true);
}

void cmd_table(Context& ctx, int r_max, const std::vector<int>& args)
{
    ctx.parameters = {{"r_max", r_max}, {"args", args}};
    if (r_max < 1 || r_max > 30) throw DomainError("table: r_max must be in [1, 30]");
    std::vector<int> ns;
    for (int a : args) {
        if (a > 0) throw DomainError("table: --arg must be an integer <= 0");
        ns.push_back(-a);
    }
    std::vector<ExactProfile> profiles;
    for (int n : ns) profiles.push_back(eval_exact(n, r_max));

    if (ctx.json_out) {
        json cols = json::array();
        for (std::size_t i = 0; i < ns.size(); ++i) {
            json rows = json::array();
            for (int r = 1; r <= r_max; ++r) {
                const Rational& q = profiles[i][r];
                rows.push_back({{"r", r},
                                {"exact", q.str()},
                                {"rounded", q.decimal_rounded(15, true)},
                                {"printed", printed_digits(q, ns[i])}});
            }
            cols.push_back({{"s", -ns[i]}, {"rows", rows}});
        }
        emit_envelope(ctx, "table", {{"columns", cols}});
        return;
    }
    emit_text_meta(ctx);
    *ctx.out << 'r';
    for (int n : ns) {
        const std::string s = std::to_string(-n);
        *ctx.out << ",exact(" << s << "),rounded(" << s << "),printed(" << s << ')';
    }
    *ctx.out << '\n';
    for (int r = 1; r <= r_max; ++r) {
        *ctx.out << r;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const Rational& q = profiles[i][r];
            *ctx.out << ',' << q.str() << ',' << q.decimal_rounded(15, true) << ','
                     << printed_digits(q, ns[i]);
        }
        *ctx.out << '\n';
    }
}

// ---- zeros ----------------------------------------------------------------

int cmd_zeros(Context& ctx, int r, bool positive, int n_max, bool csv)
{
    ctx.parameters = {{"r", r}};
    if (positive || n_max <= 0)
        ctx.parameters["positive"] = true;
    else
        ctx.parameters["negative"] = n_max;
    const ZeroCensus census = (positive || n_max <= 0) ? enumerate_iaz(r, ctx.params) : enumerate_itz(r, n_max, ctx.params);
    const auto& rep = census.report;
    const bool iaz = !rep.iaz_counts.empty();

    std::ostringstream counts;
    std::ostringstream expected;
    if (iaz) {
        for (auto it = rep.iaz_counts.rbegin(); it != rep.iaz_counts.rend(); ++it) {
            counts << (it == rep.iaz_counts.rbegin() ? "" : ",") << it->second;
            expected << (it == rep.iaz_counts.rbegin() ? "" : ",") << rep.iaz_expected.at(it->first);
        }
    } else {
        for (auto it = rep.itz_counts.begin(); it != rep.itz_counts.end(); ++it) {
            counts << (it == rep.itz_counts.begin() ? "" : ",") << it->second;
            expected << (it == rep.itz_counts.begin() ? "" : ",") << rep.expected_itz;
        }
    }
    const std::string verdict = rep.all_match ? "MATCH" : "MISMATCH";

    if (ctx.json_out) {
        json zs = json::array();
        for (const auto& z : census.zeros)
            zs.push_back({{"kind", to_string(z.kind)},
                          {"r", z.r},
                          {"lo", z.lo},
                          {"hi", z.hi},
                          {"location", z.location},
                          {"residual", z.residual},
                          {"bracket_width", z.bracket_width}});
        json c = json::object();
        if (iaz) {
            for (const auto& [k, n] : rep.iaz_counts)
                c[std::to_string(k)] = {{"observed", n}, {"expected", rep.iaz_expected.at(k)}};
        } else {
            for (const auto& [n, m] : rep.itz_counts)
                c[std::to_string(n)] = {{"observed", m}, {"expected", rep.expected_itz}};
        }
        emit_envelope(ctx, "zeros",
                      {{"zeros", zs}, {iaz ? "iaz_counts" : "itz_counts", c}, {"conjecture", verdict}});
    } else {
        emit_text_meta(ctx);
        const char sep = csv ? ',' : ' ';
        *ctx.out << "kind" << sep << "r" << sep << "lo" << sep << "hi" << sep << "location" << sep << "residual"
                 << sep << "bracket_width\n";
        for (const auto& z : census.zeros)
            *ctx.out << to_string(z.kind) << sep << z.r << sep << format_double(z.lo) << sep << format_double(z.hi)
                     << sep << format_double(z.location) << sep << format_double(z.residual) << sep
                     << format_double(z.bracket_width) << '\n';
        const std::string lead = csv ? "# " : "";
        *ctx.out << lead << (iaz ? "iaz counts (k=" + std::to_string(r) + "..2): " : "itz counts (n=1.." +
                                                                                        std::to_string(n_max) + "): ")
                 << counts.str() << " expected " << expected.str() << '\n';
        *ctx.out << lead << "conjecture: " << verdict << '\n';
    }
    return rep.all_match ? kOk : kVerifyFailed;
}

// ---- coeffs ---------------------------------------------------------------

void cmd_coeffs(Context& ctx, int r)
{
    ctx.parameters = {{"r", r}};
    if (r < 1 || r > 12) throw DomainError("coeffs: r must be in [1, 12]");
    const auto table = pole_table(r, ctx.params);
    json rows = json::array();
    if (!ctx.json_out) {
        emit_text_meta(ctx);
        *ctx.out << "k,location,order,coefficient,sign_ok,residual\n";
    }
    for (const auto& p : table) {
        const double rec = coefficient_recursive(r, p.k, ctx.params);
        const int want = (r + p.order) % 2 == 0 ? 1 : -1;
        const bool sign_ok = (p.coefficient > 0 ? 1 : -1) == want && p.coefficient != 0.0;
        const double residual = std::fabs(p.coefficient - rec);
        if (ctx.json_out) {
            rows.push_back({{"k", p.k},
                            {"location", p.location().str()},
                            {"order", p.order},
                            {"coefficient", p.coefficient},
                            {"sign_ok", sign_ok},
                            {"residual", residual}});
        } else {
            *ctx.out << p.k << ',' << p.location().str() << ',' << p.order << ',' << format_double(p.coefficient)
                     << ',' << (sign_ok ? "ok" : "FAIL") << ',' << format_double(residual) << '\n';
        }
    }
    if (ctx.json_out) emit_envelope(ctx, "coeffs", {{"poles", rows}});
}

// ---- plotdata -------------------------------------------------------------

void cmd_plotdata(Context& ctx, const std::vector<int>& rs, double lo, double hi, int points,
                  const std::vector<double>& clip)
{
    ctx.parameters = {{"r", rs}, {"lo", lo}, {"hi", hi}, {"points", points}};
    if (!clip.empty()) ctx.parameters["clip"] = clip;
    if (rs.empty()) throw DomainError("plotdata: at least one r is required");
    for (int r : rs)
        if (r < 0) throw DomainError("plotdata: r must be >= 0");
    if (points < 1) throw DomainError("plotdata: points must be >= 1");
    if (!(lo <= hi)) throw DomainError("plotdata: lo must not exceed hi");
    if (!clip.empty() && (clip.size() != 2 || !(clip[0] < clip[1])))
        throw DomainError("plotdata: --clip takes ymin < ymax");

    std::vector<std::vector<std::optional<double>>> table;
    std::vector<double> grid;
    for (int i = 0; i < points; ++i) {
        const double s = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
        grid.push_back(s);
        std::vector<std::optional<double>> row;
        for (int r : rs) {
            std::optional<double> cell;
            if (s >= kFloatPathMinRe) {
                try {
                    const double v = multiple_zeta(s, r, ctx.params).value;
                    if (std::isfinite(v)) cell = clip.empty() ? v : std::clamp(v, clip[0], clip[1]);
                } catch (const PoleError&) {
                }
            }
            row.push_back(cell);
        }
        table.push_back(std::move(row));
    }

    if (ctx.json_out) {
        json cols = json::array({"s"});
        for (int r : rs) cols.push_back("zeta_" + std::to_string(r));
        json rows = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            json row = json::array({grid[i]});
            for (const auto& c : table[i]) row.push_back(c ? json(*c) : json(nullptr));
            rows.push_back(row);
        }
        emit_envelope(ctx, "plotdata", {{"columns", cols}, {"rows", rows}});
        return;
    }
    emit_text_meta(ctx);
    *ctx.out << 's';
    for (int r : rs) *ctx.out << ",zeta_" << r;
    *ctx.out << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        *ctx.out << format_double(grid[i]);
        for (const auto& c : table[i]) *ctx.out << ',' << (c ? format_double(*c) : "");
        *ctx.out << '\n';
    }
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(Context& ctx, const std::string& suite, const VerifyOptions& opt)
{
    ctx.parameters = {{"suite", suite}, {"per_side", opt.per_side}};
    if (opt.r_max >= 0) ctx.parameters["r_max"] = opt.r_max;
    if (opt.k_max >= 0) ctx.parameters["k_max"] = opt.k_max;

    std::vector<Check> checks;
    auto append = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (suite == "rouche" || suite == "all") append(verify_rouche(opt, ctx.params));
    if (suite == "asymptotics" || suite == "all") append(verify_asymptotics(opt, ctx.params));
    if (suite == "conjectures" || suite == "all") append(verify_conjectures(opt, ctx.params));

    const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (ctx.json_out) {
        json rows = json::array();
        for (const auto& c : checks)
            rows.push_back(
                {{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"margin", c.margin}, {"detail", c.detail}});
        emit_envelope(ctx, "verify", {{"checks", rows}, {"all_pass", all_pass}});
    } else {
        emit_text_meta(ctx);
        for (const auto& c : checks) {
            *ctx.out << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name
                     << " margin=" << format_double(c.margin);
            if (!c.detail.empty()) *ctx.out << " (" << c.detail << ')';
            *ctx.out << '\n';
        }
        *ctx.out << "verify: " << (all_pass ? "PASS" : "FAIL") << '\n';
    }
    return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx;
    ctx.out = &out;

    CLI::App app{"multizeta: evaluate and check the multiple zeta-functions zeta_r(s)",
                 "multizeta"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json_out, "Emit the JSON envelope instead of text");
    app.add_flag("--meta", ctx.meta, "Include run metadata (version, time)");

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate zeta_r(s)");
    eval->add_option("-r", ev.r, "Depth r")->required();
    eval->add_option("-s", ev.s, "Argument (real part)")->required()->allow_extra_args(false);
    eval->add_option("--im", ev.im, "Imaginary part of s");
    eval->add_flag("--exact", ev.exact, "Exact rational value at an integer s <= 0");
    eval->add_option("--oracle", ev.oracle, "Truncated-series value with cutoff M (s > 1)");
    eval->add_flag("--profile", ev.profile, "Print zeta_1..zeta_r");

    int table_r_max = 14;
    std::vector<int> table_args;
    auto* table = app.add_subcommand("table", "Exact values at s = 0, -1, ...");
    table->add_option("r_max", table_r_max, "Largest r (<= 30)");
    table->add_option("--arg", table_args, "Argument s (integer <= 0); repeatable");

    int zeros_r = 0;
    bool zeros_pos = false;
    int zeros_neg = 0;
    bool zeros_csv = false;
    auto* zeros = app.add_subcommand("zeros", "Zero census on (0,1) or on the negative axis");
    zeros->add_option("-r", zeros_r, "Depth r")->required();
    auto* pos_flag = zeros->add_flag("--positive", zeros_pos, "Zeros in (0, 1) between poles (default)");
    zeros->add_option("--negative", zeros_neg, "Zeros in (-2 n_max, 0)")->excludes(pos_flag);
    zeros->add_flag("--csv", zeros_csv, "CSV listing");

    int coeffs_r = 0;
    auto* coeffs = app.add_subcommand("coeffs", "Pole orders and leading coefficients");
    coeffs->add_option("-r", coeffs_r, "Depth r (<= 12)")->required();

    std::vector<int> plot_r;
    double plot_lo = 0.0;
    double plot_hi = 1.0;
    int plot_points = 201;
    std::vector<double> plot_clip;
    auto* plot = app.add_subcommand("plotdata", "CSV samples of zeta_r on a real interval");
    plot->add_option("-r", plot_r, "Depths, comma separated or repeated")->required()->delimiter(',');
    plot->add_option("--lo", plot_lo, "Left end");
    plot->add_option("--hi", plot_hi, "Right end");
    plot->add_option("--points", plot_points, "Number of rows");
    plot->add_option("--clip", plot_clip, "Clamp values to [ymin, ymax]")->expected(2);

    std::string suite;
    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "rouche | asymptotics | conjectures | all")
        ->required()
        ->check(CLI::IsMember({"rouche", "asymptotics", "conjectures", "all"}));
    verify->add_option("--r-max", vopt.r_max, "Largest r");
    verify->add_option("--k-max", vopt.k_max, "Largest rectangle index k (rouche)");
    verify->add_option("--per-side", vopt.per_side, "Boundary samples per side (rouche, >= 64)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << '\n';
        return kUsage;
    }

    try {
        ctx.params = ZetaParams::from_env();
        if (*eval) {
            cmd_eval(ctx, ev);
            return kOk;
        }
        if (*table) {
            if (table_args.empty()) table_args = {0, -1};
            cmd_table(ctx, table_r_max, table_args);
            return kOk;
        }
        if (*zeros) return cmd_zeros(ctx, zeros_r, zeros_pos, zeros_neg, zeros_csv);
        if (*coeffs) {
            cmd_coeffs(ctx, coeffs_r);
            return kOk;
        }
        if (*plot) {
            cmd_plotdata(ctx, plot_r, plot_lo, plot_hi, plot_points, plot_clip);
            return kOk;
        }
        if (*verify) return cmd_verify(ctx, suite, vopt);
    } catch (const PoleError& e) {
        err << "error: pole: k=" << e.k() << ": " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: domain: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        err << "error: resource: " << e.what() << '\n';
        return kUsage;
    } catch (const ConvergenceError& e) {
        err << "error: convergence: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace multizeta::cli
