// abel-frac: solve first-kind Abel integral equations from the command line.
//
//   abel-frac <solve|table|converge|residual>
//             [--f EXPR] [--alpha RAT] [--x LIST] [--k LIST] [--tol REAL]
//             [--preset NAME] [--format csv|json|pretty] [--digits N] [--g EXPR]
//
// Exit codes: 0 success, 2 parse/validation error, 3 numerical failure.

#include "abelfrac/abel.hpp"
#include "abelfrac/errors.hpp"
#include "abelfrac/expr.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace abelfrac;

// ---------------------------------------------------------------------------
// flag parsing helpers

double parse_decimal(const std::string& text)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+')
        ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw InvalidArgument("not a number: '" + text + "'");
    return v;
}

// Accepts plain decimals and exact fractions such as 4/5; the quotient is
// formed in binary64, so short rationals convert correctly rounded.
double parse_real_or_fraction(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return parse_decimal(text);
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double q = parse_decimal(den);
    if (q == 0.0)
        throw InvalidArgument("zero denominator in '" + text + "'");
    return parse_decimal(num) / q;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(text.substr(start, end - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> parse_real_list(const std::string& text)
{
    std::vector<double> out;
    for (const auto& item : split_list(text))
        out.push_back(parse_real_or_fraction(item));
    if (out.empty())
        throw InvalidArgument("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        int v = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (res.ec != std::errc() || res.ptr != item.data() + item.size())
            throw InvalidArgument("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw InvalidArgument("empty list");
    return out;
}

// ---------------------------------------------------------------------------
// number rendering

// display format, `digits` significant digits, trailing zeros kept
std::string fmt_sig(double v, int digits)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.*g", digits, v);
    return buf;
}

// machine format: 17 significant digits, round-trips binary64 exactly
std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

void print_aligned(const std::vector<std::vector<std::string>>& rows)
{
    if (rows.empty())
        return;
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                line += "  ";
            line += row[i];
            if (i + 1 < row.size())
                line.append(width[i] - row[i].size(), ' ');
        }
        std::printf("%s\n", line.c_str());
    }
}

// ---------------------------------------------------------------------------
// configuration

struct Options {
    std::string f_text;
    std::string alpha_text;
    std::string x_text;
    std::string k_text;
    std::string g_text;       // residual: explicit candidate solution
    std::string preset;
    std::string format = "pretty";
    double tol = 1e-10;
    int digits = 10;
};

struct Preset {
    const char* f;
    const char* alpha;
    const char* xs;
    const char* ks;
};

const Preset* find_preset(const std::string& name)
{
    static const std::pair<const char*, Preset> presets[] = {
        {"example1", {"exp(x)-1", "1/2", "0.1,0.2,0.3", "1,10,100"}},
        {"example2", {"x", "4/5", "0.4,0.5,0.6", "1,10"}},
        {"example3", {"x^(7/6)", "1/3", "0.6,0.7,0.8", "10,100,1000"}},
    };
    for (const auto& [key, preset] : presets)
        if (name == key)
            return &preset;
    return nullptr;
}

struct Config {
    ExprPtr f;
    std::string f_text;
    double alpha = 0.0;
    std::vector<double> xs;
    std::vector<int> ks;
    double tol = 1e-10;
    int digits = 10;
    std::string format;
    std::string preset;
};

Config build_config(Options opt)
{
    if (!opt.preset.empty()) {
        const Preset* p = find_preset(opt.preset);
        if (!p)
            throw InvalidArgument("unknown preset '" + opt.preset + "'");
        if (opt.f_text.empty()) opt.f_text = p->f;
        if (opt.alpha_text.empty()) opt.alpha_text = p->alpha;
        if (opt.x_text.empty()) opt.x_text = p->xs;
        if (opt.k_text.empty()) opt.k_text = p->ks;
    }
    if (opt.f_text.empty())
        throw InvalidArgument("missing --f (or --preset)");
    if (opt.alpha_text.empty())
        throw InvalidArgument("missing --alpha (or --preset)");
    if (opt.x_text.empty())
        throw InvalidArgument("missing --x (or --preset)");
    if (opt.digits < 1 || opt.digits > 17)
        throw InvalidArgument("--digits must lie in [1, 17]");
    if (!(opt.tol > 0.0))
        throw InvalidArgument("--tol must be positive");
    if (opt.format != "csv" && opt.format != "json" && opt.format != "pretty")
        throw InvalidArgument("--format must be csv, json or pretty");

    Config cfg;
    cfg.f_text = opt.f_text;
    cfg.f = parse(opt.f_text);
    cfg.alpha = parse_real_or_fraction(opt.alpha_text);
    cfg.xs = parse_real_list(opt.x_text);
    if (!opt.k_text.empty())
        cfg.ks = parse_int_list(opt.k_text);
    cfg.tol = opt.tol;
    cfg.digits = opt.digits;
    cfg.format = opt.format;
    cfg.preset = opt.preset;
    return cfg;
}

std::string config_json(const Config& cfg, const char* command)
{
    std::string s = "{\"command\":\"";
    s += command;
    s += "\",\"config\":{\"f\":\"" + json_escape(cfg.f_text) + "\"";
    s += ",\"alpha\":" + fmt17(cfg.alpha);
    s += ",\"k\":[";
    for (std::size_t i = 0; i < cfg.ks.size(); ++i)
        s += (i ? "," : "") + std::to_string(cfg.ks[i]);
    s += "],\"tol\":" + fmt17(cfg.tol);
    s += ",\"digits\":" + std::to_string(cfg.digits);
    if (!cfg.preset.empty())
        s += ",\"preset\":\"" + json_escape(cfg.preset) + "\"";
    s += "}";
    return s;
}

// ---------------------------------------------------------------------------
// subcommands

int run_solve(const Config& cfg)
{
    if (cfg.ks.size() != 1)
        throw InvalidArgument("solve expects exactly one --k value");
    const AbelProblem problem(cfg.f, cfg.alpha, cfg.xs.empty() ? 1.0 : *std::max_element(cfg.xs.begin(), cfg.xs.end()));
    const SolveResult r = solve_points(problem, cfg.xs, cfg.ks.front(), true, cfg.tol);

    if (cfg.format == "json") {
        std::string s = config_json(cfg, "solve") + ",\"rows\":[";
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            if (i)
                s += ",";
            s += "{\"x\":" + fmt17(r.points[i]) + ",\"k\":" + std::to_string(r.k)
               + ",\"gtilde\":" + fmt17(r.values[i])
               + ",\"exact\":" + fmt17((*r.exact_values)[i])
               + ",\"abs_error\":" + fmt17((*r.abs_errors)[i]) + "}";
        }
        s += "]}";
        std::printf("%s\n", s.c_str());
    } else if (cfg.format == "csv") {
        std::printf("x,gtilde,exact,abs_error\n");
        for (std::size_t i = 0; i < r.points.size(); ++i)
            std::printf("%s,%s,%s,%s\n", fmt17(r.points[i]).c_str(), fmt17(r.values[i]).c_str(),
                        fmt17((*r.exact_values)[i]).c_str(), fmt17((*r.abs_errors)[i]).c_str());
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"x", "gtilde", "exact", "abs_error"});
        for (std::size_t i = 0; i < r.points.size(); ++i)
            rows.push_back({fmt_sig(r.points[i], cfg.digits), fmt_sig(r.values[i], cfg.digits),
                            fmt_sig((*r.exact_values)[i], cfg.digits),
                            fmt_sig((*r.abs_errors)[i], 3)});
        print_aligned(rows);
    }
    return 0;
}

int run_table(const Config& cfg)
{
    if (cfg.ks.empty())
        throw InvalidArgument("table expects at least one --k value");
    const double upper = *std::max_element(cfg.xs.begin(), cfg.xs.end());
    const AbelProblem problem(cfg.f, cfg.alpha, upper);

    // per x: gtilde for each k, then exact and |error| for the largest k
    struct Row {
        double x;
        std::vector<double> values;
        double exact;
        double abs_error;
    };
    std::vector<Row> rows;
    for (double x : cfg.xs) {
        Row row;
        row.x = x;
        for (int k : cfg.ks)
            row.values.push_back(solve_approx(problem, x, k));
        row.exact = solve_exact(problem, x, cfg.tol);
        row.abs_error = std::abs(row.values.back() - row.exact);
        rows.push_back(std::move(row));
    }

    if (cfg.format == "json") {
        std::string s = config_json(cfg, "table") + ",\"rows\":[";
        bool first = true;
        for (const Row& row : rows) {
            for (std::size_t i = 0; i < cfg.ks.size(); ++i) {
                if (!first)
                    s += ",";
                first = false;
                s += "{\"x\":" + fmt17(row.x) + ",\"k\":" + std::to_string(cfg.ks[i])
                   + ",\"gtilde\":" + fmt17(row.values[i])
                   + ",\"exact\":" + fmt17(row.exact)
                   + ",\"abs_error\":" + fmt17(std::abs(row.values[i] - row.exact)) + "}";
            }
        }
        s += "]}";
        std::printf("%s\n", s.c_str());
    } else if (cfg.format == "csv") {
        std::string header = "x";
        for (int k : cfg.ks)
            header += ",k=" + std::to_string(k);
        header += ",exact,abs_error";
        std::printf("%s\n", header.c_str());
        for (const Row& row : rows) {
            std::string line = fmt17(row.x);
            for (double v : row.values)
                line += "," + fmt17(v);
            line += "," + fmt17(row.exact) + "," + fmt17(row.abs_error);
            std::printf("%s\n", line.c_str());
        }
    } else {
        std::vector<std::vector<std::string>> text;
        std::vector<std::string> header{"x"};
        for (int k : cfg.ks)
            header.push_back("k=" + std::to_string(k));
        header.push_back("exact");
        header.push_back("abs_error");
        text.push_back(std::move(header));
        for (const Row& row : rows) {
            std::vector<std::string> line{fmt_sig(row.x, cfg.digits)};
            for (double v : row.values)
                line.push_back(fmt_sig(v, cfg.digits));
            line.push_back(fmt_sig(row.exact, cfg.digits));
            line.push_back(fmt_sig(row.abs_error, 3));
            text.push_back(std::move(line));
        }
        print_aligned(text);
    }
    return 0;
}

int run_converge(const Config& cfg)
{
    if (cfg.xs.size() != 1)
        throw InvalidArgument("converge expects exactly one --x value");
    if (cfg.ks.size() < 2)
        throw InvalidArgument("converge expects at least two --k values");
    const AbelProblem problem(cfg.f, cfg.alpha, cfg.xs.front());
    const ConvergenceStudy study = convergence_study(problem, cfg.xs.front(), cfg.ks, cfg.tol);

    if (cfg.format == "json") {
        std::string s = config_json(cfg, "converge") + ",\"rows\":[";
        for (std::size_t i = 0; i < study.rows.size(); ++i) {
            const ConvergenceRow& row = study.rows[i];
            if (i)
                s += ",";
            s += "{\"x\":" + fmt17(cfg.xs.front()) + ",\"k\":" + std::to_string(row.k)
               + ",\"gtilde\":" + fmt17(row.gtilde)
               + ",\"exact\":" + fmt17(study.exact)
               + ",\"abs_error\":" + fmt17(row.abs_error) + "}";
        }
        s += "],\"order\":" + fmt17(study.order);
        s += std::string(",\"at_floor\":") + (study.at_floor ? "true" : "false") + "}";
        std::printf("%s\n", s.c_str());
    } else if (cfg.format == "csv") {
        std::printf("k,h,gtilde,abs_error,order,at_floor\n");
        for (const ConvergenceRow& row : study.rows)
            std::printf("%d,%s,%s,%s,%s,%d\n", row.k, fmt17(row.h).c_str(),
                        fmt17(row.gtilde).c_str(), fmt17(row.abs_error).c_str(),
                        fmt17(study.order).c_str(), study.at_floor ? 1 : 0);
    } else {
        std::vector<std::vector<std::string>> text;
        text.push_back({"k", "h", "gtilde", "abs_error"});
        for (const ConvergenceRow& row : study.rows)
            text.push_back({std::to_string(row.k), fmt_sig(row.h, 6),
                            fmt_sig(row.gtilde, cfg.digits), fmt_sig(row.abs_error, 3)});
        print_aligned(text);
        std::printf("exact: %s\n", fmt_sig(study.exact, cfg.digits).c_str());
        std::printf("order: %s%s\n", fmt_sig(study.order, 4).c_str(),
                    study.at_floor ? " (floor: errors at the exact-solution tolerance)" : "");
    }
    return 0;
}

int run_residual(const Config& cfg, const std::string& g_text)
{
    const double upper = *std::max_element(cfg.xs.begin(), cfg.xs.end());
    const AbelProblem problem(cfg.f, cfg.alpha, upper);

    std::function<double(double)> g;
    if (!g_text.empty()) {
        const ExprPtr ge = parse(g_text);
        g = [ge](double t) { return eval(ge, t); };
    } else {
        if (cfg.ks.size() != 1)
            throw InvalidArgument("residual expects exactly one --k value (or --g EXPR)");
        const PchipInterpolant interp =
            sampled_solution(problem, upper, cfg.ks.front(), cfg.ks.front());
        g = interp;
    }

    std::vector<double> residuals;
    for (double x : cfg.xs)
        residuals.push_back(residual(problem, g, x, cfg.tol));

    if (cfg.format == "json") {
        std::string s = config_json(cfg, "residual") + ",\"rows\":[";
        for (std::size_t i = 0; i < cfg.xs.size(); ++i) {
            if (i)
                s += ",";
            s += "{\"x\":" + fmt17(cfg.xs[i]) + ",\"residual\":" + fmt17(residuals[i]) + "}";
        }
        s += "]}";
        std::printf("%s\n", s.c_str());
    } else if (cfg.format == "csv") {
        std::printf("x,residual\n");
        for (std::size_t i = 0; i < cfg.xs.size(); ++i)
            std::printf("%s,%s\n", fmt17(cfg.xs[i]).c_str(), fmt17(residuals[i]).c_str());
    } else {
        std::vector<std::vector<std::string>> text;
        text.push_back({"x", "residual"});
        for (std::size_t i = 0; i < cfg.xs.size(); ++i)
            text.push_back({fmt_sig(cfg.xs[i], cfg.digits), fmt_sig(residuals[i], 3)});
        print_aligned(text);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solver for first-kind Abel integral equations\n"
                 "  f(x) = int_0^x g(t) / (x-t)^alpha dt,  0 < alpha < 1\n"
                 "by a product-trapezoidal rule applied to f', with an exact\n"
                 "closed-form reference evaluated by adaptive quadrature."};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--f", opt.f_text,
                        "expression for f(x); grammar: + - * / ^, unary -, numbers, x, "
                        "exp ln sin cos sqrt erf abs");
        cmd->add_option("--alpha", opt.alpha_text, "kernel exponent in (0,1); decimal or fraction (4/5)");
        cmd->add_option("--x", opt.x_text, "comma-separated query points");
        cmd->add_option("--k", opt.k_text, "comma-separated subdivision counts");
        cmd->add_option("--tol", opt.tol, "quadrature tolerance for the exact reference");
        cmd->add_option("--preset", opt.preset, "built-in problem: example1, example2, example3");
        cmd->add_option("--format", opt.format, "output format: csv, json or pretty");
        cmd->add_option("--digits", opt.digits, "significant digits for pretty output (1..17)");
    };

    CLI::App* solve = app.add_subcommand("solve", "approximate and exact solution at query points");
    add_common(solve);
    CLI::App* table = app.add_subcommand("table", "solution table over several k");
    add_common(table);
    CLI::App* converge = app.add_subcommand("converge", "error decay and empirical order");
    add_common(converge);
    CLI::App* resid = app.add_subcommand("residual", "defect of a candidate solution in the equation");
    add_common(resid);
    resid->add_option("--g", opt.g_text, "candidate solution expression; default: interpolated gtilde samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Config cfg = build_config(opt);
        if (solve->parsed())
            return run_solve(cfg);
        if (table->parsed())
            return run_table(cfg);
        if (converge->parsed())
            return run_converge(cfg);
        return run_residual(cfg, opt.g_text);
    } catch (const abelfrac::ParseError& e) {
        std::fprintf(stderr, "abel-frac: %s\n", e.what());
        return 2;
    } catch (const abelfrac::InvalidArgument& e) {
        std::fprintf(stderr, "abel-frac: %s\n", e.what());
        return 2;
    } catch (const abelfrac::ConvergenceError& e) {
        std::fprintf(stderr, "abel-frac: %s (partial value %.17g, estimate %.3g)\n",
                     e.what(), e.partial_value(), e.error_estimate());
        return 3;
    } catch (const abelfrac::DomainError& e) {
        std::fprintf(stderr, "abel-frac: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "abel-frac: %s\n", e.what());
        return 3;
    }
}
