#include "cosec/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosec/asymptotics.hpp"
#include "cosec/direct_sums.hpp"
#include "cosec/format.hpp"
#include "cosec/identities.hpp"
#include "cosec/parallel.hpp"
#include "cosec/representations.hpp"

namespace cosec::cli {

namespace {

struct Options {
    PrecisionPolicy policy;
    std::string format = "csv";
    std::string out_path;
    int threads = 0;
};

// "A..B", "a,b,c" or a single integer; inclusive bounds.
std::vector<std::int64_t> parse_range(const std::string& text) {
    std::vector<std::int64_t> vals;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::int64_t a = std::stoll(text.substr(0, dots));
        const std::int64_t b = std::stoll(text.substr(dots + 2));
        if (b < a) throw domain_error("range: upper bound below lower bound: " + text);
        if (b - a > 2'000'000) throw domain_error("range: grid too large: " + text);
        for (std::int64_t v = a; v <= b; ++v) vals.push_back(v);
        return vals;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stoll(item));
    if (vals.empty()) throw domain_error("range: empty specification");
    return vals;
}

class RecordSink {
public:
    RecordSink(std::ostream& os, const std::string& format, const char* header)
        : os_(os), json_(format == "json") {
        if (!json_) os_ << header << '\n';
    }

    void write(const OutputRecord& rec) {
        if (json_) {
            items_.push_back(record_to_json(rec));
        } else {
            write_csv_row(os_, rec);
        }
    }

    ~RecordSink() {
        if (json_) {
            os_ << '[';
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i) os_ << ',';
                os_ << items_[i];
            }
            os_ << "]\n";
        }
    }

private:
    std::ostream& os_;
    bool json_;
    std::vector<std::string> items_;
};

Evaluation evaluate_method(const std::string& method, const SumQuery& q,
                           const Options& opt) {
    if (method == "direct") {
        Evaluation ev;
        ev.method = Method::direct;
        ev.value = cos_cosecant_sum(q);
        ev.terms_used = q.n - 1;
        return ev;
    }
    if (method == "finite_series") {
        Evaluation ev;
        ev.method = Method::finite_series;
        ev.value = finite_series_eval(q);
        ev.terms_used = q.nu_mod;
        return ev;
    }
    if (method == "sin2" || method == "cos2" || method == "ctg_product") {
        Evaluation ev;
        ev.method = Method::finite_series;
        ev.value = finite_series_variants(
            q, method == "sin2" ? FiniteVariant::sin2
                                : method == "cos2" ? FiniteVariant::cos2
                                                   : FiniteVariant::ctg_product);
        ev.terms_used = q.n - 1;
        return ev;
    }
    if (method == "infinite_series") return infinite_series_eval(q, opt.policy);
    if (method == "integral_poisson")
        return integral_eval_poisson(q, QuadratureSpec::interval(opt.policy.rel_tol));
    if (method == "integral_hyperbolic")
        return integral_eval_hyperbolic(q, QuadratureSpec::interval(opt.policy.rel_tol));
    if (method == "asymptotic_main") {
        const ExpansionResult r = main_expansion(q, 4);
        Evaluation ev;
        ev.method = Method::asymptotic_main;
        ev.value = r.partial_sum;
        ev.terms_used = r.orders_used;
        ev.error_bracket = r.bracket;
        return ev;
    }
    if (method == "rough") {
        Evaluation ev;
        ev.method = Method::asymptotic_main;
        ev.value = rough_asymptotic(q);
        return ev;
    }
    if (method == "asymptotic_refined" || method == "refined") return refined_expansion(q);
    if (method == "approximation") {
        Evaluation ev;
        ev.method = Method::approximation;
        ev.value = simple_approximation(q);
        return ev;
    }
    throw domain_error("unknown method: " + method);
}

bool applicable(const std::string& method, const SumQuery& q) {
    if (q.is_watson_case()) return method == "direct" || method == "finite_series";
    if (method == "infinite_series") return 2 * q.nu_mod != q.n;
    if (method == "rough") return 6 * q.nu_mod != q.n && 6 * q.nu_mod != 5 * q.n;
    return true;
}

OutputRecord make_record(const SumQuery& q, const std::string& method,
                         const Evaluation& ev, std::optional<double> residual) {
    OutputRecord rec;
    rec.n = q.n;
    rec.nu = q.is_watson_case() ? std::nullopt : std::optional<std::int64_t>(q.nu_mod);
    rec.method = method;
    rec.value = ev.value;
    if (ev.error_bracket) {
        rec.bracket_lo = ev.error_bracket->lower;
        rec.bracket_hi = ev.error_bracket->upper;
    }
    rec.residual = residual;
    return rec;
}

const std::vector<std::string>& default_eval_methods() {
    static const std::vector<std::string> methods = {
        "direct",           "finite_series",       "infinite_series",
        "integral_poisson", "integral_hyperbolic", "asymptotic_main",
        "asymptotic_refined", "approximation"};
    return methods;
}

int cmd_eval(std::int64_t n, std::int64_t nu, const std::string& method_opt,
             const Options& opt, std::ostream& out, std::ostream& err) {
    const SumQuery q(n, nu);
    RecordSink sink(out, opt.format, output_record_header());
    if (q.is_watson_case()) err << "note: nu = 0 (mod n), Watson sum case S_n\n";
    if (!method_opt.empty()) {
        // let the operation itself report the precise failure (singular point,
        // excluded point, Watson case)
        const Evaluation ev = evaluate_method(method_opt, q, opt);
        std::optional<double> residual;
        if (method_opt != "direct") residual = cos_cosecant_sum(q) - ev.value;
        sink.write(make_record(q, method_opt, ev, residual));
        return 0;
    }
    const double oracle = cos_cosecant_sum(q);
    for (const auto& m : default_eval_methods()) {
        if (!applicable(m, q)) continue;
        try {
            const Evaluation ev = evaluate_method(m, q, opt);
            std::optional<double> residual;
            if (m != "direct") residual = oracle - ev.value;
            sink.write(make_record(q, m, ev, residual));
        } catch (const std::exception& e) {
            err << "note: " << m << " skipped: " << e.what() << '\n';
        }
    }
    return 0;
}

int cmd_table(const std::string& mode, const std::vector<std::int64_t>& ns,
              const std::vector<std::int64_t>& nus, const std::string& method,
              const Options& opt, std::ostream& out) {
    const bool error_mode = mode == "error_vs_n" || mode == "error_vs_nu";
    const bool nu_inner = mode == "vs_nu" || mode == "error_vs_nu";

    struct Cell {
        std::int64_t n, nu;
    };
    std::vector<Cell> grid;
    if (nu_inner) {
        for (auto n : ns)
            for (auto nu : nus) grid.push_back({n, nu});
    } else {
        for (auto nu : nus)
            for (auto n : ns) grid.push_back({n, nu});
    }

    std::vector<OutputRecord> rows(grid.size());
    parallel_for(0, static_cast<std::int64_t>(grid.size()), opt.threads, [&](std::int64_t i) {
        const auto [n, nu] = grid[i];
        OutputRecord rec;
        rec.n = n;
        rec.nu = nu;
        rec.method = method;
        try {
            const SumQuery q(n, nu);
            const Evaluation ev = evaluate_method(method, q, opt);
            rec = make_record(q, method, ev, std::nullopt);
            rec.nu = nu;  // keep the requested nu in table output
            if (error_mode) rec.residual = cos_cosecant_sum(q) - ev.value;
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        rows[i] = rec;
    });

    RecordSink sink(out, opt.format, output_record_header());
    bool any_failed = false;
    for (const auto& rec : rows) {
        if (!rec.error.empty()) any_failed = true;
        sink.write(rec);
    }
    return any_failed ? 1 : 0;
}

int cmd_verify(std::int64_t n_max, const Options& opt, std::ostream& out) {
    const auto reports = run_catalog(n_max, opt.policy, opt.threads);
    int failed = 0;
    nlohmann::ordered_json j;
    j["version"] = "1";
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json r;
        r["id"] = to_string(rep.id);
        r["swept"] = rep.swept;
        r["worst_abs_residual"] = rep.worst_abs_residual;
        r["worst_rel_residual"] = rep.worst_rel_residual;
        r["worst_case_params"] = rep.worst_case_params;
        r["pass"] = rep.pass;
        j["reports"].push_back(r);
        if (!rep.pass) ++failed;
    }
    j["summary"] = {{"total", reports.size()},
                    {"passed", reports.size() - failed},
                    {"failed", failed}};
    out << j.dump(2) << '\n';
    return failed == 0 ? 0 : 1;
}

int cmd_bounds(const std::vector<std::int64_t>& ns, const std::vector<std::int64_t>& nus,
               const Options& opt, std::ostream& out) {
    for (auto n : ns)
        if (n < 4)
            throw domain_error("bounds: validity floor is n >= 4 (small n excluded)");

    struct Cell {
        std::int64_t n, nu;
    };
    std::vector<Cell> grid;
    for (auto n : ns) {
        if (nus.empty()) {
            for (std::int64_t nu = 1; nu < n; ++nu) grid.push_back({n, nu});
        } else {
            for (auto nu : nus)
                if (nu >= 1 && nu < n) grid.push_back({n, nu});
        }
    }

    struct Row {
        std::int64_t n, nu;
        double lo, oracle, hi;
        bool contained;
    };
    std::vector<Row> rows(grid.size());
    parallel_for(0, static_cast<std::int64_t>(grid.size()), opt.threads, [&](std::int64_t i) {
        const auto [n, nu] = grid[i];
        const SumQuery q(n, nu);
        const RemainderBracket b = bounds(q);
        const double oracle = cos_cosecant_sum(q);
        rows[i] = Row{n, nu, b.lower, oracle, b.upper,
                      b.contains_within_rounding(oracle)};
    });

    bool all_ok = true;
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"n", r.n},
                           {"nu", r.nu},
                           {"lower", r.lo},
                           {"oracle", r.oracle},
                           {"upper", r.hi},
                           {"contained", r.contained}});
            all_ok = all_ok && r.contained;
        }
        out << arr.dump() << '\n';
    } else {
        out << "n,nu,lower,oracle,upper,contained\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.nu << ',' << format_double(r.lo) << ','
                << format_double(r.oracle) << ',' << format_double(r.hi) << ','
                << (r.contained ? "true" : "false") << '\n';
            all_ok = all_ok && r.contained;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_pv(std::int64_t n, std::int64_t k, std::int64_t R, const Options& opt,
           std::ostream& out) {
    const double direct = polya_vinogradov_direct(n, k);
    const Evaluation series = pv_sum_series(n, k, R);

    RecordSink sink(out, opt.format, output_record_header());
    OutputRecord d;
    d.n = n;
    d.nu = k;
    d.method = "pv_direct";
    d.value = direct;
    sink.write(d);

    OutputRecord s;
    s.n = n;
    s.nu = k;
    s.method = "pv_series";
    s.value = series.value;
    s.bracket_lo = series.error_bracket->lower;
    s.bracket_hi = series.error_bracket->upper;
    s.residual = direct - series.value;
    sink.write(s);

    return series.error_bracket->contains_within_rounding(direct) ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"cosec: finite cosecant sums, their representations and asymptotics"};
    app.fallthrough();

    Options opt;
    app.add_option("--abs-tol", opt.policy.abs_tol, "absolute tolerance");
    app.add_option("--rel-tol", opt.policy.rel_tol, "relative tolerance");
    app.add_option("--max-terms", opt.policy.max_terms, "series term budget");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", opt.out_path, "output file (default stdout)");
    app.add_option("--threads", opt.threads, "worker threads, 0 = auto");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one sum by one or all methods");
    std::int64_t eval_n = 0, eval_nu = 0;
    std::string eval_method;
    eval->add_option("--n", eval_n, "modulus n >= 2")->required();
    eval->add_option("--nu", eval_nu, "frequency nu (any integer)")->required();
    eval->add_option("--method", eval_method, "single method to run");

    // table
    auto* table = app.add_subcommand("table", "grid of values or approximation errors");
    std::string table_mode, table_n = "2..50", table_nu = "1", table_method = "direct";
    table->add_option("--mode", table_mode, "vs_n | vs_nu | error_vs_n | error_vs_nu")
        ->required()
        ->check(CLI::IsMember({"vs_n", "vs_nu", "error_vs_n", "error_vs_nu"}));
    table->add_option("--n", table_n, "n range (A..B or comma list)");
    table->add_option("--nu", table_nu, "nu range (A..B or comma list)");
    table->add_option("--method", table_method, "method for the value column");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    std::int64_t verify_n_max = 30;
    verify->add_option("--n-max", verify_n_max, "largest modulus to sweep");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "two-sided bound containment sweep");
    std::string bounds_n, bounds_nu;
    bounds_cmd->add_option("--n", bounds_n, "n range")->required();
    bounds_cmd->add_option("--nu", bounds_nu, "nu range (default all 1..n-1)");

    // pv
    auto* pv = app.add_subcommand("pv", "Polya-Vinogradov sum, direct vs series");
    std::int64_t pv_n = 0, pv_k = 0, pv_R = 2000;
    pv->add_option("--n", pv_n, "modulus")->required();
    pv->add_option("--k", pv_k, "frequency")->required();
    pv->add_option("--R", pv_R, "series truncation");

    app.require_subcommand(1);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) {
            err << "cannot open output file: " << opt.out_path << '\n';
            return 2;
        }
        sink = &file;
    }

    try {
        opt.policy.validate();
        if (eval->parsed()) return cmd_eval(eval_n, eval_nu, eval_method, opt, *sink, err);
        if (table->parsed())
            return cmd_table(table_mode, parse_range(table_n), parse_range(table_nu),
                             table_method, opt, *sink);
        if (verify->parsed()) return cmd_verify(verify_n_max, opt, *sink);
        if (bounds_cmd->parsed())
            return cmd_bounds(parse_range(bounds_n),
                              bounds_nu.empty() ? std::vector<std::int64_t>{}
                                                : parse_range(bounds_nu),
                              opt, *sink);
        if (pv->parsed()) return cmd_pv(pv_n, pv_k, pv_R, opt, *sink);
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nonconvergence_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("cosec");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cosec::cli
