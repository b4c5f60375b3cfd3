// bcm: exact moment tables, integer-sequence generators and identity
// verification for Bernoulli convolutions S(lambda) = sum lambda^{-n} X_n,
// plus floating-point characteristic-function and sampling oracles.

#include "bcm/analytic.hpp"
#include "bcm/bigint.hpp"
#include "bcm/moments.hpp"
#include "bcm/quadratic.hpp"
#include "bcm/rational.hpp"
#include "bcm/report.hpp"
#include "bcm/selfsim.hpp"
#include "bcm/sequences.hpp"
#include "bcm/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "json";
    std::string path;  // empty = stdout
};

std::ostream& open_output(const OutputOptions& opt, std::ofstream& file) {
    if (opt.path.empty()) return std::cout;
    file.open(opt.path);
    if (!file) throw std::runtime_error("cannot open output file '" + opt.path + "'");
    return file;
}

// One (index, value) table rendered as JSON rows, CSV or aligned text.
void emit_rows(std::ostream& os, const OutputOptions& opt, const std::string& column,
               const std::vector<std::pair<long, std::string>>& rows) {
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& [n, value] : rows) arr.push_back(json{{"n", n}, {column, value}});
        os << arr.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "n," << column << "\n";
        for (const auto& [n, value] : rows) os << n << "," << value << "\n";
    } else {
        for (const auto& [n, value] : rows) os << n << "\t" << value << "\n";
    }
}

void emit_object(std::ostream& os, const OutputOptions& opt, const json& obj) {
    if (opt.format == "json") {
        os << obj.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "key,value\n";
        for (auto it = obj.begin(); it != obj.end(); ++it)
            os << it.key() << "," << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    } else {
        for (auto it = obj.begin(); it != obj.end(); ++it)
            os << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
}

json report_to_json(const bcm::VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"n", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return json{{"identity", r.identity},
                {"n_min", r.n_min},
                {"n_max", r.n_max},
                {"passed", r.passed()},
                {"failures", failures}};
}

// One report per line so suites stream and stay diffable.
void emit_reports(std::ostream& os, const OutputOptions& opt,
                  const std::vector<bcm::VerificationReport>& reports) {
    if (opt.format == "csv") {
        os << "identity,n_min,n_max,passed,failures\n";
        for (const auto& r : reports)
            os << r.identity << "," << r.n_min << "," << r.n_max << ","
               << (r.passed() ? "true" : "false") << "," << r.failures.size() << "\n";
        return;
    }
    if (opt.format == "plain") {
        for (const auto& r : reports)
            os << (r.passed() ? "PASS" : "FAIL") << " " << r.identity << " (n=" << r.n_min << ".."
               << r.n_max << ")\n";
        return;
    }
    for (const auto& r : reports) os << report_to_json(r).dump() << "\n";
}

bcm::Rational parse_q(const std::string& text) {
    bcm::Rational q = bcm::Rational::from_string(text);
    if (!(bcm::Rational(1) < q)) throw CLI::ValidationError("--q", "q must exceed 1");
    return q;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Bernoulli-convolution moment tables and identity checks"};
    app.require_subcommand(1);
    // let global --format/--out appear after the subcommand as well
    app.fallthrough();

    OutputOptions out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    // moments
    auto* cmd_moments = app.add_subcommand("moments", "even moment table m_2n as exact rationals in q = lambda^2");
    std::string mom_q = "0";
    long mom_n = 10;
    std::string mom_method = "bezp";
    int mom_k = 2;
    cmd_moments->add_option("--q", mom_q, "q = lambda^2 as NUM/DEN or integer (> 1)");
    cmd_moments->add_option("--n", mom_n, "max half-index N (rows n = 0..N)")->check(CLI::NonNegativeNumber);
    cmd_moments->add_option("--method", mom_method, "recursion to use")
        ->check(CLI::IsMember({"bezp", "l4", "general", "euler", "silver"}))
        ->capture_default_str();
    cmd_moments->add_option("--k", mom_k, "k for --method general")->check(CLI::Range(1, 6));

    // weights
    auto* cmd_weights = app.add_subcommand("weights", "cosh-product derivative table W^(k)_2n at q = lambda^2");
    std::string wt_q;
    int wt_k = 2;
    long wt_n = 10;
    cmd_weights->add_option("--q", wt_q, "q = lambda^2 as NUM/DEN or integer (> 0)")->required();
    cmd_weights->add_option("--k", wt_k, "number of cosh factors")->check(CLI::Range(1, 16));
    cmd_weights->add_option("--n", wt_n, "max half-index N")->check(CLI::NonNegativeNumber);

    // sequences
    auto* cmd_seq = app.add_subcommand("sequences", "integer/rational sequence values for indices 0..N");
    std::string seq_name;
    long seq_n = 10;
    cmd_seq->add_option("--name", seq_name, "pell | pell-lucas | lucas | euler | tau")
        ->required()
        ->check(CLI::IsMember({"pell", "pell-lucas", "lucas", "euler", "tau"}));
    cmd_seq->add_option("--n", seq_n, "max index (euler: half-index k of E_2k)")->check(CLI::NonNegativeNumber);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the exact identity suites");
    std::string suite = "all";
    long n_max = 20;
    std::string ver_q;
    int ver_k = 4;
    cmd_verify->add_option("--suite", suite, "identity suite")
        ->check(CLI::IsMember({"selfsim", "remarks", "pell", "euler", "all"}))
        ->capture_default_str();
    cmd_verify->add_option("--n-max", n_max, "check indices up to this n")->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--q", ver_q, "selfsim only: run at this q instead of the default grid");
    cmd_verify->add_option("--k", ver_k, "selfsim only: k for the general expansion")->check(CLI::Range(2, 6));

    // charfn
    auto* cmd_charfn = app.add_subcommand("charfn", "truncated characteristic function with tail bound");
    double cf_lambda = 0, cf_t = 0, cf_tol = 1e-12;
    cmd_charfn->add_option("--lambda", cf_lambda, "lambda > 1")->required();
    cmd_charfn->add_option("--t", cf_t, "evaluation point")->required();
    cmd_charfn->add_option("--tol", cf_tol, "truncation tolerance")->capture_default_str();

    // density
    auto* cmd_density = app.add_subcommand("density", "density of S(sqrt(2)): pointwise or exact moment");
    double dn_x = 0;
    long dn_moment = -1;
    auto* opt_x = cmd_density->add_option("--x", dn_x, "evaluate the density at x");
    auto* opt_m = cmd_density->add_option("--moment", dn_moment, "exact 2n-th moment of the density");
    opt_x->excludes(opt_m);

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "seeded Monte Carlo draws from truncated S(lambda)");
    bcm::SamplerConfig cfg;
    bool raw = false;
    cmd_sample->add_option("--lambda", cfg.lambda, "lambda > 1")->required();
    cmd_sample->add_option("--count", cfg.count, "number of samples")->required()->check(CLI::PositiveNumber);
    cmd_sample->add_option("--depth", cfg.depth, "terms per sample")->capture_default_str()->check(CLI::PositiveNumber);
    cmd_sample->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    cmd_sample->add_flag("--raw", raw, "include the raw samples in the output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    try {
        std::ostream& os = open_output(out, file);

        if (cmd_moments->parsed()) {
            bcm::MomentTable table;
            if (mom_method == "silver") {
                if (cmd_moments->count("--q") > 0 && bcm::Rational::from_string(mom_q) != bcm::Rational(2))
                    throw CLI::ValidationError("--q", "method silver is the q = 2 closed form");
                table = bcm::moments_silver_closed(mom_n);
            } else {
                bcm::Rational q = parse_q(mom_q);
                if (mom_method == "bezp") table = bcm::moments_basic(q, mom_n);
                else if (mom_method == "l4") table = bcm::moments_lambda4(q, mom_n);
                else if (mom_method == "general") table = bcm::moments_general_k(q, mom_k, mom_n);
                else table = bcm::moments_euler_inverse(q, mom_n);
            }
            std::vector<std::pair<long, std::string>> rows;
            for (long n = 0; n <= table.n_max(); ++n) rows.emplace_back(n, table.m[static_cast<std::size_t>(n)].str());
            emit_rows(os, out, "m2n", rows);
            return kExitOk;
        }

        if (cmd_weights->parsed()) {
            bcm::Rational q = bcm::Rational::from_string(wt_q);
            bcm::WeightTable table = bcm::weights_recursive(q, wt_k, wt_n);
            std::vector<std::pair<long, std::string>> rows;
            for (long n = 0; n <= table.n_max(); ++n) rows.emplace_back(n, table.w[static_cast<std::size_t>(n)].str());
            emit_rows(os, out, "value", rows);
            return kExitOk;
        }

        if (cmd_seq->parsed()) {
            bcm::SequenceTable table = bcm::SequenceTable::build(bcm::sequence_from_token(seq_name), seq_n);
            std::vector<std::pair<long, std::string>> rows;
            for (long n = 0; n <= table.n_max(); ++n)
                rows.emplace_back(n, bcm::sequence_value_str(table.values[static_cast<std::size_t>(n)]));
            emit_rows(os, out, "value", rows);
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            std::vector<bcm::VerificationReport> reports;
            auto append = [&](std::vector<bcm::VerificationReport> rs) {
                for (auto& r : rs) reports.push_back(std::move(r));
            };
            if (suite == "selfsim" || suite == "all") {
                if (!ver_q.empty()) {
                    bcm::Rational q = parse_q(ver_q);
                    reports.push_back(bcm::verify_selfsim_k2(q, n_max));
                    reports.push_back(bcm::verify_selfsim_k3(q, n_max));
                    reports.push_back(bcm::verify_selfsim_k(q, ver_k, n_max));
                } else {
                    for (long q : {2L, 4L, 9L}) reports.push_back(bcm::verify_selfsim_k2(bcm::Rational(q), n_max));
                    for (long q : {2L, 4L}) reports.push_back(bcm::verify_selfsim_k3(bcm::Rational(q), n_max));
                    reports.push_back(bcm::verify_selfsim_k(bcm::Rational(2), 4, n_max));
                }
            }
            if (suite == "remarks" || suite == "all") {
                append(bcm::verify_remark_q9(n_max));
                append(bcm::verify_remark_q5(n_max));
            }
            if (suite == "euler" || suite == "all") append(bcm::verify_euler_binomial_identities(n_max));
            if (suite == "pell" || suite == "all") append(bcm::verify_pell_identities(n_max));

            emit_reports(os, out, reports);
            for (const auto& r : reports)
                if (!r.passed()) return kExitVerifyFailed;
            return kExitOk;
        }

        if (cmd_charfn->parsed()) {
            bcm::CharFnEval eval = bcm::charfn(cf_lambda, cf_t, cf_tol);
            emit_object(os, out, json{{"lambda", eval.lambda},
                                      {"t", eval.t},
                                      {"depth", eval.depth},
                                      {"value", eval.value},
                                      {"tail_bound", eval.tail_bound}});
            return kExitOk;
        }

        if (cmd_density->parsed()) {
            if (*opt_m) {
                bcm::Rational m = bcm::silver_density_exact_moment(dn_moment);
                emit_object(os, out, json{{"n", dn_moment}, {"m2n", m.str()}});
            } else if (*opt_x) {
                emit_object(os, out, json{{"x", dn_x}, {"density", bcm::silver_density(dn_x)}});
            } else {
                throw CLI::ValidationError("density", "pass --x or --moment");
            }
            return kExitOk;
        }

        if (cmd_sample->parsed()) {
            bcm::SampleResult res = bcm::sample_s(cfg, raw);
            json obj{{"lambda", cfg.lambda},
                     {"count", res.summary.count},
                     {"depth", res.summary.depth},
                     {"seed", res.summary.seed},
                     {"rng", res.summary.rng},
                     {"mean", res.summary.mean},
                     {"mean_sq", res.summary.mean_sq},
                     {"mean_pow4", res.summary.mean_pow4},
                     {"min", res.summary.min},
                     {"max", res.summary.max},
                     {"truncation_tail", res.summary.truncation_tail}};
            if (raw) obj["samples"] = res.samples;
            emit_object(os, out, obj);
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
