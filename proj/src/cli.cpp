#include "probdist/cli.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "probdist/builtin_distributions.hpp"
#include "probdist/chi_squared_test.hpp"
#include "probdist/distribution.hpp"
#include "probdist/random.hpp"

namespace probdist {

namespace {

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownDistributionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Shortest round-trip decimal, capped at `digits` significant digits.
std::string format_significant(double value, int digits) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char shortest[64];
    const auto result = std::to_chars(shortest, shortest + sizeof shortest, value);
    *result.ptr = '\0';
    int significant = 0;
    bool seen_nonzero = false;
    for (const char* c = shortest; *c != '\0' && *c != 'e' && *c != 'E'; ++c) {
        if (*c < '0' || *c > '9') continue;
        if (*c != '0') seen_nonzero = true;
        if (seen_nonzero) ++significant;
    }
    if (significant <= digits) return shortest;
    char capped[64];
    std::snprintf(capped, sizeof capped, "%.*g", digits, value);
    return capped;
}

// --params values, e.g. "n=10,p=0.25". Names are consumed by the family
// constructors below; anything left over is an error.
class ParamSet {
public:
    ParamSet(const std::string& kind, const std::string& text) : kind_(kind) {
        if (text.empty()) return;
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = text.find(',', start);
            const std::string item =
                text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size()) {
                throw std::invalid_argument(kind_ + ": malformed parameter '" + item +
                                            "', expected name=value");
            }
            const std::string name = item.substr(0, eq);
            if (values_.count(name) != 0) {
                throw std::invalid_argument(kind_ + ": duplicate parameter '" + name + "'");
            }
            values_[name] = item.substr(eq + 1);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    double take_real(const std::string& name) {
        const auto it = values_.find(name);
        if (it == values_.end()) {
            throw std::invalid_argument(kind_ + ": missing parameter '" + name + "'");
        }
        const std::string text = it->second;
        values_.erase(it);
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0') {
            throw std::invalid_argument(kind_ + ": parameter " + name + "='" + text +
                                        "' is not a number");
        }
        return v;
    }

    long long take_integer(const std::string& name) {
        const double v = take_real(name);
        if (std::floor(v) != v || std::fabs(v) > 9.0e18) {
            throw std::invalid_argument(kind_ + ": parameter " + name + " must be an integer");
        }
        return static_cast<long long>(v);
    }

    void expect_empty() const {
        if (!values_.empty()) {
            throw std::invalid_argument(kind_ + ": unknown parameter '" + values_.begin()->first +
                                        "'");
        }
    }

private:
    std::string kind_;
    std::map<std::string, std::string> values_;
};

using AnyDistribution = std::variant<DiscreteDistribution, ContinuousDistribution>;

AnyDistribution make_distribution(const std::string& kind, const std::string& params_text) {
    ParamSet params(kind, params_text);
    const auto finish = [&params](AnyDistribution dist) {
        params.expect_empty();
        return dist;
    };
    if (kind == "binomial") {
        const long long n = params.take_integer("n");
        const double p = params.take_real("p");
        return finish(binomial_distribution(n, p));
    }
    if (kind == "poisson") return finish(poisson_distribution(params.take_real("lambda")));
    if (kind == "geometric") return finish(geometric_distribution(params.take_real("p")));
    if (kind == "negative-binomial") {
        const double r = params.take_real("r");
        const double p = params.take_real("p");
        return finish(negative_binomial_distribution(r, p));
    }
    if (kind == "hypergeometric") {
        const long long m = params.take_integer("m");
        const long long n = params.take_integer("n");
        const long long k = params.take_integer("k");
        return finish(hypergeometric_distribution(m, n, k));
    }
    if (kind == "uniform") {
        const double a = params.take_real("a");
        const double b = params.take_real("b");
        return finish(uniform_distribution(a, b));
    }
    if (kind == "exponential") return finish(exponential_distribution(params.take_real("lambda")));
    if (kind == "normal") {
        const double mu = params.take_real("mu");
        const double sigma = params.take_real("sigma");
        return finish(normal_distribution(mu, sigma));
    }
    if (kind == "gamma") {
        const double alpha = params.take_real("alpha");
        const double lambda = params.take_real("lambda");
        return finish(gamma_distribution(alpha, lambda));
    }
    if (kind == "chi-squared") return finish(chi_squared_distribution(params.take_real("nu")));
    if (kind == "t") return finish(student_t_distribution(params.take_real("nu")));
    if (kind == "f") {
        const double nu1 = params.take_real("nu1");
        const double nu2 = params.take_real("nu2");
        return finish(fisher_f_distribution(nu1, nu2));
    }
    if (kind == "beta") {
        const double alpha = params.take_real("alpha");
        const double beta = params.take_real("beta");
        return finish(beta_distribution(alpha, beta));
    }
    throw UnknownDistributionError(
        "unknown distribution '" + kind +
        "' (expected one of: binomial, poisson, geometric, negative-binomial, hypergeometric, "
        "uniform, exponential, normal, gamma, chi-squared, t, f, beta)");
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// One row per line, comma-separated nonnegative integers, no header.
ContingencyTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open table file '" + path + "'");
    std::vector<std::vector<long long>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            throw CsvError("table file '" + path + "': line " + std::to_string(lineno) +
                           " is empty");
        }
        std::vector<long long> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            const std::size_t comma = line.find(',', start);
            const std::string field = trim(
                line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            long long value = 0;
            const auto [ptr, ec] =
                std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() ||
                value < 0) {
                throw CsvError("table file '" + path + "': line " + std::to_string(lineno) +
                               ": '" + field + "' is not a nonnegative integer");
            }
            row.push_back(value);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    try {
        return ContingencyTable(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw CsvError("table file '" + path + "': " + e.what());
    }
}

void warn_low_expected_counts(const ChiSquaredTestResult& result, std::ostream& err) {
    if (result.cells_below_five.empty()) return;
    err << "warning: expected count below 5 in " << result.cells_below_five.size()
        << " cell(s):";
    for (const auto& [i, j] : result.cells_below_five) err << " (" << i << "," << j << ")";
    err << "\n";
}

constexpr const char* kHelpFooter =
    "\nExit codes:\n"
    "  0  success\n"
    "  1  usage error (unknown flag, missing argument)\n"
    "  2  unknown distribution kind\n"
    "  3  invalid parameter or argument value\n"
    "  4  invalid contingency table\n"
    "  5  domain error (e.g. probability outside [0, 1])\n"
    "  6  numerical failure (iteration or subdivision budget exceeded)\n";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Univariate probability distributions: densities, CDFs, quantiles,\n"
                 "random variates, and Pearson's chi-squared independence test."};
    app.footer(kHelpFooter);
    app.require_subcommand(1);

    std::string dist_kind;
    std::string params_text;
    double at = 0.0;
    double prob = 0.0;
    bool upper_tail = false;
    long long count = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string table_path;
    int digits = 15;

    const auto add_dist_options = [&](CLI::App* cmd) {
        cmd->add_option("--dist", dist_kind, "distribution kind")->required();
        cmd->add_option("--params", params_text, "parameters as name=value,name=value")
            ->required();
        cmd->add_option("--digits", digits, "significant digits in output (default 15)")
            ->check(CLI::Range(1, 17));
    };

    CLI::App* density_cmd = app.add_subcommand("density", "evaluate the density / mass function");
    add_dist_options(density_cmd);
    density_cmd->add_option("--at", at, "evaluation point")->required();

    CLI::App* cdf_cmd = app.add_subcommand("cdf", "evaluate P(X <= x), or P(X > x) with --upper-tail");
    add_dist_options(cdf_cmd);
    cdf_cmd->add_option("--at", at, "evaluation point")->required();
    cdf_cmd->add_flag("--upper-tail", upper_tail, "report the upper tail P(X > x)");

    CLI::App* quantile_cmd = app.add_subcommand("quantile", "evaluate the quantile function");
    add_dist_options(quantile_cmd);
    quantile_cmd->add_option("--p", prob, "probability in [0, 1]")->required();
    quantile_cmd->add_flag("--upper-tail", upper_tail, "interpret --p as an upper-tail probability");

    CLI::App* sample_cmd = app.add_subcommand("sample", "draw random variates, one per line");
    add_dist_options(sample_cmd);
    sample_cmd->add_option("--n", count, "number of variates (default 1)")
        ->check(CLI::NonNegativeNumber);
    sample_cmd->add_option("--seed", seed, "seed for the generator")->capture_default_str();

    CLI::App* chisq_cmd = app.add_subcommand(
        "chisq", "Pearson chi-squared independence test on a contingency table;\n"
                 "prints the statistic, degrees of freedom, and p-value");
    chisq_cmd->add_option("--table", table_path, "CSV file of counts, one row per line")
        ->required();
    chisq_cmd->add_option("--digits", digits, "significant digits in output (default 15)")
        ->check(CLI::Range(1, 17));

    try {
        app.parse(argc, argv);
        seed_given = sample_cmd->count("--seed") > 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::kSuccess : exit_code::kUsage;
    }

    try {
        if (app.got_subcommand(chisq_cmd)) {
            const ChiSquaredTestResult result = independence_test(load_table(table_path));
            warn_low_expected_counts(result, err);
            out << format_significant(result.statistic, digits) << "\n";
            out << result.degrees_of_freedom << "\n";
            out << format_significant(result.p_value, digits) << "\n";
            return exit_code::kSuccess;
        }

        const AnyDistribution dist = make_distribution(dist_kind, params_text);

        if (app.got_subcommand(density_cmd)) {
            const double value =
                std::visit([&](const auto& d) { return d.density(at); }, dist);
            out << format_significant(value, digits) << "\n";
        } else if (app.got_subcommand(cdf_cmd)) {
            const double value = std::visit(
                [&](const auto& d) { return d.probability(at, !upper_tail); }, dist);
            out << format_significant(value, digits) << "\n";
        } else if (app.got_subcommand(quantile_cmd)) {
            if (const auto* d = std::get_if<DiscreteDistribution>(&dist)) {
                out << d->quantile(prob, !upper_tail) << "\n";
            } else {
                const double value =
                    std::get<ContinuousDistribution>(dist).quantile(prob, !upper_tail);
                out << format_significant(value, digits) << "\n";
            }
        } else if (app.got_subcommand(sample_cmd)) {
            RandomState state = seed_given ? RandomState(seed) : RandomState::from_clock();
            if (!seed_given) err << "seed: " << state.seed() << "\n";
            for (long long i = 0; i < count; ++i) {
                if (const auto* d = std::get_if<DiscreteDistribution>(&dist)) {
                    out << d->sample(state) << "\n";
                } else {
                    out << format_significant(std::get<ContinuousDistribution>(dist).sample(state),
                                              digits)
                        << "\n";
                }
            }
        }
        return exit_code::kSuccess;
    } catch (const CsvError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kBadTable;
    } catch (const UnknownDistributionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kUnknownDistribution;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kDomainError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kBadParameter;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kNumericFailure;
    }
}

}  // namespace probdist
