#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qspin/class_function.hpp"
#include "qspin/fock.hpp"
#include "qspin/group_data.hpp"
#include "qspin/omega.hpp"
#include "qspin/verify.hpp"

using namespace qspin;

namespace {

enum Exit { pass = 0, assertion_failed = 1, usage_error = 2 };

struct Options {
    std::string group;
    std::string model;
    std::optional<int> N;
    std::string format = "text";
    std::uint64_t seed = 1;
    int D = 9;
    long e = 1;
};

GroupPtr resolve_group(const std::string& ref)
{
    if (ref.empty())
        return builtin_group("trivial");
    if (std::filesystem::exists(ref))
        return load_group(ref);
    return builtin_group(ref);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string class_name(const LabeledPartitionFn& rho, const GroupData& group)
{
    if (group.class_count() == 1)
        return rho.empty() ? "()" : rho.entries().front().second.str();
    return rho.str(group.labels());
}

int print_series(const std::string& kind, const std::string& product, const PowerSeries& s, const Options& opt)
{
    if (opt.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : s.coefficients())
            coeffs.push_back(c.get_str());
        std::cout << nlohmann::json{{"kind", kind}, {"product", product}, {"coefficients", coeffs}}.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,coefficient\n";
        for (std::size_t n = 0; n <= s.max_degree(); ++n)
            std::cout << n << "," << s[n].get_str() << "\n";
    } else {
        std::cout << "# " << product << "\n" << format_coefficients(s) << "\n";
    }
    return pass;
}

int cmd_series(const std::string& kind, const Options& opt)
{
    const auto N = static_cast<std::size_t>(opt.N.value_or(10));
    if (kind == "omega")
        return print_series(kind, "prod_{r odd} (1 - t^r)^{-1}", omega_dim_series(N), opt);
    if (kind == "point-dim") {
        const GroupPtr g = resolve_group(opt.group);
        return print_series(kind, "prod_{r odd} (1 - t^r)^{-" + std::to_string(g->class_count()) + "}",
                            dim_series_point(*g, N), opt);
    }
    if (kind == "fock-dim") {
        if (opt.model.empty())
            throw Error("fock-dim needs --model");
        const SectorModel m = SectorModel::load(opt.model);
        return print_series(kind,
                            "prod_{r odd} (1 + t^r)^{" + std::to_string(m.odd_dim()) + "} / (1 - t^r)^{" +
                                std::to_string(m.even_dim()) + "}  [" + m.describe() + "]",
                            dim_series(m, N), opt);
    }
    const std::string e = std::to_string(opt.e);
    if (kind == "euler")
        return print_series(kind, "prod_{r odd} (1 - t^r)^{" + std::to_string(-opt.e) + "}", euler_series(opt.e, N), opt);
    if (kind == "euler-s")
        return print_series(kind,
                            "prod_{r odd} (1 - t^r)^{" + std::to_string(-opt.e) + "} + prod_{r odd} (1 + t^r)^{" + e +
                                "} (prod_{r even} (1 + t^r)^{" + e + "} - prod_{r even} (1 - t^r)^{" + e + "}) / 2",
                            euler_s_series(opt.e, N), opt);
    throw Error("unknown series kind '" + kind + "'");
}

int cmd_chartable(int degree, const Options& opt)
{
    const GroupPtr g = resolve_group(opt.group);
    const CharTable table = chartable(g, degree);
    for (const auto& w : table.warnings)
        std::cerr << "warning: " << w << "\n";
    if (opt.format == "json") {
        nlohmann::json classes = nlohmann::json::array();
        for (std::size_t i = 0; i < table.classes.size(); ++i)
            classes.push_back({{"class", class_name(table.classes[i], *g)}, {"Z", table.centralizers[i].get_str()}});
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : table.rows) {
            nlohmann::json values = nlohmann::json::array();
            for (const auto& v : r.values)
                values.push_back(v.str());
            rows.push_back({{"name", r.name}, {"values", values}});
        }
        std::cout << nlohmann::json{{"group", g->name()},
                                    {"degree", degree},
                                    {"classes", classes},
                                    {"rows", rows},
                                    {"warnings", table.warnings}}
                         .dump(2)
                  << "\n";
        return pass;
    }
    // csv and text share the layout
    std::cout << "character";
    for (const auto& rho : table.classes)
        std::cout << "," << csv_field(class_name(rho, *g));
    std::cout << "\nZ_rho";
    for (const auto& z : table.centralizers)
        std::cout << "," << z.get_str();
    std::cout << "\n";
    for (const auto& r : table.rows) {
        std::cout << csv_field(r.name);
        for (const auto& v : r.values)
            std::cout << "," << csv_field(v.str());
        std::cout << "\n";
    }
    return pass;
}

Partition parse_parts(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            parts.push_back(std::stoi(item));
    return Partition(parts);
}

nlohmann::json basis_json(const std::map<Partition, Rational>& coeffs)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [mu, c] : coeffs)
        out.push_back({{"key", mu.parts()}, {"coeff", c.get_str()}});
    return out;
}

std::string basis_str(const std::string& symbol, const std::map<Partition, Rational>& coeffs)
{
    std::string out;
    for (const auto& [mu, c] : coeffs) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string piece = (mag == 1 ? "" : mag.get_str() + " ") + symbol + mu.str();
        out += out.empty() ? (negative ? "-" : "") + piece : (negative ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

int cmd_expand(const std::string& Q, const std::string& q, const std::string& p, const Options& opt)
{
    OmegaElem f;
    std::string name;
    if (!Q.empty()) {
        f = Q_in_p(parse_parts(Q));
        name = "Q" + parse_parts(Q).str();
    } else if (!q.empty()) {
        f = q_monomial(parse_parts(q));
        name = "q" + parse_parts(q).str();
    } else if (!p.empty()) {
        f = p_monomial(parse_parts(p));
        name = "p" + parse_parts(p).str();
    } else {
        throw Error("expand needs one of --Q, --q, --p");
    }
    const auto in_q = to_q_basis(f);
    const auto in_Q = to_Q_basis(f);
    if (opt.format == "json") {
        std::cout << nlohmann::json{{"element", name}, {"p", f.to_json()}, {"q", basis_json(in_q)}, {"Q", basis_json(in_Q)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << name << "\n";
        std::cout << "p: " << (f.is_zero() ? "0" : f.str()) << "\n";
        std::cout << "q: " << basis_str("q", in_q) << "\n";
        std::cout << "Q: " << basis_str("Q", in_Q) << "\n";
    }
    return pass;
}

VerifyConfig verify_config(const Options& opt)
{
    VerifyConfig config;
    if (!opt.group.empty())
        config.group = resolve_group(opt.group);
    if (!opt.model.empty())
        config.model = SectorModel::load(opt.model);
    config.N = opt.N;
    config.D = opt.D;
    config.seed = opt.seed;
    return config;
}

int report_exit(const VerifyReport& report, const Options& opt, bool force_json)
{
    if (force_json || opt.format == "json")
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << render_text(report);
    if (report.passed())
        return pass;
    for (const auto& r : report.items)
        if (!r.passed) {
            std::cerr << "first failure: " << r.id << ": " << r.detail << "\n";
            break;
        }
    return assertion_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spin characters, Schur Q-functions, twisted Fock spaces and Q-lambda operations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--group", opt.group, "group JSON file or builtin name (trivial, Z2, Z3, S3)");
    app.add_option("--model", opt.model, "sector model JSON file");
    app.add_option("--N", opt.N, "truncation degree")->check(CLI::NonNegativeNumber);
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--D", opt.D, "maximal degree for operator sweeps")->check(CLI::PositiveNumber);
    app.add_option("--e", opt.e, "Euler number for euler and euler-s series");

    std::string kind;
    auto* series = app.add_subcommand("series", "print a generating series");
    series->add_option("kind", kind, "omega, point-dim, fock-dim, euler or euler-s")
        ->required()
        ->check(CLI::IsMember({"omega", "point-dim", "fock-dim", "euler", "euler-s"}));

    auto* fock_dim = app.add_subcommand("fock-dim", "graded dimensions of the Fock space of --model");

    int degree = 0;
    auto* chartable_cmd = app.add_subcommand("chartable", "spin character table over the even split classes");
    chartable_cmd->add_option("--degree", degree, "degree n")->required()->check(CLI::NonNegativeNumber);

    std::string Q, q, p;
    auto* expand = app.add_subcommand("expand", "p-, q- and Q-expansions of a symmetric function");
    expand->add_option("--Q", Q, "strict partition, e.g. 3,1");
    expand->add_option("--q", q, "partition for the monomial q_mu");
    expand->add_option("--p", p, "odd partition for p_mu");

    std::string suite;
    bool list = false;
    int samples = 50;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name or all");
    verify->add_flag("--list", list, "list suites and item ids");
    verify->add_option("--samples", samples, "random (eta, V) draws per model for heisenberg")
        ->check(CLI::PositiveNumber);

    VerifyConfig qconfig;
    auto* qlambda = app.add_subcommand("qlambda", "Q-lambda operations");
    auto* qverify = qlambda->add_subcommand("verify", "run the Q-lambda identity suite, JSON report");
    qlambda->require_subcommand(1);
    qverify->add_option("--lines", qconfig.lines, "maximal positive lines")->check(CLI::NonNegativeNumber);
    qverify->add_option("--neg", qconfig.negative_lines, "maximal negative lines")->check(CLI::NonNegativeNumber);
    qverify->add_option("--seeds", qconfig.qlambda_seeds, "number of consecutive seeds")->check(CLI::PositiveNumber);
    qverify->add_option("--vars", qconfig.variables, "line variables")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? pass : usage_error;
    }

    try {
        if (series->parsed())
            return cmd_series(kind, opt);
        if (fock_dim->parsed())
            return cmd_series("fock-dim", opt);
        if (chartable_cmd->parsed())
            return cmd_chartable(degree, opt);
        if (expand->parsed())
            return cmd_expand(Q, q, p, opt);
        if (verify->parsed()) {
            if (list) {
                for (const auto& s : verify_suites())
                    if (s != "all")
                        std::cout << s << "\n";
                for (const auto& item : verify_registry())
                    std::cout << item.id << "\n";
                return pass;
            }
            if (suite.empty())
                throw Error("verify needs a suite name (" + [] {
                    std::string names;
                    for (const auto& s : verify_suites())
                        names += (names.empty() ? "" : ", ") + s;
                    return names;
                }() + ")");
            VerifyConfig config = verify_config(opt);
            config.heisenberg_samples = samples;
            return report_exit(run_suite(suite, config), opt, false);
        }
        if (qverify->parsed()) {
            VerifyConfig config = verify_config(opt);
            config.lines = qconfig.lines;
            config.negative_lines = qconfig.negative_lines;
            config.qlambda_seeds = qconfig.qlambda_seeds;
            config.variables = qconfig.variables;
            return report_exit(run_suite("qlambda", config), opt, true);
        }
    } catch (const std::exception& e) {
        std::cerr << "qspin: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}
