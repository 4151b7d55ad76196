// alphaspec command-line tool. See README.md for the subcommands, the JSON
// shapes they print and the exit codes.

#include <alphaspec/alphaspec.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
namespace as = alphaspec;

enum ExitCode { ok = 0, usage = 2, undetermined = 3, verification_failed = 4 };

/// Values from the file named by ALPHASPEC_CONFIG. A key is looked up in the
/// object named after the subcommand first, then at top level.
class ConfigFile
{
public:
    ConfigFile()
    {
        const char* path = std::getenv("ALPHASPEC_CONFIG");
        if (path == nullptr || *path == '\0')
            return;
        std::ifstream in(path);
        if (!in)
            throw as::ParameterError(std::string("cannot open ALPHASPEC_CONFIG file ") + path);
        try {
            data_ = json::parse(in);
        } catch (const json::parse_error& e) {
            throw as::ParameterError(std::string("ALPHASPEC_CONFIG is not valid JSON: ") + e.what());
        }
        if (!data_.is_object())
            throw as::ParameterError("ALPHASPEC_CONFIG must hold a JSON object");
    }

    template <typename T>
    void apply(const CLI::Option* flag, const std::string& command, const std::string& key, T& target) const
    {
        if (flag->count() > 0)
            return;
        const json* found = nullptr;
        if (data_.contains(command) && data_[command].is_object() && data_[command].contains(key))
            found = &data_[command][key];
        else if (data_.contains(key))
            found = &data_[key];
        if (found == nullptr)
            return;
        try {
            target = found->get<T>();
        } catch (const json::exception&) {
            throw as::ParameterError("ALPHASPEC_CONFIG key '" + key + "' has the wrong type");
        }
    }

private:
    json data_ = json::object();
};

double round12(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

void round_floats(json& j)
{
    if (j.is_number_float())
        j = round12(j.get<double>());
    else if (j.is_structured())
        for (auto& item : j)
            round_floats(item);
}

std::string scalar_text(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    return v.dump();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void write_csv_rows(std::ostream& out, const std::vector<std::string>& columns, const json& rows)
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << csv_field(row.contains(columns[i]) ? scalar_text(row[columns[i]]) : "");
        out << '\n';
    }
}

void write_text(std::ostream& out, const json& j, const std::string& prefix = "")
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            write_text(out, *it, key);
        else
            out << key << ": " << (it->is_array() ? it->dump() : scalar_text(*it)) << '\n';
    }
}

struct Output
{
    std::string format = "json";
    std::string path;

    void emit(json j, const std::vector<std::string>& csv_columns = {}, const std::string& rows_key = "") const
    {
        round_floats(j);
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw as::ParameterError("cannot write output file " + path);
        }
        std::ostream& out = path.empty() ? std::cout : file;
        if (format == "json") {
            out << j.dump(2) << '\n';
        } else if (format == "text") {
            write_text(out, j);
        } else if (!rows_key.empty()) {
            write_csv_rows(out, csv_columns, j[rows_key]);
        } else {
            std::vector<std::string> columns;
            for (auto it = j.begin(); it != j.end(); ++it)
                if (it->is_primitive())
                    columns.push_back(it.key());
            write_csv_rows(out, columns, json::array({j}));
        }
    }
};

std::vector<int> parse_int_list(const std::string& text, std::size_t expected, const std::string& flag)
{
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw as::ParameterError(flag + " expects integers, got '" + text + "'");
        }
    }
    if (values.size() != expected)
        throw as::ParameterError(flag + " expects " + std::to_string(expected) + " comma-separated integers, got '" +
                                 text + "'");
    return values;
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw as::ParameterError("--n-range expects a..b, got '" + text + "'");
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        const int a = std::stoi(lo, &used_lo);
        const int b = std::stoi(hi, &used_hi);
        if (used_lo != lo.size() || used_hi != hi.size())
            throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::exception&) {
        throw as::ParameterError("--n-range expects a..b, got '" + text + "'");
    }
}

std::string read_stdin_token()
{
    std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!all.empty() && (all.back() == '\n' || all.back() == '\r' || all.back() == ' '))
        all.pop_back();
    return all;
}

const std::vector<std::string> sweep_columns{"n",      "t",     "k",        "alpha",   "delta1", "delta2",
                                             "delta0", "rho_t", "rho_half", "verdict", "resolved"};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"A_alpha spectral radius toolkit for t-connected graphs with bounded matching number"};
    app.require_subcommand(1);
    app.fallthrough();

    Output output;
    auto* format_opt = app.add_option("--format", output.format, "Output format")
                           ->check(CLI::IsMember({"json", "text", "csv"}));
    auto* output_opt = app.add_option("-o,--output", output.path, "Write the report to this file");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "A_alpha spectral radius and Perron vector of one graph");
    std::string graph6_text;
    std::string family_text;
    std::string half_text;
    double spectrum_alpha = 0.0;
    auto* g6_opt = spectrum_cmd->add_option("--graph6", graph6_text, "graph6 string, or - to read stdin");
    auto* family_opt = spectrum_cmd->add_option("--family", family_text, "n,s,k: K_s v (K_{n+1-2s-k} u co-K_{s+k-1})");
    auto* half_opt = spectrum_cmd->add_option("--half", half_text, "n,k: K_{(n-k)/2} v co-K_{(n+k)/2}");
    g6_opt->excludes(family_opt)->excludes(half_opt);
    family_opt->excludes(half_opt);
    auto* spectrum_alpha_opt = spectrum_cmd->add_option("--alpha", spectrum_alpha, "alpha in [0, 1]");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Which extremal family has the larger spectral radius");
    as::ScenarioParams classify_params;
    auto* cn = classify_cmd->add_option("--n", classify_params.n);
    auto* ct = classify_cmd->add_option("--t", classify_params.t);
    auto* ck = classify_cmd->add_option("--k", classify_params.k);
    auto* ca = classify_cmd->add_option("--alpha", classify_params.alpha);

    // verify-identity
    auto* verify_cmd = app.add_subcommand("verify-identity", "Exact check of the three polynomial identities");
    bool verify_json = false;
    bool perturb = false;
    verify_cmd->add_flag("--json", verify_json, "Machine-readable output");
    verify_cmd->add_flag("--perturb", perturb)->group("");

    // search
    auto* search_cmd = app.add_subcommand("search", "Maximum spectral radius over admissible graphs");
    as::SearchTask task;
    std::uint64_t samples = 0;
    bool exhaustive = false;
    auto* sn = search_cmd->add_option("--n", task.params.n);
    auto* st = search_cmd->add_option("--t", task.params.t);
    auto* sk = search_cmd->add_option("--k", task.params.k);
    auto* sa = search_cmd->add_option("--alpha", task.params.alpha);
    auto* exhaustive_opt = search_cmd->add_flag("--exhaustive", exhaustive, "All labelled graphs (n <= 8)");
    auto* samples_opt = search_cmd->add_option("--samples", samples, "Number of uniform random labelled graphs");
    exhaustive_opt->excludes(samples_opt);
    auto* seed_opt = search_cmd->add_option("--seed", task.seed);
    auto* workers_opt = search_cmd->add_option("--workers", task.workers)->check(CLI::Range(1, 256));

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Classification over a range of n");
    int sweep_t = 0;
    int sweep_k = 0;
    double sweep_alpha = 0.0;
    std::string range_text;
    std::string csv_path;
    auto* wt = sweep_cmd->add_option("--t", sweep_t);
    auto* wk = sweep_cmd->add_option("--k", sweep_k);
    auto* wa = sweep_cmd->add_option("--alpha", sweep_alpha);
    auto* wr = sweep_cmd->add_option("--n-range", range_text, "a..b");
    auto* csv_opt = sweep_cmd->add_option("--csv", csv_path, "Also write the table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        const ConfigFile config;
        config.apply(format_opt, "", "format", output.format);
        config.apply(output_opt, "", "output", output.path);
        if (output.format != "json" && output.format != "text" && output.format != "csv")
            throw as::ParameterError("format must be json, text or csv");

        if (spectrum_cmd->parsed()) {
            config.apply(spectrum_alpha_opt, "spectrum", "alpha", spectrum_alpha);
            const int sources = static_cast<int>(g6_opt->count() + family_opt->count() + half_opt->count());
            if (sources != 1)
                throw as::ParameterError("spectrum needs exactly one of --graph6, --family, --half");
            as::Graph g;
            if (g6_opt->count() > 0) {
                g = as::graph6_decode(graph6_text == "-" ? read_stdin_token() : graph6_text);
            } else if (family_opt->count() > 0) {
                const auto v = parse_int_list(family_text, 3, "--family");
                g = as::extremal_family({v[0], v[1], v[2]});
            } else {
                const auto v = parse_int_list(half_text, 2, "--half");
                g = as::half_family(v[0], v[1]);
            }
            auto j = as::spectral_json(as::largest_eigenpair(as::alpha_matrix(g, spectrum_alpha)), spectrum_alpha);
            j["graph6"] = as::graph6_encode(g);
            output.emit(j);
            return ok;
        }

        if (classify_cmd->parsed()) {
            config.apply(cn, "classify", "n", classify_params.n);
            config.apply(ct, "classify", "t", classify_params.t);
            config.apply(ck, "classify", "k", classify_params.k);
            config.apply(ca, "classify", "alpha", classify_params.alpha);
            const auto result = as::classify(classify_params);
            output.emit(as::classification_json(result));
            return result.verdict == as::Verdict::UndeterminedByTheorem ? undetermined : ok;
        }

        if (verify_cmd->parsed()) {
            namespace ep = as::exactpoly;
            const ep::RationalPoly perturbation =
                perturb ? ep::RationalPoly::var(ep::Var::x) * ep::RationalPoly::var(ep::Var::n) : ep::RationalPoly{};
            const auto reports = ep::verify_all(perturbation);
            bool all_pass = true;
            json list = json::array();
            for (const auto& r : reports) {
                all_pass = all_pass && r.pass;
                list.push_back({{"name", r.name}, {"pass", r.pass}, {"residual_terms", r.residual_terms}});
            }
            if (verify_json || format_opt->count() > 0) {
                output.emit({{"identities", list}});
            } else {
                for (const auto& r : reports) {
                    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << '\n';
                    for (const auto& term : r.residual_terms)
                        std::cout << "  residual: " << term << '\n';
                }
            }
            return all_pass ? ok : verification_failed;
        }

        if (search_cmd->parsed()) {
            config.apply(sn, "search", "n", task.params.n);
            config.apply(st, "search", "t", task.params.t);
            config.apply(sk, "search", "k", task.params.k);
            config.apply(sa, "search", "alpha", task.params.alpha);
            config.apply(seed_opt, "search", "seed", task.seed);
            config.apply(workers_opt, "search", "workers", task.workers);
            config.apply(samples_opt, "search", "samples", samples);
            if (!exhaustive && samples > 0) {
                task.mode = as::SearchMode::Sample;
                task.sample_count = samples;
            }
            if (task.workers < 1)
                throw as::ParameterError("--workers must be at least 1");
            const auto report = as::run(task);
            output.emit(as::search_json(report));
            return report.verdict_confirmed ? ok : verification_failed;
        }

        if (sweep_cmd->parsed()) {
            config.apply(wt, "sweep", "t", sweep_t);
            config.apply(wk, "sweep", "k", sweep_k);
            config.apply(wa, "sweep", "alpha", sweep_alpha);
            config.apply(wr, "sweep", "n_range", range_text);
            config.apply(csv_opt, "sweep", "csv", csv_path);
            if (range_text.empty())
                throw as::ParameterError("sweep needs --n-range a..b");
            const auto [lo, hi] = parse_range(range_text);
            json rows = json::array();
            for (const auto& row : as::sweep(sweep_t, sweep_k, sweep_alpha, lo, hi)) {
                const auto& r = row.result;
                rows.push_back({{"n", row.n},
                                {"t", sweep_t},
                                {"k", sweep_k},
                                {"alpha", sweep_alpha},
                                {"delta1", r.delta1},
                                {"delta2", r.delta2},
                                {"delta0", r.delta0 ? json(*r.delta0) : json(nullptr)},
                                {"rho_t", r.rho_t},
                                {"rho_half", r.rho_half},
                                {"verdict", as::to_string(r.verdict)},
                                {"resolved", as::to_string(r.resolved)}});
            }
            round_floats(rows);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv)
                    throw as::ParameterError("cannot write CSV file " + csv_path);
                write_csv_rows(csv, sweep_columns, rows);
            }
            output.emit({{"rows", rows}}, sweep_columns, "rows");
            return ok;
        }
    } catch (const as::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        for (const auto& v : e.violations())
            std::cerr << "  - " << v << '\n';
        return usage;
    } catch (const as::DecodeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const as::CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const as::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const as::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return verification_failed;
    }
    return usage;
}
