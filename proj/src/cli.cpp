#include "qpart/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpart/identities.hpp"
#include "qpart/mseries.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"
#include "qpart/statistics.hpp"
#include "qpart/weights.hpp"

namespace qpart::cli {

namespace {

enum class Format { table, json, csv };

Format parse_format(const std::string& f) {
    if (f == "table") return Format::table;
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    throw CLI::ValidationError("--format must be table, json or csv");
}

struct EnumerateOptions {
    std::string set = "U";
    std::string stat = "norm";
    int value = 0;
    std::string weight;
    std::string params;
    std::string format = "table";
};

int run_enumerate(const EnumerateOptions& opt, std::ostream& out) {
    ConstraintSpec spec;
    if (opt.set == "PMkm") {
        Params p = Params::parse(opt.params);
        if (!p.M || !p.k || !p.m)
            throw std::invalid_argument("PMkm needs --params M=..,k=..,m=..");
        spec = ConstraintSpec::exact_parts_set(*p.M, *p.k, *p.m);
    } else {
        spec = ConstraintSpec::parse(opt.set);
    }
    StatisticId stat = parse_statistic(opt.stat);
    std::vector<Partition> rows = stat == StatisticId::norm
                                      ? enumerate_by_norm(spec, opt.value)
                                      : enumerate_by_statistic(spec, stat, opt.value);
    std::optional<WeightId> wt;
    if (!opt.weight.empty()) wt = WeightId::parse(opt.weight);

    switch (parse_format(opt.format)) {
        case Format::table:
            for (const Partition& p : rows) {
                out << (p.is_empty() ? "()" : p.to_string());
                if (wt) out << '\t' << weight(*wt, p);
                out << '\n';
            }
            break;
        case Format::json: {
            nlohmann::json j = nlohmann::json::array();
            for (const Partition& p : rows) {
                if (wt)
                    j.push_back({{"partition", p.to_json()}, {"weight", weight(*wt, p)}});
                else
                    j.push_back(p.to_json());
            }
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            out << (wt ? "partition,weight\n" : "partition\n");
            for (const Partition& p : rows) {
                std::string parts = p.to_string();
                std::replace(parts.begin(), parts.end(), ',', ' ');
                out << parts;
                if (wt) out << ',' << weight(*wt, p);
                out << '\n';
            }
            break;
    }
    return 0;
}

int run_stats(const std::string& partition_text, const std::string& format,
              std::ostream& out) {
    Partition p = Partition::parse(partition_text);
    const std::pair<const char*, std::int64_t> rows[] = {
        {"norm", p.norm()},
        {"nparts", static_cast<std::int64_t>(p.num_parts())},
        {"o", odd_index_sum(p)},
        {"e", even_index_sum(p)},
        {"o-conj", statistic(StatisticId::odd_index_sum_of_conjugate, p)},
        {"e-conj", statistic(StatisticId::even_index_sum_of_conjugate, p)},
        {"crank", crank(p)},
        {"durfee", durfee(p)},
    };
    switch (parse_format(format)) {
        case Format::table:
            for (const auto& [name, value] : rows) out << name << '\t' << value << '\n';
            break;
        case Format::json: {
            nlohmann::json j;
            j["partition"] = p.to_json();
            for (const auto& [name, value] : rows) j[name] = value;
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            out << "statistic,value\n";
            for (const auto& [name, value] : rows) out << name << ',' << value << '\n';
            break;
    }
    return 0;
}

int run_expand(const std::string& form, const std::string& params_text, int order,
               const std::string& format, std::ostream& out) {
    Params params;
    if (!params_text.empty()) params = Params::parse(params_text);
    Format fmt = parse_format(format);

    if (form == "phi" || form == "psi") {
        MSeries ms = boulet(parse_boulet(form), order);
        switch (fmt) {
            case Format::table:
                for (const auto& [e, c] : ms.terms())
                    out << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << '\t' << c
                        << '\n';
                break;
            case Format::json:
                out << ms.to_json().dump() << '\n';
                break;
            case Format::csv:
                out << "a,b,c,d,coeff\n";
                for (const auto& [e, c] : ms.terms())
                    out << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ',' << c
                        << '\n';
                break;
        }
        return 0;
    }

    Series s = is_product_form(form) ? product_form(form, params, order)
             : is_sum_form(form)     ? sum_form(form, params, order)
                                     : throw std::invalid_argument(
                                           "unknown form '" + form + "'");
    switch (fmt) {
        case Format::table:
            for (int n = 0; n <= s.order(); ++n) out << n << '\t' << s.coeff(n) << '\n';
            break;
        case Format::json:
            out << s.to_json().dump() << '\n';
            break;
        case Format::csv:
            out << "n,coeff\n";
            for (int n = 0; n <= s.order(); ++n) out << n << ',' << s.coeff(n) << '\n';
            break;
    }
    return 0;
}

int run_verify(const std::string& target, const std::string& params_text, int order,
               const std::string& format, bool timing, std::ostream& out) {
    std::vector<Identity> idents;
    if (!params_text.empty()) {
        idents.push_back(instantiate_family(target, Params::parse(params_text)));
    } else {
        idents = find_identities(target);
        if (idents.empty())
            throw std::invalid_argument("unknown identity or family '" + target + "'");
    }
    std::vector<VerificationReport> reports;
    reports.reserve(idents.size());
    for (const Identity& ident : idents) reports.push_back(verify(ident, order));
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.id < b.id;
              });

    bool all_ok = true;
    Format fmt = parse_format(format);
    if (fmt == Format::csv) out << VerificationReport::csv_header(timing) << '\n';
    for (const VerificationReport& rep : reports) {
        all_ok = all_ok && rep.verified;
        switch (fmt) {
            case Format::table: {
                out << rep.id << "\torder " << rep.order << '\t'
                    << (rep.verified ? "verified" : "FAILED");
                if (rep.first_mismatch) {
                    out << "\tfirst mismatch at q^";
                    const auto& e = rep.first_mismatch->exponent;
                    if (e.size() == 1) {
                        out << e[0];
                    } else {
                        out << '(';
                        for (std::size_t i = 0; i < e.size(); ++i)
                            out << (i ? "," : "") << e[i];
                        out << ')';
                    }
                    out << ": " << rep.first_mismatch->lhs << " vs "
                        << rep.first_mismatch->rhs;
                }
                if (timing) out << '\t' << rep.millis << " ms";
                out << '\n';
                break;
            }
            case Format::json:
                out << rep.to_json(timing).dump() << '\n';
                break;
            case Format::csv:
                out << rep.csv_row(timing) << '\n';
                break;
        }
    }
    return all_ok ? 0 : 1;
}

int run_ferrers(const std::string& partition_text, std::ostream& out) {
    Partition p = Partition::parse(partition_text);
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) out << (j ? " ." : ".");
        out << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact partition enumeration, q-series expansion and identity "
                 "verification"};
    app.require_subcommand(1);

    EnumerateOptions eopt;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list the members of a partition set with a given statistic value");
    enumerate->add_option("--set", eopt.set,
                          "preset (U, D, D_e, D_o, RR1, RR2, PMkm, K, C1hat, C2hat) "
                          "or inline JSON");
    enumerate->add_option("--stat", eopt.stat, "statistic tag (norm, o, o-conj, e-conj)");
    enumerate->add_option("--value", eopt.value, "statistic value")->required();
    enumerate->add_option("--weight", eopt.weight, "also print this weight per row");
    enumerate->add_option("--params", eopt.params, "parameters for PMkm (M=..,k=..,m=..)");
    enumerate->add_option("--format", eopt.format, "table, json or csv");

    std::string stats_partition;
    std::string stats_format = "table";
    CLI::App* stats = app.add_subcommand("stats", "print every statistic of a partition");
    stats->add_option("partition", stats_partition, "comma-separated decreasing parts")
        ->required();
    stats->add_option("--format", stats_format, "table, json or csv");

    std::string expand_form, expand_params;
    int expand_order = 20;
    std::string expand_format = "table";
    CLI::App* expand = app.add_subcommand(
        "expand", "expand a named product/sum form (or boulet phi/psi) to an order");
    expand->add_option("--form", expand_form, "form name")->required();
    expand->add_option("--order", expand_order, "truncation order");
    expand->add_option("--params", expand_params, "M=..,k=..,m=.. (M=inf allowed)");
    expand->add_option("--format", expand_format, "table, json or csv");

    std::string verify_target = "all", verify_params;
    int verify_order = 40;
    std::string verify_format = "table";
    bool verify_timing = false;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "verify one identity, a family, or the whole registry");
    verify_cmd->add_option("identity", verify_target, "identity id, family name or 'all'");
    verify_cmd->add_option("--order", verify_order, "truncation order");
    verify_cmd->add_option("--params", verify_params,
                           "instantiate a family outside the default grid");
    verify_cmd->add_option("--format", verify_format, "table, json or csv");
    verify_cmd->add_flag("--timing", verify_timing, "include per-identity timings");

    std::string ferrers_partition;
    CLI::App* ferrers = app.add_subcommand("ferrers", "print the Ferrers diagram");
    ferrers->add_option("partition", ferrers_partition, "comma-separated decreasing parts")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("qpart");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(eopt, out);
        if (stats->parsed()) return run_stats(stats_partition, stats_format, out);
        if (expand->parsed())
            return run_expand(expand_form, expand_params, expand_order, expand_format, out);
        if (verify_cmd->parsed())
            return run_verify(verify_target, verify_params, verify_order, verify_format,
                              verify_timing, out);
        if (ferrers->parsed()) return run_ferrers(ferrers_partition, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace qpart::cli
