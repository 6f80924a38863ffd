#include <cstdio>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sockmatch/sockmatch.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sockmatch;

enum class Format { markdown, csv, json };
enum class BMethod { explicit_form, alt, rec1, rec2, complement };

const std::map<std::string, Format> kFormatNames{
    {"markdown", Format::markdown}, {"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, BMethod> kMethodNames{
    {"explicit", BMethod::explicit_form},
    {"alt", BMethod::alt},
    {"rec1", BMethod::rec1},
    {"rec2", BMethod::rec2},
    {"complement", BMethod::complement}};
const std::map<std::string, Model> kModelNames{
    {"uniform", Model::uniform}, {"physical", Model::physical}};

std::string method_label(BMethod m) {
    switch (m) {
        case BMethod::explicit_form: return "explicit";
        case BMethod::alt: return "alt";
        case BMethod::rec1: return "rec1";
        case BMethod::rec2: return "rec2";
        case BMethod::complement: return "complement";
    }
    return "?";
}

Count b_by_method(unsigned n, unsigned k, BMethod m) {
    switch (m) {
        case BMethod::explicit_form: return b_explicit(n, k);
        case BMethod::alt: return b_alt(n, k);
        case BMethod::rec1: return b_recurrence_first(n, k);
        case BMethod::rec2: return b_recurrence_second(n, k);
        case BMethod::complement: return b_complement(n, k);
    }
    throw std::invalid_argument("unknown method");
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Two-column field/value table for the human-readable format, or a
/// single-header-row CSV record.
void print_record(Format fmt, const std::vector<std::pair<std::string, std::string>>& fields) {
    if (fmt == Format::markdown) {
        std::cout << "| field | value |\n| --- | --- |\n";
        for (const auto& [key, value] : fields)
            std::cout << "| " << key << " | " << value << " |\n";
    } else {
        std::string head, row;
        for (const auto& [key, value] : fields) {
            if (!head.empty()) { head += ','; row += ','; }
            head += key;
            row += value;
        }
        std::cout << head << '\n' << row << '\n';
    }
}

int run_table(unsigned nmax, unsigned kmax, BMethod method, Format fmt) {
    std::vector<std::vector<Count>> rows(nmax);
    for (unsigned n = 1; n <= nmax; ++n) {
        rows[n - 1].reserve(kmax);
        for (unsigned k = 1; k <= kmax; ++k) rows[n - 1].push_back(b_by_method(n, k, method));
    }
    if (fmt == Format::csv) {
        std::cout << "n,k,B\n";
        for (unsigned n = 1; n <= nmax; ++n)
            for (unsigned k = 1; k <= kmax; ++k)
                std::cout << n << ',' << k << ',' << rows[n - 1][k - 1] << '\n';
    } else if (fmt == Format::json) {
        ordered_json doc;
        doc["command"] = "table";
        doc["method"] = method_label(method);
        doc["n_max"] = nmax;
        doc["k_max"] = kmax;
        doc["values"] = ordered_json::array();
        for (unsigned n = 1; n <= nmax; ++n)
            for (unsigned k = 1; k <= kmax; ++k)
                doc["values"].push_back(
                    ordered_json{{"n", n}, {"k", k}, {"B", rows[n - 1][k - 1].str()}});
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "| n\\k |";
        for (unsigned k = 1; k <= kmax; ++k) std::cout << ' ' << k << " |";
        std::cout << "\n| --- |";
        for (unsigned k = 1; k <= kmax; ++k) std::cout << " --- |";
        std::cout << '\n';
        for (unsigned n = 1; n <= nmax; ++n) {
            std::cout << "| " << n << " |";
            for (unsigned k = 1; k <= kmax; ++k) std::cout << ' ' << rows[n - 1][k - 1] << " |";
            std::cout << '\n';
        }
    }
    return 0;
}

int run_count(const std::string& family, unsigned n, unsigned k, unsigned t,
              unsigned lower, unsigned upper, BMethod method, Format fmt) {
    std::vector<std::pair<std::string, std::string>> fields;
    ordered_json doc;
    doc["command"] = "count";
    doc["family"] = family;
    fields.emplace_back("family", family);
    Count value(0u);
    std::string route;
    if (family == "B") {
        value = b_by_method(n, k, method);
        route = method_label(method);
        fields.emplace_back("n", std::to_string(n));
        fields.emplace_back("k", std::to_string(k));
        doc["n"] = n;
        doc["k"] = k;
    } else if (family == "A") {
        if (n >= t + 2) {
            value = a_binomial_form(n, t);
            route = "binomial_form";
        } else {
            value = a_bounded(n, t);
            route = "bounded";
        }
        fields.emplace_back("n", std::to_string(n));
        fields.emplace_back("t", std::to_string(t));
        doc["n"] = n;
        doc["t"] = t;
    } else {
        value = bounded_walk_count(WalkSpec{n, lower, upper});
        route = "reflection";
        fields.emplace_back("n", std::to_string(n));
        fields.emplace_back("lower", std::to_string(lower));
        fields.emplace_back("upper", std::to_string(upper));
        doc["n"] = n;
        doc["lower"] = lower;
        doc["upper"] = upper;
    }
    fields.emplace_back("method", route);
    fields.emplace_back("value", value.str());
    doc["method"] = route;
    doc["value"] = value.str();
    if (fmt == Format::json) std::cout << doc.dump(2) << '\n';
    else print_record(fmt, fields);
    return 0;
}

int run_prob(unsigned n, unsigned k, Model model, unsigned digits, Format fmt) {
    if (n < 1 || k < 1) throw std::invalid_argument("prob requires n >= 1 and k >= 1");
    Ratio p = (model == Model::uniform) ? Ratio(b_explicit(n, k), catalan(n))
                                        : physical_hit_probability(n, k);
    const std::string decimal = p.to_decimal_string(digits);
    if (fmt == Format::json) {
        ordered_json doc;
        doc["command"] = "prob";
        doc["model"] = std::string(model_name(model));
        doc["n"] = n;
        doc["k"] = k;
        doc["numerator"] = p.numerator().str();
        doc["denominator"] = p.denominator().str();
        doc["exact"] = p.str();
        doc["decimal"] = decimal;
        doc["digits"] = digits;
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    print_record(fmt, {{"model", std::string(model_name(model))},
                       {"n", std::to_string(n)},
                       {"k", std::to_string(k)},
                       {"exact", p.str()},
                       {"decimal", decimal}});
    return 0;
}

int run_simulate(Model model, unsigned n, unsigned k, std::uint64_t trials,
                 std::uint64_t seed, Format fmt) {
    const SimResult res = estimate_hit_probability(model, n, k, trials, seed);
    if (fmt == Format::json) {
        ordered_json doc;
        doc["command"] = "simulate";
        doc["model"] = std::string(model_name(res.model));
        doc["n"] = res.n;
        doc["k"] = res.k;
        doc["trials"] = res.trials;
        doc["hits"] = res.hits;
        doc["p_hat"] = res.p_hat;
        doc["ci_low"] = res.ci_low;
        doc["ci_high"] = res.ci_high;
        doc["seed"] = res.seed;
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    print_record(fmt, {{"model", std::string(model_name(res.model))},
                       {"n", std::to_string(res.n)},
                       {"k", std::to_string(res.k)},
                       {"trials", std::to_string(res.trials)},
                       {"hits", std::to_string(res.hits)},
                       {"p_hat", fmt_double(res.p_hat)},
                       {"ci_low", fmt_double(res.ci_low)},
                       {"ci_high", fmt_double(res.ci_high)},
                       {"seed", std::to_string(res.seed)}});
    return 0;
}

int run_asym(unsigned k, unsigned nmax, Format fmt) {
    const auto series = convergence_series(k, nmax);
    const unsigned digits = 12;
    if (fmt == Format::json) {
        ordered_json doc;
        doc["command"] = "asym";
        doc["k"] = k;
        doc["n_max"] = nmax;
        doc["rows"] = ordered_json::array();
        for (const auto& pt : series)
            doc["rows"].push_back(ordered_json{{"n", pt.n},
                                               {"exact", pt.p_exact.str()},
                                               {"decimal", pt.p_exact.to_decimal_string(digits)},
                                               {"estimate", pt.bound}});
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    if (fmt == Format::csv) {
        std::cout << "n,exact,decimal,estimate\n";
        for (const auto& pt : series)
            std::cout << pt.n << ',' << pt.p_exact.str() << ','
                      << pt.p_exact.to_decimal_string(digits) << ',' << fmt_double(pt.bound)
                      << '\n';
        return 0;
    }
    std::cout << "| n | exact | decimal | estimate |\n| --- | --- | --- | --- |\n";
    for (const auto& pt : series)
        std::cout << "| " << pt.n << " | " << pt.p_exact.str() << " | "
                  << pt.p_exact.to_decimal_string(digits) << " | " << fmt_double(pt.bound)
                  << " |\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting, probabilities, and simulation for bounded-height "
                 "matching trajectories"};
    app.require_subcommand(1);

    Format fmt = Format::markdown;
    BMethod method = BMethod::explicit_form;
    Model model = Model::uniform;
    unsigned nmax = 15, kmax = 15, n = 1, k = 1, t = 0, lower = 0, upper = 0;
    unsigned digits = 12;
    std::uint64_t trials = 10000, seed = 0;
    std::string family = "B";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", fmt, "Output format")
            ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
            ->default_str("markdown");
    };

    auto* table = app.add_subcommand("table", "Emit the B(n,k) table");
    table->add_option("--nmax", nmax, "Largest n")->check(CLI::PositiveNumber);
    table->add_option("--kmax", kmax, "Largest k")->check(CLI::PositiveNumber);
    table->add_option("--method", method, "Computation route")
        ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case))
        ->default_str("explicit");
    add_format(table);

    auto* count = app.add_subcommand("count", "Compute one exact count");
    count->add_option("--family", family, "B, A, or W")
        ->check(CLI::IsMember({"B", "A", "W"}))
        ->required();
    count->add_option("--n", n, "Pair count")->required();
    count->add_option("--k", k, "Height threshold (family B)");
    count->add_option("--t", t, "Height cap (family A)");
    count->add_option("--lower", lower, "Lower barrier depth (family W)");
    count->add_option("--upper", upper, "Upper barrier height (family W)");
    count->add_option("--method", method, "Computation route for family B")
        ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case))
        ->default_str("explicit");
    add_format(count);

    auto* prob = app.add_subcommand("prob", "Exact hit probability");
    prob->add_option("--n", n, "Pair count")->required()->check(CLI::PositiveNumber);
    prob->add_option("--k", k, "Height threshold")->required()->check(CLI::PositiveNumber);
    prob->add_option("--model", model, "Probability model")
        ->transform(CLI::CheckedTransformer(kModelNames, CLI::ignore_case))
        ->default_str("uniform");
    prob->add_option("--digits", digits, "Decimal digits")->check(CLI::PositiveNumber);
    add_format(prob);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
    simulate->add_option("--model", model, "Probability model")
        ->transform(CLI::CheckedTransformer(kModelNames, CLI::ignore_case))
        ->default_str("uniform");
    simulate->add_option("--n", n, "Pair count")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--k", k, "Height threshold")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--trials", trials, "Trial count")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "Base seed")->default_str("0");
    add_format(simulate);

    unsigned asym_nmax = 30;
    auto* asym = app.add_subcommand("asym", "Convergence of P(n,k) toward 1");
    asym->add_option("--k", k, "Height threshold")->required()->check(CLI::PositiveNumber);
    asym->add_option("--nmax", asym_nmax, "Largest n")->check(CLI::PositiveNumber);
    add_format(asym);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return run_table(nmax, kmax, method, fmt);
        if (count->parsed()) return run_count(family, n, k, t, lower, upper, method, fmt);
        if (prob->parsed()) return run_prob(n, k, model, digits, fmt);
        if (simulate->parsed()) return run_simulate(model, n, k, trials, seed, fmt);
        if (asym->parsed()) {
            if (asym_nmax < k) throw std::invalid_argument("asym requires nmax >= k");
            return run_asym(k, asym_nmax, fmt);
        }
    } catch (const negative_count_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const precision_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
