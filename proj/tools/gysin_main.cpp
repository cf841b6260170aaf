// Command-line front end: pushforwards of flag-type fiber bundles, Schur
// oracles, localization sums from explicit fixed-point data, and the
// verification suite.
//
// Exit codes: 0 ok, 1 parse error, 2 precondition violation,
// 3 non-polynomial localization sum, 4 unsupported configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gysin/gysin.hpp"

namespace {

using nlohmann::json;

gysin::Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return gysin::Family::A;
    if (s == "B" || s == "b") return gysin::Family::B;
    if (s == "C" || s == "c") return gysin::Family::C;
    throw gysin::unsupported_error("unsupported family '" + s + "' (expected A, B, or C)");
}

gysin::Convention parse_convention(const std::string& s) {
    if (s == "prop") return gysin::Convention::prop;
    if (s == "sym") return gysin::Convention::sym;
    throw gysin::unsupported_error("unknown convention '" + s + "' (expected prop or sym)");
}

std::vector<int> parse_csv_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw gysin::unsupported_error("malformed integer list '" + csv + "'");
        }
    }
    if (out.empty()) throw gysin::unsupported_error("empty integer list");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gysin::unsupported_error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonArgs {
    std::string family = "A";
    int n = 0;
    std::string convention = "prop";
    std::string expr;
    std::string input_file;
    std::string format = "text";
    std::uint64_t cap = gysin::kDefaultEnumerationCap;
};

std::string resolve_expression(const CommonArgs& args) {
    if (!args.expr.empty() && !args.input_file.empty())
        throw gysin::unsupported_error("--expr and --input are mutually exclusive");
    if (!args.expr.empty()) return args.expr;
    if (!args.input_file.empty()) return read_file(args.input_file);
    throw gysin::unsupported_error("an input class is required (--expr or --input)");
}

std::string resolve_format(const std::string& format) {
    if (format != "text" && format != "json")
        throw gysin::unsupported_error("unknown format '" + format + "' (expected text or json)");
    return format;
}

json composition_json(const gysin::Composition& comp) {
    json parts = json::array();
    for (int k : comp.parts) parts.push_back(k);
    return parts;
}

int run_push(const CommonArgs& args, const std::string& comp_csv, int k,
             const std::string& operator_name, bool force_full_flag) {
    const gysin::Family family = parse_family(args.family);
    const gysin::Convention convention = parse_convention(args.convention);
    const std::string format = resolve_format(args.format);
    if (args.n < 1) throw gysin::unsupported_error("--n must be a positive rank");

    gysin::Composition comp{std::vector<int>(static_cast<std::size_t>(args.n), 1)};
    if (!force_full_flag) {
        if (!comp_csv.empty() && k > 0)
            throw gysin::unsupported_error("--comp and --k are mutually exclusive");
        if (!comp_csv.empty())
            comp = gysin::Composition{parse_csv_ints(comp_csv)};
        else if (k > 0)
            comp = gysin::Composition{{k, args.n - k}};
    }

    const gysin::BundleSpec bundle{gysin::GroupSpec{family, args.n}, comp, convention};
    gysin::validate(bundle.group, bundle.fiber);

    const std::string text = resolve_expression(args);
    const gysin::Polynomial input = gysin::parse(text, args.n);
    const gysin::Polynomial result = gysin::gysin_pushforward(input, bundle, true, args.cap);
    const int degree_drop = gysin::fiber_dimension(bundle);
    const char alphabet = gysin::input_alphabet(text).value_or('x');
    const std::string printed = gysin::print(result, alphabet);

    if (format == "json") {
        json out{{"operator", operator_name},
                 {"family", std::string(1, gysin::family_letter(family))},
                 {"n", args.n},
                 {"composition", composition_json(comp)},
                 {"convention", gysin::convention_name(convention)},
                 {"input", text},
                 {"result", printed},
                 {"degree_drop", degree_drop},
                 {"invariant", gysin::is_invariant(result, bundle.group)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << printed << "\n";
    }
    return 0;
}

int run_schur(int n, const std::string& lambda_csv, const std::string& format_arg) {
    const std::string format = resolve_format(format_arg);
    if (n < 1) throw gysin::unsupported_error("--n must be a positive rank");
    std::vector<std::int64_t> parts;
    for (int v : parse_csv_ints(lambda_csv)) parts.push_back(v);
    const gysin::Partition lambda(parts);  // throws on malformed partitions
    const gysin::Polynomial result = gysin::schur_bialternant(lambda, n);
    const std::string printed = gysin::print(result, 'x');

    if (format == "json") {
        json lam = json::array();
        for (auto p : lambda.parts) lam.push_back(p);
        json out{{"operator", "schur"}, {"n", n}, {"lambda", lam}, {"result", printed}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << printed << "\n";
    }
    return 0;
}

int run_localize(int n, const std::string& input_file, const std::string& format_arg) {
    const std::string format = resolve_format(format_arg);
    if (n < 1) throw gysin::unsupported_error("--n must be a positive rank");
    if (input_file.empty())
        throw gysin::unsupported_error("--input FILE with fixed-point data is required");

    json doc;
    try {
        doc = json::parse(read_file(input_file));
    } catch (const json::exception& e) {
        throw gysin::parse_error(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!doc.is_array() || doc.empty())
        throw gysin::parse_error("expected a non-empty JSON array of {restriction, euler} pairs",
                                 1, 1);

    char alphabet = 'x';
    bool alphabet_found = false;
    std::vector<gysin::FixedPointDatum> data;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("restriction") || !entry.contains("euler"))
            throw gysin::parse_error("each datum needs 'restriction' and 'euler' expressions", 1,
                                     1);
        const std::string rtext = entry.at("restriction").get<std::string>();
        const std::string etext = entry.at("euler").get<std::string>();
        if (!alphabet_found) {
            if (auto a = gysin::input_alphabet(rtext)) {
                alphabet = *a;
                alphabet_found = true;
            }
        }
        gysin::Polynomial euler = gysin::parse(etext, n);
        if (euler.is_zero()) throw gysin::invariance_error("Euler class must be nonzero");
        data.push_back(gysin::FixedPointDatum{gysin::parse(rtext, n), std::move(euler)});
    }

    gysin::Polynomial result(n);
    try {
        result = gysin::localization_sum(data);
    } catch (const gysin::not_divisible_error& e) {
        std::cerr << "sum is not polynomial; residual fraction: ("
                  << gysin::print(e.remainder(), alphabet) << ") / ("
                  << gysin::print(e.divisor(), alphabet) << ")\n";
        return 3;
    }

    const std::string printed = gysin::print(result, alphabet);
    if (format == "json") {
        json out{{"operator", "localize"},
                 {"n", n},
                 {"points", data.size()},
                 {"result", printed}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << printed << "\n";
    }
    return 0;
}

int run_check(int n, int max_degree, const std::string& convention_arg, std::uint64_t cap,
              const std::string& format_arg) {
    const std::string format = resolve_format(format_arg);
    gysin::VerifyOptions options;
    options.max_rank = n;
    options.max_degree = max_degree;
    options.convention = parse_convention(convention_arg);
    options.enumeration_cap = cap;
    const auto results = gysin::run_verification(options);

    bool all = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"property", r.name}, {"pass", r.passed}, {"detail", r.detail}});
            all = all && r.passed;
        }
        std::cout << arr.dump() << "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " — " << r.detail
                      << "\n";
            if (r.passed) ++passed;
            all = all && r.passed;
        }
        std::cout << passed << "/" << results.size() << " properties passed\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gysin pushforwards of flag-type fiber bundles"};
    app.require_subcommand(1);

    CommonArgs push_args;
    std::string push_comp;
    int push_k = 0;
    auto* push = app.add_subcommand(
        "push", "Pushforward of a class along the flag bundle determined by a composition");
    push->add_option("--family", push_args.family, "Group family: A, B, or C");
    push->add_option("--n", push_args.n, "Rank (number of variables)")->required();
    push->add_option("--comp", push_comp, "Composition of the rank, e.g. 1,2");
    push->add_option("--k", push_k, "Block size shorthand for the composition (k, n-k)");
    push->add_option("--convention", push_args.convention, "Denominator convention: prop or sym");
    push->add_option("--expr", push_args.expr, "Input class as an expression");
    push->add_option("--input", push_args.input_file, "File containing the input expression");
    push->add_option("--format", push_args.format, "Output format: text or json");
    push->add_option("--cap", push_args.cap, "Weyl group enumeration cap");

    CommonArgs bh_args;
    auto* bh = app.add_subcommand(
        "bh", "Classifying-space pushforward (complete flag fiber, any family)");
    bh->alias("borel-hirzebruch");
    bh->add_option("--family", bh_args.family, "Group family: A, B, or C");
    bh->add_option("--n", bh_args.n, "Rank (number of variables)")->required();
    bh->add_option("--convention", bh_args.convention, "Denominator convention: prop or sym");
    bh->add_option("--expr", bh_args.expr, "Input class as an expression");
    bh->add_option("--input", bh_args.input_file, "File containing the input expression");
    bh->add_option("--format", bh_args.format, "Output format: text or json");
    bh->add_option("--cap", bh_args.cap, "Weyl group enumeration cap");

    int schur_n = 0;
    std::string schur_lambda, schur_format = "text";
    auto* schur = app.add_subcommand("schur", "Bialternant Schur polynomial");
    schur->add_option("--n", schur_n, "Number of variables")->required();
    schur->add_option("--lambda", schur_lambda, "Partition, e.g. 2,1")->required();
    schur->add_option("--format", schur_format, "Output format: text or json");

    int localize_n = 0;
    std::string localize_input, localize_format = "text";
    auto* localize =
        app.add_subcommand("localize", "Certified localization sum from fixed-point data");
    localize->add_option("--n", localize_n, "Number of variables")->required();
    localize->add_option("--input", localize_input,
                         "JSON file: array of {restriction, euler} expression pairs");
    localize->add_option("--format", localize_format, "Output format: text or json");

    int check_n = 4, check_degree = 6;
    std::string check_convention = "prop", check_format = "text";
    std::uint64_t check_cap = gysin::kDefaultEnumerationCap;
    auto* check = app.add_subcommand("check", "Run the verification suite");
    check->add_option("--n", check_n, "Maximum rank to exercise (default 4)");
    check->add_option("--max-degree", check_degree, "Maximum corpus degree (default 6)");
    check->add_option("--convention", check_convention, "Denominator convention: prop or sym");
    check->add_option("--cap", check_cap, "Weyl group enumeration cap");
    check->add_option("--format", check_format, "Output format: text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(push)) return run_push(push_args, push_comp, push_k, "push", false);
        if (app.got_subcommand(bh)) return run_push(bh_args, "", 0, "borel-hirzebruch", true);
        if (app.got_subcommand(schur)) return run_schur(schur_n, schur_lambda, schur_format);
        if (app.got_subcommand(localize))
            return run_localize(localize_n, localize_input, localize_format);
        if (app.got_subcommand(check))
            return run_check(check_n, check_degree, check_convention, check_cap, check_format);
    } catch (const gysin::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const gysin::invariance_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const gysin::not_divisible_error& e) {
        std::cerr << "non-polynomial result: " << e.what() << "\n";
        return 3;
    } catch (const gysin::unsupported_error& e) {
        std::cerr << "unsupported configuration: " << e.what() << "\n";
        return 4;
    } catch (const gysin::enumeration_cap_error& e) {
        std::cerr << "unsupported configuration: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
