#include <altdescent.h>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

int emit(ad_status status, ad_result* result, const std::string& format) {
    if (result == nullptr) return status;
    const char* error = ad_result_error(result);
    if (error[0] != '\0') {
        std::cerr << "error: " << error << "\n";
    } else if (format == "json") {
        std::cout << ad_result_json(result);
    } else if (format == "csv") {
        std::cout << ad_result_csv(result);
    } else {
        std::cout << ad_result_plain(result);
    }
    ad_result_free(result);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating-descent permutation statistics toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ad_version());

    std::string format = "plain";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: plain, json, or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };
    add_format(&app);

    auto* seq = app.add_subcommand("seq", "tabulate a counting sequence");
    std::string seq_name;
    int seq_n_max = 12;
    std::string seq_comp;
    seq->add_option("name", seq_name,
                    "f, g, c, d, euler, eulerian, alt-eulerian, beta, beta-hat")
        ->required();
    seq->add_option("--n-max", seq_n_max, "largest index, default 12");
    seq->add_option("--composition", seq_comp,
                    "comma-separated parts for beta and beta-hat, e.g. 2,1");
    add_format(seq);

    auto* series = app.add_subcommand("series", "print power series coefficients");
    std::string series_name;
    int series_order = 12;
    bool series_egf = false;
    std::string series_basis;
    series->add_option("name", series_name, "catalog name, e.g. F, C, D, sec_plus_tan")
        ->required();
    series->add_option("--order", series_order, "truncation order, default 12");
    series->add_flag("--egf", series_egf, "multiply coefficient n by n!");
    series->add_option("--basis", series_basis,
                       "h or r: print the graded-algebra preimage instead")
        ->check(CLI::IsMember({"h", "r"}));
    add_format(series);

    auto* verify = app.add_subcommand("verify", "run cross-validation checks");
    std::string verify_suite = "all";
    int verify_n_max = 0;
    unsigned long long verify_seed = 42;
    verify->add_option("suite", verify_suite,
                       "oracle, recurrences, series-identities, ncsf, qt, or all");
    verify->add_option("--n-max", verify_n_max,
                       "clamp brute-force bounds; 0 keeps the defaults");
    verify->add_option("--seed", verify_seed, "seed for randomized checks");
    add_format(verify);

    auto* asym = app.add_subcommand("asym", "dominant-pole analysis and error table");
    int asym_n_max = 40;
    double asym_tol = 1e-10;
    asym->add_option("--n-max", asym_n_max, "last table row, default 40");
    asym->add_option("--tol", asym_tol, "zero-finder tolerance, default 1e-10");
    add_format(asym);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : AD_USAGE_ERROR;
    }

    ad_result* result = nullptr;
    ad_status status = AD_OK;
    if (seq->parsed()) {
        const bool has_comp = seq->count("--composition") > 0;
        status = ad_seq(seq_name.c_str(), seq_n_max,
                        has_comp ? seq_comp.c_str() : nullptr, &result);
    } else if (series->parsed()) {
        status = ad_series(series_name.c_str(), series_order, series_egf ? 1 : 0,
                           series_basis.empty() ? nullptr : series_basis.c_str(),
                           &result);
    } else if (verify->parsed()) {
        status = ad_verify(verify_suite.c_str(), verify_n_max, verify_seed, &result);
    } else if (asym->parsed()) {
        status = ad_asym(asym_n_max, asym_tol, &result);
    }
    return emit(status, result, format);
}
