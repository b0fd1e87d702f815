#include "altdescent.h"

#include "core/asymptotics.hpp"
#include "core/counts.hpp"
#include "core/errors.hpp"
#include "core/ncsf.hpp"
#include "core/numbers.hpp"
#include "core/recurrences.hpp"
#include "core/series_catalog.hpp"
#include "core/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <new>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace altdes;

struct ad_result {
    ad_status status = AD_OK;
    std::string plain;
    std::string json_text;
    std::string csv;
    std::string error;
};

namespace {

std::string ld_str(long double v) {
    std::ostringstream os;
    os << std::setprecision(18) << v;
    return os.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

ad_result* finish(ad_result* r, const std::string& command, const json& params,
                  json results, json checks) {
    json doc;
    doc["command"] = command;
    doc["params"] = params;
    doc["results"] = std::move(results);
    doc["checks"] = std::move(checks);
    r->json_text = doc.dump(2) + "\n";
    return r;
}

Composition parse_composition(const char* text) {
    if (text == nullptr) throw std::domain_error("composition required");
    std::vector<int> parts;
    std::string s(text);
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw std::domain_error("empty composition part");
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::domain_error("bad composition part: " + item);
        parts.push_back(v);
    }
    return Composition(parts);
}

ad_result* run_seq(const char* name_c, int n_max, const char* composition) {
    const std::string name = name_c == nullptr ? "" : name_c;
    auto* r = new ad_result;
    json params;
    params["name"] = name;

    if (name == "beta" || name == "beta-hat") {
        const Composition L = parse_composition(composition);
        const BigInt value =
            name == "beta" ? descent_class_size(L) : alt_descent_class_size(L);
        params["composition"] = L.to_string();
        r->plain = name + L.to_string() + " = " + value.str() + "\n";
        r->csv = "composition,value\n" + csv_quote(L.to_string()) + "," +
                 value.str() + "\n";
        json results;
        results["composition"] = L.to_string();
        results["value"] = value.str();
        return finish(r, "seq", params, results, json::array());
    }

    if (n_max < 0) throw std::domain_error("n_max must be nonnegative");
    params["n_max"] = n_max;

    std::vector<std::string> values;
    if (name == "f" || name == "g") {
        const auto t = fg_recurrence(n_max);
        for (const auto& v : name == "f" ? t.f : t.g) values.push_back(v.str());
    } else if (name == "c" || name == "d") {
        const auto t = cd_tables(n_max);
        for (const auto& v : name == "c" ? t.c : t.d) values.push_back(v.str());
    } else if (name == "euler") {
        for (const auto& v : euler_numbers(n_max)) values.push_back(v.str());
    } else if (name == "eulerian" || name == "alt-eulerian") {
        const auto polys =
            name == "eulerian" ? eulerian_polys(n_max) : alt_eulerian_polys(n_max);
        for (const auto& p : polys) values.push_back(p.to_string());
    } else {
        throw std::domain_error("unknown sequence: " + name);
    }

    std::ostringstream plain, csv;
    csv << "n,value\n";
    json arr = json::array();
    for (std::size_t n = 0; n < values.size(); ++n) {
        plain << name << "(" << n << ") = " << values[n] << "\n";
        csv << n << "," << csv_quote(values[n]) << "\n";
        arr.push_back(values[n]);
    }
    r->plain = plain.str();
    r->csv = csv.str();
    json results;
    results["values"] = std::move(arr);
    return finish(r, "seq", params, results, json::array());
}

// the graded-algebra preimages rendered by --basis: F comes from the
// run-weight identity with all parts below 3, C and D from the last-run
// refinement of the same weights
NcsfElement<Rat> basis_element(const std::string& name, int order,
                               const std::string& basis) {
    std::vector<Rat> w(order + 1, Rat(0));
    if (order >= 1) w[1] = 1;
    if (order >= 2) w[2] = 1;
    const bool is_f = name == "F" || name == "F_closed" || name == "F_reciprocal";
    const bool is_c = name == "C" || name == "C_quotient" || name == "C_trig" ||
                      name == "C_series";
    const bool is_d = name == "D" || name == "D_quotient" || name == "D_trig" ||
                      name == "D_series";
    if (!is_f && !is_c && !is_d)
        throw std::domain_error("basis output is only defined for F, C, and D");
    NcsfElement<Rat> element = [&] {
        if (is_f) return run_weight_identity<Rat>(w, order).lhs;
        std::vector<Rat> v(order + 1, Rat(0));
        const int last = is_c ? 1 : 2;
        if (order >= last) v[last] = 1;
        return last_run_weight_identity<Rat>(w, v, order).lhs;
    }();
    return element.to_basis(basis == "h" ? NcsfBasis::h : NcsfBasis::r);
}

ad_result* run_series(const char* name_c, int order, int egf, const char* basis_c) {
    const std::string name = name_c == nullptr ? "" : name_c;
    const std::string basis = basis_c == nullptr ? "" : basis_c;
    auto* r = new ad_result;
    json params;
    params["name"] = name;
    params["order"] = order;

    if (!basis.empty()) {
        if (basis != "h" && basis != "r")
            throw std::domain_error("basis must be h or r");
        params["basis"] = basis;
        const auto element = basis_element(name, order, basis);
        r->plain = element.to_string() + "\n";
        std::ostringstream csv;
        csv << "composition,coefficient\n";
        json terms = json::array();
        for (const auto& [L, coeff] : element.terms()) {
            const std::string cs = rat_to_string(coeff);
            csv << csv_quote(L.to_string()) << "," << csv_quote(cs) << "\n";
            json term;
            term["composition"] = L.to_string();
            term["coefficient"] = cs;
            terms.push_back(std::move(term));
        }
        r->csv = csv.str();
        json results;
        results["element"] = element.to_string();
        results["terms"] = std::move(terms);
        return finish(r, "series", params, results, json::array());
    }

    params["egf"] = egf != 0;
    const auto s = named_series(name, order);
    std::ostringstream plain, csv;
    csv << "n,coefficient\n";
    json arr = json::array();
    for (int n = 0; n <= order; ++n) {
        const Rat v = egf != 0 ? s.egf_coeff(n) : s.coeff(n);
        const std::string vs = rat_to_string(v);
        plain << "[" << n << "] " << vs << "\n";
        csv << n << "," << csv_quote(vs) << "\n";
        arr.push_back(vs);
    }
    r->plain = plain.str();
    r->csv = csv.str();
    json results;
    results["coefficients"] = std::move(arr);
    return finish(r, "series", params, results, json::array());
}

ad_result* run_verify(const char* suite_c, int n_max, unsigned long long seed) {
    const std::string suite = suite_c == nullptr ? "" : suite_c;
    VerifyOptions opts;
    opts.n_max = n_max;
    opts.seed = seed;
    const auto checks = verify_suite(suite, opts);

    auto* r = new ad_result;
    json params;
    params["suite"] = suite;
    params["n_max"] = n_max;
    params["seed"] = seed;

    int failed = 0;
    std::ostringstream plain, csv;
    csv << "name,ref,pass,detail\n";
    json arr = json::array();
    for (const auto& chk : checks) {
        if (!chk.pass) ++failed;
        plain << (chk.pass ? "[PASS] " : "[FAIL] ") << chk.name << ": "
              << chk.detail << "\n";
        csv << csv_quote(chk.name) << "," << csv_quote(chk.ref) << ","
            << (chk.pass ? "true" : "false") << "," << csv_quote(chk.detail)
            << "\n";
        json jc;
        jc["name"] = chk.name;
        jc["paper_ref"] = chk.ref;
        jc["pass"] = chk.pass;
        jc["detail"] = chk.detail;
        arr.push_back(std::move(jc));
    }
    const int passed = static_cast<int>(checks.size()) - failed;
    plain << passed << "/" << checks.size() << " checks passed\n";
    if (failed > 0) r->status = AD_CHECK_FAILED;

    json results;
    results["passed"] = passed;
    results["failed"] = failed;
    r->plain = plain.str();
    r->csv = csv.str();
    return finish(r, "verify", params, results, std::move(arr));
}

ad_result* run_asym(int n_max, double tol) {
    if (tol < 1e-12) throw std::domain_error("tolerance must be at least 1e-12");
    if (n_max < 0) throw std::domain_error("n_max must be nonnegative");
    const auto rep = locate_zeros(tol);
    const auto table = error_table(n_max, tol);

    struct Check {
        const char* name;
        const char* ref;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    const long double closed_err = std::abs(rep.u_prime_closed + 0.5L);
    const long double diff_err = std::abs(rep.u_prime_diff + 0.5L);
    checks.push_back({"derivative-at-zero", "reciprocal-derivative",
                      closed_err < 1e-6L && diff_err < 1e-6L,
                      "closed " + ld_str(rep.u_prime_closed) + ", difference " +
                          ld_str(rep.u_prime_diff)});
    checks.push_back({"winding-count", "dominant-zero-isolation",
                      rep.zeros_inside_gamma == 1,
                      std::to_string(rep.zeros_inside_gamma) +
                          " zero(s) inside the subdominant radius"});
    const bool ratio_ok = n_max < 5 || (table.max_ratio <= 10.0L &&
                                        table.last_ratio <= 10.0L);
    checks.push_back({"error-ratio-bounded", "subdominant-error-term", ratio_ok,
                      "max ratio " + ld_str(table.max_ratio) + ", final ratio " +
                          ld_str(table.last_ratio)});

    auto* r = new ad_result;
    json params;
    params["n_max"] = n_max;
    params["tol"] = tol;

    std::ostringstream plain;
    plain << "alpha  = " << ld_str(rep.alpha) << "\n"
          << "beta   = " << ld_str(rep.beta) << "\n"
          << "gamma  = " << ld_str(rep.gamma) << "\n"
          << "delta  = " << ld_str(rep.delta) << "\n"
          << "secondary zero = " << ld_str(rep.secondary.real()) << " + "
          << ld_str(rep.secondary.imag()) << "i\n"
          << "residue factor = " << ld_str(rep.residue_factor) << "\n";
    plain << "n  exact  estimate  abs_err  ratio\n";
    std::ostringstream csv;
    csv << "n,exact,estimate,abs_err,ratio\n";
    json rows = json::array();
    for (const auto& row : table.rows) {
        plain << row.n << "  " << ld_str(row.exact) << "  " << ld_str(row.estimate)
              << "  " << ld_str(row.abs_err) << "  " << ld_str(row.ratio) << "\n";
        csv << row.n << "," << ld_str(row.exact) << "," << ld_str(row.estimate)
            << "," << ld_str(row.abs_err) << "," << ld_str(row.ratio) << "\n";
        json jr;
        jr["n"] = row.n;
        jr["exact"] = ld_str(row.exact);
        jr["estimate"] = ld_str(row.estimate);
        jr["abs_err"] = ld_str(row.abs_err);
        jr["ratio"] = ld_str(row.ratio);
        rows.push_back(std::move(jr));
    }

    json arr = json::array();
    for (const auto& chk : checks) {
        plain << (chk.pass ? "[PASS] " : "[FAIL] ") << chk.name << ": "
              << chk.detail << "\n";
        json jc;
        jc["name"] = chk.name;
        jc["paper_ref"] = chk.ref;
        jc["pass"] = chk.pass;
        jc["detail"] = chk.detail;
        arr.push_back(std::move(jc));
        if (!chk.pass) r->status = AD_CHECK_FAILED;
    }

    json results;
    results["alpha"] = ld_str(rep.alpha);
    results["beta"] = ld_str(rep.beta);
    results["gamma"] = ld_str(rep.gamma);
    results["delta"] = ld_str(rep.delta);
    results["secondary_re"] = ld_str(rep.secondary.real());
    results["secondary_im"] = ld_str(rep.secondary.imag());
    results["u_prime_closed"] = ld_str(rep.u_prime_closed);
    results["u_prime_diff"] = ld_str(rep.u_prime_diff);
    results["residue_factor"] = ld_str(rep.residue_factor);
    results["zeros_inside_gamma"] = rep.zeros_inside_gamma;
    results["newton_iterations"] = rep.newton_iterations;
    results["max_ratio"] = ld_str(table.max_ratio);
    results["last_ratio"] = ld_str(table.last_ratio);
    results["rows"] = std::move(rows);

    r->plain = plain.str();
    r->csv = csv.str();
    return finish(r, "asym", params, results, std::move(arr));
}

template <class Fn>
ad_status guarded(ad_result** out, Fn&& fn) {
    if (out == nullptr) return AD_USAGE_ERROR;
    *out = nullptr;
    try {
        *out = fn();
        return static_cast<ad_status>((*out)->status);
    } catch (const ResourceError& e) {
        *out = new (std::nothrow) ad_result;
        if (*out != nullptr) {
            (*out)->status = AD_RESOURCE_ERROR;
            (*out)->error = e.what();
        }
        return AD_RESOURCE_ERROR;
    } catch (const NumericError& e) {
        *out = new (std::nothrow) ad_result;
        if (*out != nullptr) {
            (*out)->status = AD_RESOURCE_ERROR;
            (*out)->error = e.what();
        }
        return AD_RESOURCE_ERROR;
    } catch (const std::bad_alloc&) {
        return AD_RESOURCE_ERROR;
    } catch (const std::exception& e) {
        *out = new (std::nothrow) ad_result;
        if (*out != nullptr) {
            (*out)->status = AD_USAGE_ERROR;
            (*out)->error = e.what();
        }
        return AD_USAGE_ERROR;
    }
}

}  // namespace

extern "C" {

const char* ad_version(void) { return "0.1.0"; }

ad_status ad_seq(const char* name, int n_max, const char* composition,
                 ad_result** out) {
    return guarded(out, [&] { return run_seq(name, n_max, composition); });
}

ad_status ad_series(const char* name, int order, int egf, const char* basis,
                    ad_result** out) {
    return guarded(out, [&] { return run_series(name, order, egf, basis); });
}

ad_status ad_verify(const char* suite, int n_max, unsigned long long seed,
                    ad_result** out) {
    return guarded(out, [&] { return run_verify(suite, n_max, seed); });
}

ad_status ad_asym(int n_max, double tol, ad_result** out) {
    return guarded(out, [&] { return run_asym(n_max, tol); });
}

ad_status ad_result_status(const ad_result* r) {
    return r == nullptr ? AD_USAGE_ERROR : r->status;
}

const char* ad_result_plain(const ad_result* r) {
    return r == nullptr ? "" : r->plain.c_str();
}

const char* ad_result_json(const ad_result* r) {
    return r == nullptr ? "" : r->json_text.c_str();
}

const char* ad_result_csv(const ad_result* r) {
    return r == nullptr ? "" : r->csv.c_str();
}

const char* ad_result_error(const ad_result* r) {
    return r == nullptr ? "" : r->error.c_str();
}

void ad_result_free(ad_result* r) { delete r; }

}  // extern "C"
