// chowlab: command-line front end for the chowlab library.
//
// Subcommands: chow, bijection, rewrite, dset, interlace, verify,
// eulerian, derangement. Every command honors --format {text|json|csv}.
// Exit codes: 0 success, 1 verification/cross-check failure, 2 usage
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "chowlab/core.hpp"
#include "chowlab/normal.hpp"
#include "chowlab/oracle.hpp"
#include "chowlab/poly.hpp"
#include "chowlab/realroot.hpp"
#include "chowlab/rewrite.hpp"
#include "chowlab/verify.hpp"

using nlohmann::json;
using namespace chowlab;

namespace {

struct Options {
    std::string format = "text";
    int threads = 1;
    bool allow_big = false;
};

// Default ceiling on enumeration sizes (n! growth); overridable with
// the CHOWLAB_MAX_N environment variable and bypassable per invocation
// with --allow-big.
int default_max_n() {
    if (const char* env = std::getenv("CHOWLAB_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw CLI::ValidationError("CHOWLAB_MAX_N must be an integer");
        }
    }
    return 10;
}

void guard_n(int n, const Options& opt) {
    if (!opt.allow_big && n > default_max_n())
        throw CLI::ValidationError("n exceeds the enumeration budget (use --allow-big to override)");
}

json poly_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).str());
    return json{{"coeffs", coeffs}};
}

std::string poly_csv(const IntPolynomial& p) {
    std::ostringstream os;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) os << ',';
        os << p.coeff(i).str();
    }
    return os.str();
}

void print_poly(const IntPolynomial& p, const Options& opt) {
    if (opt.format == "json")
        std::cout << poly_json(p).dump() << "\n";
    else if (opt.format == "csv")
        std::cout << poly_csv(p) << "\n";
    else
        std::cout << p.str() << "\n";
}

json monomial_json(const NormalMonomial& m, const GroundSet& g) {
    json parts = json::array();
    for (Subset s : m.parts()) parts.push_back(s.labels(g));
    return parts;
}

json report_json(const Report& r) {
    json checks = json::array();
    for (const Check& c : r.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"suite", r.suite}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

void print_report(const Report& r, const Options& opt) {
    if (opt.format == "json") {
        std::cout << report_json(r).dump(2) << "\n";
        return;
    }
    if (opt.format == "csv") {
        std::cout << "name,pass,detail\n";
        for (const Check& c : r.checks)
            std::cout << c.name << ',' << (c.pass ? "pass" : "FAIL") << ",\"" << c.detail << "\"\n";
        return;
    }
    for (const Check& c : r.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (r.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
}

IntPolynomial chow_by_method(const std::string& matroid, int n, int k, const std::string& method) {
    if (matroid == "boolean") {
        if (method == "normal") return hilbert_boolean(n);
        if (method == "rewrite") return chow_uniform_via_dsets(n, 0);
        return ChowRing(FlatsLattice::boolean_lattice(n)).hilbert_series();
    }
    if (method == "normal")
        throw CLI::ValidationError("the normal-monomial route only covers boolean matroids");
    // Here k is the rank of U_{k,n}; the rewriting route is indexed by
    // the corank n - k.
    if (method == "rewrite") return chow_uniform_via_dsets(n, n - k);
    return ChowRing(FlatsLattice::uniform_lattice(k, n)).hilbert_series();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chow polynomials of boolean and uniform matroids"};
    app.require_subcommand(1);
    app.fallthrough();  // let global options appear after the subcommand

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "Worker threads for verification suites")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--allow-big", opt.allow_big, "Bypass the enumeration size guard");

    // --- chow ----------------------------------------------------------
    auto* chow = app.add_subcommand("chow", "Chow polynomial of a matroid");
    std::string matroid = "boolean";
    int chow_n = 0, chow_k = 0;
    std::string method = "oracle";
    bool cross_check = false;
    chow->add_option("--matroid", matroid, "Matroid family")
        ->check(CLI::IsMember({"boolean", "uniform"}))
        ->capture_default_str();
    chow->add_option("--n", chow_n, "Ground set size")->required()->check(CLI::PositiveNumber);
    chow->add_option("--k", chow_k, "Rank of the uniform matroid U_{k,n}");
    chow->add_option("--method", method, "Computation route")
        ->check(CLI::IsMember({"normal", "rewrite", "oracle"}))
        ->capture_default_str();
    chow->add_flag("--cross-check", cross_check, "Run all applicable routes and compare");

    // --- bijection -------------------------------------------------------
    auto* bij = app.add_subcommand("bijection", "Descent bijection between permutations and monomials");
    std::string direction;
    std::string perm_text, mono_text;
    int bij_n = 0;
    bij->add_option("direction", direction, "psi or phi")
        ->required()
        ->check(CLI::IsMember({"psi", "phi"}));
    bij->add_option("--perm", perm_text, "Permutation as comma-separated values (psi)");
    bij->add_option("--monomial", mono_text, "Monomial like h{1,2}*h{1,2,3} (phi)");
    bij->add_option("--n", bij_n, "Ground set size for phi (default: max label)");

    // --- rewrite ---------------------------------------------------------
    auto* rw = app.add_subcommand("rewrite", "Apply the rewriting map to an inversion sequence");
    std::string seq_text;
    int rw_power = 1;
    rw->add_option("--seq", seq_text, "Inversion sequence, comma-separated")->required();
    rw->add_option("--power", rw_power, "Number of applications")->check(CLI::PositiveNumber);

    // --- dset ------------------------------------------------------------
    auto* ds = app.add_subcommand("dset", "The set D^k_n of inversion sequences");
    int ds_n = 0, ds_k = 1;
    std::string ds_route = "recursive";
    ds->add_option("--n", ds_n, "Sequence length")->required()->check(CLI::PositiveNumber);
    ds->add_option("--k", ds_k, "Level")->check(CLI::PositiveNumber)->capture_default_str();
    ds->add_option("--route", ds_route, "Construction route")
        ->check(CLI::IsMember({"recursive", "images"}))
        ->capture_default_str();

    // --- interlace ---------------------------------------------------------
    auto* il = app.add_subcommand("interlace", "Interlacing experiments on refined families");
    std::string family = "plain";
    int il_min = 4, il_max = 10;
    il->add_option("--family", family, "Polynomial family")
        ->check(CLI::IsMember({"plain", "drop22", "merge12", "eulerian-refined", "derangement-refined"}))
        ->capture_default_str();
    int il_k = 0;
    std::string il_range;
    il->add_option("--k", il_k, "Level of the refined family (default: 2, refined families 1)");
    il->add_option("--n", il_range, "Range of n as a..b");
    il->add_option("--n-min", il_min, "Smallest n")->capture_default_str();
    il->add_option("--n-max", il_max, "Largest n")->capture_default_str();

    // --- verify ------------------------------------------------------------
    auto* vf = app.add_subcommand("verify", "Run an invariant suite");
    std::string suite = "all";
    int vf_max_n = 0;
    vf->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember({"bijection", "rewriting", "oracle", "corollary", "interlacing", "all"}))
        ->capture_default_str();
    vf->add_option("--max-n", vf_max_n, "Upper enumeration bound (default: per-suite)");

    // --- eulerian / derangement --------------------------------------------
    auto* eu = app.add_subcommand("eulerian", "Eulerian polynomial A_n");
    int eu_n = 0, eu_i = -1;
    eu->add_option("--n", eu_n, "n")->required()->check(CLI::PositiveNumber);
    eu->add_option("--i", eu_i, "Refine by last entry e_n = i");
    auto* de = app.add_subcommand("derangement", "Derangement polynomial d_n");
    int de_n = 0, de_i = -1;
    de->add_option("--n", de_n, "n")->required()->check(CLI::PositiveNumber);
    de->add_option("--i", de_i, "Refine by last entry e_n = i");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*chow) {
            guard_n(chow_n, opt);
            if (matroid == "uniform" && (chow_k < 1 || chow_k > chow_n - 1))
                throw CLI::ValidationError("uniform requires 1 <= k <= n-1");
            if (matroid == "boolean" && chow_k != 0)
                throw CLI::ValidationError("boolean takes no --k");
            if (cross_check) {
                std::vector<std::string> methods =
                    matroid == "boolean" ? std::vector<std::string>{"normal", "rewrite", "oracle"}
                                         : std::vector<std::string>{"rewrite", "oracle"};
                std::optional<IntPolynomial> first;
                for (const auto& m : methods) {
                    IntPolynomial p = chow_by_method(matroid, chow_n, chow_k, m);
                    if (!first) {
                        first = p;
                    } else if (p != *first) {
                        std::cerr << "cross-check mismatch: " << m << " gives " << p.str()
                                  << " but expected " << first->str() << "\n";
                        return 1;
                    }
                }
                print_poly(*first, opt);
            } else {
                print_poly(chow_by_method(matroid, chow_n, chow_k, method), opt);
            }
            return 0;
        }

        if (*bij) {
            if (direction == "psi") {
                if (perm_text.empty()) throw CLI::ValidationError("psi requires --perm");
                std::vector<int> vals = parse_int_list(perm_text);
                GroundSet g = GroundSet::canonical(static_cast<int>(vals.size()));
                Permutation p(vals, g);
                NormalMonomial m = psi(p, g);
                if (opt.format == "json")
                    std::cout << monomial_json(m, g).dump() << "\n";
                else
                    std::cout << to_string(m, g) << "\n";
            } else {
                if (mono_text.empty()) throw CLI::ValidationError("phi requires --monomial");
                int n = bij_n;
                if (n == 0) {
                    // Infer the ground set from the largest label present.
                    for (char c : mono_text)
                        if (std::isdigit(static_cast<unsigned char>(c))) n = std::max(n, c - '0');
                }
                GroundSet g = GroundSet::canonical(n);
                Permutation p = phi(parse_monomial(mono_text, g), g);
                if (opt.format == "json")
                    std::cout << json(p.values()).dump() << "\n";
                else
                    std::cout << to_string(p) << "\n";
            }
            return 0;
        }

        if (*rw) {
            InversionSequence e = parse_inversion_sequence(seq_text);
            RewriteResult r = g_map_power(e, rw_power);
            if (opt.format == "json") {
                json out;
                out["zero"] = r.zero;
                if (!r.zero) out["seq"] = r.seq.entries();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << (r.zero ? "ZERO" : to_string(r.seq)) << "\n";
            }
            return 0;
        }

        if (*ds) {
            guard_n(ds_n, opt);
            std::vector<InversionSequence> set =
                ds_route == "recursive" ? dset_recursive(ds_n, ds_k) : g_power_images(ds_n, ds_k);
            if (opt.format == "json") {
                json elems = json::array();
                for (const auto& e : set) elems.push_back(e.entries());
                std::cout << json{{"n", ds_n}, {"k", ds_k}, {"elements", elems}}.dump() << "\n";
            } else {
                for (const auto& e : set) std::cout << to_string(e) << "\n";
            }
            return 0;
        }

        if (*il) {
            bool refined = family == "eulerian-refined" || family == "derangement-refined";
            int k_label = il_k > 0 ? il_k : (refined ? 1 : 2);
            if (refined && k_label != 1)
                throw CLI::ValidationError("the refined families are level-1 (use --k 1)");
            if ((family == "drop22" || family == "merge12") && k_label != 2)
                throw CLI::ValidationError("the repaired families are level-2 (use --k 2)");
            if (!il_range.empty()) {
                auto dots = il_range.find("..");
                if (dots == std::string::npos)
                    throw CLI::ValidationError("--n expects a range like 4..10");
                il_min = std::stoi(il_range.substr(0, dots));
                il_max = std::stoi(il_range.substr(dots + 2));
            }
            guard_n(il_max, opt);
            bool all_ok = true;
            int witness = -1;
            json rows = json::array();
            if (opt.format == "csv") std::cout << "n,k,i,c0,c1,...\n";
            for (int n = il_min; n <= il_max; ++n) {
                std::vector<IntPolynomial> ps;
                std::vector<int> labels;
                if (family == "plain") {
                    ps = dki_family(n, k_label);
                    for (int i = 0; i <= n - 1; ++i) labels.push_back(i);
                } else if (family == "drop22") {
                    ps = dki_family_drop22(n);
                    for (int i = 0; i <= n - 1; ++i)
                        if (i != 2) labels.push_back(i);
                } else if (family == "merge12") {
                    ps = dki_family_merge12(n);
                    labels = {0, 1};
                    for (int i = 3; i <= n - 1; ++i) labels.push_back(i);
                } else if (family == "eulerian-refined") {
                    for (int i = 0; i <= n - 1; ++i) {
                        ps.push_back(eulerian_refined(n, i));
                        labels.push_back(i);
                    }
                } else {  // derangement-refined
                    for (int i = 0; i <= n - 1; ++i) {
                        ps.push_back(derangement_refined(n, i));
                        labels.push_back(i);
                    }
                }
                bool ok = is_interlacing_sequence(ps);
                all_ok = all_ok && ok;
                if (!ok && witness < 0) witness = n;
                if (opt.format == "csv") {
                    for (std::size_t j = 0; j < ps.size(); ++j)
                        std::cout << n << ',' << k_label << ',' << labels[j] << ','
                                  << poly_csv(ps[j]) << "\n";
                } else if (opt.format == "json") {
                    json fam = json::array();
                    for (std::size_t j = 0; j < ps.size(); ++j)
                        fam.push_back(json{{"i", labels[j]}, {"poly", poly_json(ps[j])}});
                    rows.push_back(json{{"n", n}, {"interlacing", ok}, {"polys", fam}});
                } else {
                    std::cout << "n=" << n << " " << family << ": "
                              << (ok ? "interlacing" : "NOT interlacing") << "\n";
                }
            }
            if (opt.format == "json") {
                json summary{{"family", family}, {"rows", rows}, {"all_interlacing", all_ok}};
                if (witness > 0) summary["smallest_witness"] = witness;
                std::cout << summary.dump(2) << "\n";
            } else if (opt.format == "text") {
                if (witness > 0)
                    std::cout << "smallest non-interlacing witness: n=" << witness << "\n";
                else
                    std::cout << "all interlacing on the tested range\n";
            }
            // Only the plain family is expected to fail; for the others a
            // failure anywhere in the range is an error.
            return (family == "plain" || all_ok) ? 0 : 1;
        }

        if (*vf) {
            Report r;
            int threads = opt.threads;
            auto bound = [&](int dflt) { return vf_max_n > 0 ? vf_max_n : dflt; };
            if (suite == "bijection") r = verify_bijection(bound(7), threads);
            else if (suite == "rewriting") r = verify_rewriting(bound(9), threads);
            else if (suite == "oracle") r = verify_oracle(bound(6), threads);
            else if (suite == "corollary") r = verify_corollary(bound(8), threads);
            else if (suite == "interlacing") r = verify_interlacing(bound(10), threads);
            else r = verify_all(bound(9), threads);
            print_report(r, opt);
            return r.all_passed() ? 0 : 1;
        }

        if (*eu) {
            guard_n(eu_n, opt);
            print_poly(eu_i < 0 ? eulerian(eu_n) : eulerian_refined(eu_n, eu_i), opt);
            return 0;
        }
        if (*de) {
            guard_n(de_n, opt);
            print_poly(de_i < 0 ? derangement_poly(de_n) : derangement_refined(de_n, de_i), opt);
            return 0;
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
