// Command-line front end: field inspection, function analysis, sum-freedom
// checks, Reed-Muller subcode construction and certification, Grassmann graph
// colorings, and the search campaigns. `sumfree reproduce --all` replays the
// full verification suite.

#include "CLI11.hpp"

#include "sumfree/claims.hpp"
#include "sumfree/grassmann.hpp"
#include "sumfree/io.hpp"
#include "sumfree/subcode.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sumfree;

namespace {

std::string hex(std::uint64_t v) {
    std::ostringstream ss;
    ss << "0x" << std::hex << v;
    return ss.str();
}

std::string flat_to_string(const Flat& a) {
    std::ostringstream ss;
    ss << "basis=";
    for (std::size_t i = 0; i < a.direction.rows.size(); ++i) {
        if (i) ss << ',';
        ss << std::hex << a.direction.rows[i] << std::dec;
    }
    ss << " rep=" << std::hex << a.rep << std::dec;
    return ss.str();
}

FieldContext context_for(int n, const std::string& modulus_hex) {
    if (modulus_hex.empty()) return FieldContext::with_default_modulus(n);
    return FieldContext(n, static_cast<std::uint32_t>(std::stoul(modulus_hex, nullptr, 16)));
}

int cmd_field_info(int n, const std::string& modulus_hex) {
    const FieldContext ctx = context_for(n, modulus_hex);
    std::cout << "degree " << ctx.degree() << "\nmodulus " << hex(ctx.modulus()) << "\ngenerator "
              << hex(ctx.generator()) << "\n";
    return 0;
}

int cmd_fn_degree(const std::string& input) {
    const auto ff = read_function_file(input);
    if (ff.fn.is_zero())
        std::cout << "degree: zero function\n";
    else
        std::cout << "degree " << ff.fn.algebraic_degree() << "\n";
    return 0;
}

int cmd_fn_anf(const std::string& input) {
    const auto ff = read_function_file(input);
    for (int coord = 0; coord < ff.fn.output_dim(); ++coord) {
        std::cout << "y" << coord << ":";
        for (std::uint32_t u = 0; u < (1u << ff.fn.input_dim()); ++u)
            if (ff.fn.anf_coefficient(coord, u)) std::cout << ' ' << std::hex << u << std::dec;
        std::cout << '\n';
    }
    return 0;
}

int cmd_fn_components(const std::string& input) {
    const auto ff = read_function_file(input);
    for (std::uint32_t v = 1; v < (1u << ff.fn.output_dim()); ++v) {
        const auto comp = ff.fn.component(v);
        std::cout << "v=" << std::hex << v << std::dec << " deg=";
        if (comp.is_zero())
            std::cout << "zero";
        else
            std::cout << comp.algebraic_degree();
        std::cout << '\n';
    }
    return 0;
}

int cmd_check(const std::string& input, int k, bool all_k, int jobs, std::uint64_t flat_cap) {
    const auto ff = read_function_file(input);
    const EnumerationCaps caps{flat_cap};
    int worst = 0;
    auto run_one = [&](int order) {
        try {
            const auto res = is_sumfree(ff.fn, order, jobs, caps);
            if (res.sum_free) {
                std::cout << "k=" << order << " PASS\n";
            } else {
                std::cout << "k=" << order << " FAIL " << flat_to_string(*res.counterexample)
                          << "\n";
                worst = 1;
            }
        } catch (const CapExceeded& e) {
            std::cout << "k=" << order << " CAP-EXCEEDED " << e.what() << "\n";
            worst = 2;
        }
    };
    if (all_k) {
        for (int order = 1; order <= ff.fn.input_dim(); ++order) run_one(order);
    } else {
        run_one(k);
    }
    return worst;
}

int cmd_rm(bool pcheck, int r, int n, const std::string& out) {
    const BitMatrix m = pcheck ? rm_parity_check(r, n) : rm_generator(r, n);
    if (out.empty())
        write_matrix(std::cout, m);
    else
        write_matrix_file(out, m);
    return 0;
}

int cmd_subcode_build(const std::string& input, int r, const std::string& out, bool trust,
                      int jobs) {
    const auto ff = read_function_file(input);
    BuildOptions opts;
    opts.trust = trust;
    opts.jobs = jobs;
    try {
        auto bundle = build_subcode(ff.fn, r, opts);
        std::cout << "dim " << bundle.dimension << " length " << bundle.code.length << "\n";
        if (!out.empty()) write_matrix_file(out, *bundle.code.generator);
        return 0;
    } catch (const NotSumFreeError& e) {
        std::cerr << "error: " << e.what() << " (" << flat_to_string(e.violating) << ")\n";
        return 1;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << " (component v=" << hex(e.component) << ")\n";
        return 1;
    }
}

int cmd_subcode_mindist(const std::string& gen_file, bool exhaustive, bool certify,
                        const std::string& input, int r, int dim_cap, int jobs) {
    BinaryCode code = code_from_generator(read_matrix_file(gen_file));
    if (certify) {
        const auto ff = read_function_file(input);
        BuildOptions opts;
        opts.jobs = jobs;
        auto bundle = build_subcode(ff.fn, r, opts);
        // the supplied generator must present the same code
        if (code_dimension(code) != bundle.dimension ||
            !ensure_parity_check(bundle.code).product_with_transpose_is_zero(*code.generator)) {
            std::cerr << "error: generator does not match the code built from --input/--r\n";
            return 1;
        }
        const auto cert = certify_min_distance(bundle, ~std::uint64_t(0), jobs);
        std::cout << "lower " << cert.lower << "\n";
        if (cert.complete) {
            std::cout << "upper " << cert.upper << "\nwitness-weight "
                      << cert.witness_codeword.popcount() << "\nshared-witness "
                      << hex(cert.shared_witness) << "\n";
            return 0;
        }
        std::cout << "upper unresolved (search cap hit)\n";
        return 2;
    }
    (void)exhaustive; // exhaustive is the default mode
    const int d = min_distance_exhaustive(code, MinDistanceOptions{dim_cap});
    std::cout << "mindist " << d << "\n";
    return 0;
}

int cmd_subcode_extract(const std::string& pcheck_file, int r, const std::string& out) {
    BinaryCode code = code_from_parity_check(read_matrix_file(pcheck_file));
    const auto res = extract_function(code, r);
    if (!res.bundle) {
        std::cout << "codimension 0: input is RM(r,n) itself, nothing to extract\n";
        return 0;
    }
    std::cout << "n " << res.bundle->n << " m " << res.bundle->m << "\n";
    if (!out.empty())
        write_function_file(out, res.bundle->F);
    else
        write_function(std::cout, res.bundle->F);
    return 0;
}

int cmd_grassmann_color(const std::string& input, int k, const std::string& mode,
                        const std::string& out, int jobs) {
    const auto ff = read_function_file(input);
    ColoringCertificate cert;
    if (mode == "witness") {
        cert = witness_coloring(ff.fn, k, jobs);
    } else if (mode == "extended") {
        cert = extended_coloring(ff.fn, k, jobs);
    } else {
        std::cerr << "error: --mode must be witness or extended\n";
        return 1;
    }
    const auto report = verify_coloring(cert, &ff.fn);
    if (!report.valid) {
        std::cerr << "error: produced coloring failed verification: " << report.detail << "\n";
        return 1;
    }
    std::cout << "vertices " << cert.assignment.size() << "\ncolors " << report.colors_used
              << "\n";
    if (!out.empty())
        write_certificate_file(out, cert);
    else
        write_certificate(std::cout, cert);
    return 0;
}

int cmd_grassmann_verify(const std::string& cert_file) {
    const auto cert = read_certificate_file(cert_file);
    const auto report = verify_coloring(cert);
    std::cout << (report.valid ? "VALID" : "INVALID") << " colors " << report.colors_used
              << "\n";
    if (!report.valid) {
        std::cout << "detail: " << report.detail << "\n";
        if (report.first_conflict) {
            std::ostringstream a, b;
            for (auto v : report.first_conflict->first.rows) a << std::hex << v << ',';
            for (auto v : report.first_conflict->second.rows) b << std::hex << v << ',';
            std::cout << "conflict: " << a.str() << " vs " << b.str() << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_grassmann_bounds(int n, int k, int t) {
    std::cout << "chromatic lower bound " << to_decimal(chromatic_lower_bound(n, k, t)) << "\n";
    std::cout << "vertices " << to_decimal(gaussian_binomial(n, k)) << "\n";
    return 0;
}

int cmd_search_carlet(int n, int k, int j, const std::string& modulus_hex, bool force,
                      int jobs) {
    const FieldContext ctx = context_for(n, modulus_hex);
    const auto F = carlet_function(ctx, k, j, force);
    std::cout << "exponent " << carlet_exponent(n, k, j) << "\n";
    std::cout << "degree " << F.algebraic_degree() << "\n";
    const auto res = is_sumfree(F, k, jobs);
    std::cout << "sumfree-order-" << k << " " << (res.sum_free ? "PASS" : "FAIL") << "\n";
    return res.sum_free ? 0 : 1;
}

int cmd_search_gold(int n, int i, const std::string& modulus_hex, int jobs) {
    const FieldContext ctx = context_for(n, modulus_hex);
    const auto report = gold_inverse_check(ctx, i, jobs);
    std::cout << "inverse-exponent " << report.inverse_exponent << "\ngold-exponent "
              << report.gold_exponent << "\ncomposition "
              << (report.composition_is_identity ? "identity" : "MISMATCH") << "\nsumfree-2 "
              << (report.sumfree_order_2 ? "yes" : "no") << "\nsumfree-" << ((n + 1) / 2) << " "
              << (report.sumfree_order_m_plus_1 ? "yes" : "no") << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_search_catalog(const std::string& file, int kmin, int kmax, int jobs,
                       const std::string& report_file, std::uint64_t flat_cap) {
    const auto catalog = read_catalog_file(file);
    const auto report = profile_catalog(catalog, kmin, kmax, jobs, EnumerationCaps{flat_cap});
    std::ostringstream out;
    out << "catalog " << catalog.source << " n=" << report.n << " m=" << report.m << " k=["
        << kmin << "," << kmax << "]\n";
    for (const auto& e : report.entries) {
        out << e.label << " degree=" << e.degree << " orders={";
        bool first = true;
        for (int k : e.orders) {
            if (!first) out << ',';
            out << k;
            first = false;
        }
        out << "}";
        for (const auto& [k, st] : e.per_k)
            if (st == KStatus::cap_exceeded) out << " cap-exceeded@" << k;
        out << " min-component-degree=" << e.min_component_degree << " time="
            << e.seconds << "s\n";
    }
    if (report_file.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(report_file);
        f << out.str();
        std::cout << "report written to " << report_file << "\n";
    }
    return 0;
}

int cmd_search_nonexist(int n, int m, int k, std::uint64_t budget) {
    const auto res = exhaustive_nonexistence(n, m, k, budget);
    switch (res.status) {
        case SearchStatus::found:
            std::cout << "EXISTS nodes " << res.nodes << "\n";
            write_function(std::cout, *res.witness);
            return 0;
        case SearchStatus::nonexistent:
            std::cout << "NONEXISTENT nodes " << res.nodes << "\n";
            return 0;
        case SearchStatus::budget_exhausted:
            std::cout << "INCONCLUSIVE budget " << res.budget << " exhausted\n";
            return 2;
    }
    return 2;
}

int cmd_reproduce(const std::string& claim, bool all, bool list, const std::string& report_file,
                  RunConfig config) {
    if (list) {
        for (const auto& id : claim_ids()) std::cout << id << "\n";
        return 0;
    }
    std::vector<std::string> ids;
    if (all) {
        for (const auto& c : acceptance_criteria())
            ids.insert(ids.end(), c.claims.begin(), c.claims.end());
    } else {
        if (!is_claim(claim)) {
            std::cerr << "error: unknown claim '" << claim << "'; valid ids:\n";
            for (const auto& id : claim_ids()) std::cerr << "  " << id << "\n";
            return 2;
        }
        ids.push_back(claim);
    }
    std::ofstream report_stream;
    if (!report_file.empty()) report_stream.open(report_file);
    int failures = 0;
    for (const auto& id : ids) {
        const auto r = run_claim(id, config);
        print_result(std::cout, r);
        if (report_stream.is_open()) print_result(report_stream, r);
        if (!r.pass) ++failures;
    }
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kth-order sum-free functions, Reed-Muller subcodes, and Grassmann colorings"};
    app.require_subcommand(1);

    RunConfig env = config_from_env();
    int jobs = env.jobs;
    std::uint64_t flat_cap = env.flat_cap;
    int dim_cap = env.dim_cap;
    app.add_option("--jobs", jobs, "worker threads for sharded checks");

    std::string modulus_hex;
    int n = 0, m_out = 0, k = 0, r = 0, t = 0, j = 1, gold_i = 1;
    std::string input, out, gen_file, pcheck_file, cert_file, mode = "witness", catalog_file,
                            report_file, claim;
    bool all_k = false, trust = false, exhaustive = false, certify = false, force = false,
         all_claims = false, list_claims = false;
    int kmin = 1, kmax = -1;
    std::uint64_t budget = kDefaultNodeBudget;

    auto* field = app.add_subcommand("field", "field inspection");
    auto* field_info = field->add_subcommand("info", "print degree, modulus, generator");
    field_info->add_option("--n", n, "extension degree")->required();
    field_info->add_option("--modulus", modulus_hex, "irreducible polynomial (hex)");

    auto* fn = app.add_subcommand("fn", "function analysis");
    auto* fn_degree = fn->add_subcommand("degree", "algebraic degree");
    auto* fn_anf = fn->add_subcommand("anf", "algebraic normal form monomials");
    auto* fn_components = fn->add_subcommand("components", "component degrees");
    for (auto* sc : {fn_degree, fn_anf, fn_components})
        sc->add_option("--input", input, "function file")->required();

    auto* check = app.add_subcommand("check", "exhaustive kth-order sum-freedom check");
    check->add_option("--input", input, "function file")->required();
    check->add_option("--k", k, "order to check");
    check->add_flag("--all-k", all_k, "check every order 1..n");
    check->add_option("--flat-cap", flat_cap, "enumeration cap");

    auto* rm = app.add_subcommand("rm", "Reed-Muller matrices");
    auto* rm_gen = rm->add_subcommand("gen", "generator matrix");
    auto* rm_pcheck = rm->add_subcommand("pcheck", "parity-check matrix");
    for (auto* sc : {rm_gen, rm_pcheck}) {
        sc->add_option("--r", r, "order")->required();
        sc->add_option("--n", n, "variables")->required();
        sc->add_option("--out", out, "output file (stdout when absent)");
    }

    auto* subcode = app.add_subcommand("subcode", "Reed-Muller subcodes from sum-free functions");
    auto* sc_build = subcode->add_subcommand("build", "build C_F");
    sc_build->add_option("--input", input, "function file")->required();
    sc_build->add_option("--r", r, "Reed-Muller order")->required();
    sc_build->add_option("--out", out, "generator matrix output");
    sc_build->add_flag("--trust", trust, "skip sum-freedom verification");
    auto* sc_mindist = subcode->add_subcommand("mindist", "minimum distance");
    sc_mindist->add_option("--gen", gen_file, "generator matrix file")->required();
    sc_mindist->add_flag("--exhaustive", exhaustive, "Gray-code enumeration (default)");
    sc_mindist->add_flag("--certify", certify, "certificate mode");
    sc_mindist->add_option("--input", input, "function file (certificate mode)");
    sc_mindist->add_option("--r", r, "Reed-Muller order (certificate mode)");
    sc_mindist->add_option("--dim-cap", dim_cap, "exhaustive dimension cap");
    auto* sc_extract = subcode->add_subcommand("extract", "extract the defining function");
    sc_extract->add_option("--pcheck", pcheck_file, "parity-check matrix file")->required();
    sc_extract->add_option("--r", r, "Reed-Muller order")->required();
    sc_extract->add_option("--out", out, "function file output");

    auto* grassmann = app.add_subcommand("grassmann", "Grassmann graph colorings");
    auto* gr_color = grassmann->add_subcommand("color", "produce a coloring certificate");
    gr_color->add_option("--input", input, "function file")->required();
    gr_color->add_option("--k", k, "subspace dimension")->required();
    gr_color->add_option("--mode", mode, "witness|extended");
    gr_color->add_option("--out", out, "certificate output file");
    auto* gr_verify = grassmann->add_subcommand("verify", "verify a certificate");
    gr_verify->add_option("--cert", cert_file, "certificate file")->required();
    auto* gr_bounds = grassmann->add_subcommand("bounds", "chromatic lower bound");
    gr_bounds->add_option("--n", n)->required();
    gr_bounds->add_option("--k", k)->required();
    gr_bounds->add_option("--t", t)->required();

    auto* search = app.add_subcommand("search", "constructions and campaigns");
    auto* se_carlet = search->add_subcommand("carlet", "the power-map family member F_{k,j}");
    se_carlet->add_option("--n", n)->required();
    se_carlet->add_option("--k", k)->required();
    se_carlet->add_option("--j", j);
    se_carlet->add_option("--modulus", modulus_hex);
    se_carlet->add_flag("--force", force, "allow gcd(j,n) != 1");
    auto* se_gold = search->add_subcommand("gold-inverse", "Gold-inverse verification");
    se_gold->add_option("--n", n)->required();
    se_gold->add_option("--i", gold_i)->required();
    se_gold->add_option("--modulus", modulus_hex);
    auto* se_catalog = search->add_subcommand("catalog", "profile a function catalog");
    se_catalog->add_option("--file", catalog_file, "catalog file")->required();
    se_catalog->add_option("--kmin", kmin);
    se_catalog->add_option("--kmax", kmax);
    se_catalog->add_option("--report", report_file, "write the summary here");
    se_catalog->add_option("--flat-cap", flat_cap, "per-k enumeration cap");
    auto* se_nonexist = search->add_subcommand("nonexist", "exhaustive nonexistence search");
    se_nonexist->add_option("--n", n)->required();
    se_nonexist->add_option("--m", m_out)->required();
    se_nonexist->add_option("--k", k)->required();
    se_nonexist->add_option("--budget", budget, "node budget");

    auto* reproduce = app.add_subcommand("reproduce", "replay a documented claim");
    reproduce->add_option("claim", claim, "claim id");
    reproduce->add_flag("--all", all_claims, "run the full suite");
    reproduce->add_flag("--list", list_claims, "list claim ids");
    reproduce->add_option("--report", report_file, "also write CLAIM lines here");
    reproduce->add_option("--out-dir", env.out_dir, "artifact output directory");

    CLI11_PARSE(app, argc, argv);
    env.jobs = jobs;
    env.flat_cap = flat_cap;
    env.dim_cap = dim_cap;
    env.node_budget = budget;

    try {
        if (field_info->parsed()) return cmd_field_info(n, modulus_hex);
        if (fn_degree->parsed()) return cmd_fn_degree(input);
        if (fn_anf->parsed()) return cmd_fn_anf(input);
        if (fn_components->parsed()) return cmd_fn_components(input);
        if (check->parsed()) {
            if (!all_k && k == 0 && check->count("--k") == 0) {
                std::cerr << "error: pass --k or --all-k\n";
                return 2;
            }
            return cmd_check(input, k, all_k, jobs, flat_cap);
        }
        if (rm_gen->parsed()) return cmd_rm(false, r, n, out);
        if (rm_pcheck->parsed()) return cmd_rm(true, r, n, out);
        if (sc_build->parsed()) return cmd_subcode_build(input, r, out, trust, jobs);
        if (sc_mindist->parsed())
            return cmd_subcode_mindist(gen_file, exhaustive, certify, input, r, dim_cap, jobs);
        if (sc_extract->parsed()) return cmd_subcode_extract(pcheck_file, r, out);
        if (gr_color->parsed()) return cmd_grassmann_color(input, k, mode, out, jobs);
        if (gr_verify->parsed()) return cmd_grassmann_verify(cert_file);
        if (gr_bounds->parsed()) return cmd_grassmann_bounds(n, k, t);
        if (se_carlet->parsed()) return cmd_search_carlet(n, k, j, modulus_hex, force, jobs);
        if (se_gold->parsed()) return cmd_search_gold(n, gold_i, modulus_hex, jobs);
        if (se_catalog->parsed())
            return cmd_search_catalog(catalog_file, kmin, kmax, jobs, report_file, flat_cap);
        if (se_nonexist->parsed()) return cmd_search_nonexist(n, m_out, k, budget);
        if (reproduce->parsed())
            return cmd_reproduce(claim, all_claims, list_claims, report_file, env);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << app.help();
    return 2;
}
