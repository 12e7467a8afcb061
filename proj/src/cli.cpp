#include "germ/cli.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "germ/crosscheck.hpp"
#include "germ/equivalence.hpp"
#include "germ/error.hpp"
#include "germ/localalg.hpp"
#include "germ/parser.hpp"
#include "germ/render.hpp"
#include "germ/singularity.hpp"
#include "germ/stdbasis.hpp"
#include "germ/version.hpp"

namespace germ {
namespace {

struct CommonOpts {
    std::int64_t characteristic = 0;
    std::string vars;
    std::uint32_t cap = RingContext::kDefaultCap;
    std::string format = "text";
    bool oracle = false;

    bool json() const { return format == "json"; }
};

void attach_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--char", opts.characteristic,
                    "coefficient field characteristic: 0 (rationals) or a prime below 2^31")
        ->required();
    cmd->add_option("--vars", opts.vars, "comma-separated variable names, e.g. x,y")
        ->required();
    cmd->add_option("--cap", opts.cap,
                    "truncation degree cap; all data lives in K[x]/m^(cap+1)")
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--oracle", opts.oracle,
                  "re-derive the reported dimensions, memberships and m-power scans with "
                  "the truncated linear-algebra oracle and report agreement");
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> names;
    std::string piece;
    std::istringstream in(csv);
    while (std::getline(in, piece, ',')) {
        std::size_t a = piece.find_first_not_of(' ');
        std::size_t b = piece.find_last_not_of(' ');
        names.push_back(a == std::string::npos ? std::string() : piece.substr(a, b - a + 1));
    }
    return names;
}

RingPtr ring_from(const CommonOpts& opts) {
    if (opts.characteristic < 0 ||
        opts.characteristic > std::numeric_limits<std::uint32_t>::max()) {
        throw Error("characteristic must be 0 or a prime below 2^31");
    }
    FieldSpec field = opts.characteristic == 0
                          ? FieldSpec::rationals()
                          : FieldSpec::prime(static_cast<std::uint32_t>(opts.characteristic));
    return make_ring(field, split_names(opts.vars), opts.cap);
}

// Parse errors from batch files are re-thrown with the file's line number.
Polynomial parse_input(const std::string& text, const RingPtr& ring, int line) {
    try {
        return parse_polynomial(text, ring);
    } catch (const ParseError& e) {
        if (line <= 1) throw;
        throw ParseError(line, e.column(), e.kind(), e.message());
    }
}

std::vector<Polynomial> parse_inputs(const std::vector<std::string>& texts, const RingPtr& ring) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) {
        out.push_back(parse_input(t, ring, 1));
    }
    return out;
}

// One polynomial per line; '#' starts a comment; blank lines skipped.
std::vector<std::pair<int, std::string>> read_batch_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open input file: " + path);
    }
    std::vector<std::pair<int, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        entries.emplace_back(lineno, line.substr(a, b - a + 1));
    }
    return entries;
}

nlohmann::json envelope(const RingPtr& ring) {
    nlohmann::json top;
    top["tool_version"] = kToolVersion;
    top["field"] = {{"characteristic", ring->field().characteristic()}};
    top["vars"] = ring->var_names();
    top["cap"] = ring->degree_cap();
    return top;
}

nlohmann::json crosscheck_json(const CrossCheckLog& log) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : log.entries) {
        nlohmann::json entry;
        entry["check"] = e.check;
        if (e.ok.has_value()) {
            entry["ok"] = *e.ok;
        } else {
            entry["skipped"] = true;
        }
        if (!e.detail.empty()) {
            entry["detail"] = e.detail;
        }
        checks.push_back(entry);
    }
    return checks;
}

void attach_crosscheck(nlohmann::json& result, const CrossCheckLog& log) {
    result["oracle_agreement"] = log.agreement;
    result["oracle_checks"] = crosscheck_json(log);
}

void print_crosscheck(std::ostream& out, const CrossCheckLog& log) {
    out << "oracle agreement : " << (log.agreement ? "yes" : "NO") << "\n";
    for (const auto& e : log.entries) {
        out << "  [" << (e.ok.has_value() ? (*e.ok ? "ok" : "FAIL") : "skip") << "] " << e.check;
        if (!e.detail.empty()) {
            out << ": " << e.detail;
        }
        out << "\n";
    }
}

void emit_json(std::ostream& out, const nlohmann::json& top) {
    out << top.dump(2) << "\n";
}

std::string monomial_str(const RingPtr& ring, const Monomial& m) {
    return print_polynomial(Polynomial::term(ring, m, Scalar::one(ring->field())));
}

std::vector<std::string> polynomial_strs(const std::vector<Polynomial>& polys) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        out.push_back(print_polynomial(p));
    }
    return out;
}

int run_analyze(const CommonOpts& opts, const std::string& poly_arg, const std::string& file_arg,
                std::ostream& out) {
    if (poly_arg.empty() == file_arg.empty()) {
        throw Error("analyze takes exactly one polynomial argument or --file");
    }
    RingPtr ring = ring_from(opts);
    std::vector<std::pair<int, std::string>> inputs;
    if (!poly_arg.empty()) {
        inputs.emplace_back(1, poly_arg);
    } else {
        inputs = read_batch_file(file_arg);
        if (inputs.empty()) {
            throw Error("input file holds no polynomials: " + file_arg);
        }
    }

    nlohmann::json results = nlohmann::json::array();
    std::ostringstream text;
    bool first = true;
    for (const auto& [line, src] : inputs) {
        Polynomial f = parse_input(src, ring, line);
        SingularityReport report = analyze(f);
        if (opts.json()) {
            nlohmann::json result = report_to_json(report);
            if (opts.oracle) {
                attach_crosscheck(result, crosscheck_report(report));
            }
            results.push_back(std::move(result));
        } else {
            if (!first) text << "--\n";
            text << report_to_text(report);
            if (opts.oracle) {
                print_crosscheck(text, crosscheck_report(report));
            }
            first = false;
        }
    }

    if (opts.json()) {
        nlohmann::json top = envelope(ring);
        if (!poly_arg.empty()) {
            top["result"] = results[0];
        } else {
            top["results"] = results;
        }
        emit_json(out, top);
    } else {
        out << text.str();
    }
    return 0;
}

int run_compare(const CommonOpts& opts, const std::string& mode_str, const std::string& f_str,
                const std::string& g_str, std::ostream& out) {
    RingPtr ring = ring_from(opts);
    Polynomial f = parse_input(f_str, ring, 1);
    Polynomial g = parse_input(g_str, ring, 1);
    EquivalenceVerdict verdict =
        mode_str == "contact" ? contact_compare(f, g) : right_compare(f, g);
    if (opts.json()) {
        nlohmann::json top = envelope(ring);
        nlohmann::json result = verdict_to_json(verdict, f, g);
        if (opts.oracle) {
            attach_crosscheck(result, crosscheck_verdict(verdict, f, g));
        }
        top["result"] = std::move(result);
        emit_json(out, top);
    } else {
        out << verdict_to_text(verdict, f, g);
        if (opts.oracle) {
            print_crosscheck(out, crosscheck_verdict(verdict, f, g));
        }
    }
    return 0;
}

int run_nf(const CommonOpts& opts, const std::string& f_str,
           const std::vector<std::string>& gen_strs, std::ostream& out) {
    RingPtr ring = ring_from(opts);
    Polynomial f = parse_input(f_str, ring, 1);
    std::vector<Polynomial> gens = parse_inputs(gen_strs, ring);
    for (const auto& g : gens) {
        if (g.is_zero()) {
            throw Error("nf generators must be nonzero");
        }
    }
    MoraResult nf = mora_normal_form(f, gens);
    if (opts.json()) {
        nlohmann::json top = envelope(ring);
        nlohmann::json result;
        result["remainder"] = print_polynomial(nf.remainder);
        result["unit"] = print_polynomial(nf.unit);
        result["cofactors"] = polynomial_strs(nf.cofactors);
        if (opts.oracle) {
            attach_crosscheck(result, crosscheck_nf(f, gens, nf));
        }
        top["result"] = std::move(result);
        emit_json(out, top);
    } else {
        out << "remainder: " << print_polynomial(nf.remainder) << "\n";
        out << "unit     : " << print_polynomial(nf.unit) << "\n";
        for (std::size_t i = 0; i < nf.cofactors.size(); ++i) {
            out << "cofactor[" << i << "]: " << print_polynomial(nf.cofactors[i]) << "\n";
        }
        if (opts.oracle) {
            print_crosscheck(out, crosscheck_nf(f, gens, nf));
        }
    }
    return 0;
}

int run_std(const CommonOpts& opts, const std::vector<std::string>& gen_strs, std::ostream& out) {
    RingPtr ring = ring_from(opts);
    Ideal I(ring, parse_inputs(gen_strs, ring));
    StdBasis basis = std_basis(I);
    std::vector<std::string> staircase;
    staircase.reserve(basis.staircase().size());
    for (const auto& m : basis.staircase()) {
        staircase.push_back(monomial_str(ring, m));
    }
    if (opts.json()) {
        nlohmann::json top = envelope(ring);
        nlohmann::json result;
        result["generators"] = polynomial_strs(I.gens());
        result["standard_basis"] = polynomial_strs(basis.elements());
        result["staircase"] = staircase;
        if (opts.oracle) {
            attach_crosscheck(result, crosscheck_std(I, basis));
        }
        top["result"] = std::move(result);
        emit_json(out, top);
    } else {
        out << "standard basis (" << basis.elements().size() << " elements):\n";
        for (const auto& e : basis.elements()) {
            out << "  " << print_polynomial(e) << "\n";
        }
        out << "staircase:";
        for (const auto& m : staircase) {
            out << " " << m;
        }
        out << "\n";
        if (opts.oracle) {
            print_crosscheck(out, crosscheck_std(I, basis));
        }
    }
    return 0;
}

int run_dim(const CommonOpts& opts, const std::vector<std::string>& gen_strs, std::ostream& out) {
    RingPtr ring = ring_from(opts);
    Ideal I(ring, parse_inputs(gen_strs, ring));
    ColengthResult c = colength(I);
    if (opts.json()) {
        nlohmann::json top = envelope(ring);
        nlohmann::json result;
        result["colength"] = c ? nlohmann::json(*c) : nlohmann::json("infinity");
        if (opts.oracle) {
            attach_crosscheck(result, crosscheck_dim(I, c));
        }
        top["result"] = std::move(result);
        emit_json(out, top);
    } else {
        out << "colength: " << (c ? std::to_string(*c) : std::string("infinity")) << "\n";
        if (opts.oracle) {
            print_crosscheck(out, crosscheck_dim(I, c));
        }
    }
    return 0;
}

int run_hilbert(const CommonOpts& opts, const std::vector<std::string>& gen_strs,
                std::ostream& out) {
    RingPtr ring = ring_from(opts);
    Ideal I(ring, parse_inputs(gen_strs, ring));
    std::vector<std::uint64_t> hf = hilbert_function(I);
    std::uint64_t total = std::accumulate(hf.begin(), hf.end(), std::uint64_t{0});
    if (opts.json()) {
        nlohmann::json top = envelope(ring);
        nlohmann::json result;
        result["hilbert_function"] = hf;
        result["colength"] = total;
        if (opts.oracle) {
            attach_crosscheck(result, crosscheck_hilbert(I, hf));
        }
        top["result"] = std::move(result);
        emit_json(out, top);
    } else {
        out << "hilbert function:";
        for (auto v : hf) {
            out << " " << v;
        }
        out << "\ncolength: " << total << "\n";
        if (opts.oracle) {
            print_crosscheck(out, crosscheck_hilbert(I, hf));
        }
    }
    return 0;
}

int run_minpow(const CommonOpts& opts, const std::vector<std::string>& gen_strs,
               std::ostream& out) {
    RingPtr ring = ring_from(opts);
    Ideal I(ring, parse_inputs(gen_strs, ring));
    std::optional<std::uint32_t> n = min_m_power(I);
    if (opts.json()) {
        nlohmann::json top = envelope(ring);
        nlohmann::json result;
        result["min_m_power"] = n ? nlohmann::json(*n) : nlohmann::json("not_found");
        if (!n) {
            result["note"] = "no m-power containment at or below the cap";
        }
        if (opts.oracle) {
            attach_crosscheck(result, crosscheck_minpow(I, n));
        }
        top["result"] = std::move(result);
        emit_json(out, top);
    } else {
        if (n) {
            out << "min m-power: " << *n << "\n";
        } else {
            out << "min m-power: not found at or below the cap ("
                << ring->degree_cap() << ")\n";
        }
        if (opts.oracle) {
            print_crosscheck(out, crosscheck_minpow(I, n));
        }
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"local hypersurface singularity calculator: orders, Milnor and Tjurina "
                 "numbers, determinacy bounds and equivalence certificates over Q or F_p"};
    app.require_subcommand(1);

    CommonOpts analyze_opts;
    std::string analyze_poly;
    std::string analyze_file;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full invariant report for a germ (or a batch file)");
    attach_common(analyze_cmd, analyze_opts);
    analyze_cmd->add_option("f", analyze_poly, "the germ, e.g. \"x^2+y^3\"");
    analyze_cmd->add_option("--file", analyze_file,
                            "batch input: one polynomial per line, # starts a comment");

    CommonOpts compare_opts;
    std::string compare_mode;
    std::string compare_f;
    std::string compare_g;
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "decide contact or right equivalence as far as the certificates reach");
    attach_common(compare_cmd, compare_opts);
    compare_cmd->add_option("--mode", compare_mode, "equivalence notion")
        ->required()
        ->check(CLI::IsMember({"contact", "right"}));
    compare_cmd->add_option("f", compare_f, "first germ")->required();
    compare_cmd->add_option("g", compare_g, "second germ")->required();

    CommonOpts nf_opts;
    std::string nf_poly;
    std::vector<std::string> nf_gens;
    CLI::App* nf_cmd =
        app.add_subcommand("nf", "Mora weak normal form of f against the given generators");
    attach_common(nf_cmd, nf_opts);
    nf_cmd->add_option("f", nf_poly, "polynomial to reduce")->required();
    nf_cmd->add_option("--gens", nf_gens, "one generator per occurrence")
        ->required()
        ->allow_extra_args(false);

    CommonOpts std_opts;
    std::vector<std::string> std_gens;
    CLI::App* std_cmd =
        app.add_subcommand("std", "standard basis of the ideal generated by the arguments");
    attach_common(std_cmd, std_opts);
    std_cmd->add_option("gens", std_gens, "ideal generators")->required();

    CommonOpts dim_opts;
    std::vector<std::string> dim_gens;
    CLI::App* dim_cmd =
        app.add_subcommand("dim", "colength (quotient dimension) of the generated ideal");
    attach_common(dim_cmd, dim_opts);
    dim_cmd->add_option("gens", dim_gens, "ideal generators")->required();

    CommonOpts hilbert_opts;
    std::vector<std::string> hilbert_gens;
    CLI::App* hilbert_cmd = app.add_subcommand(
        "hilbert", "Hilbert function of the quotient by the generated ideal");
    attach_common(hilbert_cmd, hilbert_opts);
    hilbert_cmd->add_option("gens", hilbert_gens, "ideal generators")->required();

    CommonOpts minpow_opts;
    std::vector<std::string> minpow_gens;
    CLI::App* minpow_cmd = app.add_subcommand(
        "minpow", "smallest N with m^N inside the generated ideal, up to the cap");
    attach_common(minpow_cmd, minpow_opts);
    minpow_cmd->add_option("gens", minpow_gens, "ideal generators")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const CommonOpts* active = nullptr;
    try {
        if (analyze_cmd->parsed()) {
            active = &analyze_opts;
            return run_analyze(analyze_opts, analyze_poly, analyze_file, out);
        }
        if (compare_cmd->parsed()) {
            active = &compare_opts;
            return run_compare(compare_opts, compare_mode, compare_f, compare_g, out);
        }
        if (nf_cmd->parsed()) {
            active = &nf_opts;
            return run_nf(nf_opts, nf_poly, nf_gens, out);
        }
        if (std_cmd->parsed()) {
            active = &std_opts;
            return run_std(std_opts, std_gens, out);
        }
        if (dim_cmd->parsed()) {
            active = &dim_opts;
            return run_dim(dim_opts, dim_gens, out);
        }
        if (hilbert_cmd->parsed()) {
            active = &hilbert_opts;
            return run_hilbert(hilbert_opts, hilbert_gens, out);
        }
        if (minpow_cmd->parsed()) {
            active = &minpow_opts;
            return run_minpow(minpow_opts, minpow_gens, out);
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DegreeCapError& e) {
        err << "error: " << e.what() << "\n";
        err << "hint: raise --cap (this run used "
            << (active ? active->cap : RingContext::kDefaultCap)
            << ") to extend the computable degree range\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace germ
