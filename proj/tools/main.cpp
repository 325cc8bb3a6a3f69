// Command-line front end.
//
// Subcommands:
//   scan      enumerate valid moduli up to a bound
//   gen       construct one sequence and print it with metadata
//   spectrum  autocorrelation spectrum of a constructed or given sequence
//   lc        linear complexity of a constructed or given sequence
//   verify    full check suite for one modulus or the whole family
//
// Exit status: 0 success, 1 verify found a hard-check failure, 2 usage or
// parameter error, 3 startup self-test failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ilseq/construction.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/cyclotomy.hpp"
#include "ilseq/errors.hpp"
#include "ilseq/gf2poly.hpp"
#include "ilseq/report.hpp"

namespace {

using ilseq::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitHardFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelfTest = 3;

struct Options {
    std::uint64_t n = 0;
    std::string case_text = "0,1,2";
    std::string variant_text = "sprime";
    std::uint64_t max_n = 0;
    std::optional<std::uint64_t> beta;
    std::string format = "json";
    std::string out_path;
    std::string seq_text;
    bool all = false;
};

void emit(const Options& opt, const std::string& body) {
    if (opt.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        ilseq::raise(ilseq::Errc::BadArgument, "cannot open output file " + opt.out_path);
    }
    file << body;
}

ilseq::CaseTuple parse_case(const std::string& text) {
    int parts[3];
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t used = 0;
        try {
            parts[k] = std::stoi(text.substr(pos), &used);
        } catch (const std::exception&) {
            ilseq::raise(ilseq::Errc::BadArgument, "case must be i,j,l with digits 0..3");
        }
        pos += used;
        if (k < 2) {
            if (pos >= text.size() || text[pos] != ',') {
                ilseq::raise(ilseq::Errc::BadArgument, "case must be i,j,l");
            }
            ++pos;
        }
    }
    if (pos != text.size()) {
        ilseq::raise(ilseq::Errc::BadArgument, "trailing characters in case: " + text);
    }
    return {parts[0], parts[1], parts[2]};
}

ilseq::Variant parse_variant(const std::string& text) {
    if (text == "s") return ilseq::Variant::S;
    if (text == "sprime") return ilseq::Variant::SPrime;
    ilseq::raise(ilseq::Errc::BadArgument, "variant must be s or sprime, got " + text);
}

// The sequence under analysis: --seq wins; otherwise construct from --n.
ilseq::PeriodicSequence select_sequence(const Options& opt) {
    if (!opt.seq_text.empty()) {
        return ilseq::PeriodicSequence::parse(opt.seq_text);
    }
    if (opt.n == 0) {
        ilseq::raise(ilseq::Errc::BadArgument, "provide --seq BITS or --n N");
    }
    const ilseq::CyclotomicSystem sys = ilseq::make_system(opt.n, opt.beta);
    return ilseq::construct(sys, parse_case(opt.case_text), parse_variant(opt.variant_text))
        .sequence;
}

int cmd_scan(const Options& opt) {
    const std::vector<ilseq::ParameterSet> found = ilseq::scan_parameters(opt.max_n);
    if (opt.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& params : found) {
            ordered_json row = ordered_json::object();
            row["n"] = params.n;
            row["f"] = params.f;
            row["y"] = params.y_abs;
            out.push_back(std::move(row));
        }
        emit(opt, out.dump(2) + "\n");
    } else {
        std::string body;
        for (const auto& params : found) {
            body += "n=" + std::to_string(params.n) + " f=" + std::to_string(params.f) +
                    " y=" + std::to_string(params.y_abs) + "\n";
        }
        emit(opt, body);
    }
    return kExitOk;
}

int cmd_gen(const Options& opt) {
    const ilseq::CyclotomicSystem sys = ilseq::make_system(opt.n, opt.beta);
    const ilseq::CaseTuple c = parse_case(opt.case_text);
    const ilseq::Variant variant = parse_variant(opt.variant_text);
    const ilseq::ConstructionInstance instance = ilseq::construct(sys, c, variant);
    const std::string bits = instance.sequence.to_string();

    if (opt.format == "json") {
        ordered_json out = ordered_json::object();
        out["n"] = sys.modulus();
        out["beta"] = sys.beta();
        out["case"] = {c.i, c.j, c.l};
        out["variant"] = ilseq::variant_name(variant);
        out["sequence"] = bits;
        out["weight"] = instance.sequence.weight();
        out["balanced"] = ilseq::is_balanced(instance.sequence);
        emit(opt, out.dump(2) + "\n");
    } else {
        std::string body = bits + "\n";
        body += "n=" + std::to_string(sys.modulus()) + " beta=" + std::to_string(sys.beta()) +
                " case=(" + opt.case_text + ") variant=" + ilseq::variant_name(variant) +
                " weight=" + std::to_string(instance.sequence.weight()) +
                (ilseq::is_balanced(instance.sequence) ? " balanced" : " unbalanced") + "\n";
        emit(opt, body);
    }
    return kExitOk;
}

int cmd_spectrum(const Options& opt) {
    const ilseq::PeriodicSequence seq = select_sequence(opt);
    const ilseq::CorrelationSpectrum spectrum = ilseq::autocorrelation_spectrum(seq);
    if (opt.format == "csv") {
        emit(opt, ilseq::to_csv(spectrum));
    } else if (opt.format == "json") {
        ordered_json out = ordered_json::object();
        out["period"] = spectrum.period;
        out["values"] = spectrum.values;
        out["histogram"] = ordered_json::parse(ilseq::histogram_json(spectrum.histogram));
        emit(opt, out.dump(2) + "\n");
    } else {
        std::string body = "period " + std::to_string(spectrum.period) + "\n";
        for (std::uint64_t tau = 0; tau < spectrum.values.size(); ++tau) {
            body += std::to_string(tau) + " " + std::to_string(spectrum.values[tau]) + "\n";
        }
        body += "histogram " + ilseq::histogram_json(spectrum.histogram) + "\n";
        emit(opt, body);
    }
    return kExitOk;
}

int cmd_lc(const Options& opt) {
    const ilseq::PeriodicSequence seq = select_sequence(opt);
    const ilseq::LinearComplexityResult result = ilseq::linear_complexity(seq);
    const std::uint64_t bm = ilseq::berlekamp_massey(seq);
    if (opt.format == "json") {
        ordered_json out = ordered_json::object();
        out["period"] = seq.period();
        out["lc"] = result.lc;
        out["bm_lc"] = bm;
        out["minimal_polynomial"] = result.minimal_polynomial.to_string();
        out["minimal_polynomial_hex"] = result.minimal_polynomial.to_hex();
        out["gcd_hex"] = result.gcd_with_period_poly.to_hex();
        emit(opt, out.dump(2) + "\n");
    } else {
        std::string body;
        body += "period " + std::to_string(seq.period()) + "\n";
        body += "lc " + std::to_string(result.lc) + "\n";
        body += "bm_lc " + std::to_string(bm) + "\n";
        body += "minimal_polynomial " + result.minimal_polynomial.to_string() + "\n";
        emit(opt, body);
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    std::vector<ilseq::SystemVerification> runs;
    if (opt.all) {
        for (const ilseq::ParameterSet& params : ilseq::scan_parameters(opt.max_n)) {
            runs.push_back(ilseq::verify_system(params.n, std::nullopt));
        }
    } else {
        runs.push_back(ilseq::verify_system(opt.n, opt.beta));
    }

    bool all_pass = true;
    for (const auto& run : runs) all_pass = all_pass && run.hard_pass;

    if (opt.format == "json") {
        if (opt.all) {
            ordered_json out = ordered_json::object();
            out["max_n"] = opt.max_n;
            ordered_json systems = ordered_json::array();
            for (const auto& run : runs) systems.push_back(ilseq::to_json(run));
            out["systems"] = std::move(systems);
            out["hard_pass"] = all_pass;
            emit(opt, out.dump(2) + "\n");
        } else {
            emit(opt, ilseq::to_json(runs.front()).dump(2) + "\n");
        }
    } else {
        std::string body;
        for (const auto& run : runs) body += ilseq::to_text(run);
        if (opt.all) {
            body += std::string("all hard checks ") + (all_pass ? "PASS" : "FAIL") + "\n";
        }
        emit(opt, body);
    }
    return all_pass ? kExitOk : kExitHardFail;
}

} // namespace

int main(int argc, char** argv) {
    // The shift/polynomial conventions must agree before any result is
    // trusted; a mismatch would silently flip every closed-form oracle.
    if (ilseq::shift_transform_convention() != ilseq::ShiftTransform::PeriodMinusShift) {
        std::cerr << "self-test failed: shift transform convention mismatch\n";
        return kExitSelfTest;
    }

    CLI::App app{"Interleaved binary sequences from order-4 cyclotomy: "
                 "generation, correlation spectra, linear complexity, verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&opt](CLI::App* cmd, const std::vector<std::string>& choices) {
        cmd->add_option("--format", opt.format, "output format")
            ->default_val("json")
            ->check(CLI::IsMember(choices));
    };
    auto add_out = [&opt](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    };

    CLI::App* scan = app.add_subcommand("scan", "enumerate valid moduli up to --max-n");
    scan->add_option("--max-n", opt.max_n, "inclusive upper bound")->required();
    add_format(scan, {"json", "text"});
    add_out(scan);

    CLI::App* gen = app.add_subcommand("gen", "construct one sequence");
    auto* gen_n = gen->add_option("--n", opt.n, "modulus")->required();
    gen->add_option("--case", opt.case_text, "case tuple i,j,l")->default_val("0,1,2");
    gen->add_option("--variant", opt.variant_text, "s | sprime")->default_val("sprime");
    gen->add_option("--beta", opt.beta, "primitive root override")->needs(gen_n);
    add_format(gen, {"json", "text"});
    add_out(gen);

    CLI::App* spectrum = app.add_subcommand("spectrum", "autocorrelation spectrum");
    auto* spec_n = spectrum->add_option("--n", opt.n, "modulus (construct then analyze)");
    spectrum->add_option("--seq", opt.seq_text, "analyze this 0/1 string instead");
    spectrum->add_option("--case", opt.case_text, "case tuple i,j,l")->default_val("0,1,2");
    spectrum->add_option("--variant", opt.variant_text, "s | sprime")->default_val("sprime");
    spectrum->add_option("--beta", opt.beta, "primitive root override")->needs(spec_n);
    add_format(spectrum, {"json", "csv", "text"});
    add_out(spectrum);

    CLI::App* lc = app.add_subcommand("lc", "linear complexity and minimal polynomial");
    auto* lc_n = lc->add_option("--n", opt.n, "modulus (construct then analyze)");
    lc->add_option("--seq", opt.seq_text, "analyze this 0/1 string instead");
    lc->add_option("--case", opt.case_text, "case tuple i,j,l")->default_val("0,1,2");
    lc->add_option("--variant", opt.variant_text, "s | sprime")->default_val("sprime");
    lc->add_option("--beta", opt.beta, "primitive root override")->needs(lc_n);
    add_format(lc, {"json", "text"});
    add_out(lc);

    CLI::App* verify = app.add_subcommand("verify", "run the full check suite");
    auto* verify_n = verify->add_option("--n", opt.n, "modulus");
    auto* verify_all = verify->add_flag("--all", opt.all, "verify every modulus up to --max-n");
    auto* verify_max = verify->add_option("--max-n", opt.max_n, "bound for --all");
    verify->add_option("--beta", opt.beta, "primitive root override")->needs(verify_n);
    verify_all->needs(verify_max);
    verify_n->excludes(verify_all);
    add_format(verify, {"json", "text"});
    add_out(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (scan->parsed()) return cmd_scan(opt);
        if (gen->parsed()) return cmd_gen(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (lc->parsed()) return cmd_lc(opt);
        if (verify->parsed()) {
            if (!opt.all && opt.n == 0) {
                ilseq::raise(ilseq::Errc::BadArgument, "verify needs --n or --all --max-n");
            }
            return cmd_verify(opt);
        }
    } catch (const ilseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
