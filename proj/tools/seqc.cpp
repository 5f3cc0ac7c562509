#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "seqc/bit_sequence.hpp"
#include "seqc/expansion.hpp"
#include "seqc/linear.hpp"
#include "seqc/moc.hpp"
#include "seqc/report.hpp"
#include "seqc/seqgen.hpp"
#include "seqc/verify.hpp"

namespace {

// Flag misuse detected after CLI11 parsing; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputFlags {
    std::string seq;
    std::uint32_t k = 2;
    bool along_squares = false;
    std::string literal;
    std::string file;
    std::string format = "ascii01";
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    auto* group = cmd->add_option_group("input", "Sequence source (exactly one)");
    group->add_option("--seq", in.seq, "Built-in family: thue-morse, pattern, rudin-shapiro")
        ->check(CLI::IsMember({"thue-morse", "pattern", "rudin-shapiro"}));
    group->add_option("--literal", in.literal, "Bits given inline");
    group->add_option("--file", in.file, "Read bits from a file");
    group->require_option(1);
    cmd->add_option("-k", in.k, "Pattern parameter (with --seq pattern)")
        ->check(CLI::Range(1u, 62u));
    cmd->add_option("--format", in.format, "Encoding of --literal/--file bits")
        ->check(CLI::IsMember({"ascii01", "hex"}))
        ->capture_default_str();
    cmd->add_flag("--along-squares", in.along_squares,
                  "Use the subsequence at square indices 0, 1, 4, 9, ...");
}

seqc::FileFormat parse_format(const std::string& f) {
    return f == "hex" ? seqc::FileFormat::Hex : seqc::FileFormat::Ascii01;
}

seqc::SequenceSpec build_spec(const InputFlags& in) {
    seqc::SequenceSpec s;
    if (!in.literal.empty())
        s = seqc::SequenceSpec::literal(seqc::parse_bits(in.literal, parse_format(in.format)));
    else if (!in.file.empty())
        s = seqc::SequenceSpec::file(in.file, parse_format(in.format));
    else if (in.seq == "thue-morse")
        s = seqc::SequenceSpec::thue_morse();
    else if (in.seq == "rudin-shapiro")
        s = seqc::SequenceSpec::pattern(2);
    else if (in.seq == "pattern")
        s = seqc::SequenceSpec::pattern(in.k);
    else
        throw UsageError("no input sequence given");
    if (in.along_squares) s = seqc::SequenceSpec::along_squares(std::move(s));
    return s;
}

// Resolve "-n omitted": literal and file inputs fall back to their full
// length; generated families have no natural length and require -n.
std::size_t resolve_length(const seqc::SequenceSpec& spec, std::size_t n) {
    if (n > 0) return n;
    if (spec.kind == seqc::SequenceSpec::Kind::Literal) return spec.bits.size();
    if (spec.kind == seqc::SequenceSpec::Kind::File)
        return seqc::ingest(spec.path, spec.format).size();
    throw UsageError("-n is required for generated sequences");
}

// Stream to --out or stdout.
class OutStream {
public:
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        get().flush();
        if (!get()) throw std::runtime_error("write failure on output stream");
    }

private:
    std::ofstream file_;
};

int cmd_generate(const InputFlags& in, std::size_t n, const std::string& out_format,
                 const std::string& out_path) {
    seqc::SequenceSpec spec = build_spec(in);
    seqc::BitSequence bits = seqc::generate(spec, resolve_length(spec, n));
    OutStream out(out_path);
    out.get() << (out_format == "hex" ? bits.to_hex() : bits.to_ascii01()) << "\n";
    out.finish();
    return 0;
}

nlohmann::json witness_json(const seqc::MocResult& r) {
    if (!r.witness) return nullptr;
    return nlohmann::json{{"pos_a", r.witness->pos_a},
                          {"pos_b", r.witness->pos_b},
                          {"length", r.witness->length}};
}

int cmd_measure(const InputFlags& in, const std::string& measure, std::size_t n_arg,
                std::uint64_t dmax_arg, bool witness, bool as_json) {
    seqc::SequenceSpec spec = build_spec(in);
    const std::size_t n = resolve_length(spec, n_arg);
    seqc::BitSequence bits = seqc::generate(spec, n);

    seqc::RunReport report;
    report.command = "measure";
    report.params = {{"input", spec.describe()},
                     {"measure", measure},
                     {"n", std::to_string(n)}};
    nlohmann::json rec{{"n", n}, {"measure", measure}};

    std::string plain;
    if (measure == "moc") {
        seqc::MocResult r = seqc::moc_automaton(bits, n);
        plain = std::to_string(r.value);
        rec["value"] = r.value;
        if (witness) {
            rec["witness"] = witness_json(r);
            if (r.witness)
                plain += "\nwitness: length=" + std::to_string(r.witness->length) +
                         " pos_a=" + std::to_string(r.witness->pos_a) +
                         " pos_b=" + std::to_string(r.witness->pos_b);
            else
                plain += "\nwitness: none (constant prefix)";
        }
    } else if (measure == "lc") {
        seqc::LfsrFit fit = seqc::berlekamp_massey(bits, n);
        plain = std::to_string(fit.length);
        rec["value"] = fit.length;
        if (witness) {
            rec["taps"] = fit.taps.to_ascii01();
            plain += "\ntaps: " + (fit.length ? fit.taps.to_ascii01() : std::string("(empty)"));
        }
    } else {  // ec
        const std::uint64_t dmax = dmax_arg > 0 ? dmax_arg : seqc::default_dmax(spec);
        report.params["dmax"] = std::to_string(dmax);
        rec["dmax"] = dmax;
        seqc::ExpansionResult r = seqc::expansion_complexity(bits, n, dmax);
        if (r.degree) {
            plain = std::to_string(*r.degree);
            rec["value"] = *r.degree;
        } else {
            plain = "exceeds dmax " + std::to_string(dmax);
            rec["value"] = nullptr;
        }
        if (witness) {
            rec["annihilator"] = r.annihilator.is_zero() ? nlohmann::json(nullptr)
                                                         : nlohmann::json(r.annihilator.to_string());
            plain += "\nannihilator: " +
                     (r.annihilator.is_zero() ? std::string("none") : r.annihilator.to_string());
        }
    }

    if (as_json) {
        report.results.push_back(rec);
        std::cout << nlohmann::json(report).dump(2) << "\n";
    } else {
        std::cout << plain << "\n";
    }
    return 0;
}

int cmd_profile(const InputFlags& in, const std::string& measure, std::size_t nmax_arg,
                std::uint64_t dmax_arg, const std::string& out_path) {
    seqc::SequenceSpec spec = build_spec(in);
    const std::size_t nmax = resolve_length(spec, nmax_arg);
    seqc::BitSequence bits = seqc::generate(spec, nmax);

    std::vector<std::uint64_t> values;
    if (measure == "moc") {
        values = seqc::moc_profile(bits, nmax).values();
    } else if (measure == "lc") {
        values = seqc::lc_profile(bits, nmax).values();
    } else {  // ec: no incremental pass; evaluate each prefix
        const std::uint64_t dmax = dmax_arg > 0 ? dmax_arg : seqc::default_dmax(spec);
        for (std::size_t n = 1; n <= nmax; ++n) {
            seqc::ExpansionResult r = seqc::expansion_complexity(bits, n, dmax);
            if (!r.degree)
                throw std::runtime_error("expansion complexity exceeds dmax " +
                                         std::to_string(dmax) + " at N=" + std::to_string(n) +
                                         "; raise --dmax");
            values.push_back(*r.degree);
        }
    }

    OutStream out(out_path);
    out.get() << "N,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out.get() << (i + 1) << "," << values[i] << "\n";
    out.finish();
    return 0;
}

int cmd_verify(std::vector<std::string> claims, std::size_t nmax, std::uint32_t kmax,
               unsigned workers, bool as_json) {
    if (claims.empty()) claims = seqc::all_claims();
    for (const std::string& c : claims) {
        bool known = false;
        for (const std::string& id : seqc::all_claims()) known = known || id == c;
        if (!known) throw UsageError("unknown claim: " + c);
    }

    seqc::VerifyOptions opts;
    opts.nmax = nmax;
    opts.kmax = kmax;
    opts.workers = workers;
    std::vector<seqc::ClaimVerdict> verdicts = seqc::run_claims(claims, opts);

    seqc::RunReport report;
    report.command = "verify";
    report.params = {{"nmax", std::to_string(nmax)},
                     {"kmax", std::to_string(kmax)},
                     {"workers", std::to_string(workers)}};
    report.verdicts = verdicts;

    if (as_json) {
        std::cout << nlohmann::json(report).dump(2) << "\n";
    } else {
        for (const seqc::ClaimVerdict& v : verdicts)
            std::cout << (v.pass ? "PASS" : "FAIL") << " " << v.claim << ": " << v.detail
                      << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary sequence generator and complexity measures (maximum order, "
                 "linear, expansion)"};
    app.require_subcommand(1);

    InputFlags gen_in, mea_in, pro_in;
    std::size_t gen_n = 0, mea_n = 0, pro_nmax = 0;
    std::string gen_out_format = "ascii01", gen_out, pro_out;
    std::string mea_measure, pro_measure;
    std::uint64_t mea_dmax = 0, pro_dmax = 0;
    bool mea_witness = false, mea_json = false, ver_json = false;
    std::vector<std::string> ver_claims;
    std::size_t ver_nmax = 5000;
    std::uint32_t ver_kmax = 4;
    unsigned ver_workers = 0;

    CLI::App* gen = app.add_subcommand("generate", "Emit the first n terms of a sequence");
    add_input_flags(gen, gen_in);
    gen->add_option("-n", gen_n, "Number of terms")->check(CLI::PositiveNumber);
    gen->add_option("--out-format", gen_out_format, "ascii01 or hex")
        ->check(CLI::IsMember({"ascii01", "hex"}))
        ->capture_default_str();
    gen->add_option("--out", gen_out, "Write to file instead of stdout");

    CLI::App* mea = app.add_subcommand("measure", "Compute one complexity measure at N");
    add_input_flags(mea, mea_in);
    mea->add_option("--measure", mea_measure, "moc, lc, or ec")
        ->required()
        ->check(CLI::IsMember({"moc", "lc", "ec"}));
    mea->add_option("-n", mea_n, "Prefix length (defaults to the whole literal/file input)")
        ->check(CLI::PositiveNumber);
    mea->add_option("--dmax", mea_dmax, "Total-degree cap for ec")->check(CLI::PositiveNumber);
    mea->add_flag("--witness", mea_witness,
                  "Also print the conflicting windows (moc), taps (lc), or annihilator (ec)");
    mea->add_flag("--json", mea_json, "Emit a JSON run report");

    CLI::App* pro = app.add_subcommand("profile", "CSV profile of a measure for N = 1..nmax");
    add_input_flags(pro, pro_in);
    pro->add_option("--measure", pro_measure, "moc, lc, or ec")
        ->required()
        ->check(CLI::IsMember({"moc", "lc", "ec"}));
    pro->add_option("--nmax", pro_nmax, "Largest prefix length")->check(CLI::PositiveNumber);
    pro->add_option("--dmax", pro_dmax, "Total-degree cap for ec")->check(CLI::PositiveNumber);
    pro->add_option("--out", pro_out, "Write CSV to file instead of stdout");

    CLI::App* ver = app.add_subcommand("verify", "Check the library against its known claims");
    ver->add_option("--claims", ver_claims,
                    "Comma-separated claim ids (default: all); known ids: theorem1, theorem2, "
                    "remark1, remark2, remark3, witness-tm, witness-pattern, shift-tm, "
                    "shift-pattern, inequalities, squares-probe")
        ->delimiter(',');
    ver->add_option("--nmax", ver_nmax, "Prefix-length bound / witness truncation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ver->add_option("--kmax", ver_kmax, "Largest pattern k for range claims")
        ->check(CLI::Range(2u, 16u))
        ->capture_default_str();
    ver->add_option("--workers", ver_workers,
                    "Worker threads (default: $SEQC_WORKERS, else hardware concurrency)");
    ver->add_flag("--json", ver_json, "Emit a JSON run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // 2 = usage error; 0 covers --help and friends
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_in, gen_n, gen_out_format, gen_out);
        if (mea->parsed())
            return cmd_measure(mea_in, mea_measure, mea_n, mea_dmax, mea_witness, mea_json);
        if (pro->parsed()) return cmd_profile(pro_in, pro_measure, pro_nmax, pro_dmax, pro_out);
        if (ver->parsed())
            return cmd_verify(ver_claims, ver_nmax, ver_kmax, ver_workers, ver_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;  // no subcommand (require_subcommand should have caught this)
}
