#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "drat/drat.hpp"

namespace drat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInputError = 2;

enum class EncodingMode { Auto, Plain, Binary };
enum class Verbosity { Quiet, Normal, Verbose };

struct RunConfig {
  std::string formula_path;
  std::string proof_path;
  EncodingMode encoding = EncodingMode::Auto;
  std::optional<ProofEncoding> convert_to;  // set for convert only
  std::string output_path;
  Verbosity verbosity = Verbosity::Normal;
};

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline std::string_view encoding_name(ProofEncoding e) {
  return e == ProofEncoding::Binary ? "binary" : "plain";
}

inline ProofEncoding resolve_encoding(EncodingMode mode,
                                      std::string_view bytes) {
  switch (mode) {
    case EncodingMode::Plain: return ProofEncoding::Plain;
    case EncodingMode::Binary: return ProofEncoding::Binary;
    case EncodingMode::Auto: break;
  }
  return detect_encoding(bytes);
}

namespace detail {

inline std::string lits(std::span<const Literal> l) { return to_dimacs(l); }

inline void print_trace(std::ostream& out, const TraceEvent& e) {
  using K = TraceEvent::Kind;
  out << "c [step " << e.step << "] ";
  switch (e.kind) {
    case K::AtCheck:
      out << "AT " << (e.passed ? "holds" : "fails") << " for " << lits(e.lemma);
      break;
    case K::Resolvent:
      out << "RAT resolvent on " << e.pivot->value() << " with "
          << lits(e.antecedent) << " -> " << lits(e.resolvent) << ": "
          << (e.tautology ? "tautology" : e.passed ? "AT" : "not AT");
      break;
    case K::Added:
      out << "added " << lits(e.lemma);
      break;
    case K::Deleted:
      out << "deleted " << lits(e.lemma);
      break;
    case K::DeleteReorder:
      out << "deleted " << lits(e.lemma) << " matching stored order "
          << lits(e.antecedent);
      break;
  }
  out << '\n';
}

inline int input_error(std::ostream& err, const std::string& path,
                       const std::string& what) {
  err << "c error: " << path << ": " << what << '\n';
  return kExitInputError;
}

}  // namespace detail

// Prints "s VERIFIED" (exit 0) or "s NOT VERIFIED" (exit 1). Input
// problems exit 2 with a "c error:" line on `err`.
inline int run_check(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  const bool quiet = config.verbosity == Verbosity::Quiet;
  const bool verbose = config.verbosity == Verbosity::Verbose;

  const auto cnf_bytes = read_file(config.formula_path);
  if (!cnf_bytes) return detail::input_error(err, config.formula_path, "cannot read file");
  const auto proof_bytes = read_file(config.proof_path);
  if (!proof_bytes) return detail::input_error(err, config.proof_path, "cannot read file");

  Formula formula;
  try {
    formula = parse_dimacs(*cnf_bytes);
  } catch (const Error& e) {
    return detail::input_error(err, config.formula_path, e.what());
  }
  const ProofEncoding encoding = resolve_encoding(config.encoding, *proof_bytes);
  Proof proof;
  try {
    proof = parse_proof(*proof_bytes, encoding);
  } catch (const Error& e) {
    return detail::input_error(err, config.proof_path, e.what());
  }
  if (!quiet) {
    out << "c formula: " << formula.size() << " clauses, "
        << formula.declared_vars << " variables\n"
        << "c proof: " << proof.steps.size() << " steps ("
        << encoding_name(encoding) << ")\n";
  }

  TraceSink trace;
  if (verbose) trace = [&out](const TraceEvent& e) { detail::print_trace(out, e); };
  const auto start = std::chrono::steady_clock::now();
  const CheckReport report = check_proof(std::move(formula), proof, trace);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  if (!quiet) {
    for (const auto& w : report.warnings) {
      out << "c WARNING: step " << w.step << ": " << to_string(w.kind) << ": "
          << to_dimacs(w.clause.literals()) << '\n';
    }
    switch (report.verdict) {
      case Verdict::Verified:
        out << "c empty clause verified at step " << *report.empty_clause_step
            << '\n';
        break;
      case Verdict::Rejected: {
        const auto& r = *report.rejection;
        out << "c step " << r.step << ": " << to_string(r.reason) << ": "
            << to_dimacs(r.clause.literals());
        if (r.pivot) out << " (pivot " << r.pivot->value() << ")";
        if (r.failed_resolvent) {
          out << ", resolvent " << to_dimacs(*r.failed_resolvent) << " not AT";
        }
        out << '\n';
        break;
      }
      case Verdict::NoEmptyClause:
        out << "c proof ends without the empty clause\n";
        break;
    }
    out << "c check time: " << elapsed.count() << " s\n";
  }
  if (report.verified()) {
    out << "s VERIFIED\n";
    return kExitOk;
  }
  out << "s NOT VERIFIED\n";
  return kExitInvalid;
}

// Re-encodes a proof. The output holds every parsed step, including those
// after the empty clause.
inline int run_convert(const RunConfig& config, std::ostream& out,
                       std::ostream& err) {
  const auto bytes = read_file(config.proof_path);
  if (!bytes) return detail::input_error(err, config.proof_path, "cannot read file");
  const ProofEncoding from = resolve_encoding(config.encoding, *bytes);
  Proof proof;
  try {
    proof = parse_proof(*bytes, from);
  } catch (const Error& e) {
    return detail::input_error(err, config.proof_path, e.what());
  }
  const ProofEncoding to = config.convert_to.value_or(ProofEncoding::Binary);
  const std::string encoded = serialize_proof(proof, to);

  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file || !file.write(encoded.data(), static_cast<std::streamsize>(encoded.size()))) {
    return detail::input_error(err, config.output_path, "cannot write file");
  }
  if (config.verbosity != Verbosity::Quiet) {
    out << "c converted " << proof.steps.size() << " steps from "
        << encoding_name(from) << " to " << encoding_name(to) << '\n'
        << "c input " << bytes->size() << " bytes, output " << encoded.size()
        << " bytes\n";
  }
  return kExitOk;
}

// Full command line: `check <cnf> <proof> [--plain|--binary] [-q|-v]` and
// `convert <proof> --to {plain|binary} -o <out> [--plain|--binary]`.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"DRAT proof checker and converter"};
  app.require_subcommand(1);

  RunConfig config;
  bool force_plain = false, force_binary = false;
  bool quiet = false, verbose = false;
  std::string target;

  auto add_encoding_flags = [&](CLI::App* cmd) {
    auto* p = cmd->add_flag("--plain", force_plain, "parse the proof as plain text");
    auto* b = cmd->add_flag("--binary", force_binary, "parse the proof as binary");
    p->excludes(b);
  };

  auto* check = app.add_subcommand("check", "check a proof against a formula");
  check->add_option("formula", config.formula_path, "DIMACS CNF file")->required();
  check->add_option("proof", config.proof_path, "DRAT proof file")->required();
  add_encoding_flags(check);
  auto* q = check->add_flag("-q,--quiet", quiet, "print only the verdict");
  auto* v = check->add_flag("-v,--verbose", verbose, "trace every check");
  q->excludes(v);

  auto* convert = app.add_subcommand("convert", "convert a proof between encodings");
  convert->add_option("proof", config.proof_path, "DRAT proof file")->required();
  convert->add_option("--to", target, "target encoding")
      ->required()
      ->check(CLI::IsMember({"plain", "binary"}));
  convert->add_option("-o,--output", config.output_path, "output file")->required();
  add_encoding_flags(convert);
  convert->add_flag("-q,--quiet", quiet, "no summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "c error: " << e.what() << "\nc run with --help for usage\n";
    return kExitInputError;
  }

  config.encoding = force_plain    ? EncodingMode::Plain
                    : force_binary ? EncodingMode::Binary
                                   : EncodingMode::Auto;
  config.verbosity = quiet     ? Verbosity::Quiet
                     : verbose ? Verbosity::Verbose
                               : Verbosity::Normal;
  if (*convert) {
    config.convert_to =
        target == "plain" ? ProofEncoding::Plain : ProofEncoding::Binary;
    return run_convert(config, out, err);
  }
  return run_check(config, out, err);
}

}  // namespace drat::cli
