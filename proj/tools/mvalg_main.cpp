#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvalg/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mvalg::InvalidParameterError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonFlags {
  std::string file;
  std::string other;
  std::string output = "text";
  std::size_t max_carrier = 0;
  bool verify_witness = false;
  bool strict_divisibility = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_other) {
  cmd->add_option("file", f.file, "JSON description file")->required();
  if (with_other)
    cmd->add_option("--other", f.other, "second JSON description file");
  cmd->add_option("--output", f.output, "report format (text or json)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-carrier", f.max_carrier, "override the carrier size limit");
  cmd->add_flag("--verify-witness", f.verify_witness,
                "re-verify every witness from the serialized report");
  cmd->add_flag("--strict-divisibility", f.strict_divisibility,
                "use the literal (n0-1) | n reading of the divisibility hypothesis");
}

int dispatch(const std::string& command, const std::string& sub, const CommonFlags& f) {
  mvalg::cli::Options opts;
  opts.command = command;
  opts.subcommand = sub;
  opts.json_output = f.output == "json";
  opts.verify_witness = f.verify_witness;
  opts.strict_divisibility = f.strict_divisibility;
  if (f.max_carrier > 0) opts.limits.max_carrier = f.max_carrier;

  std::string input;
  try {
    input = slurp(f.file);
    if (!f.other.empty()) opts.other_text = slurp(f.other);
  } catch (const mvalg::Error& e) {
    std::cerr << e.what() << "\n";
    return mvalg::cli::kExitInputError;
  }

  mvalg::cli::Outcome out = mvalg::cli::run_on_text(opts, input);
  std::cout << out.rendered;
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite MV-algebras and their completions"};
  app.set_version_flag("--version", std::string(mvalg::cli::kToolName) + " " +
                                        mvalg::cli::kToolVersion);
  app.require_subcommand(1);

  CommonFlags validate_f, spectrum_f, ideals_f, complete_f, check_f, signature_f;
  std::string method, check_what, sig_what;

  CLI::App* validate = app.add_subcommand("validate", "axiom validation report");
  add_common(validate, validate_f, false);

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "maximal ideals, ranks and the radical");
  add_common(spectrum, spectrum_f, false);

  CLI::App* ideals = app.add_subcommand("ideals", "full ideal enumeration");
  add_common(ideals, ideals_f, false);

  CLI::App* complete = app.add_subcommand("complete", "profinite / MacNeille completions");
  complete->add_option("--method", method, "inverse-limit, maxf-product, macneille or both")
      ->required()
      ->check(CLI::IsMember({"inverse-limit", "maxf-product", "macneille", "both"}));
  add_common(complete, complete_f, false);

  CLI::App* check = app.add_subcommand("check", "decide one of the structure theorems");
  check
      ->add_option("what", check_what,
                   "main-theorem, self-iso, mac-criterion, product-preservation, regularity or "
                   "center-preservation")
      ->required()
      ->check(CLI::IsMember({"main-theorem", "self-iso", "mac-criterion",
                             "product-preservation", "regularity", "center-preservation"}));
  add_common(check, check_f, true);

  CLI::App* signature = app.add_subcommand("signature", "symbolic signature operations");
  signature
      ->add_option("what", sig_what,
                   "profinite, macneille, mac-criterion, divisibility or equal")
      ->required()
      ->check(CLI::IsMember({"profinite", "macneille", "mac-criterion", "divisibility", "equal"}));
  add_common(signature, signature_f, true);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return dispatch("validate", "", validate_f);
  if (spectrum->parsed()) return dispatch("spectrum", "", spectrum_f);
  if (ideals->parsed()) return dispatch("ideals", "", ideals_f);
  if (complete->parsed()) return dispatch("complete", method, complete_f);
  if (check->parsed()) return dispatch("check", check_what, check_f);
  if (signature->parsed()) return dispatch("signature", sig_what, signature_f);
  return mvalg::cli::kExitInputError;
}
