#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "loopword/errors.hpp"

using lw::cli::CommandConfig;
using lw::cli::Format;

namespace {

void common_options(CLI::App* sub, CommandConfig& cfg, std::string& format) {
  sub->add_option("--type", cfg.type_letter, "Cartan type letter (A-G)")->required();
  sub->add_option("--rank", cfg.rank, "rank")->required();
  sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--latex", cfg.latex, "render letters in LaTeX");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"standard Lyndon loop words and shuffle algebra checks"};
  app.require_subcommand(1);
  CommandConfig cfg;
  std::string format = "text";

  auto* tables = app.add_subcommand("tables", "l(alpha, d) for 1 <= d <= |alpha|");
  common_options(tables, cfg, format);

  auto* word = app.add_subcommand("word", "a single standard Lyndon loop word");
  common_options(word, cfg, format);
  word->add_option("--root", cfg.root, "root coefficients, comma separated")->required();
  word->add_option("--d", cfg.d, "exponent degree")->required();

  auto* dict = app.add_subcommand("dictionary", "fundamental-domain words starting with a^(1)");
  common_options(dict, cfg, format);
  dict->add_option("--letter", cfg.letter, "color a")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common_options(verify, cfg, format);
  verify->add_option("suite", cfg.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"convexity", "exponent-bounds", "monotone", "periodicity", "weyl-order", "serre",
                             "leading-word", "pbw", "composition", "fo-constraints"}));
  verify->add_option("--window", cfg.window, "suite window");
  verify->add_option("--count", cfg.count, "suite count");
  verify->add_option("--seed", cfg.seed, "seed for sampled cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lw::cli::kUsage;
  }
  cfg.format = format == "json" ? Format::json : Format::text;

  try {
    if (tables->parsed()) return lw::cli::cmd_tables(cfg, std::cout);
    if (word->parsed()) return lw::cli::cmd_word(cfg, std::cout);
    if (dict->parsed()) return lw::cli::cmd_dictionary(cfg, std::cout);
    return lw::cli::cmd_verify(cfg, std::cout);
  } catch (const lw::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lw::cli::kUsage;
  } catch (const lw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lw::cli::kUsage;
  } catch (const lw::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lw::cli::kUsage;
  } catch (const lw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lw::cli::kUsage;
  } catch (const lw::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lw::cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return lw::cli::kFailed;
  }
}
