#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lw::cli {

enum class Format { text, json };

struct CommandConfig {
  char type_letter = 'A';
  int rank = 2;
  std::string command;
  std::string suite;
  std::string root;
  int d = 1;
  int letter = 1;
  int window = -1;  // suite-specific default when negative
  int count = -1;
  Format format = Format::text;
  std::uint64_t seed = 1;
  bool latex = false;
};

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int cmd_tables(const CommandConfig& cfg, std::ostream& out);
int cmd_word(const CommandConfig& cfg, std::ostream& out);
int cmd_dictionary(const CommandConfig& cfg, std::ostream& out);
int cmd_verify(const CommandConfig& cfg, std::ostream& out);

}  // namespace lw::cli
