#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opwork/io/document.hpp"

namespace opwork::cli {

enum Exit { ok = 0, check_failed = 1, usage = 2 };

/// Bad flags or inputs; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Flags shared by every subcommand.
struct Common {
  std::string format = "text";
  std::string out_path;
  int cap = 0;
  std::uint64_t seed = 20240601;
};

/// A subcommand body: returns the exit code. Registered commands read their own flags.
using Body = std::function<int(const Common&, Streams&)>;
struct Registry {
  CLI::App& app;
  Common& common;
  std::function<int(Streams&)>* selected;
  CLI::App* add(const std::string& name, const std::string& help, Body body);
};

void register_operad_commands(Registry& r);
void register_cofree_commands(Registry& r);

/// Writes a produced document to --out, or to stdout with --format doc. False when nothing was emitted.
bool emit_document(const Common& c, Streams& s, const io::Document& doc);
/// Report document for --format doc (to --out if given), text otherwise.
void emit_report(const Common& c, Streams& s, const io::Json& payload, const std::function<void(std::ostream&)>& text);

io::OperadRef read_operad(const std::string& path);
/// "x=2,m=1", or a single count when the operad has one color.
std::vector<Index> parse_dims(const OperadData& op, const std::string& text);
/// Inline JSON text, or @path to read it from a file.
io::Json json_arg(const std::string& text, const std::string& flag);
int effective_cap(const Common& c, int fallback);

/// Runs the command line; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opwork::cli
