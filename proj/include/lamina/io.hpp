#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lamina/equivalence.hpp"
#include "lamina/generators.hpp"
#include "lamina/lamination.hpp"

namespace lamina {

// Input rejection with a 1-based line number (0 when no line applies).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Text form: "# comment" lines, one "degree d" header, "leaf p/q r/s" lines.
// JSON mirror (detected by a leading '{'): {"degree": d, "leaves": [["p/q",
// "r/s"], ...]}. Crossing leaves are rejected unless check_crossings is off.
Lamination parse_lamination(const std::string& text, bool check_crossings = true);
std::string serialize_lamination(const Lamination& lamination);
std::string serialize_lamination_json(const Lamination& lamination);

// One class per line, angle literals separated by spaces.
Partition parse_partition(const std::string& text);

// {"degree": d, "seed": path, "portrait": [["p/q","r/s"], ...], "depth": n,
// "include_portrait": bool}; the seed lamination stays a file reference.
struct PullbackSpecFile {
  int degree = 0;
  std::string seed_path;
  std::vector<Chord> portrait;
  int depth = 0;
  bool include_portrait = false;
};
PullbackSpecFile parse_pullback_spec(const std::string& json_text);

struct RenderOptions {
  bool hyperbolic = false;
  bool label = false;
  int size = 512;  // pixels, at least 64
};

// Unit circle in viewport [-1.1, 1.1]^2, leaves at (cos 2 pi t, sin 2 pi t),
// critical leaves dashed; output is byte-stable.
std::string render_svg(const Lamination& lamination, const RenderOptions& options);

int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lamina
