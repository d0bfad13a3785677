#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lamina/io.hpp"

namespace lamina {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!(stream << content).flush())
    throw std::invalid_argument("cannot write '" + path + "'");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string flag_text(const std::optional<bool>& flag) {
  if (!flag.has_value()) return "skipped";
  return *flag ? "true" : "false";
}

void print_report(const ClassificationReport& report, std::ostream& out) {
  out << "unlinked_ok: " << flag_text(report.unlinked_ok) << "\n";
  out << "forward_invariant: " << flag_text(report.forward_invariant) << "\n";
  out << "backward_invariant_relative: "
      << flag_text(report.backward_invariant_relative) << "\n";
  out << "sibling_invariant: " << flag_text(report.sibling_invariant) << "\n";
  out << "thurston_invariant: " << flag_text(report.thurston_invariant) << "\n";
  out << "proper: " << flag_text(report.proper) << "\n";
  out << "clean: " << flag_text(report.clean) << "\n";
  out << "q_lamination: " << flag_text(report.q_lamination) << "\n";
  if (!report.notes.empty()) {
    out << "notes:\n";
    for (const std::string& note : report.notes) out << "  " << note << "\n";
  }
  if (!report.witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& [key, entries] : report.witnesses) {
      out << "  " << key << ":\n";
      for (const std::string& w : entries) out << "    " << w << "\n";
    }
  }
  if (!report.internal_errors.empty()) {
    out << "internal_errors:\n";
    for (const std::string& e : report.internal_errors) out << "  " << e << "\n";
  }
}

int print_check(const std::string& name, bool pass,
                const std::vector<std::string>& witnesses, std::ostream& out) {
  out << name << ": " << (pass ? "pass" : "fail") << "\n";
  for (const std::string& w : witnesses) out << "  " << w << "\n";
  return pass ? 0 : 1;
}

std::vector<std::string> flag_witnesses(const ClassificationReport& report,
                                        const std::string& key) {
  const auto it = report.witnesses.find(key);
  return it == report.witnesses.end() ? std::vector<std::string>{} : it->second;
}

int do_validate(const std::string& path, const std::string& check,
                std::ostream& out) {
  const Lamination lamination = parse_lamination(read_file(path), false);
  if (check == "unlinked") {
    const ClassificationReport report = validate(lamination);
    return print_check("unlinked", *report.unlinked_ok,
                       flag_witnesses(report, "unlinked_ok"), out);
  }
  if (check == "sibling") {
    const ClassificationReport report = check_sibling_invariant(lamination);
    return print_check("sibling", *report.sibling_invariant,
                       flag_witnesses(report, "sibling_invariant"), out);
  }
  if (check == "thurston") {
    const ClassificationReport report = check_thurston(lamination);
    return print_check("thurston", *report.thurston_invariant,
                       flag_witnesses(report, "thurston_invariant"), out);
  }
  if (check == "all") {
    const ClassificationReport report = classify(lamination);
    print_report(report, out);
    const bool pass = report.unlinked_ok.value_or(false) &&
                      report.forward_invariant.value_or(false) &&
                      report.backward_invariant_relative.value_or(false) &&
                      report.sibling_invariant.value_or(false) &&
                      report.thurston_invariant.value_or(false) &&
                      report.proper.value_or(false) &&
                      report.clean.value_or(false) &&
                      report.q_lamination.value_or(false);
    out << "all: " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
  }
  // proper / clean / q need an unlinked lamination to mean anything.
  const ClassificationReport basic = validate(lamination);
  if (!*basic.unlinked_ok)
    return print_check(check, false, flag_witnesses(basic, "unlinked_ok"), out);
  const WitnessedBool verdict = check == "proper" ? is_proper(lamination)
                                : check == "clean" ? is_clean(lamination)
                                                   : is_q_lamination(lamination);
  return print_check(check, verdict.value, verdict.witnesses, out);
}

int do_classify(const std::string& path, std::ostream& out) {
  const Lamination lamination = parse_lamination(read_file(path), false);
  out << "degree: " << lamination.degree() << "\n";
  out << "leaves: " << lamination.size() << "\n";
  print_report(classify(lamination), out);
  return 0;
}

int do_gaps(const std::string& path, std::ostream& out) {
  const Lamination lamination = parse_lamination(read_file(path));
  const std::vector<Gap> faces = gaps(lamination);
  out << "gaps: " << faces.size() << "\n";
  for (const Gap& gap : faces) {
    if (gap.whole_disk()) {
      out << "gap: whole disk\n";
      continue;
    }
    out << "gap:";
    for (const Angle& v : gap.vertices) out << " " << v.str();
    out << "\n";
  }
  return 0;
}

int do_pullback(const std::string& spec_path, const std::string& out_path,
                std::ostream& out) {
  const PullbackSpecFile file = parse_pullback_spec(read_file(spec_path));
  std::string seed_path = file.seed_path;
  if (seed_path.find('/') != 0) {
    const std::size_t cut = spec_path.find_last_of('/');
    if (cut != std::string::npos) seed_path = spec_path.substr(0, cut + 1) + seed_path;
  }
  const Lamination seed = parse_lamination(read_file(seed_path));
  if (seed.degree() != file.degree)
    throw std::invalid_argument("spec degree does not match the seed file");
  const PullbackResult result =
      pullback({seed, CriticalPortrait(file.degree, file.portrait), file.depth,
                file.include_portrait});
  write_file(out_path, ends_with(out_path, ".json")
                           ? serialize_lamination_json(result.lamination)
                           : serialize_lamination(result.lamination));
  out << "leaves: " << result.lamination.size() << "\n";
  out << "frontier: " << result.frontier.frontier.size() << "\n";
  return 0;
}

int do_qlam(const std::string& classes_path, int degree,
            const std::string& out_path, std::ostream& out) {
  const Partition partition = parse_partition(read_file(classes_path));
  const Lamination lamination = q_lamination_from(degree, partition);
  write_file(out_path, ends_with(out_path, ".json")
                           ? serialize_lamination_json(lamination)
                           : serialize_lamination(lamination));
  out << "leaves: " << lamination.size() << "\n";
  return 0;
}

int do_render(const std::string& path, const std::string& out_path,
              const RenderOptions& options, std::ostream& out) {
  const Lamination lamination = parse_lamination(read_file(path));
  write_file(out_path, render_svg(lamination, options));
  out << "wrote " << out_path << "\n";
  return 0;
}

int do_search_hexagon(int degree, long long max_den, std::ostream& out) {
  const std::optional<HexagonExample> found = hexagon_search(degree, max_den);
  if (!found) {
    out << "no hexagon example up to denominator " << max_den << "\n";
    return 1;
  }
  out << "witness: " << found->witness.str() << "\n";
  out << "provenance: " << found->provenance << "\n";
  out << serialize_lamination(found->lamination);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact toolkit for finite invariant laminations", "lamina"};
  app.require_subcommand(1);

  std::string validate_file;
  std::string check = "unlinked";
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "run one check on a lamination file");
  validate_cmd->add_option("file", validate_file, "lamination file")->required();
  validate_cmd->add_option("--check", check, "which check to run")
      ->check(CLI::IsMember(
          {"unlinked", "sibling", "thurston", "proper", "clean", "q", "all"}));

  std::string classify_file;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "print the full flag table");
  classify_cmd->add_option("file", classify_file, "lamination file")->required();

  std::string gaps_file;
  CLI::App* gaps_cmd = app.add_subcommand("gaps", "print the face census");
  gaps_cmd->add_option("file", gaps_file, "lamination file")->required();

  std::string pullback_spec, pullback_out;
  CLI::App* pullback_cmd =
      app.add_subcommand("pullback", "generate a pullback tower");
  pullback_cmd->add_option("--spec", pullback_spec, "pullback spec JSON")
      ->required();
  pullback_cmd->add_option("-o,--out", pullback_out, "output lamination file")
      ->required();

  std::string qlam_classes, qlam_out;
  int qlam_degree = 0;
  CLI::App* qlam_cmd =
      app.add_subcommand("qlam", "build the q-lamination of a partition");
  qlam_cmd->add_option("--classes", qlam_classes, "partition file")->required();
  qlam_cmd->add_option("--degree", qlam_degree, "map degree")->required();
  qlam_cmd->add_option("-o,--out", qlam_out, "output lamination file")->required();

  std::string render_file, render_out;
  RenderOptions render_options;
  CLI::App* render_cmd = app.add_subcommand("render", "draw a lamination as SVG");
  render_cmd->add_option("file", render_file, "lamination file")->required();
  render_cmd->add_option("-o,--out", render_out, "output SVG file")->required();
  render_cmd->add_flag("--hyperbolic", render_options.hyperbolic,
                       "draw leaves as geodesic arcs");
  render_cmd->add_flag("--label", render_options.label, "label endpoints");
  render_cmd->add_option("--size", render_options.size, "image size in pixels");

  int search_degree = 3;
  long long search_max_den = 0;
  CLI::App* search_cmd = app.add_subcommand("search", "search for examples");
  search_cmd->require_subcommand(1);
  CLI::App* hexagon_cmd = search_cmd->add_subcommand(
      "hexagon", "find a Thurston-but-not-sibling hexagon lamination");
  hexagon_cmd->add_option("--degree", search_degree, "map degree");
  hexagon_cmd->add_option("--max-den", search_max_den, "denominator bound")
      ->required();

  std::vector<const char*> argv{"lamina"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return do_validate(validate_file, check, out);
    if (*classify_cmd) return do_classify(classify_file, out);
    if (*gaps_cmd) return do_gaps(gaps_file, out);
    if (*pullback_cmd) return do_pullback(pullback_spec, pullback_out, out);
    if (*qlam_cmd) return do_qlam(qlam_classes, qlam_degree, qlam_out, out);
    if (*render_cmd) return do_render(render_file, render_out, render_options, out);
    if (*hexagon_cmd) return do_search_hexagon(search_degree, search_max_den, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace lamina
