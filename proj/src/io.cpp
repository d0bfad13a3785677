#include "lamina/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace lamina {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  for (std::string token; stream >> token;) tokens.push_back(token);
  return tokens;
}

Angle parse_angle(const std::string& token, int line) {
  try {
    const std::size_t slash = token.find('/');
    if (slash == std::string::npos) return Angle(Int(token), 1);
    return Angle(Int(token.substr(0, slash)), Int(token.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError(line, "bad angle literal '" + token + "'");
  }
}

int parse_degree(const std::string& token, int line) {
  try {
    const int degree = std::stoi(token);
    check_degree(degree);
    return degree;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(line, std::string("bad degree: ") + e.what());
  }
}

void reject_crossings(const Lamination& lamination) {
  const ClassificationReport report = validate(lamination);
  if (*report.unlinked_ok) return;
  throw ParseError(0, "crossing leaves: " +
                          report.witnesses.at("unlinked_ok").front());
}

Lamination parse_lamination_json(const std::string& text, bool check_crossings) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("leaves"))
    throw ParseError(0, "JSON lamination needs fields 'degree' and 'leaves'");
  if (!doc["degree"].is_number_integer())
    throw ParseError(0, "'degree' must be an integer");
  const int degree = parse_degree(std::to_string(doc["degree"].get<int>()), 0);
  if (!doc["leaves"].is_array())
    throw ParseError(0, "'leaves' must be an array");
  std::vector<Chord> leaves;
  for (const auto& entry : doc["leaves"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw ParseError(0, "each leaf must be a two-string array");
    leaves.emplace_back(parse_angle(entry[0].get<std::string>(), 0),
                        parse_angle(entry[1].get<std::string>(), 0));
  }
  Lamination lamination(degree, std::move(leaves));
  if (check_crossings) reject_crossings(lamination);
  return lamination;
}

bool looks_like_json(const std::string& text) {
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

}  // namespace

Lamination parse_lamination(const std::string& text, bool check_crossings) {
  if (looks_like_json(text)) return parse_lamination_json(text, check_crossings);

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  int degree = 0;
  bool have_degree = false;
  std::vector<Chord> leaves;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!have_degree) {
      if (tokens[0] != "degree" || tokens.size() != 2)
        throw ParseError(line_no, "expected header 'degree d'");
      degree = parse_degree(tokens[1], line_no);
      have_degree = true;
      continue;
    }
    if (tokens[0] != "leaf" || tokens.size() != 3)
      throw ParseError(line_no, "expected 'leaf p/q r/s'");
    const Angle a = parse_angle(tokens[1], line_no);
    const Angle b = parse_angle(tokens[2], line_no);
    if (a == b) throw ParseError(line_no, "leaf endpoints coincide: " + a.str());
    leaves.emplace_back(a, b);
  }
  if (!have_degree) throw ParseError(line_no + 1, "missing 'degree d' header");
  Lamination lamination(degree, std::move(leaves));
  if (check_crossings) reject_crossings(lamination);
  return lamination;
}

std::string serialize_lamination(const Lamination& lamination) {
  std::string out = "degree " + std::to_string(lamination.degree()) + "\n";
  for (const Chord& leaf : lamination.leaves())
    out += "leaf " + leaf.a().str() + " " + leaf.b().str() + "\n";
  return out;
}

std::string serialize_lamination_json(const Lamination& lamination) {
  nlohmann::json doc;
  doc["degree"] = lamination.degree();
  doc["leaves"] = nlohmann::json::array();
  for (const Chord& leaf : lamination.leaves())
    doc["leaves"].push_back({leaf.a().str(), leaf.b().str()});
  return doc.dump(2) + "\n";
}

Partition parse_partition(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  std::vector<std::vector<Angle>> classes;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    std::vector<Angle> cls;
    for (const std::string& token : tokens)
      cls.push_back(parse_angle(token, line_no));
    classes.push_back(std::move(cls));
  }
  if (classes.empty()) throw ParseError(line_no + 1, "no classes given");
  try {
    return Partition(std::move(classes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

PullbackSpecFile parse_pullback_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad JSON: ") + e.what());
  }
  for (const char* field : {"degree", "seed", "portrait", "depth"})
    if (!doc.contains(field))
      throw ParseError(0, std::string("pullback spec needs field '") + field + "'");
  PullbackSpecFile spec;
  if (!doc["degree"].is_number_integer() || !doc["depth"].is_number_integer() ||
      !doc["seed"].is_string() || !doc["portrait"].is_array())
    throw ParseError(0, "pullback spec field has the wrong type");
  spec.degree = parse_degree(std::to_string(doc["degree"].get<int>()), 0);
  spec.seed_path = doc["seed"].get<std::string>();
  spec.depth = doc["depth"].get<int>();
  for (const auto& entry : doc["portrait"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw ParseError(0, "each portrait chord must be a two-string array");
    spec.portrait.emplace_back(parse_angle(entry[0].get<std::string>(), 0),
                               parse_angle(entry[1].get<std::string>(), 0));
  }
  if (doc.contains("include_portrait")) {
    if (!doc["include_portrait"].is_boolean())
      throw ParseError(0, "'include_portrait' must be a boolean");
    spec.include_portrait = doc["include_portrait"].get<bool>();
  }
  return spec;
}

}  // namespace lamina
