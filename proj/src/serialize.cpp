#include "deltamix/serialize.hpp"

#include <sstream>

#include "deltamix/errors.hpp"
#include "deltamix/independence.hpp"

#include "json.hpp"

namespace deltamix {

std::string artifact_header(const RunConfig& config) {
  return "# " + tool_line() + "\n# config " + config.line() + "\n";
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

uint64_t certificate_digest(const IndependenceCertificate& cert) {
  return fnv1a64(cert.text());
}

std::string write_tree(const ConstructionTree& tree, const RunConfig& config) {
  std::ostringstream os;
  os << "deltamix-tree v1\n";
  os << "tool " << tool_line() << "\n";
  os << "config " << config.line() << "\n";
  // canonical one-line spec document
  std::string spec_line = nlohmann::ordered_json::parse(tree.spec_json).dump();
  os << "spec " << spec_line << "\n";
  os << "seeds";
  for (const Word& w : tree.seeds) os << " " << w.text();
  os << "\n";
  os << "depth " << tree.depth << "\n";
  os << "horizon " << tree.horizon << "\n";
  os << "selector_cap " << tree.selector_cap << "\n";
  for (size_t k = 0; k < tree.levels.size(); ++k) {
    const TreeLevel& level = tree.levels[k];
    os << "level " << (k + 1) << "\n";
    os << "n " << level.n_k << "\n";
    os << "target " << level.target_size << "\n";
    os << "J";
    for (int j : level.J) os << " " << j;
    os << "\n";
    os << "words";
    for (const Word& w : level.words) os << " " << w.text();
    os << "\n";
    os << "density " << level.density.text() << "\n";
    os << "digest " << hex64(certificate_digest(level.certificate)) << "\n";
  }
  os << "end\n";
  return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ConstructionTree parse_tree(const std::string& text,
                            std::vector<uint64_t>& level_digests) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "deltamix-tree v1")
    throw IoError("not a deltamix-tree v1 document");

  ConstructionTree tree;
  level_digests.clear();
  TreeLevel* current = nullptr;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "end") { ended = true; break; }
    auto sp = line.find(' ');
    std::string key = sp == std::string::npos ? line : line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (key == "tool" || key == "config" || key == "density") continue;
    if (key == "spec") { tree.spec_json = rest + "\n"; continue; }
    if (key == "seeds") {
      for (const std::string& t : split_ws(rest))
        tree.seeds.push_back(Word::parse(t));
      continue;
    }
    if (key == "depth") { tree.depth = std::stoi(rest); continue; }
    if (key == "horizon") { tree.horizon = std::stoi(rest); continue; }
    if (key == "selector_cap") { tree.selector_cap = std::stoll(rest); continue; }
    if (key == "level") {
      tree.levels.emplace_back();
      current = &tree.levels.back();
      level_digests.push_back(0);
      continue;
    }
    if (!current) throw IoError("tree field outside a level: " + line);
    if (key == "n") current->n_k = std::stoi(rest);
    else if (key == "target") current->target_size = std::stoi(rest);
    else if (key == "J") {
      for (const std::string& t : split_ws(rest))
        current->J.push_back(std::stoi(t));
    } else if (key == "words") {
      for (const std::string& t : split_ws(rest))
        current->words.push_back(Word::parse(t));
    } else if (key == "digest") {
      level_digests.back() = std::stoull(rest, nullptr, 16);
    } else {
      throw IoError("unknown tree field: " + key);
    }
  }
  if (!ended) throw IoError("tree document has no end marker");
  if (tree.spec_json.empty()) throw IoError("tree document has no spec");
  if (tree.depth != static_cast<int>(tree.levels.size()))
    throw InvariantViolation("level count differs from depth");
  return tree;
}

std::vector<std::string> verify_tree_text(const std::string& text) {
  std::vector<uint64_t> digests;
  ConstructionTree tree = parse_tree(text, digests);
  SubshiftSpec spec = parse_spec_json(tree.spec_json);

  std::vector<std::string> lines;
  check_tree_invariants(spec, tree);
  lines.push_back("structure: sizes, nesting, disjointness, diameter, "
                  "independence replay ok");
  for (size_t k = 0; k < tree.levels.size(); ++k) {
    const TreeLevel& level = tree.levels[k];
    std::vector<CylinderUnion> tuple;
    for (const Word& w : level.words) tuple.push_back(CylinderUnion({w}));
    auto res = independence_check(spec, tuple, level.J, tree.selector_cap);
    if (!res.ok())
      throw InvariantViolation("level " + std::to_string(k + 1) +
                               " independence evidence does not replay");
    uint64_t digest = certificate_digest(*res.certificate);
    if (digest != digests[k])
      throw InvariantViolation("level " + std::to_string(k + 1) +
                               " witness digest mismatch");
    lines.push_back("level " + std::to_string(k + 1) + ": digest " +
                    hex64(digest) + " ok (" +
                    std::to_string(res.certificate->witnesses.size()) +
                    " witnesses)");
  }
  return lines;
}

}  // namespace deltamix
