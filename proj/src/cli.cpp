#include "deltamix/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "deltamix/chaos.hpp"
#include "deltamix/config.hpp"
#include "deltamix/density.hpp"
#include "deltamix/entropy.hpp"
#include "deltamix/errors.hpp"
#include "deltamix/hitting.hpp"
#include "deltamix/independence.hpp"
#include "deltamix/mixing.hpp"
#include "deltamix/oracle.hpp"
#include "deltamix/serialize.hpp"
#include "deltamix/subshift.hpp"

namespace deltamix {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << data;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << v;
  return os.str();
}

ordered_json json_envelope(const RunConfig& config) {
  ordered_json j;
  j["tool"] = tool_line();
  j["config"] = config.line();
  return j;
}

struct Emitter {
  std::string output_path;
  std::ostream& out;
  void text(const std::string& body) {
    out << body;
    if (!output_path.empty()) write_file(output_path, body);
  }
  void json(const ordered_json& j) { text(j.dump(2) + "\n"); }
};

std::vector<std::pair<int, int>> parse_rs_list(
    const std::vector<std::string>& rs_texts) {
  std::vector<std::pair<int, int>> out;
  for (const std::string& t : rs_texts) {
    auto comma = t.find(',');
    if (comma == std::string::npos)
      throw InvalidArgument("--rs wants \"r,s\", got " + t);
    out.emplace_back(std::stoi(t.substr(0, comma)),
                     std::stoi(t.substr(comma + 1)));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

ordered_json timeset_json(const TimeSet& t) {
  ordered_json j;
  j["horizon"] = t.horizon;
  j["members"] = t.members;
  ordered_json w = ordered_json::object();
  for (const auto& [n, word] : t.witnesses) w[std::to_string(n)] = word.text();
  j["witnesses"] = w;
  return j;
}

ordered_json certificate_json(const IndependenceCertificate& cert) {
  ordered_json j;
  std::vector<std::string> tuple;
  for (const CylinderUnion& u : cert.tuple) tuple.push_back(u.text());
  j["tuple"] = tuple;
  if (cert.relative_to) j["relative"] = cert.relative_to->text();
  j["J"] = cert.J;
  ordered_json w = ordered_json::array();
  for (const auto& [s, word] : cert.witnesses) {
    ordered_json row;
    row["selector"] = s;
    row["word"] = word.text();
    w.push_back(row);
  }
  j["witnesses"] = w;
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite certificates for hitting-time structure, independence, "
               "entropy and scrambled orbits on subshifts of finite type"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", output_path);

  // entropy
  auto* c_entropy = app.add_subcommand("entropy", "topological entropy");
  std::string entropy_spec;
  std::string entropy_method = "perron";
  int entropy_nmax = 16;
  c_entropy->add_option("spec", entropy_spec)->required();
  c_entropy->add_option("--method", entropy_method)
      ->check(CLI::IsMember({"perron", "word-count"}));
  c_entropy->add_option("--tol", config.entropy_tol);
  c_entropy->add_option("--n-max", entropy_nmax);

  // hitting
  auto* c_hitting = app.add_subcommand("hitting", "generalized hitting sets");
  std::string hitting_spec;
  std::vector<std::string> hitting_sets;
  bool hitting_no_witnesses = false;
  int hitting_block = 0;
  c_hitting->add_option("spec", hitting_spec)->required();
  c_hitting->add_option("--set", hitting_sets)->required();
  c_hitting->add_option("--horizon", config.horizon);
  c_hitting->add_flag("--no-witnesses", hitting_no_witnesses);
  c_hitting->add_option("--thickness-block", hitting_block,
                        "also report the least run of this length");

  // independence
  auto* c_indep = app.add_subcommand("independence", "independence certificates");
  std::string indep_spec, indep_J, indep_relative;
  std::vector<std::string> indep_sets;
  c_indep->add_option("spec", indep_spec)->required();
  c_indep->add_option("--set", indep_sets)->required();
  c_indep->add_option("--J", indep_J)->required();
  c_indep->add_option("--relative", indep_relative);
  c_indep->add_option("--cap", config.selector_cap);

  // delta-certify
  auto* c_delta = app.add_subcommand("delta-certify",
                                     "diagonal transitivity certificates");
  std::string delta_spec;
  std::vector<std::string> delta_sets;
  int delta_grid_maxlen = 0, delta_max_d = 3;
  c_delta->add_option("spec", delta_spec)->required();
  c_delta->add_option("--set", delta_sets);
  c_delta->add_option("--grid-maxlen", delta_grid_maxlen,
                      "sweep all cylinder tuples up to this word length");
  c_delta->add_option("--max-d", delta_max_d);
  c_delta->add_option("--horizon", config.horizon);

  // am-check
  auto* c_am = app.add_subcommand("am-check", "A_m membership certificates");
  std::string am_spec, am_set;
  int am_m = 1;
  c_am->add_option("spec", am_spec)->required();
  c_am->add_option("--e", am_set)->required();
  c_am->add_option("--m", am_m)->required();
  c_am->add_option("--horizon", config.horizon);
  c_am->add_option("--cap", config.selector_cap);

  // construct
  auto* c_construct = app.add_subcommand("construct",
                                         "nested family construction");
  std::string construct_spec, construct_seeds;
  int construct_depth = 2;
  c_construct->add_option("spec", construct_spec)->required();
  c_construct->add_option("--seeds", construct_seeds)->required();
  c_construct->add_option("--depth", construct_depth);
  c_construct->add_option("--horizon", config.horizon);

  // verify
  auto* c_verify = app.add_subcommand("verify", "replay a tree document");
  std::string verify_path;
  c_verify->add_option("tree", verify_path)->required();

  // scan
  auto* c_scan = app.add_subcommand("scan", "scrambled-pair evidence");
  std::string scan_spec, scan_x, scan_y, scan_tree, scan_branches;
  std::vector<std::string> scan_rs;
  int scan_horizon = 0;
  bool scan_trace = false;
  c_scan->add_option("spec", scan_spec)->required();
  c_scan->add_option("--x", scan_x);
  c_scan->add_option("--y", scan_y);
  c_scan->add_option("--tree", scan_tree);
  c_scan->add_option("--branches", scan_branches);
  c_scan->add_option("--rs", scan_rs)->required();
  c_scan->add_option("--horizon", scan_horizon);
  c_scan->add_option("--window", config.distance_window);
  c_scan->add_option("--p-min", config.p_min);
  c_scan->add_option("--eps-exp", config.eps_min_exp);
  c_scan->add_flag("--trace", scan_trace);

  // oracle-diff
  auto* c_oracle = app.add_subcommand("oracle-diff",
                                      "brute force vs fast path");
  std::string oracle_path, oracle_emit;
  c_oracle->add_option("queries", oracle_path);
  c_oracle->add_option("--emit-default", oracle_emit,
                       "write the bundled corpus to this path");

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Emitter emit{output_path, out};

  if (*c_entropy) {
    SubshiftSpec spec = load_spec_file(entropy_spec);
    EntropyReport rep =
        entropy_method == "perron"
            ? sft_entropy(spec, config.entropy_tol, config.power_iter_cap)
            : word_count_entropy(spec, entropy_nmax, config);
    if (format == "json") {
      ordered_json j = json_envelope(config);
      j["spec"] = spec.name();
      j["method"] = rep.method;
      j["value"] = format_double(rep.value);
      j["residual"] = format_double(rep.residual);
      j["converged"] = rep.converged;
      if (!rep.sequence.empty()) {
        std::vector<std::string> seq;
        for (double h : rep.sequence) seq.push_back(format_double(h));
        j["sequence"] = seq;
      }
      emit.json(j);
    } else {
      emit.text(artifact_header(config) + rep.text());
    }
    return 0;
  }

  if (*c_hitting) {
    SubshiftSpec spec = load_spec_file(hitting_spec);
    std::vector<CylinderUnion> us;
    for (const std::string& s : hitting_sets) us.push_back(CylinderUnion::parse(s));
    TimeSet t = generalized_hitting_set(spec, us, config.horizon,
                                        !hitting_no_witnesses);
    std::optional<int> run_start;
    if (hitting_block > 0) run_start = thickness_certificate(t, hitting_block);
    if (format == "json") {
      ordered_json j = json_envelope(config);
      j["spec"] = spec.name();
      std::vector<std::string> sets;
      for (const CylinderUnion& u : us) sets.push_back(u.text());
      j["sets"] = sets;
      j["timeset"] = timeset_json(t);
      if (hitting_block > 0) {
        j["thickness_block"] = hitting_block;
        if (run_start) j["thickness_start"] = *run_start;
        else j["thickness_start"] = nullptr;
      }
      emit.json(j);
    } else {
      std::string body = artifact_header(config) + t.text();
      if (hitting_block > 0)
        body += "thickness block " + std::to_string(hitting_block) + " " +
                (run_start ? "start " + std::to_string(*run_start)
                           : std::string("none")) + "\n";
      emit.text(body);
    }
    return 0;
  }

  if (*c_indep) {
    SubshiftSpec spec = load_spec_file(indep_spec);
    std::vector<CylinderUnion> tuple;
    for (const std::string& s : indep_sets) tuple.push_back(CylinderUnion::parse(s));
    std::optional<CylinderUnion> rel;
    if (!indep_relative.empty()) rel = CylinderUnion::parse(indep_relative);
    auto res = independence_check(spec, tuple, parse_int_list(indep_J),
                                  config.selector_cap, rel);
    if (format == "json") {
      ordered_json j = json_envelope(config);
      j["spec"] = spec.name();
      j["ok"] = res.ok();
      if (res.ok()) j["certificate"] = certificate_json(*res.certificate);
      else {
        j["failing_selector"] = res.failure->selector;
        j["reason"] = res.failure->reason;
      }
      emit.json(j);
    } else {
      std::string body = artifact_header(config);
      if (res.ok()) {
        body += "ok yes\n" + res.certificate->text();
      } else {
        body += "ok no\nfailing_selector";
        for (int v : res.failure->selector) body += " " + std::to_string(v);
        body += "\nreason " + res.failure->reason + "\n";
      }
      emit.text(body);
    }
    return 0;
  }

  if (*c_delta) {
    SubshiftSpec spec = load_spec_file(delta_spec);
    if (delta_grid_maxlen > 0) {
      DeltaSystemReport rep = delta_transitive_system_report(
          spec, delta_grid_maxlen, delta_max_d, config.horizon);
      std::string body = artifact_header(config);
      body += "grid max_word_len " + std::to_string(rep.max_word_len) +
              " max_d " + std::to_string(rep.max_d) + " horizon " +
              std::to_string(rep.horizon) + "\n";
      body += "certified " + std::to_string(rep.certified) + "\n";
      body += "failed " + std::to_string(rep.failed) + "\n";
      for (const DeltaSystemRow& row : rep.rows) {
        if (row.n) continue;
        body += "no-witness";
        for (const Word& w : row.words) body += " " + w.text();
        body += "\n";
      }
      emit.text(body);
      return rep.failed == 0 ? 0 : 1;
    }
    std::vector<CylinderUnion> us;
    for (const std::string& s : delta_sets) us.push_back(CylinderUnion::parse(s));
    DeltaCertificate cert = delta_transitive_certificate(spec, us, config.horizon);
    if (format == "json") {
      ordered_json j = json_envelope(config);
      j["spec"] = spec.name();
      j["kind"] = delta_kind_name(cert.kind);
      j["d"] = cert.d;
      j["n"] = cert.n;
      j["witness"] = cert.witness->text();
      emit.json(j);
    } else {
      emit.text(artifact_header(config) + cert.text());
    }
    return 0;
  }

  if (*c_am) {
    SubshiftSpec spec = load_spec_file(am_spec);
    DeltaCertificate cert = a_m_membership(spec, CylinderUnion::parse(am_set),
                                           am_m, config.horizon,
                                           config.selector_cap);
    if (format == "json") {
      ordered_json j = json_envelope(config);
      j["spec"] = spec.name();
      j["kind"] = delta_kind_name(cert.kind);
      j["m"] = cert.m;
      j["k"] = cert.d;
      j["n"] = cert.n;
      std::vector<std::string> cover;
      for (const Word& w : cert.cover) cover.push_back(w.text());
      j["cover"] = cover;
      j["certificate"] = certificate_json(*cert.independence);
      emit.json(j);
    } else {
      emit.text(artifact_header(config) + cert.text());
    }
    return 0;
  }

  if (*c_construct) {
    SubshiftSpec spec = load_spec_file(construct_spec);
    std::vector<Word> seeds;
    {
      std::istringstream ss(construct_seeds);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) seeds.push_back(Word::parse(tok));
    }
    ConstructionTree tree = theorem_b_construct(spec, seeds, construct_depth,
                                                config.horizon, config);
    emit.text(write_tree(tree, config));
    return 0;
  }

  if (*c_verify) {
    std::string text = read_file(verify_path);
    std::vector<std::string> lines = verify_tree_text(text);
    std::string body = artifact_header(config) + "verdict ok\n";
    for (const std::string& l : lines) body += l + "\n";
    emit.text(body);
    return 0;
  }

  if (*c_scan) {
    SubshiftSpec spec = load_spec_file(scan_spec);
    ScrambledThresholds thresholds;
    thresholds.p_min = config.p_min;
    thresholds.eps_min_exp = config.eps_min_exp;
    thresholds.tail_num = config.tail_num;
    thresholds.tail_den = config.tail_den;

    std::vector<NamedPair> pairs;
    if (!scan_tree.empty()) {
      std::vector<uint64_t> digests;
      ConstructionTree tree = parse_tree(read_file(scan_tree), digests);
      std::vector<int> branches = parse_int_list(scan_branches);
      if (branches.size() != 2)
        throw InvalidArgument("--branches wants two leaf indices");
      TreePair tp = pair_from_tree(spec, tree, branches[0], branches[1],
                                   parse_rs_list(scan_rs), thresholds);
      if (scan_horizon == 0) scan_horizon = tp.suggested_horizon;
      pairs.push_back({"tree:" + std::to_string(branches[0]) + ":" +
                           std::to_string(branches[1]),
                       tp.x, tp.y});
    } else {
      if (scan_x.empty() || scan_y.empty())
        throw InvalidArgument("scan wants --x and --y, or --tree");
      PointGen x = PointGen::parse(scan_x);
      PointGen y = PointGen::parse(scan_y);
      long long cover = 0;
      for (auto [r, s] : parse_rs_list(scan_rs))
        cover = std::max<long long>(cover, std::max(r, s));
      if (scan_horizon == 0) scan_horizon = config.horizon;
      x.validate_in(spec, cover * scan_horizon + config.distance_window);
      y.validate_in(spec, cover * scan_horizon + config.distance_window);
      pairs.push_back({"pair:" + scan_x + ":" + scan_y, x, y});
    }
    auto reports = prox_asy_grid(pairs, parse_rs_list(scan_rs), scan_horizon,
                                 config.distance_window, thresholds);
    std::string body = artifact_header(config);
    body += "pair\tr\ts\thorizon\twindow\ttail_start\tmin\tmax\tverdict\t"
            "thresholds\n";
    for (const ScrambledReport& rep : reports) body += rep.row() + "\n";
    if (scan_trace) {
      for (const NamedPair& p : pairs)
        for (auto [r, s] : parse_rs_list(scan_rs)) {
          auto profile = orbit_distance_profile(p.x, p.y, r, s, scan_horizon,
                                                config.distance_window);
          body += "trace " + p.id + " r=" + std::to_string(r) + " s=" +
                  std::to_string(s) + "\n";
          for (const auto& [n, d] : profile)
            body += std::to_string(n) + " " + d.text() + "\n";
        }
    }
    emit.text(body);
    return 0;
  }

  if (*c_oracle) {
    if (!oracle_emit.empty()) {
      write_file(oracle_emit, corpus_to_text(default_oracle_corpus()));
      emit.text(artifact_header(config) + "corpus written to " + oracle_emit +
                "\n");
      return 0;
    }
    if (oracle_path.empty())
      throw InvalidArgument("oracle-diff wants a query file or --emit-default");
    OracleCorpus corpus = parse_corpus(read_file(oracle_path));
    OracleDiffResult res = oracle_diff(corpus);
    std::string body = artifact_header(config);
    body += "queries " + std::to_string(res.total) + "\n";
    body += "mismatches " + std::to_string(res.mismatches) + "\n";
    for (const std::string& d : res.detail) body += d + "\n";
    emit.text(body);
    return res.mismatches == 0 ? 0 : 1;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace deltamix
