#include "deltamix/subshift.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace deltamix {

namespace {

constexpr int kMaxStates = 64;

bool has_forbidden_suffix(const std::vector<Symbol>& buf,
                          const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    int fl = f.size();
    int bl = static_cast<int>(buf.size());
    if (fl > bl) continue;
    bool match = true;
    for (int i = 0; i < fl; ++i)
      if (buf[bl - fl + i] != f[i]) { match = false; break; }
    if (match) return true;
  }
  return false;
}

}  // namespace

SubshiftSpec SubshiftSpec::from_matrix(int alphabet_size,
                                       const std::vector<std::vector<int>>& rows,
                                       std::string name) {
  if (alphabet_size < 1) throw InvalidArgument("alphabet_size must be >= 1");
  if (static_cast<int>(rows.size()) != alphabet_size)
    throw InvalidArgument("transition matrix must be square");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != alphabet_size)
      throw InvalidArgument("transition matrix must be square");
    for (int v : r)
      if (v != 0 && v != 1) throw InvalidArgument("matrix entries must be 0/1");
  }
  SubshiftSpec spec;
  spec.name_ = std::move(name);
  spec.origin_ = "matrix";
  spec.alphabet_size_ = alphabet_size;
  spec.matrix_ = rows;
  spec.build_automaton();
  return spec;
}

SubshiftSpec SubshiftSpec::from_forbidden_words(int alphabet_size,
                                                const std::vector<Word>& forbidden,
                                                std::string name) {
  if (alphabet_size < 1) throw InvalidArgument("alphabet_size must be >= 1");
  for (const Word& f : forbidden) {
    if (f.empty()) throw InvalidArgument("forbidden words must be non-empty");
    for (Symbol s : f.syms)
      if (s < 0 || s >= alphabet_size)
        throw InvalidArgument("forbidden word uses a symbol outside the alphabet");
  }
  SubshiftSpec spec;
  spec.name_ = std::move(name);
  spec.origin_ = "forbidden_words";
  spec.alphabet_size_ = alphabet_size;
  spec.forbidden_ = forbidden;
  std::sort(spec.forbidden_.begin(), spec.forbidden_.end());
  spec.forbidden_.erase(
      std::unique(spec.forbidden_.begin(), spec.forbidden_.end()),
      spec.forbidden_.end());
  spec.build_automaton();
  return spec;
}

void SubshiftSpec::build_automaton() {
  int k = alphabet_size_;
  int maxlen = 2;
  for (const Word& f : forbidden_) maxlen = std::max(maxlen, f.size());
  context_len_ = maxlen - 1;

  // candidate contexts: locally admissible words of length context_len_
  std::vector<Word> contexts;
  std::vector<Symbol> buf;
  auto grow = [&](auto&& self, int depth) -> void {
    if (depth == context_len_) {
      contexts.emplace_back(buf);
      return;
    }
    for (Symbol a = 0; a < k; ++a) {
      buf.push_back(a);
      bool ok = true;
      if (origin_ == "matrix") {
        if (buf.size() >= 2 &&
            matrix_[buf[buf.size() - 2]][buf.back()] == 0)
          ok = false;
      } else {
        ok = !has_forbidden_suffix(buf, forbidden_);
      }
      if (ok) self(self, depth + 1);
      buf.pop_back();
    }
  };
  grow(grow, 0);
  if (static_cast<int>(contexts.size()) > kMaxStates)
    throw CapExceeded("recoded state count " + std::to_string(contexts.size()) +
                      " exceeds the 64-state cap");
  if (contexts.empty()) throw InvalidSubshift("no admissible context words");

  int n = static_cast<int>(contexts.size());
  BitMat adj(n);
  for (int i = 0; i < n; ++i) {
    for (Symbol a = 0; a < k; ++a) {
      // successor context: drop first symbol, append a
      std::vector<Symbol> next(contexts[i].syms.begin() + (context_len_ > 1 ? 1 : 0),
                               contexts[i].syms.end());
      if (context_len_ == 1) next.clear();
      next.push_back(a);
      std::vector<Symbol> joint = contexts[i].syms;
      joint.push_back(a);
      bool ok;
      if (origin_ == "matrix") {
        ok = matrix_[contexts[i].syms.back()][a] == 1;
      } else {
        ok = !has_forbidden_suffix(joint, forbidden_);
      }
      if (!ok) continue;
      Word nw{next};
      auto it = std::lower_bound(contexts.begin(), contexts.end(), nw);
      if (it != contexts.end() && *it == nw)
        adj.set(i, static_cast<int>(it - contexts.begin()));
    }
  }

  // trim to essential core
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      bool has_out = false, has_in = false;
      for (int j = 0; j < n; ++j) {
        if (alive[j] && adj.get(i, j)) has_out = true;
        if (alive[j] && adj.get(j, i)) has_in = true;
      }
      if (!has_out || !has_in) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  states_.clear();
  std::vector<int> remap(n, -1);
  for (int i = 0; i < n; ++i) {
    if (alive[i]) {
      remap[i] = static_cast<int>(states_.size());
      states_.push_back(contexts[i]);
    }
  }
  if (states_.empty())
    throw InvalidSubshift("empty language: no bi-extendable symbol");
  essential_input_ = static_cast<int>(states_.size()) == n;

  BitMat trimmed(static_cast<int>(states_.size()));
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    for (int j = 0; j < n; ++j)
      if (alive[j] && adj.get(i, j)) trimmed.set(remap[i], remap[j]);
  }
  adj_ = trimmed;

  symbol_masks_.assign(static_cast<size_t>(context_len_) * k, 0);
  for (size_t s = 0; s < states_.size(); ++s)
    for (int t = 0; t < context_len_; ++t)
      symbol_masks_[static_cast<size_t>(t) * k + states_[s][t]] |= 1ull << s;

  removed_symbols_.clear();
  for (Symbol a = 0; a < k; ++a)
    if (symbol_mask(0, a) == 0) removed_symbols_.push_back(a);
}

bool SubshiftSpec::word_locally_admissible(const Word& w) const {
  for (Symbol s : w.syms)
    if (s < 0 || s >= alphabet_size_) return false;
  if (origin_ == "matrix") {
    for (int i = 0; i + 1 < w.size(); ++i)
      if (matrix_[w[i]][w[i + 1]] == 0) return false;
    return true;
  }
  for (const Word& f : forbidden_) {
    if (f.size() > w.size()) continue;
    for (int i = 0; i + f.size() <= w.size(); ++i) {
      bool match = true;
      for (int t = 0; t < f.size(); ++t)
        if (w[i + t] != f[t]) { match = false; break; }
      if (match) return false;
    }
  }
  return true;
}

bool SubshiftSpec::word_allowed(const Word& w) const {
  for (Symbol s : w.syms)
    if (s < 0 || s >= alphabet_size_) return false;
  int c = context_len_;
  if (w.size() < c) {
    // short word: must appear inside some surviving context
    if (w.empty()) return true;
    for (const Word& st : states_)
      for (int off = 0; off + w.size() <= c; ++off) {
        bool match = true;
        for (int t = 0; t < w.size(); ++t)
          if (st[off + t] != w[t]) { match = false; break; }
        if (match) return true;
      }
    return false;
  }
  // walk the context path
  auto window_mask = [&](int i) {
    uint64_t mask = adj_.full_mask();
    for (int t = 0; t < c; ++t) mask &= symbol_mask(t, w[i + t]);
    return mask;
  };
  uint64_t live = window_mask(0);
  for (int i = 1; i + c <= w.size() && live; ++i)
    live = adj_.forward(live) & window_mask(i);
  return live != 0;
}

std::vector<Word> SubshiftSpec::language(int n, const RunConfig& config) const {
  if (n < 1) throw InvalidArgument("language length must be >= 1");
  if (n > config.enum_max_len || alphabet_size_ > config.enum_max_alphabet)
    throw CapExceeded("language enumeration beyond configured cap (n=" +
                      std::to_string(n) + ")");
  std::set<Word> out;
  int c = context_len_;
  if (n < c) {
    for (const Word& st : states_)
      for (int off = 0; off + n <= c; ++off)
        out.insert(Word(std::vector<Symbol>(st.syms.begin() + off,
                                            st.syms.begin() + off + n)));
  } else {
    // DFS over state paths of length n - c + 1
    for (int s = 0; s < state_count(); ++s) {
      std::vector<int> path{s};
      auto rec = [&](auto&& self) -> void {
        int depth = static_cast<int>(path.size());
        if (depth == n - c + 1) {
          std::vector<Symbol> w;
          for (int i = 0; i < depth; ++i) w.push_back(states_[path[i]][0]);
          const Word& last = states_[path.back()];
          for (int t = 1; t < c; ++t) w.push_back(last[t]);
          out.insert(Word(std::move(w)));
          return;
        }
        uint64_t row = adj_.rows[path.back()];
        while (row) {
          int j = __builtin_ctzll(row);
          row &= row - 1;
          path.push_back(j);
          self(self);
          path.pop_back();
        }
      };
      rec(rec);
    }
  }
  return std::vector<Word>(out.begin(), out.end());
}

unsigned long long SubshiftSpec::language_count(int n) const {
  if (n < 1) throw InvalidArgument("language length must be >= 1");
  int c = context_len_;
  if (n < c) {
    std::set<Word> short_words;
    for (const Word& st : states_)
      for (int off = 0; off + n <= c; ++off)
        short_words.insert(Word(std::vector<Symbol>(st.syms.begin() + off,
                                                    st.syms.begin() + off + n)));
    return short_words.size();
  }
  std::vector<unsigned long long> v(states_.size(), 1);
  for (int step = 0; step < n - c; ++step) {
    std::vector<unsigned long long> next(states_.size(), 0);
    for (size_t i = 0; i < states_.size(); ++i) {
      uint64_t row = adj_.rows[i];
      while (row) {
        int j = __builtin_ctzll(row);
        row &= row - 1;
        if (__builtin_add_overflow(next[i], v[j], &next[i]))
          throw CapExceeded("word count overflows 64 bits at n=" +
                            std::to_string(n));
      }
    }
    v = std::move(next);
  }
  unsigned long long total = 0;
  for (auto x : v)
    if (__builtin_add_overflow(total, x, &total))
      throw CapExceeded("word count overflows 64 bits at n=" + std::to_string(n));
  return total;
}

ValidationReport SubshiftSpec::validate() const {
  ValidationReport rep;
  rep.alphabet_size = alphabet_size_;
  rep.removed_symbols = removed_symbols_;
  rep.essential_input = essential_input_;
  rep.state_count = state_count();
  rep.context_len = context_len_;

  int n = state_count();
  // strong connectivity: forward and backward reachability from state 0
  auto reach = [&](bool forward) {
    uint64_t seen = 1ull;
    bool grew = true;
    while (grew) {
      grew = false;
      uint64_t next = forward ? adj_.forward(seen) : adj_.backward(seen);
      if ((next | seen) != seen) { seen |= next; grew = true; }
    }
    return seen;
  };
  uint64_t full = adj_.full_mask();
  rep.irreducible = (reach(true) == full) && (reach(false) == full);

  if (rep.irreducible) {
    // gcd of cycle lengths via BFS level labels
    std::vector<int> level(n, -1);
    level[0] = 0;
    std::vector<int> queue{0};
    int g = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      uint64_t row = adj_.rows[u];
      while (row) {
        int v = __builtin_ctzll(row);
        row &= row - 1;
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        } else {
          g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
        }
      }
    }
    rep.period = g == 0 ? 1 : g;
  }
  return rep;
}

std::string ValidationReport::text() const {
  std::ostringstream os;
  os << "alphabet_size " << alphabet_size << "\n";
  os << "essential_input " << (essential_input ? "yes" : "no") << "\n";
  os << "removed_symbols";
  for (Symbol s : removed_symbols) os << " " << Word::symbol_char(s);
  os << "\n";
  os << "context_len " << context_len << "\n";
  os << "state_count " << state_count << "\n";
  os << "irreducible " << (irreducible ? "yes" : "no") << "\n";
  if (irreducible) os << "period " << period << "\n";
  return os.str();
}

SubshiftSpec parse_spec_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("spec parse failure: ") + e.what());
  }
  if (!j.is_object()) throw IoError("spec file must be a JSON object");
  if (!j.contains("alphabet") || !j["alphabet"].is_array())
    throw IoError("spec file needs an \"alphabet\" array");
  int k = static_cast<int>(j["alphabet"].size());
  for (int i = 0; i < k; ++i) {
    std::string name = j["alphabet"][i].get<std::string>();
    if (name.size() != 1 || name[0] != Word::symbol_char(i))
      throw IoError("alphabet names must be the canonical characters "
                    "\"0\",\"1\",... in order");
  }
  std::string name = j.value("name", std::string());
  bool has_matrix = j.contains("transitions");
  bool has_forbidden = j.contains("forbidden_words");
  if (has_matrix == has_forbidden)
    throw IoError("spec file needs exactly one of \"transitions\" and "
                  "\"forbidden_words\"");
  if (has_matrix) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : j["transitions"])
      rows.push_back(r.get<std::vector<int>>());
    return SubshiftSpec::from_matrix(k, rows, name);
  }
  std::vector<Word> forbidden;
  for (const auto& f : j["forbidden_words"])
    forbidden.push_back(Word::parse(f.get<std::string>()));
  return SubshiftSpec::from_forbidden_words(k, forbidden, name);
}

std::string spec_to_json_text(const SubshiftSpec& spec) {
  nlohmann::ordered_json j;
  if (!spec.name().empty()) j["name"] = spec.name();
  std::vector<std::string> alphabet;
  for (int i = 0; i < spec.alphabet_size(); ++i)
    alphabet.emplace_back(1, Word::symbol_char(i));
  j["alphabet"] = alphabet;
  if (spec.origin() == "matrix") {
    j["transitions"] = spec.matrix();
  } else {
    std::vector<std::string> f;
    for (const Word& w : spec.forbidden_words()) f.push_back(w.text());
    j["forbidden_words"] = f;
  }
  return j.dump(2) + "\n";
}

SubshiftSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_json(ss.str());
}

}  // namespace deltamix
