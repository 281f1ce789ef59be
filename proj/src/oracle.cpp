#include "deltamix/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "deltamix/errors.hpp"
#include "deltamix/hitting.hpp"

namespace deltamix {

std::vector<Word> enumerate_words_direct(const SubshiftSpec& spec, int n) {
  std::vector<Word> out;
  std::vector<Symbol> buf;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(buf.size()) == n) {
      out.emplace_back(buf);
      return;
    }
    for (Symbol a = 0; a < spec.alphabet_size(); ++a) {
      if (!spec.symbol_alive(a)) continue;
      buf.push_back(a);
      if (spec.word_locally_admissible(Word{buf})) self(self);
      buf.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace {

bool word_hits(const Word& word, const CylinderUnion& u, int offset) {
  for (const Word& w : u.cylinders) {
    if (offset + w.size() > word.size()) continue;
    bool match = true;
    for (int t = 0; t < w.size() && match; ++t)
      if (word[offset + t] != w[t]) match = false;
    if (match) return true;
  }
  return false;
}

}  // namespace

TimeSet generalized_hitting_set_oracle(const SubshiftSpec& spec,
                                       const std::vector<CylinderUnion>& us,
                                       int horizon) {
  if (us.size() < 2) throw InvalidArgument("need d >= 2 cylinder unions");
  int d = static_cast<int>(us.size());
  int maxlen = 0;
  for (const CylinderUnion& u : us) maxlen = std::max(maxlen, u.max_len());

  TimeSet out;
  out.horizon = horizon;
  std::map<int, std::vector<Word>> cache;
  for (int n = 1; n <= horizon; ++n) {
    int span = (d - 1) * n + maxlen;
    auto it = cache.find(span);
    if (it == cache.end())
      it = cache.emplace(span, enumerate_words_direct(spec, span)).first;
    for (const Word& word : it->second) {
      bool all = true;
      for (int i = 0; i < d && all; ++i)
        if (!word_hits(word, us[i], i * n)) all = false;
      if (all) {
        out.members.push_back(n);
        break;
      }
    }
  }
  return out;
}

OracleCorpus default_oracle_corpus() {
  OracleCorpus corpus;
  auto full2 = SubshiftSpec::from_matrix(2, {{1, 1}, {1, 1}}, "full2");
  auto golden = SubshiftSpec::from_matrix(2, {{1, 1}, {1, 0}}, "golden-mean");
  auto cycle2 = SubshiftSpec::from_matrix(2, {{0, 1}, {1, 0}}, "cycle2");
  auto no111 = SubshiftSpec::from_forbidden_words(2, {Word::parse("111")},
                                                  "no111");
  auto full3 = SubshiftSpec::from_matrix(3, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
                                         "full3");
  auto loop3 = SubshiftSpec::from_matrix(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}},
                                         "loop3");
  corpus.specs = {{"full2", full2},   {"golden-mean", golden},
                  {"cycle2", cycle2}, {"no111", no111},
                  {"full3", full3},   {"loop3", loop3}};

  auto words_upto = [](const SubshiftSpec& spec, int maxlen) {
    std::vector<Word> out;
    for (int len = 1; len <= maxlen; ++len)
      for (const Word& w : spec.language(len)) out.push_back(w);
    return out;
  };

  // pairs over words of length <= 2, horizon 8 (span <= 10)
  for (int si : {0, 1, 2, 3}) {
    auto words = words_upto(corpus.specs[si].second, 2);
    for (const Word& u : words)
      for (const Word& v : words)
        corpus.queries.push_back(
            {si, 8, {CylinderUnion({u}), CylinderUnion({v})}});
  }
  // triples over single symbols, horizon 6 (span <= 13)
  for (int si : {0, 1, 2, 3}) {
    auto words = words_upto(corpus.specs[si].second, 1);
    for (const Word& u : words)
      for (const Word& v : words)
        for (const Word& w : words)
          corpus.queries.push_back({si, 6,
                                    {CylinderUnion({u}), CylinderUnion({v}),
                                     CylinderUnion({w})}});
  }
  // three-letter alphabets: pairs at horizon 6, triples at horizon 4
  for (int si : {4, 5}) {
    auto words = words_upto(corpus.specs[si].second, 1);
    for (const Word& u : words)
      for (const Word& v : words)
        corpus.queries.push_back(
            {si, 6, {CylinderUnion({u}), CylinderUnion({v})}});
    for (const Word& u : words)
      for (const Word& v : words)
        for (const Word& w : words)
          corpus.queries.push_back({si, 4,
                                    {CylinderUnion({u}), CylinderUnion({v}),
                                     CylinderUnion({w})}});
  }
  // a few genuine unions
  for (int si : {0, 1}) {
    corpus.queries.push_back({si, 8,
                              {CylinderUnion::parse("0,10"),
                               CylinderUnion::parse("1")}});
    corpus.queries.push_back({si, 8,
                              {CylinderUnion::parse("00,01"),
                               CylinderUnion::parse("10,0")}});
    corpus.queries.push_back({si, 6,
                              {CylinderUnion::parse("0"),
                               CylinderUnion::parse("01,10"),
                               CylinderUnion::parse("1,00")}});
  }
  return corpus;
}

std::string corpus_to_text(const OracleCorpus& corpus) {
  std::ostringstream os;
  os << "deltamix-oracle-corpus v1\n";
  for (const auto& [name, spec] : corpus.specs) {
    os << "spec " << name << " ";
    if (spec.origin() == "matrix") {
      os << "matrix " << spec.alphabet_size() << " ";
      for (int i = 0; i < spec.alphabet_size(); ++i) {
        if (i) os << ",";
        for (int j = 0; j < spec.alphabet_size(); ++j)
          os << spec.matrix()[i][j];
      }
    } else {
      os << "forbidden " << spec.alphabet_size() << " ";
      const auto& fw = spec.forbidden_words();
      for (size_t i = 0; i < fw.size(); ++i) {
        if (i) os << ",";
        os << fw[i].text();
      }
    }
    os << "\n";
  }
  for (const OracleQuery& q : corpus.queries) {
    os << "query " << corpus.specs[q.spec_index].first << " d=" << q.sets.size()
       << " horizon=" << q.horizon << " sets=";
    for (size_t i = 0; i < q.sets.size(); ++i) {
      if (i) os << "|";
      os << q.sets[i].text();
    }
    os << "\n";
  }
  return os.str();
}

OracleCorpus parse_corpus(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "deltamix-oracle-corpus v1")
    throw IoError("not a deltamix-oracle-corpus v1 document");
  OracleCorpus corpus;
  std::map<std::string, int> index;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "spec") {
      std::string name, form;
      int k;
      std::string payload;
      ls >> name >> form >> k >> payload;
      if (form == "matrix") {
        std::vector<std::vector<int>> rows;
        std::istringstream ps(payload);
        std::string row;
        while (std::getline(ps, row, ',')) {
          std::vector<int> r;
          for (char c : row) r.push_back(c - '0');
          rows.push_back(r);
        }
        index[name] = static_cast<int>(corpus.specs.size());
        corpus.specs.emplace_back(name,
                                  SubshiftSpec::from_matrix(k, rows, name));
      } else if (form == "forbidden") {
        std::vector<Word> fw;
        std::istringstream ps(payload);
        std::string w;
        while (std::getline(ps, w, ',')) fw.push_back(Word::parse(w));
        index[name] = static_cast<int>(corpus.specs.size());
        corpus.specs.emplace_back(
            name, SubshiftSpec::from_forbidden_words(k, fw, name));
      } else {
        throw IoError("unknown spec form: " + form);
      }
    } else if (kind == "query") {
      std::string name, field;
      ls >> name;
      if (!index.count(name)) throw IoError("query names unknown spec " + name);
      OracleQuery q;
      q.spec_index = index[name];
      while (ls >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw IoError("bad query field " + field);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "horizon") q.horizon = std::stoi(value);
        else if (key == "d") { /* implied by sets */ }
        else if (key == "sets") {
          std::istringstream ss(value);
          std::string one;
          while (std::getline(ss, one, '|'))
            q.sets.push_back(CylinderUnion::parse(one));
        } else {
          throw IoError("bad query field " + field);
        }
      }
      corpus.queries.push_back(std::move(q));
    } else {
      throw IoError("unknown corpus line: " + line);
    }
  }
  return corpus;
}

OracleDiffResult oracle_diff(const OracleCorpus& corpus) {
  OracleDiffResult out;
  for (size_t qi = 0; qi < corpus.queries.size(); ++qi) {
    const OracleQuery& q = corpus.queries[qi];
    const SubshiftSpec& spec = corpus.specs[q.spec_index].second;
    TimeSet fast = generalized_hitting_set(spec, q.sets, q.horizon, false);
    TimeSet slow = generalized_hitting_set_oracle(spec, q.sets, q.horizon);
    ++out.total;
    if (fast.members != slow.members) {
      ++out.mismatches;
      std::ostringstream os;
      os << "query " << qi << " (" << corpus.specs[q.spec_index].first
         << "): fast {";
      for (int n : fast.members) os << n << " ";
      os << "} oracle {";
      for (int n : slow.members) os << n << " ";
      os << "}";
      out.detail.push_back(os.str());
    }
  }
  return out;
}

}  // namespace deltamix
