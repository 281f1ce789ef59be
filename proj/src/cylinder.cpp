#include "deltamix/cylinder.hpp"

#include <algorithm>
#include <sstream>

#include "deltamix/errors.hpp"

namespace deltamix {

CylinderUnion::CylinderUnion(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  // drop words covered by a shorter member
  for (const Word& w : words) {
    bool shadowed = false;
    for (const Word& u : cylinders)
      if (u.is_prefix_of(w) && u.size() < w.size()) { shadowed = true; break; }
    if (!shadowed) cylinders.push_back(w);
  }
  std::sort(cylinders.begin(), cylinders.end());
}

CylinderUnion CylinderUnion::parse(const std::string& text) {
  std::vector<Word> words;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    if (cur.empty()) continue;
    words.push_back(Word::parse(cur));
  }
  if (words.empty()) throw InvalidArgument("empty cylinder union text");
  return CylinderUnion(std::move(words));
}

int CylinderUnion::max_len() const {
  int m = 0;
  for (const Word& w : cylinders) m = std::max(m, w.size());
  return m;
}

std::string CylinderUnion::text() const {
  std::string out;
  for (size_t i = 0; i < cylinders.size(); ++i) {
    if (i) out += ",";
    out += cylinders[i].text();
  }
  return out;
}

bool CylinderUnion::nonempty_in(const SubshiftSpec& spec) const {
  for (const Word& w : cylinders)
    if (spec.word_allowed(w)) return true;
  return false;
}

CylinderUnion CylinderUnion::restricted_to(const SubshiftSpec& spec) const {
  std::vector<Word> kept;
  for (const Word& w : cylinders)
    if (spec.word_allowed(w)) kept.push_back(w);
  CylinderUnion out;
  out.cylinders = std::move(kept);
  return out;
}

bool CylinderUnion::contains_word_prefix(const Word& w) const {
  for (const Word& u : cylinders)
    if (u.is_prefix_of(w)) return true;
  return false;
}

bool CylinderUnion::disjoint_from(const CylinderUnion& other) const {
  for (const Word& u : cylinders)
    for (const Word& v : other.cylinders)
      if (u.is_prefix_of(v) || v.is_prefix_of(u)) return false;
  return true;
}

CylinderUnion intersect(const SubshiftSpec& spec, const CylinderUnion& u,
                        const CylinderUnion& v) {
  std::vector<Word> words;
  for (const Word& a : u.cylinders)
    for (const Word& b : v.cylinders) {
      if (a.is_prefix_of(b)) {
        if (spec.word_allowed(b)) words.push_back(b);
      } else if (b.is_prefix_of(a)) {
        if (spec.word_allowed(a)) words.push_back(a);
      }
    }
  CylinderUnion out{std::move(words)};
  out = CylinderUnion(out.cylinders);
  return out;
}

CylinderUnion intersect_shifted(const SubshiftSpec& spec, const CylinderUnion& u,
                                int m, const CylinderUnion& v,
                                long long enumeration_cap) {
  if (m < 0) throw InvalidArgument("shift must be non-negative");
  std::vector<Word> words;
  for (const Word& a : u.cylinders) {
    for (const Word& b : v.cylinders) {
      int span = std::max(a.size(), m + b.size());
      // fixed positions from a at 0 and b at m; conflict kills this pair
      std::vector<Symbol> fixed(span, -1);
      bool ok = true;
      for (int i = 0; i < a.size(); ++i) fixed[i] = a[i];
      for (int i = 0; i < b.size() && ok; ++i) {
        int pos = m + i;
        if (fixed[pos] >= 0 && fixed[pos] != b[i]) ok = false;
        fixed[pos] = b[i];
      }
      if (!ok) continue;
      // enumerate completions depth-first in symbol order
      long long budget = enumeration_cap;
      std::vector<Symbol> buf;
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == span) {
          words.emplace_back(buf);
          return;
        }
        for (Symbol s = 0; s < spec.alphabet_size(); ++s) {
          if (fixed[pos] >= 0 && fixed[pos] != s) continue;
          buf.push_back(s);
          if (spec.word_allowed(Word{buf})) {
            if (--budget < 0)
              throw CapExceeded("intersection enumeration exceeded its cap");
            self(self, pos + 1);
          }
          buf.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  return CylinderUnion(std::move(words));
}

}  // namespace deltamix
