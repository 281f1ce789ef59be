#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "deltamix/errors.hpp"

namespace deltamix {

using Symbol = int;

// A finite block of symbols. The empty word is the whole-space cylinder.
struct Word {
  std::vector<Symbol> syms;

  Word() = default;
  explicit Word(std::vector<Symbol> s) : syms(std::move(s)) {}

  int size() const { return static_cast<int>(syms.size()); }
  bool empty() const { return syms.empty(); }
  Symbol operator[](int i) const { return syms[static_cast<size_t>(i)]; }

  auto operator<=>(const Word&) const = default;

  bool is_prefix_of(const Word& other) const {
    if (size() > other.size()) return false;
    for (int i = 0; i < size(); ++i)
      if (syms[i] != other.syms[i]) return false;
    return true;
  }

  Word prefix(int n) const {
    return Word(std::vector<Symbol>(syms.begin(), syms.begin() + n));
  }
  Word suffix_from(int i) const {
    return Word(std::vector<Symbol>(syms.begin() + i, syms.end()));
  }

  // Alphabet symbols render as single characters (digits, then letters).
  static char symbol_char(Symbol s) {
    static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    return digits[s];
  }
  static Symbol char_symbol(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    throw InvalidArgument(std::string("bad symbol character '") + c + "'");
  }

  std::string text() const {
    if (empty()) return "*";
    std::string out;
    out.reserve(syms.size());
    for (Symbol s : syms) out.push_back(symbol_char(s));
    return out;
  }

  static Word parse(const std::string& text) {
    if (text == "*") return Word();
    std::vector<Symbol> s;
    s.reserve(text.size());
    for (char c : text) s.push_back(char_symbol(c));
    return Word(std::move(s));
  }
};

}  // namespace deltamix
