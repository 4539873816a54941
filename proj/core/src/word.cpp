#include "knead/word.hpp"

#include <algorithm>
#include <cctype>

namespace knead {

Word::Word(std::string symbols) : s_(std::move(symbols)) {
  for (std::size_t i = 0; i < s_.size(); ++i) {
    const char c = s_[i];
    if (c != '0' && c != '1' && c != '*') {
      throw WordError("invalid symbol '" + std::string(1, c) + "' in word");
    }
    if (c == '*' && i + 1 != s_.size()) {
      throw WordError("'*' may only appear as the final symbol");
    }
  }
}

Word Word::parse(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  auto read_count = [&]() -> std::size_t {
    if (i >= text.size() || text[i] != '^') return 1;
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw WordError("expected count after '^'");
    }
    std::size_t n = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      n = n * 10 + static_cast<std::size_t>(text[i] - '0');
      ++i;
    }
    return n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == '0' || c == '1' || c == '*') {
      ++i;
      out.append(read_count(), c);
    } else if (c == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw WordError("unbalanced '(' in word");
      const std::string group(text.substr(i + 1, close - i - 1));
      i = close + 1;
      const std::size_t n = read_count();
      const Word inner = Word::parse(group);
      for (std::size_t k = 0; k < n; ++k) out += inner.str();
    } else {
      throw WordError("unexpected character '" + std::string(1, c) + "' in word");
    }
  }
  return Word(out);
}

Word Word::operator+(const Word& rhs) const {
  if (has_star()) throw WordError("cannot append after '*'");
  return Word(s_ + rhs.s_);
}

Word Word::pow(std::size_t k) const {
  if (has_star() && k > 1) throw WordError("cannot repeat a word ending in '*'");
  std::string out;
  out.reserve(s_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += s_;
  return Word(out);
}

Word primitive_root(const Word& a) {
  if (a.empty()) throw WordError("primitive_root of empty word");
  const std::string& s = a.str();
  const std::size_t n = s.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (s[i] == s[i - d]);
    if (ok) return Word(s.substr(0, d));
  }
  return a;  // unreachable: d = n always matches
}

bool word_conjugate_equiv(const Word& a, const Word& b) {
  const Word p = primitive_root(a);
  const Word q = primitive_root(b);
  if (p.size() != q.size()) return false;
  const std::string doubled = p.str() + p.str();
  return doubled.find(q.str()) != std::string::npos;
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return Word(w.str().substr(k) + w.str().substr(0, k));
}

Word rotate_right(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return rotate_left(w, w.size() - k);
}

Word conjugacy_canonical(const Word& a) {
  const Word p = primitive_root(a);
  Word best = p;
  for (std::size_t k = 1; k < p.size(); ++k) {
    const Word r = rotate_left(p, k);
    if (r.str() < best.str()) best = r;
  }
  return best;
}

std::size_t leading_zero_run(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w[n] == '0') ++n;
  return n;
}

std::size_t trailing_zero_run(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w[w.size() - 1 - n] == '0') ++n;
  return n;
}

std::size_t max_internal_zero_run(const Word& w) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '0') {
      ++run;
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return best;
}

std::size_t max_zero_run_closure(const std::vector<Word>& words) {
  if (words.empty()) return 0;
  std::size_t best = 0;
  for (const Word& w : words) {
    if (!w.contains_one()) throw WordError("zero-run closure requires a 1 in every word");
    best = std::max(best, max_internal_zero_run(w));
  }
  for (const Word& x : words) {
    for (const Word& y : words) {
      best = std::max(best, trailing_zero_run(x) + leading_zero_run(y));
    }
  }
  return best;
}

}  // namespace knead
