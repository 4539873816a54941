// Finite words over the itinerary alphabet {0, 1, *}.
//
// The '*' symbol marks a critical hit and may appear at most once, only as
// the final symbol. Words over {0,1} are the working currency of the block
// constructions; run-length sugar ("1^5(01)^3") is accepted on parse.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knead {

class WordError : public std::runtime_error {
 public:
  explicit WordError(const std::string& what) : std::runtime_error(what) {}
};

class Word {
 public:
  Word() = default;

  // Validates the alphabet and the *-placement invariant.
  explicit Word(std::string symbols);

  // Accepts run-length sugar: items are '0', '1', '*' or '(word)',
  // each optionally followed by ^<count>. "1^5(01)^3" -> "11111010101".
  static Word parse(std::string_view text);

  static Word zeros(std::size_t n) { return Word(std::string(n, '0')); }
  static Word ones(std::size_t n) { return Word(std::string(n, '1')); }

  const std::string& str() const { return s_; }
  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  char operator[](std::size_t i) const { return s_[i]; }

  bool has_star() const { return !s_.empty() && s_.back() == '*'; }
  bool contains_one() const { return s_.find('1') != std::string::npos; }

  Word operator+(const Word& rhs) const;
  Word pow(std::size_t k) const;

  bool operator==(const Word&) const = default;

 private:
  std::string s_;
};

// Shortest P with A = P^k; |P| divides |A|.
Word primitive_root(const Word& a);

// True iff the primitive roots of a and b are cyclic rotations of each
// other, i.e. the periodic extensions of a and b are shift-related.
bool word_conjugate_equiv(const Word& a, const Word& b);

// Rotation helpers (used by the canonical bi-infinite form).
Word rotate_left(const Word& w, std::size_t k = 1);
Word rotate_right(const Word& w, std::size_t k = 1);

// Lexicographically least rotation of the primitive root: the canonical
// representative of a conjugacy class.
Word conjugacy_canonical(const Word& a);

std::size_t leading_zero_run(const Word& w);
std::size_t trailing_zero_run(const Word& w);
std::size_t max_internal_zero_run(const Word& w);

// Worst zero-run over all concatenations of the given words: the max of
// each word's internal runs and trailing(X)+leading(Y) over ordered pairs.
// Every word must contain a 1.
std::size_t max_zero_run_closure(const std::vector<Word>& words);

}  // namespace knead
