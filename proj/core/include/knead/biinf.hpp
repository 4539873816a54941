// Bi-infinite eventually-periodic symbol sequences.
//
// A BiInfWord is ...LLL C RRR... with an origin marker: the left tail L
// repeats leftward, the right tail R rightward, and the finite center C
// covers absolute positions [-origin_offset, |C|-origin_offset). Symbol
// at(p) is total for every integer p.
//
// Construction canonicalizes: tails are primitive, the center is minimal
// (periodic material is absorbed into the tails), and a globally periodic
// sequence is stored with empty center, L == R and the root aligned at the
// origin. Two BiInfWords are equal as values iff they induce the same
// function on the integers, so canonical-field equality is used for
// deduplicating shift lists.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "knead/word.hpp"

namespace knead {

class BiInfWord {
 public:
  // left/right must be nonempty 0/1 words; center 0/1, possibly empty.
  BiInfWord(Word left_tail, Word center, Word right_tail, long origin_offset);

  // "(01)^-inf 0 . 1 (10)^inf" — tails first/last, dot splits the center.
  static BiInfWord parse(std::string_view text);

  const Word& left_tail() const { return left_; }
  const Word& center() const { return center_; }
  const Word& right_tail() const { return right_; }
  long origin_offset() const { return offset_; }

  // True when the sequence is periodic in both directions with one root.
  bool periodic() const { return center_.empty() && left_ == right_; }

  char at(long p) const;

  // Window [from, to) as a string.
  std::string window(long from, long to) const;

  // y = shifted(k) has y(p) = x(p+k); the origin dot moves k steps right.
  BiInfWord shifted(long k) const;

  std::string to_string() const;

  bool operator==(const BiInfWord&) const = default;

 private:
  void canonicalize();

  Word left_, center_, right_;
  long offset_ = 0;
};

}  // namespace knead
