// Prefix-presented one-sided symbol streams and the kneading predicates.
//
// Every predicate on an infinite object is tri-state: it reports what the
// stored prefix certifies and says "unknown at horizon" otherwise. Nothing
// here ever extrapolates past the horizon.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knead/word.hpp"

namespace knead {

class HorizonError : public std::runtime_error {
 public:
  explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

// A trusted finite prefix of an infinite 0/1 stream.
class SymbolStream {
 public:
  SymbolStream() = default;
  explicit SymbolStream(Word prefix, std::string generator_tag = {});
  explicit SymbolStream(std::string prefix, std::string generator_tag = {});

  const std::string& prefix() const { return prefix_; }
  std::size_t horizon() const { return prefix_.size(); }
  const std::string& generator_tag() const { return tag_; }
  char operator[](std::size_t i) const { return prefix_[i]; }

  // Drops k symbols; horizon decreases by k. k > horizon is an error.
  SymbolStream shifted(std::size_t k) const;

  bool operator==(const SymbolStream&) const = default;

 private:
  std::string prefix_;
  std::string tag_;
};

enum class Ordering { precedes, follows, equal_up_to_horizon };

// Parity-lexicographic comparison: base order 0 < * < 1, flipped at the
// first disagreement when an odd number of 1s precedes it. Total on the
// comparable window; equal_up_to_horizon when no disagreement is visible.
Ordering parity_lex_cmp(const SymbolStream& t, const SymbolStream& s);

// Raw-text variant; accepts '*' (itineraries may end with one).
Ordering parity_lex_cmp(std::string_view t, std::string_view s);

struct ShiftMaximality {
  bool maximal_at_horizon = false;
  std::optional<std::size_t> witness;  // least j with shift^j(K) following K
};

// Checks shift^j(K) against K for every j in [1, horizon), each on the
// comparable window. Linear time via the Z-array.
ShiftMaximality is_shift_maximal(const SymbolStream& k);

enum class PrimarityVerdict { primary_at_horizon, star_product, unknown };

struct Primarity {
  PrimarityVerdict verdict = PrimarityVerdict::unknown;
  std::optional<Word> witness;              // the W of a confirmed product form
  std::vector<std::size_t> unrefuted_lens;  // block lengths the prefix could not refute
};

// Tests the product form W u1 W u2 W ... for every block length in
// [2, max_block]. A block length is confirmed only when the prefix shows
// the pattern at least twice (horizon >= 2*len); an unrefuted but
// unconfirmed length yields unknown.
Primarity is_primary(const SymbolStream& k, std::size_t max_block);

inline std::size_t default_max_block(const SymbolStream& k) {
  return std::max<std::size_t>(2, k.horizon() / 4);
}

enum class AdmissibilityVerdict { admissible_at_horizon, rejected, unknown };
enum class RejectReason { shift_maximality, primarity, lower_bound };

struct Admissibility {
  AdmissibilityVerdict verdict = AdmissibilityVerdict::unknown;
  std::vector<RejectReason> reasons;  // every failed conjunct
  std::optional<std::size_t> shift_witness;
};

// Conjunction of shift-maximality, primarity and the 101^inf lower bound.
Admissibility is_admissible_kneading(const SymbolStream& k, std::size_t max_block);
Admissibility is_admissible_kneading(const SymbolStream& k);

// lcp(K, shift^j(K)) for every j; z[0] = n.
std::vector<std::size_t> z_array(const std::string& s);

}  // namespace knead
