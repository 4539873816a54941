// Ordinals below w^w in Cantor normal form: sum of w^e * c terms with
// strictly decreasing exponents and positive coefficients.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knead {

class OrdinalError : public std::runtime_error {
 public:
  explicit OrdinalError(const std::string& what) : std::runtime_error(what) {}
};

class OrdinalCNF {
 public:
  struct Term {
    std::uint32_t exponent;
    std::uint64_t coefficient;
    auto operator<=>(const Term&) const = default;
  };

  OrdinalCNF() = default;  // zero
  explicit OrdinalCNF(std::uint64_t n);
  explicit OrdinalCNF(std::vector<Term> terms);

  // "w^2*3+w*1+4", "w", "w^3", "0", "w*2+1". Terms in any order are
  // normalized; equal exponents merge.
  static OrdinalCNF parse(std::string_view text);

  static OrdinalCNF omega() { return OrdinalCNF({Term{1, 1}}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  std::uint64_t finite_value() const;  // requires is_finite()

  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }

  OrdinalCNF successor() const;
  OrdinalCNF predecessor() const;  // requires is_successor()

  // k-th term (k >= 1) of the canonical fundamental sequence of a limit
  // ordinal: for a trailing term w^e*c the sequence ascends through
  // prefix + w^e*(c-1) + w^(e-1)*k.
  OrdinalCNF fundamental(std::uint64_t k) const;

  std::string to_string() const;

  std::strong_ordering operator<=>(const OrdinalCNF& rhs) const;
  bool operator==(const OrdinalCNF&) const = default;

 private:
  std::vector<Term> terms_;  // strictly decreasing exponents
};

inline OrdinalCNF ordinal_max(const OrdinalCNF& a, const OrdinalCNF& b) {
  return a < b ? b : a;
}

}  // namespace knead
