#include "knead/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace knead {

OrdinalCNF::OrdinalCNF(std::uint64_t n) {
  if (n > 0) terms_.push_back({0, n});
}

OrdinalCNF::OrdinalCNF(std::vector<Term> terms) {
  std::map<std::uint32_t, std::uint64_t, std::greater<>> merged;
  for (const Term& t : terms) {
    if (t.coefficient == 0) throw OrdinalError("zero coefficient in CNF term");
    merged[t.exponent] += t.coefficient;
  }
  for (const auto& [e, c] : merged) terms_.push_back({e, c});
}

bool OrdinalCNF::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
}

std::uint64_t OrdinalCNF::finite_value() const {
  if (!is_finite()) throw OrdinalError("ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool OrdinalCNF::is_successor() const {
  return !terms_.empty() && terms_.back().exponent == 0;
}

OrdinalCNF OrdinalCNF::successor() const {
  std::vector<Term> t = terms_;
  if (!t.empty() && t.back().exponent == 0) {
    t.back().coefficient += 1;
  } else {
    t.push_back({0, 1});
  }
  OrdinalCNF out;
  out.terms_ = std::move(t);
  return out;
}

OrdinalCNF OrdinalCNF::predecessor() const {
  if (!is_successor()) throw OrdinalError("predecessor of a non-successor");
  std::vector<Term> t = terms_;
  if (t.back().coefficient > 1) {
    t.back().coefficient -= 1;
  } else {
    t.pop_back();
  }
  OrdinalCNF out;
  out.terms_ = std::move(t);
  return out;
}

OrdinalCNF OrdinalCNF::fundamental(std::uint64_t k) const {
  if (!is_limit()) throw OrdinalError("fundamental sequence of a non-limit ordinal");
  if (k == 0) throw OrdinalError("fundamental sequence is 1-based");
  std::vector<Term> t = terms_;
  const Term last = t.back();
  t.pop_back();
  if (last.coefficient > 1) t.push_back({last.exponent, last.coefficient - 1});
  // last.exponent >= 1 since *this is a limit.
  t.push_back({last.exponent - 1, k});
  return OrdinalCNF(std::move(t));
}

std::strong_ordering OrdinalCNF::operator<=>(const OrdinalCNF& rhs) const {
  const std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].exponent != rhs.terms_[i].exponent) {
      return terms_[i].exponent <=> rhs.terms_[i].exponent;
    }
    if (terms_[i].coefficient != rhs.terms_[i].coefficient) {
      return terms_[i].coefficient <=> rhs.terms_[i].coefficient;
    }
  }
  return terms_.size() <=> rhs.terms_.size();
}

std::string OrdinalCNF::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << '+';
    first = false;
    if (t.exponent == 0) {
      os << t.coefficient;
    } else {
      os << 'w';
      if (t.exponent > 1) os << '^' << t.exponent;
      if (t.coefficient > 1) os << '*' << t.coefficient;
    }
  }
  return os.str();
}

OrdinalCNF OrdinalCNF::parse(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_nat = [&]() -> std::uint64_t {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw OrdinalError("expected number in ordinal: " + std::string(text));
    }
    std::uint64_t n = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      n = n * 10 + static_cast<std::uint64_t>(text[i] - '0');
      ++i;
    }
    return n;
  };
  skip_ws();
  while (i < text.size()) {
    std::uint32_t exp = 0;
    std::uint64_t coef = 0;
    if (text[i] == 'w') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        exp = static_cast<std::uint32_t>(read_nat());
      }
      coef = 1;
      if (i < text.size() && text[i] == '*') {
        ++i;
        coef = read_nat();
      }
    } else {
      coef = read_nat();
    }
    if (coef > 0) terms.push_back({exp, coef});
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '+') throw OrdinalError("expected '+' in ordinal: " + std::string(text));
      ++i;
      skip_ws();
    }
  }
  return OrdinalCNF(std::move(terms));
}

}  // namespace knead
