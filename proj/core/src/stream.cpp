#include "knead/stream.hpp"

#include <algorithm>

namespace knead {

namespace {

// Base symbol order 0 < * < 1.
inline int rank(char c) {
  switch (c) {
    case '0': return 0;
    case '*': return 1;
    case '1': return 2;
  }
  return -1;
}

}  // namespace

SymbolStream::SymbolStream(Word prefix, std::string generator_tag)
    : prefix_(prefix.str()), tag_(std::move(generator_tag)) {
  if (prefix.has_star()) throw WordError("symbol streams carry no '*'");
}

SymbolStream::SymbolStream(std::string prefix, std::string generator_tag)
    : SymbolStream(Word(std::move(prefix)), std::move(generator_tag)) {}

SymbolStream SymbolStream::shifted(std::size_t k) const {
  if (k > horizon()) {
    throw HorizonError("shift by " + std::to_string(k) + " exceeds horizon " +
                       std::to_string(horizon()));
  }
  return SymbolStream(prefix_.substr(k), tag_);
}

Ordering parity_lex_cmp(std::string_view t, std::string_view s) {
  const std::size_t window = std::min(t.size(), s.size());
  std::size_t ones = 0;
  for (std::size_t n = 0; n < window; ++n) {
    if (t[n] != s[n]) {
      const bool t_less_base = rank(t[n]) < rank(s[n]);
      const bool t_precedes = (ones % 2 == 0) ? t_less_base : !t_less_base;
      return t_precedes ? Ordering::precedes : Ordering::follows;
    }
    if (t[n] == '1') ++ones;
  }
  return Ordering::equal_up_to_horizon;
}

Ordering parity_lex_cmp(const SymbolStream& t, const SymbolStream& s) {
  return parity_lex_cmp(std::string_view(t.prefix()), std::string_view(s.prefix()));
}

std::vector<std::size_t> z_array(const std::string& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;  // rightmost match window [l, r)
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = 0;
    if (i < r) k = std::min(r - i, z[i - l]);
    while (i + k < n && s[k] == s[i + k]) ++k;
    z[i] = k;
    if (i + k > r) {
      l = i;
      r = i + k;
    }
  }
  return z;
}

ShiftMaximality is_shift_maximal(const SymbolStream& k) {
  const std::string& s = k.prefix();
  const std::size_t n = s.size();
  const auto z = z_array(s);

  // ones[i] = number of 1s in s[0, i)
  std::vector<std::uint32_t> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + (s[i] == '1');

  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t d = z[j];       // first disagreement of shift^j(K) with K
    if (j + d >= n) continue;         // equal up to horizon
    const bool shift_bigger_base = s[j + d] > s[d];
    const bool follows = (ones[d] % 2 == 0) ? shift_bigger_base : !shift_bigger_base;
    if (follows) return {false, j};
  }
  return {true, std::nullopt};
}

Primarity is_primary(const SymbolStream& k, std::size_t max_block) {
  const std::string& s = k.prefix();
  const std::size_t n = s.size();
  Primarity out;
  for (std::size_t len = 2; len <= max_block; ++len) {
    bool refuted = false;
    // Positions p with p % len != len-1 must repeat the leading block W.
    for (std::size_t p = len; p < n && !refuted; ++p) {
      if (p % len == len - 1) continue;
      if (s[p] != s[p % len]) refuted = true;
    }
    if (refuted) continue;
    if (n >= 2 * len) {
      out.verdict = PrimarityVerdict::star_product;
      out.witness = Word(s.substr(0, len - 1));
      return out;
    }
    out.unrefuted_lens.push_back(len);
  }
  out.verdict = out.unrefuted_lens.empty() ? PrimarityVerdict::primary_at_horizon
                                           : PrimarityVerdict::unknown;
  return out;
}

Admissibility is_admissible_kneading(const SymbolStream& k, std::size_t max_block) {
  Admissibility out;
  if (k.horizon() == 0) throw HorizonError("admissibility of an empty stream");

  const auto sm = is_shift_maximal(k);
  if (!sm.maximal_at_horizon) {
    out.reasons.push_back(RejectReason::shift_maximality);
    out.shift_witness = sm.witness;
  }

  const auto pr = is_primary(k, max_block);
  if (pr.verdict == PrimarityVerdict::star_product) {
    out.reasons.push_back(RejectReason::primarity);
  }

  // 101^inf must not follow K.
  std::string bound = "10";
  bound.append(k.horizon() > 2 ? k.horizon() - 2 : 0, '1');
  if (parity_lex_cmp(std::string_view(bound), std::string_view(k.prefix())) ==
      Ordering::follows) {
    out.reasons.push_back(RejectReason::lower_bound);
  }

  if (!out.reasons.empty()) {
    out.verdict = AdmissibilityVerdict::rejected;
  } else if (pr.verdict == PrimarityVerdict::unknown) {
    out.verdict = AdmissibilityVerdict::unknown;
  } else {
    out.verdict = AdmissibilityVerdict::admissible_at_horizon;
  }
  return out;
}

Admissibility is_admissible_kneading(const SymbolStream& k) {
  return is_admissible_kneading(k, default_max_block(k));
}

}  // namespace knead
