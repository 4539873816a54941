#include "knead/tent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace knead {

namespace {

const QuadRat kHalf(mpq_class(1, 2), 0);
const QuadRat kOne(1);

std::size_t mpq_bits(const mpq_class& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

}  // namespace

int QuadRat::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against 2 b^2.
  const mpq_class d = a_ * a_ - 2 * b_ * b_;
  const int sd = sgn(d);
  // a > 0 > b: positive iff a^2 > 2 b^2.
  return sa > 0 ? sd : -sd;
}

double QuadRat::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::string QuadRat::to_string() const {
  std::ostringstream os;
  os << a_.get_str();
  if (b_ != 0) os << (sgn(b_) > 0 ? "+" : "") << b_.get_str() << "*sqrt2";
  return os.str();
}

std::size_t QuadRat::bit_size() const { return mpq_bits(a_) + mpq_bits(b_); }

QuadRat QuadRat::from_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    return QuadRat(mpq_class(text), 0);  // handles "2" and "7/4"
  }
  const std::string ip = text.substr(0, dot);
  const std::string fp = text.substr(dot + 1);
  if (fp.empty()) return QuadRat(mpq_class(ip), 0);
  mpz_class num(ip.empty() ? "0" : ip);
  mpz_class den(1);
  for (char c : fp) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal: " + text);
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return QuadRat(mpq_class(num, den), 0);
}

TentParam::TentParam(QuadRat slope, std::size_t digits) : q(std::move(slope)), precision_digits(digits) {
  if (q < QuadRat::sqrt2() || q > QuadRat(2)) {
    throw std::invalid_argument("tent slope must lie in [sqrt2, 2], got " + q.to_string());
  }
}

TentParam TentParam::parse(const std::string& text, std::size_t digits) {
  if (text == "sqrt2") return TentParam(QuadRat::sqrt2(), digits);
  return TentParam(QuadRat::from_decimal(text), digits);
}

QuadRat tent_eval(const TentParam& q, const QuadRat& x) {
  if (x.sign() < 0 || x > kOne) {
    throw std::invalid_argument("tent_eval argument outside [0,1]");
  }
  return x <= kHalf ? q.q * x : q.q * (kOne - x);
}

namespace {

// Shared iterator: emits into `out`, stopping at '*' or length.
void itinerary_into(const TentParam& q, QuadRat x, std::size_t length, std::string& out) {
  if (x.sign() < 0 || x > kOne) {
    throw std::invalid_argument("itinerary argument outside [0,1]");
  }
  const std::size_t bit_budget = q.precision_digits * 4;
  for (std::size_t i = 0; i < length; ++i) {
    if (x.bit_size() > bit_budget) {
      throw PrecisionError("orbit coefficients exceed the precision budget", i);
    }
    const int c = (x - kHalf).sign();
    if (c == 0) {
      out.push_back('*');
      return;
    }
    out.push_back(c < 0 ? '0' : '1');
    x = x <= kHalf ? q.q * x : q.q * (kOne - x);
  }
}

}  // namespace

Word itinerary(const TentParam& q, const QuadRat& x, std::size_t length) {
  std::string out;
  out.reserve(length);
  itinerary_into(q, x, length, out);
  return Word(out);
}

SymbolStream kneading_prefix(const TentParam& q, std::size_t length) {
  if (length == 0) throw std::invalid_argument("kneading prefix needs length >= 1");
  const Word w = itinerary(q, tent_eval(q, kHalf), length);
  if (w.has_star()) {
    throw std::domain_error("kneading prefix hit the critical point (superstable slope)");
  }
  return SymbolStream(w, "tent(q=" + q.q.to_string() + ")");
}

namespace {

// Kneading prefix as a raw word; '*' allowed (superstable midpoints occur
// during bisection and compare via 0 < * < 1).
std::string kneading_word(const TentParam& q, std::size_t length) {
  std::string out;
  out.reserve(length);
  itinerary_into(q, tent_eval(q, kHalf), length, out);
  return out;
}

}  // namespace

ParameterBracket find_parameter(const SymbolStream& k, std::size_t iterations,
                                std::size_t compare_horizon) {
  if (k.horizon() == 0) throw FindParameterError("empty input stream");
  const auto adm = is_admissible_kneading(k);
  if (adm.verdict == AdmissibilityVerdict::rejected) {
    throw FindParameterError("input is certified inadmissible; no tent parameter exists");
  }
  const std::size_t h = compare_horizon ? std::min(compare_horizon, k.horizon())
                                        : std::min<std::size_t>(k.horizon(), 64);
  const std::string target = k.prefix().substr(0, h);

  const auto cmp = [&](const QuadRat& q) {
    return parity_lex_cmp(std::string_view(kneading_word(TentParam(q), h)),
                          std::string_view(target));
  };

  const QuadRat bottom = QuadRat::sqrt2();
  const QuadRat top = QuadRat(2);
  const Ordering c_bottom = cmp(bottom);
  const Ordering c_top = cmp(top);
  if (c_bottom == Ordering::follows) {
    throw FindParameterError("bracket failure: bottom kneading exceeds the target");
  }
  if (c_top == Ordering::precedes) {
    throw FindParameterError("bracket failure: top kneading precedes the target");
  }

  QuadRat lo = bottom;
  if (c_bottom == Ordering::precedes) {
    // Outer lower endpoint: kneading(lo) always precedes the target.
    QuadRat a = bottom, b = top;
    for (std::size_t i = 0; i < iterations; ++i) {
      const QuadRat m = (a + b).half();
      if (cmp(m) == Ordering::precedes) {
        a = m;
      } else {
        b = m;
      }
    }
    lo = a;
  }

  QuadRat hi = top;
  if (c_top == Ordering::follows) {
    QuadRat a = bottom, b = top;
    for (std::size_t i = 0; i < iterations; ++i) {
      const QuadRat m = (a + b).half();
      if (cmp(m) == Ordering::follows) {
        b = m;
      } else {
        a = m;
      }
    }
    hi = b;
  }

  if (hi < lo) throw FindParameterError("bracket failure: inverted bracket");
  return ParameterBracket{lo, hi, h,
                          adm.verdict == AdmissibilityVerdict::admissible_at_horizon};
}

double ilim_metric(const IlimPoint& x, const IlimPoint& y) {
  if (x.depth() != y.depth()) throw std::invalid_argument("ilim_metric depth mismatch");
  double sum = 0.0, scale = 0.5;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    sum += std::abs(x.coords[i] - y.coords[i]) * scale;
    scale *= 0.5;
  }
  return sum;
}

IlimPoint backward_orbit(const TentParam& q, const QuadRat& x0,
                         const std::vector<bool>& branch_bits) {
  IlimPoint p;
  QuadRat x = x0;
  p.coords.push_back(x.to_double());
  const QuadRat inv_bound = q.q.half();
  for (bool right : branch_bits) {
    if (x > inv_bound) {
      throw std::invalid_argument("point has no tent preimage inside [0,1]");
    }
    // Solve f(y) = x: left branch y = x/q, right branch y = 1 - x/q.
    const QuadRat ratio = QuadRat(x.rational_part(), x.sqrt2_part()) *
                          QuadRat(mpq_class(1), 0);  // copy
    // x / q in Q(sqrt2): multiply by conjugate.
    const mpq_class a = q.q.rational_part(), b = q.q.sqrt2_part();
    const mpq_class norm = a * a - 2 * b * b;
    const QuadRat inv_q = (norm != 0)
                              ? QuadRat(a / norm, -b / norm)
                              : QuadRat(0, mpq_class(1) / (2 * b));  // pure sqrt2 slope
    QuadRat y = ratio * inv_q;
    if (right) y = kOne - y;
    p.coords.push_back(y.to_double());
    x = y;
  }
  return p;
}

ProbeResult continuity_probe_N(const TentParam& q, double eps, std::size_t samples) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  constexpr std::size_t kMaxN = 48;
  std::vector<double> xs;
  std::vector<std::string> its;
  xs.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const QuadRat x(mpq_class(2 * i + 1, 2 * samples), 0);
    std::string w;
    itinerary_into(q, x, kMaxN, w);
    if (!w.empty() && w.back() == '*') continue;  // precritical sample
    xs.push_back(x.to_double());
    its.push_back(std::move(w));
  }
  for (std::size_t n = 0; n <= kMaxN; ++n) {
    double worst = 0.0;
    double lo = xs.empty() ? 0.0 : xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const bool same = its[i].compare(0, n, its[i - 1], 0, n) == 0;
      if (!same) {
        worst = std::max(worst, xs[i - 1] - lo);
        lo = xs[i];
      }
    }
    if (!xs.empty()) worst = std::max(worst, xs.back() - lo);
    if (worst < eps) return {n, 0.0, xs.size()};
  }
  return {kMaxN, 0.0, xs.size()};
}

ProbeResult continuity_probe_eps(const TentParam& q, std::size_t n, std::size_t samples) {
  if (n == 0) return {0, 1.0, 0};
  std::vector<double> xs;
  std::vector<std::string> its;
  for (std::size_t i = 0; i < samples; ++i) {
    const QuadRat x(mpq_class(2 * i + 1, 2 * samples), 0);
    std::string w;
    itinerary_into(q, x, n, w);
    if (!w.empty() && w.back() == '*') continue;
    xs.push_back(x.to_double());
    its.push_back(std::move(w));
  }
  double gap = 1.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (its[i] != its[i - 1]) gap = std::min(gap, xs[i] - xs[i - 1]);
  }
  return {n, gap, xs.size()};
}

}  // namespace knead
