// Tent-map dynamics: certified itineraries, kneading prefixes, parameter
// recovery by bisection, and the inverse-limit metric probes.
//
// Arithmetic is exact in Q(sqrt2): every parameter reachable through the
// external interfaces is either a decimal string (a rational) or sqrt2
// itself, and [sqrt2, 2] bisection stays inside the field. Each itinerary
// symbol is an exact sign decision, so symbols are certified by
// construction; the precision budget survives as a growth guard on
// coefficient size.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knead/stream.hpp"
#include "knead/word.hpp"

namespace knead {

class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index(index) {}
  std::size_t index;
};

// a + b*sqrt(2) with exact rational coefficients.
class QuadRat {
 public:
  QuadRat() : a_(0), b_(0) {}
  QuadRat(long n) : a_(n), b_(0) {}  // NOLINT: implicit by design
  QuadRat(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) { canon(); }

  static QuadRat sqrt2() { return QuadRat(0, 1); }
  static QuadRat from_decimal(const std::string& text);  // "1.75", "2", "7/4"

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt2_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  QuadRat operator+(const QuadRat& r) const { return QuadRat(a_ + r.a_, b_ + r.b_); }
  QuadRat operator-(const QuadRat& r) const { return QuadRat(a_ - r.a_, b_ - r.b_); }
  QuadRat operator*(const QuadRat& r) const {
    return QuadRat(a_ * r.a_ + 2 * b_ * r.b_, a_ * r.b_ + b_ * r.a_);
  }
  QuadRat half() const { return QuadRat(a_ / 2, b_ / 2); }

  int sign() const;  // exact
  bool operator<(const QuadRat& r) const { return (*this - r).sign() < 0; }
  bool operator>(const QuadRat& r) const { return (*this - r).sign() > 0; }
  bool operator==(const QuadRat& r) const { return a_ == r.a_ && b_ == r.b_; }
  bool operator<=(const QuadRat& r) const { return !(*this > r); }
  bool operator>=(const QuadRat& r) const { return !(*this < r); }

  double to_double() const;
  std::string to_string() const;

  // Total bit size of all numerators/denominators; the growth guard.
  std::size_t bit_size() const;

 private:
  void canon() {
    a_.canonicalize();
    b_.canonicalize();
  }
  mpq_class a_, b_;
};

struct TentParam {
  QuadRat q;
  std::size_t precision_digits = 10'000;  // coefficient growth budget

  explicit TentParam(QuadRat slope, std::size_t digits = 10'000);

  // Accepts a decimal string or "sqrt2".
  static TentParam parse(const std::string& text, std::size_t digits = 10'000);
};

// q*x for x <= 1/2, q*(1-x) otherwise; the critical point is 1/2.
QuadRat tent_eval(const TentParam& q, const QuadRat& x);

// 0/1/* coding of the orbit of x. Emits '*' and stops when the orbit hits
// the critical point exactly. Raises PrecisionError when coefficients
// outgrow the digit budget.
Word itinerary(const TentParam& q, const QuadRat& x, std::size_t length);

// Itinerary of f(c) = q/2 to the requested length.
SymbolStream kneading_prefix(const TentParam& q, std::size_t length);

struct ParameterBracket {
  QuadRat lo, hi;
  std::size_t horizon;
  bool certified;  // input was admissible_at_horizon (not merely unknown)
  double lo_double() const { return lo.to_double(); }
  double hi_double() const { return hi.to_double(); }
};

class FindParameterError : public std::runtime_error {
 public:
  explicit FindParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Bisection on [sqrt2, 2] against K under the parity-lex order, using the
// monotonicity of the kneading invariant in the slope. Returns a bracket
// of width <= (2-sqrt2) * 2^-iterations whose kneading prefixes straddle
// or match K on the comparable window. Certified-inadmissible input is
// rejected; an inconsistent monotone comparison raises bracket-failure.
ParameterBracket find_parameter(const SymbolStream& k, std::size_t iterations = 80,
                                std::size_t compare_horizon = 0);

// Backward-orbit points of the inverse limit at working precision.
struct IlimPoint {
  std::vector<double> coords;  // index 0 outermost; f(coords[i]) = coords[i-1]
  std::size_t depth() const { return coords.size(); }
};

// Partial sum of sum |x_i - y_i| / 2^(i+1); truncation error <= 2^-depth.
double ilim_metric(const IlimPoint& x, const IlimPoint& y);

// Builds a backward orbit under the tent map: branch_bits selects the
// preimage branch per step. Validation helper for IlimPoint consumers.
IlimPoint backward_orbit(const TentParam& q, const QuadRat& x0,
                         const std::vector<bool>& branch_bits);

struct ProbeResult {
  std::size_t value_n = 0;   // for continuity_probe_N
  double value_eps = 0.0;    // for continuity_probe_eps
  std::size_t samples = 0;
};

// Smallest N such that every sampled pair sharing a length-N itinerary is
// closer than eps. A sampling estimate, not a proof.
ProbeResult continuity_probe_N(const TentParam& q, double eps, std::size_t samples);

// Largest eps (certified against the sample set) such that sampled pairs
// closer than eps agree on length-N itineraries.
ProbeResult continuity_probe_eps(const TentParam& q, std::size_t n, std::size_t samples);

}  // namespace knead
