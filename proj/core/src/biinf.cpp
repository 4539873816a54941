#include "knead/biinf.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace knead {

namespace {

long floor_mod(long a, long m) {
  long r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

BiInfWord::BiInfWord(Word left_tail, Word center, Word right_tail, long origin_offset)
    : left_(std::move(left_tail)),
      center_(std::move(center)),
      right_(std::move(right_tail)),
      offset_(origin_offset) {
  if (left_.empty() || right_.empty()) throw WordError("bi-infinite tails must be nonempty");
  if (left_.has_star() || center_.has_star() || right_.has_star()) {
    throw WordError("bi-infinite words carry no '*'");
  }
  canonicalize();
}

char BiInfWord::at(long p) const {
  const long start = -offset_;                                    // first center position
  const long end = start + static_cast<long>(center_.size());    // first right-tail position
  if (p >= end) {
    return right_[static_cast<std::size_t>(floor_mod(p - end, static_cast<long>(right_.size())))];
  }
  if (p < start) {
    const long d = start - 1 - p;  // distance leftward from the tail's last symbol
    const long m = static_cast<long>(left_.size());
    return left_[static_cast<std::size_t>(m - 1 - (d % m))];
  }
  return center_[static_cast<std::size_t>(p - start)];
}

std::string BiInfWord::window(long from, long to) const {
  std::string out;
  out.reserve(static_cast<std::size_t>(to > from ? to - from : 0));
  for (long p = from; p < to; ++p) out.push_back(at(p));
  return out;
}

void BiInfWord::canonicalize() {
  left_ = primitive_root(left_);
  right_ = primitive_root(right_);

  // Absorb periodic material at the seam into the tails.
  {
    std::string c = center_.str();
    while (!c.empty() && c.back() == right_.str().back()) {
      c.pop_back();
      right_ = rotate_right(right_);
    }
    while (!c.empty() && c.front() == left_.str().front()) {
      c.erase(c.begin());
      left_ = rotate_left(left_);
      offset_ -= 1;
    }
    center_ = Word(c);
  }

  if (!center_.empty()) return;

  // Empty center: the tails meet at boundary b. Either the sequence is
  // globally periodic, or the boundary has a unique leftmost position.
  const long nl = static_cast<long>(left_.size());
  const long nr = static_cast<long>(right_.size());
  const long lcm = std::lcm(nl, nr);
  const long b = -offset_;

  bool is_periodic = true;
  for (long i = 1; i <= lcm && is_periodic; ++i) {
    const char left_sym = at(b - i);
    const char right_ext = right_[static_cast<std::size_t>(floor_mod(-i, nr))];
    if (left_sym != right_ext) is_periodic = false;
  }

  if (is_periodic) {
    std::string root;
    root.reserve(static_cast<std::size_t>(nr));
    // Align the root at the origin: symbol j of the root is at(j).
    for (long j = 0; j < nr; ++j) {
      root.push_back(right_[static_cast<std::size_t>(floor_mod(j - b, nr))]);
    }
    right_ = primitive_root(Word(root));
    left_ = right_;
    offset_ = 0;
    return;
  }

  // Slide the boundary as far left as it goes (bounded: not periodic).
  while (left_.str().back() == right_.str().back()) {
    left_ = rotate_right(left_);
    right_ = rotate_right(right_);
    offset_ += 1;
  }
}

BiInfWord BiInfWord::shifted(long k) const {
  if (periodic()) {
    const long n = static_cast<long>(right_.size());
    const Word r = rotate_left(right_, static_cast<std::size_t>(floor_mod(k, n)));
    return BiInfWord(r, Word(), r, 0);
  }
  return BiInfWord(left_, center_, right_, offset_ + k);
}

std::string BiInfWord::to_string() const {
  auto tail = [](const Word& w) {
    return w.size() == 1 ? w.str() : "(" + w.str() + ")";
  };
  // Materialize a copy whose dot lies inside the center.
  Word l = left_, c = center_, r = right_;
  long off = offset_;
  while (off < 0) {
    c = Word(std::string(1, l.str().back()) + c.str());
    l = rotate_right(l);
    off += 1;
  }
  while (off > static_cast<long>(c.size())) {
    c = Word(c.str() + std::string(1, r.str().front()));
    r = rotate_left(r);
  }
  std::ostringstream os;
  os << tail(l) << "^-inf";
  const std::string cs = c.str();
  if (off > 0) os << ' ' << cs.substr(0, static_cast<std::size_t>(off));
  os << " .";
  if (off < static_cast<long>(cs.size())) os << ' ' << cs.substr(static_cast<std::size_t>(off));
  os << ' ' << tail(r) << "^inf";
  return os.str();
}

BiInfWord BiInfWord::parse(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::istringstream is{std::string(text)};
    std::string t;
    while (is >> t) tokens.push_back(t);
  }
  if (tokens.size() < 3) throw WordError("bi-infinite word needs tails and a dot");

  auto strip = [](std::string tok, const std::string& suffix) {
    if (tok.size() <= suffix.size() || tok.substr(tok.size() - suffix.size()) != suffix) {
      throw WordError("expected token ending in " + suffix);
    }
    tok.resize(tok.size() - suffix.size());
    if (tok.size() >= 2 && tok.front() == '(' && tok.back() == ')') {
      tok = tok.substr(1, tok.size() - 2);
    }
    return Word::parse(tok);
  };

  const Word left = strip(tokens.front(), "^-inf");
  const Word right = strip(tokens.back(), "^inf");

  std::string before_dot, after_dot;
  bool seen_dot = false;
  for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
    if (tokens[i] == ".") {
      if (seen_dot) throw WordError("multiple dots in bi-infinite word");
      seen_dot = true;
    } else {
      (seen_dot ? after_dot : before_dot) += Word::parse(tokens[i]).str();
    }
  }
  if (!seen_dot) throw WordError("bi-infinite word needs an origin dot");
  return BiInfWord(left, Word(before_dot + after_dot), right,
                   static_cast<long>(before_dot.size()));
}

}  // namespace knead
