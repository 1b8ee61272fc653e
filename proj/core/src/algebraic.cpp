#include "knotconc/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace knotconc {

namespace {

int sign_of(const Rational& r) { return sgn(r); }

// Polynomial remainder over Q on dense coefficient vectors.
std::vector<Rational> qrem(std::vector<Rational> a,
                           const std::vector<Rational>& b) {
  const long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db) {
    const Rational c = a.back() / b.back();
    const long e = static_cast<long>(a.size()) - 1 - db;
    for (long i = 0; i <= db; ++i) a[e + i] -= c * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

Rational eval_q(const std::vector<Rational>& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

SturmChain::SturmChain(const ZPoly& squarefree) {
  if (squarefree.empty()) throw std::domain_error("Sturm chain of zero");
  std::vector<Rational> p0, p1;
  for (const auto& c : squarefree) p0.emplace_back(c);
  ZPoly d = zpoly::derivative(squarefree);
  for (const auto& c : d) p1.emplace_back(c);
  chain_.push_back(p0);
  if (p1.empty()) return;
  chain_.push_back(p1);
  while (true) {
    std::vector<Rational> r =
        qrem(chain_[chain_.size() - 2], chain_[chain_.size() - 1]);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
    if (chain_.back().size() == 1) break;
  }
}

int SturmChain::variations(const Rational& x) const {
  int v = 0, prev = 0;
  for (const auto& p : chain_) {
    const int s = sign_of(eval_q(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

AlgebraicReal::AlgebraicReal(ZPoly defining, Rational lo, Rational hi)
    : poly_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("inverted isolating interval");
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  // x - r scaled to integer coefficients: den*x - num.
  ZPoly p{-r.get_num(), r.get_den()};
  return AlgebraicReal(std::move(p), r, r);
}

void AlgebraicReal::refine(const Rational& width) {
  while (!is_exact() && hi_ - lo_ > width) {
    Rational mid = (lo_ + hi_) / 2;
    const int sm = sign_of(zpoly::evaluate(poly_, mid));
    if (sm == 0) {
      lo_ = hi_ = mid;
      return;
    }
    const int sl = sign_of(zpoly::evaluate(poly_, lo_));
    if (sl == sm)
      lo_ = mid;
    else
      hi_ = mid;
  }
}

int AlgebraicReal::compare(const Rational& r) const {
  if (is_exact()) return lo_ < r ? -1 : (lo_ > r ? 1 : 0);
  // Refine until r is outside the open interval, or hit r exactly.
  AlgebraicReal copy = *this;
  while (copy.lo_ < r && r < copy.hi_) {
    if (sign_of(zpoly::evaluate(copy.poly_, r)) == 0) return 0;
    Rational w = (copy.hi_ - copy.lo_) / 4;
    copy.refine(w);
  }
  return r <= copy.lo_ ? 1 : -1;
}

bool AlgebraicReal::operator<(const AlgebraicReal& o) const {
  AlgebraicReal a = *this, b = o;
  while (true) {
    if (a.hi_ < b.lo_ || (a.is_exact() && b.is_exact() && a.lo_ < b.lo_))
      return true;
    if (b.hi_ < a.lo_ || (a.is_exact() && b.is_exact())) return false;
    if (a.is_exact() && !b.is_exact()) return b.compare(a.lo_) > 0;
    if (b.is_exact() && !a.is_exact()) return a.compare(b.lo_) < 0;
    a.refine((a.hi_ - a.lo_) / 4);
    b.refine((b.hi_ - b.lo_) / 4);
  }
}

std::string AlgebraicReal::to_string() const {
  std::ostringstream os;
  if (is_exact()) {
    os << lo_.get_str();
    return os.str();
  }
  os << "root of " << zpoly::to_laurent(poly_).to_string() << " in ("
     << lo_.get_str() << ", " << hi_.get_str() << ")";
  return os.str();
}

std::vector<AlgebraicReal> isolate_roots(const ZPoly& p, const Rational& a,
                                         const Rational& b) {
  if (p.empty()) throw std::domain_error("root isolation of zero");
  if (!(a < b)) throw std::invalid_argument("empty isolation interval");
  ZPoly sf = zpoly::squarefree_part(p);
  if (zpoly::degree(sf) < 1) return {};
  SturmChain chain(sf);

  // Nudge the endpoints off roots of sf so that every segment boundary has
  // nonzero sign and the half-open counts over (lo, hi] match the open
  // interval (a, b).
  Rational lo = a, hi = b;
  if (sign_of(zpoly::evaluate(sf, lo)) == 0) {
    Rational step = (b - a) / 2;
    while (chain.count_roots(a, a + step) != 0 ||
           sign_of(zpoly::evaluate(sf, a + step)) == 0)
      step /= 2;
    lo = a + step;
  }
  if (sign_of(zpoly::evaluate(sf, hi)) == 0) {
    Rational step = (b - a) / 2;
    while (chain.count_roots(b - step, b) != 1 ||
           sign_of(zpoly::evaluate(sf, b - step)) == 0)
      step /= 2;
    hi = b - step;
  }
  if (!(lo < hi)) return {};

  // Midpoint choice avoiding roots of sf.
  auto split_point = [&](const Rational& l, const Rational& h) {
    Rational mid = (l + h) / 2;
    Rational delta = (h - l) / 4;
    while (sign_of(zpoly::evaluate(sf, mid)) == 0) {
      mid += delta;
      delta /= 2;
    }
    return mid;
  };

  std::vector<AlgebraicReal> out;
  struct Seg { Rational lo, hi; int count; };
  std::vector<Seg> work;
  work.push_back({lo, hi, chain.count_roots(lo, hi)});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      out.emplace_back(sf, s.lo, s.hi);
      continue;
    }
    Rational mid = split_point(s.lo, s.hi);
    int left = chain.count_roots(s.lo, mid);
    work.push_back({mid, s.hi, s.count - left});
    work.push_back({s.lo, mid, left});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace knotconc
