#include "sinclp/piecewise_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sinclp {

namespace {

// p(u + delta) in powers of u.
std::vector<Rational> shift_poly(const std::vector<Rational>& p, const Rational& delta) {
  const std::size_t n = p.size();
  std::vector<Rational> q(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational term = p[j];  // C(j,k) * p_j * delta^(j-k), built downward from k = j
    q[j] += term;
    for (std::size_t k = j; k-- > 0;) {
      term *= delta;
      term *= static_cast<int>(k + 1);
      term /= static_cast<int>(j - k);
      q[k] += term;
    }
  }
  return q;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& u) {
  Rational acc(0);
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    acc *= u;
    acc += coeffs[j];
  }
  return acc;
}

std::vector<Rational> derive_poly(const std::vector<Rational>& coeffs, int order) {
  std::vector<Rational> d = coeffs;
  for (int r = 0; r < order; ++r) {
    if (d.size() <= 1) return {Rational(0)};
    std::vector<Rational> next(d.size() - 1);
    for (std::size_t j = 1; j < d.size(); ++j) next[j - 1] = d[j] * static_cast<int>(j);
    d = std::move(next);
  }
  return d;
}

}  // namespace

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints,
                             std::vector<std::vector<Rational>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
    throw std::invalid_argument("piecewise polynomial needs k+1 breakpoints for k pieces");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
}

int PiecewisePoly::degree() const {
  std::size_t d = 0;
  for (const auto& p : pieces_) d = std::max(d, p.size());
  return d == 0 ? 0 : static_cast<int>(d - 1);
}

Rational PiecewisePoly::operator()(const Rational& x) const {
  if (x < breakpoints_.front() || x >= breakpoints_.back()) return Rational(0);
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return eval_poly(pieces_[i], x - breakpoints_[i]);
}

Rational PiecewisePoly::derivative_at(const Rational& x, int order) const {
  if (x < breakpoints_.front() || x >= breakpoints_.back()) return Rational(0);
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return eval_poly(derive_poly(pieces_[i], order), x - breakpoints_[i]);
}

Rational PiecewisePoly::derivative_from_left(const Rational& x, int order) const {
  if (x <= breakpoints_.front() || x > breakpoints_.back()) return Rational(0);
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return eval_poly(derive_poly(pieces_[i], order), x - breakpoints_[i]);
}

Rational PiecewisePoly::integral() const {
  Rational total(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rational h = breakpoints_[i + 1] - breakpoints_[i];
    Rational hpow = h;
    for (std::size_t j = 0; j < pieces_[i].size(); ++j) {
      total += pieces_[i][j] * hpow / static_cast<int>(j + 1);
      hpow *= h;
    }
  }
  return total;
}

PiecewisePoly PiecewisePoly::convolve_box() const {
  const Rational half(1, 2);

  // Running antiderivative: piece i of F is cum[i] + integral of piece i.
  std::vector<std::vector<Rational>> anti(pieces_.size());
  std::vector<Rational> cum(pieces_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    anti[i].assign(pieces_[i].size() + 1, Rational(0));
    anti[i][0] = cum[i];
    for (std::size_t j = 0; j < pieces_[i].size(); ++j)
      anti[i][j + 1] = pieces_[i][j] / static_cast<int>(j + 1);
    cum[i + 1] = eval_poly(anti[i], breakpoints_[i + 1] - breakpoints_[i]);
  }
  const Rational total = cum.back();

  std::vector<Rational> knots;
  knots.reserve(2 * breakpoints_.size());
  for (const auto& b : breakpoints_) knots.push_back(b - half);
  for (const auto& b : breakpoints_) knots.push_back(b + half);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  // F(x + s) expanded about knot `left`, as a polynomial in x - left. The
  // interval (left, next) shifted by s never straddles an original breakpoint:
  // any straddled breakpoint b would have placed b - s into the new knot set.
  const auto expand = [&](const Rational& left, const Rational& s) -> std::vector<Rational> {
    const Rational t0 = left + s;
    if (t0 >= breakpoints_.back()) return {total};
    if (t0 < breakpoints_.front()) return {Rational(0)};
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t0);
    const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return shift_poly(anti[i], t0 - breakpoints_[i]);
  };

  std::vector<std::vector<Rational>> out(knots.size() - 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    std::vector<Rational> hi = expand(knots[i], half);
    const std::vector<Rational> lo = expand(knots[i], -half);
    if (hi.size() < lo.size()) hi.resize(lo.size(), Rational(0));
    for (std::size_t j = 0; j < lo.size(); ++j) hi[j] -= lo[j];
    out[i] = std::move(hi);
  }
  return PiecewisePoly(std::move(knots), std::move(out));
}

PiecewisePoly PiecewisePoly::squared() const {
  std::vector<std::vector<Rational>> out(pieces_.size());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (p.empty()) continue;
    out[i].assign(2 * p.size() - 1, Rational(0));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) out[i][a + b] += p[a] * p[b];
  }
  return PiecewisePoly(breakpoints_, std::move(out));
}

}  // namespace sinclp
