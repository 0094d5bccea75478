#include "lck/sphere_poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lck {

namespace {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

}  // namespace

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  unsigned dx = total_degree(x), dy = total_degree(y);
  if (dx != dy) return dx < dy;
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t t = x.size(); t-- > 0;) {
    if (x[t] != y[t]) return x[t] < y[t];
  }
  return false;
}

SpherePoly::SpherePoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

SpherePoly SpherePoly::variable(std::size_t var, std::size_t m) {
  if (var >= m) throw std::out_of_range("SpherePoly: variable index out of range");
  Monomial mono(m, 0u);
  mono[var] = 1;
  SpherePoly p;
  p.m_ = m;
  p.terms_.emplace(std::move(mono), Rational(1));
  return p;
}

SpherePoly SpherePoly::monomial(Monomial mono, const Rational& c, std::size_t m) {
  if (mono.size() != m) throw std::invalid_argument("SpherePoly: exponent vector has wrong length");
  TermMap raw;
  if (!c.is_zero()) raw.emplace(std::move(mono), c);
  return reduce(m, raw);
}

bool SpherePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational SpherePoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("SpherePoly: not a constant");
  return terms_.begin()->second;
}

std::size_t SpherePoly::unify(const SpherePoly& x, const SpherePoly& y) {
  if (x.m_ == 0) return y.m_;
  if (y.m_ == 0 || x.m_ == y.m_) return x.m_;
  throw std::invalid_argument("SpherePoly: mixed variable counts");
}

void SpherePoly::lift_to(std::size_t m) {
  if (m_ == m) return;
  TermMap lifted;
  for (const auto& [mono, c] : terms_) {
    Monomial padded(m, 0u);
    std::copy(mono.begin(), mono.end(), padded.begin());
    lifted.emplace(std::move(padded), c);
  }
  terms_ = std::move(lifted);
  m_ = m;
}

void SpherePoly::add_term(const Monomial& mono, const Rational& c) {
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SpherePoly SpherePoly::reduce(std::size_t m, const TermMap& raw) {
  if (m == 0) throw std::invalid_argument("SpherePoly: reduce needs at least one variable");
  SpherePoly out;
  out.m_ = m;
  // Rewrite x_m^2 -> 1 - x_1^2 - ... - x_{m-1}^2 until every monomial has
  // degree <= 1 in x_m. Each rewrite strictly lowers that degree.
  std::vector<std::pair<Monomial, Rational>> work(raw.begin(), raw.end());
  while (!work.empty()) {
    auto [mono, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    if (mono.size() != m) throw std::invalid_argument("SpherePoly: exponent vector has wrong length");
    if (mono[m - 1] < 2) {
      out.add_term(mono, c);
      continue;
    }
    Monomial base = mono;
    base[m - 1] -= 2;
    work.emplace_back(base, c);
    for (std::size_t j = 0; j + 1 < m; ++j) {
      Monomial t = base;
      t[j] += 2;
      work.emplace_back(std::move(t), -c);
    }
  }
  return out;
}

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
  std::size_t m = unify(*this, o);
  lift_to(m);
  SpherePoly rhs = o;
  rhs.lift_to(m);
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

SpherePoly& SpherePoly::operator-=(const SpherePoly& o) {
  std::size_t m = unify(*this, o);
  lift_to(m);
  SpherePoly rhs = o;
  rhs.lift_to(m);
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

SpherePoly& SpherePoly::operator*=(const SpherePoly& o) {
  std::size_t m = unify(*this, o);
  if (m == 0) {
    // product of constants
    Rational c = constant_value() * o.constant_value();
    *this = SpherePoly(c);
    return *this;
  }
  lift_to(m);
  SpherePoly rhs = o;
  rhs.lift_to(m);
  TermMap raw;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial mono(m, 0u);
      for (std::size_t j = 0; j < m; ++j) mono[j] = ma[j] + mb[j];
      Rational c = ca * cb;
      auto it = raw.find(mono);
      if (it == raw.end())
        raw.emplace(std::move(mono), c);
      else
        it->second += c;
    }
  }
  *this = reduce(m, raw);
  return *this;
}

SpherePoly& SpherePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

SpherePoly SpherePoly::operator-() const {
  SpherePoly r = *this;
  for (auto& [mono, coeff] : r.terms_) coeff = -coeff;
  return r;
}

SpherePoly frame_derivation(std::size_t i, const SpherePoly& p, std::size_t m) {
  if (i >= m) throw std::out_of_range("frame_derivation: frame index out of range");
  SpherePoly q = p;
  q.lift_to(m);
  // For a monomial u: d_i(u) = e_i * u / x_i - deg(u) * x_i * u,
  // which is the Leibniz extension of d_i(x_j) = delta_ij - x_i x_j.
  SpherePoly::TermMap raw;
  auto add = [&raw](Monomial mono, Rational c) {
    if (c.is_zero()) return;
    auto it = raw.find(mono);
    if (it == raw.end())
      raw.emplace(std::move(mono), std::move(c));
    else
      it->second += c;
  };
  for (const auto& [mono, c] : q.terms()) {
    unsigned deg = 0;
    for (unsigned e : mono) deg += e;
    if (mono[i] > 0) {
      Monomial down = mono;
      down[i] -= 1;
      add(std::move(down), c * Rational(static_cast<long>(mono[i])));
    }
    if (deg > 0) {
      Monomial up = mono;
      up[i] += 1;
      add(std::move(up), -(c * Rational(static_cast<long>(deg))));
    }
  }
  return SpherePoly::reduce(m, raw);
}

Quadratic evaluate_uniform(const SpherePoly& p, std::size_t m) {
  if (m == 0) throw std::invalid_argument("evaluate_uniform: m must be positive");
  if (p.vars() != 0 && p.vars() != m)
    throw std::invalid_argument("evaluate_uniform: variable count mismatch");
  // 1/sqrt(m) = sqrt(m)/m
  Quadratic inv_sqrt(Rational(0), Rational(1, static_cast<long>(m)), m);
  std::vector<Quadratic> pow{Quadratic(Rational(1))};
  auto power = [&](unsigned d) {
    while (pow.size() <= d) pow.push_back(pow.back() * inv_sqrt);
    return pow[d];
  };
  Quadratic acc;
  for (const auto& [mono, c] : p.terms()) {
    unsigned deg = 0;
    for (unsigned e : mono) deg += e;
    acc += Quadratic(c) * power(deg);
  }
  return acc;
}

std::string SpherePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    first = false;
    bool has_var = total_degree(mono) > 0;
    if (!has_var || !coeff.is_one()) {
      os << coeff.to_string();
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (mono[j] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (j + 1);
      if (mono[j] > 1) os << "^" << mono[j];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SpherePoly& p) { return os << p.to_string(); }

}  // namespace lck
