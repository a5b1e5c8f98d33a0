// Copyright 2026 The wronsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wronsk/rational_function.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "wronsk/errors.hpp"

namespace wronsk {
namespace {

// Divides a polynomial by (t - root) assuming root is a zero of it.
LaurentPoly divide_by_linear(const LaurentPoly& f, const Rational& root) {
  LaurentPoly quotient;
  Rational carry;
  for (Exponent e = degree_max(f); e >= 1; --e) {
    carry = carry * root + f.coeff(e);
    quotient.add_term(e - 1, carry);
  }
  return quotient;
}

std::map<Rational, unsigned> pole_map(const std::vector<Pole>& poles) {
  std::map<Rational, unsigned> out;
  for (const Pole& p : poles) out[p.location] += p.order;
  return out;
}

LaurentPoly factor_product(const std::map<Rational, unsigned>& orders) {
  LaurentPoly out(Rational(1));
  for (const auto& [beta, m] : orders)
    if (m) out *= linear_power(beta, m);
  return out;
}

}  // namespace

RationalFunction::RationalFunction(const LaurentPoly& f) : numerator_(f) { canonicalize(); }

RationalFunction::RationalFunction(LaurentPoly numerator, std::vector<Pole> poles, Rational scalar)
    : numerator_(std::move(numerator)), poles_(std::move(poles)), scalar_(std::move(scalar)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  numerator_ *= scalar_;
  scalar_ = Rational(1);
  if (numerator_.is_zero()) {
    poles_.clear();
    return;
  }
  std::map<Rational, unsigned> orders = pole_map(poles_);
  const Exponent low = degree_min(numerator_);
  if (low < 0) {
    numerator_ = shift_exponents(numerator_, -low);
    orders[Rational(0)] += static_cast<unsigned>(-low);
  }
  poles_.clear();
  for (auto& [beta, m] : orders) {
    while (m > 0 && numerator_.evaluate(beta).is_zero()) {
      numerator_ = divide_by_linear(numerator_, beta);
      --m;
    }
    if (m > 0) poles_.push_back(Pole{beta, m});
  }
  scalar_ = leading_coeff(numerator_);
  numerator_ *= scalar_.inverse();
}

LaurentPoly RationalFunction::denominator() const { return factor_product(pole_map(poles_)); }

std::optional<LaurentPoly> RationalFunction::to_laurent() const {
  if (poles_.empty()) return scaled_numerator();
  if (poles_.size() == 1 && poles_.front().location.is_zero())
    return shift_exponents(scaled_numerator(), -static_cast<Exponent>(poles_.front().order));
  return std::nullopt;
}

unsigned RationalFunction::pole_order(const Rational& at) const {
  for (const Pole& p : poles_)
    if (p.location == at) return p.order;
  return 0;
}

long RationalFunction::local_order(const Rational& at) const {
  if (is_zero()) throw ZeroPolynomial();
  if (unsigned m = pole_order(at)) return static_cast<long>(m);
  long zeros = 0;
  LaurentPoly n = numerator_;
  while (n.evaluate(at).is_zero()) {
    n = divide_by_linear(n, at);
    ++zeros;
  }
  return -zeros;
}

Rational RationalFunction::evaluate(const Rational& at) const {
  Rational den(1);
  for (const Pole& p : poles_) {
    if (p.location == at) throw PoleEvaluation("rational function evaluated at its pole " + at.to_string());
    den *= (at - p.location).pow(static_cast<int>(p.order));
  }
  return scalar_ * numerator_.evaluate(at) / den;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const auto mine = pole_map(poles_);
  const auto theirs = pole_map(rhs.poles_);
  std::map<Rational, unsigned> common = mine;
  for (const auto& [beta, m] : theirs) common[beta] = std::max(common[beta], m);
  std::map<Rational, unsigned> pad_mine, pad_theirs;
  for (const auto& [beta, m] : common) {
    auto a = mine.find(beta);
    auto b = theirs.find(beta);
    pad_mine[beta] = m - (a == mine.end() ? 0 : a->second);
    pad_theirs[beta] = m - (b == theirs.end() ? 0 : b->second);
  }
  LaurentPoly sum = scaled_numerator() * factor_product(pad_mine) + rhs.scaled_numerator() * factor_product(pad_theirs);
  std::vector<Pole> poles;
  for (const auto& [beta, m] : common) poles.push_back(Pole{beta, m});
  return *this = RationalFunction(std::move(sum), std::move(poles));
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  std::vector<Pole> poles = poles_;
  poles.insert(poles.end(), rhs.poles_.begin(), rhs.poles_.end());
  return *this = RationalFunction(numerator_ * rhs.numerator_, std::move(poles), scalar_ * rhs.scalar_);
}

RationalFunction& RationalFunction::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) return *this = RationalFunction();
  scalar_ *= rhs;
  return *this;
}

RationalFunction operator-(RationalFunction value) {
  value.scalar_ = -value.scalar_;
  return value;
}

RationalFunction derivative(const RationalFunction& f) {
  if (!f.has_poles()) return RationalFunction(derivative(f.scaled_numerator()));
  // (N/D)' with D = prod (t-b)^m: [N' P - N sum_j m_j P/(t-b_j)] / prod (t-b)^(m+1), P = prod (t-b).
  LaurentPoly product(Rational(1));
  for (const Pole& p : f.poles()) product *= linear_power(p.location, 1);
  LaurentPoly log_part;
  for (std::size_t j = 0; j < f.poles().size(); ++j) {
    LaurentPoly others(Rational(f.poles()[j].order));
    for (std::size_t i = 0; i < f.poles().size(); ++i)
      if (i != j) others *= linear_power(f.poles()[i].location, 1);
    log_part += others;
  }
  LaurentPoly numerator = derivative(f.numerator()) * product - f.numerator() * log_part;
  std::vector<Pole> poles = f.poles();
  for (Pole& p : poles) ++p.order;
  return RationalFunction(std::move(numerator), std::move(poles), f.scalar());
}

RationalFunction shift(const RationalFunction& f, const Rational& a) {
  if (a.is_zero()) return f;
  std::vector<Pole> poles = f.poles();
  for (Pole& p : poles) p.location -= a;
  return RationalFunction(shift(f.numerator(), a), std::move(poles), f.scalar());
}

std::string to_string(const RationalFunction& f) {
  if (!f.has_poles()) return to_string(f.scaled_numerator());
  std::ostringstream os;
  os << '(' << to_string(f.scaled_numerator()) << ") / (";
  bool first = true;
  for (const Pole& p : f.poles()) {
    if (!first) os << ' ';
    first = false;
    if (p.location.is_zero()) {
      os << 't';
    } else {
      os << "(t " << (p.location.sign() > 0 ? "- " : "+ ") << p.location.abs() << ')';
    }
    if (p.order > 1) os << '^' << p.order;
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << to_string(f); }

}  // namespace wronsk
