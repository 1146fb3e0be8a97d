// Copyright 2026 The dimercluster Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimercluster/laurent.h"

#include <algorithm>
#include <numeric>

#include "dimercluster/errors.h"

namespace dimercluster {

std::string VarContext::name(int var) const {
  if (kind == Kind::kU) return "u" + std::to_string(var);
  return (var < n ? "x" : "y") + std::to_string(var % n);
}

LaurentPoly LaurentPoly::constant(VarContext ctx, const mpz_class& c) {
  return monomial(ctx, Exponent(ctx.size(), 0), c);
}

LaurentPoly LaurentPoly::variable(VarContext ctx, int var) {
  Exponent e(ctx.size(), 0);
  e.at(var) = 1;
  return monomial(ctx, e);
}

LaurentPoly LaurentPoly::monomial(VarContext ctx, const Exponent& exps,
                                  const mpz_class& c) {
  if (static_cast<int>(exps.size()) != ctx.size()) {
    throw InternalError("exponent vector length does not match context");
  }
  LaurentPoly p(ctx);
  p.add_term(exps, c);
  return p;
}

mpz_class LaurentPoly::coefficient(const Exponent& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_same_context(const LaurentPoly& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw SemanticError("arithmetic on polynomials from different contexts");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_context(b);
  LaurentPoly r(a.ctx_);
  const size_t m = a.ctx_.size();
  LaurentPoly::Exponent e(m);
  mpz_class prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < m; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) {
      throw SemanticError("negative power of a non-monomial");
    }
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1) {
      throw SemanticError("negative power of a monomial with coefficient " +
                          c.get_str());
    }
    Exponent inv(e.size());
    for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i] * (-k);
    mpz_class sign = (c == -1 && (k % 2 != 0)) ? -1 : 1;
    return monomial(ctx_, inv, sign);
  }
  LaurentPoly result = constant(ctx_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images,
                                    VarContext target) const {
  if (static_cast<int>(images.size()) != ctx_.size()) {
    throw SemanticError("substitution must map every variable");
  }
  for (const auto& img : images) {
    if (!(img.context() == target)) {
      throw SemanticError("substitution image lives in the wrong context");
    }
  }
  LaurentPoly result(target);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = constant(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term = term * images[i].pow(e[i]);
    }
    result += term;
  }
  return result;
}

LaurentPoly::Exponent LaurentPoly::min_exponents() const {
  const size_t m = ctx_.size();
  Exponent lo(m, 0);
  if (terms_.empty()) return lo;
  lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < m; ++i) lo[i] = std::min(lo[i], e[i]);
  }
  return lo;
}

namespace {

LaurentPoly::Exponent max_exponents(const LaurentPoly& p) {
  const size_t m = p.context().size();
  LaurentPoly::Exponent hi = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < m; ++i) hi[i] = std::max(hi[i], e[i]);
  }
  return hi;
}

}  // namespace

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  require_same_context(divisor);
  if (divisor.is_zero()) throw InternalError("division by zero polynomial");
  LaurentPoly quotient(ctx_);
  if (is_zero()) return quotient;

  // Every quotient exponent lies in this box when the division is exact:
  // coordinate extremes of a product are sums of coordinate extremes.
  const size_t m = ctx_.size();
  const Exponent lo_n = min_exponents(), lo_d = divisor.min_exponents();
  const Exponent hi_n = max_exponents(*this), hi_d = max_exponents(divisor);

  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  LaurentPoly rem = *this;
  Exponent qe(m);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    for (size_t i = 0; i < m; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < lo_n[i] - lo_d[i] || qe[i] > hi_n[i] - hi_d[i]) {
        throw InternalError("Laurent division is not exact");
      }
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
      throw InternalError("Laurent division has a non-integral coefficient");
    }
    mpz_class qc = rc / lead_c;
    LaurentPoly step = monomial(ctx_, qe, qc);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

LaurentPoly::Exponent LaurentPoly::degree_vector() const {
  if (!is_monomial() || terms_.begin()->second != 1) {
    throw SemanticError("degree vector requires a monic monomial, got " +
                        to_string());
  }
  return terms_.begin()->first;
}

std::vector<std::pair<LaurentPoly::Exponent, mpz_class>>
LaurentPoly::sorted_terms() const {
  std::vector<std::pair<Exponent, mpz_class>> out(terms_.begin(),
                                                  terms_.end());
  auto degree = [](const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    int da = degree(a.first), db = degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_.name(static_cast<int>(i));
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

}  // namespace dimercluster
