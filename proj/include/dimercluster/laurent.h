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

#ifndef DIMERCLUSTER_LAURENT_H_
#define DIMERCLUSTER_LAURENT_H_

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "dimercluster/quiver.h"

namespace dimercluster {

// The variable set a polynomial lives over: u_0..u_{n-1}, or
// x_0..x_{n-1} followed by y_0..y_{n-1}.
struct VarContext {
  enum class Kind { kU, kXY };
  Kind kind = Kind::kU;
  int n = 0;

  static VarContext U(int n) { return {Kind::kU, n}; }
  static VarContext XY(int n) { return {Kind::kXY, n}; }

  int size() const { return kind == Kind::kU ? n : 2 * n; }
  std::string name(int var) const;

  friend bool operator==(const VarContext&, const VarContext&) = default;
};

// Exact integer-coefficient Laurent polynomial with dense exponent vectors.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = IntVector;
  using TermMap = std::map<Exponent, mpz_class>;

  explicit LaurentPoly(VarContext ctx) : ctx_(ctx) {}

  static LaurentPoly constant(VarContext ctx, const mpz_class& c);
  static LaurentPoly variable(VarContext ctx, int var);
  static LaurentPoly monomial(VarContext ctx, const Exponent& exps,
                              const mpz_class& c = 1);

  const VarContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  mpz_class coefficient(const Exponent& exps) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ < b.terms_;
  }

  // Negative k is allowed only for monomials.
  LaurentPoly pow(int k) const;

  // Replaces variable i by images[i], a polynomial over `target`. A variable
  // occurring with a negative exponent must map to a monomial.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images,
                         VarContext target) const;

  // Returns q with q * divisor == *this. Throws InternalError when the
  // division is not exact.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Exponent vector of a monomial with coefficient 1. Throws SemanticError.
  Exponent degree_vector() const;

  // Per-variable minimum exponent over all terms (zero polynomial: zeros).
  Exponent min_exponents() const;

  // Terms in ascending total degree, ties broken by descending exponent
  // vector; e.g. "1 + u0 + 2*u0*u1*u2^2".
  std::string to_string() const;
  std::vector<std::pair<Exponent, mpz_class>> sorted_terms() const;

 private:
  void add_term(const Exponent& e, const mpz_class& c);
  void require_same_context(const LaurentPoly& other) const;

  VarContext ctx_;
  TermMap terms_;
};

}  // namespace dimercluster

#endif  // DIMERCLUSTER_LAURENT_H_
