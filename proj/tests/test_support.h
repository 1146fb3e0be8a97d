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

#ifndef DIMERCLUSTER_TESTS_TEST_SUPPORT_H_
#define DIMERCLUSTER_TESTS_TEST_SUPPORT_H_

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dimercluster/laurent.h"
#include "dimercluster/quiver.h"

namespace dimercluster::testing {

// D6 instance with a 24-term reference F-polynomial.
inline constexpr const char* kD6Quiver = "n=6; 1>0,2>1,3>2,4>3,3>5";
// D6 instance whose minimal matching has weight x1^3 x2^2 x3^2.
inline constexpr const char* kD6WeightQuiver = "n=6; 1>0,1>2,2>3,3>4,3>5";
inline const Root kD6Root = {1, 1, 2, 2, 1, 1};

// D5 instance with reference F-polynomial and Laurent expansion.
inline constexpr const char* kD5Quiver = "n=5; 1>0,2>1,3>2,2>4";
inline const Root kD5Root = {1, 1, 2, 1, 1};

// Tits form sum b_i^2 - sum_{edges} b_i b_j of the D_n diagram; the
// positive roots are exactly the nonzero nonnegative vectors where it is 1.
inline int tits_form(const IntVector& b) {
  const int n = static_cast<int>(b.size());
  int q = 0;
  for (int x : b) q += x * x;
  for (auto [i, j] : dynkin_edges(n)) q -= b[i] * b[j];
  return q;
}

// Parses sums like "1 + u0 + 2*u0*u1*u2^2" or "x0^-1*x3*y4". Variables are
// u<i> in the U context, x<i>/y<i> in the XY context.
inline LaurentPoly parse_poly(VarContext ctx, std::string_view text) {
  LaurentPoly out(ctx);
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto number = [&] {
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::runtime_error("expected a number");
    const int v = std::stoi(std::string(text.substr(start, pos - start)));
    return neg ? -v : v;
  };
  while (true) {
    skip();
    IntVector e(ctx.size(), 0);
    mpz_class coeff = 1;
    while (true) {
      skip();
      const char c = text.at(pos);
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else {
        ++pos;
        int var = number();
        if (c == 'y') var += ctx.n;
        int power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          power = number();
        }
        e.at(var) += power;
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out += LaurentPoly::monomial(ctx, e, coeff);
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw std::runtime_error("expected '+'");
    ++pos;
  }
  return out;
}

}  // namespace dimercluster::testing

#endif  // DIMERCLUSTER_TESTS_TEST_SUPPORT_H_
