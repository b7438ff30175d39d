// Copyright 2026 The whfactor Authors
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

#ifndef WHFACTOR_MOBIUS_HPP_
#define WHFACTOR_MOBIUS_HPP_

#include "whfactor/rational_function.hpp"

namespace whfactor {

/// p((a w + b)/(c w + d)) written as P(w) / (c w + d)^deg p; returns P.
inline GPoly mobius_numerator(const GPoly& p, const GaussianRational& a, const GaussianRational& b,
                              const GaussianRational& c, const GaussianRational& d, int degree) {
  GPoly top({b, a}), bottom({d, c});
  GPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    out += p.coeff(k) * pow(top, k) * pow(bottom, degree - k);
  }
  return out;
}

/// f((a w + b)/(c w + d)) as a rational function of w.
inline RationalFunction substitute_mobius(const RationalFunction& f, const GaussianRational& a,
                                          const GaussianRational& b, const GaussianRational& c,
                                          const GaussianRational& d) {
  if (f.is_zero()) return f;
  int dn = f.num().degree(), dd = f.den().degree();
  GPoly num = mobius_numerator(f.num(), a, b, c, d, dn);
  GPoly den = mobius_numerator(f.den(), a, b, c, d, dd);
  GPoly bottom({d, c});
  if (dd > dn) {
    num *= pow(bottom, dd - dn);
  } else if (dn > dd) {
    den *= pow(bottom, dn - dd);
  }
  return {num, den};
}

/// Moves a function of xi on the real line to a function of w on the unit
/// circle. For plus, xi = i(1+w)/(1-w) so that C+ goes to the open disk; for
/// minus, xi = -i(1+w)/(1-w) and C- goes to the disk.
inline RationalFunction mobius_to_disk(const RationalFunction& f, bool plus = true) {
  GaussianRational s = plus ? GaussianRational::i() : -GaussianRational::i();
  return substitute_mobius(f, s, s, GaussianRational(-1), GaussianRational(1));
}

/// Inverse of mobius_to_disk: w = (xi - i)/(xi + i) for plus, (xi + i)/(xi - i) for minus.
inline RationalFunction mobius_from_disk(const RationalFunction& g, bool plus = true) {
  // w = (xi - s)/(xi + s)
  GaussianRational s = plus ? GaussianRational::i() : -GaussianRational::i();
  return substitute_mobius(g, GaussianRational(1), -s, GaussianRational(1), s);
}

}  // namespace whfactor

#endif  // WHFACTOR_MOBIUS_HPP_
