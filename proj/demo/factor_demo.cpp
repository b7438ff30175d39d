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


// Factor the 2x2 symbol [[1, 0], [1/(xi^2+1), r^-1]] and invert its Toeplitz
// operator on a canonical companion symbol.

#include <iostream>

#include "whfactor/whfactor.hpp"

using namespace whfactor;

int main() {
  RationalFunction xi = RationalFunction::xi(), r = RationalFunction::r();
  RationalFunction b = RationalFunction(1) / (xi * xi + RationalFunction(1));

  RFMatrix g{{1, 0}, {b, r.inverse()}};
  WHFactorization f = factor_via_row(g, 1, RFMatrix{{1}, {0}});
  std::cout << "G-   = " << f.g_minus.to_string() << "\n";
  std::cout << "k    = (" << f.partial_indices[0] << ", " << f.partial_indices[1] << ")\n";
  std::cout << "G+   = " << f.g_plus.to_string() << "\n";
  VerificationReport rep = verify_factorization(g, f);
  std::cout << "verified: " << (rep.all_passed() ? "yes" : "no") << "\n";

  FredholmReport fr = report_from_indices(f.partial_indices);
  std::cout << "dim ker " << *fr.dim_ker << ", dim coker " << *fr.dim_coker << "\n";

  // Canonical case: T_G is invertible and the inverse is explicit.
  RFMatrix h{{1, b}, {0, 1}};
  WHFactorization fh = factor_via_column(h, 1, RFMatrix{{1, 0}});
  std::vector<RationalFunction> phi{RationalFunction(), RationalFunction(1) / (xi + RationalFunction(GaussianRational::i()))};
  std::vector<RationalFunction> x = apply_inverse(fh, phi);
  std::cout << "T_H^-1 phi = [" << x[0].to_string() << ", " << x[1].to_string() << "]\n";
  std::cout << "round trip: " << (apply_toeplitz(h, x) == phi ? "exact" : "FAILED") << "\n";
  return 0;
}
