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


#ifndef WHFACTOR_WHFACTOR_HPP_
#define WHFACTOR_WHFACTOR_HPP_

#include "whfactor/ap_factor.hpp"
#include "whfactor/corona.hpp"
#include "whfactor/exact_linalg.hpp"
#include "whfactor/fredholm.hpp"
#include "whfactor/matrix_wh.hpp"
#include "whfactor/scalar_wh.hpp"

#endif  // WHFACTOR_WHFACTOR_HPP_
