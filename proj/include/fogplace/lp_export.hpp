// Copyright 2026 The fogplace Authors
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

// The full placement MILP in CPLEX LP text format, for solving with an
// independent MILP solver.

#ifndef FOGPLACE_LP_EXPORT_HPP_
#define FOGPLACE_LP_EXPORT_HPP_

#include <cstddef>
#include <string>

#include "fogplace/workload.hpp"

namespace fogplace {

struct LpStats {
  std::size_t assignment_rows = 0;    // one per VM
  std::size_t pin_rows = 0;           // one per request (input on source)
  std::size_t vm_limit_rows = 0;      // one per VM-limited IoT device
  std::size_t conservation_rows = 0;  // one per (b, e, m)
  std::size_t rows = 0;               // every constraint
  std::size_t binaries = 0;
  std::size_t integers = 0;
  std::size_t continuous = 0;
};

struct LpModel {
  std::string text;
  LpStats stats;
};

// Variables:
//   x_r_s_p     binary, VM s of request r runs on p
//   y_r_l_b_e   >= x(from, b) + x(to, e) - 1, link l of r realized as b -> e
//   lam_b_e     traffic from processing node b to e
//   f_b_e_m_n   flow of lam_b_e on arc (m, n)
//   L_n         traffic handled by n: outgoing flow plus terminating traffic
//   beta_n      binary, L_n <= M beta_n with M the total offered traffic;
//               fixed to 1 on source devices
//   Om_p, N_p   workload and integer CPU count, cap * N_p >= Om_p
//   th_p        traffic entering plus leaving p
//   phi_p       binary, VMs on p <= (VM count) phi_p
// Node and request indices follow the scenario; a comment block maps them
// back to ids.
LpModel export_lp(const Scenario& scenario);

}  // namespace fogplace

#endif  // FOGPLACE_LP_EXPORT_HPP_
