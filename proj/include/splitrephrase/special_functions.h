// Copyright 2026 The Split-Rephrase Toolkit Authors.
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

#ifndef SPLITREPHRASE_SPECIAL_FUNCTIONS_H_
#define SPLITREPHRASE_SPECIAL_FUNCTIONS_H_

namespace splitrephrase {

// I_x(a, b), the regularized incomplete beta function. a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double student_t_two_sided(double t, double df);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_SPECIAL_FUNCTIONS_H_
