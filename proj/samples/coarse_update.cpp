// Copyright 2026 The Spekkens-Zd Authors
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


// Learn 3X = 0 about a single d=6 system, starting from knowing nothing.
// Prints the fine branches, the posterior and its grid.

#include <iostream>

#include "spekkens/spekkens.h"

using namespace spekkens;

int main() {
    PhaseSpace space(6, 1);
    auto prior = EpistemicState::nothing_known(space);
    Observable three_x(6, {3, 0});
    auto element = SharpMeasurement::from_outcomes(space, {three_x}, {0});

    auto info = classify(three_x);
    std::cout << format_observable(three_x) << " has degeneracy " << info.D << "\n";
    for (const auto &br : fine_decomposition(three_x, 0)) {
        std::cout << "  branch " << format_observable(br.sigma_fg) << " = " << br.outcome << ", shift "
                  << br.shift.str() << "\n";
    }

    std::cout << "probability " << to_string(outcome_probability(prior, element)) << "\n";
    auto post = update(prior, element);
    std::cout << "posterior " << post.str() << "\n" << render_grid(distribution(post));
    return 0;
}
