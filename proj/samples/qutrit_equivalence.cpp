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


// Runs every pure qutrit state against every pure measurement element through
// the epistemic rule, the Wigner rule and the dense Luders rule.

#include <iostream>

#include "spekkens/spekkens.h"

using namespace spekkens;

int main() {
    std::size_t pass = 0, total = 0;
    for (const auto &c : exhaustive_cases(3, 1)) {
        auto r = check_update_equivalence(c.state, c.element);
        total++;
        pass += r.pass;
        if (!r.pass) {
            std::cout << to_json(r).dump() << "\n";
        }
    }
    std::cout << pass << "/" << total << " cases agree\n";
    return pass == total ? 0 : 1;
}
