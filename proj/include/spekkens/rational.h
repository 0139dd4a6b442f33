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

#pragma once

#include <boost/rational.hpp>
#include <string>

#include "spekkens/zmod.h"

namespace spekkens {

// Compare Rational only against Rational. Under C++20 rewritten comparisons,
// boost's mixed rational/integer operator== recurses without end.
using Rational = boost::rational<Int>;

/// "0", "1", "1/3", "-2/9".
inline std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational &r) {
    return boost::rational_cast<double>(r);
}

}  // namespace spekkens
