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

#include "spekkens/epistemic.h"
#include "spekkens/equivalence.h"
#include "spekkens/error.h"
#include "spekkens/graining.h"
#include "spekkens/hilbert.h"
#include "spekkens/measurement.h"
#include "spekkens/observable_parser.h"
#include "spekkens/phase_space.h"
#include "spekkens/rational.h"
#include "spekkens/render.h"
#include "spekkens/stabilizer.h"
#include "spekkens/state_io.h"
#include "spekkens/wigner.h"
#include "spekkens/zmod.h"
