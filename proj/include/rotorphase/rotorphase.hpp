// Copyright 2026 The rotorphase Authors
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

#ifndef ROTORPHASE_ROTORPHASE_HPP
#define ROTORPHASE_ROTORPHASE_HPP

#include "rotorphase/errors.hpp"
#include "rotorphase/theta.hpp"
#include "rotorphase/grid.hpp"
#include "rotorphase/rotor_basis.hpp"
#include "rotorphase/displacement.hpp"
#include "rotorphase/coherent.hpp"
#include "rotorphase/kernel_table.hpp"
#include "rotorphase/mapping.hpp"
#include "rotorphase/quasiprob.hpp"
#include "rotorphase/uncertainty.hpp"

#endif  // ROTORPHASE_ROTORPHASE_HPP
