// Copyright 2026 The quncert Authors
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

#ifndef QUNCERT_QUNCERT_HPP
#define QUNCERT_QUNCERT_HPP

#include "quncert/dynamics.hpp"
#include "quncert/error.hpp"
#include "quncert/hilbert.hpp"
#include "quncert/qstat.hpp"
#include "quncert/toymodel.hpp"
#include "quncert/uncertainty.hpp"

#endif  // QUNCERT_QUNCERT_HPP
