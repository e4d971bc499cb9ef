// Copyright 2026 The photon_filter Authors
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

#pragma once

#include "photon_filter/cavity.hpp"
#include "photon_filter/error.hpp"
#include "photon_filter/filter.hpp"
#include "photon_filter/fock.hpp"
#include "photon_filter/io.hpp"
#include "photon_filter/oracle.hpp"
#include "photon_filter/parallel.hpp"
#include "photon_filter/tomography.hpp"
#include "photon_filter/version.hpp"
