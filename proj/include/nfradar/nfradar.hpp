// SPDX-License-Identifier: Apache-2.0
//
// nfradar: near-field multistatic radar ranging of extended plate reflectors
// Copyright (C) 2026 The nfradar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NFRADAR_NFRADAR_HPP
#define NFRADAR_NFRADAR_HPP

#include "error.hpp"
#include "scenario.hpp"
#include "special_fn.hpp"
#include "waveform.hpp"
#include "em_exact.hpp"
#include "em_spa.hpp"
#include "signal.hpp"
#include "estimator.hpp"
#include "experiments.hpp"
#include "version.hpp"

#endif
