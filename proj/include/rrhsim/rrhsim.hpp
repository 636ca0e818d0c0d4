// SPDX-License-Identifier: Apache-2.0
//
// rrhsim - area multiplexing gain simulator for sectorized RRH networks
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

#pragma once

#include "channels.hpp"
#include "commands.hpp"
#include "config_io.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "layout.hpp"
#include "metrics.hpp"
#include "output.hpp"
#include "params.hpp"
#include "propagation.hpp"
#include "random.hpp"
#include "resolution.hpp"
#include "sectorization.hpp"
#include "simulation.hpp"
#include "spatial_grid.hpp"
