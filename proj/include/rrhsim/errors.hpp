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

#include <stdexcept>
#include <string>

namespace rrhsim
{
    // Invalid numeric parameter (negative distance, non-positive blocker area, ...)
    class ParameterError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Geometry with no well-defined answer, e.g. the azimuth between coincident points
    class DegenerateGeometryError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Bad configuration or command line; carries the offending key when known
    class UsageError : public std::invalid_argument
    {
    public:
        UsageError(std::string key, const std::string &what)
            : std::invalid_argument(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

        const std::string &key() const noexcept { return key_; }

    private:
        std::string key_;
    };

    // A metric whose denominator is zero (no served packets, no frames)
    class UndefinedMetricError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
