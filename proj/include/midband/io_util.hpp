// SPDX-License-Identifier: Apache-2.0
//
// midband: upper mid-band UMi channel statistics toolkit
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

#ifndef MIDBAND_IO_UTIL_HPP
#define MIDBAND_IO_UTIL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the CSV readers/writers
namespace midband::io
{
    // Shortest decimal string that parses back to the same double
    std::string shortest(double value);

    // Fixed-point formatting with the given number of decimals
    std::string fixed(double value, int decimals);

    // Strict full-string parse; nullopt on any trailing garbage or empty input
    std::optional<double> parse_double(std::string_view text);

    std::string_view trim(std::string_view text) noexcept;

    // Plain comma split (no quoting), cells trimmed
    std::vector<std::string> split_csv(std::string_view line);

    // Removes a trailing '\r' left by CRLF files and a leading UTF-8 BOM
    std::string_view strip_line(std::string_view line, bool first_line) noexcept;
}

#endif
