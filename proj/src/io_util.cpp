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

#include "midband/io_util.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace midband::io
{
    std::string shortest(double value)
    {
        std::array<char, 64> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
        return std::string(buf.data(), res.ptr);
    }

    std::string fixed(double value, int decimals)
    {
        std::array<char, 64> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
        return std::string(buf.data(), res.ptr);
    }

    std::optional<double> parse_double(std::string_view text)
    {
        text = trim(text);
        if (text.empty())
            return std::nullopt;
        // from_chars rejects a leading '+', which hand-written files sometimes carry
        if (text.front() == '+')
            text.remove_prefix(1);
        double value = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
            return std::nullopt;
        return value;
    }

    std::string_view trim(std::string_view text) noexcept
    {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos)
            return {};
        const auto last = text.find_last_not_of(" \t\r\n");
        return text.substr(first, last - first + 1);
    }

    std::vector<std::string> split_csv(std::string_view line)
    {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true)
        {
            const auto comma = line.find(',', start);
            cells.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return cells;
    }

    std::string_view strip_line(std::string_view line, bool first_line) noexcept
    {
        if (first_line && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF")
            line.remove_prefix(3);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        return line;
    }
}
