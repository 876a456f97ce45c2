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

#include <doctest.h>

#include <random>

using namespace midband::io;

TEST_CASE("shortest round-trips doubles")
{
    CHECK(shortest(74.63) == "74.63");
    CHECK(shortest(100.0) == "100");
    CHECK(shortest(-0.5) == "-0.5");
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i)
    {
        const double x = u(rng);
        CHECK(parse_double(shortest(x)) == x);
    }
}

TEST_CASE("fixed formatting")
{
    CHECK(fixed(1.79621, 4) == "1.7962");
    CHECK(fixed(2.0, 2) == "2.00");
}

TEST_CASE("parse_double is strict")
{
    CHECK(parse_double("12.5") == 12.5);
    CHECK(parse_double("+3") == 3.0);
    CHECK(parse_double("-1e3") == -1000.0);
    CHECK_FALSE(parse_double(""));
    CHECK_FALSE(parse_double("12.5x"));
    CHECK_FALSE(parse_double("abc"));
    CHECK_FALSE(parse_double("1 2"));
}

TEST_CASE("trim, split_csv and strip_line")
{
    CHECK(trim("  a b \t") == "a b");
    CHECK(trim("") == "");
    CHECK(split_csv("a, b ,,c") == std::vector<std::string>{"a", "b", "", "c"});
    CHECK(split_csv("") == std::vector<std::string>{""});
    CHECK(strip_line("x,y\r", false) == "x,y");
    CHECK(strip_line("\xEF\xBB\xBFx", true) == "x");
    CHECK(strip_line("\xEF\xBB\xBFx", false) == "\xEF\xBB\xBFx");
}
