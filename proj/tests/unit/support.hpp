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

#ifndef MIDBAND_TEST_SUPPORT_HPP
#define MIDBAND_TEST_SUPPORT_HPP

#include "midband/types.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace midband::test
{
    inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

    // Scratch file under the system temp dir, removed on destruction
    class TempFile
    {
    public:
        explicit TempFile(const std::string &stem, const std::string &content = {})
        {
            static int counter = 0;
            path_ = std::filesystem::temp_directory_path() /
                    ("midband_" + stem + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
            if (!content.empty())
            {
                std::ofstream out(path_, std::ios::binary);
                out << content;
            }
        }
        ~TempFile()
        {
            std::error_code ec;
            std::filesystem::remove(path_, ec);
        }
        TempFile(const TempFile &) = delete;
        TempFile &operator=(const TempFile &) = delete;

        std::string str() const { return path_.string(); }
        std::string read() const
        {
            std::ifstream in(path_, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

    private:
        std::filesystem::path path_;
    };

    inline LocationRecord los_record(double d_m, double pl_db)
    {
        LocationRecord r;
        r.band = band_6_75;
        r.tx_id = "TX1";
        r.rx_id = "RX1";
        r.link_state = LinkState::los;
        r.tr_sep_m = d_m;
        r.omni_pl_vv_db = pl_db;
        return r;
    }
}

#endif
