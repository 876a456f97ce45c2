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

#ifndef MIDBAND_REPORT_HPP
#define MIDBAND_REPORT_HPP

#include "midband/dataset.hpp"
#include "midband/lognormal_stats.hpp"
#include "midband/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace midband
{
    std::string_view version() noexcept;

    struct PathLossEntry
    {
        FrequencyBand band;
        LinkState state;
        CiFit ci;
        std::optional<FiFit> fi; // needs two distinct distances
    };

    struct SpreadEntry
    {
        FrequencyBand band;
        LinkState state;
        Statistic metric;
        std::optional<double> max_dist_m;
        LogNormalStat stat;
        double expectation_rounded;
        double expectation_strict;
    };

    struct ReportDocument
    {
        std::string tool_version;
        std::string provenance;
        std::vector<PathLossEntry> path_loss;
        std::vector<SpreadEntry> spreads;
        std::vector<Comparison> comparisons; // only keys with published references
        std::vector<Finding> findings;
    };

    // Fits V-V omni path loss, omni DS and omni ASA/ASD for every (band, state) present in the
    // campaign, using the default selection rules, and compares them against published values.
    ReportDocument build_report(const Campaign &campaign);

    // Stable key order and number formatting; equal inputs give byte-identical text
    std::string report_to_json(const ReportDocument &report);
}

#endif
