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

#ifndef MIDBAND_PDP_METRICS_HPP
#define MIDBAND_PDP_METRICS_HPP

#include "midband/types.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace midband
{
    struct DsOptions
    {
        double peak_threshold_db = 25.0; // taps this far below the PDP maximum are dropped
        double noise_margin_db = 5.0;    // taps must also clear the noise floor by this much

        void check() const; // both must be positive
    };

    // Power level in dB that a tap must reach to be kept: the higher of
    // (peak - peak_threshold_db) and (noise floor + noise_margin_db).
    double threshold_level_db(const Pdp &pdp, const DsOptions &opts = {});

    // Keeps taps at or above threshold_level_db(). The peak tap is always kept.
    Pdp threshold_pdp(const Pdp &pdp, const DsOptions &opts = {});

    // Power-weighted RMS delay spread of the thresholded PDP, in ns.
    // A single surviving tap gives 0.
    double rms_delay_spread(const Pdp &pdp, const DsOptions &opts = {});

    // Bin-wise sum of linear powers over the union of delay bins. Bins match on exact delay
    // values, so inputs must share one sampling grid. Output noise floor is the highest input floor.
    Pdp synthesize_omni(std::span<const Pdp> directional);

    // PDP file: "# noise_floor_db=<value>" comment, then header "delay_ns,power_db".
    // Rows may be in any delay order; they are sorted on load.
    Pdp read_pdp(std::istream &in);
    Pdp read_pdp_file(const std::string &path);
    void write_pdp(const Pdp &pdp, std::ostream &out);
}

#endif
