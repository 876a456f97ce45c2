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

#ifndef MIDBAND_ANGULAR_METRICS_HPP
#define MIDBAND_ANGULAR_METRICS_HPP

#include "midband/types.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace midband
{
    // A contiguous run of strong samples in a power angular profile
    struct Lobe
    {
        double start_deg;      // angle of the first sample (may exceed end_deg when the lobe wraps through 0)
        double end_deg;        // angle of the last sample
        std::size_t n_samples;
        double power_fraction; // lobe power / profile power
        double spread_deg;
    };

    // Maps an angle difference to (-180, 180]
    double wrap_deg(double angle_deg) noexcept;

    // RMS angular spread in degrees.
    //
    // Azimuth: the power-weighted standard deviation of the angles, minimised over where the
    // 360 deg circle is cut open. Only cuts between neighbouring samples change the result, so
    // each sample is tried as the first angle after the cut. Zenith angles are not wrapped.
    double omni_angular_spread(const PowerAngularProfile &pas);

    // Maximal runs of samples within lobe_threshold_db of the profile peak. On the azimuth
    // plane a run touching both 0 and 360 deg is merged into one lobe.
    std::vector<Lobe> segment_lobes(const PowerAngularProfile &pas, double lobe_threshold_db = 10.0);

    // Unweighted mean of the lobe spreads
    double mean_lobe_spread(std::span<const Lobe> lobes);

    // PAS file: "# plane=azimuth|zenith" comment, then header "angle_deg,power_db"
    PowerAngularProfile read_pas(std::istream &in);
    PowerAngularProfile read_pas_file(const std::string &path);
    void write_pas(const PowerAngularProfile &pas, std::ostream &out);
}

#endif
