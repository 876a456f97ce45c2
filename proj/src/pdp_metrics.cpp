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

#include "midband/pdp_metrics.hpp"
#include "midband/io_util.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace midband
{
    void DsOptions::check() const
    {
        if (!(peak_threshold_db > 0.0) || !(noise_margin_db > 0.0))
            throw std::invalid_argument("delay-spread thresholds must be positive");
    }

    double threshold_level_db(const Pdp &pdp, const DsOptions &opts)
    {
        opts.check();
        double peak = 0.0;
        for (const auto &t : pdp.taps())
            peak = std::max(peak, t.power_linear);
        return std::max(linear_to_db(peak) - opts.peak_threshold_db, pdp.noise_floor_db() + opts.noise_margin_db);
    }

    Pdp threshold_pdp(const Pdp &pdp, const DsOptions &opts)
    {
        const double level = threshold_level_db(pdp, opts);
        const auto &taps = pdp.taps();
        const auto peak = std::max_element(taps.begin(), taps.end(),
                                           [](const Tap &a, const Tap &b)
                                           { return a.power_linear < b.power_linear; });
        std::vector<Tap> kept;
        for (auto it = taps.begin(); it != taps.end(); ++it)
            if (it == peak || linear_to_db(it->power_linear) >= level)
                kept.push_back(*it);
        return Pdp(std::move(kept), pdp.noise_floor_db());
    }

    double rms_delay_spread(const Pdp &pdp, const DsOptions &opts)
    {
        const auto kept = threshold_pdp(pdp, opts);
        const auto &taps = kept.taps();
        if (taps.size() == 1)
            return 0.0;

        // moments about the first delay
        const double origin = taps.front().delay_ns;
        double p = 0.0, m1 = 0.0, m2 = 0.0;
        for (const auto &t : taps)
        {
            const double tau = t.delay_ns - origin;
            p += t.power_linear;
            m1 += t.power_linear * tau;
            m2 += t.power_linear * tau * tau;
        }
        m1 /= p;
        m2 /= p;
        return std::sqrt(std::max(0.0, m2 - m1 * m1));
    }

    Pdp synthesize_omni(std::span<const Pdp> directional)
    {
        if (directional.empty())
            throw std::invalid_argument("omni synthesis needs at least one directional PDP");
        std::map<double, double> bins;
        double noise_floor = directional.front().noise_floor_db();
        for (const auto &pdp : directional)
        {
            noise_floor = std::max(noise_floor, pdp.noise_floor_db());
            for (const auto &t : pdp.taps())
                bins[t.delay_ns] += t.power_linear;
        }
        std::vector<Tap> taps;
        taps.reserve(bins.size());
        for (const auto &[delay, power] : bins)
            taps.push_back({delay, power});
        return Pdp(std::move(taps), noise_floor);
    }

    Pdp read_pdp(std::istream &in)
    {
        std::optional<double> noise_floor;
        bool header_seen = false;
        bool first = true;
        std::vector<Tap> taps;
        std::string line;
        std::size_t row = 0;
        while (std::getline(in, line))
        {
            ++row;
            const auto text = io::trim(io::strip_line(line, first));
            first = false;
            if (text.empty())
                continue;
            if (text.front() == '#')
            {
                const auto body = io::trim(text.substr(1));
                constexpr std::string_view key = "noise_floor_db=";
                if (body.substr(0, key.size()) == key)
                {
                    noise_floor = io::parse_double(body.substr(key.size()));
                    if (!noise_floor)
                        throw std::runtime_error("line " + std::to_string(row) + ": bad noise_floor_db value");
                }
                continue;
            }
            const auto cells = io::split_csv(text);
            if (!header_seen)
            {
                if (cells.size() != 2 || cells[0] != "delay_ns" || cells[1] != "power_db")
                    throw std::runtime_error("line " + std::to_string(row) + ": expected header 'delay_ns,power_db'");
                header_seen = true;
                continue;
            }
            if (cells.size() != 2)
                throw std::runtime_error("line " + std::to_string(row) + ": expected 2 cells");
            const auto delay = io::parse_double(cells[0]);
            const auto power_db = io::parse_double(cells[1]);
            if (!delay || !power_db)
                throw std::runtime_error("line " + std::to_string(row) + ": not a number");
            taps.push_back({*delay, db_to_linear(*power_db)});
        }
        if (!header_seen)
            throw std::runtime_error("PDP file has no 'delay_ns,power_db' header");
        if (!noise_floor)
            throw std::runtime_error("PDP file lacks '# noise_floor_db=<value>'");
        std::sort(taps.begin(), taps.end(), [](const Tap &a, const Tap &b)
                  { return a.delay_ns < b.delay_ns; });
        try
        {
            return Pdp(std::move(taps), *noise_floor);
        }
        catch (const std::invalid_argument &e)
        {
            throw std::runtime_error(std::string("invalid PDP: ") + e.what());
        }
    }

    Pdp read_pdp_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "'");
        return read_pdp(in);
    }

    void write_pdp(const Pdp &pdp, std::ostream &out)
    {
        out << "# noise_floor_db=" << io::shortest(pdp.noise_floor_db()) << '\n'
            << "delay_ns,power_db\n";
        for (const auto &t : pdp.taps())
            out << io::shortest(t.delay_ns) << ',' << io::shortest(linear_to_db(t.power_linear)) << '\n';
    }
}
