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

#include "midband/angular_metrics.hpp"
#include "midband/io_util.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace midband
{
    double wrap_deg(double angle_deg) noexcept
    {
        double r = std::fmod(angle_deg, 360.0);
        if (r <= -180.0)
            r += 360.0;
        else if (r > 180.0)
            r -= 360.0;
        return r;
    }

    namespace
    {
        double weighted_std(std::span<const double> x, std::span<const double> w)
        {
            double sw = 0.0, mean = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k)
            {
                sw += w[k];
                mean += w[k] * x[k];
            }
            mean /= sw;
            double var = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k)
                var += w[k] * (x[k] - mean) * (x[k] - mean);
            return std::sqrt(var / sw);
        }

        double spread_of(std::span<const AngularSample> samples, AngularPlane plane)
        {
            const std::size_t n = samples.size();
            if (n <= 1)
                return 0.0;
            std::vector<double> angle(n), weight(n);
            for (std::size_t k = 0; k < n; ++k)
            {
                angle[k] = samples[k].angle_deg;
                weight[k] = samples[k].power_linear;
            }
            if (plane == AngularPlane::zenith)
                return weighted_std(angle, weight);

            double best = std::numeric_limits<double>::infinity();
            std::vector<double> unrolled(n);
            for (std::size_t j = 0; j < n; ++j)
            {
                // Open the circle just before sample j: every angle measured forward from it in [0, 360)
                for (std::size_t k = 0; k < n; ++k)
                {
                    double rel = std::fmod(angle[k] - angle[j], 360.0);
                    if (rel < 0.0)
                        rel += 360.0;
                    unrolled[k] = rel;
                }
                best = std::min(best, weighted_std(unrolled, weight));
            }
            return best;
        }
    }

    double omni_angular_spread(const PowerAngularProfile &pas)
    {
        return spread_of(pas.samples(), pas.plane());
    }

    std::vector<Lobe> segment_lobes(const PowerAngularProfile &pas, double lobe_threshold_db)
    {
        if (!(lobe_threshold_db > 0.0))
            throw std::invalid_argument("lobe threshold must be positive");
        const auto &s = pas.samples();
        const std::size_t n = s.size();

        double peak = 0.0, total = 0.0;
        for (const auto &x : s)
        {
            peak = std::max(peak, x.power_linear);
            total += x.power_linear;
        }
        const double level = linear_to_db(peak) - lobe_threshold_db;
        std::vector<bool> strong(n);
        for (std::size_t k = 0; k < n; ++k)
            strong[k] = linear_to_db(s[k].power_linear) >= level;

        // Runs as [first, last] index ranges in angle order
        std::vector<std::pair<std::size_t, std::size_t>> runs;
        for (std::size_t k = 0; k < n; ++k)
        {
            if (!strong[k])
                continue;
            if (k > 0 && strong[k - 1])
                runs.back().second = k;
            else
                runs.emplace_back(k, k);
        }

        const bool wraps = pas.plane() == AngularPlane::azimuth && runs.size() > 1 &&
                           runs.front().first == 0 && runs.back().second == n - 1;

        auto make_lobe = [&](std::vector<AngularSample> members)
        {
            double power = 0.0;
            for (const auto &m : members)
                power += m.power_linear;
            Lobe lobe{members.front().angle_deg, members.back().angle_deg, members.size(), power / total, 0.0};
            lobe.spread_deg = spread_of(members, pas.plane());
            return lobe;
        };

        std::vector<Lobe> lobes;
        for (std::size_t r = 0; r < runs.size(); ++r)
        {
            if (wraps && r == runs.size() - 1)
                break;
            std::vector<AngularSample> members;
            if (wraps && r == 0)
                for (std::size_t k = runs.back().first; k <= runs.back().second; ++k)
                    members.push_back(s[k]);
            for (std::size_t k = runs[r].first; k <= runs[r].second; ++k)
                members.push_back(s[k]);
            lobes.push_back(make_lobe(std::move(members)));
        }
        return lobes;
    }

    double mean_lobe_spread(std::span<const Lobe> lobes)
    {
        if (lobes.empty())
            throw std::invalid_argument("mean lobe spread needs at least one lobe");
        double sum = 0.0;
        for (const auto &l : lobes)
            sum += l.spread_deg;
        return sum / static_cast<double>(lobes.size());
    }

    PowerAngularProfile read_pas(std::istream &in)
    {
        std::optional<AngularPlane> plane;
        bool header_seen = false;
        bool first = true;
        std::vector<AngularSample> samples;
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
                constexpr std::string_view key = "plane=";
                if (body.substr(0, key.size()) == key)
                {
                    try
                    {
                        plane = parse_plane(io::trim(body.substr(key.size())));
                    }
                    catch (const std::invalid_argument &e)
                    {
                        throw std::runtime_error("line " + std::to_string(row) + ": " + e.what());
                    }
                }
                continue;
            }
            const auto cells = io::split_csv(text);
            if (!header_seen)
            {
                if (cells.size() != 2 || cells[0] != "angle_deg" || cells[1] != "power_db")
                    throw std::runtime_error("line " + std::to_string(row) + ": expected header 'angle_deg,power_db'");
                header_seen = true;
                continue;
            }
            if (cells.size() != 2)
                throw std::runtime_error("line " + std::to_string(row) + ": expected 2 cells");
            const auto angle = io::parse_double(cells[0]);
            const auto power_db = io::parse_double(cells[1]);
            if (!angle || !power_db)
                throw std::runtime_error("line " + std::to_string(row) + ": not a number");
            samples.push_back({*angle, db_to_linear(*power_db)});
        }
        if (!header_seen)
            throw std::runtime_error("PAS file has no 'angle_deg,power_db' header");
        if (!plane)
            throw std::runtime_error("PAS file lacks '# plane=azimuth|zenith'");
        try
        {
            return PowerAngularProfile(std::move(samples), *plane);
        }
        catch (const std::invalid_argument &e)
        {
            throw std::runtime_error(std::string("invalid PAS: ") + e.what());
        }
    }

    PowerAngularProfile read_pas_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "'");
        return read_pas(in);
    }

    void write_pas(const PowerAngularProfile &pas, std::ostream &out)
    {
        out << "# plane=" << to_string(pas.plane()) << '\n'
            << "angle_deg,power_db\n";
        for (const auto &s : pas.samples())
            out << io::shortest(s.angle_deg) << ',' << io::shortest(linear_to_db(s.power_linear)) << '\n';
    }
}
