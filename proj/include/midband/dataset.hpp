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

#ifndef MIDBAND_DATASET_HPP
#define MIDBAND_DATASET_HPP

#include "midband/types.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace midband
{
    // A set of per-location records plus where they came from
    struct Campaign
    {
        std::vector<LocationRecord> records;
        std::string provenance;

        bool operator==(const Campaign &) const = default;
    };

    // Header row of the campaign CSV format, in emission order
    extern const std::vector<std::string> campaign_csv_columns;

    // Raised for a malformed or incomplete header. column() names the offending column.
    class SchemaError : public std::runtime_error
    {
    public:
        SchemaError(std::string column, const std::string &what)
            : std::runtime_error(what), column_(std::move(column)) {}
        const std::string &column() const noexcept { return column_; }

    private:
        std::string column_;
    };

    // Raised for a cell that cannot be parsed. Row numbers count the header as row 1.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t row, std::string column, const std::string &what)
            : std::runtime_error(what), row_(row), column_(std::move(column)) {}
        std::size_t row() const noexcept { return row_; }
        const std::string &column() const noexcept { return column_; }

    private:
        std::size_t row_;
        std::string column_;
    };

    // Raised by strict ingestion when a parsed row violates a record invariant
    class ValidationError : public std::runtime_error
    {
    public:
        ValidationError(std::size_t row, std::vector<std::string> rules);
        std::size_t row() const noexcept { return row_; }
        const std::vector<std::string> &rules() const noexcept { return rules_; }

    private:
        std::size_t row_;
        std::vector<std::string> rules_;
    };

    // Full transcription of the campaign's per-location statistics table (both bands, 40 rows).
    Campaign load_bundled();

    enum class IngestMode
    {
        strict,  // record invariant violations throw ValidationError
        lenient  // rows are kept as parsed; use validate() to list problems
    };

    // Parses the campaign CSV format. Row order is preserved.
    Campaign ingest_csv(std::istream &source, IngestMode mode = IngestMode::strict,
                        std::string provenance = "csv stream");
    Campaign ingest_csv_file(const std::string &path, IngestMode mode = IngestMode::strict);

    // Writes the campaign CSV format. Numbers use the shortest round-trip representation.
    void emit_csv(const Campaign &campaign, std::ostream &out);

    // Link-budget ceiling above which a location is recorded as an outage; known only for the campaign bands.
    std::optional<double> max_measurable_path_loss_db(const FrequencyBand &band) noexcept;

    struct Finding
    {
        std::string key; // "<freq>/<tx>/<rx>"
        std::string message;

        bool operator==(const Finding &) const = default;
    };

    std::vector<Finding> validate(const Campaign &campaign);

    struct SelectQuery
    {
        explicit SelectQuery(FrequencyBand b) : band(b) {}

        FrequencyBand band;
        std::optional<LinkState> state;  // nullopt selects both states
        std::optional<double> max_dist_m; // inclusive upper bound on tr_sep_m
        Statistic statistic = Statistic::omni_pl_vv;
        bool exclude_single_mpc = false;
        bool exclude_missing = true;
    };

    struct SelectedPoint
    {
        double tr_sep_m;
        std::optional<double> value;
    };

    // Outage rows are always skipped. Order follows the campaign.
    std::vector<SelectedPoint> select(const Campaign &campaign, const SelectQuery &query);

    // Values of a selection; throws std::invalid_argument if any value is absent.
    std::vector<double> values_of(const std::vector<SelectedPoint> &points);
}

#endif
