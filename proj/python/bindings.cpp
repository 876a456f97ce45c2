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
#include "midband/dataset.hpp"
#include "midband/lognormal_stats.hpp"
#include "midband/pathloss.hpp"
#include "midband/pdp_metrics.hpp"
#include "midband/report.hpp"
#include "midband/simulate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace midband;

namespace
{
    std::vector<DistanceLoss> to_points(const std::vector<std::pair<double, double>> &pairs)
    {
        std::vector<DistanceLoss> pts;
        pts.reserve(pairs.size());
        for (auto [d, pl] : pairs)
            pts.push_back({d, pl});
        return pts;
    }

    Pdp to_pdp(const std::vector<std::pair<double, double>> &taps_db, double noise_floor_db)
    {
        std::vector<Tap> taps;
        taps.reserve(taps_db.size());
        for (auto [delay, db] : taps_db)
            taps.push_back({delay, db_to_linear(db)});
        return Pdp(std::move(taps), noise_floor_db);
    }

    std::vector<std::pair<double, double>> from_pdp(const Pdp &pdp)
    {
        std::vector<std::pair<double, double>> out;
        for (const auto &t : pdp.taps())
            out.emplace_back(t.delay_ns, linear_to_db(t.power_linear));
        return out;
    }

    PowerAngularProfile to_pas(const std::vector<std::pair<double, double>> &samples_db, const std::string &plane)
    {
        std::vector<AngularSample> s;
        s.reserve(samples_db.size());
        for (auto [angle, db] : samples_db)
            s.push_back({angle, db_to_linear(db)});
        return PowerAngularProfile(std::move(s), parse_plane(plane));
    }

    py::dict record_dict(const LocationRecord &r)
    {
        py::dict d;
        d["freq_ghz"] = r.band.carrier_ghz();
        d["tx_id"] = r.tx_id;
        d["rx_id"] = r.rx_id;
        d["link_state"] = std::string(to_string(r.link_state));
        d["tr_sep_m"] = r.tr_sep_m;
        for (std::size_t k = 0; k < statistic_count; ++k)
        {
            const auto s = static_cast<Statistic>(k);
            d[py::str(std::string(column_name(s)))] = field(r, s);
        }
        d["outage"] = r.outage;
        d["single_mpc"] = r.single_mpc;
        return d;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Upper mid-band UMi channel statistics";
    m.attr("__version__") = std::string(version());

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<CiFit>(m, "CiFit")
        .def_property_readonly("band_ghz", [](const CiFit &f) { return f.band.carrier_ghz(); })
        .def_readonly("ple", &CiFit::ple)
        .def_readonly("sigma_db", &CiFit::sigma_db)
        .def_readonly("n_points", &CiFit::n_points)
        .def_readonly("fspl_1m_db", &CiFit::fspl_1m_db)
        .def("__repr__", [](const CiFit &f)
             {
                 std::ostringstream s;
                 s << "CiFit(ple=" << f.ple << ", sigma_db=" << f.sigma_db << ", n_points=" << f.n_points << ")";
                 return s.str();
             });

    py::class_<FiFit>(m, "FiFit")
        .def_readonly("alpha_db", &FiFit::alpha_db)
        .def_readonly("beta", &FiFit::beta)
        .def_readonly("sigma_db", &FiFit::sigma_db)
        .def_readonly("n_points", &FiFit::n_points);

    py::class_<LogNormalStat>(m, "LogNormalStat")
        .def_readonly("mu_lg", &LogNormalStat::mu_lg)
        .def_readonly("sigma_lg", &LogNormalStat::sigma_lg)
        .def_readonly("n_points", &LogNormalStat::n_points)
        .def_readonly("expectation", &LogNormalStat::expectation)
        .def_static("from_params", &LogNormalStat::from_params, py::arg("mu_lg"), py::arg("sigma_lg"), py::arg("n_points"))
        .def("__repr__", [](const LogNormalStat &s)
             {
                 std::ostringstream o;
                 o << "LogNormalStat(mu_lg=" << s.mu_lg << ", sigma_lg=" << s.sigma_lg << ", n_points=" << s.n_points << ")";
                 return o.str();
             });

    py::class_<Lobe>(m, "Lobe")
        .def_readonly("start_deg", &Lobe::start_deg)
        .def_readonly("end_deg", &Lobe::end_deg)
        .def_readonly("n_samples", &Lobe::n_samples)
        .def_readonly("power_fraction", &Lobe::power_fraction)
        .def_readonly("spread_deg", &Lobe::spread_deg);

    py::class_<Campaign>(m, "Campaign")
        .def_readonly("provenance", &Campaign::provenance)
        .def("__len__", [](const Campaign &c) { return c.records.size(); })
        .def("records", [](const Campaign &c)
             {
                 py::list out;
                 for (const auto &r : c.records)
                     out.append(record_dict(r));
                 return out;
             })
        .def("to_csv", [](const Campaign &c)
             {
                 std::ostringstream s;
                 emit_csv(c, s);
                 return s.str();
             });

    m.def("load_bundled", &load_bundled);
    m.def("read_csv", [](const std::string &path, bool strict)
          { return ingest_csv_file(path, strict ? IngestMode::strict : IngestMode::lenient); },
          py::arg("path"), py::arg("strict") = true);
    m.def("parse_csv", [](const std::string &text, bool strict)
          {
              std::istringstream in(text);
              return ingest_csv(in, strict ? IngestMode::strict : IngestMode::lenient);
          },
          py::arg("text"), py::arg("strict") = true);
    m.def("validate", [](const Campaign &c)
          {
              std::vector<std::pair<std::string, std::string>> out;
              for (const auto &f : validate(c))
                  out.emplace_back(f.key, f.message);
              return out;
          });
    m.def("select", [](const Campaign &c, double band, const std::string &statistic, std::optional<std::string> state,
                       std::optional<double> max_dist_m, bool exclude_single_mpc)
          {
              SelectQuery q{FrequencyBand(band)};
              q.statistic = parse_statistic(statistic);
              if (state)
                  q.state = parse_link_state(*state);
              q.max_dist_m = max_dist_m;
              q.exclude_single_mpc = exclude_single_mpc;
              std::vector<std::pair<double, double>> out;
              for (const auto &p : select(c, q))
                  out.emplace_back(p.tr_sep_m, *p.value);
              return out;
          },
          py::arg("campaign"), py::arg("band_ghz"), py::arg("statistic") = "omni_pl_vv", py::arg("state") = py::none(),
          py::arg("max_dist_m") = py::none(), py::arg("exclude_single_mpc") = false);

    m.def("fspl_1m", [](double band) { return fspl_1m(FrequencyBand(band)); }, py::arg("band_ghz"));
    m.def("ci_fit", [](const std::vector<std::pair<double, double>> &points, double band)
          { return ci_fit(to_points(points), FrequencyBand(band)); },
          py::arg("points"), py::arg("band_ghz"));
    m.def("ci_predict", [](double band, double ple, double d_m)
          { return ci_predict(make_ci_fit(FrequencyBand(band), ple, 0.0), d_m); },
          py::arg("band_ghz"), py::arg("ple"), py::arg("d_m"));
    m.def("fi_fit", [](const std::vector<std::pair<double, double>> &points) { return fi_fit(to_points(points)); },
          py::arg("points"));

    m.def("rms_delay_spread", [](const std::vector<std::pair<double, double>> &taps_db, double noise_floor_db,
                                 double threshold_db, double noise_margin_db)
          { return rms_delay_spread(to_pdp(taps_db, noise_floor_db), DsOptions{threshold_db, noise_margin_db}); },
          py::arg("taps_db"), py::arg("noise_floor_db"), py::arg("threshold_db") = 25.0, py::arg("noise_margin_db") = 5.0);
    m.def("synthesize_omni", [](const std::vector<std::vector<std::pair<double, double>>> &pdps, double noise_floor_db)
          {
              std::vector<Pdp> in;
              for (const auto &p : pdps)
                  in.push_back(to_pdp(p, noise_floor_db));
              return from_pdp(synthesize_omni(in));
          },
          py::arg("pdps_db"), py::arg("noise_floor_db"));

    m.def("omni_angular_spread", [](const std::vector<std::pair<double, double>> &samples_db, const std::string &plane)
          { return omni_angular_spread(to_pas(samples_db, plane)); },
          py::arg("samples_db"), py::arg("plane") = "azimuth");
    m.def("segment_lobes", [](const std::vector<std::pair<double, double>> &samples_db, const std::string &plane, double threshold_db)
          { return segment_lobes(to_pas(samples_db, plane), threshold_db); },
          py::arg("samples_db"), py::arg("plane") = "azimuth", py::arg("threshold_db") = 10.0);

    m.def("fit_lognormal", [](const std::vector<double> &x) { return fit_lognormal(x); }, py::arg("samples"));
    m.def("expectation_published", &expectation_published, py::arg("mu_lg"), py::arg("sigma_lg"));
    m.def("expectation_strict", &expectation_strict, py::arg("mu_lg"), py::arg("sigma_lg"));
    m.def("expectation_rounded", &expectation_rounded, py::arg("stat"));

    m.def("simulate", [](double band, const std::string &state, const std::vector<double> &distances, std::uint64_t seed,
                         const std::string &source, double as_clamp_deg)
          {
              const auto model = make_model(parse_model_source(source), FrequencyBand(band), parse_link_state(state), load_bundled());
              const auto out = sample_campaign(model, distances, seed, SimulationOptions{as_clamp_deg});
              py::list rows;
              for (const auto &s : out.samples)
              {
                  py::dict d;
                  d["d_m"] = s.d_m;
                  d["pl_db"] = s.pl_db;
                  d["ds_ns"] = s.ds_ns;
                  d["asa_deg"] = s.asa_deg;
                  d["asd_deg"] = s.asd_deg;
                  rows.append(d);
              }
              return py::make_tuple(rows, out.clamp_events);
          },
          py::arg("band_ghz"), py::arg("state"), py::arg("distances"), py::arg("seed") = 0,
          py::arg("source") = "published", py::arg("as_clamp_deg") = 104.0);

    m.def("report_json", [](const Campaign &c) { return report_to_json(build_report(c)); }, py::arg("campaign"));
}
