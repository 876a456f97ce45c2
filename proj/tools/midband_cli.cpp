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

// Command-line front end. Exit codes: 0 success, 1 validation findings or empty selection,
// 2 I/O, parse or usage errors.

#include "midband/angular_metrics.hpp"
#include "midband/dataset.hpp"
#include "midband/io_util.hpp"
#include "midband/lognormal_stats.hpp"
#include "midband/pathloss.hpp"
#include "midband/pdp_metrics.hpp"
#include "midband/report.hpp"
#include "midband/simulate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace
{
    using json = nlohmann::ordered_json;
    using namespace midband;

    constexpr int exit_ok = 0;
    constexpr int exit_findings = 1;
    constexpr int exit_usage = 2;

    // Empty selections and similar "nothing to do" outcomes
    struct EmptySelection : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct Globals
    {
        bool json = false;
        std::string input;
        bool bundled = false;
    };

    Campaign load_campaign(const Globals &g, IngestMode mode = IngestMode::strict)
    {
        if (!g.input.empty())
            return ingest_csv_file(g.input, mode);
        return load_bundled();
    }

    std::string fmt(double v, int decimals = 4) { return io::fixed(v, decimals); }

    // --------------------------------------------------------------------- validate

    int cmd_validate(const Globals &g)
    {
        const auto campaign = load_campaign(g, IngestMode::lenient);
        const auto findings = validate(campaign);
        if (g.json)
        {
            auto arr = json::array();
            for (const auto &f : findings)
                arr.push_back({{"key", f.key}, {"message", f.message}});
            std::cout << json{{"provenance", campaign.provenance}, {"records", campaign.records.size()},
                              {"findings", arr}}
                             .dump(2)
                      << '\n';
        }
        else
        {
            for (const auto &f : findings)
                std::cout << f.key << ": " << f.message << '\n';
            std::cout << findings.size() << " findings\n";
        }
        return findings.empty() ? exit_ok : exit_findings;
    }

    // --------------------------------------------------------------------- fit-pl

    struct FitPlArgs
    {
        double band = 0.0;
        std::string state;
        std::string mode = "omni";
        std::string model = "ci";
        std::string polarization = "vv";
    };

    int cmd_fit_pl(const Globals &g, const FitPlArgs &a)
    {
        if (a.mode != "omni")
            throw std::invalid_argument("only --mode omni is supported: directional point data is not part of the dataset");
        if (a.polarization == "vh")
            std::cerr << "warning: published close-in models cover V-V only; V-H fit shown for reference\n";

        const FrequencyBand band(a.band);
        const auto state = parse_link_state(a.state);
        const auto campaign = load_campaign(g);
        SelectQuery q{band};
        q.state = state;
        q.statistic = a.polarization == "vh" ? Statistic::omni_pl_vh : Statistic::omni_pl_vv;
        std::vector<DistanceLoss> points;
        for (const auto &p : select(campaign, q))
            points.push_back({p.tr_sep_m, *p.value});
        if (points.empty())
            throw EmptySelection("no matching records");

        json out{{"band_ghz", band.carrier_ghz()}, {"state", to_string(state)}, {"mode", a.mode},
                 {"polarization", a.polarization}, {"model", a.model}};
        std::ostringstream text;
        if (a.model == "ci")
        {
            const auto fit = ci_fit(points, band);
            out["ple"] = fit.ple;
            out["sigma_db"] = fit.sigma_db;
            out["n_points"] = fit.n_points;
            out["fspl_1m_db"] = fit.fspl_1m_db;
            text << "CI fit " << io::shortest(a.band) << " GHz " << to_string(state) << " (" << a.polarization
                 << " omni, " << fit.n_points << " points)\n"
                 << "  n          = " << fmt(fit.ple) << '\n'
                 << "  sigma_db   = " << fmt(fit.sigma_db) << '\n'
                 << "  fspl_1m_db = " << fmt(fit.fspl_1m_db) << '\n';
        }
        else
        {
            const auto fit = fi_fit(points);
            out["alpha_db"] = fit.alpha_db;
            out["beta"] = fit.beta;
            out["sigma_db"] = fit.sigma_db;
            out["n_points"] = fit.n_points;
            text << "FI fit " << io::shortest(a.band) << " GHz " << to_string(state) << " (" << a.polarization
                 << " omni, " << fit.n_points << " points)\n"
                 << "  alpha_db = " << fmt(fit.alpha_db) << '\n'
                 << "  beta     = " << fmt(fit.beta) << '\n'
                 << "  sigma_db = " << fmt(fit.sigma_db) << '\n';
        }
        std::cout << (g.json ? out.dump(2) + "\n" : text.str());
        return exit_ok;
    }

    // --------------------------------------------------------------------- fit-spreads

    struct FitSpreadsArgs
    {
        double band = 0.0;
        std::string state;
        std::string metric;
        std::optional<double> max_dist;
        bool no_dist_cap = false;
    };

    int cmd_fit_spreads(const Globals &g, const FitSpreadsArgs &a)
    {
        const FrequencyBand band(a.band);
        const auto state = parse_link_state(a.state);
        const auto stat = parse_statistic(a.metric);
        if (is_path_loss(stat))
            throw std::invalid_argument("path loss is not a spread metric; use fit-pl");

        SelectQuery q{band};
        q.state = state;
        q.statistic = stat;
        q.exclude_single_mpc = is_delay_spread(stat);
        if (a.max_dist)
            q.max_dist_m = *a.max_dist;
        else if (is_angular(stat) && !a.no_dist_cap)
            q.max_dist_m = as_max_dist_m;

        const auto campaign = load_campaign(g);
        const auto values = values_of(select(campaign, q));
        if (values.empty())
            throw EmptySelection("no matching records");
        const auto fit = fit_lognormal(values);
        const double rounded = expectation_rounded(fit);
        const double strict = expectation_strict(fit.mu_lg, fit.sigma_lg);

        if (g.json)
        {
            json out{{"band_ghz", band.carrier_ghz()}, {"state", to_string(state)}, {"metric", column_name(stat)},
                     {"max_dist_m", q.max_dist_m ? json(*q.max_dist_m) : json(nullptr)},
                     {"mu_lg", fit.mu_lg}, {"sigma_lg", fit.sigma_lg}, {"n_points", fit.n_points},
                     {"expectation", fit.expectation}, {"expectation_rounded", rounded}, {"expectation_strict", strict}};
            std::cout << out.dump(2) << '\n';
        }
        else
        {
            std::cout << column_name(stat) << ' ' << io::shortest(a.band) << " GHz " << to_string(state)
                      << " (" << fit.n_points << " points"
                      << (q.max_dist_m ? ", T-R <= " + io::shortest(*q.max_dist_m) + " m" : std::string())
                      << ")\n"
                      << "  mu_lg               = " << fmt(fit.mu_lg) << '\n'
                      << "  sigma_lg            = " << fmt(fit.sigma_lg) << '\n'
                      << "  expectation         = " << fmt(fit.expectation, 2) << '\n'
                      << "  expectation_rounded = " << fmt(rounded, 2) << '\n'
                      << "  expectation_strict  = " << fmt(strict, 2) << '\n';
        }
        return exit_ok;
    }

    // --------------------------------------------------------------------- pdp / pas / synth-omni

    struct PdpArgs
    {
        std::vector<std::string> pdp;
        DsOptions opts;
        std::string out;
    };

    int cmd_pdp_metrics(const Globals &g, const PdpArgs &a)
    {
        const auto pdp = read_pdp_file(a.pdp.front());
        const auto kept = threshold_pdp(pdp, a.opts);
        const double ds = rms_delay_spread(pdp, a.opts);
        if (g.json)
            std::cout << json{{"rms_ds_ns", ds}, {"taps", pdp.taps().size()}, {"taps_kept", kept.taps().size()},
                              {"threshold_db", threshold_level_db(pdp, a.opts)}}
                             .dump(2)
                      << '\n';
        else
            std::cout << "rms_ds_ns    = " << fmt(ds) << '\n'
                      << "taps_kept    = " << kept.taps().size() << '/' << pdp.taps().size() << '\n'
                      << "threshold_db = " << fmt(threshold_level_db(pdp, a.opts)) << '\n';
        return exit_ok;
    }

    int cmd_synth_omni(const Globals &g, const PdpArgs &a)
    {
        std::vector<Pdp> directional;
        for (const auto &path : a.pdp)
            directional.push_back(read_pdp_file(path));
        const auto omni = synthesize_omni(directional);
        const double ds = rms_delay_spread(omni, a.opts);

        if (!a.out.empty())
        {
            std::ofstream file(a.out);
            if (!file)
                throw std::runtime_error("cannot write '" + a.out + "'");
            write_pdp(omni, file);
        }
        if (g.json)
        {
            auto taps = json::array();
            for (const auto &t : omni.taps())
                taps.push_back({{"delay_ns", t.delay_ns}, {"power_db", linear_to_db(t.power_linear)}});
            std::cout << json{{"inputs", a.pdp.size()}, {"noise_floor_db", omni.noise_floor_db()},
                              {"rms_ds_ns", ds}, {"taps", taps}}
                             .dump(2)
                      << '\n';
        }
        else if (a.out.empty())
            write_pdp(omni, std::cout);
        else
            std::cout << "wrote " << omni.taps().size() << " taps to " << a.out << "; rms_ds_ns = " << fmt(ds) << '\n';
        return exit_ok;
    }

    struct PasArgs
    {
        std::string pas;
        double lobe_threshold_db = 10.0;
    };

    int cmd_pas_metrics(const Globals &g, const PasArgs &a)
    {
        const auto pas = read_pas_file(a.pas);
        const double omni = omni_angular_spread(pas);
        const auto lobes = segment_lobes(pas, a.lobe_threshold_db);
        const double mean_lobe = mean_lobe_spread(lobes);
        if (g.json)
        {
            auto arr = json::array();
            for (const auto &l : lobes)
                arr.push_back({{"start_deg", l.start_deg}, {"end_deg", l.end_deg}, {"n_samples", l.n_samples},
                               {"power_fraction", l.power_fraction}, {"spread_deg", l.spread_deg}});
            std::cout << json{{"plane", to_string(pas.plane())}, {"omni_as_deg", omni}, {"lobe_count", lobes.size()},
                              {"mean_lobe_as_deg", mean_lobe}, {"lobes", arr}}
                             .dump(2)
                      << '\n';
        }
        else
        {
            std::cout << "omni_as_deg      = " << fmt(omni) << '\n'
                      << "lobe_count       = " << lobes.size() << '\n'
                      << "mean_lobe_as_deg = " << fmt(mean_lobe) << '\n';
            for (const auto &l : lobes)
                std::cout << "  lobe " << io::shortest(l.start_deg) << ".." << io::shortest(l.end_deg)
                          << " deg: power_fraction=" << fmt(l.power_fraction) << " spread_deg=" << fmt(l.spread_deg) << '\n';
        }
        return exit_ok;
    }

    // --------------------------------------------------------------------- simulate / report

    struct SimulateArgs
    {
        double band = 0.0;
        std::string state;
        std::vector<double> dist;
        std::size_t n = 1;
        std::uint64_t seed = 0;
        std::string source = "published";
        double as_clamp_deg = 104.0;
        std::string format = "csv";
    };

    int cmd_simulate(const Globals &g, const SimulateArgs &a)
    {
        const FrequencyBand band(a.band);
        const auto state = parse_link_state(a.state);
        const auto source = parse_model_source(a.source);
        const auto campaign = source == ModelSource::fitted ? load_campaign(g) : Campaign{};
        ChannelStatModel model = [&]
        {
            try
            {
                return make_model(source, band, state, campaign);
            }
            catch (const std::out_of_range &e)
            {
                throw std::invalid_argument(std::string("unknown band/state: ") + e.what());
            }
        }();

        std::vector<double> distances;
        for (double d : a.dist)
            distances.insert(distances.end(), a.n, d);
        SimulationOptions opts;
        opts.as_clamp_deg = a.as_clamp_deg;
        const auto result = sample_campaign(model, distances, a.seed, opts);

        if (g.json || a.format == "json")
            write_samples_json(result.samples, std::cout);
        else
            write_samples_csv(result.samples, std::cout);
        if (result.clamp_events > 0)
            std::cerr << result.clamp_events << " angular spreads clamped to " << io::shortest(a.as_clamp_deg) << " deg\n";
        return exit_ok;
    }

    int cmd_report(const Globals &g, const std::string &out_path)
    {
        const auto doc = build_report(load_campaign(g));
        const auto text = report_to_json(doc);
        if (out_path.empty() || out_path == "-")
        {
            std::cout << text;
            return exit_ok;
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write '" + out_path + "'");
        file << text;
        return exit_ok;
    }

    int guarded(const std::function<int()> &body)
    {
        try
        {
            return body();
        }
        catch (const EmptySelection &e)
        {
            std::cerr << e.what() << '\n';
            return exit_findings;
        }
        catch (const ValidationError &e)
        {
            std::cerr << "validation error: " << e.what() << '\n';
            return exit_findings;
        }
        catch (const SchemaError &e)
        {
            std::cerr << "schema error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const ParseError &e)
        {
            std::cerr << "parse error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::exception &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return exit_usage;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Upper mid-band UMi channel statistics: path-loss and spread fitting, PDP/PAS metrics, Monte Carlo generation"};
    app.set_version_flag("--version", std::string(midband::version()));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit JSON");
    auto *input = app.add_option("--input", g.input, "Campaign CSV file")->check(CLI::ExistingFile);
    app.add_flag("--bundled", g.bundled, "Use the bundled campaign (default)")->excludes(input);

    std::function<int()> action;

    auto *validate_cmd = app.add_subcommand("validate", "Check a campaign for invariant violations and link-budget limits");
    validate_cmd->callback([&]
                           { action = [&]
                             { return cmd_validate(g); }; });

    FitPlArgs fit_pl;
    auto *fit_pl_cmd = app.add_subcommand("fit-pl", "Fit a close-in or floating-intercept path-loss model");
    fit_pl_cmd->add_option("--band", fit_pl.band, "Carrier frequency in GHz")->required();
    fit_pl_cmd->add_option("--state", fit_pl.state, "los or nlos")->required();
    fit_pl_cmd->add_option("--mode", fit_pl.mode, "omni")->check(CLI::IsMember({"omni", "dir"}));
    fit_pl_cmd->add_option("--model", fit_pl.model, "ci or fi")->check(CLI::IsMember({"ci", "fi"}));
    fit_pl_cmd->add_option("--polarization", fit_pl.polarization, "vv or vh")->check(CLI::IsMember({"vv", "vh"}));
    fit_pl_cmd->callback([&]
                         { action = [&]
                           { return cmd_fit_pl(g, fit_pl); }; });

    FitSpreadsArgs fit_sp;
    auto *fit_sp_cmd = app.add_subcommand("fit-spreads", "Fit log-normal statistics to a delay or angular spread column");
    fit_sp_cmd->add_option("--band", fit_sp.band, "Carrier frequency in GHz")->required();
    fit_sp_cmd->add_option("--state", fit_sp.state, "los or nlos")->required();
    fit_sp_cmd->add_option("--metric", fit_sp.metric, "Statistic column, e.g. omni_ds or omni_asa")->required();
    auto *max_dist = fit_sp_cmd->add_option("--max-dist", fit_sp.max_dist, "Keep T-R separations <= this (m); angular metrics default to 180");
    fit_sp_cmd->add_flag("--no-dist-cap", fit_sp.no_dist_cap, "Disable the default 180 m cap for angular metrics")->excludes(max_dist);
    fit_sp_cmd->callback([&]
                         { action = [&]
                           { return cmd_fit_spreads(g, fit_sp); }; });

    PdpArgs pdp_args;
    auto *pdp_cmd = app.add_subcommand("pdp-metrics", "RMS delay spread of a PDP file");
    pdp_cmd->add_option("--pdp", pdp_args.pdp, "PDP CSV file")->required()->expected(1)->check(CLI::ExistingFile);
    pdp_cmd->add_option("--threshold-db", pdp_args.opts.peak_threshold_db, "Drop taps this far below the peak");
    pdp_cmd->add_option("--noise-margin-db", pdp_args.opts.noise_margin_db, "Require taps this far above the noise floor");
    pdp_cmd->callback([&]
                      { action = [&]
                        { return cmd_pdp_metrics(g, pdp_args); }; });

    PdpArgs synth_args;
    auto *synth_cmd = app.add_subcommand("synth-omni", "Sum directional PDPs into an omnidirectional PDP");
    synth_cmd->add_option("--pdp", synth_args.pdp, "Directional PDP CSV files (repeatable)")->required()->check(CLI::ExistingFile);
    synth_cmd->add_option("--out", synth_args.out, "Write the synthesized PDP here instead of stdout");
    synth_cmd->add_option("--threshold-db", synth_args.opts.peak_threshold_db, "Peak threshold for the reported DS");
    synth_cmd->add_option("--noise-margin-db", synth_args.opts.noise_margin_db, "Noise margin for the reported DS");
    synth_cmd->callback([&]
                        { action = [&]
                          { return cmd_synth_omni(g, synth_args); }; });

    PasArgs pas_args;
    auto *pas_cmd = app.add_subcommand("pas-metrics", "Omni angular spread and lobe statistics of a PAS file");
    pas_cmd->add_option("--pas", pas_args.pas, "PAS CSV file")->required()->check(CLI::ExistingFile);
    pas_cmd->add_option("--lobe-threshold-db", pas_args.lobe_threshold_db, "Lobe threshold below the peak");
    pas_cmd->callback([&]
                      { action = [&]
                        { return cmd_pas_metrics(g, pas_args); }; });

    SimulateArgs sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Generate link statistics samples");
    sim_cmd->add_option("--band", sim.band, "Carrier frequency in GHz")->required();
    sim_cmd->add_option("--state", sim.state, "los or nlos")->required();
    sim_cmd->add_option("--dist", sim.dist, "T-R separation(s) in m")->required();
    sim_cmd->add_option("--n", sim.n, "Samples per distance");
    sim_cmd->add_option("--seed", sim.seed, "Generator seed");
    sim_cmd->add_option("--source", sim.source, "published, fitted or 3gpp")->check(CLI::IsMember({"published", "paper", "fitted", "3gpp"}));
    sim_cmd->add_option("--as-clamp-deg", sim.as_clamp_deg, "Angular-spread ceiling");
    sim_cmd->add_option("--format", sim.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sim_cmd->callback([&]
                      { action = [&]
                        { return cmd_simulate(g, sim); }; });

    std::string report_out;
    auto *report_cmd = app.add_subcommand("report", "Fit everything and compare against published values");
    report_cmd->add_option("--out", report_out, "Output JSON path (default stdout)");
    report_cmd->callback([&]
                         { action = [&]
                           { return cmd_report(g, report_out); }; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_usage;
    }
    return guarded(action);
}
