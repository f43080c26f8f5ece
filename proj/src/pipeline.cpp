#include "costcast/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "costcast/arima.hpp"
#include "costcast/boosting.hpp"
#include "costcast/echelon2.hpp"
#include "costcast/errors.hpp"
#include "costcast/forecast_io.hpp"
#include "costcast/holt_winters.hpp"
#include "costcast/metrics.hpp"
#include "costcast/newsvendor.hpp"
#include "costcast/sweep.hpp"

namespace costcast {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v, const char* spec = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

LoadedData load_data(const RunConfig& cfg) {
    LoadedData d{load_panel(cfg.sales_path, cfg.calendar_path, cfg.filter), {}, {}, {}, {}};
    d.features = build_features(d.panel);
    d.splits = make_splits(d.panel, cfg.valid_days, cfg.test_days);
    d.validation_window = {d.splits.train_end + 1, d.splits.valid_end};
    d.test_window = {d.splits.valid_end + 1, d.splits.test_end};
    return d;
}

namespace {

std::unique_ptr<Forecaster> make_model(const std::string& name, const GbrHyper& gbr) {
    if (name == "naive") return std::make_unique<NaiveForecaster>();
    if (name == "holt_winters") return std::make_unique<HoltWintersForecaster>();
    if (name == "arima") return std::make_unique<ArimaForecaster>();
    if (name == "gbr") return std::make_unique<GbrForecaster>(gbr);
    throw ConfigError("unknown model '" + name + "'");
}

GbrHyper tune_gbr(const RunConfig& cfg, const LoadedData& data, json& audit) {
    // Small documented grid, selected by validation RMSE. Fit on train only;
    // the winner is refit on train+validation by the caller.
    const std::vector<GbrHyper> grid = {
        {100, 0.05, 4, cfg.gbr.min_leaf}, {100, 0.10, 4, cfg.gbr.min_leaf},
        {300, 0.05, 4, cfg.gbr.min_leaf}, {100, 0.05, 6, cfg.gbr.min_leaf},
        {300, 0.05, 6, cfg.gbr.min_leaf}, {300, 0.10, 6, cfg.gbr.min_leaf},
    };
    GbrHyper best = cfg.gbr;
    double best_rmse = std::numeric_limits<double>::infinity();
    json trials = json::array();
    for (const auto& hyper : grid) {
        GbrForecaster model(hyper);
        model.fit(data.panel, data.features, data.splits.train_end);
        const ForecastSet fc =
            model.predict(data.panel, data.features, data.validation_window, Split::Validation);
        const double score = rmse(fc, data.panel);
        trials.push_back({{"trees", hyper.trees},
                          {"learning_rate", hyper.learning_rate},
                          {"max_depth", hyper.max_depth},
                          {"min_leaf", hyper.min_leaf},
                          {"validation_rmse", score}});
        if (score < best_rmse) {
            best_rmse = score;
            best = hyper;
        }
    }
    audit["gbr_tuning"] = {{"trials", trials}, {"selected_validation_rmse", best_rmse}};
    return best;
}

}  // namespace

std::vector<ForecastSet> make_forecasts(const RunConfig& cfg, const LoadedData& data,
                                        std::string* audit_json) {
    json audit;
    audit["refit_policy"] =
        "hyperparameters selected on validation (train-only fits); final models refit on "
        "train+validation, then rolled one-step through test without refitting";
    audit["seed"] = cfg.seed;
    std::vector<ForecastSet> out;
    for (const auto& name : cfg.models) {
        GbrHyper hyper = cfg.gbr;
        if (name == "gbr" && cfg.gbr_tune) hyper = tune_gbr(cfg, data, audit);
        auto model = make_model(name, hyper);
        model->fit(data.panel, data.features, data.splits.valid_end);
        out.push_back(model->predict(data.panel, data.features, data.test_window, Split::Test));

        json m;
        m["fit_end_d"] = model->fit_end_d();
        if (auto* hw = dynamic_cast<HoltWintersForecaster*>(model.get())) {
            json series = json::array();
            for (const auto& st : hw->per_series_init())
                series.push_back({{"alpha", st.alpha}, {"beta", st.beta}, {"gamma", st.gamma}});
            m["per_series"] = series;
        } else if (auto* ar = dynamic_cast<ArimaForecaster*>(model.get())) {
            json series = json::array();
            for (const auto& f : ar->per_series_fit())
                series.push_back({{"c", f.params.c},
                                  {"phi", f.params.phi},
                                  {"theta", f.params.theta},
                                  {"sigma2", f.params.sigma2},
                                  {"converged", f.converged}});
            m["per_series"] = series;
            m["convergence_warning"] = ar->any_convergence_warning();
        } else if (auto* gb = dynamic_cast<GbrForecaster*>(model.get())) {
            m["trees"] = gb->ensemble().trees.size();
            m["learning_rate"] = gb->ensemble().learning_rate;
            m["base_score"] = gb->ensemble().base;
            m["max_depth"] = gb->hyper().max_depth;
            m["min_leaf"] = gb->hyper().min_leaf;
            m["final_train_sse"] = gb->ensemble().stage_sse.back();
        }
        audit["models"][name] = m;
    }
    for (const auto& [name, path] : cfg.external_forecasts) {
        ForecastSet fc = import_forecasts(path, data.panel, data.test_window);
        fc.model_name = name;  // config name wins over the file header
        out.push_back(std::move(fc));
        audit["models"][name] = {{"source", path}};
    }
    if (audit_json) *audit_json = audit.dump(2);
    return out;
}

namespace {

void write_accuracy_csv(const fs::path& path, const std::vector<AccuracyReport>& reports) {
    std::ofstream out(path);
    out << "model,rmse,mae,mape,mape_unreliable,n_points\n";
    for (const auto& r : reports) {
        out << r.model_name << ',' << fmt(r.rmse) << ',' << fmt(r.mae) << ',' << fmt(r.mape, "%.6g")
            << ',' << (r.mape_unreliable ? 1 : 0) << ',' << r.n_points << "\n";
    }
}

void write_sim_report(const fs::path& csv_path, const fs::path& json_path,
                      const SimReport& report) {
    std::ofstream out(csv_path);
    out << "model,b,avg_cost,fill_rate,rmse,mae,cost_reduction_pct,fill_gain_pp\n";
    for (const auto& r : report.rows) {
        out << r.model << ',' << fmt(r.b, "%.6g") << ',' << fmt(r.avg_cost) << ','
            << fmt(r.fill_rate) << ',' << fmt(r.rmse) << ',' << fmt(r.mae) << ','
            << fmt(r.cost_reduction_pct, "%.2f") << ',' << fmt(r.fill_gain_pp, "%.2f") << "\n";
    }
    json j;
    for (const auto& r : report.rows) {
        j["models"][r.model]["b_" + fmt(r.b, "%g")] = {{"avg_cost", r.avg_cost},
                                                       {"fill_rate", r.fill_rate},
                                                       {"cost_reduction_pct", r.cost_reduction_pct},
                                                       {"fill_gain_pp", r.fill_gain_pp}};
        j["models"][r.model]["rmse"] = r.rmse;
        j["models"][r.model]["mae"] = r.mae;
    }
    for (const auto& [model, resid] : report.affinity_residuals)
        j["affinity_residuals"][model] = resid;
    for (const auto& [b, names] : report.rankings) j["rankings"]["b_" + fmt(b, "%g")] = names;
    std::ofstream(json_path) << j.dump(2) << "\n";
}

void write_tables_txt(const fs::path& path, const SimReport& report, double reference_b,
                      const std::vector<double>& b_values) {
    std::ofstream out(path);
    out << "Accuracy and inventory KPIs at (h, b) = (1, " << fmt(reference_b, "%g") << ")\n";
    out << "model              rmse     mae      avg_cost fill    cost_red  fill_gain\n";
    for (const auto& r : report.rows) {
        if (r.b != reference_b) continue;
        char line[160];
        std::snprintf(line, sizeof(line), "%-18s %-8.3f %-8.3f %-8.3f %-7.3f %6.1f%%   %+5.1f pp\n",
                      r.model.c_str(), r.rmse, r.mae, r.avg_cost, r.fill_rate,
                      r.cost_reduction_pct, r.fill_gain_pp);
        out << line;
    }
    out << "\nAverage daily cost by shortage penalty\n";
    out << "model             ";
    for (double b : b_values) out << " b=" << fmt(b, "%-6g");
    out << "\n";
    std::string current;
    for (const auto& r : report.rows) {
        if (r.model != current) {
            if (!current.empty()) out << "\n";
            current = r.model;
            char name[32];
            std::snprintf(name, sizeof(name), "%-18s", current.c_str());
            out << name;
        }
        out << fmt(r.avg_cost, "%-9.3f");
    }
    out << "\n";
}

}  // namespace

void run_pipeline(const RunConfig& cfg) {
    fs::create_directories(cfg.output_dir);
    const fs::path out_dir(cfg.output_dir);

    json manifest;
    manifest["version"] = "costcast 0.1.0";
    manifest["config"] = cfg.config_path;
    manifest["config_hash"] = hex64(fnv1a_file(cfg.config_path));
    manifest["sales_hash"] = hex64(fnv1a_file(cfg.sales_path));
    manifest["calendar_hash"] = hex64(fnv1a_file(cfg.calendar_path));
    manifest["seed"] = cfg.seed;
    manifest["complete"] = false;
    json artifacts = json::array();
    auto flush_manifest = [&] {
        manifest["artifacts"] = artifacts;
        std::ofstream(out_dir / "manifest.json") << manifest.dump(2) << "\n";
    };
    flush_manifest();

    const LoadedData data = load_data(cfg);
    manifest["n_series"] = data.panel.n_series();
    manifest["n_days"] = data.panel.n_days();
    manifest["splits"] = {{"train_end", data.splits.train_end},
                          {"valid_end", data.splits.valid_end},
                          {"test_end", data.splits.test_end}};

    std::string audit;
    const std::vector<ForecastSet> forecasts = make_forecasts(cfg, data, &audit);
    std::ofstream(out_dir / "model_audit.json") << audit << "\n";
    artifacts.push_back("model_audit.json");

    fs::create_directories(out_dir / "forecasts");
    for (const auto& fc : forecasts) {
        const std::string fname = "forecasts/" + fc.model_name + "_test.csv";
        export_forecasts(fc, data.panel, (out_dir / fname).string());
        artifacts.push_back(fname);
    }

    std::vector<AccuracyReport> acc;
    for (const auto& fc : forecasts) acc.push_back(accuracy_report(fc, data.panel));
    write_accuracy_csv(out_dir / "accuracy.csv", acc);
    artifacts.push_back("accuracy.csv");

    {
        std::ofstream out(out_dir / "per_series_rmse.csv");
        out << "model,item_id,dept_id,store_id,state_id,rmse\n";
        for (const auto& fc : forecasts) {
            const auto per = per_series_rmse(fc, data.panel);
            for (size_t i = 0; i < per.size(); ++i) {
                const SeriesKey& k = data.panel.keys()[i];
                out << fc.model_name << ',' << k.item_id << ',' << k.dept_id << ',' << k.store_id
                    << ',' << k.state_id << ',' << fmt(per[i]) << "\n";
            }
        }
        artifacts.push_back("per_series_rmse.csv");
    }

    SweepSpec spec;
    spec.holding = cfg.sweep_h;
    spec.b_values = cfg.sweep_b;
    spec.baseline = cfg.baseline;
    std::vector<const ForecastSet*> refs;
    for (const auto& fc : forecasts) refs.push_back(&fc);
    const SimReport report = run_sweep(refs, data.panel, spec);
    write_sim_report(out_dir / "sim_report.csv", out_dir / "sim_report.json", report);
    artifacts.push_back("sim_report.csv");
    artifacts.push_back("sim_report.json");
    write_tables_txt(out_dir / "tables.txt", report, spec.reference_b, spec.b_values);
    artifacts.push_back("tables.txt");

    if (cfg.verbose_dumps) {
        std::ofstream out(out_dir / "per_day_costs.csv");
        out << "model,series,d,cost\n";
        for (const auto& fc : forecasts) {
            const SimOutcome sim =
                simulate(fc, data.panel, CostParams(cfg.sweep_h, spec.reference_b));
            for (size_t i = 0; i < sim.n_series; ++i) {
                for (int k = 0; k < sim.n_days; ++k) {
                    out << fc.model_name << ',' << data.panel.keys()[i].str() << ",d_"
                        << (fc.window.start_d + k) << ','
                        << fmt(sim.per_day_costs[i * sim.n_days + k]) << "\n";
                }
            }
        }
        artifacts.push_back("per_day_costs.csv");
    }

    if (cfg.echelon_enabled) {
        EchelonConfig ecfg;
        size_t n_stores = data.panel.n_series();
        if (cfg.echelon_max_stores > 0)
            n_stores = std::min(n_stores, static_cast<size_t>(cfg.echelon_max_stores));
        for (size_t i = 0; i < n_stores; ++i) ecfg.store_set.push_back(i);
        ecfg.dc_cost = CostParams(cfg.echelon_h_dc, cfg.echelon_b_dc);
        ecfg.store_shortage = cfg.echelon_b_store;
        ecfg.initial_dc_inventory = cfg.echelon_initial_inventory;
        json j;
        j["config"] = {{"n_stores", n_stores},
                       {"h_dc", cfg.echelon_h_dc},
                       {"b_dc", cfg.echelon_b_dc},
                       {"b_store", cfg.echelon_b_store},
                       {"initial_dc_inventory", cfg.echelon_initial_inventory}};
        for (const auto& fc : forecasts) {
            const EchelonOutcome eo = simulate_network(fc, data.panel, ecfg);
            json m = {{"avg_network_cost", eo.avg_network_cost},
                      {"network_fill_rate", eo.network_fill_rate}};
            if (cfg.verbose_dumps) m["dc_inventory_trace"] = eo.dc_inventory_trace;
            j["models"][fc.model_name] = m;
        }
        std::ofstream(out_dir / "echelon.json") << j.dump(2) << "\n";
        artifacts.push_back("echelon.json");
    }

    manifest["complete"] = true;
    flush_manifest();
}

}  // namespace costcast
