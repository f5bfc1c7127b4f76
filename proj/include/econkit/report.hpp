#pragma once

// Report pipeline: load -> validate -> (difference) -> fit -> HAC ->
// diagnostics, plus the text/json/csv renderers the CLI prints. All
// rendering is deterministic: fixed printf formats, no locale dependence.

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "econkit/errors.hpp"
#include "econkit/hac.hpp"
#include "econkit/ingest.hpp"
#include "econkit/linreg.hpp"
#include "econkit/normality.hpp"
#include "econkit/timeseries.hpp"
#include "econkit/unitroot.hpp"

namespace econkit {

/// Process exit codes used by the CLI and asserted by integration tests.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_data_error = 2,
    exit_model_error = 3,
};

struct StarThresholds {
    double three = 0.01;  // ***
    double two = 0.05;    // **
    double one = 0.10;    // *

    void check() const {
        if (!(three > 0.0 && three < two && two < one && one < 1.0))
            throw ModelError("star thresholds must be strictly increasing within (0,1)");
    }
};

enum class OutputFormat { text, json, csv };

struct ReportConfig {
    std::string data_path;
    DatasetSchema schema;
    bool difference = true;
    HacConfig hac;
    AdfVariant adf_variant = AdfVariant::none;
    LagSelection adf_lags = LagSelection::fixed(0);
    OutputFormat output_format = OutputFormat::text;
    StarThresholds star_convention;

    // Presentation defaults for the canonical schema; unknown variables
    // fall back to 4 decimals and an empty source label.
    std::map<std::string, int> summary_decimals = {
        {"REER", 2}, {"USLR", 3}, {"M2", 2}, {"CPI", 3}, {"WIR", 4}};
    std::map<std::string, std::string> sources = {{"REER", "IMF"},
                                                  {"USLR", "IMF"},
                                                  {"M2", "IMF"},
                                                  {"CPI", "IMF"},
                                                  {"WIR", "Federal Reserve"}};

    /// Dependent variable is the first schema column, regressors the rest.
    std::string dependent() const { return schema.variable_columns.front(); }
    std::vector<std::string> regressors() const {
        return {schema.variable_columns.begin() + 1, schema.variable_columns.end()};
    }
};

struct RenderedTable {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footnotes;
};

// --- deterministic number formatting ---

inline std::string fmt_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

inline std::string fmt_sci(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", decimals, x);
    return buf;
}

/// p-value rendering: scientific below 1e-4, else 5 decimals.
inline std::string fmt_p(double p) { return p < 1e-4 ? fmt_sci(p, 3) : fmt_fixed(p, 5); }

inline std::string stars_for_p(double p, const StarThresholds& t = {}) {
    t.check();
    if (p < t.three) return "***";
    if (p < t.two) return "**";
    if (p < t.one) return "*";
    return "";
}

inline std::string stars_for(Significance s) {
    switch (s) {
        case Significance::at_1: return "***";
        case Significance::at_5: return "**";
        case Significance::at_10: return "*";
        case Significance::none: return "";
    }
    return "";
}

// --- pipeline ---

inline Frame load_stage(const ReportConfig& cfg) {
    if (cfg.data_path.empty()) throw DataError("no data file given (--data or ECONKIT_DATA)");
    return load_csv(cfg.data_path, cfg.schema);
}

struct RegressionOutput {
    Frame model;  // differenced (column names preserved) or raw
    RegressionSpec spec;
    FitResult ols;  // classical covariance
    FitResult fit;  // Newey-West covariance
    SwResult sw;    // Shapiro-Wilk on the OLS residuals
    Period sample_start{1900, 1};
    Period sample_end{1900, 1};
};

inline RegressionOutput run_regression(const Frame& raw, const ReportConfig& cfg) {
    std::vector<Series> cols;
    cols.reserve(raw.n_cols());
    if (cfg.difference) {
        // First-difference every column; keep the original names so report
        // rows read like the level variables.
        for (const auto& c : raw.columns()) cols.push_back(diff(c, 1).renamed(c.name()));
    } else {
        cols.assign(raw.columns().begin(), raw.columns().end());
    }
    Frame model(std::move(cols));

    RegressionSpec spec;
    spec.dependent = cfg.dependent();
    spec.regressors = cfg.regressors();
    spec.include_intercept = true;

    DesignMatrix design = build_design(model, spec);
    const Series& dep = model.column(spec.dependent);
    Eigen::VectorXd y(static_cast<Eigen::Index>(dep.size()));
    for (std::size_t t = 0; t < dep.size(); ++t) y(static_cast<Eigen::Index>(t)) = dep[t];

    FitResult ols = fit_ols(design, y);
    FitResult fit = refit_with_hac(ols, design, cfg.hac);
    const std::vector<double> resid(ols.residuals.data(), ols.residuals.data() + ols.residuals.size());
    SwResult sw = shapiro_wilk(resid);

    return RegressionOutput{std::move(model), std::move(spec), std::move(ols), std::move(fit),
                            sw, raw.start(), raw.end()};
}

// --- tables ---

inline RenderedTable summary_table(const Frame& raw, const ReportConfig& cfg) {
    RenderedTable t;
    t.title = "Dataset Summary";
    t.headers = {"Variable", "Source", "Minimum", "Mean", "Maximum"};
    for (const auto& row : summary_stats(raw)) {
        const auto dec_it = cfg.summary_decimals.find(row.variable);
        const int dec = dec_it == cfg.summary_decimals.end() ? 4 : dec_it->second;
        const auto src_it = cfg.sources.find(row.variable);
        const std::string src = src_it == cfg.sources.end() ? "" : src_it->second;
        t.rows.push_back({row.variable, src, fmt_fixed(row.minimum, dec), fmt_fixed(row.mean, dec),
                          fmt_fixed(row.maximum, dec)});
    }
    t.footnotes.push_back("Observations: " + std::to_string(raw.n_rows()) + " (" +
                          raw.start().to_string() + " - " + raw.end().to_string() + ")");
    return t;
}

inline RenderedTable adf_table(const Frame& raw, const ReportConfig& cfg) {
    RenderedTable t;
    t.title = "Augmented Dickey-Fuller Test Results";
    t.headers = {"Variable", "Test Statistic", "Critical Value (5%)", "Significant"};
    for (const auto& row : stationarity_report(raw, cfg.adf_variant, cfg.adf_lags)) {
        t.rows.push_back({row.label, fmt_fixed(row.result.statistic, 3),
                          fmt_fixed(row.result.critical_values.pct5, 2),
                          stars_for(row.result.significance)});
    }
    t.footnotes.push_back("Left-tailed test; reject the unit root when the statistic is below "
                          "the critical value.");
    t.footnotes.push_back("Significance: *** beyond the 1% critical value, ** beyond 5%, "
                          "* beyond 10%.");
    return t;
}

inline RenderedTable regression_table(const RegressionOutput& reg, const ReportConfig& cfg) {
    RenderedTable t;
    const bool hac = reg.fit.covariance_kind == CovarianceKind::newey_west;
    t.title = hac ? "Regression Results with Newey-West Standard Errors" : "Regression Results";
    t.headers = {"Variable", "Estimate", "Std. Error", "t value", "Pr(>|t|)"};

    bool degenerate = false;
    for (Eigen::Index i = 0; i < reg.fit.coefficients.size(); ++i) {
        const double se = reg.fit.std_errors(i);
        const double tv = reg.fit.t_values(i);
        const double p = reg.fit.p_values(i);
        if (!(se > 0.0)) degenerate = true;
        std::string p_cell = fmt_p(p);
        const std::string st = stars_for_p(p, cfg.star_convention);
        if (!st.empty()) p_cell += " " + st;
        t.rows.push_back({reg.fit.names[static_cast<std::size_t>(i)],
                          fmt_fixed(reg.fit.coefficients(i), 5), fmt_fixed(se, 5),
                          std::isfinite(tv) ? fmt_fixed(tv, 4) : (tv > 0 ? "inf" : "-inf"),
                          p_cell});
    }

    t.footnotes.push_back("Dependent Variable: " + reg.spec.dependent +
                          (cfg.difference ? " (Differenced)" : ""));
    t.footnotes.push_back("Method: Least Squares");
    t.footnotes.push_back("Sample: " + reg.sample_start.to_string() + " - " +
                          reg.sample_end.to_string());
    t.footnotes.push_back("Included observations: " + std::to_string(reg.fit.nobs) +
                          " after adjustments");
    if (hac)
        t.footnotes.push_back("Newey-West HAC Standard Errors & Covariance (lag truncation=" +
                              std::to_string(reg.fit.hac_lag) + ")");
    t.footnotes.push_back("Signif. codes: *** p<" + fmt_fixed(cfg.star_convention.three, 2) +
                          ", ** p<" + fmt_fixed(cfg.star_convention.two, 2) + ", * p<" +
                          fmt_fixed(cfg.star_convention.one, 2));
    if (cfg.hac.scaling == HacScaling::paper_formula)
        t.footnotes.push_back(
            "Note: hac-scaling=paper divides the covariance by T; standard errors are "
            "about sqrt(T) smaller than conventional Newey-West output.");
    if (!cfg.difference)
        t.footnotes.push_back(
            "Warning: variables enter in levels; if they carry unit roots the regression "
            "may be spurious.");
    if (degenerate)
        t.footnotes.push_back(
            "Warning: residuals are numerically zero; standard errors and p-values are "
            "degenerate.");
    return t;
}

// --- renderers ---

inline std::string render_text(const RenderedTable& t) {
    std::vector<std::size_t> width(t.headers.size(), 0);
    for (std::size_t j = 0; j < t.headers.size(); ++j) width[j] = t.headers[j].size();
    for (const auto& row : t.rows)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());

    std::ostringstream out;
    out << t.title << '\n' << std::string(t.title.size(), '=') << '\n';
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j > 0) out << "  ";
            // first column left-aligned, the rest right-aligned
            if (j == 0)
                out << cells[j] << std::string(width[j] - cells[j].size(), ' ');
            else
                out << std::string(width[j] - cells[j].size(), ' ') << cells[j];
        }
        out << '\n';
    };
    emit_row(t.headers);
    std::size_t total = 0;
    for (std::size_t j = 0; j < width.size(); ++j) total += width[j] + (j > 0 ? 2 : 0);
    out << std::string(total, '-') << '\n';
    for (const auto& row : t.rows) emit_row(row);
    for (const auto& f : t.footnotes) out << f << '\n';
    return out.str();
}

inline std::string render_csv(const RenderedTable& t) {
    std::ostringstream out;
    out << "# " << t.title << '\n';
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j > 0) out << ',';
            out << cells[j];
        }
        out << '\n';
    };
    emit(t.headers);
    for (const auto& row : t.rows) emit(row);
    return out.str();
}

// --- machine-readable (full precision) ---

inline nlohmann::json summary_json(const Frame& raw, const ReportConfig& cfg) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : summary_stats(raw)) {
        const auto src_it = cfg.sources.find(row.variable);
        arr.push_back({{"variable", row.variable},
                       {"source", src_it == cfg.sources.end() ? "" : src_it->second},
                       {"minimum", row.minimum},
                       {"mean", row.mean},
                       {"maximum", row.maximum},
                       {"count", row.count}});
    }
    return arr;
}

inline nlohmann::json adf_json(const Frame& raw, const ReportConfig& cfg) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : stationarity_report(raw, cfg.adf_variant, cfg.adf_lags)) {
        arr.push_back({{"variable", row.label},
                       {"statistic", row.result.statistic},
                       {"critical_values",
                        {{"1%", row.result.critical_values.pct1},
                         {"5%", row.result.critical_values.pct5},
                         {"10%", row.result.critical_values.pct10}}},
                       {"significant", stars_for(row.result.significance)},
                       {"lag_order", row.result.lag_order},
                       {"nobs_used", row.result.nobs_used}});
    }
    return arr;
}

inline nlohmann::json regression_json(const RegressionOutput& reg, const ReportConfig& cfg) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (Eigen::Index i = 0; i < reg.fit.coefficients.size(); ++i) {
        coeffs.push_back({{"name", reg.fit.names[static_cast<std::size_t>(i)]},
                          {"estimate", reg.fit.coefficients(i)},
                          {"std_error", reg.fit.std_errors(i)},
                          {"t_value", reg.fit.t_values(i)},
                          {"p_value", reg.fit.p_values(i)},
                          {"stars", stars_for_p(reg.fit.p_values(i), cfg.star_convention)}});
    }
    return {{"dependent", reg.spec.dependent},
            {"differenced", cfg.difference},
            {"coefficients", coeffs},
            {"r_squared", reg.fit.r_squared},
            {"nobs", reg.fit.nobs},
            {"df_resid", reg.fit.df_resid},
            {"covariance",
             reg.fit.covariance_kind == CovarianceKind::newey_west ? "newey_west" : "classical"},
            {"hac_lag", reg.fit.hac_lag},
            {"sample",
             {{"start", reg.sample_start.to_string()}, {"end", reg.sample_end.to_string()}}}};
}

inline nlohmann::json diagnostics_json(const SwResult& sw) {
    return {{"shapiro_wilk", {{"W", sw.w_statistic}, {"p", sw.p_value}, {"n", sw.n}}}};
}

inline std::string diagnostics_line(const SwResult& sw) {
    return "Shapiro-Wilk W=" + fmt_fixed(sw.w_statistic, 5) + ", p=" + fmt_fixed(sw.p_value, 4);
}

// --- commands (load + render; the CLI prints the returned string) ---

inline std::string cmd_summary(const ReportConfig& cfg, ValidationReport* findings = nullptr) {
    const Frame raw = load_stage(cfg);
    if (findings) *findings = validate(raw);
    switch (cfg.output_format) {
        case OutputFormat::json:
            return nlohmann::json{{"summary", summary_json(raw, cfg)}}.dump(2) + "\n";
        case OutputFormat::csv: return render_csv(summary_table(raw, cfg));
        case OutputFormat::text: break;
    }
    return render_text(summary_table(raw, cfg));
}

inline std::string cmd_adf(const ReportConfig& cfg, ValidationReport* findings = nullptr) {
    const Frame raw = load_stage(cfg);
    if (findings) *findings = validate(raw);
    switch (cfg.output_format) {
        case OutputFormat::json:
            return nlohmann::json{{"adf", adf_json(raw, cfg)}}.dump(2) + "\n";
        case OutputFormat::csv: return render_csv(adf_table(raw, cfg));
        case OutputFormat::text: break;
    }
    return render_text(adf_table(raw, cfg));
}

inline std::string cmd_regress(const ReportConfig& cfg, ValidationReport* findings = nullptr) {
    const Frame raw = load_stage(cfg);
    if (findings) *findings = validate(raw);
    const RegressionOutput reg = run_regression(raw, cfg);
    switch (cfg.output_format) {
        case OutputFormat::json:
            return nlohmann::json{{"regression", regression_json(reg, cfg)}}.dump(2) + "\n";
        case OutputFormat::csv: return render_csv(regression_table(reg, cfg));
        case OutputFormat::text: break;
    }
    return render_text(regression_table(reg, cfg));
}

/// Full document: summary, ADF, regression, then the Shapiro-Wilk line.
inline std::string cmd_report(const ReportConfig& cfg, ValidationReport* findings = nullptr) {
    const Frame raw = load_stage(cfg);
    if (findings) *findings = validate(raw);
    const RegressionOutput reg = run_regression(raw, cfg);
    switch (cfg.output_format) {
        case OutputFormat::json:
            return nlohmann::json{{"summary", summary_json(raw, cfg)},
                                  {"adf", adf_json(raw, cfg)},
                                  {"regression", regression_json(reg, cfg)},
                                  {"diagnostics", diagnostics_json(reg.sw)}}
                       .dump(2) +
                   "\n";
        case OutputFormat::csv:
            return render_csv(summary_table(raw, cfg)) + "\n" + render_csv(adf_table(raw, cfg)) +
                   "\n" + render_csv(regression_table(reg, cfg)) + "\n# Diagnostics\n" +
                   "shapiro_wilk_w,shapiro_wilk_p\n" + fmt_fixed(reg.sw.w_statistic, 5) + "," +
                   fmt_fixed(reg.sw.p_value, 4) + "\n";
        case OutputFormat::text: break;
    }
    return render_text(summary_table(raw, cfg)) + "\n" + render_text(adf_table(raw, cfg)) + "\n" +
           render_text(regression_table(reg, cfg)) + "\n" + diagnostics_line(reg.sw) + "\n";
}

}  // namespace econkit
