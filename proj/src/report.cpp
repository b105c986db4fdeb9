#include "ndoppe/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ndoppe {

namespace {

ColumnErrors column_errors(const FitResult& fit, const ReferenceColumn& ref) {
    ColumnErrors e;
    for (std::size_t i = 0; i < fit.fitted.size() && i < ref.fitted.size(); ++i) {
        if (std::isnan(ref.fitted[i])) continue;
        e.max_fitted_rel = std::max(e.max_fitted_rel,
                                    std::fabs(fit.fitted[i] / ref.fitted[i] - 1.0));
    }
    e.nll_rel = std::fabs(fit.nll / ref.nll - 1.0);
    e.chi_sq_rel = std::fabs(fit.chi_sq / ref.chi_sq - 1.0);
    return e;
}

ReportEntry build_entry(const TableFixture& fx) {
    const CountDataset data = fx.dataset();
    ReportEntry e;
    e.fixture = &fx;
    e.poisson = fit_poisson(data);
    e.negbin = fit_negbin(data, 2.0);
    e.ndoppe = fit_ndoppe(data, fx.coeffs);
    e.err_poisson = column_errors(e.poisson, fx.ref_poisson);
    e.err_negbin = column_errors(e.negbin, fx.ref_negbin);
    e.err_ndoppe = column_errors(e.ndoppe, fx.ref_ndoppe);
    return e;
}

std::string render_text(const std::vector<ReportEntry>& entries) {
    std::ostringstream os;
    for (const auto& e : entries) {
        const auto& fx = *e.fixture;
        const CountDataset data = fx.dataset();
        os << "=== " << fx.name << "  (n = " << data.total() << ", coeffs =";
        for (double a : fx.coeffs) os << " " << format_real(a);
        os << ")\n";
        char line[160];
        std::snprintf(line, sizeof(line), "%-6s%12s %14s %14s %14s\n", "count", "observed",
                      "poisson", "negbin(r=2)", "ndoppe");
        os << line;
        const auto& cells = data.cells();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::snprintf(line, sizeof(line), "%-6d%12lld %14s %14s %14s\n", cells[i].count,
                          static_cast<long long>(cells[i].frequency),
                          format_real(e.poisson.fitted[i]).c_str(),
                          format_real(e.negbin.fitted[i]).c_str(),
                          format_real(e.ndoppe.fitted[i]).c_str());
            os << line;
        }
        std::snprintf(line, sizeof(line), "%-18s %14s %14s %14s\n", "nll",
                      format_real(e.poisson.nll).c_str(), format_real(e.negbin.nll).c_str(),
                      format_real(e.ndoppe.nll).c_str());
        os << line;
        std::snprintf(line, sizeof(line), "%-18s %14s %14s %14s\n", "chi-square",
                      format_real(e.poisson.chi_sq).c_str(),
                      format_real(e.negbin.chi_sq).c_str(),
                      format_real(e.ndoppe.chi_sq).c_str());
        os << line;
        std::snprintf(line, sizeof(line),
                      "params: alpha = %s | r = 2, p = %s | theta = %s\n",
                      format_real(e.poisson.params.at("alpha")).c_str(),
                      format_real(e.negbin.params.at("p")).c_str(),
                      format_real(e.ndoppe.params.at("theta")).c_str());
        os << line;
        os << "\n";
    }
    os << "=== max |relative error| vs published columns\n";
    char head[160];
    std::snprintf(head, sizeof(head), "%-8s %10s %10s %10s %10s %10s %10s %10s %10s %10s\n",
                  "table", "po.fit", "po.nll", "po.chi2", "nb.fit", "nb.nll", "nb.chi2",
                  "nd.fit", "nd.nll", "nd.chi2");
    os << head;
    for (const auto& e : entries) {
        char row[200];
        std::snprintf(row, sizeof(row),
                      "%-8s %10.2e %10.2e %10.2e %10.2e %10.2e %10.2e %10.2e %10.2e %10.2e\n",
                      e.fixture->name.c_str(), e.err_poisson.max_fitted_rel,
                      e.err_poisson.nll_rel, e.err_poisson.chi_sq_rel,
                      e.err_negbin.max_fitted_rel, e.err_negbin.nll_rel, e.err_negbin.chi_sq_rel,
                      e.err_ndoppe.max_fitted_rel, e.err_ndoppe.nll_rel, e.err_ndoppe.chi_sq_rel);
        os << row;
    }
    return os.str();
}

std::string render_csv(const std::vector<ReportEntry>& entries) {
    std::ostringstream os;
    os << "table,count,observed,fitted_poisson,fitted_negbin_r2,fitted_ndoppe\n";
    for (const auto& e : entries) {
        const CountDataset data = e.fixture->dataset();
        const auto& cells = data.cells();
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << e.fixture->name << "," << cells[i].count << "," << cells[i].frequency << ","
               << format_real(e.poisson.fitted[i]) << "," << format_real(e.negbin.fitted[i])
               << "," << format_real(e.ndoppe.fitted[i]) << "\n";
        os << e.fixture->name << ",nll,," << format_real(e.poisson.nll) << ","
           << format_real(e.negbin.nll) << "," << format_real(e.ndoppe.nll) << "\n";
        os << e.fixture->name << ",chi_square,," << format_real(e.poisson.chi_sq) << ","
           << format_real(e.negbin.chi_sq) << "," << format_real(e.ndoppe.chi_sq) << "\n";
    }
    return os.str();
}

nlohmann::json fit_json(const FitResult& f, const ColumnErrors& err) {
    nlohmann::json j;
    j["params"] = f.params;
    if (!f.coeffs.empty()) j["coeffs"] = f.coeffs;
    j["fitted"] = f.fitted;
    j["nll"] = f.nll;
    j["chi_square"] = f.chi_sq;
    j["max_fitted_rel_err"] = err.max_fitted_rel;
    j["nll_rel_err"] = err.nll_rel;
    j["chi_square_rel_err"] = err.chi_sq_rel;
    return j;
}

std::string render_json(const std::vector<ReportEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        const CountDataset data = e.fixture->dataset();
        nlohmann::json j;
        j["table"] = e.fixture->name;
        j["n"] = data.total();
        auto& cells = j["cells"] = nlohmann::json::array();
        for (const auto& c : data.cells())
            cells.push_back({{"count", c.count}, {"observed", c.frequency}});
        j["poisson"] = fit_json(e.poisson, e.err_poisson);
        j["negbin_r2"] = fit_json(e.negbin, e.err_negbin);
        j["ndoppe"] = fit_json(e.ndoppe, e.err_ndoppe);
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

}  // namespace

std::vector<ReportEntry> build_report() {
    const auto& fxs = fixtures();
    std::vector<ReportEntry> entries(fxs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(fxs.size()); ++i)
        entries[static_cast<std::size_t>(i)] = build_entry(fxs[static_cast<std::size_t>(i)]);
    return entries;
}

std::string render_report(const std::vector<ReportEntry>& entries, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return render_text(entries);
        case OutputFormat::Csv: return render_csv(entries);
        case OutputFormat::Json: return render_json(entries);
    }
    throw std::logic_error("render_report: unreachable");
}

}  // namespace ndoppe
