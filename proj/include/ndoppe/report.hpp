#ifndef NDOPPE_REPORT_HPP
#define NDOPPE_REPORT_HPP

#include <string>
#include <vector>

#include "ndoppe/fitting.hpp"
#include "ndoppe/fixtures.hpp"
#include "ndoppe/io.hpp"

namespace ndoppe {

// Largest |relative error| between a computed column and its published
// reference; NaN reference entries are skipped.
struct ColumnErrors {
    double max_fitted_rel = 0.0;
    double nll_rel = 0.0;
    double chi_sq_rel = 0.0;
};

struct ReportEntry {
    const TableFixture* fixture = nullptr;
    FitResult poisson;
    FitResult negbin;  // r fixed at 2, matching the published comparison
    FitResult ndoppe;
    ColumnErrors err_poisson;
    ColumnErrors err_negbin;
    ColumnErrors err_ndoppe;
};

// Fits all eight bundled datasets (fixture fits are independent and run
// concurrently) and attaches the error summaries against the published
// columns.
std::vector<ReportEntry> build_report();

std::string render_report(const std::vector<ReportEntry>& entries, OutputFormat format);

}  // namespace ndoppe

#endif
