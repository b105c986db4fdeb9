#ifndef NDOPPE_FIXTURES_HPP
#define NDOPPE_FIXTURES_HPP

#include <string>
#include <vector>

#include "ndoppe/fitting.hpp"

namespace ndoppe {

// Published fitted column for one model on one dataset, used by the
// report command to print relative-error summaries.
struct ReferenceColumn {
    std::vector<double> fitted;  // expected counts per cell; NaN = unusable entry
    double nll = 0.0;
    double chi_sq = 0.0;
};

// One of the eight bundled automobile claim-count datasets, together
// with the NDOPPE coefficient configuration it is conventionally fitted
// with and the published comparison columns (Poisson; negative binomial
// with r fixed at 2; NDOPPE).
struct TableFixture {
    std::string name;
    std::vector<CountCell> cells;
    std::vector<double> coeffs;
    ReferenceColumn ref_poisson;
    ReferenceColumn ref_negbin;
    ReferenceColumn ref_ndoppe;

    CountDataset dataset() const { return CountDataset(cells); }
};

const std::vector<TableFixture>& fixtures();

// nullptr when no fixture has that name ("table1".."table8").
const TableFixture* find_fixture(const std::string& name);

}  // namespace ndoppe

#endif
