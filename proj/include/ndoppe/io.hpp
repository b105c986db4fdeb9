#ifndef NDOPPE_IO_HPP
#define NDOPPE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ndoppe/fitting.hpp"

namespace ndoppe {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_output_format(const std::string& s);

// Reads a claim-count frequency table:
//   header line `count,frequency`, one `count,frequency` pair per line,
//   `#` comments and blank lines ignored, UTF-8.
// Zero-frequency rows are retained.  Throws std::runtime_error with the
// offending line number on malformed input.
CountDataset read_count_csv(std::istream& in, const std::string& source_name = "<stream>");
CountDataset read_count_csv_file(const std::string& path);

// Fit rendering.  Text and CSV print reals with 7 significant digits;
// JSON keeps full round-trip precision.
struct FitRenderInput {
    std::string dataset_name;
    const CountDataset* data = nullptr;
    std::vector<FitResult> fits;
};

std::string render_fits(const FitRenderInput& in, OutputFormat format);

// Number formatting used by the table renderers (7 significant digits).
std::string format_real(double v);

}  // namespace ndoppe

#endif
