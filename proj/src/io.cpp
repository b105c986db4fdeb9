#include "ndoppe/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ndoppe {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
    if (s == "text" || s == "text-table") return OutputFormat::Text;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format '" + s + "' (expected text, csv or json)");
}

CountDataset read_count_csv(std::istream& in, const std::string& source_name) {
    std::vector<CountCell> cells;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            std::string squashed;
            for (char c : t)
                if (!std::isspace(static_cast<unsigned char>(c))) squashed += static_cast<char>(std::tolower(c));
            if (squashed != "count,frequency")
                parse_fail(source_name, lineno, "expected header 'count,frequency'");
            header_seen = true;
            continue;
        }
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            parse_fail(source_name, lineno, "expected 'count,frequency' pair");
        long count = 0;
        long long freq = 0;
        try {
            std::size_t used = 0;
            const std::string c_str = trim(t.substr(0, comma));
            const std::string f_str = trim(t.substr(comma + 1));
            count = std::stol(c_str, &used);
            if (used != c_str.size()) throw std::invalid_argument("trailing characters");
            freq = std::stoll(f_str, &used);
            if (used != f_str.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            parse_fail(source_name, lineno, "malformed row '" + t + "'");
        }
        if (count < 0) parse_fail(source_name, lineno, "negative count value");
        if (freq < 0) parse_fail(source_name, lineno, "negative frequency");
        for (const auto& c : cells)
            if (c.count == count)
                parse_fail(source_name, lineno,
                           "duplicate count value " + std::to_string(count));
        cells.push_back({static_cast<int>(count), freq});
    }
    if (!header_seen) throw std::runtime_error(source_name + ": empty input (missing header)");
    if (cells.empty()) throw std::runtime_error(source_name + ": dataset has no rows");
    return CountDataset(std::move(cells));
}

CountDataset read_count_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return read_count_csv(in, path);
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.7g", v);
    return buf;
}

namespace {

std::string render_fits_text(const FitRenderInput& in) {
    std::ostringstream os;
    os << "dataset: " << in.dataset_name << "  (n = " << in.data->total() << ")\n";
    for (const auto& f : in.fits) {
        os << "model " << f.model << ":";
        for (const auto& [k, v] : f.params) os << "  " << k << " = " << format_real(v);
        if (!f.coeffs.empty()) {
            os << "  coeffs =";
            for (double a : f.coeffs) os << " " << format_real(a);
        }
        os << "\n";
    }
    os << "\ncount     observed";
    for (const auto& f : in.fits) {
        char head[32];
        std::snprintf(head, sizeof(head), " %14s", f.model.c_str());
        os << head;
    }
    os << "\n";
    const auto& cells = in.data->cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        char row[64];
        std::snprintf(row, sizeof(row), "%-6d%12lld", cells[i].count,
                      static_cast<long long>(cells[i].frequency));
        os << row;
        for (const auto& f : in.fits) {
            char cell[32];
            std::snprintf(cell, sizeof(cell), " %14s", format_real(f.fitted[i]).c_str());
            os << cell;
        }
        os << "\n";
    }
    os << "nll               ";
    for (const auto& f : in.fits) {
        char cell[32];
        std::snprintf(cell, sizeof(cell), " %14s", format_real(f.nll).c_str());
        os << cell;
    }
    os << "\nchi-square        ";
    for (const auto& f : in.fits) {
        char cell[32];
        std::snprintf(cell, sizeof(cell), " %14s", format_real(f.chi_sq).c_str());
        os << cell;
    }
    os << "\n";
    for (const auto& f : in.fits)
        for (const auto& w : f.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string render_fits_csv(const FitRenderInput& in) {
    std::ostringstream os;
    os << "count,observed";
    for (const auto& f : in.fits) os << ",fitted_" << f.model;
    os << "\n";
    const auto& cells = in.data->cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        os << cells[i].count << "," << cells[i].frequency;
        for (const auto& f : in.fits) os << "," << format_real(f.fitted[i]);
        os << "\n";
    }
    os << "nll,";
    for (const auto& f : in.fits) os << "," << format_real(f.nll);
    os << "\nchi_square,";
    for (const auto& f : in.fits) os << "," << format_real(f.chi_sq);
    os << "\n";
    return os.str();
}

std::string render_fits_json(const FitRenderInput& in) {
    nlohmann::json j;
    j["dataset"]["name"] = in.dataset_name;
    j["dataset"]["n"] = in.data->total();
    auto& cells = j["dataset"]["cells"] = nlohmann::json::array();
    for (const auto& c : in.data->cells())
        cells.push_back({{"count", c.count}, {"observed", c.frequency}});
    auto& fits = j["fits"] = nlohmann::json::array();
    for (const auto& f : in.fits) {
        nlohmann::json jf;
        jf["model"] = f.model;
        jf["params"] = f.params;
        if (!f.coeffs.empty()) jf["coeffs"] = f.coeffs;
        jf["fitted"] = f.fitted;
        jf["nll"] = f.nll;
        jf["chi_square"] = f.chi_sq;
        jf["warnings"] = f.warnings;
        fits.push_back(std::move(jf));
    }
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_fits(const FitRenderInput& in, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return render_fits_text(in);
        case OutputFormat::Csv: return render_fits_csv(in);
        case OutputFormat::Json: return render_fits_json(in);
    }
    throw std::logic_error("render_fits: unreachable");
}

}  // namespace ndoppe
