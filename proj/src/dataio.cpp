#include "mlfit/dataio.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace mlfit {

namespace {

constexpr std::string_view kHeader = "year,unemployment_rate,inflation_rate";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

double parse_double(std::string_view field, int line, const char* what) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("cannot parse ") + what + " '" +
                                   std::string(field) + "'");
    }
    return value;
}

int parse_year(std::string_view field, int line) {
    field = trim(field);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, "cannot parse year '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

void validate(const DataSet& data) {
    if (data.records.empty()) {
        throw ValidationError("dataset '" + data.label + "' has no records");
    }
    int prev_year = 0;
    bool first = true;
    for (const EconRecord& r : data.records) {
        if (!(r.unemployment > 0.0)) {
            throw ValidationError("dataset '" + data.label + "', year " +
                                  std::to_string(r.year) +
                                  ": unemployment rate must be positive");
        }
        if (!std::isfinite(r.unemployment) || !std::isfinite(r.inflation)) {
            throw ValidationError("dataset '" + data.label + "', year " +
                                  std::to_string(r.year) + ": non-finite value");
        }
        if (!first && r.year <= prev_year) {
            throw ValidationError("dataset '" + data.label +
                                  "': years must be strictly increasing (" +
                                  std::to_string(prev_year) + " then " +
                                  std::to_string(r.year) + ")");
        }
        prev_year = r.year;
        first = false;
    }
}

DataSet parse_dataset(std::istream& in, std::string_view label) {
    DataSet data;
    data.label = std::string(label);

    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) {
        throw ParseError(1, "missing header");
    }
    ++lineno;
    if (trim(line) != kHeader) {
        throw ParseError(lineno, "expected header '" + std::string(kHeader) + "'");
    }
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view row = trim(line);
        if (row.empty()) continue;
        const std::size_t c1 = row.find(',');
        const std::size_t c2 = c1 == std::string_view::npos
                                   ? std::string_view::npos
                                   : row.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            row.find(',', c2 + 1) != std::string_view::npos) {
            throw ParseError(lineno, "expected 3 comma-separated fields");
        }
        EconRecord rec;
        rec.year = parse_year(row.substr(0, c1), lineno);
        rec.unemployment = parse_double(row.substr(c1 + 1, c2 - c1 - 1), lineno,
                                        "unemployment rate");
        rec.inflation = parse_double(row.substr(c2 + 1), lineno, "inflation rate");
        data.records.push_back(rec);
    }
    validate(data);
    return data;
}

DataSet load_dataset(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ValidationError("cannot open dataset file '" + file.string() + "'");
    }
    return parse_dataset(in, file.stem().string());
}

std::vector<AveragedPoint> bin_average(const DataSet& data, double bin_width) {
    if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
        throw DomainError("bin_average: bin_width must be positive");
    }
    struct Bin {
        double sum_u = 0.0;
        double sum_i = 0.0;
        std::size_t count = 0;
    };
    std::map<long long, Bin> bins;  // key k: bin [k*w, (k+1)*w)
    for (const EconRecord& r : data.records) {
        const long long k =
            static_cast<long long>(std::floor(r.unemployment / bin_width));
        Bin& b = bins[k];
        b.sum_u += r.unemployment;
        b.sum_i += r.inflation;
        b.count += 1;
    }
    std::vector<AveragedPoint> out;
    out.reserve(bins.size());
    for (const auto& [k, b] : bins) {
        out.push_back({static_cast<double>(k) * bin_width,
                       static_cast<double>(k + 1) * bin_width,
                       b.sum_u / static_cast<double>(b.count),
                       b.sum_i / static_cast<double>(b.count), b.count});
    }
    return out;
}

}  // namespace mlfit
