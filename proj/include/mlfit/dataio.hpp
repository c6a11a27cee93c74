#pragma once

// Parsing, validation, and level-binning of (unemployment, inflation) yearly
// series, plus the built-in France/Germany 1980-2011 reference datasets.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mlfit/errors.hpp"

namespace mlfit {

// One year's observation.  Unemployment must be strictly positive (the
// power model x^c needs x > 0); inflation may be negative.
struct EconRecord {
    int year;
    double unemployment;  // percent
    double inflation;     // percent
};

struct DataSet {
    std::string label;
    std::vector<EconRecord> records;  // years strictly increasing, non-empty
};

// Per-unemployment-level mean pair.  Bounds are k*width and (k+1)*width;
// whole numbers for the default unit width.
struct AveragedPoint {
    double level_low;
    double level_high;
    double mean_unemployment;
    double mean_inflation;
    std::size_t count;
};

// Throws ValidationError if `data` violates the DataSet invariants.
void validate(const DataSet& data);

// Reads CSV with header `year,unemployment_rate,inflation_rate`.
// Throws ParseError (with line number) on malformed input and
// ValidationError on invariant violations.
DataSet parse_dataset(std::istream& in, std::string_view label);

// Convenience file loader; the label defaults to the file stem.
DataSet load_dataset(const std::filesystem::path& file);

// The two built-in datasets, keyed "france" and "germany"; 32 records each.
const std::map<std::string, DataSet>& embedded_datasets();

// Partitions records into half-open bins [k*w, (k+1)*w) by unemployment
// (lower bound included) and emits the per-bin arithmetic means, ordered by
// level; empty bins are omitted.
std::vector<AveragedPoint> bin_average(const DataSet& data,
                                       double bin_width = 1.0);

}  // namespace mlfit
