#pragma once

#include "hfl/types.hpp"

#include <string>
#include <vector>

namespace hfl {

/// Raw CSV content before the response column is split off.
struct RawCsv {
  Mat values;
  std::vector<std::string> header;  // empty when the file has no header row
};

struct Dataset {
  Mat features;
  Vec response;
  std::vector<std::string> feature_names;  // empty when unnamed
  bool standardized = false;
  std::vector<Index> constant_columns;  // flagged during standardization
};

/// Strict numeric CSV parse: comma-delimited, '.' decimal separator,
/// optional single header row.  Ragged rows and non-finite cells raise
/// errors that name the offending row/column (1-based, header excluded).
RawCsv parse_csv(const std::string& path, bool has_header);

/// Splits one column off as the response; the rest become features.
Dataset make_dataset(const RawCsv& raw, Index response_column);

/// parse_csv followed by make_dataset.
Dataset load_csv(const std::string& path, bool has_header, Index response_column = 0);

/// Writes response followed by feature columns, full double precision.
void save_csv(const Dataset& data, const std::string& path);

/// Center each feature column and scale it to unit sample standard
/// deviation; constant columns are centered only and recorded in
/// constant_columns.  The response is untouched.
Dataset standardize(const Dataset& data);

}  // namespace hfl
