#include "hfl/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hfl {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

[[noreturn]] void cell_error(const std::string& path, std::size_t row, std::size_t col,
                             const std::string& what) {
  throw std::runtime_error(path + ": " + what + " at row " + std::to_string(row) +
                           ", column " + std::to_string(col));
}

}  // namespace

RawCsv parse_csv(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  RawCsv raw;
  std::string line;
  std::vector<std::vector<double>> rows;
  std::size_t n_cols = 0;
  std::size_t data_row = 0;

  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (first && has_header) {
      raw.header = cells;
      n_cols = cells.size();
      first = false;
      continue;
    }
    first = false;
    ++data_row;
    if (n_cols == 0) n_cols = cells.size();
    if (cells.size() != n_cols)
      throw std::runtime_error(path + ": ragged row " + std::to_string(data_row) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(n_cols));
    std::vector<double> parsed(n_cols);
    for (std::size_t j = 0; j < n_cols; ++j) {
      const std::string& cell = cells[j];
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(cell, &used);
      } catch (const std::exception&) {
        cell_error(path, data_row, j + 1, "unparseable cell '" + cell + "'");
      }
      while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
      if (used != cell.size())
        cell_error(path, data_row, j + 1, "trailing characters in cell '" + cell + "'");
      if (!std::isfinite(value))
        cell_error(path, data_row, j + 1, "non-finite value '" + cell + "'");
      parsed[j] = value;
    }
    rows.push_back(std::move(parsed));
  }

  if (rows.empty()) throw std::runtime_error(path + ": no data rows");
  raw.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(n_cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n_cols; ++j)
      raw.values(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return raw;
}

Dataset make_dataset(const RawCsv& raw, Index response_column) {
  const Index n = raw.values.rows();
  const Index cols = raw.values.cols();
  if (response_column < 0 || response_column >= cols)
    throw std::invalid_argument("make_dataset: response column out of range");
  if (cols < 2) throw std::invalid_argument("make_dataset: need at least one feature column");
  if (!raw.header.empty() && static_cast<Index>(raw.header.size()) != cols)
    throw std::invalid_argument("make_dataset: header width mismatch");

  Dataset out;
  out.response = raw.values.col(response_column);
  out.features.resize(n, cols - 1);
  Index k = 0;
  for (Index j = 0; j < cols; ++j) {
    if (j == response_column) continue;
    out.features.col(k) = raw.values.col(j);
    if (!raw.header.empty()) out.feature_names.push_back(raw.header[static_cast<size_t>(j)]);
    ++k;
  }
  return out;
}

Dataset load_csv(const std::string& path, bool has_header, Index response_column) {
  return make_dataset(parse_csv(path, has_header), response_column);
}

void save_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[64];
  if (!data.feature_names.empty()) {
    out << "response";
    for (const auto& name : data.feature_names) out << ',' << name;
    out << '\n';
  }
  for (Index i = 0; i < data.features.rows(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", data.response[i]);
    out << buf;
    for (Index j = 0; j < data.features.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.features(i, j));
      out << ',' << buf;
    }
    out << '\n';
  }
}

Dataset standardize(const Dataset& data) {
  Dataset out = data;
  const Index n = data.features.rows();
  const Index p = data.features.cols();
  out.constant_columns.clear();
  for (Index j = 0; j < p; ++j) {
    const double mean = data.features.col(j).mean();
    out.features.col(j).array() -= mean;
    double sd = 0.0;
    if (n > 1) sd = std::sqrt(out.features.col(j).squaredNorm() / static_cast<double>(n - 1));
    if (sd > 0.0) {
      out.features.col(j) /= sd;
    } else {
      out.constant_columns.push_back(j);
    }
  }
  out.standardized = true;
  return out;
}

}  // namespace hfl
