/*
 * Copyright 2026 The xailab authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "xailab/dataset.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "xailab/error.hpp"
#include "xailab/rng.hpp"
#include "xailab/textio.hpp"

namespace xailab {

namespace {

std::string cell_location(std::size_t row, const std::string& column) {
  return "row " + std::to_string(row + 1) + ", column '" + column + "'";
}

}  // namespace

void Dataset::validate() const {
  schema.validate();
  if (x.cols != schema.n_features())
    throw Error("core", "dataset has " + std::to_string(x.cols) +
                            " columns but schema declares " +
                            std::to_string(schema.n_features()));
  if (labels.size() != x.rows)
    throw Error("core", "dataset has " + std::to_string(x.rows) +
                            " rows but " + std::to_string(labels.size()) +
                            " labels");
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      const double v = x(i, j);
      const auto& f = schema.features[j];
      if (!std::isfinite(v))
        throw Error("core", "non-finite value at " + cell_location(i, f.name));
      if (f.kind == FeatureKind::kCategorical) {
        if (v != std::floor(v) || v < 0.0 ||
            v >= static_cast<double>(f.categories.size()))
          throw Error("core",
                      "invalid category code at " + cell_location(i, f.name));
      }
    }
    if (labels[i] != 0 && labels[i] != 1)
      throw Error("core", "label at row " + std::to_string(i + 1) +
                              " is not 0 or 1");
  }
}

TrainTestSplit split_dataset(const Dataset& data, double test_fraction,
                             std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw Error("core", "test_fraction must lie in (0, 1)");
  const std::size_t n = data.n_rows();
  if (n == 0) throw Error("core", "cannot split an empty dataset");
  const std::size_t n_train =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) *
                                          (1.0 - test_fraction)));
  if (n_train == 0 || n_train == n)
    throw Error("core", "split leaves an empty partition");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(Rng::derive(seed, "split"));
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j =
        static_cast<std::size_t>(rng.uniform_below(static_cast<std::uint64_t>(i)));
    std::swap(order[i - 1], order[j]);
  }

  TrainTestSplit out;
  out.train.schema = data.schema;
  out.test.schema = data.schema;
  out.train.x = Matrix(n_train, data.n_features());
  out.test.x = Matrix(n - n_train, data.n_features());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = order[i];
    if (i < n_train) {
      out.train.x.set_row(i, data.x.row(src));
      out.train.labels.push_back(data.labels[src]);
    } else {
      out.test.x.set_row(i - n_train, data.x.row(src));
      out.test.labels.push_back(data.labels[src]);
    }
  }
  return out;
}

Dataset load_csv(const std::string& path, const FeatureSchema& schema) {
  schema.validate();
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw Error("core", path + ": empty file");

  const auto header = split_csv_line(line);
  const std::size_t m = schema.n_features();
  if (header.size() != m + 1)
    throw Error("core", path + ": header has " +
                            std::to_string(header.size()) +
                            " columns, expected " + std::to_string(m + 1));
  for (std::size_t j = 0; j < m; ++j)
    if (header[j] != schema.features[j].name)
      throw Error("core", path + ": header column " + std::to_string(j + 1) +
                              " is '" + header[j] + "', expected '" +
                              schema.features[j].name + "'");
  if (header[m] != schema.label_name)
    throw Error("core", path + ": last header column is '" + header[m] +
                            "', expected label '" + schema.label_name + "'");

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::size_t row_index = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    ++row_index;
    const auto cells = split_csv_line(line);
    if (cells.size() != m + 1)
      throw Error("core", path + ": row " + std::to_string(row_index) +
                              " has " + std::to_string(cells.size()) +
                              " cells, expected " + std::to_string(m + 1));
    std::vector<double> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& f = schema.features[j];
      if (f.kind == FeatureKind::kContinuous) {
        bool ok = false;
        row[j] = parse_double(cells[j], &ok);
        if (!ok)
          throw Error("core", path + ": bad number at " +
                                  std::to_string(row_index) + ", column '" +
                                  f.name + "'");
      } else {
        std::size_t code = f.categories.size();
        for (std::size_t c = 0; c < f.categories.size(); ++c)
          if (f.categories[c] == cells[j]) {
            code = c;
            break;
          }
        if (code == f.categories.size())
          throw Error("core", path + ": unknown category '" + cells[j] +
                                  "' at row " + std::to_string(row_index) +
                                  ", column '" + f.name + "'");
        row[j] = static_cast<double>(code);
      }
    }
    const std::string& lab = cells[m];
    if (lab == "0") {
      labels.push_back(0);
    } else if (lab == "1") {
      labels.push_back(1);
    } else {
      throw Error("core", path + ": label at row " +
                              std::to_string(row_index) + " is '" + lab +
                              "', expected 0 or 1");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("core", path + ": no data rows");

  Dataset data;
  data.schema = schema;
  data.x = Matrix(rows.size(), m);
  for (std::size_t i = 0; i < rows.size(); ++i) data.x.set_row(i, rows[i]);
  data.labels = std::move(labels);
  data.validate();
  return data;
}

void write_csv(const std::string& path, const Dataset& data) {
  data.validate();
  std::string out;
  const auto& schema = data.schema;
  for (std::size_t j = 0; j < schema.n_features(); ++j) {
    out += schema.features[j].name;
    out += ',';
  }
  out += schema.label_name;
  out += '\n';
  for (std::size_t i = 0; i < data.n_rows(); ++i) {
    for (std::size_t j = 0; j < schema.n_features(); ++j) {
      const auto& f = schema.features[j];
      if (f.kind == FeatureKind::kContinuous) {
        out += format_double(data.x(i, j));
      } else {
        out += f.categories[static_cast<std::size_t>(data.x(i, j))];
      }
      out += ',';
    }
    out += std::to_string(data.labels[i]);
    out += '\n';
  }
  write_text_file(path, out);
}

}  // namespace xailab
