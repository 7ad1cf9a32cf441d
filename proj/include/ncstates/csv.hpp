// Copyright 2026 The ncstates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ncstates/quasiprob.hpp"

namespace ncstates {

/// 17 significant digits, general notation.
std::string format_number(double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Throws ValidationError when the row width differs from the header.
  void add_row(const std::vector<double>& row);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// Writes through a sibling temporary file and renames it into place.
/// Throws IoError on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Columns x, y, <value_column>, in the field's row-major order.
CsvTable field_table(const ScalarField& field, const std::string& value_column = "value");

}  // namespace ncstates
