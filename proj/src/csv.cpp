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

#include "ncstates/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "ncstates/errors.hpp"

namespace ncstates {

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw ValidationError("CsvTable: header must not be empty");
}

void CsvTable::add_row(const std::vector<double>& row) {
  if (row.size() != header_.size()) {
    throw ValidationError("CsvTable: row has " + std::to_string(row.size()) +
                          " fields, header has " + std::to_string(header_.size()));
  }
  rows_.push_back(row);
}

std::string CsvTable::render() const {
  std::string out;
  for (std::size_t k = 0; k < header_.size(); ++k) {
    if (k) out += ',';
    out += header_[k];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += format_number(row[k]);
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) throw IoError("failed while writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " to " + path.string());
  }
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  write_file_atomic(path, table.render());
}

CsvTable field_table(const ScalarField& field, const std::string& value_column) {
  CsvTable table({"x", "y", value_column});
  for (int i = 0; i < field.grid.nx; ++i) {
    for (int j = 0; j < field.grid.ny; ++j) {
      table.add_row({field.grid.x(i), field.grid.y(j), field.at(i, j)});
    }
  }
  return table;
}

}  // namespace ncstates
