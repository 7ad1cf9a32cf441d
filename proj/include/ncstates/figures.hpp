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

#include "ncstates/csv.hpp"

namespace ncstates {

struct FigureOptions {
  int eta_points = 401;
  int tau_points = 2001;
};

struct NamedTable {
  std::string file_name;
  CsvTable table;
};

/// "fig1" .. "fig9".
const std::vector<std::string>& figure_ids();

/// Builds every dataset of one figure in memory. Throws ValidationError for an
/// unknown id or option out of range.
std::vector<NamedTable> build_figure(const std::string& id, const FigureOptions& options = {});

/// Builds and writes the datasets into out_dir (created if missing) and
/// returns the written paths in a fixed order.
std::vector<std::filesystem::path> write_figure(const std::string& id,
                                                const std::filesystem::path& out_dir,
                                                const FigureOptions& options = {});

}  // namespace ncstates
