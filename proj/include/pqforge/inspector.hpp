/*
 * Copyright (c) 2026, the pqforge authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pqforge/types.hpp"

namespace pqforge {

struct InspectOptions {
  // false: per-page detail estimated from chunk metadata, flagged
  // approximate (assumes one data page per chunk).
  bool scan_pages = true;
  std::optional<std::vector<std::string>> columns;
};

/// Footer + page-header census of a Parquet file. Metadata-only; column
/// data is never decoded.
FileReport inspect(const std::string& path, const InspectOptions& opts = {});

enum class Insight : int { PageCount = 1, RowGroupSize = 2, EncodingFlexibility = 3, CompressionGate = 4 };

struct Finding {
  Insight insight;
  std::string scope;  // "rg=3 col=l_orderkey" or "file"
  std::string message;
  double measured = 0;
  double target = 0;
};

/// One finding per insight per violating scope. Empty = conformant.
std::vector<Finding> grade(const FileReport& report,
                           const RewritePolicy& policy);

}  // namespace pqforge
