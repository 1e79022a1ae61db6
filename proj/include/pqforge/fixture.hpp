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

#include <cstdint>
#include <string>

#include "pqforge/column.hpp"
#include "pqforge/types.hpp"

namespace pqforge {

/// Deterministic test-corpus generator. The produced file is
/// baseline-configured by default: 122,880-row groups, one data page per
/// chunk, V1-only encodings, blanket compression. Values are a pure
/// function of (seed, row index, column), so identical specs yield
/// byte-identical files regardless of batching.
struct FixtureSpec {
  std::string profile = "lineitem";  // lineitem-like mix + pathological cols
  double scale = 1.0;                // ~6,000,000 rows at scale 1
  int64_t rows = -1;                 // explicit row count; -1 = from scale
  uint64_t seed = 0;

  int64_t rg_rows = 122'880;
  int64_t pages_per_chunk = 1;
  bool v1_only = true;
  Codec codec{CodecKind::SNAPPY, std::nullopt};
  bool forced_compression = true;
};

int64_t fixture_rows(const FixtureSpec& spec);

std::vector<ColumnDescriptor> fixture_schema(const FixtureSpec& spec);

/// Rows [row_begin, row_begin + rows) of the fixture table.
RowBatch generate_rows(const FixtureSpec& spec, int64_t row_begin,
                       int64_t rows);

/// Writes the full fixture file; returns its size in bytes.
int64_t write_fixture(const FixtureSpec& spec, const std::string& path);

}  // namespace pqforge
