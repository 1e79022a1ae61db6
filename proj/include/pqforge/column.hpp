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
#include <string_view>
#include <vector>

#include "pqforge/types.hpp"

namespace pqforge {

/// Decoded values of one column over a contiguous row range.
///
/// Nullable columns carry a `valid` byte per row; values are stored densely
/// for valid rows only. Required columns leave `valid` empty (all rows
/// valid). BYTE_ARRAY, FIXED_LEN_BYTE_ARRAY and INT96 values live in a
/// shared arena (`bin_data` + `bin_off`, INT96 as 12-byte entries) to keep
/// per-value overhead flat at scale. FLOAT/DOUBLE are kept bit-exact.
struct ColumnSlice {
  ColumnDescriptor desc;
  int64_t num_rows = 0;
  std::vector<uint8_t> valid;  // per-row 0/1; empty = all valid

  std::vector<uint8_t> bools;
  std::vector<int32_t> i32;
  std::vector<int64_t> i64;
  std::vector<float> f32;
  std::vector<double> f64;
  // Binary arena: value i spans bin_data[bin_off[i] .. bin_off[i+1]).
  // bin_off has count+1 entries (or none for zero values).
  std::vector<int64_t> bin_off;
  std::string bin_data;

  int64_t bin_count() const {
    return bin_off.empty() ? 0 : static_cast<int64_t>(bin_off.size()) - 1;
  }
  std::string_view bin_at(int64_t i) const {
    size_t k = static_cast<size_t>(i);
    return std::string_view(bin_data)
        .substr(static_cast<size_t>(bin_off[k]),
                static_cast<size_t>(bin_off[k + 1] - bin_off[k]));
  }
  void bin_push(std::string_view s) {
    if (bin_off.empty()) bin_off.push_back(0);
    bin_data.append(s);
    bin_off.push_back(static_cast<int64_t>(bin_data.size()));
  }

  int64_t value_count() const {
    switch (desc.physical_type) {
      case PhysicalType::BOOLEAN: return static_cast<int64_t>(bools.size());
      case PhysicalType::INT32: return static_cast<int64_t>(i32.size());
      case PhysicalType::INT64: return static_cast<int64_t>(i64.size());
      case PhysicalType::FLOAT: return static_cast<int64_t>(f32.size());
      case PhysicalType::DOUBLE: return static_cast<int64_t>(f64.size());
      default: return bin_count();
    }
  }
  int64_t null_count() const {
    int64_t n = 0;
    for (uint8_t v : valid) n += v == 0;
    return n;
  }
  bool row_valid(int64_t row) const {
    return valid.empty() || valid[static_cast<size_t>(row)] != 0;
  }

  /// Appends rows [row_begin, row_begin+rows) of `src` to this slice.
  void append_rows(const ColumnSlice& src, int64_t row_begin, int64_t rows);

  /// Number of valid rows within [row_begin, row_begin+rows).
  int64_t valid_in_range(int64_t row_begin, int64_t rows) const;

  bool logically_equal(const ColumnSlice& other) const;
};

/// A batch of rows across all columns, in schema order.
struct RowBatch {
  std::vector<ColumnSlice> columns;
  int64_t num_rows() const {
    return columns.empty() ? 0 : columns.front().num_rows;
  }
};

/// Bytes of decoded values under the fixed raw-size accounting:
/// fixed-width types count width x valid-value count (BOOLEAN 1,
/// INT96 12); variable-width counts byte length sum plus 4 bytes of
/// offset per value.
int64_t raw_decoded_size(const ColumnSlice& col);

}  // namespace pqforge
