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

#include "pqforge/column.hpp"

#include <cstring>

namespace pqforge {

int64_t ColumnSlice::valid_in_range(int64_t row_begin, int64_t rows) const {
  if (valid.empty()) return rows;
  int64_t n = 0;
  for (int64_t r = row_begin; r < row_begin + rows; ++r) {
    n += valid[static_cast<size_t>(r)] != 0;
  }
  return n;
}

void ColumnSlice::append_rows(const ColumnSlice& src, int64_t row_begin,
                              int64_t rows) {
  // Value index of src's first valid value at or after row_begin.
  int64_t vbegin = src.valid.empty() ? row_begin
                                     : src.valid_in_range(0, row_begin);
  int64_t vcount = src.valid_in_range(row_begin, rows);

  if (!src.valid.empty() || desc.nullable) {
    if (valid.empty() && num_rows > 0) valid.assign(num_rows, 1);
    if (src.valid.empty()) {
      valid.insert(valid.end(), static_cast<size_t>(rows), 1);
    } else {
      valid.insert(valid.end(), src.valid.begin() + row_begin,
                   src.valid.begin() + row_begin + rows);
    }
  }
  num_rows += rows;

  auto copy = [&](auto& dst, const auto& sv) {
    dst.insert(dst.end(), sv.begin() + vbegin, sv.begin() + vbegin + vcount);
  };
  switch (desc.physical_type) {
    case PhysicalType::BOOLEAN: copy(bools, src.bools); break;
    case PhysicalType::INT32: copy(i32, src.i32); break;
    case PhysicalType::INT64: copy(i64, src.i64); break;
    case PhysicalType::FLOAT: copy(f32, src.f32); break;
    case PhysicalType::DOUBLE: copy(f64, src.f64); break;
    default: {
      if (vcount > 0) {
        // One bulk arena copy; offsets rebased to this slice's arena.
        int64_t src_lo = src.bin_off[static_cast<size_t>(vbegin)];
        int64_t src_hi = src.bin_off[static_cast<size_t>(vbegin + vcount)];
        if (bin_off.empty()) bin_off.push_back(0);
        int64_t base = static_cast<int64_t>(bin_data.size()) - src_lo;
        bin_data.append(src.bin_data, static_cast<size_t>(src_lo),
                        static_cast<size_t>(src_hi - src_lo));
        for (int64_t k = 1; k <= vcount; ++k) {
          bin_off.push_back(src.bin_off[static_cast<size_t>(vbegin + k)] +
                            base);
        }
      }
      break;
    }
  }
}

namespace {
template <typename T>
bool bitwise_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  return a.empty() ||
         std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}
}  // namespace

bool ColumnSlice::logically_equal(const ColumnSlice& other) const {
  if (desc.physical_type != other.desc.physical_type) return false;
  if (num_rows != other.num_rows) return false;
  for (int64_t r = 0; r < num_rows; ++r) {
    if (row_valid(r) != other.row_valid(r)) return false;
  }
  // Floating point compared bitwise via the raw vectors.
  return bitwise_equal(bools, other.bools) && bitwise_equal(i32, other.i32) &&
         bitwise_equal(i64, other.i64) && bitwise_equal(f32, other.f32) &&
         bitwise_equal(f64, other.f64) && bin_off == other.bin_off &&
         bin_data == other.bin_data;
}

int64_t raw_decoded_size(const ColumnSlice& col) {
  int64_t vc = col.value_count();
  switch (col.desc.physical_type) {
    case PhysicalType::BOOLEAN: return vc;
    case PhysicalType::INT32: return vc * 4;
    case PhysicalType::INT64: return vc * 8;
    case PhysicalType::FLOAT: return vc * 4;
    case PhysicalType::DOUBLE: return vc * 8;
    case PhysicalType::INT96: return vc * 12;
    case PhysicalType::FIXED_LEN_BYTE_ARRAY:
      return vc * col.desc.type_length;
    case PhysicalType::BYTE_ARRAY:
      return static_cast<int64_t>(col.bin_data.size()) + 4 * vc;
  }
  return 0;
}

}  // namespace pqforge
