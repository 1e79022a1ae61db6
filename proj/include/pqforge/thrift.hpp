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

#include <vector>

#include "pqforge/bytes.hpp"

namespace pqforge::thrift {

// Thrift compact-protocol wire types.
enum CType : uint8_t {
  CT_STOP = 0,
  CT_BOOL_TRUE = 1,
  CT_BOOL_FALSE = 2,
  CT_BYTE = 3,
  CT_I16 = 4,
  CT_I32 = 5,
  CT_I64 = 6,
  CT_DOUBLE = 7,
  CT_BINARY = 8,
  CT_LIST = 9,
  CT_SET = 10,
  CT_MAP = 11,
  CT_STRUCT = 12,
};

/// Unmodeled field preserved verbatim for pass-through re-serialization.
/// Value bytes of struct/list/scalar fields are self-contained in the
/// compact protocol; only the field header (delta-encoded id) is rebuilt.
struct KeptField {
  int16_t id = 0;
  uint8_t ctype = 0;
  Bytes raw;
};

class CompactWriter {
 public:
  void struct_begin() { last_ids_.push_back(last_id_), last_id_ = 0; }
  void struct_end() {
    w_.u8(CT_STOP);
    last_id_ = last_ids_.back();
    last_ids_.pop_back();
  }

  void field_header(int16_t id, uint8_t ctype) {
    int delta = id - last_id_;
    if (delta > 0 && delta <= 15) {
      w_.u8(static_cast<uint8_t>((delta << 4) | ctype));
    } else {
      w_.u8(ctype);
      w_.zigzag(id);
    }
    last_id_ = id;
  }

  void field_bool(int16_t id, bool v) {
    field_header(id, v ? CT_BOOL_TRUE : CT_BOOL_FALSE);
  }
  void field_i32(int16_t id, int32_t v) {
    field_header(id, CT_I32);
    w_.zigzag(v);
  }
  void field_i64(int16_t id, int64_t v) {
    field_header(id, CT_I64);
    w_.zigzag(v);
  }
  void field_binary(int16_t id, ByteView v) {
    field_header(id, CT_BINARY);
    w_.uleb(v.size());
    w_.raw(v);
  }
  void field_binary(int16_t id, const std::string& v) {
    field_binary(id, ByteView(reinterpret_cast<const uint8_t*>(v.data()),
                              v.size()));
  }
  void field_list(int16_t id, uint8_t elem_type, size_t n) {
    field_header(id, CT_LIST);
    list_header(elem_type, n);
  }
  void list_header(uint8_t elem_type, size_t n) {
    if (n < 15) {
      w_.u8(static_cast<uint8_t>((n << 4) | elem_type));
    } else {
      w_.u8(static_cast<uint8_t>(0xF0 | elem_type));
      w_.uleb(n);
    }
  }
  void field_kept(const KeptField& f) {
    field_header(f.id, f.ctype);
    w_.raw(f.raw);
  }

  // raw element writers (inside lists)
  void elem_i32(int32_t v) { w_.zigzag(v); }
  void elem_i64(int64_t v) { w_.zigzag(v); }
  void elem_binary(const std::string& v) {
    w_.uleb(v.size());
    w_.raw(v.data(), v.size());
  }

  Bytes take() { return w_.take(); }
  size_t size() const { return w_.size(); }

 private:
  ByteWriter w_;
  int16_t last_id_ = 0;
  std::vector<int16_t> last_ids_;
};

class CompactReader {
 public:
  explicit CompactReader(ByteReader& r) : r_(r) {}

  void struct_begin() { last_ids_.push_back(last_id_), last_id_ = 0; }
  void struct_end() {
    last_id_ = last_ids_.back();
    last_ids_.pop_back();
  }

  /// Reads the next field header. Returns false at STOP.
  bool field_header(int16_t& id, uint8_t& ctype) {
    uint8_t b = r_.u8();
    if (b == CT_STOP) return false;
    ctype = b & 0x0F;
    int delta = b >> 4;
    if (delta != 0) {
      id = static_cast<int16_t>(last_id_ + delta);
    } else {
      id = static_cast<int16_t>(r_.zigzag());
    }
    last_id_ = id;
    return true;
  }

  bool read_bool(uint8_t ctype) { return ctype == CT_BOOL_TRUE; }
  int32_t read_i32() { return static_cast<int32_t>(r_.zigzag()); }
  int64_t read_i64() { return r_.zigzag(); }
  std::string read_binary() {
    uint64_t n = r_.uleb();
    ByteView v = r_.raw(static_cast<size_t>(n));
    return std::string(reinterpret_cast<const char*>(v.data()), v.size());
  }
  void list_header(uint8_t& elem_type, uint64_t& n) {
    uint8_t b = r_.u8();
    elem_type = b & 0x0F;
    n = b >> 4;
    if (n == 15) n = r_.uleb();
  }

  /// Skips one value of the given wire type.
  void skip_value(uint8_t ctype);

  ByteReader& raw() { return r_; }

 private:
  ByteReader& r_;
  int16_t last_id_ = 0;
  std::vector<int16_t> last_ids_;
};

}  // namespace pqforge::thrift
