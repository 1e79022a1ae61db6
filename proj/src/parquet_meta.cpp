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

#include "pqforge/parquet_meta.hpp"

namespace pqforge::thrift {

void CompactReader::skip_value(uint8_t ctype) {
  switch (ctype) {
    case CT_BOOL_TRUE:
    case CT_BOOL_FALSE:
      return;  // value lives in the field header
    case CT_BYTE:
      r_.u8();
      return;
    case CT_I16:
    case CT_I32:
    case CT_I64:
      r_.zigzag();
      return;
    case CT_DOUBLE:
      r_.skip(8);
      return;
    case CT_BINARY:
      r_.skip(static_cast<size_t>(r_.uleb()));
      return;
    case CT_LIST:
    case CT_SET: {
      uint8_t et;
      uint64_t n;
      list_header(et, n);
      for (uint64_t i = 0; i < n; ++i) skip_value(et);
      return;
    }
    case CT_MAP: {
      // compact map: varint size, then one key/value type byte when nonempty
      uint64_t n = r_.uleb();
      if (n == 0) return;
      uint8_t types = r_.u8();
      for (uint64_t i = 0; i < n; ++i) {
        skip_value(types >> 4);
        skip_value(types & 0x0F);
      }
      return;
    }
    case CT_STRUCT: {
      struct_begin();
      int16_t id;
      uint8_t t;
      while (field_header(id, t)) {
        if (t == CT_BOOL_TRUE || t == CT_BOOL_FALSE) continue;
        skip_value(t);
      }
      struct_end();
      return;
    }
    default:
      throw DecodeError("unknown thrift compact type");
  }
}

}  // namespace pqforge::thrift

namespace pqforge::meta {

using thrift::CompactReader;
using thrift::CompactWriter;
using thrift::CT_BINARY;
using thrift::CT_BOOL_FALSE;
using thrift::CT_BOOL_TRUE;
using thrift::CT_I32;
using thrift::CT_I64;
using thrift::CT_LIST;
using thrift::CT_STRUCT;

namespace {

// -------- serialization --------

void write_statistics(CompactWriter& w, const Statistics& s) {
  w.struct_begin();
  if (s.null_count) w.field_i64(3, *s.null_count);
  if (s.distinct_count) w.field_i64(4, *s.distinct_count);
  if (s.max_value) w.field_binary(5, *s.max_value);
  if (s.min_value) w.field_binary(6, *s.min_value);
  w.struct_end();
}

void write_schema_element(CompactWriter& w, const SchemaElement& e) {
  w.struct_begin();
  if (e.type) w.field_i32(1, *e.type);
  if (e.type_length) w.field_i32(2, *e.type_length);
  if (e.repetition_type) w.field_i32(3, *e.repetition_type);
  w.field_binary(4, e.name);
  if (e.num_children) w.field_i32(5, *e.num_children);
  if (e.converted_type) w.field_i32(6, *e.converted_type);
  if (e.scale) w.field_i32(7, *e.scale);
  if (e.precision) w.field_i32(8, *e.precision);
  if (e.field_id) w.field_i32(9, *e.field_id);
  for (const auto& k : e.kept) w.field_kept(k);
  w.struct_end();
}

void write_key_value(CompactWriter& w, const KeyValue& kv) {
  w.struct_begin();
  w.field_binary(1, kv.key);
  if (kv.value) w.field_binary(2, *kv.value);
  w.struct_end();
}

void write_column_meta(CompactWriter& w, const ColumnMetaData& m) {
  w.struct_begin();
  w.field_i32(1, m.type);
  w.field_list(2, CT_I32, m.encodings.size());
  for (int32_t e : m.encodings) w.elem_i32(e);
  w.field_list(3, CT_BINARY, m.path_in_schema.size());
  for (const std::string& p : m.path_in_schema) w.elem_binary(p);
  w.field_i32(4, m.codec);
  w.field_i64(5, m.num_values);
  w.field_i64(6, m.total_uncompressed_size);
  w.field_i64(7, m.total_compressed_size);
  w.field_i64(9, m.data_page_offset);
  if (m.index_page_offset) w.field_i64(10, *m.index_page_offset);
  if (m.dictionary_page_offset) w.field_i64(11, *m.dictionary_page_offset);
  if (m.statistics) {
    w.field_header(12, CT_STRUCT);
    write_statistics(w, *m.statistics);
  }
  w.struct_end();
}

void write_column_chunk(CompactWriter& w, const ColumnChunk& c) {
  w.struct_begin();
  if (c.file_path) w.field_binary(1, *c.file_path);
  w.field_i64(2, c.file_offset);
  if (c.meta_data) {
    w.field_header(3, CT_STRUCT);
    write_column_meta(w, *c.meta_data);
  }
  w.struct_end();
}

void write_row_group(CompactWriter& w, const RowGroup& g) {
  w.struct_begin();
  w.field_list(1, CT_STRUCT, g.columns.size());
  for (const auto& c : g.columns) write_column_chunk(w, c);
  w.field_i64(2, g.total_byte_size);
  w.field_i64(3, g.num_rows);
  if (g.file_offset) w.field_i64(5, *g.file_offset);
  if (g.total_compressed_size) w.field_i64(6, *g.total_compressed_size);
  w.struct_end();
}

// -------- parsing --------

Statistics parse_statistics(CompactReader& cr) {
  Statistics s;
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 3: s.null_count = cr.read_i64(); break;
      case 4: s.distinct_count = cr.read_i64(); break;
      case 5: s.max_value = cr.read_binary(); break;
      case 6: s.min_value = cr.read_binary(); break;
      default:
        if (t != CT_BOOL_TRUE && t != CT_BOOL_FALSE) cr.skip_value(t);
    }
  }
  cr.struct_end();
  return s;
}

SchemaElement parse_schema_element(CompactReader& cr, ByteView all) {
  SchemaElement e;
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 1: e.type = cr.read_i32(); break;
      case 2: e.type_length = cr.read_i32(); break;
      case 3: e.repetition_type = cr.read_i32(); break;
      case 4: e.name = cr.read_binary(); break;
      case 5: e.num_children = cr.read_i32(); break;
      case 6: e.converted_type = cr.read_i32(); break;
      case 7: e.scale = cr.read_i32(); break;
      case 8: e.precision = cr.read_i32(); break;
      case 9: e.field_id = cr.read_i32(); break;
      default: {
        if (t == CT_BOOL_TRUE || t == CT_BOOL_FALSE) {
          // booleans carry their value in the header byte; preserve as-is
          e.kept.push_back({id, t, {}});
          break;
        }
        size_t start = cr.raw().pos();
        cr.skip_value(t);
        size_t end = cr.raw().pos();
        thrift::KeptField k;
        k.id = id;
        k.ctype = t;
        k.raw.assign(all.begin() + start, all.begin() + end);
        e.kept.push_back(std::move(k));
      }
    }
  }
  cr.struct_end();
  return e;
}

KeyValue parse_key_value(CompactReader& cr) {
  KeyValue kv;
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 1: kv.key = cr.read_binary(); break;
      case 2: kv.value = cr.read_binary(); break;
      default:
        if (t != CT_BOOL_TRUE && t != CT_BOOL_FALSE) cr.skip_value(t);
    }
  }
  cr.struct_end();
  return kv;
}

ColumnMetaData parse_column_meta(CompactReader& cr) {
  ColumnMetaData m;
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 1: m.type = cr.read_i32(); break;
      case 2: {
        uint8_t et;
        uint64_t n;
        cr.list_header(et, n);
        for (uint64_t i = 0; i < n; ++i) m.encodings.push_back(cr.read_i32());
        break;
      }
      case 3: {
        uint8_t et;
        uint64_t n;
        cr.list_header(et, n);
        for (uint64_t i = 0; i < n; ++i) {
          m.path_in_schema.push_back(cr.read_binary());
        }
        break;
      }
      case 4: m.codec = cr.read_i32(); break;
      case 5: m.num_values = cr.read_i64(); break;
      case 6: m.total_uncompressed_size = cr.read_i64(); break;
      case 7: m.total_compressed_size = cr.read_i64(); break;
      case 9: m.data_page_offset = cr.read_i64(); break;
      case 10: m.index_page_offset = cr.read_i64(); break;
      case 11: m.dictionary_page_offset = cr.read_i64(); break;
      case 12: m.statistics = parse_statistics(cr); break;
      default:
        if (t != CT_BOOL_TRUE && t != CT_BOOL_FALSE) cr.skip_value(t);
    }
  }
  cr.struct_end();
  return m;
}

ColumnChunk parse_column_chunk(CompactReader& cr) {
  ColumnChunk c;
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 1: c.file_path = cr.read_binary(); break;
      case 2: c.file_offset = cr.read_i64(); break;
      case 3: c.meta_data = parse_column_meta(cr); break;
      default:
        if (t != CT_BOOL_TRUE && t != CT_BOOL_FALSE) cr.skip_value(t);
    }
  }
  cr.struct_end();
  return c;
}

RowGroup parse_row_group(CompactReader& cr) {
  RowGroup g;
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 1: {
        uint8_t et;
        uint64_t n;
        cr.list_header(et, n);
        for (uint64_t i = 0; i < n; ++i) {
          g.columns.push_back(parse_column_chunk(cr));
        }
        break;
      }
      case 2: g.total_byte_size = cr.read_i64(); break;
      case 3: g.num_rows = cr.read_i64(); break;
      case 5: g.file_offset = cr.read_i64(); break;
      case 6: g.total_compressed_size = cr.read_i64(); break;
      default:
        if (t != CT_BOOL_TRUE && t != CT_BOOL_FALSE) cr.skip_value(t);
    }
  }
  cr.struct_end();
  return g;
}

}  // namespace

Bytes serialize_file_meta(const FileMetaData& m) {
  CompactWriter w;
  w.struct_begin();
  w.field_i32(1, m.version);
  w.field_list(2, CT_STRUCT, m.schema.size());
  for (const auto& e : m.schema) write_schema_element(w, e);
  w.field_i64(3, m.num_rows);
  w.field_list(4, CT_STRUCT, m.row_groups.size());
  for (const auto& g : m.row_groups) write_row_group(w, g);
  if (!m.key_value_metadata.empty()) {
    w.field_list(5, CT_STRUCT, m.key_value_metadata.size());
    for (const auto& kv : m.key_value_metadata) write_key_value(w, kv);
  }
  if (m.created_by) w.field_binary(6, *m.created_by);
  w.struct_end();
  return w.take();
}

FileMetaData parse_file_meta(ByteReader& r) {
  // Schema elements capture unknown fields verbatim, which needs the
  // backing view for slicing.
  ByteView all(r.raw(0).data() - r.pos(), r.pos() + r.remaining());
  FileMetaData m;
  CompactReader cr(r);
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 1: m.version = cr.read_i32(); break;
      case 2: {
        uint8_t et;
        uint64_t n;
        cr.list_header(et, n);
        for (uint64_t i = 0; i < n; ++i) {
          m.schema.push_back(parse_schema_element(cr, all));
        }
        break;
      }
      case 3: m.num_rows = cr.read_i64(); break;
      case 4: {
        uint8_t et;
        uint64_t n;
        cr.list_header(et, n);
        for (uint64_t i = 0; i < n; ++i) {
          m.row_groups.push_back(parse_row_group(cr));
        }
        break;
      }
      case 5: {
        uint8_t et;
        uint64_t n;
        cr.list_header(et, n);
        for (uint64_t i = 0; i < n; ++i) {
          m.key_value_metadata.push_back(parse_key_value(cr));
        }
        break;
      }
      case 6: m.created_by = cr.read_binary(); break;
      default:
        if (t != CT_BOOL_TRUE && t != CT_BOOL_FALSE) cr.skip_value(t);
    }
  }
  cr.struct_end();
  return m;
}

Bytes serialize_page_header(const PageHeader& h) {
  CompactWriter w;
  w.struct_begin();
  w.field_i32(1, h.type);
  w.field_i32(2, h.uncompressed_page_size);
  w.field_i32(3, h.compressed_page_size);
  if (h.data_page_header) {
    const auto& d = *h.data_page_header;
    w.field_header(5, CT_STRUCT);
    w.struct_begin();
    w.field_i32(1, d.num_values);
    w.field_i32(2, d.encoding);
    w.field_i32(3, d.definition_level_encoding);
    w.field_i32(4, d.repetition_level_encoding);
    w.struct_end();
  }
  if (h.dictionary_page_header) {
    const auto& d = *h.dictionary_page_header;
    w.field_header(7, CT_STRUCT);
    w.struct_begin();
    w.field_i32(1, d.num_values);
    w.field_i32(2, d.encoding);
    w.struct_end();
  }
  if (h.data_page_header_v2) {
    const auto& d = *h.data_page_header_v2;
    w.field_header(8, CT_STRUCT);
    w.struct_begin();
    w.field_i32(1, d.num_values);
    w.field_i32(2, d.num_nulls);
    w.field_i32(3, d.num_rows);
    w.field_i32(4, d.encoding);
    w.field_i32(5, d.definition_levels_byte_length);
    w.field_i32(6, d.repetition_levels_byte_length);
    w.field_bool(7, d.is_compressed);
    w.struct_end();
  }
  w.struct_end();
  return w.take();
}

PageHeader parse_page_header(ByteReader& r) {
  PageHeader h;
  CompactReader cr(r);
  cr.struct_begin();
  int16_t id;
  uint8_t t;
  while (cr.field_header(id, t)) {
    switch (id) {
      case 1: h.type = cr.read_i32(); break;
      case 2: h.uncompressed_page_size = cr.read_i32(); break;
      case 3: h.compressed_page_size = cr.read_i32(); break;
      case 5: {
        DataPageHeader d;
        cr.struct_begin();
        int16_t fid;
        uint8_t ft;
        while (cr.field_header(fid, ft)) {
          switch (fid) {
            case 1: d.num_values = cr.read_i32(); break;
            case 2: d.encoding = cr.read_i32(); break;
            case 3: d.definition_level_encoding = cr.read_i32(); break;
            case 4: d.repetition_level_encoding = cr.read_i32(); break;
            default:
              if (ft != CT_BOOL_TRUE && ft != CT_BOOL_FALSE) cr.skip_value(ft);
          }
        }
        cr.struct_end();
        h.data_page_header = d;
        break;
      }
      case 7: {
        DictionaryPageHeader d;
        cr.struct_begin();
        int16_t fid;
        uint8_t ft;
        while (cr.field_header(fid, ft)) {
          switch (fid) {
            case 1: d.num_values = cr.read_i32(); break;
            case 2: d.encoding = cr.read_i32(); break;
            default:
              if (ft != CT_BOOL_TRUE && ft != CT_BOOL_FALSE) cr.skip_value(ft);
          }
        }
        cr.struct_end();
        h.dictionary_page_header = d;
        break;
      }
      case 8: {
        DataPageHeaderV2 d;
        cr.struct_begin();
        int16_t fid;
        uint8_t ft;
        while (cr.field_header(fid, ft)) {
          switch (fid) {
            case 1: d.num_values = cr.read_i32(); break;
            case 2: d.num_nulls = cr.read_i32(); break;
            case 3: d.num_rows = cr.read_i32(); break;
            case 4: d.encoding = cr.read_i32(); break;
            case 5: d.definition_levels_byte_length = cr.read_i32(); break;
            case 6: d.repetition_levels_byte_length = cr.read_i32(); break;
            case 7: d.is_compressed = cr.read_bool(ft); break;
            default:
              if (ft != CT_BOOL_TRUE && ft != CT_BOOL_FALSE) cr.skip_value(ft);
          }
        }
        cr.struct_end();
        h.data_page_header_v2 = d;
        break;
      }
      default:
        if (t != CT_BOOL_TRUE && t != CT_BOOL_FALSE) cr.skip_value(t);
    }
  }
  cr.struct_end();
  return h;
}

std::optional<PhysicalType> physical_type_from_wire(int32_t t) {
  switch (t) {
    case T_BOOLEAN: return PhysicalType::BOOLEAN;
    case T_INT32: return PhysicalType::INT32;
    case T_INT64: return PhysicalType::INT64;
    case T_INT96: return PhysicalType::INT96;
    case T_FLOAT: return PhysicalType::FLOAT;
    case T_DOUBLE: return PhysicalType::DOUBLE;
    case T_BYTE_ARRAY: return PhysicalType::BYTE_ARRAY;
    case T_FIXED_LEN_BYTE_ARRAY: return PhysicalType::FIXED_LEN_BYTE_ARRAY;
    default: return std::nullopt;
  }
}

int32_t physical_type_to_wire(PhysicalType t) {
  switch (t) {
    case PhysicalType::BOOLEAN: return T_BOOLEAN;
    case PhysicalType::INT32: return T_INT32;
    case PhysicalType::INT64: return T_INT64;
    case PhysicalType::INT96: return T_INT96;
    case PhysicalType::FLOAT: return T_FLOAT;
    case PhysicalType::DOUBLE: return T_DOUBLE;
    case PhysicalType::BYTE_ARRAY: return T_BYTE_ARRAY;
    case PhysicalType::FIXED_LEN_BYTE_ARRAY: return T_FIXED_LEN_BYTE_ARRAY;
  }
  return T_BOOLEAN;
}

std::optional<EncodingKind> encoding_from_wire(int32_t e) {
  switch (e) {
    case E_PLAIN: return EncodingKind::PLAIN;
    case E_RLE: return EncodingKind::RLE;
    // PLAIN_DICTIONARY data pages use the RLE-dictionary index layout.
    case E_PLAIN_DICTIONARY:
    case E_RLE_DICTIONARY: return EncodingKind::RLE_DICTIONARY;
    case E_DELTA_BINARY_PACKED: return EncodingKind::DELTA_BINARY_PACKED;
    case E_DELTA_LENGTH_BYTE_ARRAY:
      return EncodingKind::DELTA_LENGTH_BYTE_ARRAY;
    case E_DELTA_BYTE_ARRAY: return EncodingKind::DELTA_BYTE_ARRAY;
    case E_BYTE_STREAM_SPLIT: return EncodingKind::BYTE_STREAM_SPLIT;
    default: return std::nullopt;
  }
}

int32_t encoding_to_wire(EncodingKind e) {
  switch (e) {
    case EncodingKind::PLAIN: return E_PLAIN;
    case EncodingKind::RLE: return E_RLE;
    case EncodingKind::RLE_DICTIONARY: return E_RLE_DICTIONARY;
    case EncodingKind::DELTA_BINARY_PACKED: return E_DELTA_BINARY_PACKED;
    case EncodingKind::DELTA_LENGTH_BYTE_ARRAY:
      return E_DELTA_LENGTH_BYTE_ARRAY;
    case EncodingKind::DELTA_BYTE_ARRAY: return E_DELTA_BYTE_ARRAY;
    case EncodingKind::BYTE_STREAM_SPLIT: return E_BYTE_STREAM_SPLIT;
  }
  return E_PLAIN;
}

std::optional<CodecKind> codec_from_wire(int32_t c) {
  switch (c) {
    case C_UNCOMPRESSED: return CodecKind::UNCOMPRESSED;
    case C_SNAPPY: return CodecKind::SNAPPY;
    case C_ZSTD: return CodecKind::ZSTD;
    case C_LZ4_RAW:
    case C_LZ4: return CodecKind::LZ4;
    default: return std::nullopt;
  }
}

int32_t codec_to_wire(CodecKind c) {
  switch (c) {
    case CodecKind::UNCOMPRESSED: return C_UNCOMPRESSED;
    case CodecKind::SNAPPY: return C_SNAPPY;
    case CodecKind::ZSTD: return C_ZSTD;
    // LZ4 always written as the interoperable LZ4_RAW form.
    case CodecKind::LZ4: return C_LZ4_RAW;
  }
  return C_UNCOMPRESSED;
}

}  // namespace pqforge::meta
