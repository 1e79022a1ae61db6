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

#include "pqforge/reader.hpp"

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cstring>

#include "pqforge/codec.hpp"
#include "pqforge/encoding.hpp"

namespace pqforge {

namespace {
constexpr char kMagic[4] = {'P', 'A', 'R', '1'};
}

ParquetReader::ParquetReader(const std::string& path) : path_(path) {
  int fd = ::open(path.c_str(), O_RDONLY);
  if (fd < 0) throw ParquetError("cannot open file: " + path);
  struct stat st{};
  if (::fstat(fd, &st) != 0) {
    ::close(fd);
    throw ParquetError("cannot stat file: " + path);
  }
  size_ = static_cast<size_t>(st.st_size);
  if (size_ < 12) {
    ::close(fd);
    throw ParquetError("not a parquet file (too small): " + path);
  }
  void* m = ::mmap(nullptr, size_, PROT_READ, MAP_PRIVATE, fd, 0);
  ::close(fd);
  if (m == MAP_FAILED) throw ParquetError("mmap failed: " + path);
  map_ = static_cast<const uint8_t*>(m);

  if (std::memcmp(map_, kMagic, 4) != 0 ||
      std::memcmp(map_ + size_ - 4, kMagic, 4) != 0) {
    throw ParquetError("not a parquet file (bad magic): " + path);
  }
  uint32_t footer_len;
  std::memcpy(&footer_len, map_ + size_ - 8, 4);
  if (footer_len + 8ull > size_) {
    throw ParquetError("truncated file (footer length out of range): " + path);
  }
  ByteView footer(map_ + size_ - 8 - footer_len, footer_len);
  ByteReader r(footer);
  try {
    fmeta_ = meta::parse_file_meta(r);
  } catch (const DecodeError& e) {
    throw ParquetError(std::string("unparseable footer: ") + e.what());
  }

  // Flatten the schema tree: a root group with leaf children only.
  if (fmeta_.schema.empty()) throw ParquetError("empty schema");
  const auto& root = fmeta_.schema.front();
  size_t expected = root.num_children ? static_cast<size_t>(*root.num_children)
                                      : fmeta_.schema.size() - 1;
  if (expected != fmeta_.schema.size() - 1) {
    throw ParquetError("nested schemas are not supported");
  }
  for (size_t i = 1; i < fmeta_.schema.size(); ++i) {
    const auto& e = fmeta_.schema[i];
    if (e.num_children && *e.num_children > 0) {
      throw ParquetError("nested schemas are not supported");
    }
    if (e.repetition_type && *e.repetition_type == meta::R_REPEATED) {
      throw ParquetError("repeated fields are not supported");
    }
    if (!e.type) throw ParquetError("leaf without physical type");
    auto pt = meta::physical_type_from_wire(*e.type);
    if (!pt) throw ParquetError("unknown physical type in schema");
    ColumnDescriptor d;
    d.name = e.name;
    d.physical_type = *pt;
    d.nullable = !e.repetition_type || *e.repetition_type == meta::R_OPTIONAL;
    d.type_length = e.type_length.value_or(0);
    if (d.physical_type == PhysicalType::FIXED_LEN_BYTE_ARRAY &&
        d.type_length <= 0) {
      throw ParquetError("fixed-length column without type_length");
    }
    schema_.push_back(std::move(d));
  }
  for (const auto& rg : fmeta_.row_groups) {
    if (rg.columns.size() != schema_.size()) {
      throw ParquetError("row group chunk count does not match schema");
    }
  }
}

ParquetReader::~ParquetReader() {
  if (map_ != nullptr) ::munmap(const_cast<uint8_t*>(map_), size_);
}

const meta::ColumnMetaData& ParquetReader::column_meta(size_t group,
                                                       size_t column) const {
  const auto& cc = fmeta_.row_groups.at(group).columns.at(column);
  if (!cc.meta_data) throw ParquetError("column chunk without metadata");
  return *cc.meta_data;
}

namespace {

int64_t chunk_start_offset(const meta::ColumnMetaData& cm) {
  int64_t off = cm.data_page_offset;
  if (cm.dictionary_page_offset && *cm.dictionary_page_offset > 0) {
    off = std::min(off, *cm.dictionary_page_offset);
  }
  return off;
}

}  // namespace

ByteView ParquetReader::chunk_bytes(size_t group, size_t column) const {
  const auto& cm = column_meta(group, column);
  int64_t off = chunk_start_offset(cm);
  if (off < 0 || off + cm.total_compressed_size > static_cast<int64_t>(size_)) {
    throw ParquetError("chunk extends past end of file");
  }
  return ByteView(map_ + off, static_cast<size_t>(cm.total_compressed_size));
}

Bytes ParquetReader::read_page_payload(const meta::PageHeader& h,
                                       ByteReader& r,
                                       const meta::ColumnMetaData& cm) const {
  ByteView raw = r.raw(static_cast<size_t>(h.compressed_page_size));
  auto ck = meta::codec_from_wire(cm.codec);
  if (!ck) throw ParquetError("unsupported codec in chunk metadata");
  if (*ck == CodecKind::UNCOMPRESSED) return Bytes(raw.begin(), raw.end());
  size_t usize = static_cast<size_t>(h.uncompressed_page_size);
  if (cm.codec == meta::C_LZ4) {
    // Legacy LZ4: some writers framed it (Hadoop), some wrote raw blocks.
    try {
      return decompress(raw, Codec{CodecKind::LZ4, std::nullopt}, usize);
    } catch (const CodecError&) {
      return decompress_lz4_hadoop(raw, usize);
    }
  }
  return decompress(raw, Codec{*ck, std::nullopt}, usize);
}

std::vector<PageMeta> ParquetReader::scan_pages(size_t group,
                                                size_t column) const {
  const auto& cm = column_meta(group, column);
  ByteView bytes = chunk_bytes(group, column);
  ByteReader r(bytes);
  std::vector<PageMeta> pages;
  int64_t values_seen = 0;
  while (values_seen < cm.num_values && r.remaining() > 0) {
    size_t header_start = r.pos();
    meta::PageHeader h;
    try {
      h = meta::parse_page_header(r);
    } catch (const DecodeError& e) {
      throw ParquetError(std::string("bad page header: ") + e.what());
    }
    PageMeta pm;
    pm.header_size = static_cast<int64_t>(r.pos() - header_start);
    pm.compressed_size = h.compressed_page_size;
    pm.uncompressed_size = h.uncompressed_page_size;
    if (h.type == meta::PT_DICTIONARY_PAGE && h.dictionary_page_header) {
      pm.page_type = PageType::DICTIONARY;
      pm.num_values = h.dictionary_page_header->num_values;
      pm.encoding = EncodingKind::PLAIN;
    } else if (h.type == meta::PT_DATA_PAGE && h.data_page_header) {
      pm.page_type = PageType::DATA_V1;
      pm.num_values = h.data_page_header->num_values;
      auto e = meta::encoding_from_wire(h.data_page_header->encoding);
      if (!e) throw ParquetError("unsupported page encoding");
      pm.encoding = *e;
      values_seen += pm.num_values;
    } else if (h.type == meta::PT_DATA_PAGE_V2 && h.data_page_header_v2) {
      pm.page_type = PageType::DATA_V2;
      pm.num_values = h.data_page_header_v2->num_values;
      auto e = meta::encoding_from_wire(h.data_page_header_v2->encoding);
      if (!e) throw ParquetError("unsupported page encoding");
      pm.encoding = *e;
      values_seen += pm.num_values;
    } else if (h.type == meta::PT_INDEX_PAGE) {
      pm.page_type = PageType::DATA_V1;  // not expected inline; skip
      r.skip(static_cast<size_t>(h.compressed_page_size));
      continue;
    } else {
      throw ParquetError("unknown page type");
    }
    r.skip(static_cast<size_t>(h.compressed_page_size));
    pages.push_back(pm);
  }
  if (values_seen != cm.num_values) {
    throw ParquetError("page scan did not account for all values");
  }
  return pages;
}

bool ParquetReader::chunk_decodable(size_t group, size_t column) const {
  const auto& cm = column_meta(group, column);
  if (!meta::codec_from_wire(cm.codec)) return false;
  for (int32_t e : cm.encodings) {
    // BIT_PACKED levels and unknown encodings are not decodable.
    if (e == meta::E_BIT_PACKED) return false;
    if (!meta::encoding_from_wire(e)) return false;
  }
  return true;
}

ColumnSlice ParquetReader::read_chunk(size_t group, size_t column) const {
  const auto& cm = column_meta(group, column);
  const ColumnDescriptor& desc = schema_.at(column);
  const int64_t group_rows = fmeta_.row_groups[group].num_rows;

  ColumnSlice out;
  out.desc = desc;
  ColumnSlice dict;
  bool have_dict = false;

  ByteView bytes = chunk_bytes(group, column);
  ByteReader r(bytes);
  int64_t rows_seen = 0;
  while (rows_seen < group_rows) {
    meta::PageHeader h = meta::parse_page_header(r);
    if (h.type == meta::PT_DICTIONARY_PAGE) {
      if (!h.dictionary_page_header) throw ParquetError("bad dictionary page");
      int32_t enc = h.dictionary_page_header->encoding;
      if (enc != meta::E_PLAIN && enc != meta::E_PLAIN_DICTIONARY) {
        throw ParquetError("unsupported dictionary page encoding");
      }
      Bytes payload = read_page_payload(h, r, cm);
      dict = decode_dictionary_page(payload, desc,
                                    h.dictionary_page_header->num_values);
      have_dict = true;
      continue;
    }
    if (h.type == meta::PT_INDEX_PAGE) {
      r.skip(static_cast<size_t>(h.compressed_page_size));
      continue;
    }
    int64_t page_rows = 0;
    int64_t value_count = 0;
    EncodingKind enc;
    Bytes payload;
    ByteReader pr{ByteView{}};
    if (h.type == meta::PT_DATA_PAGE && h.data_page_header) {
      const auto& d = *h.data_page_header;
      auto e = meta::encoding_from_wire(d.encoding);
      if (!e) throw ParquetError("unsupported data page encoding");
      enc = *e;
      if (d.definition_level_encoding == meta::E_BIT_PACKED &&
          desc.nullable) {
        throw ParquetError("BIT_PACKED definition levels are not supported");
      }
      payload = read_page_payload(h, r, cm);
      pr = ByteReader(payload);
      page_rows = d.num_values;
      if (desc.nullable) {
        uint32_t len = pr.le<uint32_t>();
        ByteView section = pr.raw(len);
        ByteReader sr(section);
        std::vector<uint32_t> levels = rle_hybrid_decode(sr, page_rows, 1);
        for (uint32_t lv : levels) {
          out.valid.push_back(lv != 0);
          value_count += lv != 0;
        }
      } else {
        value_count = page_rows;
      }
    } else if (h.type == meta::PT_DATA_PAGE_V2 && h.data_page_header_v2) {
      const auto& d = *h.data_page_header_v2;
      auto e = meta::encoding_from_wire(d.encoding);
      if (!e) throw ParquetError("unsupported data page encoding");
      enc = *e;
      page_rows = d.num_values;
      // Levels precede the (separately compressed) value section.
      ByteView raw = r.raw(static_cast<size_t>(h.compressed_page_size));
      ByteReader rawr(raw);
      if (d.repetition_levels_byte_length > 0) {
        throw ParquetError("repeated fields are not supported");
      }
      ByteView def = rawr.raw(static_cast<size_t>(
          d.definition_levels_byte_length));
      if (desc.nullable) {
        ByteReader dr(def);
        std::vector<uint32_t> levels = rle_hybrid_decode(dr, page_rows, 1);
        for (uint32_t lv : levels) {
          out.valid.push_back(lv != 0);
          value_count += lv != 0;
        }
      } else {
        value_count = page_rows;
      }
      ByteView vals = rawr.raw(rawr.remaining());
      size_t vsize = static_cast<size_t>(h.uncompressed_page_size) -
                     static_cast<size_t>(d.definition_levels_byte_length);
      auto ck = meta::codec_from_wire(cm.codec);
      if (!ck) throw ParquetError("unsupported codec");
      if (d.is_compressed && *ck != CodecKind::UNCOMPRESSED) {
        payload = decompress(vals, Codec{*ck, std::nullopt}, vsize);
      } else {
        payload.assign(vals.begin(), vals.end());
      }
      pr = ByteReader(payload);
    } else {
      throw ParquetError("unknown page type");
    }
    decode_page_values(pr, enc, value_count, desc,
                       have_dict ? &dict : nullptr, out);
    rows_seen += page_rows;
  }
  if (desc.nullable && !out.valid.empty()) {
    // keep valid vector
  } else if (!desc.nullable) {
    out.valid.clear();
  }
  out.num_rows = rows_seen;
  return out;
}

RowBatch ParquetReader::read_row_group(size_t g) const {
  RowBatch b;
  b.columns.reserve(schema_.size());
  for (size_t c = 0; c < schema_.size(); ++c) {
    b.columns.push_back(read_chunk(g, c));
  }
  return b;
}

}  // namespace pqforge
