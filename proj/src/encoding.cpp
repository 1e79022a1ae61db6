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

#include "pqforge/encoding.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace pqforge {

namespace {

// ---- LSB-first bit packing ----

class BitWriter {
 public:
  void put(uint64_t v, int w) {
    if (w == 0) return;
    if (w < 64) v &= (uint64_t{1} << w) - 1;
    acc_ |= static_cast<unsigned __int128>(v) << nbits_;
    nbits_ += w;
    while (nbits_ >= 8) {
      out_.push_back(static_cast<uint8_t>(acc_));
      acc_ >>= 8;
      nbits_ -= 8;
    }
  }
  void finish() {
    if (nbits_ > 0) {
      out_.push_back(static_cast<uint8_t>(acc_));
      acc_ = 0;
      nbits_ = 0;
    }
  }
  Bytes take() {
    finish();
    return std::move(out_);
  }

 private:
  Bytes out_;
  unsigned __int128 acc_ = 0;
  int nbits_ = 0;
};

class BitReaderLE {
 public:
  explicit BitReaderLE(ByteView data) : data_(data) {}
  uint64_t get(int w) {
    while (nbits_ < w) {
      uint8_t b = pos_ < data_.size() ? data_[pos_++] : 0;
      acc_ |= static_cast<unsigned __int128>(b) << nbits_;
      nbits_ += 8;
    }
    uint64_t v;
    if (w == 64) {
      v = static_cast<uint64_t>(acc_);
    } else {
      v = static_cast<uint64_t>(
          acc_ & ((static_cast<unsigned __int128>(1) << w) - 1));
    }
    acc_ >>= w;
    nbits_ -= w;
    return v;
  }

 private:
  ByteView data_;
  size_t pos_ = 0;
  unsigned __int128 acc_ = 0;
  int nbits_ = 0;
};

}  // namespace

// ---- RLE / bit-packed hybrid ----

Bytes rle_hybrid_encode(std::span<const uint32_t> values, int width) {
  ByteWriter w;
  std::vector<uint32_t> buf;  // pending bit-packed values
  const int value_bytes = (width + 7) / 8;

  auto flush_bitpacked = [&] {
    if (buf.empty()) return;
    size_t groups = (buf.size() + 7) / 8;
    w.uleb((groups << 1) | 1);
    BitWriter bw;
    for (size_t k = 0; k < groups * 8; ++k) {
      bw.put(k < buf.size() ? buf[k] : 0, width);
    }
    w.raw(bw.take());
    buf.clear();
  };

  size_t i = 0;
  const size_t n = values.size();
  while (i < n) {
    size_t run = 1;
    while (i + run < n && values[i + run] == values[i]) ++run;
    // Bit-packed runs must hold a multiple of 8 real values unless final,
    // so top the pending group up before switching to an RLE run.
    if (buf.size() % 8 != 0) {
      size_t k = std::min(run, 8 - buf.size() % 8);
      buf.insert(buf.end(), k, values[i]);
      i += k;
      run -= k;
      if (run == 0) continue;
    }
    if (run >= 8) {
      flush_bitpacked();
      w.uleb(run << 1);
      for (int b = 0; b < value_bytes; ++b) {
        w.u8(static_cast<uint8_t>(values[i] >> (8 * b)));
      }
      i += run;
    } else {
      buf.insert(buf.end(), run, values[i]);
      i += run;
    }
    if (buf.size() >= 504 && buf.size() % 8 == 0) flush_bitpacked();
  }
  flush_bitpacked();
  return w.take();
}

std::vector<uint32_t> rle_hybrid_decode(ByteReader& r, int64_t count,
                                        int width) {
  std::vector<uint32_t> out;
  out.reserve(static_cast<size_t>(count));
  const int value_bytes = (width + 7) / 8;
  while (static_cast<int64_t>(out.size()) < count) {
    uint64_t header = r.uleb();
    if (header & 1) {
      uint64_t groups = header >> 1;
      if (groups > (static_cast<uint64_t>(count) / 8) + 2'000'000) {
        throw DecodeError("implausible bit-packed run length");
      }
      ByteView data = r.raw(static_cast<size_t>(groups) * width);
      BitReaderLE br(data);
      for (uint64_t k = 0; k < groups * 8; ++k) {
        uint32_t v = static_cast<uint32_t>(br.get(width));
        if (static_cast<int64_t>(out.size()) < count) out.push_back(v);
      }
    } else {
      uint64_t run = header >> 1;
      if (run > static_cast<uint64_t>(count) + 8) {
        throw DecodeError("implausible RLE run length");
      }
      uint32_t v = 0;
      for (int b = 0; b < value_bytes; ++b) {
        v |= static_cast<uint32_t>(r.u8()) << (8 * b);
      }
      for (uint64_t k = 0; k < run; ++k) {
        if (static_cast<int64_t>(out.size()) < count) out.push_back(v);
      }
    }
  }
  return out;
}

namespace {

// ---- PLAIN ----

void plain_encode_range(const ColumnSlice& col, int64_t vbegin, int64_t vcount,
                        ByteWriter& w) {
  switch (col.desc.physical_type) {
    case PhysicalType::BOOLEAN: {
      BitWriter bw;
      for (int64_t k = 0; k < vcount; ++k) bw.put(col.bools[vbegin + k], 1);
      w.raw(bw.take());
      break;
    }
    case PhysicalType::INT32:
      w.raw(col.i32.data() + vbegin, static_cast<size_t>(vcount) * 4);
      break;
    case PhysicalType::INT64:
      w.raw(col.i64.data() + vbegin, static_cast<size_t>(vcount) * 8);
      break;
    case PhysicalType::FLOAT:
      w.raw(col.f32.data() + vbegin, static_cast<size_t>(vcount) * 4);
      break;
    case PhysicalType::DOUBLE:
      w.raw(col.f64.data() + vbegin, static_cast<size_t>(vcount) * 8);
      break;
    case PhysicalType::BYTE_ARRAY:
      for (int64_t k = 0; k < vcount; ++k) {
        std::string_view s = col.bin_at(vbegin + k);
        w.le<uint32_t>(static_cast<uint32_t>(s.size()));
        w.raw(s.data(), s.size());
      }
      break;
    case PhysicalType::FIXED_LEN_BYTE_ARRAY:
    case PhysicalType::INT96:
      // Fixed-width arena values are contiguous; one bulk write.
      if (vcount > 0) {
        int64_t lo = col.bin_off[static_cast<size_t>(vbegin)];
        int64_t hi = col.bin_off[static_cast<size_t>(vbegin + vcount)];
        w.raw(col.bin_data.data() + lo, static_cast<size_t>(hi - lo));
      }
      break;
  }
}

void plain_decode(ByteReader& r, int64_t vcount, const ColumnDescriptor& desc,
                  ColumnSlice& out) {
  switch (desc.physical_type) {
    case PhysicalType::BOOLEAN: {
      ByteView data = r.raw(static_cast<size_t>((vcount + 7) / 8));
      BitReaderLE br(data);
      for (int64_t k = 0; k < vcount; ++k) {
        out.bools.push_back(static_cast<uint8_t>(br.get(1)));
      }
      break;
    }
    case PhysicalType::INT32: {
      ByteView d = r.raw(static_cast<size_t>(vcount) * 4);
      size_t old = out.i32.size();
      out.i32.resize(old + vcount);
      std::memcpy(out.i32.data() + old, d.data(), d.size());
      break;
    }
    case PhysicalType::INT64: {
      ByteView d = r.raw(static_cast<size_t>(vcount) * 8);
      size_t old = out.i64.size();
      out.i64.resize(old + vcount);
      std::memcpy(out.i64.data() + old, d.data(), d.size());
      break;
    }
    case PhysicalType::FLOAT: {
      ByteView d = r.raw(static_cast<size_t>(vcount) * 4);
      size_t old = out.f32.size();
      out.f32.resize(old + vcount);
      std::memcpy(out.f32.data() + old, d.data(), d.size());
      break;
    }
    case PhysicalType::DOUBLE: {
      ByteView d = r.raw(static_cast<size_t>(vcount) * 8);
      size_t old = out.f64.size();
      out.f64.resize(old + vcount);
      std::memcpy(out.f64.data() + old, d.data(), d.size());
      break;
    }
    case PhysicalType::BYTE_ARRAY:
      for (int64_t k = 0; k < vcount; ++k) {
        uint32_t len = r.le<uint32_t>();
        ByteView d = r.raw(len);
        out.bin_push(std::string_view(
            reinterpret_cast<const char*>(d.data()), d.size()));
      }
      break;
    case PhysicalType::FIXED_LEN_BYTE_ARRAY:
    case PhysicalType::INT96: {
      size_t len = desc.physical_type == PhysicalType::INT96
                       ? 12
                       : static_cast<size_t>(desc.type_length);
      for (int64_t k = 0; k < vcount; ++k) {
        ByteView d = r.raw(len);
        out.bin_push(std::string_view(
            reinterpret_cast<const char*>(d.data()), d.size()));
      }
      break;
    }
  }
}

// ---- DELTA_BINARY_PACKED ----

// Arithmetic wraps in the value's own width, so round-trips are exact for
// the full integer range.
template <typename U>
Bytes dbp_encode(std::span<const U> vals) {
  using S = std::make_signed_t<U>;
  constexpr int kBlock = 128;
  constexpr int kMini = 4;
  constexpr int kPerMini = kBlock / kMini;
  ByteWriter w;
  w.uleb(kBlock);
  w.uleb(kMini);
  w.uleb(vals.size());
  if (vals.empty()) return w.take();
  w.zigzag(static_cast<int64_t>(static_cast<S>(vals[0])));

  const size_t n_deltas = vals.size() - 1;
  std::vector<U> deltas(n_deltas);
  for (size_t i = 0; i < n_deltas; ++i) deltas[i] = vals[i + 1] - vals[i];

  for (size_t base = 0; base < n_deltas; base += kBlock) {
    size_t in_block = std::min<size_t>(kBlock, n_deltas - base);
    U min_delta = deltas[base];
    for (size_t k = 1; k < in_block; ++k) {
      if (static_cast<S>(deltas[base + k]) < static_cast<S>(min_delta)) {
        min_delta = deltas[base + k];
      }
    }
    w.zigzag(static_cast<int64_t>(static_cast<S>(min_delta)));
    uint8_t widths[kMini] = {0, 0, 0, 0};
    for (int m = 0; m < kMini; ++m) {
      size_t mb = base + static_cast<size_t>(m) * kPerMini;
      if (mb >= base + in_block) break;
      size_t mcount = std::min<size_t>(kPerMini, base + in_block - mb);
      uint64_t max_enc = 0;
      for (size_t k = 0; k < mcount; ++k) {
        uint64_t enc = static_cast<uint64_t>(
            static_cast<U>(deltas[mb + k] - min_delta));
        max_enc = std::max(max_enc, enc);
      }
      widths[m] = static_cast<uint8_t>(bit_width(max_enc));
    }
    for (int m = 0; m < kMini; ++m) w.u8(widths[m]);
    for (int m = 0; m < kMini; ++m) {
      size_t mb = base + static_cast<size_t>(m) * kPerMini;
      if (mb >= base + in_block) break;  // trailing miniblocks omitted
      size_t mcount = std::min<size_t>(kPerMini, base + in_block - mb);
      BitWriter bw;
      for (int k = 0; k < kPerMini; ++k) {
        uint64_t enc = static_cast<size_t>(k) < mcount
                           ? static_cast<uint64_t>(static_cast<U>(
                                 deltas[mb + k] - min_delta))
                           : 0;
        bw.put(enc, widths[m]);
      }
      w.raw(bw.take());
    }
  }
  return w.take();
}

template <typename U>
std::vector<U> dbp_decode(ByteReader& r) {
  uint64_t block = r.uleb();
  uint64_t mini = r.uleb();
  uint64_t total = r.uleb();
  if (mini == 0 || block == 0 || block % mini != 0 ||
      (block / mini) % 8 != 0) {
    throw DecodeError("bad delta-binary-packed header");
  }
  const size_t per_mini = static_cast<size_t>(block / mini);
  std::vector<U> out;
  if (total == 0) return out;
  out.reserve(static_cast<size_t>(total));
  U prev = static_cast<U>(r.zigzag());
  out.push_back(prev);
  uint64_t remaining = total - 1;
  while (remaining > 0) {
    U min_delta = static_cast<U>(r.zigzag());
    std::vector<uint8_t> widths(static_cast<size_t>(mini));
    for (auto& b : widths) b = r.u8();
    for (size_t m = 0; m < mini && remaining > 0; ++m) {
      if (widths[m] > sizeof(U) * 8 + 1) {
        throw DecodeError("bad miniblock bit width");
      }
      ByteView data = r.raw(per_mini * widths[m] / 8);
      BitReaderLE br(data);
      for (size_t k = 0; k < per_mini; ++k) {
        U enc = static_cast<U>(br.get(widths[m]));
        if (remaining > 0) {
          prev = prev + min_delta + enc;
          out.push_back(prev);
          --remaining;
        }
      }
    }
  }
  return out;
}

// ---- DELTA_LENGTH_BYTE_ARRAY / DELTA_BYTE_ARRAY ----

void dlba_encode(std::span<const std::string_view> vals, ByteWriter& w) {
  std::vector<uint32_t> lens(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    lens[i] = static_cast<uint32_t>(vals[i].size());
  }
  w.raw(dbp_encode<uint32_t>(lens));
  for (std::string_view s : vals) w.raw(s.data(), s.size());
}

/// Reads the delta-length section; returned views alias the reader's
/// backing buffer.
std::vector<std::string_view> dlba_decode_views(ByteReader& r,
                                                int64_t vcount) {
  std::vector<uint32_t> lens = dbp_decode<uint32_t>(r);
  if (static_cast<int64_t>(lens.size()) != vcount) {
    throw DecodeError("delta-length count mismatch");
  }
  std::vector<std::string_view> out;
  out.reserve(lens.size());
  for (uint32_t len : lens) {
    ByteView d = r.raw(len);
    out.emplace_back(reinterpret_cast<const char*>(d.data()), d.size());
  }
  return out;
}

void dlba_decode(ByteReader& r, int64_t vcount, ColumnSlice& out) {
  for (std::string_view v : dlba_decode_views(r, vcount)) out.bin_push(v);
}

void dba_encode(std::span<const std::string_view> vals, ByteWriter& w) {
  std::vector<uint32_t> prefix(vals.size());
  std::vector<std::string_view> suffix(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    size_t p = 0;
    if (i > 0) {
      size_t lim = std::min(vals[i].size(), vals[i - 1].size());
      while (p < lim && vals[i][p] == vals[i - 1][p]) ++p;
    }
    prefix[i] = static_cast<uint32_t>(p);
    suffix[i] = vals[i].substr(p);
  }
  w.raw(dbp_encode<uint32_t>(prefix));
  dlba_encode(suffix, w);
}

void dba_decode(ByteReader& r, int64_t vcount, ColumnSlice& out) {
  std::vector<uint32_t> prefix = dbp_decode<uint32_t>(r);
  if (static_cast<int64_t>(prefix.size()) != vcount) {
    throw DecodeError("delta-byte-array count mismatch");
  }
  std::vector<std::string_view> suffix = dlba_decode_views(r, vcount);
  std::string prev;
  for (int64_t i = 0; i < vcount; ++i) {
    if (prefix[i] > prev.size()) throw DecodeError("bad prefix length");
    std::string v = prev.substr(0, prefix[i]);
    v.append(suffix[static_cast<size_t>(i)]);
    out.bin_push(v);
    prev = std::move(v);
  }
}

/// Dense arena values [vbegin, vbegin+vcount) as views.
std::vector<std::string_view> bin_views(const ColumnSlice& col,
                                        int64_t vbegin, int64_t vcount) {
  std::vector<std::string_view> v;
  v.reserve(static_cast<size_t>(vcount));
  for (int64_t k = 0; k < vcount; ++k) v.push_back(col.bin_at(vbegin + k));
  return v;
}

// ---- BYTE_STREAM_SPLIT ----

int bss_width(const ColumnDescriptor& desc) {
  switch (desc.physical_type) {
    case PhysicalType::FLOAT:
    case PhysicalType::INT32:
      return 4;
    case PhysicalType::DOUBLE:
    case PhysicalType::INT64:
      return 8;
    case PhysicalType::FIXED_LEN_BYTE_ARRAY:
      return desc.type_length;
    default:
      throw DecodeError("byte-stream-split not applicable");
  }
}

void bss_encode(const ColumnSlice& col, int64_t vbegin, int64_t vcount,
                ByteWriter& w) {
  const int width = bss_width(col.desc);
  const uint8_t* src = nullptr;
  switch (col.desc.physical_type) {
    case PhysicalType::FLOAT:
      src = reinterpret_cast<const uint8_t*>(col.f32.data() + vbegin);
      break;
    case PhysicalType::DOUBLE:
      src = reinterpret_cast<const uint8_t*>(col.f64.data() + vbegin);
      break;
    case PhysicalType::INT32:
      src = reinterpret_cast<const uint8_t*>(col.i32.data() + vbegin);
      break;
    case PhysicalType::INT64:
      src = reinterpret_cast<const uint8_t*>(col.i64.data() + vbegin);
      break;
    default:
      // Fixed-width arena values are already contiguous.
      src = reinterpret_cast<const uint8_t*>(
          col.bin_data.data() +
          (vcount > 0 ? col.bin_off[static_cast<size_t>(vbegin)] : 0));
  }
  Bytes out(static_cast<size_t>(vcount) * width);
  for (int64_t i = 0; i < vcount; ++i) {
    for (int j = 0; j < width; ++j) {
      out[static_cast<size_t>(j) * vcount + i] = src[i * width + j];
    }
  }
  w.raw(out);
}

void bss_decode(ByteReader& r, int64_t vcount, const ColumnDescriptor& desc,
                ColumnSlice& out) {
  const int width = bss_width(desc);
  ByteView d = r.raw(static_cast<size_t>(vcount) * width);
  Bytes joined(static_cast<size_t>(vcount) * width);
  for (int64_t i = 0; i < vcount; ++i) {
    for (int j = 0; j < width; ++j) {
      joined[i * width + j] = d[static_cast<size_t>(j) * vcount + i];
    }
  }
  switch (desc.physical_type) {
    case PhysicalType::FLOAT: {
      size_t old = out.f32.size();
      out.f32.resize(old + vcount);
      std::memcpy(out.f32.data() + old, joined.data(), joined.size());
      break;
    }
    case PhysicalType::DOUBLE: {
      size_t old = out.f64.size();
      out.f64.resize(old + vcount);
      std::memcpy(out.f64.data() + old, joined.data(), joined.size());
      break;
    }
    case PhysicalType::INT32: {
      size_t old = out.i32.size();
      out.i32.resize(old + vcount);
      std::memcpy(out.i32.data() + old, joined.data(), joined.size());
      break;
    }
    case PhysicalType::INT64: {
      size_t old = out.i64.size();
      out.i64.resize(old + vcount);
      std::memcpy(out.i64.data() + old, joined.data(), joined.size());
      break;
    }
    default:
      for (int64_t k = 0; k < vcount; ++k) {
        out.bin_push(std::string_view(
            reinterpret_cast<const char*>(joined.data()) + k * width,
            static_cast<size_t>(width)));
      }
  }
}

// ---- dictionary build ----

struct DictionaryBuild {
  ColumnSlice values;             // dense, required
  std::vector<uint32_t> indices;  // one per valid row
};

template <typename T, typename Key = T>
void build_dict_typed(const std::vector<T>& vals, std::vector<T>& dict_out,
                      std::vector<uint32_t>& indices) {
  std::unordered_map<Key, uint32_t> seen;
  seen.reserve(vals.size());
  indices.reserve(vals.size());
  for (const T& v : vals) {
    Key k;
    if constexpr (std::is_same_v<T, Key>) {
      k = v;
    } else {
      static_assert(sizeof(T) == sizeof(Key));
      std::memcpy(&k, &v, sizeof(T));
    }
    auto [it, inserted] =
        seen.emplace(k, static_cast<uint32_t>(dict_out.size()));
    if (inserted) dict_out.push_back(v);
    indices.push_back(it->second);
  }
}

DictionaryBuild build_dictionary(const ColumnSlice& col) {
  DictionaryBuild b;
  b.values.desc = col.desc;
  b.values.desc.nullable = false;
  switch (col.desc.physical_type) {
    case PhysicalType::INT32:
      build_dict_typed(col.i32, b.values.i32, b.indices);
      break;
    case PhysicalType::INT64:
      build_dict_typed(col.i64, b.values.i64, b.indices);
      break;
    case PhysicalType::FLOAT:
      // Bit-pattern keyed so NaNs and signed zeros stay bit-exact.
      build_dict_typed<float, uint32_t>(col.f32, b.values.f32, b.indices);
      break;
    case PhysicalType::DOUBLE:
      build_dict_typed<double, uint64_t>(col.f64, b.values.f64, b.indices);
      break;
    default: {
      std::unordered_map<std::string_view, uint32_t> seen;
      int64_t n = col.bin_count();
      seen.reserve(static_cast<size_t>(n));
      b.indices.reserve(static_cast<size_t>(n));
      for (int64_t i = 0; i < n; ++i) {
        std::string_view v = col.bin_at(i);
        auto [it, inserted] = seen.emplace(
            v, static_cast<uint32_t>(b.values.bin_count()));
        if (inserted) b.values.bin_push(v);
        b.indices.push_back(it->second);
      }
      break;
    }
  }
  b.values.num_rows = b.values.value_count();
  return b;
}

// ---- definition levels ----

// V1 data pages carry definition levels as a 4-byte-length-prefixed RLE
// section; omitted entirely for required columns.
void write_def_levels(const ColumnSlice& col, int64_t row_begin, int64_t rows,
                      ByteWriter& w) {
  if (!col.desc.nullable) return;
  std::vector<uint32_t> levels(static_cast<size_t>(rows), 1);
  if (!col.valid.empty()) {
    for (int64_t k = 0; k < rows; ++k) {
      levels[static_cast<size_t>(k)] = col.valid[row_begin + k] ? 1 : 0;
    }
  }
  Bytes rle = rle_hybrid_encode(levels, 1);
  w.le<uint32_t>(static_cast<uint32_t>(rle.size()));
  w.raw(rle);
}

}  // namespace

EncodedChunkData encode_chunk_pages(const ColumnSlice& col, EncodingKind e,
                                    int64_t page_row_limit,
                                    int64_t dictionary_size_limit) {
  if (!encoding_applicable(e, col.desc.physical_type)) {
    throw std::invalid_argument(std::string(to_string(e)) +
                                " not applicable to " +
                                to_string(col.desc.physical_type));
  }
  if (page_row_limit < 1) throw std::invalid_argument("page_row_limit < 1");

  EncodedChunkData out;
  out.data_encoding = e;

  DictionaryBuild dict;
  if (e == EncodingKind::RLE_DICTIONARY) {
    dict = build_dictionary(col);
    ByteWriter dw;
    plain_encode_range(dict.values, 0, dict.values.value_count(), dw);
    Bytes dict_payload = dw.take();
    if (static_cast<int64_t>(dict_payload.size()) > dictionary_size_limit) {
      out.data_encoding = EncodingKind::PLAIN;
      out.fallback = true;
      e = EncodingKind::PLAIN;
    } else {
      out.dictionary_used = true;
      EncodedPage dp;
      dp.type = PageType::DICTIONARY;
      dp.encoding = EncodingKind::PLAIN;
      dp.num_values = dict.values.value_count();
      dp.payload = std::move(dict_payload);
      out.dict_page = std::move(dp);
    }
  }

  const int64_t rows = col.num_rows;
  int64_t row = 0;
  int64_t vpos = 0;  // dense value index of `row`
  while (row < rows) {
    int64_t page_rows = std::min(page_row_limit, rows - row);
    int64_t vcount = col.valid_in_range(row, page_rows);
    EncodedPage p;
    p.type = PageType::DATA_V1;
    p.encoding = e;
    p.num_values = page_rows;
    ByteWriter w;
    write_def_levels(col, row, page_rows, w);
    switch (e) {
      case EncodingKind::PLAIN:
        plain_encode_range(col, vpos, vcount, w);
        break;
      case EncodingKind::RLE: {
        // Boolean RLE data encoding: 4-byte length prefix, bit width 1.
        std::vector<uint32_t> bits(static_cast<size_t>(vcount));
        for (int64_t k = 0; k < vcount; ++k) bits[k] = col.bools[vpos + k];
        Bytes rle = rle_hybrid_encode(bits, 1);
        w.le<uint32_t>(static_cast<uint32_t>(rle.size()));
        w.raw(rle);
        break;
      }
      case EncodingKind::RLE_DICTIONARY: {
        int width = std::max(
            1, bit_width(dict.values.value_count() > 0
                             ? static_cast<uint64_t>(
                                   dict.values.value_count() - 1)
                             : 0));
        w.u8(static_cast<uint8_t>(width));
        std::span<const uint32_t> idx(dict.indices.data() + vpos,
                                      static_cast<size_t>(vcount));
        w.raw(rle_hybrid_encode(idx, width));
        break;
      }
      case EncodingKind::DELTA_BINARY_PACKED:
        if (col.desc.physical_type == PhysicalType::INT32) {
          std::span<const uint32_t> v(
              reinterpret_cast<const uint32_t*>(col.i32.data() + vpos),
              static_cast<size_t>(vcount));
          w.raw(dbp_encode<uint32_t>(v));
        } else {
          std::span<const uint64_t> v(
              reinterpret_cast<const uint64_t*>(col.i64.data() + vpos),
              static_cast<size_t>(vcount));
          w.raw(dbp_encode<uint64_t>(v));
        }
        break;
      case EncodingKind::DELTA_LENGTH_BYTE_ARRAY:
        dlba_encode(bin_views(col, vpos, vcount), w);
        break;
      case EncodingKind::DELTA_BYTE_ARRAY:
        dba_encode(bin_views(col, vpos, vcount), w);
        break;
      case EncodingKind::BYTE_STREAM_SPLIT:
        bss_encode(col, vpos, vcount, w);
        break;
    }
    p.payload = w.take();
    out.data_pages.push_back(std::move(p));
    row += page_rows;
    vpos += vcount;
  }
  return out;
}

ColumnSlice decode_dictionary_page(ByteView payload,
                                   const ColumnDescriptor& desc,
                                   int64_t num_entries) {
  ColumnSlice dict;
  dict.desc = desc;
  dict.desc.nullable = false;
  ByteReader r(payload);
  plain_decode(r, num_entries, desc, dict);
  dict.num_rows = num_entries;
  return dict;
}

void decode_page_values(ByteReader& r, EncodingKind enc, int64_t value_count,
                        const ColumnDescriptor& desc, const ColumnSlice* dict,
                        ColumnSlice& out) {
  switch (enc) {
    case EncodingKind::PLAIN:
      plain_decode(r, value_count, desc, out);
      break;
    case EncodingKind::RLE: {
      uint32_t len = r.le<uint32_t>();
      ByteView section = r.raw(len);
      ByteReader sr(section);
      for (uint32_t b : rle_hybrid_decode(sr, value_count, 1)) {
        out.bools.push_back(static_cast<uint8_t>(b));
      }
      break;
    }
    case EncodingKind::RLE_DICTIONARY: {
      if (dict == nullptr) throw DecodeError("dictionary page missing");
      int width = r.u8();
      if (width > 32) throw DecodeError("bad dictionary index width");
      std::vector<uint32_t> idx = rle_hybrid_decode(r, value_count, width);
      int64_t n = dict->value_count();
      for (uint32_t i : idx) {
        if (static_cast<int64_t>(i) >= n) {
          throw DecodeError("dictionary index out of range");
        }
        switch (desc.physical_type) {
          case PhysicalType::INT32: out.i32.push_back(dict->i32[i]); break;
          case PhysicalType::INT64: out.i64.push_back(dict->i64[i]); break;
          case PhysicalType::FLOAT: out.f32.push_back(dict->f32[i]); break;
          case PhysicalType::DOUBLE: out.f64.push_back(dict->f64[i]); break;
          case PhysicalType::BOOLEAN:
            throw DecodeError("dictionary-encoded boolean");
          default: out.bin_push(dict->bin_at(i)); break;
        }
      }
      break;
    }
    case EncodingKind::DELTA_BINARY_PACKED:
      if (desc.physical_type == PhysicalType::INT32) {
        std::vector<uint32_t> v = dbp_decode<uint32_t>(r);
        if (static_cast<int64_t>(v.size()) != value_count) {
          throw DecodeError("delta-binary-packed count mismatch");
        }
        for (uint32_t x : v) out.i32.push_back(static_cast<int32_t>(x));
      } else if (desc.physical_type == PhysicalType::INT64) {
        std::vector<uint64_t> v = dbp_decode<uint64_t>(r);
        if (static_cast<int64_t>(v.size()) != value_count) {
          throw DecodeError("delta-binary-packed count mismatch");
        }
        for (uint64_t x : v) out.i64.push_back(static_cast<int64_t>(x));
      } else {
        throw DecodeError("delta-binary-packed on non-integer column");
      }
      break;
    case EncodingKind::DELTA_LENGTH_BYTE_ARRAY:
      dlba_decode(r, value_count, out);
      break;
    case EncodingKind::DELTA_BYTE_ARRAY:
      dba_decode(r, value_count, out);
      break;
    case EncodingKind::BYTE_STREAM_SPLIT:
      bss_decode(r, value_count, desc, out);
      break;
  }
}

}  // namespace pqforge
