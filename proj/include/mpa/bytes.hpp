#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpa {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

inline void put_u16_be(Bytes& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

inline void put_u32_be(Bytes& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

inline void put_u64_be(Bytes& out, uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<uint8_t>(v >> shift));
    }
}

inline void put_i32_be(Bytes& out, int32_t v) {
    put_u32_be(out, static_cast<uint32_t>(v));
}

// Readers assume the caller has checked bounds.
inline uint16_t read_u16_be(ByteSpan in) {
    return static_cast<uint16_t>((uint16_t{in[0]} << 8) | uint16_t{in[1]});
}

inline uint32_t read_u32_be(ByteSpan in) {
    return (uint32_t{in[0]} << 24) | (uint32_t{in[1]} << 16) |
           (uint32_t{in[2]} << 8) | uint32_t{in[3]};
}

inline uint64_t read_u64_be(ByteSpan in) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v = (v << 8) | in[static_cast<size_t>(i)];
    }
    return v;
}

inline int32_t read_i32_be(ByteSpan in) {
    return static_cast<int32_t>(read_u32_be(in));
}

std::string to_hex(ByteSpan data);

// Lowercase or uppercase hex, even length; nullopt on anything else.
std::optional<Bytes> from_hex(std::string_view hex);

template <size_t N>
std::optional<std::array<uint8_t, N>> from_hex_fixed(std::string_view hex) {
    auto raw = from_hex(hex);
    if (!raw || raw->size() != N) {
        return std::nullopt;
    }
    std::array<uint8_t, N> out{};
    std::copy(raw->begin(), raw->end(), out.begin());
    return out;
}

// True if `needle` occurs as a contiguous substring of `haystack`.
bool contains_subsequence(ByteSpan haystack, ByteSpan needle);

}  // namespace mpa
