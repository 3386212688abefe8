// dump.hpp
// Binary snapshot of a reach set. Layout, all little-endian:
//   magic "WKS1" | version byte (1) | k u32 | s u32 | n_max u64 | W u32
// followed by the payload words in ascending order. Bit j of word w is the
// integer w * W + j, so the byte stream of the payload is identical for
// every word width: byte b always carries the integers 8b .. 8b+7.

#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "waring/errors.hpp"
#include "waring/reach_set.hpp"

namespace waring {

inline constexpr char dump_magic[4] = {'W', 'K', 'S', '1'};
inline constexpr unsigned char dump_version = 1;

struct DumpMeta {
    std::uint32_t k = 0;
    std::uint32_t s = 0;
};

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<char, 4> b;
    for (int i = 0; i < 4; ++i)
        b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b.data(), 4);
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i)
        b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b.data(), 8);
}

inline std::uint64_t get_uint(std::istream& in, unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bytes; ++i) {
        const int c = in.get();
        if (c == std::istream::traits_type::eof())
            throw FormatError("reach dump: truncated header");
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

} // namespace detail

template <class Word>
void serialize_reach(const BasicReachSet<Word>& set, const DumpMeta& meta,
                     std::ostream& out) {
    constexpr unsigned W = BasicReachSet<Word>::word_bits;
    out.write(dump_magic, 4);
    out.put(static_cast<char>(dump_version));
    detail::put_u32(out, meta.k);
    detail::put_u32(out, meta.s);
    detail::put_u64(out, set.n_max());
    detail::put_u32(out, W);
    std::string buf;
    buf.reserve(1 << 16);
    const auto& words = set.words();
    for (std::size_t w = 0; w < set.word_count(); ++w) {
        const Word v = words[w];
        for (unsigned i = 0; i < W / 8; ++i)
            buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
        if (buf.size() >= (1 << 16)) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    if (!buf.empty())
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw IoError("reach dump: sink write failed");
}

struct LoadedReach {
    ReachSet set;
    DumpMeta meta;
    std::uint32_t stored_word_bits = 0;
};

// Reads any stored word width and repacks into 64-bit words: the payload
// byte stream is width-independent, so only the byte count differs.
LoadedReach deserialize_reach(std::istream& in);

} // namespace waring
