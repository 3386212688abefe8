#include "waring/dump.hpp"

#include <cstring>

namespace waring {

LoadedReach deserialize_reach(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4 || std::memcmp(magic, dump_magic, 4) != 0)
        throw FormatError("reach dump: bad magic");
    const int ver = in.get();
    if (ver == std::istream::traits_type::eof())
        throw FormatError("reach dump: truncated header");
    if (ver != dump_version)
        throw FormatError("reach dump: unsupported version " +
                          std::to_string(ver));
    DumpMeta meta;
    meta.k = static_cast<std::uint32_t>(detail::get_uint(in, 4));
    meta.s = static_cast<std::uint32_t>(detail::get_uint(in, 4));
    const std::uint64_t n_max = detail::get_uint(in, 8);
    const auto stored_w = static_cast<std::uint32_t>(detail::get_uint(in, 4));
    if (n_max == 0)
        throw FormatError("reach dump: n_max must be positive");
    if (stored_w == 0 || stored_w % 8 != 0 || stored_w > 64)
        throw FormatError("reach dump: unsupported word width " +
                          std::to_string(stored_w));

    const std::uint64_t stored_words = n_max / stored_w + 1;
    const std::uint64_t payload_bytes = stored_words * (stored_w / 8);

    LoadedReach out{ReachSet(n_max), meta, stored_w};
    auto& words = out.set.words();
    // The stored payload never outruns the native one: both round n_max up
    // to a word, and 64 is the widest width accepted above.
    const std::uint64_t native_bytes = out.set.word_count() * 8;

    for (std::uint64_t b = 0; b < payload_bytes; ++b) {
        const int c = in.get();
        if (c == std::istream::traits_type::eof())
            throw FormatError("reach dump: truncated payload");
        const auto byte =
            static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        if (byte == 0) continue;
        // Byte b marks integers 8b .. 8b+7.
        if (8 * b > n_max || b >= native_bytes)
            throw FormatError("reach dump: payload bits beyond n_max");
        words[b / 8] |= byte << (8 * (b % 8));
    }
    if (in.get() != std::istream::traits_type::eof())
        throw FormatError("reach dump: trailing bytes after payload");

    // The byte straddling n_max may still carry bits above it.
    const std::uint64_t last = out.set.word_count() - 1;
    const unsigned used = static_cast<unsigned>(n_max % 64) + 1;
    if (used < 64 && (words[last] >> used) != 0)
        throw FormatError("reach dump: payload bits beyond n_max");
    return out;
}

} // namespace waring
