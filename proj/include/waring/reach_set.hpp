// reach_set.hpp
// Bit array over the integers [0, n_max]: payload bit x is set iff x is a
// member. Storage is an array of unsigned words; bit j of payload word w
// encodes the integer w * W + j, where W is the word width in bits. One
// guard word follows the payload; it stays zero and never affects results.
// Bits above n_max inside the last payload word are always zero.

#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

template <class Word = std::uint64_t>
class BasicReachSet {
    static_assert(std::is_unsigned_v<Word>);

public:
    static constexpr unsigned word_bits = std::numeric_limits<Word>::digits;

    BasicReachSet() = default;

    explicit BasicReachSet(std::uint64_t n_max)
        : n_max_(n_max),
          words_(static_cast<std::size_t>(n_max / word_bits) + 2, Word{0}) {
        if (n_max < 1)
            throw ArgumentError("reach set needs n_max >= 1");
    }

    std::uint64_t n_max() const { return n_max_; }

    // Payload words only; the trailing guard word is extra storage.
    std::size_t word_count() const { return words_.size() - 1; }
    std::uint64_t payload_bytes() const {
        return static_cast<std::uint64_t>(word_count()) * sizeof(Word);
    }
    std::uint64_t storage_bytes() const {
        return static_cast<std::uint64_t>(words_.size()) * sizeof(Word);
    }

    const std::vector<Word>& words() const { return words_; }
    std::vector<Word>& words() { return words_; }

    void set(std::uint64_t x) {
        check_index(x);
        words_[static_cast<std::size_t>(x / word_bits)] |=
            Word{1} << (x % word_bits);
    }

    bool test(std::uint64_t x) const {
        check_index(x);
        return (words_[static_cast<std::size_t>(x / word_bits)] >>
                (x % word_bits)) & Word{1};
    }

    // Members in the inclusive range [lo, hi].
    std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi) const {
        check_range(lo, hi);
        const std::size_t wl = static_cast<std::size_t>(lo / word_bits);
        const std::size_t wh = static_cast<std::size_t>(hi / word_bits);
        if (wl == wh)
            return std::popcount(static_cast<Word>(
                words_[wl] & low_mask(hi % word_bits + 1) & ~low_mask(lo % word_bits)));
        std::uint64_t n = std::popcount(
            static_cast<Word>(words_[wl] & ~low_mask(lo % word_bits)));
        for (std::size_t w = wl + 1; w < wh; ++w)
            n += std::popcount(words_[w]);
        n += std::popcount(
            static_cast<Word>(words_[wh] & low_mask(hi % word_bits + 1)));
        return n;
    }

    // True iff every integer of [lo, hi] is a member. Early exit on the
    // first incomplete word.
    bool all_set(std::uint64_t lo, std::uint64_t hi) const {
        check_range(lo, hi);
        const std::size_t wl = static_cast<std::size_t>(lo / word_bits);
        const std::size_t wh = static_cast<std::size_t>(hi / word_bits);
        if (wl == wh) {
            const Word m = low_mask(hi % word_bits + 1) & ~low_mask(lo % word_bits);
            return (words_[wl] & m) == m;
        }
        const Word ml = ~low_mask(lo % word_bits);
        if ((words_[wl] & ml) != ml)
            return false;
        for (std::size_t w = wl + 1; w < wh; ++w)
            if (words_[w] != static_cast<Word>(~Word{0}))
                return false;
        const Word mh = low_mask(hi % word_bits + 1);
        return (words_[wh] & mh) == mh;
    }

    // Zero every bit above n_max in the last payload word; the guard word
    // is rewritten to zero as well.
    void clear_tail() {
        words_[word_count() - 1] &= low_mask(n_max_ % word_bits + 1);
        words_[word_count()] = Word{0};
    }

    friend bool operator==(const BasicReachSet& a, const BasicReachSet& b) {
        if (a.n_max_ != b.n_max_)
            return false;
        for (std::size_t w = 0; w < a.word_count(); ++w)
            if (a.words_[w] != b.words_[w])
                return false;
        return true;
    }

private:
    // Mask of the low `bits` positions; bits == word_bits yields all ones.
    static Word low_mask(std::uint64_t bits) {
        if (bits >= word_bits)
            return static_cast<Word>(~Word{0});
        return static_cast<Word>((Word{1} << bits) - 1);
    }

    void check_index(std::uint64_t x) const {
        if (x > n_max_)
            throw ArgumentError("reach set index out of range");
    }

    void check_range(std::uint64_t lo, std::uint64_t hi) const {
        if (lo > hi || hi > n_max_)
            throw ArgumentError("reach set range out of bounds");
    }

    std::uint64_t n_max_ = 0;
    std::vector<Word> words_;
};

using ReachSet = BasicReachSet<std::uint64_t>;

} // namespace waring
