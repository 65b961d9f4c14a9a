#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ps2c {

/// Read-only view of packed bits owned elsewhere.
class BitSpan {
public:
    BitSpan() = default;
    BitSpan(const std::uint64_t* words, std::size_t size) : words_(words), size_(size) {}

    std::size_t size() const { return size_; }
    std::size_t num_words() const { return (size_ + 63) / 64; }
    const std::uint64_t* words() const { return words_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < num_words(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w]));
        return c;
    }

    /// Calls f(i) for every set bit in ascending order.
    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t w = 0; w < num_words(); ++w) {
            for (auto bits = words_[w]; bits != 0; bits &= bits - 1) f(w * 64 + std::countr_zero(bits));
        }
    }

private:
    const std::uint64_t* words_ = nullptr;
    std::size_t size_ = 0;
};

/// Fixed-size set of instance indices.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    explicit BitVector(BitSpan bits) : size_(bits.size()), words_(bits.words(), bits.words() + bits.num_words()) {}

    BitSpan view() const { return {words_.data(), size_}; }
    operator BitSpan() const { return view(); }

    /// From a '0'/'1' string, e.g. "1100" sets bits 0 and 1.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    std::size_t count() const { return view().count(); }
    bool none() const { return count() == 0; }

    /// Calls f(i) for every set bit in ascending order.
    template <typename F>
    void for_each_set(F&& f) const {
        view().for_each_set(f);
    }

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ps2c
