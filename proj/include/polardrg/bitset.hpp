#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace polardrg {

/// Fixed-size dynamic bitset packed into 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n)
        : size_(n)
        , words_((n + 63) / 64, 0)
    {
    }

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset complement() const
    {
        Bitset r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = ~words_[i];
        if (size_ % 64)
            r.words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        return r;
    }

    friend std::size_t and_count(const Bitset& a, const Bitset& b) noexcept
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            auto w = words_[wi];
            while (w) {
                fn(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace polardrg
