#pragma once

#include "gtlie/context.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstring>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace gtlie {

/// A monomial of the tensor algebra: a sequence of at most kMaxDegree letters.
/// The empty word is the unit. Stored inline; ordered by (length, lexicographic).
class Word {
public:
    static constexpr int kCapacity = AlgebraContext::kMaxDegree;

    Word() = default;
    Word(std::initializer_list<Letter> letters) { assign(std::span<const Letter>(letters.begin(), letters.size())); }
    explicit Word(std::span<const Letter> letters) { assign(letters); }

    static Word single(Letter a) { return Word{a}; }

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Letter operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }
    Letter front() const { return data_[0]; }
    Letter back() const { return data_[static_cast<std::size_t>(size_ - 1)]; }

    std::span<const Letter> letters() const { return {data_.data(), static_cast<std::size_t>(size_)}; }
    const Letter* begin() const { return data_.data(); }
    const Letter* end() const { return data_.data() + size_; }

    void push_back(Letter a)
    {
        if (size_ >= kCapacity) throw std::length_error("Word: capacity exceeded");
        data_[static_cast<std::size_t>(size_++)] = a;
    }

    /// Letters [pos, pos+count).
    Word slice(int pos, int count) const { return Word(letters().subspan(static_cast<std::size_t>(pos), static_cast<std::size_t>(count))); }
    Word drop_front() const { return slice(1, size_ - 1); }
    Word drop_back() const { return slice(0, size_ - 1); }
    Word reversed() const
    {
        Word r = *this;
        std::reverse(r.data_.begin(), r.data_.begin() + size_);
        return r;
    }
    /// Left rotation by k: w[k..] w[..k).
    Word rotated(int k) const
    {
        Word r;
        r.size_ = size_;
        for (int i = 0; i < size_; ++i) r.data_[static_cast<std::size_t>(i)] = data_[static_cast<std::size_t>((i + k) % size_)];
        return r;
    }

    friend Word operator+(const Word& a, const Word& b)
    {
        if (a.size_ + b.size_ > kCapacity) throw std::length_error("Word: capacity exceeded");
        Word r = a;
        std::memcpy(r.data_.data() + a.size_, b.data_.data(), static_cast<std::size_t>(b.size_));
        r.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
        return r;
    }

    friend bool operator==(const Word& a, const Word& b)
    {
        return a.size_ == b.size_ && std::memcmp(a.data_.data(), b.data_.data(), static_cast<std::size_t>(a.size_)) == 0;
    }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (a.size_ != b.size_) return a.size_ <=> b.size_;
        const int c = std::memcmp(a.data_.data(), b.data_.data(), static_cast<std::size_t>(a.size_));
        return c <=> 0;
    }

private:
    void assign(std::span<const Letter> letters)
    {
        if (letters.size() > static_cast<std::size_t>(kCapacity)) throw std::length_error("Word: capacity exceeded");
        std::copy(letters.begin(), letters.end(), data_.begin());
        size_ = static_cast<std::uint8_t>(letters.size());
    }

    std::array<Letter, kCapacity> data_{};
    std::uint8_t size_ = 0;
};

/// Lexicographically least rotation (naive scan, fine for short words).
Word canonical_rotation(const Word& w);

/// x_{k_1}...x_{k_m} from 1-based genus-0 indices.
Word genus0_word(const AlgebraContext& ctx, std::initializer_list<int> indices);

}  // namespace gtlie
