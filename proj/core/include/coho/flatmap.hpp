// Open-addressing hash map from 128-bit keys to uint32, for orbit bookkeeping
// on millions of permutation hashes without node allocation overhead.
#pragma once

#include <cstdint>
#include <vector>

namespace coho::perm {

class HashIndexMap {
public:
    explicit HashIndexMap(std::size_t expected = 64) { rehash(round_up(expected * 2)); }

    /// Returns existing value, or inserts `fresh` and returns it.
    std::uint32_t find_or_insert(std::uint64_t k1, std::uint64_t k2, std::uint32_t fresh,
                                 bool* inserted) {
        if ((size_ + 1) * 10 >= cap_ * 7) rehash(cap_ * 2);
        std::size_t i = slot(k1, k2);
        while (used_[i]) {
            if (k1_[i] == k1 && k2_[i] == k2) { *inserted = false; return val_[i]; }
            i = (i + 1) & (cap_ - 1);
        }
        used_[i] = true;
        k1_[i] = k1; k2_[i] = k2; val_[i] = fresh;
        ++size_;
        *inserted = true;
        return fresh;
    }

    /// -1 cast to uint32 if absent.
    std::uint32_t find(std::uint64_t k1, std::uint64_t k2) const {
        std::size_t i = slot(k1, k2);
        while (used_[i]) {
            if (k1_[i] == k1 && k2_[i] == k2) return val_[i];
            i = (i + 1) & (cap_ - 1);
        }
        return UINT32_MAX;
    }

    std::size_t size() const { return size_; }

private:
    static std::size_t round_up(std::size_t n) {
        std::size_t c = 64;
        while (c < n) c <<= 1;
        return c;
    }
    std::size_t slot(std::uint64_t k1, std::uint64_t k2) const {
        return (k1 ^ (k2 * 0x9e3779b97f4a7c15ull)) & (cap_ - 1);
    }
    void rehash(std::size_t ncap) {
        std::vector<std::uint64_t> ok1 = std::move(k1_), ok2 = std::move(k2_);
        std::vector<std::uint32_t> ov = std::move(val_);
        std::vector<bool> ou = std::move(used_);
        cap_ = ncap;
        k1_.assign(cap_, 0); k2_.assign(cap_, 0);
        val_.assign(cap_, 0);
        used_.assign(cap_, false);
        std::size_t oldsize = size_;
        size_ = 0;
        for (std::size_t i = 0; i < ou.size(); ++i) {
            if (!ou[i]) continue;
            std::size_t j = slot(ok1[i], ok2[i]);
            while (used_[j]) j = (j + 1) & (cap_ - 1);
            used_[j] = true;
            k1_[j] = ok1[i]; k2_[j] = ok2[i]; val_[j] = ov[i];
            ++size_;
        }
        (void)oldsize;
    }

    std::size_t cap_ = 0, size_ = 0;
    std::vector<std::uint64_t> k1_, k2_;
    std::vector<std::uint32_t> val_;
    std::vector<bool> used_;
};

}  // namespace coho::perm
