#pragma once

#include <cstdint>
#include <vector>

namespace posetreal {

// Square boolean matrix with 64-bit packed rows. Used for the strict-order
// closure; comparability tests must be O(1).
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(int n)
        : n_(n), words_per_row_((n + 63) / 64),
          data_(static_cast<size_t>(n) * words_per_row_, 0) {}

    int size() const { return n_; }

    bool get(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }

    void set(int i, int j, bool v = true) {
        uint64_t* w = &rowm(i)[j >> 6];
        if (v)
            *w |= uint64_t(1) << (j & 63);
        else
            *w &= ~(uint64_t(1) << (j & 63));
    }

    const uint64_t* row(int i) const { return data_.data() + static_cast<size_t>(i) * words_per_row_; }
    uint64_t* rowm(int i) { return data_.data() + static_cast<size_t>(i) * words_per_row_; }
    int words_per_row() const { return words_per_row_; }

    void or_row_into(int src, int dst) {
        uint64_t* d = rowm(dst);
        const uint64_t* s = row(src);
        for (int w = 0; w < words_per_row_; ++w) d[w] |= s[w];
    }

    // Warshall closure in place.
    void transitive_close() {
        for (int k = 0; k < n_; ++k)
            for (int i = 0; i < n_; ++i)
                if (get(i, k)) or_row_into(k, i);
    }

    bool any_diagonal() const {
        for (int i = 0; i < n_; ++i)
            if (get(i, i)) return true;
        return false;
    }

    bool rows_intersect(int i, int j) const {
        const uint64_t* a = row(i);
        const uint64_t* b = row(j);
        for (int w = 0; w < words_per_row_; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }

    int row_popcount(int i) const {
        int c = 0;
        const uint64_t* a = row(i);
        for (int w = 0; w < words_per_row_; ++w) c += __builtin_popcountll(a[w]);
        return c;
    }

    bool operator==(const BitMatrix& o) const {
        return n_ == o.n_ && data_ == o.data_;
    }

  private:
    int n_ = 0;
    int words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

} // namespace posetreal
