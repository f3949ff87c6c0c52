#pragma once

// Dense bit-packed linear algebra over the two-element field.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace skewchain::gf2 {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-length vector over F2, packed 64 entries per word.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  /// Parses a string of '0'/'1' characters, column 0 first.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("bit string may only contain '0' and '1'");
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) {
    require_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set entry, if any.
  std::optional<std::size_t> first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
  }

  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  void require_same_length(const BitVector& other) const {
    if (other.length_ != length_) {
      throw DimensionError("bit vector length mismatch: " + std::to_string(length_) + " vs " +
                           std::to_string(other.length_));
    }
  }

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (auto w : v.words()) h ^= std::hash<BitVector::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// A list of equal-length rows. Rows are kept as a set: inserting a row
/// that is already present is a no-op, and zero rows are kept only before
/// echelonization.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}

  static BitMatrix from_rows(std::size_t cols, const std::vector<BitVector>& rows) {
    BitMatrix m(cols);
    for (const auto& r : rows) m.add_row(r);
    return m;
  }
  static BitMatrix from_strings(std::size_t cols, std::initializer_list<std::string_view> rows) {
    BitMatrix m(cols);
    for (auto r : rows) m.add_row(BitVector::from_string(r));
    return m;
  }

  /// Returns false when the row was a duplicate.
  bool add_row(BitVector row) {
    if (row.size() != cols_) {
      throw DimensionError("row of length " + std::to_string(row.size()) + " added to matrix with " +
                           std::to_string(cols_) + " columns");
    }
    if (!index_.insert(row).second) return false;
    rows_.push_back(std::move(row));
    pivots_.reset();
    return true;
  }

  std::size_t cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  const BitVector& row(std::size_t i) const { return rows_.at(i); }

  bool is_echelonized() const noexcept { return pivots_.has_value(); }
  /// Populated only on matrices produced by rref().
  const std::optional<std::vector<std::size_t>>& pivot_cols() const noexcept { return pivots_; }
  std::optional<std::size_t> rank() const noexcept {
    if (!pivots_) return std::nullopt;
    return pivots_->size();
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  friend class Echelon;
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
  std::unordered_set<BitVector, BitVectorHash> index_;
  std::optional<std::vector<std::size_t>> pivots_;
};

/// Incrementally maintained reduced row-echelon basis. Every stored row has
/// a distinct pivot column and is zero in every other pivot column, so
/// reducing a vector takes one XOR per pivot it touches.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols), row_of_col_(cols, kNone) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Residue of v modulo the current rowspace; zero iff v is in the span.
  BitVector reduce(BitVector v) const {
    check(v);
    BitVector original = v;
    original.for_each_set([&](std::size_t c) {
      if (row_of_col_[c] != kNone) v ^= rows_[row_of_col_[c]];
    });
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Adds v to the span. Returns true when the rank grew.
  bool insert(const BitVector& v) {
    BitVector r = reduce(v);
    auto pivot = r.first_set();
    if (!pivot) return false;
    for (auto& row : rows_) {
      if (row.test(*pivot)) row ^= r;
    }
    row_of_col_[*pivot] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  bool full() const noexcept { return rows_.size() == cols_; }

  /// Rows sorted by pivot column, with pivots and rank recorded.
  BitMatrix to_matrix() const {
    BitMatrix m(cols_);
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row_of_col_[c] == kNone) continue;
      pivots.push_back(c);
      m.rows_.push_back(rows_[row_of_col_[c]]);
      m.index_.insert(rows_[row_of_col_[c]]);
    }
    m.pivots_ = std::move(pivots);
    return m;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void check(const BitVector& v) const {
    if (v.size() != cols_) {
      throw DimensionError("vector of length " + std::to_string(v.size()) + " reduced against " +
                           std::to_string(cols_) + " columns");
    }
  }

  std::size_t cols_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> row_of_col_;
};

inline BitMatrix rref(const BitMatrix& m) {
  Echelon e(m.cols());
  for (const auto& row : m.rows()) e.insert(row);
  return e.to_matrix();
}

inline bool in_rowspace(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) {
    throw DimensionError("vector of length " + std::to_string(v.size()) + " tested against " +
                         std::to_string(m.cols()) + " columns");
  }
  if (!m.pivot_cols()) throw std::invalid_argument("in_rowspace requires an echelonized matrix");
  const auto& pivots = *m.pivot_cols();
  BitVector r = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (r.test(pivots[i])) r ^= m.row(i);
  }
  return r.none();
}

}  // namespace skewchain::gf2
