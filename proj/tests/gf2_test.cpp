#include "skewchain/gf2.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace skewchain::gf2 {
namespace {

TEST(Rref, InvertibleTwoByTwo) {
  auto m = rref(BitMatrix::from_strings(2, {"11", "01"}));
  EXPECT_EQ(m.rank(), 2u);
  ASSERT_EQ(m.row_count(), 2u);
  EXPECT_EQ(m.row(0).to_string(), "10");
  EXPECT_EQ(m.row(1).to_string(), "01");
  EXPECT_EQ(*m.pivot_cols(), (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, DuplicateRowsCollapse) {
  auto m = rref(BitMatrix::from_strings(2, {"11", "11"}));
  EXPECT_EQ(m.rank(), 1u);
  ASSERT_EQ(m.row_count(), 1u);
  EXPECT_EQ(m.row(0).to_string(), "11");
}

TEST(Rref, EmptyMatrix) {
  auto m = rref(BitMatrix(5));
  EXPECT_EQ(m.rank(), 0u);
  EXPECT_EQ(m.row_count(), 0u);
}

TEST(Rref, ZeroRowsAreDropped) {
  auto m = rref(BitMatrix::from_strings(3, {"000", "101"}));
  EXPECT_EQ(m.rank(), 1u);
}

TEST(BitMatrix, InsertionDeduplicates) {
  BitMatrix m(3);
  EXPECT_TRUE(m.add_row(BitVector::from_string("101")));
  EXPECT_FALSE(m.add_row(BitVector::from_string("101")));
  EXPECT_EQ(m.row_count(), 1u);
}

TEST(BitMatrix, RejectsWrongLength) {
  BitMatrix m(3);
  EXPECT_THROW(m.add_row(BitVector::from_string("10")), DimensionError);
}

TEST(InRowspace, SumOfRows) {
  auto m = rref(BitMatrix::from_strings(3, {"110", "011"}));
  EXPECT_TRUE(in_rowspace(m, BitVector::from_string("101")));
}

TEST(InRowspace, OutsideSpan) {
  // The span of {110, 011} is {000, 110, 011, 101}.
  auto rows = BitMatrix::from_strings(3, {"110", "011"});
  auto m = rref(rows);
  EXPECT_FALSE(in_rowspace(m, BitVector::from_string("100")));
  std::vector<std::vector<std::uint8_t>> bytes{{1, 1, 0}, {0, 1, 1}};
  EXPECT_FALSE(oracle::in_span(bytes, {1, 0, 0}));
}

TEST(InRowspace, ZeroInEmptySpan) {
  EXPECT_TRUE(in_rowspace(rref(BitMatrix(4)), BitVector(4)));
}

TEST(InRowspace, LengthMismatch) {
  auto m = rref(BitMatrix::from_strings(3, {"110"}));
  EXPECT_THROW(in_rowspace(m, BitVector(4)), DimensionError);
}

TEST(InRowspace, RequiresEchelonForm) {
  EXPECT_THROW(in_rowspace(BitMatrix::from_strings(2, {"11"}), BitVector(2)), std::invalid_argument);
}

TEST(BitVector, WordBoundaries) {
  BitVector v(130);
  v.set(0);
  v.set(63);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.count(), 4u);
  EXPECT_EQ(v.first_set(), 0u);
  std::vector<std::size_t> seen;
  v.for_each_set([&](std::size_t i) { seen.push_back(i); });
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 63, 64, 129}));
  v.flip(0);
  EXPECT_EQ(v.first_set(), 63u);
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    BitVector v(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      if (bit(rng)) v.set(c);
    }
    m.add_row(v);
  }
  return m;
}

std::vector<std::vector<std::uint8_t>> to_bytes(const BitMatrix& m) {
  std::vector<std::vector<std::uint8_t>> out;
  for (const auto& r : m.rows()) {
    std::vector<std::uint8_t> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = r.test(c);
    out.push_back(row);
  }
  return out;
}

TEST(RrefProperties, RandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = rng() % 40, cols = 1 + rng() % 150;
    auto m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 0.05 : 0.4);
    auto e = rref(m);

    // Idempotent, with the structural invariants of reduced echelon form.
    EXPECT_EQ(rref(e), e);
    const auto& pivots = *e.pivot_cols();
    ASSERT_EQ(pivots.size(), e.row_count());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      EXPECT_TRUE(e.row(i).any());
      if (i) {
        EXPECT_LT(pivots[i - 1], pivots[i]);
      }
      std::size_t ones = 0;
      for (const auto& r : e.rows()) ones += r.test(pivots[i]);
      EXPECT_EQ(ones, 1u);
    }

    // Rank agrees with naive elimination and is bounded.
    EXPECT_EQ(*e.rank(), oracle::rank(to_bytes(m)));
    EXPECT_LE(*e.rank(), std::min(m.row_count(), cols));

    // Original rows and random combinations lie in the rowspace.
    for (const auto& r : m.rows()) EXPECT_TRUE(in_rowspace(e, r));
    BitVector combo(cols);
    for (const auto& r : m.rows()) {
      if (rng() & 1) combo ^= r;
    }
    EXPECT_TRUE(in_rowspace(e, combo));

    // Row order does not matter.
    auto shuffled = m.rows();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(rref(BitMatrix::from_rows(cols, shuffled)), e);

    // A vector outside the span is detected, matching the naive check.
    BitVector probe(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() & 1) probe.set(c);
    }
    std::vector<std::uint8_t> pb(cols);
    for (std::size_t c = 0; c < cols; ++c) pb[c] = probe.test(c);
    EXPECT_EQ(in_rowspace(e, probe), oracle::in_span(to_bytes(m), pb));
  }
}

TEST(Echelon, IncrementalMatchesBatch) {
  std::mt19937_64 rng(11);
  auto m = random_matrix(rng, 60, 70, 0.3);
  Echelon e(70);
  std::size_t grew = 0;
  for (const auto& r : m.rows()) grew += e.insert(r);
  EXPECT_EQ(grew, e.rank());
  EXPECT_EQ(e.to_matrix(), rref(m));
}

}  // namespace
}  // namespace skewchain::gf2
