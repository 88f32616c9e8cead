#include "qecc/binary_matrix.hpp"

#include <gtest/gtest.h>

#include "qecc/rng.hpp"

using qecc::BinaryMatrix;
using qecc::Rng;

namespace {

// Independent bool-by-bool product used as the oracle for the packed code.
BinaryMatrix naive_multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
  BinaryMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      bool acc = false;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc ^= a.get(r, k) && b.get(k, c);
      }
      out.set(r, c, acc);
    }
  }
  return out;
}

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, rng.below(2) == 1);
    }
  }
  return m;
}

}  // namespace

TEST(ParitySyndrome, RepetitionSingleError) {
  const auto h = qecc::repetition3_parity_check();
  const auto s = qecc::parity_syndrome(h, {1, 0, 0});
  EXPECT_EQ(s, (std::vector<std::uint8_t>{1, 0}));
}

TEST(ParitySyndrome, ZeroErrorGivesZero) {
  const auto h = qecc::hamming7_parity_check();
  const auto s = qecc::parity_syndrome(h, std::vector<std::uint8_t>(7, 0));
  EXPECT_EQ(s, (std::vector<std::uint8_t>{0, 0, 0}));
}

TEST(ParitySyndrome, HammingUnitErrorReadsColumn) {
  const auto h = qecc::hamming7_parity_check();
  std::vector<std::uint8_t> e(7, 0);
  e[2] = 1;  // third bit
  EXPECT_EQ(qecc::parity_syndrome(h, e), (std::vector<std::uint8_t>{0, 1, 1}));
}

TEST(ParitySyndrome, LengthMismatchThrows) {
  const auto h = qecc::repetition3_parity_check();
  EXPECT_THROW(qecc::parity_syndrome(h, {1, 0}), qecc::dimension_error);
}

TEST(ParitySyndrome, Linearity) {
  Rng rng(3);
  const auto h = qecc::hamming7_parity_check();
  for (int i = 0; i < 50; ++i) {
    std::vector<std::uint8_t> e1(7), e2(7), both(7);
    for (int c = 0; c < 7; ++c) {
      e1[c] = static_cast<std::uint8_t>(rng.below(2));
      e2[c] = static_cast<std::uint8_t>(rng.below(2));
      both[c] = e1[c] ^ e2[c];
    }
    auto s1 = qecc::parity_syndrome(h, e1);
    const auto s2 = qecc::parity_syndrome(h, e2);
    for (std::size_t r = 0; r < s1.size(); ++r) s1[r] ^= s2[r];
    EXPECT_EQ(qecc::parity_syndrome(h, both), s1);
  }
}

TEST(CheckDuality, RepetitionGenerator) {
  const auto h = qecc::repetition3_parity_check();
  const auto g = BinaryMatrix::from_strings({"1", "1", "1"});
  EXPECT_TRUE(qecc::check_duality(h, g));
}

TEST(CheckDuality, IdentityPairFails) {
  const auto id = BinaryMatrix::identity(2);
  EXPECT_FALSE(qecc::check_duality(id, id));
}

TEST(CheckDuality, HammingUnitVectorIsNotACodeword) {
  const auto h = qecc::hamming7_parity_check();
  BinaryMatrix g(7, 1);
  g.set(0, 0, true);
  EXPECT_FALSE(qecc::check_duality(h, g));
}

TEST(CheckDuality, DimensionMismatchThrows) {
  const auto h = qecc::repetition3_parity_check();
  EXPECT_THROW(qecc::check_duality(h, BinaryMatrix::identity(2)),
               qecc::dimension_error);
}

TEST(CheckDuality, NullSpaceColumnsAlwaysPass) {
  const auto h = qecc::hamming7_parity_check();
  const auto basis = h.null_space_basis();
  ASSERT_EQ(basis.size(), 4u);  // Hamming encodes four bits
  BinaryMatrix g(7, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t r = 0; r < 7; ++r) g.set(r, c, basis[c][r] != 0);
  }
  EXPECT_TRUE(qecc::check_duality(h, g));
  // Every codeword (column combination) has a zero syndrome.
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    std::vector<std::uint8_t> cw(7, 0);
    for (const auto& v : basis) {
      if (rng.below(2)) {
        for (int c = 0; c < 7; ++c) cw[c] ^= v[c];
      }
    }
    EXPECT_EQ(qecc::parity_syndrome(h, cw), (std::vector<std::uint8_t>(3, 0)));
  }
}

TEST(CssCompatible, HammingIsSelfOrthogonal) {
  const auto h = qecc::hamming7_parity_check();
  EXPECT_TRUE(qecc::css_compatible(h, h));
}

TEST(CssCompatible, RepetitionIsNot) {
  const auto h = qecc::repetition3_parity_check();
  EXPECT_FALSE(qecc::css_compatible(h, h));
  // H H^T = [[0,1],[1,0]].
  const auto prod = h.multiplied(h.transposed());
  EXPECT_EQ(prod, BinaryMatrix::from_strings({"01", "10"}));
}

TEST(CssCompatible, EmptySideIsCompatible) {
  const auto h = qecc::repetition3_parity_check();
  EXPECT_TRUE(qecc::css_compatible(BinaryMatrix(0, 3), h));
}

TEST(CssCompatible, SymmetricInArguments) {
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_matrix(3, 6, rng);
    const auto b = random_matrix(4, 6, rng);
    EXPECT_EQ(qecc::css_compatible(a, b), qecc::css_compatible(b, a));
  }
}

TEST(HammingMatrix, ColumnsAreBinaryOneThroughSeven) {
  const auto h = qecc::hamming7_parity_check();
  ASSERT_EQ(h.rows(), 3u);
  ASSERT_EQ(h.cols(), 7u);
  for (std::size_t c = 0; c < 7; ++c) {
    int value = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      value = (value << 1) | (h.get(r, c) ? 1 : 0);
    }
    EXPECT_EQ(value, static_cast<int>(c) + 1);
  }
}

TEST(Rank, KnownValues) {
  EXPECT_EQ(qecc::repetition3_parity_check().rank(), 2u);
  EXPECT_EQ(qecc::hamming7_parity_check().rank(), 3u);
  EXPECT_EQ(BinaryMatrix(3, 5).rank(), 0u);
  EXPECT_EQ(BinaryMatrix::identity(4).rank(), 4u);
  // Duplicated row drops the rank.
  EXPECT_EQ(BinaryMatrix::from_strings({"110", "110", "011"}).rank(), 2u);
}

TEST(NullSpace, VectorsAreActuallyInTheKernel) {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    const auto m = random_matrix(4, 9, rng);
    const auto basis = m.null_space_basis();
    EXPECT_EQ(basis.size(), 9u - m.rank());
    for (const auto& v : basis) {
      EXPECT_EQ(qecc::parity_syndrome(m, v),
                (std::vector<std::uint8_t>(m.rows(), 0)));
    }
  }
}

TEST(Multiply, MatchesNaiveOracle) {
  Rng rng(29);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_matrix(1 + rng.below(8), 1 + rng.below(70), rng);
    const auto b = random_matrix(a.cols(), 1 + rng.below(8), rng);
    EXPECT_EQ(a.multiplied(b), naive_multiply(a, b));
  }
}

TEST(Parse, AcceptsSpacesAndComments) {
  const auto m = BinaryMatrix::parse(
      "# repetition code parity check\n"
      "1 1 0\n"
      "0 1 1   # second check\n"
      "\n");
  EXPECT_EQ(m, qecc::repetition3_parity_check());
}

TEST(Parse, EmptyTextGivesEmptyMatrix) {
  const auto m = BinaryMatrix::parse("# nothing here\n");
  EXPECT_EQ(m.rows(), 0u);
  EXPECT_EQ(m.cols(), 0u);
}

TEST(Parse, RejectsBadCharacterAndRaggedRows) {
  EXPECT_THROW(BinaryMatrix::parse("102\n"), qecc::parse_error);
  EXPECT_THROW(BinaryMatrix::parse("11\n101\n"), qecc::parse_error);
}

TEST(Parse, MissingFileThrowsIoError) {
  EXPECT_THROW(BinaryMatrix::load_file("/nonexistent/matrix.txt"),
               qecc::io_error);
}

TEST(Parse, RoundTripsThroughStr) {
  Rng rng(41);
  const auto m = random_matrix(5, 11, rng);
  EXPECT_EQ(BinaryMatrix::parse(m.str()), m);
}
