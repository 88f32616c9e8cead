#include "qecc/pauli.hpp"

#include <gtest/gtest.h>

#include "qecc/rng.hpp"

using qecc::PauliOperator;
using qecc::Rng;

namespace {

PauliOperator random_pauli(std::size_t n, Rng& rng, bool random_phase = true) {
  PauliOperator p(n);
  int phase = 0;
  for (std::size_t q = 0; q < n; ++q) {
    switch (rng.below(4)) {
      case 0:
        break;
      case 1:
        p.set_x(q, true);
        break;
      case 2:
        p.set_z(q, true);
        break;
      case 3:
        p.set_x(q, true);
        p.set_z(q, true);
        ++phase;
        break;
    }
  }
  if (random_phase) phase += rng.below(4);
  p.set_phase_exp(phase);
  return p;
}

}  // namespace

TEST(PauliParse, IdentityString) {
  const auto p = PauliOperator::from_string("III");
  EXPECT_EQ(p.num_qubits(), 3u);
  EXPECT_EQ(p.phase_exp(), 0);
  EXPECT_TRUE(p.is_identity());
}

TEST(PauliParse, YIsStoredAsIXZ) {
  const auto p = PauliOperator::from_string("Y");
  EXPECT_TRUE(p.x_bit(0));
  EXPECT_TRUE(p.z_bit(0));
  EXPECT_EQ(p.phase_exp(), 1);
}

TEST(PauliParse, DirectEncoding) {
  const auto p = PauliOperator::from_string("ZIZ");
  EXPECT_FALSE(p.x_bit(0));
  EXPECT_FALSE(p.x_bit(1));
  EXPECT_FALSE(p.x_bit(2));
  EXPECT_TRUE(p.z_bit(0));
  EXPECT_FALSE(p.z_bit(1));
  EXPECT_TRUE(p.z_bit(2));
  EXPECT_EQ(p.phase_exp(), 0);
}

TEST(PauliParse, PhasePrefixes) {
  EXPECT_EQ(PauliOperator::from_string("+X").phase_exp(), 0);
  EXPECT_EQ(PauliOperator::from_string("iX").phase_exp(), 1);
  EXPECT_EQ(PauliOperator::from_string("+iX").phase_exp(), 1);
  EXPECT_EQ(PauliOperator::from_string("-X").phase_exp(), 2);
  EXPECT_EQ(PauliOperator::from_string("-iX").phase_exp(), 3);
  // -Y = -iXZ.
  EXPECT_EQ(PauliOperator::from_string("-Y").phase_exp(), 3);
}

TEST(PauliParse, RejectsInvalidCharacterNamingPosition) {
  try {
    PauliOperator::from_string("XIQZ");
    FAIL() << "expected parse_error";
  } catch (const qecc::parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("'Q'"), std::string::npos);
  }
}

TEST(PauliParse, RejectsEmptyAndPhaseOnlyStrings) {
  EXPECT_THROW(PauliOperator::from_string(""), qecc::parse_error);
  EXPECT_THROW(PauliOperator::from_string("-"), qecc::parse_error);
  EXPECT_THROW(PauliOperator::from_string("+i"), qecc::parse_error);
}

TEST(PauliRender, RoundTripsCanonicalStrings) {
  for (const char* s : {"III", "XIZ", "Y", "ZZY", "-X", "iXZ", "-iYX"}) {
    EXPECT_EQ(PauliOperator::from_string(s).str(), s);
  }
}

TEST(PauliRender, OmitsPrefixForPlusOne) {
  EXPECT_EQ(PauliOperator::from_string("+XX").str(), "XX");
  // Y alone carries phase_exp 1 internally yet displays with no prefix.
  EXPECT_EQ(PauliOperator::from_string("Y").str(), "Y");
}

TEST(PauliMultiply, XTimesYIsIZ) {
  const auto x = PauliOperator::from_string("X");
  const auto y = PauliOperator::from_string("Y");
  const auto product = x * y;
  EXPECT_EQ(product.str(), "iZ");
  EXPECT_EQ(product.phase_exp(), 1);
  EXPECT_FALSE(product.x_bit(0));
  EXPECT_TRUE(product.z_bit(0));
}

TEST(PauliMultiply, SingleQubitTable) {
  // The full XY = -YX = iZ family.
  EXPECT_EQ((PauliOperator::from_string("Y") * PauliOperator::from_string("X")).str(), "-iZ");
  EXPECT_EQ((PauliOperator::from_string("Y") * PauliOperator::from_string("Z")).str(), "iX");
  EXPECT_EQ((PauliOperator::from_string("Z") * PauliOperator::from_string("Y")).str(), "-iX");
  EXPECT_EQ((PauliOperator::from_string("Z") * PauliOperator::from_string("X")).str(), "iY");
  EXPECT_EQ((PauliOperator::from_string("X") * PauliOperator::from_string("Z")).str(), "-iY");
}

TEST(PauliMultiply, IdentityIsNeutral) {
  Rng rng(7);
  const auto id = PauliOperator::identity(6);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_pauli(6, rng);
    EXPECT_EQ(id * p, p);
    EXPECT_EQ(p * id, p);
  }
}

TEST(PauliMultiply, StabilizerProductRow) {
  const auto product =
      PauliOperator::from_string("ZZI") * PauliOperator::from_string("IZZ");
  EXPECT_EQ(product, PauliOperator::from_string("ZIZ"));
  EXPECT_EQ(product.phase_exp(), 0);
}

TEST(PauliMultiply, MismatchedSizesThrow) {
  EXPECT_THROW(PauliOperator::from_string("XX") * PauliOperator::from_string("X"),
               qecc::dimension_error);
}

TEST(PauliCommutes, PaperExamples) {
  EXPECT_TRUE(PauliOperator::from_string("ZZI").commutes_with(
      PauliOperator::from_string("XXX")));
  EXPECT_FALSE(PauliOperator::from_string("ZIZ").commutes_with(
      PauliOperator::from_string("YII")));
}

TEST(PauliCommutes, SelfCommutation) {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_pauli(5, rng);
    EXPECT_TRUE(p.commutes_with(p));
  }
}

TEST(PauliWeight, Examples) {
  EXPECT_EQ(PauliOperator::from_string("III").weight(), 0u);
  EXPECT_EQ(PauliOperator::from_string("XXXXXXIII").weight(), 6u);
  EXPECT_EQ(PauliOperator::from_string("XIZ").weight(), 2u);
}

TEST(PauliProperties, ClosureAndPhaseRange) {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_pauli(8, rng);
    const auto b = random_pauli(8, rng);
    const auto c = a * b;
    EXPECT_EQ(c.num_qubits(), 8u);
    EXPECT_GE(c.phase_exp(), 0);
    EXPECT_LE(c.phase_exp(), 3);
  }
}

TEST(PauliProperties, Associativity) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_pauli(7, rng);
    const auto b = random_pauli(7, rng);
    const auto c = random_pauli(7, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(PauliProperties, AnticommutationShiftsPhaseByTwo) {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_pauli(6, rng);
    const auto b = random_pauli(6, rng);
    const auto ab = a * b;
    const auto ba = b * a;
    EXPECT_EQ(ab.x_words(), ba.x_words());
    EXPECT_EQ(ab.z_words(), ba.z_words());
    if (a.commutes_with(b)) {
      EXPECT_EQ(ab.phase_exp(), ba.phase_exp());
    } else {
      EXPECT_EQ(ab.phase_exp(), (ba.phase_exp() + 2) & 3);
    }
  }
}

TEST(PauliProperties, SquaresArePhaseOnly) {
  Rng rng(57);
  for (int i = 0; i < 300; ++i) {
    auto p = random_pauli(6, rng);
    const auto sq = p * p;
    EXPECT_TRUE(sq.is_phase_only());
    EXPECT_TRUE(sq.phase_exp() == 0 || sq.phase_exp() == 2);
    // Hermitian operators square exactly to +I.
    p.set_phase_exp(static_cast<int>(p.y_count()) + 2 * rng.below(2));
    ASSERT_TRUE(p.is_hermitian());
    EXPECT_TRUE((p * p).is_identity());
  }
}

TEST(PauliAdjoint, HermitianFixedNonHermitianNegated) {
  EXPECT_EQ(PauliOperator::from_string("Y").adjoint(),
            PauliOperator::from_string("Y"));
  EXPECT_EQ(PauliOperator::from_string("iZ").adjoint(),
            PauliOperator::from_string("-iZ"));
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_pauli(5, rng);
    EXPECT_TRUE((p.adjoint() * p).is_identity());
  }
}

TEST(PauliBits, PackingPastWordBoundary) {
  // 70 qubits spans two words.
  std::string s(70, 'I');
  s[0] = 'X';
  s[63] = 'Y';
  s[69] = 'Z';
  const auto p = PauliOperator::from_string(s);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_TRUE(p.x_bit(0));
  EXPECT_TRUE(p.x_bit(63));
  EXPECT_TRUE(p.z_bit(63));
  EXPECT_TRUE(p.z_bit(69));
  EXPECT_EQ(p.str(), s);
  EXPECT_TRUE((p * p).is_identity());
}
