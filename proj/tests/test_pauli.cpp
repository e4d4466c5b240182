#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "graphbell/pauli.hpp"

using graphbell::Axis;
using graphbell::PauliString;

TEST_CASE("single-qubit products carry the right i^m phase") {
  PauliString x = PauliString::single(1, 1, Axis::X);
  PauliString y = PauliString::single(1, 1, Axis::Y);
  PauliString z = PauliString::single(1, 1, Axis::Z);

  PauliString xz = x * z;
  CHECK(xz.phase_exp() == 3);  // X*Z = -iY
  CHECK(xz.x_mask() == y.x_mask());
  CHECK(xz.z_mask() == y.z_mask());
  CHECK(xz.str() == "-iY");

  CHECK((z * x).phase_exp() == 1);  // Z*X = +iY
  CHECK((x * y).phase_exp() == 1);  // X*Y = +iZ
  CHECK((y * x).phase_exp() == 3);

  CHECK(x * x == PauliString::identity(1));
  CHECK(y * y == PauliString::identity(1));
  CHECK(z * z == PauliString::identity(1));
}

TEST_CASE("tensor factors multiply independently") {
  // (X ⊗ Z) * (Z ⊗ Z) = (-i)(Y ⊗ 1)
  PauliString lhs = PauliString::from_str("XZ");
  PauliString rhs = PauliString::from_str("ZZ");
  PauliString prod = lhs * rhs;
  CHECK(prod.str() == "-iY1");
}

TEST_CASE("anticommutation shows up as a phase difference of 2") {
  PauliString x = PauliString::single(1, 1, Axis::X);
  PauliString z = PauliString::single(1, 1, Axis::Z);
  CHECK(((x * z).phase_exp() + 2) % 4 == (z * x).phase_exp());
}

TEST_CASE("group laws hold on every 2-qubit string") {
  std::vector<PauliString> all;
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t z = 0; z < 4; ++z) all.emplace_back(2, x, z);
  }
  PauliString id = PauliString::identity(2);
  for (const auto& p : all) {
    CHECK(p * id == p);
    CHECK(id * p == p);
    PauliString sq = p * p;
    CHECK(sq.x_mask() == 0);
    CHECK(sq.z_mask() == 0);
    CHECK(sq.phase_exp() == 0);  // Hermitian letters square to +1
    for (const auto& q : all) {
      for (const auto& r : all) {
        CHECK((p * q) * r == p * (q * r));
      }
    }
  }
}

TEST_CASE("hermiticity tracks the phase parity") {
  PauliString x = PauliString::single(1, 1, Axis::X);
  PauliString z = PauliString::single(1, 1, Axis::Z);
  PauliString xz = x * z;
  CHECK(!xz.is_hermitian());
  CHECK_THROWS_AS(xz.sign(), graphbell::ValidationError);
  CHECK((-x).sign() == -1);
  CHECK(x.sign() == 1);
}

TEST_CASE("string rendering and parsing") {
  CHECK(PauliString::from_str("-ZYXY").str() == "-ZYXY");
  CHECK(PauliString::from_str("ZX1X").str() == "ZX1X");
  CHECK(PauliString::from_str("+IXYZ").str() == "1XYZ");
  CHECK(PauliString::from_str("ZX1X").size() == 4);
  CHECK(PauliString::from_str("-ZYXY").sign() == -1);
  CHECK_THROWS_AS(PauliString::from_str("ZQ"), graphbell::ParseError);
  CHECK_THROWS_AS(PauliString::from_str(""), graphbell::ParseError);
}

TEST_CASE("mask invariants and errors") {
  CHECK_THROWS_AS(PauliString(0), graphbell::ValidationError);
  CHECK_THROWS_AS(PauliString(2, 0b100, 0), graphbell::ValidationError);
  PauliString a(2), b(3);
  CHECK_THROWS_AS(a * b, graphbell::DimensionError);
  CHECK(PauliString::from_str("ZXZ1").letter_at(2) == 'X');
  CHECK(PauliString::from_str("ZXZ1").trivial_at(4));
}
