#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "swan/errors.hpp"
#include "swan/units.hpp"

using swan::FieldSpec;
using swan::Natural;
using swan::UnitGen;
using Kind = UnitGen::Kind;

namespace {

const std::vector<std::pair<std::uint64_t, std::uint64_t>> kPairs = {
    {3, 5},  {4, 3},  {5, 3},  {7, 3},  {9, 5},  {11, 7}, {13, 7}, {17, 3},
    {19, 3}, {25, 3}, {27, 5}, {29, 3}, {31, 3}, {4, 7},  {5, 13}};

std::vector<std::uint64_t> widen(const swan::FieldElem& x) {
  return {x.coeffs().begin(), x.coeffs().end()};
}

std::size_t count_kind(const std::vector<UnitGen>& gens, Kind k) {
  return static_cast<std::size_t>(
      std::count_if(gens.begin(), gens.end(), [k](const UnitGen& g) { return g.kind == k; }));
}

}  // namespace

TEST(EnumerateGenerators, ThreeFive) {
  const auto gens = swan::enumerate_generators(3, 5);
  EXPECT_EQ(gens.size(), 14u);
  EXPECT_EQ(count_kind(gens, Kind::kFrac), 4u);  // Frac(3,2), Frac(5,2..4)
  EXPECT_EQ(count_kind(gens, Kind::kFlat), 8u);
  EXPECT_EQ(count_kind(gens, Kind::kRootOfUnity), 2u);
  EXPECT_EQ(gens.front(), UnitGen::frac(3, 2));
  EXPECT_EQ(gens.back(), UnitGen::zeta(15));
  EXPECT_TRUE(std::is_sorted(gens.begin(), gens.end()));
}

TEST(EnumerateGenerators, NineFiveDivisorLattice) {
  std::set<std::uint64_t> frac_d, flat_d;
  for (const auto& g : swan::enumerate_generators(9, 5)) {
    if (g.kind == Kind::kFrac) frac_d.insert(g.d);
    if (g.kind == Kind::kFlat) flat_d.insert(g.d);
  }
  EXPECT_EQ(frac_d, (std::set<std::uint64_t>{3, 5, 9}));
  EXPECT_EQ(flat_d, (std::set<std::uint64_t>{15, 45}));
}

TEST(EnumerateGenerators, RejectsSharedFactor) {
  EXPECT_THROW(swan::enumerate_generators(10, 5), swan::DomainError);
}

TEST(ImageOfGenerator, Examples) {
  const auto F = FieldSpec::make(3, 5);
  for (std::uint64_t a = 1; a < 5; ++a) {
    EXPECT_EQ(swan::image_of_generator(UnitGen::frac(5, a), F), F.scalar(a));
    EXPECT_EQ(swan::image_frac_p(a, F), F.scalar(a));
  }
  EXPECT_EQ(swan::image_frac_p(1, F), F.one());
  EXPECT_EQ(F.element_order(swan::image_frac_p(2, F)), Natural(4));
  EXPECT_THROW(swan::image_frac_p(5, F), swan::DomainError);
  // zeta_15 -> z, so 1 - zeta_15 -> 1 - z; 1 - zeta_15^2 -> 1 - z^2.
  EXPECT_EQ(swan::image_of_generator(UnitGen::flat(15, 1), F), F.sub(F.one(), F.generator()));
  EXPECT_EQ(swan::image_of_generator(UnitGen::flat(15, 2), F), F.sub(F.one(), F.z_pow(2)));
  EXPECT_EQ(swan::image_of_generator(UnitGen::zeta(15), F), F.generator());
  EXPECT_EQ(swan::image_of_generator(UnitGen::minus_one(), F), F.scalar(4));
}

TEST(ImageOfGenerator, MatchesGeometricSumOracle) {
  for (auto [m, p] : kPairs) {
    const auto F = FieldSpec::make(m, p);
    const oracle::Field O(m, p);
    const oracle::UnitImages U{m, p, O};
    for (const auto& g : swan::enumerate_generators(m, p)) {
      const auto got = widen(swan::image_of_generator(g, F));
      switch (g.kind) {
        case Kind::kFrac:
          EXPECT_EQ(got, U.frac(g.d, g.a)) << g.to_string() << " in " << m << "," << p;
          break;
        case Kind::kFlat:
          EXPECT_EQ(got, U.flat(g.d, g.a)) << g.to_string();
          break;
        default:
          break;
      }
    }
  }
}

TEST(ImageOfGenerator, FracPOrderIsOrderModP) {
  for (auto [m, p] : kPairs) {
    const auto F = FieldSpec::make(m, p);
    for (std::uint64_t a = 2; a < p; ++a) {
      const auto img = swan::image_of_generator(UnitGen::frac(p, a), F);
      EXPECT_EQ(img, swan::image_frac_p(a, F));
      EXPECT_EQ(F.element_order(img).to_u64(), oracle::order_mod(a, p));
    }
  }
}

TEST(ReducedGeneratorSet, NineFive) {
  const auto gens = swan::reduced_generator_set(9, 5);
  std::vector<UnitGen> flats, fracs;
  for (const auto& g : gens) {
    if (g.kind == Kind::kFlat) flats.push_back(g);
    if (g.kind == Kind::kFrac) fracs.push_back(g);
  }
  EXPECT_EQ(flats.size(), 2u);
  EXPECT_EQ(fracs, (std::vector<UnitGen>{UnitGen::frac(3, 2), UnitGen::frac(9, 2),
                                         UnitGen::frac(9, 4), UnitGen::frac(9, 5),
                                         UnitGen::frac(9, 7), UnitGen::frac(9, 8)}));
  EXPECT_EQ(count_kind(gens, Kind::kFracFamily), 1u);
  EXPECT_EQ(count_kind(gens, Kind::kRootOfUnity), 2u);
}

TEST(ReducedGeneratorSet, ThreeFive) {
  const auto gens = swan::reduced_generator_set(3, 5);
  EXPECT_EQ(count_kind(gens, Kind::kFlat), 1u);
  EXPECT_EQ(count_kind(gens, Kind::kFrac), 1u);
  EXPECT_EQ(count_kind(gens, Kind::kFracFamily), 1u);
  EXPECT_EQ(count_kind(gens, Kind::kRootOfUnity), 2u);
}

TEST(ReducedGeneratorSet, InadmissibleM) {
  EXPECT_THROW(swan::reduced_generator_set(6, 5), swan::DomainError);
  EXPECT_THROW(swan::reduced_generator_set(15, 7), swan::DomainError);
  EXPECT_THROW(swan::reduced_generator_set(2, 11), swan::DomainError);
}

TEST(ReducedGeneratorSet, FamilyMarkerGeneratesPrimeField) {
  for (auto [m, p] : kPairs) {
    const auto F = FieldSpec::make(m, p);
    const auto img = swan::image_of_generator(UnitGen::frac_family(p), F);
    EXPECT_EQ(F.element_order(img), Natural(p - 1));
  }
}

TEST(GaloisConjugate, IdentityAndErrors) {
  for (const auto& g : swan::enumerate_generators(9, 5)) {
    EXPECT_EQ(swan::galois_conjugate(g, 1, 9, 5), g);
  }
  EXPECT_THROW(swan::galois_conjugate(UnitGen::flat(45, 1), 3, 9, 5), swan::DomainError);
}

TEST(GaloisConjugate, EquivariantImageOrders) {
  std::mt19937_64 rng(13);
  for (auto [m, p] : kPairs) {
    const auto F = FieldSpec::make(m, p);
    const auto gens = swan::enumerate_generators(m, p);
    int conjugations = 0;
    while (conjugations < 20) {
      const std::uint64_t t = rng() % (4 * m) + 1;
      if (std::gcd(t, m) != 1) continue;
      ++conjugations;
      for (const auto& g : gens) {
        const auto h = swan::galois_conjugate(g, t, m, p);
        ASSERT_EQ(F.element_order(swan::image_of_generator(g, F)),
                  F.element_order(swan::image_of_generator(h, F)))
            << g.to_string() << " t=" << t << " in " << m << "," << p;
      }
    }
  }
}

TEST(GaloisConjugate, FlatOrbitCoversAllFlatImages) {
  for (auto [m, p] : kPairs) {
    const auto F = FieldSpec::make(m, p);
    std::map<std::uint64_t, std::set<swan::FieldElem>> all, orbit;
    for (const auto& g : swan::enumerate_generators(m, p)) {
      if (g.kind == Kind::kFlat) all[g.d].insert(swan::image_of_generator(g, F));
    }
    for (const auto& g : swan::reduced_generator_set(m, p)) {
      if (g.kind != Kind::kFlat) continue;
      for (std::uint64_t t = 1; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        orbit[g.d].insert(swan::image_of_generator(swan::galois_conjugate(g, t, m, p), F));
      }
    }
    // Every Flat image lies in the orbit of a representative at some level.
    std::set<swan::FieldElem> a, b;
    for (const auto& [d, s] : all) a.insert(s.begin(), s.end());
    for (const auto& [d, s] : orbit) b.insert(s.begin(), s.end());
    EXPECT_EQ(a, b) << m << "," << p;
  }
}

TEST(SubgroupOrder, Examples) {
  const auto F = FieldSpec::make(3, 5);
  EXPECT_EQ(swan::subgroup_order_of_images({}, F), Natural(1));
  EXPECT_EQ(swan::subgroup_order_of_images(swan::enumerate_generators(3, 5), F), Natural(24));
  const auto G = FieldSpec::make(9, 5);
  EXPECT_EQ(swan::subgroup_order_of_images(swan::enumerate_generators(9, 5), G),
            Natural(15624 / 7));
}

TEST(SubgroupOrder, LcmMatchesOracleClosure) {
  for (auto [m, p] : kPairs) {
    if (oracle::ipow(p, oracle::phi(m)) > 20000) continue;
    const auto F = FieldSpec::make(m, p);
    const oracle::Field O(m, p);
    const auto want = oracle::closure_size(oracle::all_images(m, p, O), O);
    EXPECT_EQ(swan::subgroup_order_of_images(swan::enumerate_generators(m, p), F).to_u64(), want)
        << m << "," << p;
  }
}

TEST(UnitGen, ToString) {
  EXPECT_FALSE(UnitGen::frac(9, 2).to_string().empty());
  EXPECT_NE(UnitGen::frac(9, 2).to_string(), UnitGen::flat(9, 2).to_string());
  EXPECT_TRUE(UnitGen::minus_one().is_torsion());
  EXPECT_FALSE(UnitGen::flat(15, 1).is_torsion());
}
