#include <gtest/gtest.h>

#include <map>
#include <set>

#include "glw/diagrams.hpp"
#include "glw/errors.hpp"
#include "test_support.hpp"

using namespace glw;

namespace {

using Images = std::vector<unsigned>;

std::set<Permutation> rotation_orbit(const Permutation& p) {
  std::set<Permutation> orbit;
  Permutation q = p;
  for (std::size_t i = 0; i < std::max<std::size_t>(p.size(), 1); ++i) {
    orbit.insert(q);
    q = q.rotated();
  }
  return orbit;
}

bool indecomposable(const Permutation& p) {
  unsigned running = 0;
  for (unsigned i = 1; i < p.size(); ++i) {
    running = std::max(running, p(i));
    if (running == i)
      return false;
  }
  return true;
}

} // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(Images{1, 1}), DomainError);
  EXPECT_THROW(Permutation(Images{0, 1}), DomainError);
  EXPECT_THROW(Permutation(Images{3, 1}), DomainError);
  EXPECT_NO_THROW(Permutation(Images{}));
}

TEST(Permutation, Structure) {
  Permutation p(Images{3, 1, 2, 5, 4, 6});
  EXPECT_EQ(p.cycles(), (std::vector<std::vector<unsigned>>{{1, 3, 2}, {4, 5}, {6}}));
  EXPECT_EQ(p.cycle_lengths(), (Images{3, 2, 1}));
  EXPECT_EQ(p.to_cycle_string(), "(1 3 2)(4 5)");
  EXPECT_EQ(p.to_string(), "[3,1,2,5,4,6]");
  EXPECT_EQ(p.inverse_at(1), 2u);
  EXPECT_TRUE(Permutation(Images{2, 3, 1}).is_standard_cycle());
  EXPECT_FALSE(Permutation(Images{3, 1, 2}).is_standard_cycle());
  EXPECT_EQ(Permutation(Images{3, 1, 2}).conjugated_by_adjacent(2), Permutation(Images{2, 3, 1}));
  // r sigma r^-1 with r = (1 2 3): r maps 1->2, 2->3, 3->1.
  EXPECT_EQ(Permutation(Images{2, 1, 3}).rotated(), Permutation(Images{1, 3, 2}));
  EXPECT_EQ(Permutation(Images{2, 1}).concatenate(Permutation(Images{1})), Permutation(Images{2, 1, 3}));
}

TEST(PermFromCycles, Examples) {
  EXPECT_EQ(perm_from_cycles({{1, 3, 2}}, 3), Permutation(Images{3, 1, 2}));
  EXPECT_EQ(perm_from_cycles({}, 2), Permutation::identity(2));
  EXPECT_EQ(perm_from_cycles({{1, 2}}, 2), Permutation(Images{2, 1}));
  EXPECT_THROW(perm_from_cycles({{1, 2}, {2, 3}}, 3), DomainError);
  EXPECT_THROW(perm_from_cycles({{1, 4}}, 3), DomainError);
  EXPECT_THROW(perm_from_cycles({{0, 1}}, 3), DomainError);
}

TEST(ChordToPerm, Examples) {
  EXPECT_EQ(chord_to_perm(ChordDiagram({{1, 3}, {2, 4}})), Permutation(Images{3, 4, 1, 2}));
  EXPECT_EQ(chord_to_perm(ChordDiagram({{1, 2}})), Permutation(Images{2, 1}));
  EXPECT_EQ(chord_to_perm(ChordDiagram({{1, 2}, {3, 4}})), Permutation(Images{2, 1, 4, 3}));
  EXPECT_THROW(ChordDiagram({{1, 2}, {2, 3}}), DomainError);
  EXPECT_THROW(ChordDiagram({{1, 3}}), DomainError);
  EXPECT_THROW(ChordDiagram::from_involution(Permutation(Images{2, 3, 1})), DomainError);
}

TEST(MakeKn, Examples) {
  EXPECT_EQ(make_kn(1).chords(), (std::vector<ChordDiagram::Chord>{{1, 2}}));
  EXPECT_EQ(make_kn(2).chords(), (std::vector<ChordDiagram::Chord>{{1, 3}, {2, 4}}));
  EXPECT_EQ(make_kn(3).chords(), (std::vector<ChordDiagram::Chord>{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(make_kn(2).to_string(), "1-3,2-4");
}

TEST(ChordToPerm, AlwaysFixedPointFreeInvolution) {
  for (unsigned n = 1; n <= 6; ++n) {
    Permutation p = chord_to_perm(make_kn(n));
    EXPECT_FALSE(p.has_fixed_point());
    for (unsigned i = 1; i <= p.size(); ++i)
      EXPECT_EQ(p(p(i)), i);
    EXPECT_EQ(ChordDiagram::from_involution(p), make_kn(n));
  }
}

TEST(CanonicalKey, Examples) {
  Permutation k2(Images{3, 4, 1, 2});
  for (const auto& q : rotation_orbit(k2))
    EXPECT_EQ(canonical_key(q), canonical_key(k2));
  Permutation id = Permutation::identity(4);
  EXPECT_EQ(id.rotated(), id);
  EXPECT_EQ(permutation_from_key(canonical_key(id)), id);
  // (1 3 2) is the inverse of the rotation itself, so its orbit is a single point.
  Permutation p(Images{3, 1, 2});
  EXPECT_EQ(rotation_orbit(p).size(), 1u);
  EXPECT_NE(canonical_key(p), canonical_key(Permutation(Images{2, 3, 1})));
  Permutation q(Images{2, 1, 3});
  auto orbit = rotation_orbit(q);
  EXPECT_EQ(orbit.size(), 3u);
  for (const auto& x : orbit)
    EXPECT_EQ(canonical_key(x), canonical_key(q));
}

TEST(CanonicalKey, SeparatesRotationOrbitsExhaustively) {
  for (std::size_t m = 0; m <= 6; ++m) {
    std::map<CanonicalKey, std::set<Permutation>> classes;
    for (const auto& p : glw::testing::all_permutations(m))
      classes[canonical_key(p)].insert(p);
    for (const auto& [key, members] : classes) {
      EXPECT_EQ(members, rotation_orbit(*members.begin())) << "m=" << m;
      EXPECT_TRUE(members.count(permutation_from_key(key)));
    }
  }
}

TEST(CanonicalKey, RejectsInvalidBytes) {
  EXPECT_THROW(permutation_from_key(CanonicalKey{""}), DomainError);
  EXPECT_THROW(permutation_from_key(CanonicalKey{std::string("\x02\x01\x01", 3)}), DomainError);
  EXPECT_THROW(permutation_from_key(CanonicalKey{std::string("\x03\x01\x02", 3)}), DomainError);
  // [2,1,3] is a valid permutation but not the least rotation conjugate ([1,3,2] is).
  EXPECT_THROW(permutation_from_key(CanonicalKey{std::string("\x03\x02\x01\x03", 4)}), DomainError);
}

TEST(SplitBlocks, Examples) {
  EXPECT_EQ(split_blocks(Permutation(Images{2, 1, 4, 3})),
            (std::vector<Permutation>{Permutation(Images{2, 1}), Permutation(Images{2, 1})}));
  EXPECT_EQ(split_blocks(Permutation(Images{3, 4, 1, 2})), (std::vector<Permutation>{Permutation(Images{3, 4, 1, 2})}));
  EXPECT_EQ(split_blocks(Permutation(Images{1, 3, 2})),
            (std::vector<Permutation>{Permutation(Images{1}), Permutation(Images{2, 1})}));
  EXPECT_TRUE(split_blocks(Permutation()).empty());
}

TEST(SplitBlocks, ConcatenationRecoversInput) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& p : glw::testing::all_permutations(m)) {
      auto blocks = split_blocks(p);
      Permutation joined;
      for (const auto& b : blocks) {
        joined = joined.concatenate(b);
        if (b.size() > 1) {
          EXPECT_TRUE(indecomposable(b)) << p.to_string();
        }
      }
      EXPECT_EQ(joined, p);
    }
}

TEST(StripFixedPoints, Examples) {
  EXPECT_EQ(strip_fixed_points(Permutation(Images{1, 3, 2})), std::make_pair(std::size_t{1}, Permutation(Images{2, 1})));
  EXPECT_EQ(strip_fixed_points(Permutation::identity(3)), std::make_pair(std::size_t{3}, Permutation()));
  EXPECT_EQ(strip_fixed_points(Permutation(Images{3, 2, 1})), std::make_pair(std::size_t{1}, Permutation(Images{2, 1})));
}

TEST(StripFixedPoints, ResultHasNoFixedPoints) {
  for (std::size_t m = 0; m <= 6; ++m)
    for (const auto& p : glw::testing::all_permutations(m)) {
      auto [count, reduced] = strip_fixed_points(p);
      EXPECT_FALSE(reduced.has_fixed_point());
      EXPECT_EQ(count + reduced.size(), m);
    }
}

TEST(Parse, Permutations) {
  EXPECT_EQ(parse_permutation("(1 3 2)"), Permutation(Images{3, 1, 2}));
  EXPECT_EQ(parse_permutation("(1 2)", 4), Permutation(Images{2, 1, 3, 4}));
  EXPECT_EQ(parse_permutation("(1 2)(3 4)"), Permutation(Images{2, 1, 4, 3}));
  EXPECT_EQ(parse_permutation("[3,1,2]"), Permutation(Images{3, 1, 2}));
  EXPECT_EQ(parse_permutation("[]"), Permutation());
  for (const char* bad : {"(1 1)", "[1,1]", "(1 2", "abc", "(1 5)(5 2)", "[2,3]"})
    EXPECT_ANY_THROW(parse_permutation(bad)) << bad;
  EXPECT_THROW(parse_permutation("(1 3)", 2), ParseError);
}

TEST(Parse, ChordDiagrams) {
  EXPECT_EQ(parse_chord_diagram("1-3,2-4"), make_kn(2));
  EXPECT_EQ(parse_chord_diagram("K5"), make_kn(5));
  for (const char* bad : {"1-2,2-3", "1-3", "K0", "1-", "x"})
    EXPECT_ANY_THROW(parse_chord_diagram(bad)) << bad;
}
