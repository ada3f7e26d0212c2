#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "zigzag/permutation.hpp"

using namespace zigzag;

TEST(Perm, ValidatesBijection) {
  EXPECT_NO_THROW(Perm({2, 3, 1}));
  EXPECT_NO_THROW(Perm(std::vector<int>{}));
  EXPECT_THROW(Perm({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Perm({0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Perm({1, 2, 4}), std::invalid_argument);
  EXPECT_EQ(Perm({2, 5, 1, 7, 3, 6, 4}).to_string(), "2 5 1 7 3 6 4");
}

TEST(Perm, Classify) {
  EXPECT_EQ(classify(Perm(std::vector<int>{})), ClassTag::C_even);
  EXPECT_EQ(classify(Perm({1})), ClassTag::S_odd);
  EXPECT_EQ(classify(Perm({1, 3, 2})), ClassTag::S_odd);
  EXPECT_EQ(classify(Perm({1, 2})), ClassTag::C_even);
  EXPECT_EQ(classify(Perm({2, 1})), ClassTag::D_even);
  EXPECT_EQ(classify(Perm({3, 1, 2})), ClassTag::DownUp_odd);
  EXPECT_EQ(classify(Perm({1, 2, 3})), ClassTag::Other);
  EXPECT_TRUE(is_member(Perm(std::vector<int>{}), ClassTag::D_even));
  EXPECT_TRUE(is_member(Perm({1, 3, 2}), ClassTag::Ascending_any));
  EXPECT_FALSE(is_member(Perm({2, 1}), ClassTag::Ascending_any));
}

TEST(Perm, Statistics) {
  const Perm p({2, 5, 1, 7, 3, 6, 4});
  EXPECT_EQ(stat(p, StatVariant::interior_peaks), 3u);
  EXPECT_EQ(stat(p, StatVariant::interior_valleys), 2u);
  EXPECT_EQ(stat(p, StatVariant::peaks_with_final), 3u);
  EXPECT_EQ(stat(p, StatVariant::valleys_with_initial), 3u);
  const Perm q({1, 3, 2, 4});
  EXPECT_EQ(stat(q, StatVariant::peaks_with_final), 2u);
  const std::vector<int> word{10, 40, 20};
  EXPECT_EQ(stat(word, StatVariant::interior_peaks), 1u);
}

TEST(Perm, NameRoundTrip) {
  for (StatVariant v : kAllStatVariants) EXPECT_EQ(parse_stat_variant(to_string(v)), v);
  for (ClassTag t : {ClassTag::S_odd, ClassTag::C_even, ClassTag::D_even, ClassTag::DownUp_odd,
                     ClassTag::Ascending_any, ClassTag::Other}) {
    EXPECT_EQ(parse_class_tag(to_string(t)), t);
  }
  EXPECT_FALSE(parse_stat_variant("bogus"));
}

TEST(Enumeration, SmallExamples) {
  const auto s3 = enumerate_class(ClassTag::S_odd, 3);
  ASSERT_EQ(s3.size(), 2u);
  EXPECT_EQ(s3[0], Perm({1, 3, 2}));
  EXPECT_EQ(s3[1], Perm({2, 3, 1}));
  EXPECT_EQ(count_class(ClassTag::C_even, 0), 1u);
  EXPECT_EQ(count_class(ClassTag::S_odd, 0), 0u);
  EXPECT_EQ(count_class(ClassTag::DownUp_odd, 1), 0u);
}

TEST(Enumeration, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::uint64_t up = oracle::count_zigzag(n, true);
    const std::uint64_t down = oracle::count_zigzag(n, false);
    EXPECT_EQ(count_class(ClassTag::Ascending_any, n), up) << n;
    if (n % 2) {
      EXPECT_EQ(count_class(ClassTag::S_odd, n), up);
      if (n >= 3) EXPECT_EQ(count_class(ClassTag::DownUp_odd, n), down);
    } else {
      EXPECT_EQ(count_class(ClassTag::C_even, n), up);
      EXPECT_EQ(count_class(ClassTag::D_even, n), down);
    }
  }
}

TEST(Enumeration, LexicographicDistinctAndMembers) {
  for (ClassTag tag : {ClassTag::S_odd, ClassTag::D_even, ClassTag::Other}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto all = enumerate_class(tag, n);
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      EXPECT_EQ(std::set<Perm>(all.begin(), all.end()).size(), all.size());
      for (const auto& p : all) EXPECT_TRUE(is_member(p, tag));
    }
  }
}

TEST(Enumeration, ClassesPartitionTheSymmetricGroup) {
  // Size 0 is excluded: the empty permutation sits in both C_even and D_even.
  for (std::size_t n = 1; n <= 7; ++n) {
    std::uint64_t total = count_class(ClassTag::Other, n);
    if (n % 2) {
      total += count_class(ClassTag::S_odd, n) + count_class(ClassTag::DownUp_odd, n);
    } else {
      total += count_class(ClassTag::C_even, n) + count_class(ClassTag::D_even, n);
    }
    EXPECT_EQ(mpz_class(total), oracle::fact(n)) << n;
  }
}

TEST(Enumeration, CapsEnforced) {
  EXPECT_THROW(count_class(ClassTag::S_odd, 13), std::out_of_range);
  EXPECT_THROW(count_class(ClassTag::S_odd, 9, EnumerationCaps{7}), std::out_of_range);
}

TEST(Enumeration, WeightPolynomial) {
  // S_odd of size 2n+1 always has n interior peaks.
  EXPECT_EQ(class_weight_poly(ClassTag::S_odd, 7, StatVariant::interior_peaks),
            WPoly::monomial(Rat(272), 3));
  std::vector<Rat> hist(4, 0);
  oracle::all_perms(6, [&](const std::vector<int>& w) {
    if (oracle::zigzag_from(w, false)) hist[oracle::interior_peaks(w)] += 1;
  });
  EXPECT_EQ(class_weight_poly(ClassTag::D_even, 6, StatVariant::interior_peaks), WPoly(hist));
}

TEST(Standardize, OrderIsomorphic) {
  const std::vector<int> w{40, 10, 30};
  EXPECT_EQ(standardize(w), Perm({3, 1, 2}));
  const std::vector<int> dup{4, 4};
  EXPECT_THROW(standardize(dup), std::invalid_argument);
}
