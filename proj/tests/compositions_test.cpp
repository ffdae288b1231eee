#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "necklaces/compositions.hpp"
#include "necklaces/errors.hpp"
#include "oracles.hpp"

namespace {

using namespace necklaces;
using Rows = std::vector<std::vector<int>>;

std::set<std::vector<int>> as_set(const Rows& rows) { return {rows.begin(), rows.end()}; }

TEST(MultisetPermutations, KnownListings) {
  const std::vector<int> a{1, 0, 1, 1};
  EXPECT_EQ(as_set(multiset_permutations(a)), (std::set<std::vector<int>>{{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}}));
  EXPECT_EQ(multiset_permutations(a).size(), 4u);

  const std::vector<int> b{0, 1, 2};
  EXPECT_EQ(multiset_permutations(b),
            (Rows{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}));
}

TEST(MultisetPermutations, SingleElementAndEmpty) {
  const std::vector<int> one{7};
  EXPECT_EQ(multiset_permutations(one), (Rows{{7}}));
  EXPECT_THROW(multiset_permutations(std::vector<int>{}), std::invalid_argument);
}

TEST(MultisetPermutations, CountMatchesMultinomialAndOutputsAreDistinctPermutations) {
  const std::vector<std::vector<int>> inputs{{0, 0, 1, 1, 2}, {3, 3, 3}, {2, 0, 1, 0, 2, 1, 1}, {5, 4, 3, 2, 1, 0}};
  for (const auto& in : inputs) {
    const auto rows = multiset_permutations(in);
    EXPECT_EQ(rows.size(), multiset_permutation_count(in));
    EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end()));
    EXPECT_EQ(as_set(rows).size(), rows.size());
    auto sorted_in = in;
    std::sort(sorted_in.begin(), sorted_in.end());
    for (auto r : rows) {
      std::sort(r.begin(), r.end());
      EXPECT_EQ(r, sorted_in);
    }
  }
  EXPECT_EQ(multiset_permutation_count(std::vector<int>{0, 0, 1, 1, 2}), 30u);  // 5!/(2!2!1!)
}

TEST(MultisetPermutations, CountOverflowIsReported) {
  std::vector<int> big(30);
  for (int i = 0; i < 30; ++i) big[static_cast<std::size_t>(i)] = i;
  EXPECT_THROW(multiset_permutation_count(big), OverflowError);
}

std::vector<std::string> compat_rows(const std::vector<MultiIndexComposition>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) {
    std::string row;
    for (const auto& t : c.terms) row += t.str();
    out.push_back(row);
  }
  return out;
}

TEST(MultiIndexCompositions, KnownListingAsSet) {
  const auto comps = multi_index_compositions(ContentVector({1, 0, 1}), 2);
  const auto rows = compat_rows(comps);
  EXPECT_EQ(std::set<std::string>(rows.begin(), rows.end()),
            (std::set<std::string>{"(0,0,1)(1,0,0)", "(1,0,0)(0,0,1)", "(1,0,1)(0,0,0)", "(0,0,0)(1,0,1)"}));
  // Documented order: lexicographic by flattened terms.
  EXPECT_EQ(rows, (std::vector<std::string>{"(0,0,0)(1,0,1)", "(0,0,1)(1,0,0)", "(1,0,0)(0,0,1)", "(1,0,1)(0,0,0)"}));
}

TEST(MultiIndexCompositions, SingleTermAndErrors) {
  const auto comps = multi_index_compositions(ContentVector({1, 0, 1}), 1);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].terms[0], ContentVector({1, 0, 1}));
  EXPECT_THROW(multi_index_compositions(ContentVector({1, 0, 1}), 0), std::invalid_argument);
  EXPECT_THROW(ContentVector({1, -1}), std::invalid_argument);
  EXPECT_THROW(ContentVector({}), std::invalid_argument);
}

// Brute force: all n-tuples of vectors in the box [0, target] summing to target.
std::set<MultiIndexComposition> brute_compositions(const std::vector<int>& target, int n) {
  std::vector<std::vector<int>> box;
  {
    std::vector<int> v(target.size(), 0);
    while (true) {
      box.push_back(v);
      std::size_t i = 0;
      while (i < v.size() && v[i] == target[i]) v[i++] = 0;
      if (i == v.size()) break;
      ++v[i];
    }
  }
  std::set<MultiIndexComposition> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> sum(target.size(), 0);
    for (auto p : pick) {
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += box[p][j];
    }
    if (sum == target) {
      MultiIndexComposition c;
      for (auto p : pick) c.terms.emplace_back(box[p]);
      out.insert(c);
    }
    std::size_t i = 0;
    while (i < pick.size() && pick[i] + 1 == box.size()) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  return out;
}

TEST(MultiIndexCompositions, AgreesWithBruteForceAndProductFormula) {
  const std::vector<std::vector<int>> targets{{1, 0, 1}, {2, 1}, {3}, {1, 1, 1}, {0, 2, 0, 1}, {2, 2, 2}, {4, 2}, {0}};
  for (const auto& target : targets) {
    for (int n = 1; n <= 4; ++n) {
      const auto comps = multi_index_compositions(ContentVector(target), n);
      const auto brute = brute_compositions(target, n);
      EXPECT_EQ(std::set<MultiIndexComposition>(comps.begin(), comps.end()), brute);
      EXPECT_TRUE(std::is_sorted(comps.begin(), comps.end()));
      std::uint64_t expected = 1;
      for (int i : target) expected *= oracle::binomial(static_cast<std::uint64_t>(i + n - 1), static_cast<std::uint64_t>(n - 1));
      EXPECT_EQ(comps.size(), expected);
      for (const auto& c : comps) {
        EXPECT_EQ(c.terms.size(), static_cast<std::size_t>(n));
        EXPECT_EQ(c.sum(), ContentVector(target));
      }
    }
  }
  // Brute-force count for (1,0,1) in 2 terms: 2 * 1 * 2.
  EXPECT_EQ(multi_index_compositions(ContentVector({1, 0, 1}), 2).size(), 4u);
}

TEST(CountingVectors, KnownListing) {
  const auto vs = counting_vectors(4, 2);
  std::set<ContentVector> got(vs.begin(), vs.end());
  EXPECT_EQ(got, (std::set<ContentVector>{ContentVector({2, 2}), ContentVector({1, 3}), ContentVector({3, 1}),
                                          ContentVector({4, 0}), ContentVector({0, 4})}));
  EXPECT_EQ(vs.size(), 5u);
  EXPECT_EQ(counting_vectors(3, 1), (std::vector<ContentVector>{ContentVector({3})}));
}

TEST(CountingVectors, RejectsInvalidArguments) {
  EXPECT_THROW(counting_vectors(0, 2), std::invalid_argument);
  EXPECT_THROW(counting_vectors(3, 0), std::invalid_argument);
}

TEST(CountingVectors, GridFilterAndCompositionAgreement) {
  for (int n = 1; n <= 7; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const auto vs = counting_vectors(n, m);
      EXPECT_EQ(vs.size(), oracle::binomial(static_cast<std::uint64_t>(n + m - 1), static_cast<std::uint64_t>(m - 1)));
      // Filter of the (n+1)^m grid.
      std::set<ContentVector> grid;
      for (const auto& w : oracle::all_words(m, n + 1)) {
        int s = 0;
        for (int x : w) s += x;
        if (s == n) grid.insert(ContentVector(w));
      }
      EXPECT_EQ(std::set<ContentVector>(vs.begin(), vs.end()), grid);
      // Same list, in the same order, as compositions of the 1-part index (n).
      const auto comps = multi_index_compositions(ContentVector({n}), m);
      ASSERT_EQ(comps.size(), vs.size());
      for (std::size_t k = 0; k < vs.size(); ++k) {
        std::vector<int> parts;
        for (const auto& t : comps[k].terms) parts.push_back(t[0]);
        EXPECT_EQ(ContentVector(parts), vs[k]);
      }
    }
  }
}

}  // namespace
