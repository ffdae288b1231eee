#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace necklaces {

/// Multiplicities (i_1, ..., i_m) of the symbols of an m-letter alphabet.
class ContentVector {
 public:
  explicit ContentVector(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t j) const { return parts_[j]; }
  long long total() const noexcept { return total_; }

  std::string str() const;  // "(2,1,1)"

  friend bool operator==(const ContentVector&, const ContentVector&) = default;
  friend auto operator<=>(const ContentVector& a, const ContentVector& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  long long total_ = 0;
};

/// Ordered terms (v_1, ..., v_n), all of the same length, summing to a target.
struct MultiIndexComposition {
  std::vector<ContentVector> terms;

  ContentVector sum() const;
  friend bool operator==(const MultiIndexComposition&, const MultiIndexComposition&) = default;
  friend auto operator<=>(const MultiIndexComposition& a, const MultiIndexComposition& b) {
    return a.terms <=> b.terms;
  }
};

// n! / (c_1! c_2! ...) for the multiplicity profile of `values`; throws
// OverflowError if the result does not fit in 64 bits.
std::uint64_t multiset_permutation_count(std::span<const int> values);

// Visits every distinct ordering of `values` in ascending lexicographic order.
// Duplicates are never produced, so the visit count equals
// multiset_permutation_count(values).
void for_each_multiset_permutation(std::span<const int> values,
                                   const std::function<void(std::span<const int>)>& visit);

std::vector<std::vector<int>> multiset_permutations(std::span<const int> values);

// Every ordered list of `terms` multi-indexes summing componentwise to
// `target`, in lexicographic order of the flattened terms.
std::vector<MultiIndexComposition> multi_index_compositions(const ContentVector& target, int terms);

// C(n+m-1, m-1) vectors; the same order multi_index_compositions((n), m)
// yields when each length-1 term is read as one part.
std::vector<ContentVector> counting_vectors(int n, int m);

}  // namespace necklaces
