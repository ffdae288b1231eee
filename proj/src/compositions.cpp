#include "necklaces/compositions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "necklaces/errors.hpp"

namespace necklaces {

ContentVector::ContentVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a content vector needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("content vector parts must be non-negative");
    total_ += p;
  }
}

std::string ContentVector::str() const {
  std::string out = "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(parts_[j]);
  }
  return out + ")";
}

ContentVector MultiIndexComposition::sum() const {
  if (terms.empty()) throw std::invalid_argument("empty composition");
  std::vector<int> acc(terms.front().length(), 0);
  for (const auto& t : terms) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += t[j];
  }
  return ContentVector(std::move(acc));
}

std::uint64_t multiset_permutation_count(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("multiset permutations need a non-empty input");
  std::map<int, std::uint64_t> multiplicity;
  for (int v : values) ++multiplicity[v];

  // Product of binomials C(c_1 + ... + c_k, c_k); each partial product is an
  // exact integer, so dividing after every multiplication stays exact.
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (const auto& [value, count] : multiplicity) {
    for (std::uint64_t i = 1; i <= count; ++i) {
      ++placed;
      // result * placed is divisible by i, and gcd(placed/g, i/g) = 1, so
      // i/g divides result.
      const std::uint64_t g = std::gcd(placed, i);
      const std::uint64_t factor = placed / g;
      const std::uint64_t reduced = result / (i / g);
      if (reduced > UINT64_MAX / factor) throw OverflowError("multiset permutation count exceeds 64 bits");
      result = reduced * factor;
    }
  }
  return result;
}

void for_each_multiset_permutation(std::span<const int> values,
                                   const std::function<void(std::span<const int>)>& visit) {
  if (values.empty()) throw std::invalid_argument("multiset permutations need a non-empty input");
  std::vector<int> current(values.begin(), values.end());
  std::sort(current.begin(), current.end());
  do {
    visit(current);
  } while (std::next_permutation(current.begin(), current.end()));
}

std::vector<std::vector<int>> multiset_permutations(std::span<const int> values) {
  std::vector<std::vector<int>> out;
  out.reserve(multiset_permutation_count(values));
  for_each_multiset_permutation(values, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

namespace {

struct CompositionBuilder {
  std::size_t terms;
  std::vector<int> remaining;
  std::vector<ContentVector> prefix;
  std::vector<MultiIndexComposition>& out;

  void place(std::size_t term) {
    if (term + 1 == terms) {
      prefix.emplace_back(remaining);
      out.push_back(MultiIndexComposition{prefix});
      prefix.pop_back();
      return;
    }
    std::vector<int> v(remaining.size(), 0);
    choose(term, v, 0);
  }

  // Odometer over 0 <= v_j <= remaining_j, first component most significant.
  void choose(std::size_t term, std::vector<int>& v, std::size_t j) {
    if (j == v.size()) {
      for (std::size_t k = 0; k < v.size(); ++k) remaining[k] -= v[k];
      prefix.emplace_back(v);
      place(term + 1);
      prefix.pop_back();
      for (std::size_t k = 0; k < v.size(); ++k) remaining[k] += v[k];
      return;
    }
    const int limit = remaining[j];
    for (int x = 0; x <= limit; ++x) {
      v[j] = x;
      choose(term, v, j + 1);
    }
    v[j] = 0;
  }
};

}  // namespace

std::vector<MultiIndexComposition> multi_index_compositions(const ContentVector& target, int terms) {
  if (terms < 1) throw std::invalid_argument("the number of terms must be a positive integer");
  std::vector<MultiIndexComposition> out;
  CompositionBuilder builder{static_cast<std::size_t>(terms),
                             std::vector<int>(target.parts().begin(), target.parts().end()),
                             {},
                             out};
  builder.place(0);
  return out;
}

namespace {

void stars_and_bars(int remaining, std::size_t slot, std::vector<int>& parts, std::vector<ContentVector>& out) {
  if (slot + 1 == parts.size()) {
    parts[slot] = remaining;
    out.emplace_back(parts);
    return;
  }
  for (int x = 0; x <= remaining; ++x) {
    parts[slot] = x;
    stars_and_bars(remaining - x, slot + 1, parts, out);
  }
}

}  // namespace

std::vector<ContentVector> counting_vectors(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive integers");
  std::vector<ContentVector> out;
  std::vector<int> parts(static_cast<std::size_t>(m), 0);
  stars_and_bars(n, 0, parts, out);
  return out;
}

}  // namespace necklaces
