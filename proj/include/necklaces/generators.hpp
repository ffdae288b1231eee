#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "necklaces/compositions.hpp"
#include "necklaces/words.hpp"

namespace necklaces {

/// Canonical representatives, sorted ascending, with their count.
struct RepresentativeList {
  std::vector<Word> words;

  std::size_t count() const noexcept { return words.size(); }
};

enum class GenerationMode { necklace, bracelet, lyndon };

struct FixedContent {
  ContentVector content;
};

struct AllWords {
  int length;
  int arity;
};

struct GenerationRequest {
  GenerationMode mode;
  std::variant<FixedContent, AllWords> scope;
  int offset = 1;
};

// Receives a representative's symbols and the length of its aperiodic prefix
// (which equals its rotation-orbit size). The span is only valid during the
// call.
using RepresentativeVisitor = std::function<void(std::span<const int> symbols, std::size_t period)>;

/// Streaming generation.
///
/// The fixed-content visitors extend prenecklaces one symbol at a time while
/// tracking the remaining multiplicities, so only canonical words are ever
/// built. Output order is ascending lexicographic within one call.
void for_each_fixed_content_necklace(const ContentVector& content, int offset, const RepresentativeVisitor& visit);
void for_each_fixed_content_bracelet(const ContentVector& content, int offset, const RepresentativeVisitor& visit);
// Every necklace of length n over m symbols, ascending.
void for_each_necklace(int n, int m, int offset, const RepresentativeVisitor& visit);

RepresentativeList fixed_content_necklaces(const ContentVector& content, int offset);
RepresentativeList fixed_content_bracelets(const ContentVector& content, int offset);
RepresentativeList fixed_content_lyndon_words(const ContentVector& content, int offset);

// Disjoint union of the fixed-content classes over counting_vectors(n, m).
RepresentativeList all_necklaces(int n, int m, int offset);
RepresentativeList all_bracelets(int n, int m, int offset);
RepresentativeList lyndon_words(int n, int m, int offset);

RepresentativeList generate(const GenerationRequest& request);

// Index of the lexicographically least rotation of `symbols` in linear time.
std::size_t least_rotation(std::span<const int> symbols);

/// Reference path: enumerate every multiset permutation of the content and
/// keep the ones that are their own canonical form. Guarded by `limit` on the
/// number of permutations (ResourceLimitError when exceeded).
inline constexpr std::uint64_t kDefaultOracleLimit = 10'000'000;

RepresentativeList oracle_fixed_content(const ContentVector& content, int offset, OrbitKind kind,
                                        std::uint64_t limit = kDefaultOracleLimit);
RepresentativeList oracle_all(int n, int m, int offset, OrbitKind kind, std::uint64_t limit = kDefaultOracleLimit);

}  // namespace necklaces
