#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "necklaces/words.hpp"

namespace necklaces {

struct Block {
  std::size_t begin;
  std::size_t length;
};

/// A de Bruijn sequence of order n, kept together with the boundaries of the
/// aperiodic prefixes it was concatenated from.
class DeBruijnSequence {
 public:
  DeBruijnSequence(std::vector<int> symbols, int order, Alphabet alphabet, std::vector<Block> blocks);

  const std::vector<int>& symbols() const noexcept { return symbols_; }
  int order() const noexcept { return order_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return symbols_.size(); }

  Word word() const { return Word(symbols_, alphabet_); }
  Word block_word(std::size_t i) const;

 private:
  std::vector<int> symbols_;
  int order_;
  Alphabet alphabet_;
  std::vector<Block> blocks_;
};

inline constexpr std::uint64_t kDefaultMaxSequenceLength = std::uint64_t{1} << 26;

// Concatenates the aperiodic prefixes of the length-n necklace
// representatives in ascending order, giving the lexicographically least
// de Bruijn sequence. Throws ResourceLimitError if m^n > max_length.
DeBruijnSequence build_de_bruijn(int n, int m, int offset, std::uint64_t max_length = kDefaultMaxSequenceLength);

// Symbols as decimal integers. Without a separator every symbol must be a
// single digit 0-9 (std::invalid_argument otherwise); with one, blocks are
// joined by it.
std::string render(const DeBruijnSequence& seq, std::optional<char> separator = std::nullopt);

// The sequence extended by its first n-1 symbols, cut into its m^n
// consecutive length-n windows.
std::vector<Word> circular_windows(const DeBruijnSequence& seq);
std::vector<Word> circular_windows(const Word& cyclic, int n);

struct Verification {
  bool ok = false;
  std::string diagnostic;
  std::optional<Word> duplicated;  // first window seen twice, by position
  std::optional<Word> missing;     // smallest window never seen
};

// The candidate's alphabet defines m.
Verification verify_de_bruijn(const Word& candidate, int n);

}  // namespace necklaces
