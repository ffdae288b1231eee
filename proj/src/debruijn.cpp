#include "necklaces/debruijn.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "necklaces/errors.hpp"
#include "necklaces/generators.hpp"

namespace necklaces {
namespace {

// m^n, or nullopt if it exceeds `cap`.
std::optional<std::uint64_t> bounded_power(int m, int n, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 0; i < n; ++i) {
    if (value > cap / static_cast<std::uint64_t>(m)) return std::nullopt;
    value *= static_cast<std::uint64_t>(m);
  }
  return value <= cap ? std::optional(value) : std::nullopt;
}

}  // namespace

DeBruijnSequence::DeBruijnSequence(std::vector<int> symbols, int order, Alphabet alphabet, std::vector<Block> blocks)
    : symbols_(std::move(symbols)), order_(order), alphabet_(alphabet), blocks_(std::move(blocks)) {
  std::size_t next = 0;
  for (const auto& b : blocks_) {
    if (b.begin != next || b.length == 0) throw std::invalid_argument("blocks must tile the sequence in order");
    next += b.length;
  }
  if (next != symbols_.size()) throw std::invalid_argument("blocks must cover the whole sequence");
}

Word DeBruijnSequence::block_word(std::size_t i) const {
  const Block& b = blocks_.at(i);
  const auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(b.begin);
  return Word(std::vector<int>(first, first + static_cast<std::ptrdiff_t>(b.length)), alphabet_);
}

DeBruijnSequence build_de_bruijn(int n, int m, int offset, std::uint64_t max_length) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive integers");
  const auto length = bounded_power(m, n, max_length);
  if (!length) {
    std::ostringstream msg;
    msg << "a de Bruijn sequence for n=" << n << ", m=" << m << " exceeds the limit of " << max_length
        << " symbols";
    throw ResourceLimitError(msg.str());
  }

  std::vector<int> symbols;
  symbols.reserve(*length);
  std::vector<Block> blocks;
  for_each_necklace(n, m, offset, [&](std::span<const int> rep, std::size_t period) {
    blocks.push_back(Block{symbols.size(), period});
    symbols.insert(symbols.end(), rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(period));
  });
  return DeBruijnSequence(std::move(symbols), n, Alphabet(m, offset), std::move(blocks));
}

std::string render(const DeBruijnSequence& seq, std::optional<char> separator) {
  std::string out;
  if (!separator) {
    out.reserve(seq.size());
    for (int s : seq.symbols()) {
      if (s < 0 || s > 9) {
        throw std::invalid_argument("symbols outside 0-9 cannot be rendered without a separator");
      }
      out += static_cast<char>('0' + s);
    }
    return out;
  }
  for (std::size_t i = 0; i < seq.blocks().size(); ++i) {
    if (i > 0) out += *separator;
    const Block& b = seq.blocks()[i];
    for (std::size_t k = b.begin; k < b.begin + b.length; ++k) out += std::to_string(seq.symbols()[k]);
  }
  return out;
}

std::vector<Word> circular_windows(const Word& cyclic, int n) {
  if (n < 1) throw std::invalid_argument("window length must be a positive integer");
  const auto s = cyclic.symbols();
  // The first n-1 symbols appended at the end (cycled again if n-1 exceeds
  // the length) close the sequence into a circle.
  std::vector<int> extended(s.begin(), s.end());
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) extended.push_back(s[i % s.size()]);

  std::vector<Word> windows;
  windows.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto first = extended.begin() + static_cast<std::ptrdiff_t>(i);
    windows.emplace_back(std::vector<int>(first, first + n), cyclic.alphabet());
  }
  return windows;
}

std::vector<Word> circular_windows(const DeBruijnSequence& seq) { return circular_windows(seq.word(), seq.order()); }

Verification verify_de_bruijn(const Word& candidate, int n) {
  if (n < 1) throw std::invalid_argument("order must be a positive integer");
  const Alphabet& alphabet = candidate.alphabet();
  const int m = alphabet.arity();
  Verification result;
  std::ostringstream diag;

  // Windows are keyed by their base-m value, so m^n must fit in 64 bits.
  const auto expected = bounded_power(m, n, UINT64_MAX);
  if (!expected) {
    diag << "m^n for m=" << m << ", n=" << n << " exceeds 64 bits; the candidate cannot cover every window";
    result.diagnostic = diag.str();
    return result;
  }

  const auto s = candidate.symbols();
  const std::size_t len = s.size();
  const auto key_of = [&](std::size_t start) {
    std::uint64_t key = 0;
    for (int k = 0; k < n; ++k) key = key * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(s[(start + static_cast<std::size_t>(k)) % len] - alphabet.offset());
    return key;
  };
  const auto word_of = [&](std::uint64_t key) {
    std::vector<int> symbols(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      symbols[static_cast<std::size_t>(k)] = static_cast<int>(key % static_cast<std::uint64_t>(m)) + alphabet.offset();
      key /= static_cast<std::uint64_t>(m);
    }
    return Word(std::move(symbols), alphabet);
  };

  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  for (std::size_t i = 0; i < len; ++i) {
    const auto key = key_of(i);
    auto [it, inserted] = first_seen.emplace(key, i);
    if (!inserted && !result.duplicated) {
      result.duplicated = word_of(key);
      diag << "window " << result.duplicated->str() << " occurs at positions " << it->second << " and " << i << "; ";
    }
  }
  if (first_seen.size() < *expected) {
    for (std::uint64_t key = 0; key < *expected; ++key) {
      if (!first_seen.contains(key)) {
        result.missing = word_of(key);
        diag << "window " << result.missing->str() << " never occurs; ";
        break;
      }
    }
  }
  if (len != *expected) diag << "length " << len << " differs from m^n = " << *expected << "; ";

  result.ok = len == *expected && !result.duplicated && !result.missing;
  if (result.ok) {
    diag << "all " << *expected << " windows of length " << n << " occur exactly once";
  }
  result.diagnostic = diag.str();
  if (!result.ok && result.diagnostic.size() >= 2) result.diagnostic.resize(result.diagnostic.size() - 2);
  return result;
}

}  // namespace necklaces
