#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace necklaces {

/// The symbol set {offset, offset + 1, ..., offset + arity - 1}.
class Alphabet {
 public:
  Alphabet(int arity, int offset);

  int arity() const noexcept { return arity_; }
  int offset() const noexcept { return offset_; }
  int first() const noexcept { return offset_; }
  int last() const noexcept { return offset_ + arity_ - 1; }
  bool contains(int symbol) const noexcept { return symbol >= first() && symbol <= last(); }

  // Smallest alphabet starting at min(symbols) that covers every symbol.
  static Alphabet covering(std::span<const int> symbols);

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  int arity_;
  int offset_;
};

/// A non-empty, fixed-length string over an Alphabet.
///
/// Symbols are validated once at construction; every operation below can
/// therefore assume in-range values. Ordering is lexicographic on the symbol
/// values, with the alphabet as a tie-breaker so that <=> agrees with ==.
class Word {
 public:
  Word(std::vector<int> symbols, Alphabet alphabet);

  std::span<const int> symbols() const noexcept { return symbols_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  int operator[](std::size_t i) const { return symbols_[i]; }

  // Symbols written back to back ("001101"), or comma separated when any
  // symbol is not a single decimal digit.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<int> symbols_;
  Alphabet alphabet_;
};

enum class OrbitKind { rotation, dihedral };

/// A full equivalence class under rotations (necklace) or rotations and
/// reflections (bracelet). Members are distinct and sorted ascending.
class Orbit {
 public:
  Orbit(OrbitKind kind, std::vector<Word> members);

  OrbitKind kind() const noexcept { return kind_; }
  const std::vector<Word>& members() const noexcept { return members_; }
  const Word& representative() const noexcept { return members_.front(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Word& w) const;

 private:
  OrbitKind kind_;
  std::vector<Word> members_;
};

/// w = prefix^repetitions with the shortest possible prefix.
struct Periodicity {
  Word prefix;
  std::size_t repetitions;

  bool aperiodic() const noexcept { return repetitions == 1; }
};

// Left cyclic shift applied j times; j is reduced modulo the word length and
// may be negative.
Word rotate(const Word& w, long long j);
Word reflect(const Word& w);

Orbit rotation_orbit(const Word& w);
Orbit dihedral_orbit(const Word& w);
Orbit orbit(const Word& w, OrbitKind kind);

// Lexicographic minimum over the orbit of the given kind.
Word canonical(const Word& w, OrbitKind kind);
bool is_canonical(const Word& w, OrbitKind kind);

Periodicity periodicity(const Word& w);

const char* to_string(OrbitKind kind) noexcept;

}  // namespace necklaces
