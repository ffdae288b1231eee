#include "necklaces/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace necklaces {

Alphabet::Alphabet(int arity, int offset) : arity_(arity), offset_(offset) {
  if (arity < 1) throw std::invalid_argument("alphabet arity must be a positive integer");
}

Alphabet Alphabet::covering(std::span<const int> symbols) {
  if (symbols.empty()) throw std::invalid_argument("cannot infer an alphabet from no symbols");
  auto [lo, hi] = std::minmax_element(symbols.begin(), symbols.end());
  return Alphabet(*hi - *lo + 1, *lo);
}

Word::Word(std::vector<int> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (symbols_.empty()) throw std::invalid_argument("a word must contain at least one symbol");
  for (int s : symbols_) {
    if (!alphabet_.contains(s)) {
      std::ostringstream msg;
      msg << "symbol " << s << " is outside the alphabet {" << alphabet_.first() << ".."
          << alphabet_.last() << "}";
      throw std::invalid_argument(msg.str());
    }
  }
}

std::string Word::str() const {
  const bool digits = std::all_of(symbols_.begin(), symbols_.end(), [](int s) { return s >= 0 && s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                      b.symbols_.begin(), b.symbols_.end());
      c != 0) {
    return c;
  }
  return a.alphabet_ <=> b.alphabet_;
}

Orbit::Orbit(OrbitKind kind, std::vector<Word> members) : kind_(kind), members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("an orbit has at least one member");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Orbit::contains(const Word& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

Word rotate(const Word& w, long long j) {
  const auto n = static_cast<long long>(w.size());
  const auto shift = static_cast<std::size_t>(((j % n) + n) % n);
  std::vector<int> out(w.symbols().begin(), w.symbols().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift), out.end());
  return Word(std::move(out), w.alphabet());
}

Word reflect(const Word& w) {
  std::vector<int> out(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(out), w.alphabet());
}

namespace {

void append_rotations(const Word& w, std::vector<Word>& out) {
  for (std::size_t j = 0; j < w.size(); ++j) out.push_back(rotate(w, static_cast<long long>(j)));
}

}  // namespace

Orbit rotation_orbit(const Word& w) {
  std::vector<Word> members;
  append_rotations(w, members);
  return Orbit(OrbitKind::rotation, std::move(members));
}

Orbit dihedral_orbit(const Word& w) {
  std::vector<Word> members;
  append_rotations(w, members);
  append_rotations(reflect(w), members);
  return Orbit(OrbitKind::dihedral, std::move(members));
}

Orbit orbit(const Word& w, OrbitKind kind) {
  return kind == OrbitKind::rotation ? rotation_orbit(w) : dihedral_orbit(w);
}

namespace {

// Index of the lexicographically least rotation, by direct comparison of
// every rotation against the current best. Quadratic; this is the reference
// definition other code is tested against.
std::size_t least_rotation_scan(std::span<const int> s) {
  const std::size_t n = s.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const int a = s[(i + k) % n];
      const int b = s[(best + k) % n];
      if (a != b) {
        if (a < b) best = i;
        break;
      }
    }
  }
  return best;
}

}  // namespace

Word canonical(const Word& w, OrbitKind kind) {
  Word best = rotate(w, static_cast<long long>(least_rotation_scan(w.symbols())));
  if (kind == OrbitKind::dihedral) {
    const Word r = reflect(w);
    Word mirrored = rotate(r, static_cast<long long>(least_rotation_scan(r.symbols())));
    if (mirrored < best) best = std::move(mirrored);
  }
  return best;
}

bool is_canonical(const Word& w, OrbitKind kind) { return canonical(w, kind) == w; }

Periodicity periodicity(const Word& w) {
  const auto s = w.symbols();
  const std::size_t n = s.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = s[i] == s[i - p];
    if (repeats) {
      return Periodicity{Word(std::vector<int>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p)),
                              w.alphabet()),
                         n / p};
    }
  }
  return Periodicity{w, 1};  // unreachable: p = n always repeats
}

const char* to_string(OrbitKind kind) noexcept {
  return kind == OrbitKind::rotation ? "necklace" : "bracelet";
}

}  // namespace necklaces
