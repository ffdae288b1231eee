#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// generation or canonicalization code it is compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Symbols = std::vector<int>;

// Every word of length n over {offset, ..., offset+m-1}, ascending.
inline std::vector<Symbols> all_words(int n, int m, int offset = 0) {
  std::vector<Symbols> out;
  Symbols w(static_cast<std::size_t>(n), 0);
  while (true) {
    Symbols shifted(w);
    for (int& s : shifted) s += offset;
    out.push_back(shifted);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == m - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::set<Symbols> rotations(const Symbols& w) {
  std::set<Symbols> out;
  Symbols r = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.insert(r);
    r.push_back(r.front());
    r.erase(r.begin());
  }
  return out;
}

inline std::set<Symbols> dihedral(const Symbols& w) {
  auto out = rotations(w);
  auto mirrored = rotations(Symbols(w.rbegin(), w.rend()));
  out.insert(mirrored.begin(), mirrored.end());
  return out;
}

inline Symbols necklace_min(const Symbols& w) { return *rotations(w).begin(); }
inline Symbols bracelet_min(const Symbols& w) { return *dihedral(w).begin(); }

// Sorted distinct class minima over all m^n words, optionally restricted to
// aperiodic classes (orbit size n).
inline std::vector<Symbols> class_minima(int n, int m, int offset, bool dihedral_action, bool aperiodic_only = false) {
  std::set<Symbols> reps;
  for (const auto& w : all_words(n, m, offset)) {
    if (aperiodic_only && rotations(w).size() != static_cast<std::size_t>(n)) continue;
    reps.insert(dihedral_action ? bracelet_min(w) : necklace_min(w));
  }
  return {reps.begin(), reps.end()};
}

inline std::vector<Symbols> class_minima_with_content(const std::vector<int>& content, int offset, bool dihedral_action) {
  int n = 0;
  for (int c : content) n += c;
  std::set<Symbols> reps;
  for (const auto& w : all_words(n, static_cast<int>(content.size()), offset)) {
    std::vector<int> seen(content.size(), 0);
    for (int s : w) ++seen[static_cast<std::size_t>(s - offset)];
    if (seen != content) continue;
    reps.insert(dihedral_action ? bracelet_min(w) : necklace_min(w));
  }
  return {reps.begin(), reps.end()};
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographically least linear string whose circular windows of length n
// over {0..m-1} are all distinct and cover every word: depth-first search
// trying symbols in ascending order, so the first hit is the minimum.
inline Symbols least_de_bruijn_by_search(int n, int m) {
  const std::size_t total = ipow(static_cast<std::uint64_t>(m), n);
  Symbols s;
  std::set<Symbols> used;
  std::function<bool()> dfs = [&]() -> bool {
    if (s.size() == total) {
      std::set<Symbols> windows;
      for (std::size_t i = 0; i < total; ++i) {
        Symbols w;
        for (int k = 0; k < n; ++k) w.push_back(s[(i + static_cast<std::size_t>(k)) % total]);
        windows.insert(w);
      }
      return windows.size() == total;
    }
    for (int x = 0; x < m; ++x) {
      s.push_back(x);
      bool ok = true;
      Symbols window;
      if (s.size() >= static_cast<std::size_t>(n)) {
        window.assign(s.end() - n, s.end());
        ok = used.insert(window).second;
      }
      if (ok && dfs()) return true;
      if (ok && !window.empty()) used.erase(window);
      s.pop_back();
    }
    return false;
  };
  dfs();
  return s;
}

inline std::string digits(const Symbols& w) {
  std::string out;
  for (int s : w) out += std::to_string(s);
  return out;
}

}  // namespace oracle
