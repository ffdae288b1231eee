#include "necklaces/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "necklaces/errors.hpp"

namespace necklaces {
namespace {

void require_positive(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive integers");
}

void require_nonempty(const ContentVector& content) {
  if (content.total() < 1) throw std::invalid_argument("content vector must have a positive total");
}

// Prenecklace extension (Fredricksen-Kessler-Maiorana recursion) over the
// symbols 0..arity-1. `a` is 1-indexed with a[0] = 0; the rule
// a[t] >= a[t-p] keeps every prefix a prenecklace, and a full-length prefix
// whose period p divides n is a necklace. When `remaining` is non-empty the
// recursion only places symbols that still have multiplicity left, which
// restricts it to a single content class.
class PrenecklaceWalker {
 public:
  PrenecklaceWalker(std::size_t n, int arity, int offset, std::vector<int> remaining,
                    const RepresentativeVisitor& visit)
      : n_(n),
        arity_(arity),
        offset_(offset),
        remaining_(std::move(remaining)),
        a_(n + 1, 0),
        out_(n, 0),
        visit_(visit) {}

  void run() { extend(1, 1); }

 private:
  void extend(std::size_t t, std::size_t p) {
    if (t > n_) {
      if (n_ % p == 0) emit(p);
      return;
    }
    for (int j = a_[t - p]; j < arity_; ++j) {
      if (!remaining_.empty()) {
        if (remaining_[static_cast<std::size_t>(j)] == 0) continue;
        --remaining_[static_cast<std::size_t>(j)];
      }
      a_[t] = j;
      extend(t + 1, j == a_[t - p] ? p : t);
      if (!remaining_.empty()) ++remaining_[static_cast<std::size_t>(j)];
    }
  }

  void emit(std::size_t p) {
    for (std::size_t i = 0; i < n_; ++i) out_[i] = a_[i + 1] + offset_;
    visit_(out_, p);
  }

  std::size_t n_;
  int arity_;
  int offset_;
  std::vector<int> remaining_;
  std::vector<int> a_;
  std::vector<int> out_;
  const RepresentativeVisitor& visit_;
};

// True when rotation `shift` of `s` is lexicographically >= `ref`.
bool rotation_not_below(std::span<const int> s, std::size_t shift, std::span<const int> ref) {
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    const int x = s[(shift + k) % n];
    if (x != ref[k]) return x > ref[k];
  }
  return true;
}

RepresentativeList collect(const std::function<void(const RepresentativeVisitor&)>& source, const Alphabet& alphabet,
                           bool aperiodic_only) {
  RepresentativeList list;
  source([&](std::span<const int> symbols, std::size_t period) {
    if (aperiodic_only && period != symbols.size()) return;
    list.words.emplace_back(std::vector<int>(symbols.begin(), symbols.end()), alphabet);
  });
  return list;
}

Alphabet alphabet_for(const ContentVector& content, int offset) {
  return Alphabet(static_cast<int>(content.length()), offset);
}

// Streams every content class into one flat buffer, then builds the words
// once in sorted order.
RepresentativeList union_over_contents(int n, int m, int offset, bool aperiodic_only,
                                       void (*per_content)(const ContentVector&, int, const RepresentativeVisitor&)) {
  require_positive(n, m);
  const auto len = static_cast<std::size_t>(n);
  std::vector<int> flat;
  for (const auto& content : counting_vectors(n, m)) {
    per_content(content, offset, [&](std::span<const int> symbols, std::size_t period) {
      if (aperiodic_only && period != len) return;
      flat.insert(flat.end(), symbols.begin(), symbols.end());
    });
  }

  std::vector<std::size_t> order(flat.size() / len);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i * len;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(a),
                                        flat.begin() + static_cast<std::ptrdiff_t>(a + len),
                                        flat.begin() + static_cast<std::ptrdiff_t>(b),
                                        flat.begin() + static_cast<std::ptrdiff_t>(b + len));
  });

  const Alphabet alphabet(m, offset);
  RepresentativeList merged;
  merged.words.reserve(order.size());
  for (std::size_t at : order) {
    const auto first = flat.begin() + static_cast<std::ptrdiff_t>(at);
    merged.words.emplace_back(std::vector<int>(first, first + static_cast<std::ptrdiff_t>(len)), alphabet);
  }
  return merged;
}

}  // namespace

std::size_t least_rotation(std::span<const int> s) {
  // Two-candidate minimum-rotation scan: whenever candidates i and j
  // disagree after k matching symbols, every start in the losing block
  // [loser, loser + k] is dominated and can be skipped.
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = s[(i + k) % n];
    const int b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

void for_each_fixed_content_necklace(const ContentVector& content, int offset, const RepresentativeVisitor& visit) {
  require_nonempty(content);
  PrenecklaceWalker walker(static_cast<std::size_t>(content.total()), static_cast<int>(content.length()), offset,
                           std::vector<int>(content.parts().begin(), content.parts().end()), visit);
  walker.run();
}

void for_each_fixed_content_bracelet(const ContentVector& content, int offset, const RepresentativeVisitor& visit) {
  std::vector<int> reversed;
  for_each_fixed_content_necklace(content, offset, [&](std::span<const int> symbols, std::size_t period) {
    // A necklace representative r is a bracelet representative iff r is not
    // above the least rotation of its reversal.
    reversed.assign(symbols.rbegin(), symbols.rend());
    if (rotation_not_below(reversed, least_rotation(reversed), symbols)) visit(symbols, period);
  });
}

void for_each_necklace(int n, int m, int offset, const RepresentativeVisitor& visit) {
  require_positive(n, m);
  PrenecklaceWalker walker(static_cast<std::size_t>(n), m, offset, {}, visit);
  walker.run();
}

RepresentativeList fixed_content_necklaces(const ContentVector& content, int offset) {
  return collect([&](const RepresentativeVisitor& v) { for_each_fixed_content_necklace(content, offset, v); },
                 alphabet_for(content, offset), false);
}

RepresentativeList fixed_content_bracelets(const ContentVector& content, int offset) {
  return collect([&](const RepresentativeVisitor& v) { for_each_fixed_content_bracelet(content, offset, v); },
                 alphabet_for(content, offset), false);
}

RepresentativeList fixed_content_lyndon_words(const ContentVector& content, int offset) {
  return collect([&](const RepresentativeVisitor& v) { for_each_fixed_content_necklace(content, offset, v); },
                 alphabet_for(content, offset), true);
}

RepresentativeList all_necklaces(int n, int m, int offset) {
  return union_over_contents(n, m, offset, false, &for_each_fixed_content_necklace);
}

RepresentativeList all_bracelets(int n, int m, int offset) {
  return union_over_contents(n, m, offset, false, &for_each_fixed_content_bracelet);
}

RepresentativeList lyndon_words(int n, int m, int offset) {
  return union_over_contents(n, m, offset, true, &for_each_fixed_content_necklace);
}

RepresentativeList generate(const GenerationRequest& request) {
  if (const auto* fixed = std::get_if<FixedContent>(&request.scope)) {
    switch (request.mode) {
      case GenerationMode::necklace: return fixed_content_necklaces(fixed->content, request.offset);
      case GenerationMode::bracelet: return fixed_content_bracelets(fixed->content, request.offset);
      case GenerationMode::lyndon: return fixed_content_lyndon_words(fixed->content, request.offset);
    }
  }
  const auto& all = std::get<AllWords>(request.scope);
  switch (request.mode) {
    case GenerationMode::necklace: return all_necklaces(all.length, all.arity, request.offset);
    case GenerationMode::bracelet: return all_bracelets(all.length, all.arity, request.offset);
    case GenerationMode::lyndon: return lyndon_words(all.length, all.arity, request.offset);
  }
  throw std::invalid_argument("unknown generation mode");
}

RepresentativeList oracle_fixed_content(const ContentVector& content, int offset, OrbitKind kind,
                                        std::uint64_t limit) {
  require_nonempty(content);
  std::vector<int> values;
  for (std::size_t j = 0; j < content.length(); ++j) values.insert(values.end(), static_cast<std::size_t>(content[j]), offset + static_cast<int>(j));

  std::uint64_t permutations = 0;
  try {
    permutations = multiset_permutation_count(values);
  } catch (const OverflowError&) {
    permutations = UINT64_MAX;
  }
  if (permutations > limit) {
    std::ostringstream msg;
    msg << "oracle enumeration of content " << content.str() << " needs " << permutations
        << " permutations, above the limit of " << limit;
    throw ResourceLimitError(msg.str());
  }

  const Alphabet alphabet = alphabet_for(content, offset);
  RepresentativeList list;
  for_each_multiset_permutation(values, [&](std::span<const int> p) {
    Word w(std::vector<int>(p.begin(), p.end()), alphabet);
    if (is_canonical(w, kind)) list.words.push_back(std::move(w));
  });
  return list;
}

RepresentativeList oracle_all(int n, int m, int offset, OrbitKind kind, std::uint64_t limit) {
  require_positive(n, m);
  RepresentativeList merged;
  for (const auto& content : counting_vectors(n, m)) {
    auto part = oracle_fixed_content(content, offset, kind, limit);
    merged.words.insert(merged.words.end(), std::make_move_iterator(part.words.begin()),
                        std::make_move_iterator(part.words.end()));
  }
  std::sort(merged.words.begin(), merged.words.end());
  return merged;
}

}  // namespace necklaces
