#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "necklaces/compositions.hpp"
#include "necklaces/words.hpp"

namespace necklaces {

enum class FormatKind { compat, lines, json };

struct OutputFormat {
  FormatKind kind = FormatKind::compat;
  bool enumerate = true;  // running "( k )" index in compat mode
};

FormatKind parse_format_kind(std::string_view name);

// "001101" (one digit per symbol) or "0,0,11,2" (comma separated, required
// once any symbol has more than one character). Surrounding whitespace is
// ignored.
std::vector<int> parse_symbols(std::string_view text);
ContentVector parse_content(std::string_view text);

// "[ 0 0 1 1 0 1 ]  ( 1 )", or without the index part when index is empty.
std::string compat_line(std::span<const int> symbols, std::optional<std::size_t> index);
// "[( 0 0 1 )( 1 0 0 )]"
std::string compat_line(const MultiIndexComposition& composition, std::optional<std::size_t> index);

// Compat: one line per item. Lines: the count, then one item per line.
// Json: a {"count": N} object, then one {"word": ..., "index": k} object
// per line.
void write_words(std::ostream& out, const std::vector<Word>& words, const OutputFormat& format);
void write_compositions(std::ostream& out, const std::vector<MultiIndexComposition>& items,
                        const OutputFormat& format);

}  // namespace necklaces
