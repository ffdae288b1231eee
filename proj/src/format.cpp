#include "necklaces/format.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace necklaces {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("cannot parse '" + std::string(whole) + "' as a list of integers");
  }
  return value;
}

std::string text_of(const MultiIndexComposition& c) {
  std::string out;
  for (const auto& t : c.terms) out += t.str();
  return out;
}

nlohmann::json json_of(const MultiIndexComposition& c) {
  auto terms = nlohmann::json::array();
  for (const auto& t : c.terms) terms.push_back(std::vector<int>(t.parts().begin(), t.parts().end()));
  return terms;
}

template <typename Item, typename Compat, typename Text, typename Json>
void write_items(std::ostream& out, const std::vector<Item>& items, const OutputFormat& format, Compat compat,
                 Text text, Json json) {
  switch (format.kind) {
    case FormatKind::compat:
      for (std::size_t i = 0; i < items.size(); ++i) {
        out << compat(items[i], format.enumerate ? std::optional(i + 1) : std::nullopt) << '\n';
      }
      break;
    case FormatKind::lines:
      out << items.size() << '\n';
      for (const auto& item : items) out << text(item) << '\n';
      break;
    case FormatKind::json:
      out << nlohmann::json{{"count", items.size()}}.dump() << '\n';
      for (std::size_t i = 0; i < items.size(); ++i) {
        out << nlohmann::json{{"word", json(items[i])}, {"index", i + 1}}.dump() << '\n';
      }
      break;
  }
}

}  // namespace

FormatKind parse_format_kind(std::string_view name) {
  if (name == "compat") return FormatKind::compat;
  if (name == "lines") return FormatKind::lines;
  if (name == "json") return FormatKind::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::vector<int> parse_symbols(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty word");
  std::vector<int> symbols;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      symbols.push_back(parse_int(body.substr(start, comma - start), body));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return symbols;
  }
  for (char c : body) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("cannot parse '" + std::string(body) +
                                  "': bare words take one digit per symbol; use commas for other symbols");
    }
    symbols.push_back(c - '0');
  }
  return symbols;
}

ContentVector parse_content(std::string_view text) {
  const std::string_view body = trim(text);
  // A single multiplicity such as "12" is one part, not two digits.
  if (body.find(',') == std::string_view::npos) return ContentVector({parse_int(body, body)});
  return ContentVector(parse_symbols(body));
}

std::string compat_line(std::span<const int> symbols, std::optional<std::size_t> index) {
  std::string out = "[";
  for (int s : symbols) out += " " + std::to_string(s);
  out += " ]";
  if (index) out += "  ( " + std::to_string(*index) + " )";
  return out;
}

std::string compat_line(const MultiIndexComposition& composition, std::optional<std::size_t> index) {
  std::string out = "[";
  for (const auto& term : composition.terms) {
    out += "(";
    for (int p : term.parts()) out += " " + std::to_string(p);
    out += " )";
  }
  out += "]";
  if (index) out += "  ( " + std::to_string(*index) + " )";
  return out;
}

void write_words(std::ostream& out, const std::vector<Word>& words, const OutputFormat& format) {
  write_items(
      out, words, format, [](const Word& w, std::optional<std::size_t> i) { return compat_line(w.symbols(), i); },
      [](const Word& w) { return w.str(); },
      [](const Word& w) { return std::vector<int>(w.symbols().begin(), w.symbols().end()); });
}

void write_compositions(std::ostream& out, const std::vector<MultiIndexComposition>& items,
                        const OutputFormat& format) {
  write_items(
      out, items, format,
      [](const MultiIndexComposition& c, std::optional<std::size_t> i) { return compat_line(c, i); }, text_of,
      json_of);
}

}  // namespace necklaces
