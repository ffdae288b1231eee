// Command-line front end: orbit listings, representative generation, counts,
// compositions and de Bruijn sequences.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "necklaces/compositions.hpp"
#include "necklaces/counting.hpp"
#include "necklaces/debruijn.hpp"
#include "necklaces/errors.hpp"
#include "necklaces/format.hpp"
#include "necklaces/generators.hpp"
#include "necklaces/words.hpp"

namespace {

using namespace necklaces;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t env_limit(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(name);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " must be a non-negative integer");
  }
}

OrbitKind parse_kind(const std::string& kind) {
  if (kind == "necklace") return OrbitKind::rotation;
  if (kind == "bracelet") return OrbitKind::dihedral;
  throw std::invalid_argument("--kind must be necklace or bracelet");
}

struct FormatOptions {
  std::string kind = "compat";
  bool index = true;

  OutputFormat get() const { return OutputFormat{parse_format_kind(kind), index}; }
};

void add_format_options(CLI::App* cmd, FormatOptions& opts) {
  cmd->add_option("--format", opts.kind, "compat, lines or json")
      ->check(CLI::IsMember({"compat", "lines", "json"}))
      ->capture_default_str();
  cmd->add_flag("--index,!--no-index", opts.index, "Print the running ( k ) index in compat mode");
}

// Declared alphabet when --arity/--offset are given, otherwise the smallest
// alphabet covering the word.
Alphabet word_alphabet(const std::vector<int>& symbols, std::optional<int> arity, std::optional<int> offset) {
  if (!arity && !offset) return Alphabet::covering(symbols);
  const Alphabet inferred = Alphabet::covering(symbols);
  const int first = offset.value_or(std::min(0, inferred.first()));
  return Alphabet(arity.value_or(inferred.last() - first + 1), first);
}

std::string read_candidate(const std::string& arg) {
  std::ifstream file(arg);
  if (!file) return arg;
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Necklaces, bracelets, Lyndon words and de Bruijn sequences"};
  app.require_subcommand(1);

  // orbit
  std::string orbit_word;
  std::string orbit_kind = "necklace";
  std::optional<int> orbit_arity, orbit_offset;
  FormatOptions orbit_fmt;
  auto* orbit_cmd = app.add_subcommand("orbit", "List every member of the class containing WORD");
  orbit_cmd->add_option("word", orbit_word, "Digits (001101) or comma separated symbols")->required();
  orbit_cmd->add_option("--kind", orbit_kind, "necklace or bracelet")->capture_default_str();
  orbit_cmd->add_option("--arity", orbit_arity, "Alphabet size (inferred when omitted)");
  orbit_cmd->add_option("--offset", orbit_offset, "First alphabet symbol (inferred when omitted)");
  add_format_options(orbit_cmd, orbit_fmt);

  // canonical
  std::string canon_word;
  std::string canon_kind = "necklace";
  auto* canon_cmd = app.add_subcommand("canonical", "Print the class representative and periodicity of WORD");
  canon_cmd->add_option("word", canon_word)->required();
  canon_cmd->add_option("--kind", canon_kind, "necklace or bracelet")->capture_default_str();

  // generate
  std::string gen_mode = "necklaces";
  std::optional<int> gen_length, gen_arity;
  std::string gen_content;
  int gen_offset = 1;
  bool gen_count_only = false;
  std::string gen_path = "efficient";
  FormatOptions gen_fmt;
  auto* gen_cmd = app.add_subcommand("generate", "List class representatives");
  gen_cmd->add_option("--mode", gen_mode, "necklaces, bracelets or lyndon")
      ->check(CLI::IsMember({"necklaces", "bracelets", "lyndon"}))
      ->capture_default_str();
  auto* length_opt = gen_cmd->add_option("--length", gen_length, "Word length n");
  auto* arity_opt = gen_cmd->add_option("--arity", gen_arity, "Alphabet size m");
  auto* content_opt = gen_cmd->add_option("--content", gen_content, "Symbol multiplicities i1,...,im");
  content_opt->excludes(length_opt)->excludes(arity_opt);
  length_opt->needs(arity_opt);
  arity_opt->needs(length_opt);
  gen_cmd->add_option("--offset", gen_offset, "First alphabet symbol")->capture_default_str();
  gen_cmd->add_flag("--count-only", gen_count_only, "Print only the number of representatives");
  gen_cmd->add_option("--path", gen_path, "efficient or oracle (brute force, guarded by NECKLACES_ORACLE_LIMIT)")
      ->check(CLI::IsMember({"efficient", "oracle"}))
      ->capture_default_str();
  add_format_options(gen_cmd, gen_fmt);

  // count
  std::string count_object = "necklace";
  int count_length = 0, count_arity = 0;
  auto* count_cmd = app.add_subcommand("count", "Closed-form number of classes");
  count_cmd->add_option("--object", count_object, "necklace, bracelet or lyndon")
      ->check(CLI::IsMember({"necklace", "bracelet", "lyndon"}))
      ->capture_default_str();
  count_cmd->add_option("--length", count_length)->required();
  count_cmd->add_option("--arity", count_arity)->required();

  // compose
  std::string compose_target;
  std::optional<int> compose_terms;
  std::string compose_counting;
  FormatOptions compose_fmt;
  compose_fmt.index = false;
  auto* compose_cmd = app.add_subcommand("compose", "Compositions of a multi-index, or counting vectors");
  auto* target_opt = compose_cmd->add_option("--target", compose_target, "Multi-index i1,...,im");
  auto* terms_opt = compose_cmd->add_option("--terms", compose_terms, "Number of terms");
  auto* counting_opt = compose_cmd->add_option("--counting-vectors", compose_counting, "n,m");
  counting_opt->excludes(target_opt)->excludes(terms_opt);
  target_opt->needs(terms_opt);
  terms_opt->needs(target_opt);
  add_format_options(compose_cmd, compose_fmt);

  // debruijn
  int db_length = 0, db_arity = 0, db_offset = 0;
  std::string db_sep;
  std::string db_verify;
  bool db_windows = false;
  auto* db_cmd = app.add_subcommand("debruijn", "Least de Bruijn sequence by necklace concatenation");
  db_cmd->add_option("--length", db_length, "Window length n")->required();
  db_cmd->add_option("--arity", db_arity, "Alphabet size m")->required();
  db_cmd->add_option("--offset", db_offset, "First alphabet symbol")->capture_default_str();
  db_cmd->add_option("--sep", db_sep, "Single character placed between blocks");
  auto* verify_opt = db_cmd->add_option("--verify", db_verify, "Check a sequence given inline or in a file");
  db_cmd->add_flag("--windows", db_windows, "Print the m^n circular windows in positional order")
      ->excludes(verify_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (orbit_cmd->parsed()) {
      const auto symbols = parse_symbols(orbit_word);
      const Word w(symbols, word_alphabet(symbols, orbit_arity, orbit_offset));
      write_words(std::cout, orbit(w, parse_kind(orbit_kind)).members(), orbit_fmt.get());
    } else if (canon_cmd->parsed()) {
      const auto symbols = parse_symbols(canon_word);
      const Word w(symbols, Alphabet::covering(symbols));
      const auto per = periodicity(canonical(w, parse_kind(canon_kind)));
      std::cout << canonical(w, parse_kind(canon_kind)).str() << '\n'
                << "aperiodic prefix " << per.prefix.str() << ", repetitions " << per.repetitions << '\n';
    } else if (gen_cmd->parsed()) {
      if (gen_content.empty() && !gen_length) {
        throw std::invalid_argument("give either --length and --arity, or --content");
      }
      GenerationRequest request{gen_mode == "necklaces"   ? GenerationMode::necklace
                                : gen_mode == "bracelets" ? GenerationMode::bracelet
                                                          : GenerationMode::lyndon,
                                AllWords{0, 0}, gen_offset};
      if (!gen_content.empty()) {
        request.scope = FixedContent{parse_content(gen_content)};
      } else {
        request.scope = AllWords{*gen_length, *gen_arity};
      }

      RepresentativeList reps;
      if (gen_path == "oracle") {
        const auto limit = env_limit("NECKLACES_ORACLE_LIMIT", kDefaultOracleLimit);
        const auto kind = request.mode == GenerationMode::bracelet ? OrbitKind::dihedral : OrbitKind::rotation;
        if (const auto* fixed = std::get_if<FixedContent>(&request.scope)) {
          reps = oracle_fixed_content(fixed->content, gen_offset, kind, limit);
        } else {
          const auto& all = std::get<AllWords>(request.scope);
          reps = oracle_all(all.length, all.arity, gen_offset, kind, limit);
        }
        if (request.mode == GenerationMode::lyndon) {
          std::erase_if(reps.words, [](const Word& w) { return !periodicity(w).aperiodic(); });
        }
      } else {
        reps = generate(request);
      }

      if (gen_count_only) {
        if (gen_fmt.get().kind == FormatKind::json) {
          std::cout << nlohmann::json{{"count", reps.count()}}.dump() << '\n';
        } else {
          std::cout << reps.count() << '\n';
        }
      } else {
        write_words(std::cout, reps.words, gen_fmt.get());
      }
    } else if (count_cmd->parsed()) {
      const CountedObject object = count_object == "necklace"   ? CountedObject::necklace
                                   : count_object == "bracelet" ? CountedObject::bracelet
                                                                : CountedObject::lyndon;
      std::cout << count(CountQuery{object, count_length, count_arity}) << '\n';
    } else if (compose_cmd->parsed()) {
      std::vector<MultiIndexComposition> items;
      if (!compose_counting.empty()) {
        const auto nm = parse_symbols(compose_counting);
        if (nm.size() != 2) throw std::invalid_argument("--counting-vectors takes n,m");
        for (const auto& v : counting_vectors(nm[0], nm[1])) {
          MultiIndexComposition as_terms;
          for (int part : v.parts()) as_terms.terms.emplace_back(std::vector<int>{part});
          items.push_back(std::move(as_terms));
        }
      } else if (compose_terms) {
        items = multi_index_compositions(parse_content(compose_target), *compose_terms);
      } else {
        throw std::invalid_argument("give either --target and --terms, or --counting-vectors");
      }
      write_compositions(std::cout, items, compose_fmt.get());
    } else if (db_cmd->parsed()) {
      if (db_sep.size() > 1) throw std::invalid_argument("--sep takes a single character");
      const std::optional<char> sep = db_sep.empty() ? std::nullopt : std::optional(db_sep.front());
      if (!db_verify.empty()) {
        std::string text = read_candidate(db_verify);
        if (sep) std::erase(text, *sep);
        const Word candidate(parse_symbols(text), Alphabet(db_arity, db_offset));
        const auto result = verify_de_bruijn(candidate, db_length);
        std::cout << (result.ok ? "valid: " : "invalid: ") << result.diagnostic << '\n';
        return result.ok ? kExitOk : kExitVerifyFailed;
      }
      const auto seq = build_de_bruijn(db_length, db_arity, db_offset,
                                       env_limit("NECKLACES_MAX_SYMBOLS", kDefaultMaxSequenceLength));
      if (db_windows) {
        for (const auto& w : circular_windows(seq)) std::cout << w.str() << '\n';
      } else {
        if (!sep && (seq.alphabet().first() < 0 || seq.alphabet().last() > 9)) {
          throw std::invalid_argument("symbols outside 0-9 need --sep to render unambiguously");
        }
        std::cout << render(seq, sep) << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
