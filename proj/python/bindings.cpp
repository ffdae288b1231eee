#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "necklaces/compositions.hpp"
#include "necklaces/counting.hpp"
#include "necklaces/debruijn.hpp"
#include "necklaces/errors.hpp"
#include "necklaces/generators.hpp"
#include "necklaces/words.hpp"

namespace py = pybind11;
using namespace necklaces;

namespace {

using Symbols = std::vector<int>;

Word make_word(const Symbols& symbols, std::optional<int> arity, std::optional<int> offset) {
  if (!arity && !offset) return Word(symbols, Alphabet::covering(symbols));
  const Alphabet inferred = Alphabet::covering(symbols);
  const int first = offset.value_or(std::min(0, inferred.first()));
  return Word(symbols, Alphabet(arity.value_or(inferred.last() - first + 1), first));
}

Symbols to_list(const Word& w) { return Symbols(w.symbols().begin(), w.symbols().end()); }

std::vector<Symbols> to_lists(const std::vector<Word>& words) {
  std::vector<Symbols> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(to_list(w));
  return out;
}

OrbitKind parse_kind(const std::string& kind) {
  if (kind == "necklace") return OrbitKind::rotation;
  if (kind == "bracelet") return OrbitKind::dihedral;
  throw std::invalid_argument("kind must be 'necklace' or 'bracelet'");
}

py::int_ to_python(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Necklaces, bracelets, Lyndon words and de Bruijn sequences";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  // Words are plain lists of ints; the alphabet is inferred unless given.
  m.def("rotate", [](const Symbols& w, long long j) { return to_list(rotate(make_word(w, {}, {}), j)); },
        py::arg("word"), py::arg("j"));
  m.def("reflect", [](const Symbols& w) { return to_list(reflect(make_word(w, {}, {}))); }, py::arg("word"));
  m.def(
      "orbit",
      [](const Symbols& w, const std::string& kind) {
        return to_lists(orbit(make_word(w, {}, {}), parse_kind(kind)).members());
      },
      py::arg("word"), py::arg("kind") = "necklace");
  m.def(
      "canonical",
      [](const Symbols& w, const std::string& kind) { return to_list(canonical(make_word(w, {}, {}), parse_kind(kind))); },
      py::arg("word"), py::arg("kind") = "necklace");
  m.def(
      "periodicity",
      [](const Symbols& w) {
        const auto p = periodicity(make_word(w, {}, {}));
        return py::make_tuple(to_list(p.prefix), p.repetitions);
      },
      py::arg("word"), "Return (aperiodic prefix, repetitions).");

  m.def("multiset_permutations", [](const Symbols& v) { return multiset_permutations(v); }, py::arg("values"));
  m.def(
      "multi_index_compositions",
      [](const Symbols& target, int terms) {
        std::vector<std::vector<Symbols>> out;
        for (const auto& c : multi_index_compositions(ContentVector(target), terms)) {
          auto& row = out.emplace_back();
          for (const auto& t : c.terms) row.emplace_back(t.parts().begin(), t.parts().end());
        }
        return out;
      },
      py::arg("target"), py::arg("terms"));
  m.def(
      "counting_vectors",
      [](int n, int mm) {
        std::vector<Symbols> out;
        for (const auto& v : counting_vectors(n, mm)) out.emplace_back(v.parts().begin(), v.parts().end());
        return out;
      },
      py::arg("n"), py::arg("m"));

  m.def(
      "fixed_content_necklaces",
      [](const Symbols& content, int offset) { return to_lists(fixed_content_necklaces(ContentVector(content), offset).words); },
      py::arg("content"), py::arg("offset") = 1);
  m.def(
      "fixed_content_bracelets",
      [](const Symbols& content, int offset) { return to_lists(fixed_content_bracelets(ContentVector(content), offset).words); },
      py::arg("content"), py::arg("offset") = 1);
  m.def("necklaces", [](int n, int mm, int offset) { return to_lists(all_necklaces(n, mm, offset).words); },
        py::arg("n"), py::arg("m"), py::arg("offset") = 1);
  m.def("bracelets", [](int n, int mm, int offset) { return to_lists(all_bracelets(n, mm, offset).words); },
        py::arg("n"), py::arg("m"), py::arg("offset") = 1);
  m.def("lyndon_words", [](int n, int mm, int offset) { return to_lists(lyndon_words(n, mm, offset).words); },
        py::arg("n"), py::arg("m"), py::arg("offset") = 1);
  m.def(
      "oracle_fixed_content",
      [](const Symbols& content, int offset, const std::string& kind, std::uint64_t limit) {
        return to_lists(oracle_fixed_content(ContentVector(content), offset, parse_kind(kind), limit).words);
      },
      py::arg("content"), py::arg("offset") = 1, py::arg("kind") = "necklace", py::arg("limit") = kDefaultOracleLimit);

  m.def("count_necklaces", [](int n, int mm) { return to_python(count_necklaces(n, mm)); }, py::arg("n"), py::arg("m"));
  m.def("count_bracelets", [](int n, int mm) { return to_python(count_bracelets(n, mm)); }, py::arg("n"), py::arg("m"));
  m.def("count_lyndon", [](int n, int mm) { return to_python(count_lyndon(n, mm)); }, py::arg("n"), py::arg("m"));

  py::class_<DeBruijnSequence>(m, "DeBruijnSequence")
      .def_property_readonly("symbols", &DeBruijnSequence::symbols)
      .def_property_readonly("order", &DeBruijnSequence::order)
      .def_property_readonly("blocks",
                             [](const DeBruijnSequence& s) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& b : s.blocks()) out.emplace_back(b.begin, b.length);
                               return out;
                             })
      .def("render", [](const DeBruijnSequence& s, std::optional<char> sep) { return render(s, sep); },
           py::arg("sep") = py::none())
      .def("windows", [](const DeBruijnSequence& s) { return to_lists(circular_windows(s)); })
      .def("__len__", &DeBruijnSequence::size)
      .def("__str__", [](const DeBruijnSequence& s) { return render(s, s.alphabet().last() > 9 || s.alphabet().first() < 0 ? std::optional(',') : std::nullopt); });

  m.def("de_bruijn", &build_de_bruijn, py::arg("n"), py::arg("m"), py::arg("offset") = 0,
        py::arg("max_length") = kDefaultMaxSequenceLength);
  m.def(
      "verify_de_bruijn",
      [](const Symbols& candidate, int n, int mm, int offset) {
        const auto r = verify_de_bruijn(Word(candidate, Alphabet(mm, offset)), n);
        py::dict out;
        out["ok"] = r.ok;
        out["diagnostic"] = r.diagnostic;
        out["duplicated"] = r.duplicated ? py::cast(to_list(*r.duplicated)) : py::none();
        out["missing"] = r.missing ? py::cast(to_list(*r.missing)) : py::none();
        return out;
      },
      py::arg("candidate"), py::arg("n"), py::arg("m"), py::arg("offset") = 0);
}
