#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "terminflect/morphtag.h"

namespace terminflect::lt {

// Declension families of Lithuanian nouns, keyed by nominative singular.
enum class DeclensionClassId { I_AS, I_IS, I_YS, II_A, II_E, III_IS_FEM, IV_US, V_UO };

std::string_view to_string(DeclensionClassId id);

using CaseNumber = std::pair<Case, Number>;

// One ending table. Several tables may share a family id: soft-stem
// variants such as -ias, -jas, -ius get their own rows because their
// endings differ from the hard-stem table.
struct DeclensionClass {
  std::string name;  // table name used in override files, e.g. "I_IAS"
  DeclensionClassId id;
  Gender gender;
  std::string match;  // lemma suffix selecting this table
  std::map<CaseNumber, std::string> endings;
  // t/d become č/dž before i + back vowel (brolis, medžio; katė, kačių).
  bool palatalizes = false;
  // č/dž revert to t/d before front i/y/į (svečias, svetyje).
  bool depalatalizes = false;

  const std::string& nominative_ending() const;
};

struct Classification {
  const DeclensionClass* cls = nullptr;
  std::string stem;
};

using Paradigm = std::map<CaseNumber, std::string>;

class DeclensionTable {
 public:
  // The built-in tables for the eight noun families.
  static const DeclensionTable& builtin();

  // Copy of the built-in tables with `CLASS<TAB>CASE;NUMBER<TAB>ending`
  // rows applied on top. Throws ParseError on malformed rows or unknown
  // class names.
  static DeclensionTable with_overrides(std::istream& in);
  static DeclensionTable with_overrides_file(const std::string& path);

  const std::vector<DeclensionClass>& classes() const { return classes_; }

  // Longest matching suffix wins. Endings shared by two tables (-is, -uo)
  // are resolved by `gender_hint`, defaulting to the masculine table.
  // Unset when no table matches with a non-empty stem.
  std::optional<Classification> classify(const std::string& lemma,
                                         std::optional<Gender> gender_hint = {}) const;

  std::optional<std::string> decline(const std::string& lemma, Case c, Number n,
                                     std::optional<Gender> gender_hint = {}) const;

  // All 14 case/number forms; unset iff classify fails.
  std::optional<Paradigm> paradigm(const std::string& lemma,
                                   std::optional<Gender> gender_hint = {}) const;

 private:
  void apply_overrides(std::istream& in);
  void check_complete() const;

  std::vector<DeclensionClass> classes_;
};

// stem + ending with the table's consonant alternations applied.
std::string attach_ending(const DeclensionClass& cls, const std::string& stem,
                          const std::string& ending);

// The stem with its final t/d <-> č/dž alternation applied, or the stem
// unchanged when it does not end in an alternating consonant.
std::string alternate_stem(const std::string& stem);

}  // namespace terminflect::lt
