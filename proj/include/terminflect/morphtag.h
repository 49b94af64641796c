#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "terminflect/conllu.h"

namespace terminflect {

enum class Pos { N, PROPN, ADJ, V };
enum class Case { NOM, GEN, DAT, ACC, INS, LOC, VOC };
enum class Number { SG, PL };
enum class Gender { MASC, FEM, NEUT };
enum class Person { FIRST, SECOND, THIRD };
enum class Tense { PST, PRS, FUT };
enum class Mood { IND, COND, IMP, SBJV };
// German adjective declension class.
enum class Strength { STRONG, WEAK, MIXED };

enum class Language { DE, LT };

inline constexpr std::array<Case, 7> kAllCases = {Case::NOM, Case::GEN, Case::DAT,
                                                  Case::ACC, Case::INS, Case::LOC,
                                                  Case::VOC};
inline constexpr std::array<Number, 2> kAllNumbers = {Number::SG, Number::PL};

std::string_view to_string(Pos v);
std::string_view to_string(Case v);
std::string_view to_string(Number v);
std::string_view to_string(Gender v);
std::string_view to_string(Person v);
std::string_view to_string(Tense v);
std::string_view to_string(Mood v);
std::string_view to_string(Strength v);
std::string_view to_string(Language v);

std::optional<Case> parse_case(std::string_view s);
std::optional<Number> parse_number(std::string_view s);
std::optional<Gender> parse_gender(std::string_view s);
std::optional<Language> parse_language(std::string_view s);

bool is_nominal(Pos pos);

// UniMorph-style tag bundle. Slots that do not apply to `pos` stay unset.
struct MorphTag {
  Pos pos = Pos::N;
  std::optional<Case> case_;
  std::optional<Number> number;
  std::optional<Gender> gender;
  std::optional<Person> person;
  std::optional<Tense> tense;
  std::optional<Mood> mood;
  std::optional<Strength> strength;

  bool operator==(const MorphTag&) const = default;

  // Slot/POS licensing: case and gender only for nominals, person, tense
  // and mood only for verbs, strength only for adjectives.
  bool well_formed() const;

  // True if every slot set in `this` has the same value in `other`.
  bool subsumes(const MorphTag& other) const;
};

// Canonical tag string: POS;CASE;NUMBER;GENDER;STRENGTH;PERSON;TENSE;MOOD with
// unset slots omitted, e.g. "N;ACC;PL" or "V;SG;3;PST".
std::string format_unimorph(const MorphTag& tag);

// Inverse of format_unimorph. The first field must be the POS; the rest are
// recognised by value since slot vocabularies are disjoint. Throws
// std::invalid_argument on unknown values, repeated slots or slots the POS
// does not license.
MorphTag parse_unimorph(std::string_view s);

// Maps a UD POS and feature set to a partial tag. NOUN->N, PROPN->PROPN,
// ADJ->ADJ, VERB/AUX->V; anything else throws UnsupportedPosError.
// Multi-valued or unknown feature values leave the slot unset.
MorphTag tag_from_ud_feats(std::string_view upos, const Features& feats);

}  // namespace terminflect
