#include "terminflect/morphtag.h"

#include <stdexcept>
#include <utility>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<Pos, 4> kPosNames{
    {{Pos::N, "N"}, {Pos::PROPN, "PROPN"}, {Pos::ADJ, "ADJ"}, {Pos::V, "V"}}};
constexpr NameTable<Case, 7> kCaseNames{{{Case::NOM, "NOM"},
                                         {Case::GEN, "GEN"},
                                         {Case::DAT, "DAT"},
                                         {Case::ACC, "ACC"},
                                         {Case::INS, "INS"},
                                         {Case::LOC, "LOC"},
                                         {Case::VOC, "VOC"}}};
constexpr NameTable<Number, 2> kNumberNames{{{Number::SG, "SG"}, {Number::PL, "PL"}}};
constexpr NameTable<Gender, 3> kGenderNames{
    {{Gender::MASC, "MASC"}, {Gender::FEM, "FEM"}, {Gender::NEUT, "NEUT"}}};
constexpr NameTable<Person, 3> kPersonNames{
    {{Person::FIRST, "1"}, {Person::SECOND, "2"}, {Person::THIRD, "3"}}};
constexpr NameTable<Tense, 3> kTenseNames{
    {{Tense::PST, "PST"}, {Tense::PRS, "PRS"}, {Tense::FUT, "FUT"}}};
constexpr NameTable<Mood, 4> kMoodNames{{{Mood::IND, "IND"},
                                         {Mood::COND, "COND"},
                                         {Mood::IMP, "IMP"},
                                         {Mood::SBJV, "SBJV"}}};
constexpr NameTable<Strength, 3> kStrengthNames{{{Strength::STRONG, "STRONG"},
                                                 {Strength::WEAK, "WEAK"},
                                                 {Strength::MIXED, "MIXED"}}};

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const NameTable<E, N>& table, std::string_view name) {
  for (const auto& [e, n] : table) {
    if (n == name) return e;
  }
  return std::nullopt;
}

template <typename T>
void set_once(std::optional<T>& slot, T value, std::string_view field,
              std::string_view whole) {
  if (slot) {
    throw std::invalid_argument("repeated slot '" + std::string(field) + "' in tag '" +
                                std::string(whole) + "'");
  }
  slot = value;
}

}  // namespace

std::string_view to_string(Pos v) { return name_of(kPosNames, v); }
std::string_view to_string(Case v) { return name_of(kCaseNames, v); }
std::string_view to_string(Number v) { return name_of(kNumberNames, v); }
std::string_view to_string(Gender v) { return name_of(kGenderNames, v); }
std::string_view to_string(Person v) { return name_of(kPersonNames, v); }
std::string_view to_string(Tense v) { return name_of(kTenseNames, v); }
std::string_view to_string(Mood v) { return name_of(kMoodNames, v); }
std::string_view to_string(Strength v) { return name_of(kStrengthNames, v); }
std::string_view to_string(Language v) { return v == Language::DE ? "de" : "lt"; }

std::optional<Case> parse_case(std::string_view s) { return value_of(kCaseNames, s); }
std::optional<Number> parse_number(std::string_view s) {
  return value_of(kNumberNames, s);
}
std::optional<Gender> parse_gender(std::string_view s) {
  return value_of(kGenderNames, s);
}
std::optional<Language> parse_language(std::string_view s) {
  if (s == "de") return Language::DE;
  if (s == "lt") return Language::LT;
  return std::nullopt;
}

bool is_nominal(Pos pos) { return pos != Pos::V; }

bool MorphTag::well_formed() const {
  if (pos == Pos::V) return !case_ && !gender && !strength;
  if (person || tense || mood) return false;
  return !strength || pos == Pos::ADJ;
}

bool MorphTag::subsumes(const MorphTag& other) const {
  auto ok = [](const auto& mine, const auto& theirs) { return !mine || mine == theirs; };
  return pos == other.pos && ok(case_, other.case_) && ok(number, other.number) &&
         ok(gender, other.gender) && ok(person, other.person) &&
         ok(tense, other.tense) && ok(mood, other.mood) &&
         ok(strength, other.strength);
}

std::string format_unimorph(const MorphTag& tag) {
  std::string out(to_string(tag.pos));
  auto add = [&out](const auto& slot) {
    if (slot) {
      out += ';';
      out += to_string(*slot);
    }
  };
  add(tag.case_);
  add(tag.number);
  add(tag.gender);
  add(tag.strength);
  add(tag.person);
  add(tag.tense);
  add(tag.mood);
  return out;
}

MorphTag parse_unimorph(std::string_view s) {
  auto fields = split(s, ';');
  auto pos = value_of(kPosNames, fields.front());
  if (!pos) throw std::invalid_argument("unknown POS in tag '" + std::string(s) + "'");
  MorphTag tag;
  tag.pos = *pos;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::string& f = fields[i];
    if (auto c = value_of(kCaseNames, f)) {
      set_once(tag.case_, *c, f, s);
    } else if (auto n = value_of(kNumberNames, f)) {
      set_once(tag.number, *n, f, s);
    } else if (auto g = value_of(kGenderNames, f)) {
      set_once(tag.gender, *g, f, s);
    } else if (auto p = value_of(kPersonNames, f)) {
      set_once(tag.person, *p, f, s);
    } else if (auto t = value_of(kTenseNames, f)) {
      set_once(tag.tense, *t, f, s);
    } else if (auto m = value_of(kMoodNames, f)) {
      set_once(tag.mood, *m, f, s);
    } else if (auto st = value_of(kStrengthNames, f)) {
      set_once(tag.strength, *st, f, s);
    } else {
      throw std::invalid_argument("unknown slot value '" + f + "' in tag '" +
                                  std::string(s) + "'");
    }
  }
  if (!tag.well_formed()) {
    throw std::invalid_argument("slot not licensed by POS in tag '" + std::string(s) +
                                "'");
  }
  return tag;
}

MorphTag tag_from_ud_feats(std::string_view upos, const Features& feats) {
  MorphTag tag;
  if (upos == "NOUN") {
    tag.pos = Pos::N;
  } else if (upos == "PROPN") {
    tag.pos = Pos::PROPN;
  } else if (upos == "ADJ") {
    tag.pos = Pos::ADJ;
  } else if (upos == "VERB" || upos == "AUX") {
    tag.pos = Pos::V;
  } else {
    throw UnsupportedPosError("unsupported POS '" + std::string(upos) + "'");
  }

  if (auto n = feature(feats, "Number")) {
    if (*n == "Sing") tag.number = Number::SG;
    if (*n == "Plur") tag.number = Number::PL;
  }
  if (tag.pos != Pos::V) return tag;

  if (auto p = feature(feats, "Person")) {
    if (*p == "1") tag.person = Person::FIRST;
    if (*p == "2") tag.person = Person::SECOND;
    if (*p == "3") tag.person = Person::THIRD;
  }
  if (auto t = feature(feats, "Tense")) {
    if (*t == "Past") tag.tense = Tense::PST;
    if (*t == "Pres") tag.tense = Tense::PRS;
    if (*t == "Fut") tag.tense = Tense::FUT;
  }
  if (auto m = feature(feats, "Mood")) {
    if (*m == "Ind") tag.mood = Mood::IND;
    if (*m == "Cnd") tag.mood = Mood::COND;
    if (*m == "Imp") tag.mood = Mood::IMP;
    if (*m == "Sub") tag.mood = Mood::SBJV;
  }
  return tag;
}

}  // namespace terminflect
