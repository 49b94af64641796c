#include "terminflect/lt_declension.h"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect::lt {

namespace {

// Ending rows in override-file format. Order of the 14 cells per table:
// singular NOM GEN DAT ACC INS LOC VOC, then plural in the same order.
constexpr const char* kBuiltinEndings = R"(I_AS	as o ui ą u e e	ai ų ams us ais uose ai
I_IAS	ias io iui ią iu yje y	iai ių iams ius iais iuose iai
I_JAS	as o ui ą u yje au	ai ų ams us ais uose ai
I_IS	is io iui į iu yje i	iai ių iams ius iais iuose iai
I_YS	ys io iui į iu yje y	iai ių iams ius iais iuose iai
II_A	a os ai ą a oje a	os ų oms as omis ose os
II_IA	ia ios iai ią ia ioje ia	ios ių ioms ias iomis iose ios
II_E	ė ės ei ę e ėje e	ės ių ėms es ėmis ėse ės
III_IS_FEM	is ies iai į imi yje ie	ys ių ims is imis yse ys
IV_US	us aus ui ų umi uje au	ūs ų ums us umis uose ūs
IV_IUS	us aus ui ų umi uje au	ai ų ams us ais uose ai
IV_JUS	us aus ui ų umi uje au	ai ų ams us ais uose ai
V_UO	uo ens eniui enį eniu enyje enie	enys enų enims enis enimis enyse enys
V_UO_FEM	uo ers eriai erį erimi eryje erie	erys erų erims eris erimis eryse erys
)";

struct ClassSpec {
  const char* name;
  DeclensionClassId id;
  Gender gender;
  const char* match;
  bool palatalizes;
  bool depalatalizes;
};

// Tables sharing a suffix are listed default-first.
constexpr ClassSpec kClassSpecs[] = {
    {"I_AS", DeclensionClassId::I_AS, Gender::MASC, "as", false, false},
    {"I_IAS", DeclensionClassId::I_AS, Gender::MASC, "ias", false, true},
    {"I_JAS", DeclensionClassId::I_AS, Gender::MASC, "jas", false, false},
    {"I_IS", DeclensionClassId::I_IS, Gender::MASC, "is", true, false},
    {"I_YS", DeclensionClassId::I_YS, Gender::MASC, "ys", true, false},
    {"II_A", DeclensionClassId::II_A, Gender::FEM, "a", false, false},
    {"II_IA", DeclensionClassId::II_A, Gender::FEM, "ia", false, false},
    {"II_E", DeclensionClassId::II_E, Gender::FEM, "ė", true, false},
    {"III_IS_FEM", DeclensionClassId::III_IS_FEM, Gender::FEM, "is", true, false},
    {"IV_US", DeclensionClassId::IV_US, Gender::MASC, "us", false, false},
    {"IV_IUS", DeclensionClassId::IV_US, Gender::MASC, "ius", false, false},
    {"IV_JUS", DeclensionClassId::IV_US, Gender::MASC, "jus", false, false},
    {"V_UO", DeclensionClassId::V_UO, Gender::MASC, "uo", false, false},
    {"V_UO_FEM", DeclensionClassId::V_UO, Gender::FEM, "uo", false, false},
};

const std::vector<std::string> kBackVowels = {"a", "o", "u", "ą", "ų", "ū"};

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// "i" directly followed by a back vowel, e.g. io, iu, ių, iai.
bool soft_back_ending(std::string_view ending) {
  if (!starts_with(ending, "i")) return false;
  for (const auto& v : kBackVowels) {
    if (starts_with(ending.substr(1), v)) return true;
  }
  return false;
}

bool front_ending(std::string_view ending) {
  if (starts_with(ending, "y") || starts_with(ending, "į")) return true;
  return starts_with(ending, "i") && !soft_back_ending(ending);
}

}  // namespace

std::string_view to_string(DeclensionClassId id) {
  switch (id) {
    case DeclensionClassId::I_AS: return "I_AS";
    case DeclensionClassId::I_IS: return "I_IS";
    case DeclensionClassId::I_YS: return "I_YS";
    case DeclensionClassId::II_A: return "II_A";
    case DeclensionClassId::II_E: return "II_E";
    case DeclensionClassId::III_IS_FEM: return "III_IS_FEM";
    case DeclensionClassId::IV_US: return "IV_US";
    case DeclensionClassId::V_UO: return "V_UO";
  }
  return "?";
}

const std::string& DeclensionClass::nominative_ending() const {
  return endings.at({Case::NOM, Number::SG});
}

std::string alternate_stem(const std::string& stem) {
  if (ends_with(stem, "dž")) return stem.substr(0, stem.size() - 2);
  if (ends_with(stem, "č")) return stem.substr(0, stem.size() - 2) + "t";
  if (ends_with(stem, "d")) return stem + "ž";
  if (ends_with(stem, "t")) return stem.substr(0, stem.size() - 1) + "č";
  return stem;
}

std::string attach_ending(const DeclensionClass& cls, const std::string& stem,
                          const std::string& ending) {
  if (cls.palatalizes && soft_back_ending(ending) &&
      (ends_with(stem, "t") || ends_with(stem, "d"))) {
    return alternate_stem(stem) + ending;
  }
  if (cls.depalatalizes && front_ending(ending) &&
      (ends_with(stem, "č") || ends_with(stem, "dž"))) {
    return alternate_stem(stem) + ending;
  }
  return stem + ending;
}

const DeclensionTable& DeclensionTable::builtin() {
  static const DeclensionTable table = [] {
    DeclensionTable t;
    for (const auto& spec : kClassSpecs) {
      t.classes_.push_back(DeclensionClass{spec.name, spec.id, spec.gender, spec.match,
                                           {}, spec.palatalizes, spec.depalatalizes});
    }
    std::istringstream rows(kBuiltinEndings);
    std::string line;
    std::ostringstream expanded;
    // Expand the compact built-in rows into override-format rows.
    while (std::getline(rows, line)) {
      if (line.empty()) continue;
      auto cols = split(line, '\t');
      auto sg = split_whitespace(cols.at(1));
      auto pl = split_whitespace(cols.at(2));
      for (std::size_t i = 0; i < kAllCases.size(); ++i) {
        expanded << cols[0] << '\t' << to_string(kAllCases[i]) << ";SG\t" << sg.at(i)
                 << '\n';
        expanded << cols[0] << '\t' << to_string(kAllCases[i]) << ";PL\t" << pl.at(i)
                 << '\n';
      }
    }
    std::istringstream in(expanded.str());
    t.apply_overrides(in);
    t.check_complete();
    return t;
  }();
  return table;
}

DeclensionTable DeclensionTable::with_overrides(std::istream& in) {
  DeclensionTable t = builtin();
  t.apply_overrides(in);
  t.check_complete();
  return t;
}

DeclensionTable DeclensionTable::with_overrides_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open declension table " + path);
  return with_overrides(in);
}

void DeclensionTable::apply_overrides(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3) {
      throw ParseError("expected CLASS<TAB>CASE;NUMBER<TAB>ending", line_no);
    }
    DeclensionClass* cls = nullptr;
    for (auto& c : classes_) {
      if (c.name == cols[0]) cls = &c;
    }
    if (!cls) throw ParseError("unknown declension class '" + cols[0] + "'", line_no);
    auto key = split(cols[1], ';');
    std::optional<Case> c = key.size() == 2 ? parse_case(key[0]) : std::nullopt;
    std::optional<Number> n = key.size() == 2 ? parse_number(key[1]) : std::nullopt;
    if (!c || !n) throw ParseError("bad CASE;NUMBER key '" + cols[1] + "'", line_no);
    std::string ending(trim(cols[2]));
    if (*c == Case::NOM && *n == Number::SG && !ends_with(cls->match, ending)) {
      throw ParseError("nominative singular ending '" + ending +
                           "' is not a suffix of the class suffix '" + cls->match + "'",
                       line_no);
    }
    cls->endings[{*c, *n}] = ending;
  }
}

void DeclensionTable::check_complete() const {
  for (const auto& c : classes_) {
    if (c.endings.size() != kAllCases.size() * kAllNumbers.size()) {
      throw ValidationError("declension class " + c.name + " has " +
                            std::to_string(c.endings.size()) + " of 14 endings");
    }
  }
}

std::optional<Classification> DeclensionTable::classify(
    const std::string& lemma, std::optional<Gender> gender_hint) const {
  const DeclensionClass* best = nullptr;
  for (const auto& c : classes_) {
    if (!ends_with(lemma, c.match) || lemma.size() <= c.match.size()) continue;
    if (!best || c.match.size() > best->match.size()) {
      best = &c;
    } else if (c.match.size() == best->match.size() && gender_hint &&
               c.gender == *gender_hint && best->gender != *gender_hint) {
      best = &c;
    }
  }
  if (!best) return std::nullopt;
  const std::string& nom = best->nominative_ending();
  return Classification{best, lemma.substr(0, lemma.size() - nom.size())};
}

std::optional<std::string> DeclensionTable::decline(const std::string& lemma, Case c,
                                                    Number n,
                                                    std::optional<Gender> gender_hint) const {
  auto cl = classify(lemma, gender_hint);
  if (!cl) return std::nullopt;
  if (c == Case::NOM && n == Number::SG) return lemma;
  return attach_ending(*cl->cls, cl->stem, cl->cls->endings.at({c, n}));
}

std::optional<Paradigm> DeclensionTable::paradigm(const std::string& lemma,
                                                  std::optional<Gender> gender_hint) const {
  auto cl = classify(lemma, gender_hint);
  if (!cl) return std::nullopt;
  Paradigm out;
  for (auto n : kAllNumbers) {
    for (auto c : kAllCases) {
      out[{c, n}] = (c == Case::NOM && n == Number::SG)
                        ? lemma
                        : attach_ending(*cl->cls, cl->stem, cl->cls->endings.at({c, n}));
    }
  }
  return out;
}

}  // namespace terminflect::lt
