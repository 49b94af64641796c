#include "terminflect/tag_inference.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

constexpr const char* kLithuanianRules = R"(
[deprel]
root = NOM
nsubj = NOM
obj = ACC
iobj = DAT
nmod = GEN
nmod:poss = GEN
compound = GEN

[prep]
with = INS
in = LOC
at = LOC
on = LOC
inside = LOC
of = GEN
from = GEN
without = GEN
after = GEN
near = GEN
before = ACC
about = ACC
through = ACC
into = ACC

[verb_gov]
play = INS
become = INS
lead = DAT
help = DAT
thank = DAT
serve = DAT

[inherit]
appos
flat
conj
)";

constexpr const char* kGermanRules = R"(
[deprel]
root = NOM
nsubj = NOM
obj = ACC
iobj = DAT
nmod = GEN
nmod:poss = GEN

[prep]
with = DAT
of = DAT
from = DAT
after = DAT
at = DAT
in = DAT
on = DAT
by = DAT
to = DAT
for = ACC
without = ACC
through = ACC
against = ACC
about = ACC
during = GEN
despite = GEN

[verb_gov]
help = DAT
thank = DAT
follow = DAT
answer = DAT

[inherit]
appos
flat
conj
)";

std::string base_relation(const std::string& deprel) {
  return deprel.substr(0, deprel.find(':'));
}

template <typename Map>
auto find_relation(const Map& map, const std::string& deprel) {
  auto it = map.find(deprel);
  if (it == map.end()) it = map.find(base_relation(deprel));
  return it;
}

bool is_noun(const SourceToken& t) { return t.upos == "NOUN" || t.upos == "PROPN"; }

std::optional<Case> case_for(const ParsedSentence& s, const std::vector<int>& span,
                             int head, const InferenceRules& rules, int depth) {
  auto in_span = [&](int i) { return std::find(span.begin(), span.end(), i) != span.end(); };

  for (const auto& t : s.tokens) {
    if (t.upos != "ADP" || in_span(t.index) || !in_span(t.head)) continue;
    if (auto it = rules.preposition_case.find(ascii_lower(t.lemma));
        it != rules.preposition_case.end()) {
      return it->second;
    }
  }

  const SourceToken& h = s.token(head);
  if (h.head != 0 && base_relation(h.deprel) == "obj") {
    const SourceToken& gov = s.token(h.head);
    if (auto it = rules.verb_government.find(ascii_lower(gov.lemma));
        it != rules.verb_government.end()) {
      return it->second;
    }
  }

  if (h.head != 0 && depth < static_cast<int>(s.size()) &&
      find_relation(rules.inherit_deprels, h.deprel) != rules.inherit_deprels.end()) {
    return case_for(s, {h.head}, h.head, rules, depth + 1);
  }

  if (auto it = find_relation(rules.deprel_case, h.deprel); it != rules.deprel_case.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<Number> number_of(const SourceToken& t) {
  auto n = feature(t.feats, "Number");
  if (n == "Sing") return Number::SG;
  if (n == "Plur") return Number::PL;
  return std::nullopt;
}

// For an adjective term: the noun it agrees with, if any.
std::optional<int> modified_noun(const ParsedSentence& s, const SourceToken& adj) {
  if (adj.head != 0 && base_relation(adj.deprel) == "amod") return adj.head;
  for (int c : s.children(adj.index)) {
    if (base_relation(s.token(c).deprel) == "nsubj") return c;
  }
  return std::nullopt;
}

bool lemma_in(const std::string& lemma, std::initializer_list<const char*> words) {
  auto l = ascii_lower(lemma);
  return std::any_of(words.begin(), words.end(), [&](const char* w) { return l == w; });
}

}  // namespace

InferenceRules InferenceRules::builtin(Language language) {
  InferenceRules r;
  r.language = language;
  std::istringstream in(language == Language::LT ? kLithuanianRules : kGermanRules);
  r.apply(in);
  r.validate();
  return r;
}

InferenceRules InferenceRules::with_overrides(std::istream& in, Language language) {
  InferenceRules r = builtin(language);
  r.apply(in);
  r.validate();
  return r;
}

InferenceRules InferenceRules::with_overrides_file(const std::string& path,
                                                   Language language) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rules file " + path);
  return with_overrides(in, language);
}

void InferenceRules::apply(std::istream& in) {
  std::string section;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no);
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "deprel" && section != "prep" && section != "verb_gov" &&
          section != "inherit") {
        throw ParseError("unknown section [" + section + "]", line_no);
      }
      continue;
    }
    if (section.empty()) throw ParseError("entry outside of a section", line_no);

    auto eq = line.find('=');
    std::string key = ascii_lower(trim(line.substr(0, eq)));
    std::string value = eq == std::string_view::npos ? "" : std::string(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError("empty key", line_no);

    if (section == "inherit") {
      if (value == "-") {
        inherit_deprels.erase(key);
      } else {
        inherit_deprels.insert(key);
      }
      continue;
    }
    auto& table = section == "deprel"   ? deprel_case
                  : section == "prep"   ? preposition_case
                                        : verb_government;
    if (value == "-") {
      table.erase(key);
      continue;
    }
    auto c = parse_case(value);
    if (!c) throw ParseError("unknown case '" + value + "'", line_no);
    table[key] = *c;
  }
}

void InferenceRules::validate() const {
  if (language != Language::DE) return;
  auto check = [](const std::map<std::string, Case>& table, const char* name) {
    for (const auto& [k, c] : table) {
      if (c == Case::INS || c == Case::LOC || c == Case::VOC) {
        throw ValidationError(std::string("German ") + name + " rule '" + k +
                              "' maps to " + std::string(to_string(c)));
      }
    }
  };
  check(deprel_case, "deprel");
  check(preposition_case, "prep");
  check(verb_government, "verb_gov");
}

bool TermOccurrence::contains(int index) const {
  return std::find(span.begin(), span.end(), index) != span.end();
}

TermOccurrence single_token_occurrence(const ParsedSentence& sentence, int index) {
  return TermOccurrence{&sentence, {index}, index};
}

std::optional<Case> infer_case(const TermOccurrence& occ, const InferenceRules& rules) {
  const auto& h = occ.head_token();
  if (!is_noun(h)) {
    throw UnsupportedPosError("case inference needs a NOUN/PROPN head, got '" + h.upos +
                              "'");
  }
  return case_for(*occ.sentence, occ.span, occ.head, rules, 0);
}

MorphTag infer_nominal_tag(const TermOccurrence& occ, const std::string& target_lemma,
                           const Lexicon* lexicon, const lt::DeclensionTable* declension,
                           const InferenceRules& rules) {
  const ParsedSentence& s = *occ.sentence;
  const SourceToken& h = occ.head_token();
  if (!is_noun(h) && h.upos != "ADJ") {
    throw UnsupportedPosError("nominal tag inference needs NOUN/PROPN/ADJ, got '" +
                              h.upos + "'");
  }
  MorphTag tag = tag_from_ud_feats(h.upos, {});

  if (tag.pos == Pos::ADJ) {
    if (auto noun = modified_noun(s, h)) {
      const SourceToken& n = s.token(*noun);
      tag.number = number_of(n);
      if (base_relation(h.deprel) != "amod") {
        tag.case_ = Case::NOM;  // predicative: agrees with the subject
      } else if (is_noun(n)) {
        tag.case_ = infer_case(single_token_occurrence(s, *noun), rules);
      }
    } else {
      tag.number = number_of(h);
      tag.case_ = case_for(s, occ.span, occ.head, rules, 0);
    }
    tag.strength = infer_german_strength(occ, rules);
    return tag;
  }

  tag.number = number_of(h);
  tag.case_ = infer_case(occ, rules);
  if (lexicon) tag.gender = lexicon->gender_of(target_lemma);
  if (!tag.gender && declension && rules.language == Language::LT) {
    if (auto cl = declension->classify(target_lemma)) tag.gender = cl->cls->gender;
  }
  return tag;
}

MorphTag infer_verbal_tag(const TermOccurrence& occ, const InferenceRules&) {
  const ParsedSentence& s = *occ.sentence;
  const SourceToken& v = occ.head_token();
  if (v.upos != "VERB" && v.upos != "AUX") {
    throw UnsupportedPosError("verbal tag inference needs VERB/AUX, got '" + v.upos + "'");
  }
  MorphTag tag = tag_from_ud_feats("VERB", v.feats);
  // Subject agreement comes from the subject, not the verb form.
  tag.person.reset();
  tag.number.reset();

  for (int c : s.children(v.index)) {
    const SourceToken& aux = s.token(c);
    if (base_relation(aux.deprel) != "aux") continue;
    if (lemma_in(aux.lemma, {"will", "shall"})) {
      tag.tense = Tense::FUT;
    } else if (lemma_in(aux.lemma, {"would"})) {
      tag.mood = Mood::COND;
    } else if (lemma_in(aux.lemma, {"have"}) &&
               feature(v.feats, "VerbForm") == "Part") {
      tag.tense = Tense::PST;
    } else if (!tag.tense) {
      MorphTag aux_tag = tag_from_ud_feats("AUX", aux.feats);
      tag.tense = aux_tag.tense;
      if (!tag.mood) tag.mood = aux_tag.mood;
    }
  }

  for (int c : s.children(v.index)) {
    const SourceToken& subj = s.token(c);
    if (base_relation(subj.deprel) != "nsubj") continue;
    tag.number = number_of(subj);
    MorphTag st = tag_from_ud_feats("VERB", subj.feats);
    tag.person = st.person;
    if (!tag.person && is_noun(subj)) tag.person = Person::THIRD;
    break;
  }
  return tag;
}

std::optional<Strength> infer_german_strength(const TermOccurrence& occ,
                                              const InferenceRules& rules) {
  if (rules.language != Language::DE) return std::nullopt;
  const ParsedSentence& s = *occ.sentence;
  const SourceToken& adj = occ.head_token();
  if (adj.upos != "ADJ") {
    throw UnsupportedPosError("strength inference needs an ADJ head, got '" + adj.upos +
                              "'");
  }
  int noun = adj.index;
  if (auto n = modified_noun(s, adj); n && base_relation(adj.deprel) == "amod") noun = *n;

  for (int c : s.children(noun)) {
    const SourceToken& d = s.token(c);
    const std::string rel = base_relation(d.deprel);
    if (d.deprel == "nmod:poss" && d.upos == "PRON") return Strength::MIXED;
    if (rel != "det") continue;
    if (feature(d.feats, "Poss") == "Yes" || feature(d.feats, "Definite") == "Ind" ||
        lemma_in(d.lemma, {"a", "an", "no", "my", "your", "his", "her", "its", "our",
                           "their"})) {
      return Strength::MIXED;
    }
    if (feature(d.feats, "Definite") == "Def" || feature(d.feats, "PronType") == "Dem" ||
        lemma_in(d.lemma, {"the", "this", "that", "these", "those", "every", "each",
                           "which"})) {
      return Strength::WEAK;
    }
  }
  return Strength::STRONG;
}

}  // namespace terminflect
