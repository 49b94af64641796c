#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "terminflect/conllu.h"
#include "terminflect/lexicon.h"
#include "terminflect/lt_declension.h"
#include "terminflect/morphtag.h"

namespace terminflect {

// Tables mapping source-side syntax to target-side case.
//
// Rules files are sectioned key/value text:
//
//   [deprel]      obj = ACC        dependency relation of the term head
//   [prep]        with = INS       lemma of an adposition attached to the term
//   [verb_gov]    play = INS       lemma of a verb governing the term as obj
//   [inherit]     appos            relations whose case comes from the head
//
// Keys are matched lowercased. "key = -" removes an inherited entry.
struct InferenceRules {
  Language language = Language::LT;
  std::map<std::string, Case> deprel_case;
  std::map<std::string, Case> preposition_case;
  std::map<std::string, Case> verb_government;
  std::set<std::string> inherit_deprels;

  static InferenceRules builtin(Language language);

  // Built-in rules for `language` with the file's entries applied on top.
  static InferenceRules with_overrides(std::istream& in, Language language);
  static InferenceRules with_overrides_file(const std::string& path, Language language);

  // Throws ValidationError if a table maps to a case the language lacks.
  void validate() const;

  void apply(std::istream& in);
};

// A matched source term: a contiguous token span and its syntactic head.
struct TermOccurrence {
  const ParsedSentence* sentence = nullptr;
  std::vector<int> span;  // 1-based token indices, ascending
  int head = 0;

  const SourceToken& head_token() const { return sentence->token(head); }
  bool contains(int index) const;
  bool operator==(const TermOccurrence& o) const {
    return span == o.span && head == o.head;
  }
};

// Occurrence covering a single token.
TermOccurrence single_token_occurrence(const ParsedSentence& sentence, int index);

// Case of a NOUN/PROPN term. Resolution order: an adposition attached to a
// span token; a governing verb listed in verb_government (obj only); the
// head's relation listed in inherit_deprels (recurse on the governor); the
// relation in deprel_case, tried exactly and then without its subtype.
// Throws UnsupportedPosError for other head POS.
std::optional<Case> infer_case(const TermOccurrence& occ, const InferenceRules& rules);

// Tag for a NOUN/PROPN/ADJ term. Number from the source (for adjectives,
// the modified noun); gender from the lexicon, else from the declension
// class (Lithuanian nouns only); case from infer_case on the noun.
MorphTag infer_nominal_tag(const TermOccurrence& occ, const std::string& target_lemma,
                           const Lexicon* lexicon, const lt::DeclensionTable* declension,
                           const InferenceRules& rules);

// Tag for a VERB/AUX term: tense and mood from the verb (periphrastic
// will/would/have/do auxiliaries included), person and number from nsubj.
MorphTag infer_verbal_tag(const TermOccurrence& occ, const InferenceRules& rules);

// German adjective declension strength from the modified noun's
// determiners. Unset for other languages.
std::optional<Strength> infer_german_strength(const TermOccurrence& occ,
                                              const InferenceRules& rules);

}  // namespace terminflect
