#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "terminflect/conllu.h"
#include "terminflect/lexicon.h"
#include "terminflect/lt_declension.h"
#include "terminflect/morphtag.h"
#include "terminflect/tag_inference.h"

namespace terminflect {

struct TermConstraint {
  std::string src_term;
  std::string tgt_lemma;
  std::optional<std::string> ref_inflected;
  std::optional<std::string> doc_id;

  bool operator==(const TermConstraint&) const = default;
};

enum class Provenance { LEXICON, RULE, PASSTHROUGH };
std::string_view to_string(Provenance p);

struct InflectionResult {
  TermConstraint constraint;
  std::string form;
  std::optional<MorphTag> tag;  // unset when the term was not found
  Provenance provenance = Provenance::PASSTHROUGH;
  std::optional<TermOccurrence> occurrence;
  // Other lexicon forms matching the same tag, in file order.
  std::vector<std::string> alternatives;
  std::vector<std::string> diagnostics;
};

// Everything the engine reads. Non-owning; lexicon and declension may be
// null (no dictionary / no rule fallback).
struct Resources {
  Language language = Language::LT;
  const Lexicon* lexicon = nullptr;
  const lt::DeclensionTable* declension = nullptr;
  const InferenceRules* rules = nullptr;
};

// Occurrences of `src_term` in `sentence`: case-insensitive match on surface
// forms, or on lemmas when no surface match exists. Non-overlapping, left to
// right. The head of a span is its token whose own head lies outside it.
std::vector<TermOccurrence> match_term(const ParsedSentence& sentence,
                                       const std::string& src_term);

// Predicts the target form of one constraint: locate the term, infer its
// tag, look it up, fall back to Lithuanian declension rules for nouns, and
// finally copy the lemma.
InflectionResult inflect(const ParsedSentence& sentence, const TermConstraint& constraint,
                         const Resources& resources);

struct BatchItem {
  const ParsedSentence* sentence = nullptr;  // null: sentence missing from input
  std::vector<TermConstraint> constraints;
};

// One result per constraint, in input order. Each constraint is inflected
// independently; `threads` > 1 spreads items over worker threads.
std::vector<InflectionResult> inflect_batch(const std::vector<BatchItem>& items,
                                            const Resources& resources,
                                            unsigned threads = 1);

enum class AnnotationScheme { APPEND, REPLACE };
std::optional<AnnotationScheme> parse_scheme(std::string_view s);

inline constexpr std::string_view kTermOpen = "<term>";
inline constexpr std::string_view kTermSep = "<sep>";
inline constexpr std::string_view kTermClose = "</term>";

// Keeps results with an occurrence, preferring the leftmost and then the
// longest span, and drops any that overlap an already kept span.
std::vector<const InflectionResult*> select_non_overlapping(
    const std::vector<const InflectionResult*>& results);

// Space-joined source tokens with each result's span either followed by
// `<sep> form` inside `<term> ... </term>` (APPEND) or replaced by the
// form (REPLACE). Throws ValidationError on overlapping spans or results
// that belong to another sentence.
std::string annotate_source(const ParsedSentence& sentence,
                            const std::vector<const InflectionResult*>& results,
                            AnnotationScheme scheme);

}  // namespace terminflect
