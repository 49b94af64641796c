#include "terminflect/pipeline.h"

#include <algorithm>
#include <future>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

std::vector<TermOccurrence> match_on(const ParsedSentence& s,
                                     const std::vector<std::string>& term,
                                     std::string SourceToken::*field) {
  std::vector<TermOccurrence> out;
  const std::size_t n = term.size();
  std::size_t i = 0;
  while (n && i + n <= s.size()) {
    bool hit = true;
    for (std::size_t k = 0; k < n && hit; ++k) {
      hit = ascii_lower(s.tokens[i + k].*field) == term[k];
    }
    if (!hit) {
      ++i;
      continue;
    }
    TermOccurrence occ;
    occ.sentence = &s;
    for (std::size_t k = 0; k < n; ++k) occ.span.push_back(static_cast<int>(i + k + 1));
    occ.head = occ.span.front();
    for (int idx : occ.span) {
      if (!occ.contains(s.token(idx).head)) {
        occ.head = idx;
        break;
      }
    }
    out.push_back(std::move(occ));
    i += n;
  }
  return out;
}

InflectionResult passthrough(const TermConstraint& c, std::string diagnostic) {
  InflectionResult r;
  r.constraint = c;
  r.form = c.tgt_lemma;
  r.provenance = Provenance::PASSTHROUGH;
  if (!diagnostic.empty()) r.diagnostics.push_back(std::move(diagnostic));
  return r;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::LEXICON: return "LEXICON";
    case Provenance::RULE: return "RULE";
    case Provenance::PASSTHROUGH: return "PASSTHROUGH";
  }
  return "?";
}

namespace {

const InferenceRules& builtin_rules(Language language) {
  static const InferenceRules lt = InferenceRules::builtin(Language::LT);
  static const InferenceRules de = InferenceRules::builtin(Language::DE);
  return language == Language::LT ? lt : de;
}

}  // namespace

std::optional<AnnotationScheme> parse_scheme(std::string_view s) {
  if (s == "append" || s == "APPEND") return AnnotationScheme::APPEND;
  if (s == "replace" || s == "REPLACE") return AnnotationScheme::REPLACE;
  return std::nullopt;
}

std::vector<TermOccurrence> match_term(const ParsedSentence& sentence,
                                       const std::string& src_term) {
  std::vector<std::string> term;
  for (const auto& t : split_whitespace(src_term)) term.push_back(ascii_lower(t));
  auto out = match_on(sentence, term, &SourceToken::form);
  if (out.empty()) out = match_on(sentence, term, &SourceToken::lemma);
  return out;
}

InflectionResult inflect(const ParsedSentence& sentence, const TermConstraint& constraint,
                         const Resources& res) {
  auto occs = match_term(sentence, constraint.src_term);
  if (occs.empty()) return passthrough(constraint, "term not found in source");

  const TermOccurrence& occ = occs.front();
  const std::string& upos = occ.head_token().upos;
  const InferenceRules& rules = res.rules ? *res.rules : builtin_rules(res.language);

  MorphTag tag;
  if (upos == "NOUN" || upos == "PROPN" || upos == "ADJ") {
    tag = infer_nominal_tag(occ, constraint.tgt_lemma, res.lexicon, res.declension, rules);
  } else if (upos == "VERB" || upos == "AUX") {
    tag = infer_verbal_tag(occ, rules);
  } else {
    auto r = passthrough(constraint, "unsupported source POS '" + upos + "'");
    r.occurrence = occ;
    return r;
  }

  InflectionResult r;
  r.constraint = constraint;
  r.occurrence = occ;
  r.tag = tag;

  std::vector<std::string> forms;
  if (res.lexicon) {
    forms = res.lexicon->lookup(constraint.tgt_lemma, tag);
    // Dictionaries disagree on common vs proper noun tagging of names.
    if (forms.empty() && (tag.pos == Pos::N || tag.pos == Pos::PROPN)) {
      MorphTag other = tag;
      other.pos = tag.pos == Pos::N ? Pos::PROPN : Pos::N;
      forms = res.lexicon->lookup(constraint.tgt_lemma, other);
    }
  }
  if (!forms.empty()) {
    r.form = forms.front();
    r.alternatives.assign(forms.begin() + 1, forms.end());
    r.provenance = Provenance::LEXICON;
    if (!r.alternatives.empty()) {
      r.diagnostics.push_back("ambiguous lexicon lookup: " +
                              std::to_string(forms.size()) + " forms");
    }
    return r;
  }

  const bool noun = tag.pos == Pos::N || tag.pos == Pos::PROPN;
  if (res.language == Language::LT && noun && res.declension) {
    if (!tag.case_) {
      r.form = constraint.tgt_lemma;
      r.provenance = Provenance::PASSTHROUGH;
      r.diagnostics.push_back("no case rule fired");
      return r;
    }
    if (!tag.number) tag.number = Number::SG;
    r.tag = tag;
    if (auto f = res.declension->decline(constraint.tgt_lemma, *tag.case_, *tag.number,
                                         tag.gender)) {
      r.form = *f;
      r.provenance = Provenance::RULE;
      return r;
    }
    r.diagnostics.push_back("lemma not in lexicon and not declinable");
  } else {
    r.diagnostics.push_back("lemma not in lexicon");
  }
  r.form = constraint.tgt_lemma;
  r.provenance = Provenance::PASSTHROUGH;
  return r;
}

std::vector<InflectionResult> inflect_batch(const std::vector<BatchItem>& items,
                                            const Resources& resources, unsigned threads) {
  auto run_item = [&resources](const BatchItem& item) {
    std::vector<InflectionResult> out;
    for (const auto& c : item.constraints) {
      if (!item.sentence) {
        out.push_back(passthrough(c, "sentence not found in source"));
      } else {
        out.push_back(inflect(*item.sentence, c, resources));
      }
    }
    return out;
  };

  std::vector<std::vector<InflectionResult>> per_item(items.size());
  if (threads <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) per_item[i] = run_item(items[i]);
  } else {
    std::vector<std::future<void>> workers;
    const std::size_t stride = threads;
    for (std::size_t w = 0; w < threads; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < items.size(); i += stride) {
          per_item[i] = run_item(items[i]);
        }
      }));
    }
    for (auto& f : workers) f.get();
  }

  std::vector<InflectionResult> results;
  for (auto& v : per_item) {
    for (auto& r : v) results.push_back(std::move(r));
  }
  return results;
}

std::vector<const InflectionResult*> select_non_overlapping(
    const std::vector<const InflectionResult*>& results) {
  std::vector<const InflectionResult*> candidates;
  for (const auto* r : results) {
    if (r->occurrence) candidates.push_back(r);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto* a, const auto* b) {
    const auto& sa = a->occurrence->span;
    const auto& sb = b->occurrence->span;
    if (sa.front() != sb.front()) return sa.front() < sb.front();
    return sa.size() > sb.size();
  });
  std::vector<const InflectionResult*> kept;
  int covered_until = 0;
  for (const auto* r : candidates) {
    if (r->occurrence->span.front() <= covered_until) continue;
    kept.push_back(r);
    covered_until = r->occurrence->span.back();
  }
  return kept;
}

std::string annotate_source(const ParsedSentence& sentence,
                            const std::vector<const InflectionResult*>& results,
                            AnnotationScheme scheme) {
  std::vector<const InflectionResult*> spans;
  for (const auto* r : results) {
    if (!r->occurrence) continue;
    if (r->occurrence->sentence != &sentence) {
      throw ValidationError("result for '" + r->constraint.src_term +
                            "' belongs to another sentence");
    }
    spans.push_back(r);
  }
  std::sort(spans.begin(), spans.end(), [](const auto* a, const auto* b) {
    return a->occurrence->span.front() < b->occurrence->span.front();
  });
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i]->occurrence->span.front() <= spans[i - 1]->occurrence->span.back()) {
      throw ValidationError("overlapping annotations in sentence " + sentence.sent_id);
    }
  }

  std::vector<std::string> out;
  std::size_t next = 0;
  for (int i = 1; i <= static_cast<int>(sentence.size()); ++i) {
    const InflectionResult* r =
        next < spans.size() && spans[next]->occurrence->span.front() == i ? spans[next]
                                                                          : nullptr;
    if (!r) {
      out.push_back(sentence.token(i).form);
      continue;
    }
    const auto& span = r->occurrence->span;
    if (scheme == AnnotationScheme::APPEND) {
      out.emplace_back(kTermOpen);
      for (int k : span) out.push_back(sentence.token(k).form);
      out.emplace_back(kTermSep);
      out.push_back(r->form);
      out.emplace_back(kTermClose);
    } else {
      out.push_back(r->form);
    }
    i = span.back();
    ++next;
  }
  return join(out, " ");
}

}  // namespace terminflect
