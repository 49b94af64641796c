#pragma once

#include <optional>
#include <string>
#include <vector>

#include "terminflect/pipeline.h"

namespace terminflect {

struct EvalSuiteEntry {
  std::string sent_id;
  std::optional<std::string> doc_id;
  std::string source;
  std::string reference;
  std::vector<TermConstraint> constraints;  // ref_inflected set on each
};

// Throws ValidationError unless every constraint has a reference form that
// occurs as a token run of the (whitespace-tokenized) reference.
void validate_entry(const EvalSuiteEntry& entry);

// True iff the reference form differs from the lemma. Throws
// std::invalid_argument when the constraint has no reference form.
bool requires_inflection(const TermConstraint& constraint);

// {lemma} + lexicon forms of the lemma + the rule paradigm for Lithuanian
// nominals, without duplicates, in that order.
std::vector<std::string> surface_forms(const std::string& lemma, const Resources& resources);

// Any surface form of the lemma appears as a token run of the hypothesis.
bool lemma_usage(const std::string& hypothesis, const TermConstraint& constraint,
                 const Resources& resources);

// The reference form appears as a token run of the hypothesis.
bool term_usage(const std::string& hypothesis, const TermConstraint& constraint);

// All / No-Inf / Inf buckets.
template <typename T>
struct Buckets {
  T all{};
  T no_inf{};
  T inf{};
};

struct ConstraintOutcome {
  TermConstraint constraint;
  bool inflected = false;
  bool lemma_used = false;
  bool term_used = false;
};

struct SentenceOutcome {
  std::string sent_id;
  std::vector<ConstraintOutcome> constraints;
};

struct EvalReport {
  // Percentages in [0, 100]; unset for empty buckets.
  Buckets<std::optional<double>> lemma_usage;
  Buckets<std::optional<double>> term_usage;
  Buckets<std::size_t> counts;
  Buckets<std::size_t> lemma_hits;
  Buckets<std::size_t> term_hits;
  std::vector<SentenceOutcome> per_sentence;
  // Reference forms outside their lemma's known surface forms.
  std::vector<std::string> coverage_gaps;
};

// Scores hypotheses aligned index-by-index with the suite. Throws
// std::invalid_argument on an empty suite or a length mismatch.
EvalReport evaluate(const std::vector<EvalSuiteEntry>& suite,
                    const std::vector<std::string>& hypotheses, const Resources& resources);

// The six-cell table, one row per metric.
std::string format_report_table(const EvalReport& report);

}  // namespace terminflect
