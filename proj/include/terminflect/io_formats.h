#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "terminflect/evaluation.h"
#include "terminflect/pipeline.h"
#include "terminflect/suite_builder.h"

namespace terminflect {

// One line of the constraints JSONL input:
//   {"sent_id": "...", "doc_id": "...", "constraints": [{"src": "...", "lemma": "...", "ref": "..."}]}
struct ConstraintLine {
  std::string sent_id;
  std::optional<std::string> doc_id;
  std::vector<TermConstraint> constraints;
};

std::vector<ConstraintLine> read_constraints_jsonl(std::istream& in);

// {"sent_id", "src", "lemma", "form", "tag", "provenance"} plus
// "alternatives" when the lexicon offered more than one form.
std::string result_to_json_line(const std::string& sent_id, const InflectionResult& result);

// Suite JSONL: {"sent_id", "doc_id", "source", "reference", "constraints": [...]}.
// Entries are validated on read.
std::vector<EvalSuiteEntry> read_suite_jsonl(std::istream& in);
void write_suite_jsonl(std::ostream& out, const std::vector<EvalSuiteEntry>& suite);

std::vector<std::string> read_lines(std::istream& in);

// Report with the Lemma/Term Usage x All/No Inf/Inf structure; empty
// buckets are null.
std::string report_to_json(const EvalReport& report);

// Aligned source/reference line files with optional per-line doc ids.
// Without doc ids the whole corpus is one document. Throws
// ValidationError when line counts differ.
std::vector<ParallelSentence> read_parallel_corpus(std::istream& source,
                                                   std::istream& reference,
                                                   std::istream* doc_ids = nullptr);

}  // namespace terminflect
