#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "terminflect/evaluation.h"
#include "terminflect/pipeline.h"

namespace terminflect {

struct KeyphraseFeatures {
  double casing = 0;     // mean term casing score
  double position = 0;   // 0-based index of the first sentence containing the phrase
  double frequency = 0;  // occurrences of the phrase
  double spread = 0;     // fraction of sentences containing the phrase
};

struct KeyphraseCandidate {
  std::string phrase;  // lowercased tokens joined by single spaces
  std::size_t n = 1;
  double score = 0;  // lower is more keyphrase-like
  KeyphraseFeatures features;
};

const std::set<std::string>& default_stopwords();
std::set<std::string> load_stopwords(const std::string& path);

// Ranks n-grams (n <= max_n) of a tokenized text with a simplified
// YAKE-style scorer. Each word gets
//
//   S(w) = rel * ln(ln(3 + median_sentence)) / (casing + freq / rel + spread / rel)
//
// where median_sentence is the median sentence index over w's occurrences,
// casing = max(capitalized non-initial, all-caps count) / (1 + ln tf),
// freq = tf / (mean_tf + sd_tf), spread = fraction of sentences containing w,
// and rel = 1 + (distinct left + distinct right neighbour ratios) * tf / max_tf.
// A phrase scores prod S(w) / (1 + sum S(w)). Phrases may not
// cross tokens without letters, nor start or end with a stopword.
// Returns the top_k lowest-scoring phrases, ties broken by phrase text.
std::vector<KeyphraseCandidate> extract_keyphrases(
    const std::vector<std::vector<std::string>>& sentences, std::size_t max_n,
    std::size_t top_k, const std::set<std::string>& stopwords = default_stopwords());

using PhraseCounts = std::map<std::string, std::size_t>;

// `phrase<TAB>count` rows; phrases are lowercased.
PhraseCounts read_phrase_counts(std::istream& in);
PhraseCounts load_phrase_counts(const std::string& path);

// Keeps candidates seen at most `threshold` times (absent counts as 0).
std::vector<KeyphraseCandidate> frequency_filter(
    const std::vector<KeyphraseCandidate>& candidates, const PhraseCounts& counts,
    std::size_t threshold);

// Source phrase -> target lemmas, best translation first.
class BilingualDict {
 public:
  void add(const std::string& source, const std::vector<std::string>& translations);
  // Case-insensitive on the source side; null when absent.
  const std::vector<std::string>* find(const std::string& source) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

// `source phrase<TAB>translation1|translation2|...` rows.
BilingualDict read_bilingual_dict(std::istream& in);
BilingualDict load_bilingual_dict(const std::string& path);

struct ParallelSentence {
  std::string doc_id;
  std::string sent_id;
  std::string source;     // whitespace-tokenized
  std::string reference;  // whitespace-tokenized
};

struct SuiteBuildOptions {
  std::size_t max_n = 3;
  std::size_t top_k = 20;
  std::size_t threshold = 100;
  const std::set<std::string>* stopwords = nullptr;  // null: built-in list
};

// Extracts keyphrases from each source sentence and drops frequent ones.
// Each surviving phrase is translated with the dictionary's top lemma. Every
// sentence of the same document is then annotated when its source contains
// the phrase and its reference contains a surface form of the lemma. Only annotated sentences are returned, in input order.
// Dictionary misses and other skips are appended to `log` when given.
std::vector<EvalSuiteEntry> build_suite(const std::vector<ParallelSentence>& corpus,
                                        const BilingualDict& dict,
                                        const Resources& resources,
                                        const PhraseCounts& counts,
                                        const SuiteBuildOptions& options,
                                        std::vector<std::string>* log = nullptr);

struct SuiteStats {
  std::size_t sentences = 0;
  std::size_t constraints = 0;
  std::size_t inflected = 0;

  bool operator==(const SuiteStats&) const = default;
};

SuiteStats suite_stats(const std::vector<EvalSuiteEntry>& suite);

}  // namespace terminflect
