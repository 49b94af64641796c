#include "terminflect/suite_builder.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <stdexcept>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

bool has_letter(const std::string& tok) {
  return std::any_of(tok.begin(), tok.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u >= 0x80;
  });
}

bool is_upper_ascii(char c) { return c >= 'A' && c <= 'Z'; }

bool is_acronym(const std::string& tok) {
  return tok.size() > 1 && std::all_of(tok.begin(), tok.end(), [](char c) {
           return is_upper_ascii(c) || (c >= '0' && c <= '9');
         }) &&
         std::any_of(tok.begin(), tok.end(), is_upper_ascii);
}

struct TermStats {
  std::size_t tf = 0;
  std::size_t upper = 0;
  std::size_t acronym = 0;
  std::vector<std::size_t> occurrences;  // sentence index per occurrence
  std::set<std::size_t> sentences;
  std::set<std::string> left, right;
  std::size_t left_n = 0, right_n = 0;
  double score = 0;
  double casing = 0;
};

}  // namespace

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = {
      "'s",    "a",     "about", "above", "after", "again", "against", "all",   "also",
      "am",    "an",    "and",   "any",   "are",   "as",    "at",      "be",    "been",
      "before", "being", "below", "between", "both", "but",  "by",      "can",   "could",
      "did",   "do",    "does",  "doing", "down",  "during", "each",   "else",  "few",
      "for",   "from",  "further", "had", "has",   "have",  "having",  "he",    "her",
      "here",  "hers",  "herself", "him", "himself", "his", "how",     "i",     "if",
      "in",    "into",  "is",    "it",    "its",   "itself", "just",   "may",   "me",
      "might", "more",  "most",  "must",  "my",    "myself", "no",     "nor",   "not",
      "now",   "of",    "off",   "on",    "once",  "only",  "or",      "other", "our",
      "ours",  "ourselves", "out", "over", "own",  "same",  "she",     "should", "so",
      "some",  "such",  "than",  "that",  "the",   "their", "theirs",  "them",  "themselves",
      "then",  "there", "these", "they",  "this",  "those", "through", "to",    "too",
      "under", "until", "up",    "us",    "very",  "was",   "we",      "were",  "what",
      "when",  "where", "which", "while", "who",   "whom",  "why",     "will",  "with",
      "would", "you",   "your",  "yours", "yourself", "yourselves"};
  return words;
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword list " + path);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto w = trim(line);
    if (!w.empty() && w.front() != '#') out.insert(ascii_lower(w));
  }
  return out;
}

std::vector<KeyphraseCandidate> extract_keyphrases(
    const std::vector<std::vector<std::string>>& sentences, std::size_t max_n,
    std::size_t top_k, const std::set<std::string>& stopwords) {
  if (top_k == 0 || max_n == 0) return {};

  std::map<std::string, TermStats> terms;
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const auto& sent = sentences[si];
    for (std::size_t ti = 0; ti < sent.size(); ++ti) {
      const std::string& tok = sent[ti];
      if (!has_letter(tok)) continue;
      auto& st = terms[ascii_lower(tok)];
      ++st.tf;
      st.occurrences.push_back(si);
      st.sentences.insert(si);
      if (is_acronym(tok)) {
        ++st.acronym;
      } else if (ti > 0 && is_upper_ascii(tok.front())) {
        ++st.upper;
      }
      if (ti > 0 && has_letter(sent[ti - 1])) {
        st.left.insert(ascii_lower(sent[ti - 1]));
        ++st.left_n;
      }
      if (ti + 1 < sent.size() && has_letter(sent[ti + 1])) {
        st.right.insert(ascii_lower(sent[ti + 1]));
        ++st.right_n;
      }
    }
  }
  if (terms.empty()) return {};

  double mean = 0;
  std::size_t max_tf = 0;
  for (const auto& [w, st] : terms) {
    mean += static_cast<double>(st.tf);
    max_tf = std::max(max_tf, st.tf);
  }
  mean /= static_cast<double>(terms.size());
  double var = 0;
  for (const auto& [w, st] : terms) var += std::pow(static_cast<double>(st.tf) - mean, 2);
  const double sd = std::sqrt(var / static_cast<double>(terms.size()));
  const double n_sent = static_cast<double>(sentences.size());

  // Words with many distinct neighbours (function words) get a high
  // relatedness, which dampens the frequency and spread rewards.
  auto ratio = [](const std::set<std::string>& distinct, std::size_t n) {
    return n ? static_cast<double>(distinct.size()) / static_cast<double>(n) : 0.0;
  };
  for (auto& [w, st] : terms) {
    const double tf = static_cast<double>(st.tf);
    st.casing = static_cast<double>(std::max(st.upper, st.acronym)) / (1.0 + std::log(tf));
    const auto& occ = st.occurrences;  // already ascending
    const double median = occ.size() % 2
                              ? static_cast<double>(occ[occ.size() / 2])
                              : 0.5 * static_cast<double>(occ[occ.size() / 2 - 1] +
                                                          occ[occ.size() / 2]);
    const double pos = std::log(std::log(3.0 + median));
    const double spread = static_cast<double>(st.sentences.size()) / n_sent;
    const double freq = tf / (mean + sd);
    const double rel = 1.0 + (ratio(st.left, st.left_n) + ratio(st.right, st.right_n)) *
                                 tf / static_cast<double>(max_tf);
    st.score = rel * pos / (st.casing + freq / rel + spread / rel);
  }

  struct PhraseAcc {
    std::size_t n = 0;
    std::size_t tf = 0;
    std::size_t first = 0;
    std::set<std::size_t> sentences;
    std::vector<std::string> words;
  };
  std::map<std::string, PhraseAcc> phrases;
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const auto& sent = sentences[si];
    for (std::size_t start = 0; start < sent.size(); ++start) {
      std::vector<std::string> words;
      for (std::size_t len = 1; len <= max_n && start + len <= sent.size(); ++len) {
        const std::string& tok = sent[start + len - 1];
        if (!has_letter(tok)) break;
        words.push_back(ascii_lower(tok));
        if (stopwords.count(words.front()) || stopwords.count(words.back())) continue;
        auto key = join(words, " ");
        auto& acc = phrases[key];
        if (acc.tf == 0) {
          acc.n = len;
          acc.first = si;
          acc.words = words;
        }
        ++acc.tf;
        acc.sentences.insert(si);
      }
    }
  }

  std::vector<KeyphraseCandidate> out;
  for (const auto& [key, acc] : phrases) {
    double prod = 1.0;
    double sum = 0.0;
    double casing = 0.0;
    for (const auto& w : acc.words) {
      const auto& st = terms.at(w);
      prod *= st.score;
      sum += st.score;
      casing += st.casing;
    }
    KeyphraseCandidate c;
    c.phrase = key;
    c.n = acc.n;
    c.score = prod / (1.0 + sum);
    c.features = {casing / static_cast<double>(acc.words.size()),
                  static_cast<double>(acc.first), static_cast<double>(acc.tf),
                  static_cast<double>(acc.sentences.size()) / n_sent};
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.phrase < b.phrase;
  });
  if (out.size() > top_k) out.resize(top_k);
  return out;
}

PhraseCounts read_phrase_counts(std::istream& in) {
  PhraseCounts counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 2) throw ParseError("expected phrase<TAB>count", line_no);
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(std::string(trim(cols[1])), &used);
      if (used != trim(cols[1]).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad count '" + cols[1] + "'", line_no);
    }
    counts[ascii_lower(trim(cols[0]))] += value;
  }
  return counts;
}

PhraseCounts load_phrase_counts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open counts file " + path);
  return read_phrase_counts(in);
}

std::vector<KeyphraseCandidate> frequency_filter(
    const std::vector<KeyphraseCandidate>& candidates, const PhraseCounts& counts,
    std::size_t threshold) {
  std::vector<KeyphraseCandidate> out;
  for (const auto& c : candidates) {
    auto it = counts.find(c.phrase);
    std::size_t n = it == counts.end() ? 0 : it->second;
    if (n <= threshold) out.push_back(c);
  }
  return out;
}

void BilingualDict::add(const std::string& source,
                        const std::vector<std::string>& translations) {
  auto& list = entries_[ascii_lower(trim(source))];
  for (const auto& t : translations) {
    if (std::find(list.begin(), list.end(), t) == list.end()) list.push_back(t);
  }
}

const std::vector<std::string>* BilingualDict::find(const std::string& source) const {
  auto it = entries_.find(ascii_lower(trim(source)));
  return it == entries_.end() ? nullptr : &it->second;
}

BilingualDict read_bilingual_dict(std::istream& in) {
  BilingualDict dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 2 || trim(cols[0]).empty()) {
      throw ParseError("expected source<TAB>translation1|translation2", line_no);
    }
    std::vector<std::string> translations;
    for (const auto& t : split(cols[1], '|')) {
      auto tt = trim(t);
      if (!tt.empty()) translations.emplace_back(tt);
    }
    if (translations.empty()) throw ParseError("no translations", line_no);
    dict.add(cols[0], translations);
  }
  return dict;
}

BilingualDict load_bilingual_dict(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dictionary " + path);
  return read_bilingual_dict(in);
}

std::vector<EvalSuiteEntry> build_suite(const std::vector<ParallelSentence>& corpus,
                                        const BilingualDict& dict,
                                        const Resources& resources,
                                        const PhraseCounts& counts,
                                        const SuiteBuildOptions& options,
                                        std::vector<std::string>* log) {
  auto note = [log](std::string msg) {
    if (log) log->push_back(std::move(msg));
  };
  const auto& stopwords = options.stopwords ? *options.stopwords : default_stopwords();

  std::vector<std::string> doc_order;
  std::map<std::string, std::vector<std::size_t>> docs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto [it, fresh] = docs.try_emplace(corpus[i].doc_id);
    if (fresh) doc_order.push_back(corpus[i].doc_id);
    it->second.push_back(i);
  }

  struct Annotated {
    std::vector<TermConstraint> constraints;
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // source token ranges
  };
  std::vector<Annotated> annotated(corpus.size());

  for (const auto& doc_id : doc_order) {
    const auto& members = docs[doc_id];
    std::vector<std::vector<std::string>> src_tokens;
    std::vector<std::vector<std::string>> src_lower;
    for (auto i : members) {
      src_tokens.push_back(split_whitespace(corpus[i].source));
      std::vector<std::string> lower;
      for (const auto& t : src_tokens.back()) lower.push_back(ascii_lower(t));
      src_lower.push_back(std::move(lower));
    }

    // Keyphrases come from each sentence on its own; the union is then
    // annotated across the whole document.
    std::vector<KeyphraseCandidate> keyphrases;
    std::set<std::string> seen;
    for (const auto& tokens : src_tokens) {
      auto kps = frequency_filter(
          extract_keyphrases({tokens}, options.max_n, options.top_k, stopwords), counts,
          options.threshold);
      for (auto& kp : kps) {
        if (seen.insert(kp.phrase).second) keyphrases.push_back(std::move(kp));
      }
    }

    for (const auto& kp : keyphrases) {
      const auto* translations = dict.find(kp.phrase);
      if (!translations) {
        note("doc " + doc_id + ": no dictionary entry for '" + kp.phrase + "'");
        continue;
      }
      const std::string& lemma = translations->front();
      const auto forms = surface_forms(lemma, resources);
      const auto phrase = split_whitespace(kp.phrase);

      for (std::size_t k = 0; k < members.size(); ++k) {
        const auto& sent = corpus[members[k]];
        auto pos = find_sequence(src_lower[k], phrase);
        if (pos == std::string::npos) continue;

        auto& ann = annotated[members[k]];
        const std::size_t end = pos + phrase.size();
        bool clash = std::any_of(ann.spans.begin(), ann.spans.end(), [&](const auto& s) {
          return pos < s.second && s.first < end;
        });
        bool same_lemma = std::any_of(ann.constraints.begin(), ann.constraints.end(),
                                      [&](const auto& c) { return c.tgt_lemma == lemma; });
        if (clash || same_lemma) continue;

        auto ref_tokens = split_whitespace(sent.reference);
        std::optional<std::string> best;
        std::size_t best_pos = std::string::npos;
        for (const auto& f : forms) {
          auto fp = find_sequence(ref_tokens, split_whitespace(f));
          if (fp == std::string::npos) continue;
          if (fp < best_pos || (fp == best_pos && f.size() > best->size())) {
            best = f;
            best_pos = fp;
          }
        }
        if (!best) {
          note("sentence " + sent.sent_id + ": no form of '" + lemma + "' in reference");
          continue;
        }
        std::vector<std::string> surface(src_tokens[k].begin() + pos,
                                         src_tokens[k].begin() + end);
        ann.constraints.push_back({join(surface, " "), lemma, *best, sent.doc_id});
        ann.spans.emplace_back(pos, end);
      }
    }
  }

  std::vector<EvalSuiteEntry> suite;
  for (const auto& doc_id : doc_order) {
    for (auto i : docs[doc_id]) {
      auto& ann = annotated[i];
      if (ann.constraints.empty()) continue;
      std::vector<std::size_t> order(ann.constraints.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return ann.spans[a].first < ann.spans[b].first;
      });
      EvalSuiteEntry e{corpus[i].sent_id, corpus[i].doc_id, corpus[i].source,
                       corpus[i].reference, {}};
      for (auto o : order) e.constraints.push_back(ann.constraints[o]);
      validate_entry(e);
      suite.push_back(std::move(e));
    }
  }
  return suite;
}

SuiteStats suite_stats(const std::vector<EvalSuiteEntry>& suite) {
  SuiteStats s;
  s.sentences = suite.size();
  for (const auto& e : suite) {
    s.constraints += e.constraints.size();
    for (const auto& c : e.constraints) {
      if (requires_inflection(c)) ++s.inflected;
    }
  }
  return s;
}

}  // namespace terminflect
