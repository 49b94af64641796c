#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace terminflect {

// Morphological features of one token, e.g. {"Number": "Sing"}.
// Multi-valued features ("Case=Acc,Nom") keep the raw value string.
using Features = std::map<std::string, std::string>;

std::optional<std::string> feature(const Features& feats, const std::string& key);

// One syntactic word of a CoNLL-U sentence.
struct SourceToken {
  int index = 0;  // 1-based
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;  // kept only for re-serialization
  Features feats;
  int head = 0;  // 0 = root
  std::string deprel;
  std::string deps;
  std::string misc;
};

struct ParsedSentence {
  std::vector<SourceToken> tokens;
  std::optional<std::string> doc_id;
  std::string sent_id;

  std::size_t size() const { return tokens.size(); }
  // index is 1-based.
  const SourceToken& token(int index) const { return tokens.at(index - 1); }
  int root_index() const;
  // Direct dependents of `index`, in surface order.
  std::vector<int> children(int index) const;
  std::vector<std::string> surface_forms() const;
};

// Parses CoNLL-U from `in`. Multiword-token lines ("3-4") and empty nodes
// ("5.1") are skipped. Sentences without a "# newdoc id" comment inherit
// `default_doc_id`; sentences without "# sent_id" get their 1-based ordinal.
// Throws ParseError (with line number) or ValidationError (naming sent_id).
std::vector<ParsedSentence> parse_conllu(
    std::istream& in, const std::optional<std::string>& default_doc_id = {});

std::vector<ParsedSentence> parse_conllu_file(const std::string& path);

// Tree checks: contiguous ids from 1, heads in range, one root, acyclic.
void validate_sentence(const ParsedSentence& sentence);

// All tokens whose head chain reaches `index`, excluding `index` itself,
// in surface order.
std::vector<SourceToken> subtree_tokens(const ParsedSentence& sentence, int index);

void write_conllu(std::ostream& out, const std::vector<ParsedSentence>& sentences);

std::string format_features(const Features& feats);

}  // namespace terminflect
