#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "terminflect/morphtag.h"

namespace terminflect {

struct LexiconEntry {
  std::string lemma;
  std::string form;
  MorphTag tag;

  bool operator==(const LexiconEntry&) const = default;
};

struct LexiconLoadReport {
  std::size_t entries = 0;
  std::vector<std::string> warnings;
};

// Morphological dictionary: (lemma, tag) -> forms, form -> lemmas, and the
// inherent gender of noun lemmas. Immutable once built.
class Lexicon {
 public:
  explicit Lexicon(Language language) : language_(language) {}
  Lexicon(Language language, std::vector<LexiconEntry> entries);

  Language language() const { return language_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool contains_lemma(const std::string& lemma) const;

  // Exact-tag matches in file order; when there are none, entries whose tag
  // is subsumed by `tag` (unset query slots act as wildcards). Duplicate
  // forms are reported once.
  std::vector<std::string> lookup(const std::string& lemma, const MorphTag& tag) const;

  // Parts of speech the lemma's entries carry.
  std::set<Pos> pos_of(const std::string& lemma) const;

  // Every distinct form recorded for `lemma`, in file order.
  std::vector<std::string> forms_of(const std::string& lemma) const;

  // Gender taken from the lemma's noun entries. Unset when the lemma is
  // unknown, has no gendered noun entries, or the entries disagree.
  std::optional<Gender> gender_of(const std::string& lemma) const;

  // Case-sensitive reverse lookup.
  std::set<std::string> lemmas_of_form(const std::string& form) const;

  // Lemmas whose noun entries carry more than one gender.
  const std::set<std::string>& gender_conflicts() const { return gender_conflicts_; }

  // Adds entries after construction, e.g. when merging several files.
  void append(const std::vector<LexiconEntry>& more);

 private:
  void index_from(std::size_t first);

  Language language_;
  std::vector<LexiconEntry> entries_;
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_lemma_tag_;
  std::map<std::string, std::vector<std::size_t>> by_lemma_;
  std::map<std::string, std::vector<std::size_t>> by_form_;
  std::map<std::string, std::set<Gender>> genders_;
  std::set<std::string> gender_conflicts_;
};

// Reads `lemma<TAB>form<TAB>TAG` rows; '#' lines and blank lines are
// ignored. Throws ParseError with the line number on malformed rows.
Lexicon read_lexicon(std::istream& in, Language language,
                     LexiconLoadReport* report = nullptr);

Lexicon load_lexicon(const std::string& path, Language language,
                     LexiconLoadReport* report = nullptr);

void dump_lexicon(std::ostream& out, const Lexicon& lexicon);

}  // namespace terminflect
