#include "terminflect/lexicon.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

void push_unique(std::vector<std::string>& out, const std::string& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

}  // namespace

Lexicon::Lexicon(Language language, std::vector<LexiconEntry> entries)
    : language_(language), entries_(std::move(entries)) {
  index_from(0);
}

void Lexicon::append(const std::vector<LexiconEntry>& more) {
  std::size_t first = entries_.size();
  entries_.insert(entries_.end(), more.begin(), more.end());
  index_from(first);
}

void Lexicon::index_from(std::size_t first) {
  for (std::size_t i = first; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    by_lemma_tag_[{e.lemma, format_unimorph(e.tag)}].push_back(i);
    by_lemma_[e.lemma].push_back(i);
    by_form_[e.form].push_back(i);
    if ((e.tag.pos == Pos::N || e.tag.pos == Pos::PROPN) && e.tag.gender) {
      auto& g = genders_[e.lemma];
      g.insert(*e.tag.gender);
      if (g.size() > 1) gender_conflicts_.insert(e.lemma);
    }
  }
}

bool Lexicon::contains_lemma(const std::string& lemma) const {
  return by_lemma_.count(lemma) > 0;
}

std::vector<std::string> Lexicon::lookup(const std::string& lemma,
                                         const MorphTag& tag) const {
  std::vector<std::string> out;
  if (auto it = by_lemma_tag_.find({lemma, format_unimorph(tag)});
      it != by_lemma_tag_.end()) {
    for (auto i : it->second) push_unique(out, entries_[i].form);
    return out;
  }
  if (auto it = by_lemma_.find(lemma); it != by_lemma_.end()) {
    for (auto i : it->second) {
      if (tag.subsumes(entries_[i].tag)) push_unique(out, entries_[i].form);
    }
  }
  return out;
}

std::vector<std::string> Lexicon::forms_of(const std::string& lemma) const {
  std::vector<std::string> out;
  if (auto it = by_lemma_.find(lemma); it != by_lemma_.end()) {
    for (auto i : it->second) push_unique(out, entries_[i].form);
  }
  return out;
}

std::set<Pos> Lexicon::pos_of(const std::string& lemma) const {
  std::set<Pos> out;
  if (auto it = by_lemma_.find(lemma); it != by_lemma_.end()) {
    for (auto i : it->second) out.insert(entries_[i].tag.pos);
  }
  return out;
}

std::optional<Gender> Lexicon::gender_of(const std::string& lemma) const {
  auto it = genders_.find(lemma);
  if (it == genders_.end() || it->second.size() != 1) return std::nullopt;
  return *it->second.begin();
}

std::set<std::string> Lexicon::lemmas_of_form(const std::string& form) const {
  std::set<std::string> out;
  if (auto it = by_form_.find(form); it != by_form_.end()) {
    for (auto i : it->second) out.insert(entries_[i].lemma);
  }
  return out;
}

Lexicon read_lexicon(std::istream& in, Language language, LexiconLoadReport* report) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3) {
      throw ParseError("expected lemma<TAB>form<TAB>tag, found " +
                           std::to_string(cols.size()) + " columns",
                       line_no);
    }
    if (cols[0].empty() || cols[1].empty()) {
      throw ParseError("empty lemma or form", line_no);
    }
    LexiconEntry e{cols[0], cols[1], {}};
    try {
      e.tag = parse_unimorph(trim(cols[2]));
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what(), line_no);
    }
    entries.push_back(std::move(e));
  }
  Lexicon lex(language, std::move(entries));
  if (report) {
    report->entries = lex.entries().size();
    if (lex.empty()) report->warnings.push_back("lexicon is empty");
    for (const auto& lemma : lex.gender_conflicts()) {
      report->warnings.push_back("conflicting genders for lemma '" + lemma + "'");
    }
  }
  return lex;
}

Lexicon load_lexicon(const std::string& path, Language language,
                     LexiconLoadReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon " + path);
  return read_lexicon(in, language, report);
}

void dump_lexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& e : lexicon.entries()) {
    out << e.lemma << '\t' << e.form << '\t' << format_unimorph(e.tag) << '\n';
  }
}

}  // namespace terminflect
