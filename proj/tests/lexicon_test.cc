#include "terminflect/lexicon.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "terminflect/errors.h"
#include "test_util.h"

namespace terminflect {
namespace {

using testing::data_path;

Lexicon lex(const std::string& text, Language lang = Language::LT,
            LexiconLoadReport* report = nullptr) {
  std::istringstream in(text);
  return read_lexicon(in, lang, report);
}

TEST(LoadLexicon, SingleRow) {
  LexiconLoadReport report;
  auto l = lex("karilionas\tkarilioną\tN;ACC;SG\n", Language::LT, &report);
  EXPECT_EQ(report.entries, 1u);
  ASSERT_EQ(l.entries().size(), 1u);
  EXPECT_EQ(l.entries()[0].form, "karilioną");
  EXPECT_EQ(l.lookup("karilionas", parse_unimorph("N;ACC;SG")),
            std::vector<std::string>{"karilioną"});
}

TEST(LoadLexicon, TwoColumnsReportsLine) {
  try {
    lex("# header\nvyras\tvyro\tN;GEN;SG\nvyras\tvyrui\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadLexicon, BadTagReportsLine) {
  try {
    lex("vyras\tvyro\tN;GENITIVE\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(LoadLexicon, EmptyFileWarns) {
  LexiconLoadReport report;
  auto l = lex("# nothing here\n\n", Language::DE, &report);
  EXPECT_TRUE(l.empty());
  EXPECT_EQ(report.entries, 0u);
  EXPECT_FALSE(report.warnings.empty());
}

TEST(LoadLexicon, DuplicateLemmaTagKeepsBoth) {
  auto l = lex("Bank\tBänke\tN;NOM;PL;FEM\nBank\tBanken\tN;NOM;PL;FEM\n", Language::DE);
  auto forms = l.lookup("Bank", parse_unimorph("N;NOM;PL;FEM"));
  EXPECT_EQ(std::set<std::string>(forms.begin(), forms.end()),
            (std::set<std::string>{"Bänke", "Banken"}));
  EXPECT_EQ(forms.front(), "Bänke");
}

TEST(Lookup, GermanFixtureStrongFeminineGenitive) {
  auto l = load_lexicon(data_path("de_lexicon.tsv"), Language::DE);
  EXPECT_EQ(l.lookup("abdominell", parse_unimorph("ADJ;GEN;SG;FEM;STRONG")),
            std::vector<std::string>{"abdomineller"});
  EXPECT_EQ(l.lookup("abdominell", parse_unimorph("ADJ;DAT;SG;FEM;STRONG")),
            std::vector<std::string>{"abdomineller"});
  EXPECT_EQ(l.lookup("abdominell", parse_unimorph("ADJ;DAT;SG;MASC;STRONG")),
            std::vector<std::string>{"abdominellem"});
}

TEST(Lookup, RelaxedMatchIgnoresUnsetSlots) {
  auto l = load_lexicon(data_path("de_lexicon.tsv"), Language::DE);
  // Gender unset: every gender's strong dative singular qualifies.
  auto forms = l.lookup("abdominell", parse_unimorph("ADJ;DAT;SG;STRONG"));
  EXPECT_EQ(std::set<std::string>(forms.begin(), forms.end()),
            (std::set<std::string>{"abdomineller", "abdominellem"}));
  // Exact match is preferred over relaxed.
  auto lt = lex("vyras\tvyrą\tN;ACC;SG\nvyras\tvyrą*\tN;ACC;SG;MASC\n");
  EXPECT_EQ(lt.lookup("vyras", parse_unimorph("N;ACC;SG")), std::vector<std::string>{"vyrą"});
  // A set query slot the entry lacks does not match.
  EXPECT_TRUE(lt.lookup("vyras", parse_unimorph("N;ACC;SG;FEM")).empty());
}

TEST(Lookup, KarilionasAndAbsentLemma) {
  auto l = lex("karilionas\tkarilionas\tN;NOM;SG;MASC\nkarilionas\tkarilioną\tN;ACC;SG;MASC\n");
  EXPECT_EQ(l.lookup("karilionas", parse_unimorph("N;ACC;SG")),
            std::vector<std::string>{"karilioną"});
  EXPECT_TRUE(l.lookup("smuikas", parse_unimorph("N;ACC;SG")).empty());
  EXPECT_TRUE(l.lookup("karilionas", parse_unimorph("PROPN;ACC;SG")).empty());
}

TEST(GenderOf, GermanDrainageIsFeminine) {
  auto l = load_lexicon(data_path("de_lexicon.tsv"), Language::DE);
  EXPECT_EQ(l.gender_of("Drainage"), Gender::FEM);
  EXPECT_FALSE(l.gender_of("Unbekannt"));
  // Adjective entries carry agreement gender, not an inherent one.
  EXPECT_FALSE(l.gender_of("abdominell"));
}

TEST(GenderOf, ConflictIsUnsetAndWarned) {
  LexiconLoadReport report;
  auto l = lex("See\tSee\tN;NOM;SG;MASC\nSee\tSee\tN;NOM;SG;FEM\n", Language::DE, &report);
  EXPECT_FALSE(l.gender_of("See"));
  EXPECT_EQ(l.gender_conflicts(), std::set<std::string>{"See"});
  ASSERT_FALSE(report.warnings.empty());
  EXPECT_NE(report.warnings[0].find("See"), std::string::npos);
}

TEST(LemmasOfForm, ReverseLookup) {
  auto l = lex(
      "karilionas\tkarilioną\tN;ACC;SG;MASC\n"
      "karilionas\tkarilionas\tN;NOM;SG;MASC\n"
      "kasa\tkasos\tN;GEN;SG;FEM\n"
      "kasas\tkasos\tN;GEN;SG;MASC\n");
  EXPECT_EQ(l.lemmas_of_form("karilioną"), std::set<std::string>{"karilionas"});
  EXPECT_EQ(l.lemmas_of_form("karilionas"), std::set<std::string>{"karilionas"});
  EXPECT_TRUE(l.lemmas_of_form("nežinomas").empty());
  EXPECT_EQ(l.lemmas_of_form("kasos"), (std::set<std::string>{"kasa", "kasas"}));
  EXPECT_TRUE(l.lemmas_of_form("Karilioną").empty());
}

TEST(LexiconProperty, EveryEntryRetrievableBothWays) {
  for (auto [file, lang] : {std::pair{"de_lexicon.tsv", Language::DE},
                            std::pair{"lt_lexicon.tsv", Language::LT}}) {
    auto l = load_lexicon(data_path(file), lang);
    for (const auto& e : l.entries()) {
      auto forms = l.lookup(e.lemma, e.tag);
      EXPECT_NE(std::find(forms.begin(), forms.end(), e.form), forms.end())
          << e.lemma << " " << format_unimorph(e.tag);
      EXPECT_TRUE(l.lemmas_of_form(e.form).count(e.lemma));
    }
  }
}

TEST(LexiconProperty, DumpReloadPreservesMultiset) {
  auto l = load_lexicon(data_path("de_lexicon.tsv"), Language::DE);
  std::ostringstream out;
  dump_lexicon(out, l);
  auto again = lex(out.str(), Language::DE);
  auto key = [](const LexiconEntry& e) {
    return e.lemma + "\t" + e.form + "\t" + format_unimorph(e.tag);
  };
  std::multiset<std::string> a, b;
  for (const auto& e : l.entries()) a.insert(key(e));
  for (const auto& e : again.entries()) b.insert(key(e));
  EXPECT_EQ(a, b);
}

TEST(Lexicon, AppendMergesIndexes) {
  auto l = lex("vyras\tvyro\tN;GEN;SG;MASC\n");
  l.append({{"namas", "namo", parse_unimorph("N;GEN;SG;MASC")}});
  EXPECT_TRUE(l.contains_lemma("namas"));
  EXPECT_EQ(l.gender_of("namas"), Gender::MASC);
  EXPECT_EQ(l.forms_of("vyras"), std::vector<std::string>{"vyro"});
}

}  // namespace
}  // namespace terminflect
