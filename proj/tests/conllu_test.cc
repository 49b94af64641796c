#include "terminflect/conllu.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "terminflect/errors.h"
#include "test_util.h"

namespace terminflect {
namespace {

using testing::data_path;

constexpr const char* kHePlaysViolin =
    "# sent_id = a1\n"
    "1\tHe\the\tPRON\t_\tCase=Nom|Number=Sing|Person=3\t2\tnsubj\t_\t_\n"
    "2\tplays\tplay\tVERB\t_\tMood=Ind|Tense=Pres\t0\troot\t_\t_\n"
    "3\tviolin\tviolin\tNOUN\t_\tNumber=Sing\t2\tobj\t_\t_\n"
    "\n";

std::vector<ParsedSentence> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_conllu(in);
}

TEST(ParseConllu, ThreeTokenTree) {
  auto sents = parse(kHePlaysViolin);
  ASSERT_EQ(sents.size(), 1u);
  const auto& s = sents[0];
  EXPECT_EQ(s.sent_id, "a1");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.root_index(), 2);
  EXPECT_EQ(s.token(1).head, 2);
  EXPECT_EQ(s.token(3).deprel, "obj");
  EXPECT_EQ(feature(s.token(1).feats, "Person"), "3");
  EXPECT_EQ(s.children(2), (std::vector<int>{1, 3}));
}

TEST(ParseConllu, NineColumnsReportsLine) {
  std::string text =
      "# sent_id = x\n"
      "1\tHe\the\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tsleeps\tsleep\tVERB\t_\t_\t0\troot\t_\n";
  try {
    parse(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseConllu, TwoCycleRejected) {
  std::string text =
      "# sent_id = cyc\n"
      "1\ta\ta\tNOUN\t_\t_\t2\tdep\t_\t_\n"
      "2\tb\tb\tNOUN\t_\t_\t1\tdep\t_\t_\n"
      "3\tc\tc\tVERB\t_\t_\t0\troot\t_\t_\n"
      "\n";
  try {
    parse(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("cyc"), std::string::npos);
  }
}

TEST(ParseConllu, HeadOutOfRangeRejected) {
  std::string text =
      "1\ta\ta\tNOUN\t_\t_\t5\tdep\t_\t_\n"
      "2\tb\tb\tVERB\t_\t_\t0\troot\t_\t_\n";
  EXPECT_THROW(parse(text), ValidationError);
}

TEST(ParseConllu, TwoRootsRejected) {
  std::string text =
      "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "2\tb\tb\tVERB\t_\t_\t0\troot\t_\t_\n";
  EXPECT_THROW(parse(text), ValidationError);
}

TEST(ParseConllu, SkipsMultiwordAndEmptyNodes) {
  std::string text =
      "1\tVamos\tir\tVERB\t_\t_\t0\troot\t_\t_\n"
      "2-3\tnos\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "2\tnos\tnosotros\tPRON\t_\t_\t1\tobj\t_\t_\n"
      "2.1\tgo\tgo\tVERB\t_\t_\t_\t_\t0:root\t_\n"
      "3\tya\tya\tADV\t_\t_\t1\tadvmod\t_\t_\n"
      "\n";
  auto sents = parse(text);
  ASSERT_EQ(sents.size(), 1u);
  EXPECT_EQ(sents[0].size(), 3u);
  EXPECT_EQ(sents[0].token(2).lemma, "nosotros");
}

TEST(ParseConllu, UnderscoreFeatsIsEmpty) {
  auto s = parse("1\tok\tok\tNOUN\t_\t_\t0\troot\t_\t_\n");
  EXPECT_TRUE(s[0].token(1).feats.empty());
}

TEST(ParseConllu, MultiValuedFeatureKept) {
  auto s = parse("1\tit\tit\tPRON\t_\tCase=Acc,Nom\t0\troot\t_\t_\n");
  EXPECT_EQ(feature(s[0].token(1).feats, "Case"), "Acc,Nom");
}

TEST(ParseConllu, DuplicateFeatureKeyRejected) {
  EXPECT_THROW(parse("1\tx\tx\tNOUN\t_\tNumber=Sing|Number=Plur\t0\troot\t_\t_\n"),
               ParseError);
}

TEST(ParseConllu, DocIdsAndDefaultSentIds) {
  std::string text =
      "# newdoc id = d1\n"
      "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "\n"
      "1\tb\tb\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "\n"
      "# newdoc id = d2\n"
      "# sent_id = named\n"
      "1\tc\tc\tNOUN\t_\t_\t0\troot\t_\t_\n";
  auto s = parse(text);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].doc_id, "d1");
  EXPECT_EQ(s[1].doc_id, "d1");
  EXPECT_EQ(s[1].sent_id, "2");
  EXPECT_EQ(s[2].doc_id, "d2");
  EXPECT_EQ(s[2].sent_id, "named");
}

TEST(ParseConllu, FileWithoutNewdocIsOneDocument) {
  auto sents = parse_conllu_file(data_path("en_lt_fixture.conllu"));
  EXPECT_EQ(sents.size(), 10u);
  std::istringstream in(kHePlaysViolin);
  auto plain = parse_conllu(in, std::string("file.conllu"));
  EXPECT_EQ(plain[0].doc_id, "file.conllu");
}

TEST(SubtreeTokens, ChainRootAndLeaf) {
  // a <- b <- c (c is root)
  auto s = testing::make_sentence({{"a", "a", "NOUN", "_", 2, "nmod"},
                                   {"b", "b", "NOUN", "_", 3, "obj"},
                                   {"c", "c", "VERB", "_", 0, "root"}});
  auto sub = subtree_tokens(s, 3);
  ASSERT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub[0].form, "a");
  EXPECT_EQ(sub[1].form, "b");
  EXPECT_TRUE(subtree_tokens(s, 1).empty());
}

TEST(SubtreeTokens, WithTheViolin) {
  auto s = testing::make_sentence({{"She", "she", "PRON", "_", 2, "nsubj"},
                                   {"played", "play", "VERB", "_", 0, "root"},
                                   {"with", "with", "ADP", "_", 5, "case"},
                                   {"the", "the", "DET", "_", 5, "det"},
                                   {"violin", "violin", "NOUN", "_", 2, "obl"}});
  std::vector<std::string> forms;
  for (const auto& t : subtree_tokens(s, 5)) forms.push_back(t.form);
  EXPECT_EQ(forms, (std::vector<std::string>{"with", "the"}));
}

// Brute-force reachability against subtree_tokens, and the partition
// property: children's subtrees plus the root cover every token.
TEST(SubtreeTokens, UnionOfSubtreesCoversSentence) {
  auto sents = parse_conllu_file(data_path("en_lt_fixture.conllu"));
  for (const auto& s : sents) {
    const int n = static_cast<int>(s.size());
    for (int i = 1; i <= n; ++i) {
      std::set<int> expected;
      for (int j = 1; j <= n; ++j) {
        int h = s.token(j).head;
        for (int steps = 0; h != 0 && steps <= n; ++steps) {
          if (h == i) {
            expected.insert(j);
            break;
          }
          h = s.token(h).head;
        }
      }
      std::set<int> got;
      for (const auto& t : subtree_tokens(s, i)) got.insert(t.index);
      EXPECT_EQ(got, expected) << s.sent_id << " token " << i;
    }
    const int root = s.root_index();
    std::set<int> all{root};
    for (const auto& t : subtree_tokens(s, root)) all.insert(t.index);
    EXPECT_EQ(static_cast<int>(all.size()), n) << s.sent_id;
  }
}

TEST(WriteConllu, RoundTripIsIdempotent) {
  auto first = parse_conllu_file(data_path("en_lt_fixture.conllu"));
  std::ostringstream a;
  write_conllu(a, first);
  std::istringstream in(a.str());
  auto second = parse_conllu(in);
  std::ostringstream b;
  write_conllu(b, second);
  EXPECT_EQ(a.str(), b.str());
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].sent_id, second[i].sent_id);
    EXPECT_EQ(first[i].doc_id, second[i].doc_id);
    EXPECT_EQ(first[i].surface_forms(), second[i].surface_forms());
  }
}

}  // namespace
}  // namespace terminflect
