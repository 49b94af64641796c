#include "terminflect/tag_inference.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "terminflect/errors.h"
#include "test_util.h"

namespace terminflect {
namespace {

using testing::make_sentence;

const InferenceRules& lt_rules() {
  static const InferenceRules r = InferenceRules::builtin(Language::LT);
  return r;
}
const InferenceRules& de_rules() {
  static const InferenceRules r = InferenceRules::builtin(Language::DE);
  return r;
}

std::optional<Case> case_of(const ParsedSentence& s, int index,
                            const InferenceRules& rules = lt_rules()) {
  return infer_case(single_token_occurrence(s, index), rules);
}

// Subject, object and instrument configurations.
const ParsedSentence kRoot = make_sentence({{"This", "this", "PRON", "_", 4, "nsubj"},
                                            {"is", "be", "AUX", "_", 4, "cop"},
                                            {"a", "a", "DET", "_", 4, "det"},
                                            {"violin", "violin", "NOUN", "Number=Sing", 0, "root"}});
const ParsedSentence kObj = make_sentence({{"He", "he", "PRON", "_", 2, "nsubj"},
                                           {"bought", "buy", "VERB", "Tense=Past|Mood=Ind", 0, "root"},
                                           {"a", "a", "DET", "_", 4, "det"},
                                           {"violin", "violin", "NOUN", "Number=Sing", 2, "obj"}});
const ParsedSentence kPlay = make_sentence({{"She", "she", "PRON", "_", 2, "nsubj"},
                                            {"plays", "play", "VERB", "_", 0, "root"},
                                            {"the", "the", "DET", "_", 4, "det"},
                                            {"violin", "violin", "NOUN", "Number=Sing", 2, "obj"}});
const ParsedSentence kWith = make_sentence({{"He", "he", "PRON", "_", 2, "nsubj"},
                                            {"wrote", "write", "VERB", "_", 0, "root"},
                                            {"with", "with", "ADP", "_", 5, "case"},
                                            {"a", "a", "DET", "_", 5, "det"},
                                            {"pen", "pen", "NOUN", "Number=Sing", 2, "obl"}});

TEST(InferCase, RootIsNominative) { EXPECT_EQ(case_of(kRoot, 4), Case::NOM); }
TEST(InferCase, ObjectIsAccusative) { EXPECT_EQ(case_of(kObj, 4), Case::ACC); }
TEST(InferCase, PlayGovernsInstrumental) { EXPECT_EQ(case_of(kPlay, 4), Case::INS); }
TEST(InferCase, WithGivesInstrumental) { EXPECT_EQ(case_of(kWith, 5), Case::INS); }

TEST(InferCase, SubtypedRelationFallsBackToBase) {
  auto s = make_sentence({{"The", "the", "DET", "_", 2, "det"},
                          {"violin", "violin", "NOUN", "_", 3, "nsubj:pass"},
                          {"stolen", "steal", "VERB", "_", 0, "root"}});
  EXPECT_EQ(case_of(s, 2), Case::NOM);
}

TEST(InferCase, NoRuleFires) {
  auto s = make_sentence({{"violin", "violin", "NOUN", "_", 2, "obl"},
                          {"sleeps", "sleep", "VERB", "_", 0, "root"}});
  EXPECT_FALSE(case_of(s, 1));
}

TEST(InferCase, PrepositionBeatsVerbGovernment) {
  // An adposition attached to the term outranks the governing verb.
  auto s = make_sentence({{"She", "she", "PRON", "_", 2, "nsubj"},
                          {"plays", "play", "VERB", "_", 0, "root"},
                          {"in", "in", "ADP", "_", 4, "case"},
                          {"church", "church", "NOUN", "_", 2, "obj"}});
  EXPECT_EQ(case_of(s, 4), Case::LOC);
}

TEST(InferCase, AppositionInheritsFromHead) {
  auto s = make_sentence({{"He", "he", "PRON", "_", 2, "nsubj"},
                          {"hit", "hit", "VERB", "_", 0, "root"},
                          {"father", "father", "NOUN", "_", 2, "obj"},
                          {"Todd", "Todd", "PROPN", "_", 3, "appos"},
                          {"Palin", "Palin", "PROPN", "_", 4, "flat"}});
  EXPECT_EQ(case_of(s, 5), Case::ACC);
  EXPECT_EQ(case_of(s, 4), Case::ACC);
}

TEST(InferCase, RejectsNonNominalHead) {
  EXPECT_THROW(case_of(kObj, 2), UnsupportedPosError);
}

TEST(InferCase, GermanRulesUseDative) {
  EXPECT_EQ(case_of(kWith, 5, de_rules()), Case::DAT);
  EXPECT_EQ(case_of(kPlay, 4, de_rules()), Case::ACC);
}

// Moving tokens around without changing the tree leaves the case alone.
ParsedSentence permuted(const ParsedSentence& s, const std::vector<int>& order,
                        std::vector<int>* new_index) {
  const int n = static_cast<int>(s.size());
  new_index->assign(n + 1, 0);
  for (int pos = 0; pos < n; ++pos) (*new_index)[order[pos]] = pos + 1;
  ParsedSentence out;
  out.sent_id = s.sent_id;
  for (int pos = 0; pos < n; ++pos) {
    SourceToken t = s.token(order[pos]);
    t.index = pos + 1;
    t.head = t.head == 0 ? 0 : (*new_index)[t.head];
    out.tokens.push_back(t);
  }
  return out;
}

TEST(InferCaseProperty, InvariantUnderTokenReordering) {
  auto sents = parse_conllu_file(testing::data_path("en_lt_fixture.conllu"));
  std::mt19937 rng(11);
  for (const auto& s : sents) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> order(s.size());
      std::iota(order.begin(), order.end(), 1);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> idx;
      auto p = permuted(s, order, &idx);
      validate_sentence(p);
      for (const auto& t : s.tokens) {
        if (t.upos != "NOUN" && t.upos != "PROPN") continue;
        for (const auto* rules : {&lt_rules(), &de_rules()}) {
          EXPECT_EQ(case_of(s, t.index, *rules), case_of(p, idx[t.index], *rules))
              << s.sent_id << " " << t.form;
        }
      }
    }
  }
}

TEST(InferCaseProperty, GermanCasesStayInInventory) {
  auto sents = parse_conllu_file(testing::data_path("en_lt_fixture.conllu"));
  for (const auto& s : sents) {
    for (const auto& t : s.tokens) {
      if (t.upos != "NOUN" && t.upos != "PROPN") continue;
      auto c = case_of(s, t.index, de_rules());
      if (c) {
        EXPECT_TRUE(*c == Case::NOM || *c == Case::GEN || *c == Case::DAT || *c == Case::ACC);
      }
    }
  }
}

TEST(InferNominalTag, CommissionedTheCarillon) {
  auto s = make_sentence({{"they", "they", "PRON", "_", 2, "nsubj"},
                          {"commissioned", "commission", "VERB", "_", 0, "root"},
                          {"the", "the", "DET", "_", 4, "det"},
                          {"carillon", "carillon", "NOUN", "Number=Sing", 2, "obj"},
                          {".", ".", "PUNCT", "_", 2, "punct"}});
  auto tag = infer_nominal_tag(single_token_occurrence(s, 4), "karilionas", nullptr,
                               &lt::DeclensionTable::builtin(), lt_rules());
  EXPECT_EQ(format_unimorph(tag), "N;ACC;SG;MASC");
}

TEST(InferNominalTag, PluralRoot) {
  auto s = make_sentence({{"Violins", "violin", "NOUN", "Number=Plur", 0, "root"},
                          {"!", "!", "PUNCT", "_", 1, "punct"}});
  auto tag = infer_nominal_tag(single_token_occurrence(s, 1), "smuikas", nullptr, nullptr,
                               lt_rules());
  EXPECT_EQ(format_unimorph(tag), "N;NOM;PL");
}

TEST(InferNominalTag, GenderFromLexiconBeforeDeclension) {
  std::istringstream in("akis\takis\tN;NOM;SG;FEM\n");
  auto lex = read_lexicon(in, Language::LT);
  auto tag = infer_nominal_tag(single_token_occurrence(kRoot, 4), "akis", &lex,
                               &lt::DeclensionTable::builtin(), lt_rules());
  EXPECT_EQ(tag.gender, Gender::FEM);
  auto tag2 = infer_nominal_tag(single_token_occurrence(kRoot, 4), "akis", nullptr,
                                &lt::DeclensionTable::builtin(), lt_rules());
  EXPECT_EQ(tag2.gender, Gender::MASC);
}

const ParsedSentence kAbdominal = make_sentence(
    {{"use", "use", "NOUN", "Number=Sing", 0, "root"},
     {"of", "of", "ADP", "_", 4, "case"},
     {"abdominal", "abdominal", "ADJ", "Degree=Pos", 4, "amod"},
     {"drainage", "drainage", "NOUN", "Number=Sing", 1, "nmod"}});

TEST(InferNominalTag, AdjectiveAgreesWithModifiedNoun) {
  auto tag = infer_nominal_tag(single_token_occurrence(kAbdominal, 3), "abdominell", nullptr,
                               nullptr, de_rules());
  EXPECT_EQ(tag.pos, Pos::ADJ);
  EXPECT_EQ(tag.case_, case_of(kAbdominal, 4, de_rules()));
  EXPECT_EQ(tag.case_, Case::DAT);
  EXPECT_EQ(tag.number, Number::SG);
  EXPECT_EQ(tag.strength, Strength::STRONG);
  EXPECT_FALSE(tag.gender);
  EXPECT_TRUE(tag.well_formed());
}

TEST(InferNominalTag, PredicativeAdjectiveIsNominative) {
  auto s = make_sentence({{"drains", "drain", "NOUN", "Number=Plur", 3, "nsubj"},
                          {"are", "be", "AUX", "_", 3, "cop"},
                          {"abdominal", "abdominal", "ADJ", "_", 0, "root"}});
  auto tag = infer_nominal_tag(single_token_occurrence(s, 3), "abdominell", nullptr, nullptr,
                               de_rules());
  EXPECT_EQ(tag.case_, Case::NOM);
  EXPECT_EQ(tag.number, Number::PL);
}

TEST(InferNominalTag, RejectsVerb) {
  EXPECT_THROW(infer_nominal_tag(single_token_occurrence(kObj, 2), "pirkti", nullptr, nullptr,
                                 lt_rules()),
               UnsupportedPosError);
}

TEST(InferVerbalTag, BoughtWithNounSubject) {
  auto s = make_sentence({{"John", "John", "PROPN", "Number=Sing", 2, "nsubj"},
                          {"bought", "buy", "VERB", "Mood=Ind|Tense=Past|VerbForm=Fin", 0, "root"},
                          {"bread", "bread", "NOUN", "Number=Sing", 2, "obj"}});
  auto tag = infer_verbal_tag(single_token_occurrence(s, 2), lt_rules());
  EXPECT_EQ(format_unimorph(tag), "V;SG;3;PST;IND");
}

TEST(InferVerbalTag, WillPlayIsFuture) {
  auto s = make_sentence({{"We", "we", "PRON", "Number=Plur|Person=1", 3, "nsubj"},
                          {"will", "will", "AUX", "VerbForm=Fin", 3, "aux"},
                          {"play", "play", "VERB", "VerbForm=Inf", 0, "root"}});
  auto tag = infer_verbal_tag(single_token_occurrence(s, 3), lt_rules());
  EXPECT_EQ(tag.tense, Tense::FUT);
  EXPECT_EQ(tag.person, Person::FIRST);
  EXPECT_EQ(tag.number, Number::PL);
}

TEST(InferVerbalTag, PerfectIsPast) {
  auto s = make_sentence({{"She", "she", "PRON", "Number=Sing|Person=3", 3, "nsubj"},
                          {"has", "have", "AUX", "Mood=Ind|Tense=Pres", 3, "aux"},
                          {"played", "play", "VERB", "Tense=Past|VerbForm=Part", 0, "root"}});
  EXPECT_EQ(infer_verbal_tag(single_token_occurrence(s, 3), lt_rules()).tense, Tense::PST);
}

TEST(InferVerbalTag, ImperativeWithoutSubject) {
  auto s = make_sentence({{"Play", "play", "VERB", "Mood=Imp|VerbForm=Fin", 0, "root"},
                          {"it", "it", "PRON", "_", 1, "obj"}});
  auto tag = infer_verbal_tag(single_token_occurrence(s, 1), lt_rules());
  EXPECT_EQ(tag.mood, Mood::IMP);
  EXPECT_FALSE(tag.person);
  EXPECT_FALSE(tag.number);
}

TEST(InferVerbalTag, RejectsNoun) {
  EXPECT_THROW(infer_verbal_tag(single_token_occurrence(kObj, 4), lt_rules()),
               UnsupportedPosError);
}

TEST(InferGermanStrength, Determiners) {
  auto the = make_sentence({{"the", "the", "DET", "Definite=Def|PronType=Art", 3, "det"},
                            {"abdominal", "abdominal", "ADJ", "_", 3, "amod"},
                            {"drainage", "drainage", "NOUN", "_", 0, "root"}});
  EXPECT_EQ(infer_german_strength(single_token_occurrence(the, 2), de_rules()), Strength::WEAK);
  auto a = make_sentence({{"an", "a", "DET", "Definite=Ind|PronType=Art", 3, "det"},
                          {"abdominal", "abdominal", "ADJ", "_", 3, "amod"},
                          {"drainage", "drainage", "NOUN", "_", 0, "root"}});
  EXPECT_EQ(infer_german_strength(single_token_occurrence(a, 2), de_rules()), Strength::MIXED);
  auto his = make_sentence({{"his", "he", "PRON", "Poss=Yes", 3, "nmod:poss"},
                            {"abdominal", "abdominal", "ADJ", "_", 3, "amod"},
                            {"drainage", "drainage", "NOUN", "_", 0, "root"}});
  EXPECT_EQ(infer_german_strength(single_token_occurrence(his, 2), de_rules()), Strength::MIXED);
  EXPECT_EQ(infer_german_strength(single_token_occurrence(kAbdominal, 3), de_rules()),
            Strength::STRONG);
  EXPECT_FALSE(infer_german_strength(single_token_occurrence(the, 2), lt_rules()));
}

TEST(InferenceRules, OverridesAndDeletion) {
  std::istringstream in(
      "# tweak\n"
      "[verb_gov]\n"
      "play = -\n"
      "Wield = INS\n"
      "[prep]\n"
      "by = INS\n"
      "[inherit]\n"
      "conj = -\n");
  auto r = InferenceRules::with_overrides(in, Language::LT);
  EXPECT_FALSE(r.verb_government.count("play"));
  EXPECT_EQ(r.verb_government.at("wield"), Case::INS);
  EXPECT_EQ(r.preposition_case.at("by"), Case::INS);
  EXPECT_FALSE(r.inherit_deprels.count("conj"));
  EXPECT_EQ(infer_case(single_token_occurrence(kPlay, 4), r), Case::ACC);
}

TEST(InferenceRules, MalformedFiles) {
  auto load = [](const std::string& text, Language lang = Language::LT) {
    std::istringstream in(text);
    return InferenceRules::with_overrides(in, lang);
  };
  EXPECT_THROW(load("obj = ACC\n"), ParseError);
  EXPECT_THROW(load("[cases]\nobj = ACC\n"), ParseError);
  EXPECT_THROW(load("[deprel]\nobj = ACCUSATIVE\n"), ParseError);
  EXPECT_THROW(load("[deprel\n"), ParseError);
  EXPECT_THROW(load("[prep]\nwith = INS\n", Language::DE), ValidationError);
}

TEST(InferenceRules, BuiltinsValidate) {
  EXPECT_NO_THROW(lt_rules().validate());
  EXPECT_NO_THROW(de_rules().validate());
  EXPECT_EQ(lt_rules().deprel_case.at("root"), Case::NOM);
  EXPECT_EQ(lt_rules().deprel_case.at("nmod:poss"), Case::GEN);
}

}  // namespace
}  // namespace terminflect
