// terminflect: inflect lemma constraints from source parses, annotate
// source text, build terminology test suites and score hypotheses.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "terminflect/conllu.h"
#include "terminflect/errors.h"
#include "terminflect/evaluation.h"
#include "terminflect/io_formats.h"
#include "terminflect/lexicon.h"
#include "terminflect/lt_declension.h"
#include "terminflect/pipeline.h"
#include "terminflect/suite_builder.h"
#include "terminflect/tag_inference.h"

namespace tf = terminflect;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void log(const std::string& level, const std::string& cmd, const std::string& msg) {
  std::cerr << "level=" << level << " cmd=" << cmd << " msg=\"" << msg << "\"\n";
}

// Writes through a sibling temp file so readers never see partial output.
class AtomicFile {
 public:
  explicit AtomicFile(std::string path)
      : path_(std::move(path)), tmp_(path_ + ".tmp"), out_(tmp_, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot write " + path_);
  }
  ~AtomicFile() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      std::filesystem::remove(tmp_, ec);
    }
  }
  std::ostream& stream() { return out_; }
  void commit() {
    out_.close();
    if (!out_) throw std::runtime_error("write failed for " + path_);
    std::filesystem::rename(tmp_, path_);
    committed_ = true;
  }

 private:
  std::string path_;
  std::string tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

// RunConfig: options shared by every subcommand.
struct RunConfig {
  std::string language;
  std::vector<std::string> lexicons;
  std::string rules;
  std::string declension;

  std::string conllu;
  std::string constraints;
  std::string output;
  std::string annotated;
  std::string scheme = "append";
  unsigned threads = 1;

  std::string suite;
  std::string hypotheses;
  std::string report;

  std::string lemma;
  std::string gender;

  std::string source;
  std::string reference;
  std::string doc_ids;
  std::string dict;
  std::string counts;
  std::string stopwords;
  std::size_t threshold = 100;
  std::size_t top_k = 20;
  std::size_t max_n = 3;
};

// Loaded resources; owns what tf::Resources points to.
struct LoadedResources {
  tf::Language language = tf::Language::LT;
  std::unique_ptr<tf::Lexicon> lexicon;
  std::unique_ptr<tf::lt::DeclensionTable> declension;
  std::unique_ptr<tf::InferenceRules> rules;

  tf::Resources view() const {
    return {language, lexicon.get(), declension.get(), rules.get()};
  }
};

tf::Language language_of(const RunConfig& cfg) {
  auto lang = tf::parse_language(cfg.language);
  if (!lang) throw UsageError("--lang must be 'de' or 'lt'");
  return *lang;
}

LoadedResources load_resources(const RunConfig& cfg, const std::string& cmd) {
  LoadedResources res;
  res.language = language_of(cfg);
  res.lexicon = std::make_unique<tf::Lexicon>(res.language);
  for (const auto& path : cfg.lexicons) {
    tf::LexiconLoadReport report;
    auto lex = tf::load_lexicon(path, res.language, &report);
    res.lexicon->append(lex.entries());
    log("info", cmd, "loaded " + std::to_string(report.entries) + " entries from " + path);
    for (const auto& w : report.warnings) log("warn", cmd, path + ": " + w);
  }
  if (res.language == tf::Language::LT) {
    res.declension = std::make_unique<tf::lt::DeclensionTable>(
        cfg.declension.empty() ? tf::lt::DeclensionTable::builtin()
                               : tf::lt::DeclensionTable::with_overrides_file(cfg.declension));
  }
  res.rules = std::make_unique<tf::InferenceRules>(
      cfg.rules.empty() ? tf::InferenceRules::builtin(res.language)
                        : tf::InferenceRules::with_overrides_file(cfg.rules, res.language));
  return res;
}

struct InflectionRun {
  std::vector<tf::ParsedSentence> sentences;
  std::vector<tf::ConstraintLine> lines;
  std::vector<tf::InflectionResult> results;
  std::vector<std::size_t> line_of_result;
};

InflectionRun run_inflection(const RunConfig& cfg, const LoadedResources& res,
                             const std::string& cmd) {
  if (cfg.conllu.empty() || cfg.constraints.empty()) {
    throw UsageError("--conllu and --constraints are required");
  }
  InflectionRun run;
  run.sentences = tf::parse_conllu_file(cfg.conllu);
  {
    auto in = open_input(cfg.constraints);
    run.lines = tf::read_constraints_jsonl(in);
  }
  std::map<std::string, const tf::ParsedSentence*> by_id;
  for (const auto& s : run.sentences) by_id.emplace(s.sent_id, &s);

  std::vector<tf::BatchItem> items;
  for (std::size_t i = 0; i < run.lines.size(); ++i) {
    const auto& line = run.lines[i];
    auto it = by_id.find(line.sent_id);
    if (it == by_id.end()) log("warn", cmd, "sentence " + line.sent_id + " not in CoNLL-U input");
    items.push_back({it == by_id.end() ? nullptr : it->second, line.constraints});
    for (std::size_t k = 0; k < line.constraints.size(); ++k) run.line_of_result.push_back(i);
  }
  run.results = tf::inflect_batch(items, res.view(), cfg.threads);
  for (std::size_t i = 0; i < run.results.size(); ++i) {
    for (const auto& d : run.results[i].diagnostics) {
      log("warn", cmd,
          "sentence " + run.lines[run.line_of_result[i]].sent_id + " '" +
              run.results[i].constraint.src_term + "': " + d);
    }
  }
  return run;
}

void write_annotated(std::ostream& out, const InflectionRun& run, tf::AnnotationScheme scheme,
                     const std::string& cmd) {
  std::map<std::string, std::vector<const tf::InflectionResult*>> per_sentence;
  for (std::size_t i = 0; i < run.results.size(); ++i) {
    per_sentence[run.lines[run.line_of_result[i]].sent_id].push_back(&run.results[i]);
  }
  for (const auto& s : run.sentences) {
    auto& rs = per_sentence[s.sent_id];
    auto kept = tf::select_non_overlapping(rs);
    std::size_t located = 0;
    for (const auto* r : rs) located += r->occurrence ? 1 : 0;
    if (kept.size() < located) {
      log("warn", cmd, "sentence " + s.sent_id + ": dropped " +
                           std::to_string(located - kept.size()) + " overlapping annotations");
    }
    out << tf::annotate_source(s, kept, scheme) << '\n';
  }
}

tf::AnnotationScheme scheme_of(const RunConfig& cfg) {
  auto scheme = tf::parse_scheme(cfg.scheme);
  if (!scheme) throw UsageError("--scheme must be 'append' or 'replace'");
  return *scheme;
}

int cmd_inflect(const RunConfig& cfg) {
  const std::string cmd = "inflect";
  if (cfg.output.empty()) throw UsageError("--output is required");
  auto scheme = scheme_of(cfg);
  auto res = load_resources(cfg, cmd);
  auto run = run_inflection(cfg, res, cmd);

  std::map<tf::Provenance, std::size_t> counts;
  AtomicFile out(cfg.output);
  for (std::size_t i = 0; i < run.results.size(); ++i) {
    out.stream() << tf::result_to_json_line(run.lines[run.line_of_result[i]].sent_id,
                                            run.results[i])
                 << '\n';
    ++counts[run.results[i].provenance];
  }
  std::unique_ptr<AtomicFile> annotated;
  if (!cfg.annotated.empty()) {
    annotated = std::make_unique<AtomicFile>(cfg.annotated);
    write_annotated(annotated->stream(), run, scheme, cmd);
  }
  out.commit();
  if (annotated) annotated->commit();

  std::cerr << "provenance LEXICON=" << counts[tf::Provenance::LEXICON]
            << " RULE=" << counts[tf::Provenance::RULE]
            << " PASSTHROUGH=" << counts[tf::Provenance::PASSTHROUGH] << '\n';
  return 0;
}

int cmd_annotate(const RunConfig& cfg) {
  const std::string cmd = "annotate";
  auto scheme = scheme_of(cfg);
  auto res = load_resources(cfg, cmd);
  auto run = run_inflection(cfg, res, cmd);
  if (cfg.output.empty()) {
    write_annotated(std::cout, run, scheme, cmd);
    return 0;
  }
  AtomicFile out(cfg.output);
  write_annotated(out.stream(), run, scheme, cmd);
  out.commit();
  return 0;
}

int cmd_evaluate(const RunConfig& cfg) {
  const std::string cmd = "evaluate";
  if (cfg.suite.empty() || cfg.hypotheses.empty()) {
    throw UsageError("--suite and --hyp are required");
  }
  auto res = load_resources(cfg, cmd);
  std::vector<tf::EvalSuiteEntry> suite;
  {
    auto in = open_input(cfg.suite);
    suite = tf::read_suite_jsonl(in);
  }
  std::vector<std::string> hyps;
  {
    auto in = open_input(cfg.hypotheses);
    hyps = tf::read_lines(in);
  }
  auto report = tf::evaluate(suite, hyps, res.view());
  for (const auto& gap : report.coverage_gaps) log("warn", cmd, "coverage gap " + gap);
  std::cout << tf::format_report_table(report);
  if (!cfg.report.empty()) {
    AtomicFile out(cfg.report);
    out.stream() << tf::report_to_json(report) << '\n';
    out.commit();
  }
  return 0;
}

int cmd_paradigm(const RunConfig& cfg) {
  if (language_of(cfg) != tf::Language::LT) {
    std::cerr << "rule paradigms are Lithuanian-only\n";
    return kUsageError;
  }
  std::optional<tf::Gender> hint;
  if (!cfg.gender.empty()) {
    hint = tf::parse_gender(cfg.gender);
    if (!hint) throw UsageError("--gender must be MASC, FEM or NEUT");
  }
  const auto table = cfg.declension.empty()
                         ? tf::lt::DeclensionTable::builtin()
                         : tf::lt::DeclensionTable::with_overrides_file(cfg.declension);
  auto cl = table.classify(cfg.lemma, hint);
  auto p = table.paradigm(cfg.lemma, hint);
  if (!cl || !p) {
    std::cout << cfg.lemma << ": unclassifiable\n";
    return 0;
  }
  std::cout << "# " << cfg.lemma << " class=" << tf::lt::to_string(cl->cls->id)
            << " table=" << cl->cls->name << " stem=" << cl->stem << '\n';
  for (auto n : tf::kAllNumbers) {
    for (auto c : tf::kAllCases) {
      std::cout << tf::to_string(c) << ';' << tf::to_string(n) << '\t' << p->at({c, n})
                << '\n';
    }
  }
  return 0;
}

int cmd_build_suite(const RunConfig& cfg) {
  const std::string cmd = "build-suite";
  if (cfg.source.empty() || cfg.reference.empty() || cfg.dict.empty() ||
      cfg.output.empty()) {
    throw UsageError("--source, --reference, --dict and --output are required");
  }
  auto res = load_resources(cfg, cmd);
  std::vector<tf::ParallelSentence> corpus;
  {
    auto src = open_input(cfg.source);
    auto ref = open_input(cfg.reference);
    if (cfg.doc_ids.empty()) {
      corpus = tf::read_parallel_corpus(src, ref);
    } else {
      auto docs = open_input(cfg.doc_ids);
      corpus = tf::read_parallel_corpus(src, ref, &docs);
    }
  }
  auto dict = tf::load_bilingual_dict(cfg.dict);
  tf::PhraseCounts counts;
  if (!cfg.counts.empty()) counts = tf::load_phrase_counts(cfg.counts);
  std::set<std::string> stopwords;
  tf::SuiteBuildOptions options;
  options.max_n = cfg.max_n;
  options.top_k = cfg.top_k;
  options.threshold = cfg.threshold;
  if (!cfg.stopwords.empty()) {
    stopwords = tf::load_stopwords(cfg.stopwords);
    options.stopwords = &stopwords;
  }

  std::vector<std::string> notes;
  auto suite = tf::build_suite(corpus, dict, res.view(), counts, options, &notes);
  for (const auto& n : notes) log("info", cmd, n);

  AtomicFile out(cfg.output);
  tf::write_suite_jsonl(out.stream(), suite);
  out.commit();

  auto stats = tf::suite_stats(suite);
  std::cout << "#Sent\t#Const\t#Const.Inf\n"
            << stats.sentences << '\t' << stats.constraints << '\t' << stats.inflected
            << '\n';
  return 0;
}

void add_resource_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--lang", cfg.language, "Target language: de or lt")->required();
  sub->add_option("--lexicon", cfg.lexicons, "Lexicon TSV (repeatable)");
  sub->add_option("--rules", cfg.rules, "Inference rules override file");
  sub->add_option("--declension", cfg.declension, "Declension table override file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terminology constraint inflection and evaluation"};
  app.set_config("--config", "", "Config file (flags take precedence)");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* inflect = app.add_subcommand("inflect", "Inflect constraints; write results JSONL");
  add_resource_options(inflect, cfg);
  inflect->add_option("--conllu", cfg.conllu, "Parsed source sentences")->required();
  inflect->add_option("--constraints", cfg.constraints, "Constraints JSONL")->required();
  inflect->add_option("-o,--output", cfg.output, "Results JSONL")->required();
  inflect->add_option("--annotated", cfg.annotated, "Also write annotated source");
  inflect->add_option("--scheme", cfg.scheme, "append or replace");
  inflect->add_option("--threads", cfg.threads, "Worker threads");

  auto* annotate = app.add_subcommand("annotate", "Write constraint-annotated source text");
  add_resource_options(annotate, cfg);
  annotate->add_option("--conllu", cfg.conllu, "Parsed source sentences")->required();
  annotate->add_option("--constraints", cfg.constraints, "Constraints JSONL")->required();
  annotate->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  annotate->add_option("--scheme", cfg.scheme, "append or replace");
  annotate->add_option("--threads", cfg.threads, "Worker threads");

  auto* evaluate = app.add_subcommand("evaluate", "Score hypotheses for constraint usage");
  add_resource_options(evaluate, cfg);
  evaluate->add_option("--suite", cfg.suite, "Suite JSONL")->required();
  evaluate->add_option("--hyp", cfg.hypotheses, "Hypotheses, one per line")->required();
  evaluate->add_option("--report", cfg.report, "JSON report output");

  auto* paradigm = app.add_subcommand("paradigm", "Print the rule paradigm of a lemma");
  paradigm->add_option("lemma", cfg.lemma, "Lithuanian noun lemma")->required();
  paradigm->add_option("--lang", cfg.language, "Target language")->default_val("lt");
  paradigm->add_option("--gender", cfg.gender, "Gender hint: MASC or FEM");
  paradigm->add_option("--declension", cfg.declension, "Declension table override file");

  auto* build = app.add_subcommand("build-suite", "Build a terminology test suite");
  add_resource_options(build, cfg);
  build->add_option("--source", cfg.source, "Tokenized source, one sentence per line")
      ->required();
  build->add_option("--reference", cfg.reference, "Tokenized reference, aligned")->required();
  build->add_option("--doc-ids", cfg.doc_ids, "Document id per line");
  build->add_option("--dict", cfg.dict, "Bilingual dictionary TSV")->required();
  build->add_option("--counts", cfg.counts, "Training-corpus phrase counts TSV");
  build->add_option("--threshold", cfg.threshold, "Maximum training frequency");
  build->add_option("--top-k", cfg.top_k, "Keyphrases kept per source sentence");
  build->add_option("--max-n", cfg.max_n, "Longest keyphrase in tokens");
  build->add_option("--stopwords", cfg.stopwords, "Stopword list, one per line");
  build->add_option("-o,--output", cfg.output, "Suite JSONL")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (app.got_subcommand(inflect)) return cmd_inflect(cfg);
    if (app.got_subcommand(annotate)) return cmd_annotate(cfg);
    if (app.got_subcommand(evaluate)) return cmd_evaluate(cfg);
    if (app.got_subcommand(paradigm)) return cmd_paradigm(cfg);
    if (app.got_subcommand(build)) return cmd_build_suite(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}
