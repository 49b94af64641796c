#include "terminflect/io_formats.h"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

using json = nlohmann::ordered_json;

std::optional<std::string> optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

TermConstraint constraint_from_json(const json& c, const std::optional<std::string>& doc_id) {
  TermConstraint t;
  t.src_term = c.at("src").get<std::string>();
  t.tgt_lemma = c.at("lemma").get<std::string>();
  t.ref_inflected = optional_string(c, "ref");
  t.doc_id = doc_id;
  if (t.src_term.empty() || t.tgt_lemma.empty()) {
    throw std::invalid_argument("constraint with empty src or lemma");
  }
  return t;
}

json constraint_to_json(const TermConstraint& c) {
  json j = {{"src", c.src_term}, {"lemma", c.tgt_lemma}};
  if (c.ref_inflected) j["ref"] = *c.ref_inflected;
  return j;
}

template <typename F>
void for_each_json_line(std::istream& in, F&& f) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      f(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
}

json rate(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::vector<ConstraintLine> read_constraints_jsonl(std::istream& in) {
  std::vector<ConstraintLine> out;
  for_each_json_line(in, [&out](const json& j) {
    ConstraintLine line;
    line.sent_id = j.at("sent_id").is_string() ? j.at("sent_id").get<std::string>()
                                               : j.at("sent_id").dump();
    line.doc_id = optional_string(j, "doc_id");
    for (const auto& c : j.at("constraints")) {
      line.constraints.push_back(constraint_from_json(c, line.doc_id));
    }
    out.push_back(std::move(line));
  });
  return out;
}

std::string result_to_json_line(const std::string& sent_id, const InflectionResult& r) {
  json j = {{"sent_id", sent_id},
            {"src", r.constraint.src_term},
            {"lemma", r.constraint.tgt_lemma},
            {"form", r.form},
            {"tag", r.tag ? json(format_unimorph(*r.tag)) : json(nullptr)},
            {"provenance", std::string(to_string(r.provenance))}};
  if (!r.alternatives.empty()) j["alternatives"] = r.alternatives;
  return j.dump();
}

std::vector<EvalSuiteEntry> read_suite_jsonl(std::istream& in) {
  std::vector<EvalSuiteEntry> out;
  for_each_json_line(in, [&out](const json& j) {
    EvalSuiteEntry e;
    e.sent_id = j.at("sent_id").is_string() ? j.at("sent_id").get<std::string>()
                                            : j.at("sent_id").dump();
    e.doc_id = optional_string(j, "doc_id");
    e.source = j.at("source").get<std::string>();
    e.reference = j.at("reference").get<std::string>();
    for (const auto& c : j.at("constraints")) {
      e.constraints.push_back(constraint_from_json(c, e.doc_id));
    }
    try {
      validate_entry(e);
    } catch (const ValidationError& err) {
      throw std::invalid_argument(err.what());
    }
    out.push_back(std::move(e));
  });
  return out;
}

void write_suite_jsonl(std::ostream& out, const std::vector<EvalSuiteEntry>& suite) {
  for (const auto& e : suite) {
    json cs = json::array();
    for (const auto& c : e.constraints) cs.push_back(constraint_to_json(c));
    json j = {{"sent_id", e.sent_id},
              {"doc_id", e.doc_id ? json(*e.doc_id) : json(nullptr)},
              {"source", e.source},
              {"reference", e.reference},
              {"constraints", cs}};
    out << j.dump() << '\n';
  }
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::string report_to_json(const EvalReport& report) {
  auto buckets = [](const Buckets<std::optional<double>>& b) {
    return json{{"all", rate(b.all)}, {"no_inf", rate(b.no_inf)}, {"inf", rate(b.inf)}};
  };
  auto counts = [](const Buckets<std::size_t>& b) {
    return json{{"all", b.all}, {"no_inf", b.no_inf}, {"inf", b.inf}};
  };
  json per_sentence = json::array();
  for (const auto& s : report.per_sentence) {
    json cs = json::array();
    for (const auto& c : s.constraints) {
      cs.push_back({{"lemma", c.constraint.tgt_lemma},
                    {"ref", c.constraint.ref_inflected.value_or("")},
                    {"inflected", c.inflected},
                    {"lemma_used", c.lemma_used},
                    {"term_used", c.term_used}});
    }
    per_sentence.push_back({{"sent_id", s.sent_id}, {"constraints", cs}});
  }
  json j = {{"lemma_usage", buckets(report.lemma_usage)},
            {"term_usage", buckets(report.term_usage)},
            {"counts", counts(report.counts)},
            {"coverage_gaps", report.coverage_gaps},
            {"per_sentence", per_sentence}};
  return j.dump(2);
}

std::vector<ParallelSentence> read_parallel_corpus(std::istream& source,
                                                   std::istream& reference,
                                                   std::istream* doc_ids) {
  auto src = read_lines(source);
  auto ref = read_lines(reference);
  if (src.size() != ref.size()) {
    throw ValidationError("source has " + std::to_string(src.size()) +
                          " lines but reference has " + std::to_string(ref.size()));
  }
  std::vector<std::string> docs;
  if (doc_ids) {
    docs = read_lines(*doc_ids);
    if (docs.size() != src.size()) {
      throw ValidationError("doc id file has " + std::to_string(docs.size()) +
                            " lines but corpus has " + std::to_string(src.size()));
    }
  }
  std::vector<ParallelSentence> out;
  for (std::size_t i = 0; i < src.size(); ++i) {
    out.push_back({doc_ids ? std::string(trim(docs[i])) : std::string("doc1"),
                   std::to_string(i + 1), src[i], ref[i]});
  }
  return out;
}

}  // namespace terminflect
