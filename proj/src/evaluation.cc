#include "terminflect/evaluation.h"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

bool has_token_run(const std::vector<std::string>& tokens, const std::string& phrase) {
  return contains_sequence(tokens, split_whitespace(phrase));
}

std::optional<double> percent(std::size_t hits, std::size_t total) {
  if (total == 0) return std::nullopt;
  return 100.0 * static_cast<double>(hits) / static_cast<double>(total);
}

void tally(Buckets<std::size_t>& b, bool inflected, bool hit) {
  if (!hit) return;
  ++b.all;
  ++(inflected ? b.inf : b.no_inf);
}

}  // namespace

void validate_entry(const EvalSuiteEntry& entry) {
  auto ref_tokens = split_whitespace(entry.reference);
  for (const auto& c : entry.constraints) {
    if (c.src_term.empty() || c.tgt_lemma.empty()) {
      throw ValidationError("sentence " + entry.sent_id + ": empty constraint field");
    }
    if (!c.ref_inflected) {
      throw ValidationError("sentence " + entry.sent_id + ": constraint '" + c.tgt_lemma +
                            "' has no reference form");
    }
    if (!has_token_run(ref_tokens, *c.ref_inflected)) {
      throw ValidationError("sentence " + entry.sent_id + ": reference form '" +
                            *c.ref_inflected + "' not in reference");
    }
  }
}

bool requires_inflection(const TermConstraint& constraint) {
  if (!constraint.ref_inflected) {
    throw std::invalid_argument("constraint '" + constraint.tgt_lemma +
                                "' has no reference form");
  }
  return *constraint.ref_inflected != constraint.tgt_lemma;
}

std::vector<std::string> surface_forms(const std::string& lemma, const Resources& res) {
  std::vector<std::string> out{lemma};
  auto add = [&out](const std::string& f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  bool nominal = true;
  std::optional<Gender> gender;
  if (res.lexicon) {
    for (const auto& f : res.lexicon->forms_of(lemma)) add(f);
    if (auto pos = res.lexicon->pos_of(lemma); !pos.empty()) {
      nominal = pos.count(Pos::N) || pos.count(Pos::PROPN);
    }
    gender = res.lexicon->gender_of(lemma);
  }
  if (res.language == Language::LT && res.declension && nominal) {
    if (auto p = res.declension->paradigm(lemma, gender)) {
      for (const auto& [key, form] : *p) add(form);
    }
  }
  return out;
}

bool lemma_usage(const std::string& hypothesis, const TermConstraint& constraint,
                 const Resources& resources) {
  auto tokens = split_whitespace(hypothesis);
  for (const auto& f : surface_forms(constraint.tgt_lemma, resources)) {
    if (has_token_run(tokens, f)) return true;
  }
  return false;
}

bool term_usage(const std::string& hypothesis, const TermConstraint& constraint) {
  if (!constraint.ref_inflected) {
    throw std::invalid_argument("constraint '" + constraint.tgt_lemma +
                                "' has no reference form");
  }
  return has_token_run(split_whitespace(hypothesis), *constraint.ref_inflected);
}

EvalReport evaluate(const std::vector<EvalSuiteEntry>& suite,
                    const std::vector<std::string>& hypotheses, const Resources& resources) {
  if (suite.empty()) throw std::invalid_argument("empty suite");
  if (suite.size() != hypotheses.size()) {
    throw std::invalid_argument("suite has " + std::to_string(suite.size()) +
                                " sentences but there are " +
                                std::to_string(hypotheses.size()) + " hypotheses");
  }

  EvalReport report;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& entry = suite[i];
    SentenceOutcome sent{entry.sent_id, {}};
    for (const auto& c : entry.constraints) {
      ConstraintOutcome o{c, requires_inflection(c), lemma_usage(hypotheses[i], c, resources),
                          term_usage(hypotheses[i], c)};
      tally(report.counts, o.inflected, true);
      tally(report.lemma_hits, o.inflected, o.lemma_used);
      tally(report.term_hits, o.inflected, o.term_used);

      auto forms = surface_forms(c.tgt_lemma, resources);
      if (std::find(forms.begin(), forms.end(), *c.ref_inflected) == forms.end()) {
        report.coverage_gaps.push_back(entry.sent_id + ": '" + *c.ref_inflected +
                                       "' is not a known form of '" + c.tgt_lemma + "'");
      }
      sent.constraints.push_back(std::move(o));
    }
    report.per_sentence.push_back(std::move(sent));
  }

  auto rates = [&report](const Buckets<std::size_t>& hits) {
    return Buckets<std::optional<double>>{percent(hits.all, report.counts.all),
                                          percent(hits.no_inf, report.counts.no_inf),
                                          percent(hits.inf, report.counts.inf)};
  };
  report.lemma_usage = rates(report.lemma_hits);
  report.term_usage = rates(report.term_hits);
  return report;
}

std::string format_report_table(const EvalReport& report) {
  auto cell = [](const std::optional<double>& v) {
    std::ostringstream s;
    if (v) {
      s << std::fixed << std::setprecision(1) << *v;
    } else {
      s << "N/A";
    }
    return s.str();
  };
  std::ostringstream out;
  auto row = [&](const std::string& name, const auto& a, const auto& b, const auto& c) {
    out << std::left << std::setw(12) << name << std::right << std::setw(8) << a
        << std::setw(8) << b << std::setw(8) << c << '\n';
  };
  row("", "All", "No Inf", "Inf");
  row("Lemma Usage", cell(report.lemma_usage.all), cell(report.lemma_usage.no_inf),
      cell(report.lemma_usage.inf));
  row("Term Usage", cell(report.term_usage.all), cell(report.term_usage.no_inf),
      cell(report.term_usage.inf));
  row("#Const", std::to_string(report.counts.all), std::to_string(report.counts.no_inf),
      std::to_string(report.counts.inf));
  return out.str();
}

}  // namespace terminflect
