#include "terminflect/conllu.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "terminflect/errors.h"
#include "terminflect/text_util.h"

namespace terminflect {

namespace {

constexpr std::size_t kColumns = 10;

int parse_int(const std::string& field, const char* what, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(std::string("bad ") + what + " '" + field + "'", line_no);
  }
  return value;
}

Features parse_features(const std::string& field, std::size_t line_no) {
  Features feats;
  if (field == "_") return feats;
  for (const auto& item : split(field, '|')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParseError("bad feature '" + item + "'", line_no);
    }
    auto [it, inserted] = feats.emplace(item.substr(0, eq), item.substr(eq + 1));
    if (!inserted) throw ParseError("duplicate feature '" + it->first + "'", line_no);
  }
  return feats;
}

std::string value_or_blank(const std::string& s) { return s.empty() ? "_" : s; }

class SentenceBuilder {
 public:
  explicit SentenceBuilder(std::optional<std::string> doc_id)
      : current_doc_(std::move(doc_id)) {}

  void comment(const std::string& line) {
    std::string_view body = trim(std::string_view(line).substr(1));
    auto take = [&](std::string_view key) -> std::optional<std::string> {
      if (body.substr(0, key.size()) != key) return std::nullopt;
      auto rest = trim(body.substr(key.size()));
      if (rest.empty() || rest.front() != '=') return std::nullopt;
      return std::string(trim(rest.substr(1)));
    };
    if (auto v = take("newdoc id")) {
      current_doc_ = *v;
    } else if (auto s = take("sent_id")) {
      pending_.sent_id = *s;
    }
  }

  void token(SourceToken tok) { pending_.tokens.push_back(std::move(tok)); }

  bool empty() const { return pending_.tokens.empty(); }

  void flush(std::vector<ParsedSentence>& out) {
    if (pending_.tokens.empty()) {
      pending_ = {};
      return;
    }
    if (pending_.sent_id.empty()) pending_.sent_id = std::to_string(out.size() + 1);
    pending_.doc_id = current_doc_;
    validate_sentence(pending_);
    out.push_back(std::move(pending_));
    pending_ = {};
  }

 private:
  std::optional<std::string> current_doc_;
  ParsedSentence pending_;
};

}  // namespace

std::optional<std::string> feature(const Features& feats, const std::string& key) {
  auto it = feats.find(key);
  if (it == feats.end()) return std::nullopt;
  return it->second;
}

int ParsedSentence::root_index() const {
  for (const auto& t : tokens) {
    if (t.head == 0) return t.index;
  }
  return 0;
}

std::vector<int> ParsedSentence::children(int index) const {
  std::vector<int> out;
  for (const auto& t : tokens) {
    if (t.head == index) out.push_back(t.index);
  }
  return out;
}

std::vector<std::string> ParsedSentence::surface_forms() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.form);
  return out;
}

void validate_sentence(const ParsedSentence& sentence) {
  const auto& id = sentence.sent_id;
  const int n = static_cast<int>(sentence.tokens.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const auto& t = sentence.tokens[i];
    if (t.index != i + 1) {
      throw ValidationError("sentence " + id + ": token ids not contiguous at " +
                            std::to_string(t.index));
    }
    if (t.head < 0 || t.head > n) {
      throw ValidationError("sentence " + id + ": head " + std::to_string(t.head) +
                            " of token " + std::to_string(t.index) + " out of range");
    }
    if (t.head == t.index) {
      throw ValidationError("sentence " + id + ": token " + std::to_string(t.index) +
                            " is its own head");
    }
    if (t.head == 0) ++roots;
  }
  if (roots != 1) {
    throw ValidationError("sentence " + id + ": expected exactly one root, found " +
                          std::to_string(roots));
  }
  // Every head chain must reach the root within n steps.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0) {
      cur = sentence.tokens[cur - 1].head;
      if (++steps > n) {
        throw ValidationError("sentence " + id + ": cycle through token " +
                              std::to_string(i));
      }
    }
  }
}

std::vector<ParsedSentence> parse_conllu(std::istream& in,
                                         const std::optional<std::string>& default_doc_id) {
  std::vector<ParsedSentence> out;
  SentenceBuilder builder(default_doc_id);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) {
      builder.flush(out);
      continue;
    }
    if (line.front() == '#') {
      if (builder.empty()) builder.comment(line);
      continue;
    }
    auto cols = split(line, '\t');
    if (cols.size() != kColumns) {
      throw ParseError("expected 10 tab-separated columns, found " +
                           std::to_string(cols.size()),
                       line_no);
    }
    if (cols[0].find('-') != std::string::npos || cols[0].find('.') != std::string::npos) {
      continue;
    }
    SourceToken tok;
    tok.index = parse_int(cols[0], "token id", line_no);
    tok.form = cols[1];
    tok.lemma = cols[2];
    tok.upos = cols[3];
    tok.xpos = cols[4] == "_" ? "" : cols[4];
    tok.feats = parse_features(cols[5], line_no);
    tok.head = parse_int(cols[6], "head", line_no);
    tok.deprel = cols[7];
    tok.deps = cols[8] == "_" ? "" : cols[8];
    tok.misc = cols[9] == "_" ? "" : cols[9];
    if (tok.index < 1) throw ParseError("token id must be >= 1", line_no);
    builder.token(std::move(tok));
  }
  builder.flush(out);
  return out;
}

std::vector<ParsedSentence> parse_conllu_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_conllu(in, path);
}

std::vector<SourceToken> subtree_tokens(const ParsedSentence& sentence, int index) {
  std::vector<SourceToken> out;
  for (const auto& t : sentence.tokens) {
    if (t.index == index) continue;
    int cur = t.head;
    std::size_t steps = 0;
    while (cur != 0 && cur != index && steps++ <= sentence.size()) {
      cur = sentence.token(cur).head;
    }
    if (cur == index) out.push_back(t);
  }
  return out;
}

std::string format_features(const Features& feats) {
  if (feats.empty()) return "_";
  std::string out;
  for (const auto& [k, v] : feats) {
    if (!out.empty()) out += '|';
    out += k + "=" + v;
  }
  return out;
}

void write_conllu(std::ostream& out, const std::vector<ParsedSentence>& sentences) {
  std::optional<std::string> last_doc;
  for (const auto& s : sentences) {
    if (s.doc_id && s.doc_id != last_doc) {
      out << "# newdoc id = " << *s.doc_id << '\n';
      last_doc = s.doc_id;
    }
    out << "# sent_id = " << s.sent_id << '\n';
    for (const auto& t : s.tokens) {
      out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos << '\t'
          << value_or_blank(t.xpos) << '\t' << format_features(t.feats) << '\t'
          << t.head << '\t' << t.deprel << '\t' << value_or_blank(t.deps) << '\t'
          << value_or_blank(t.misc) << '\n';
    }
    out << '\n';
  }
}

}  // namespace terminflect
