#include "invtree/error.hpp"
#include "invtree/objects.hpp"

#include <charconv>
#include <limits>

namespace invtree {

namespace {

// Parses one signed decimal integer starting at text[pos]; advances pos.
int read_int(std::string_view text, std::size_t& pos, std::size_t base_offset) {
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(base_offset + pos, "integer out of range");
  if (ec != std::errc() || ptr == first) throw ParseError(base_offset + pos, "expected an integer");
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

std::vector<int> read_int_list(std::string_view text, std::size_t base_offset, bool allow_empty) {
  std::vector<int> out;
  if (text.empty()) {
    if (allow_empty) return out;
    throw ParseError(base_offset, "empty list");
  }
  std::size_t pos = 0;
  while (true) {
    out.push_back(read_int(text, pos, base_offset));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(base_offset + pos, std::string("unexpected character '") + text[pos] + "'");
    ++pos;
  }
  return out;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  offset = 0;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::size_t offset = 0;
  auto body = trim(text, offset);
  return read_int_list(body, offset, false);
}

InversionSequence parse_inversion_sequence(std::string_view text) {
  return InversionSequence{parse_int_list(text)};
}

Permutation parse_permutation(std::string_view text) {
  return Permutation{parse_int_list(text)};
}

Path parse_path(std::string_view text, PathKind kind) {
  std::size_t offset = 0;
  auto body = trim(text, offset);
  Path p;
  p.kind = kind;
  const auto semi = body.find(';');
  const auto word = body.substr(0, semi);
  if (word.empty()) throw ParseError(offset, "empty step word");
  p.steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'U': p.steps.push_back(Step::U); break;
      case 'D': p.steps.push_back(Step::D); break;
      case 'W': p.steps.push_back(Step::W); break;
      default: throw ParseError(offset + i, std::string("step '") + word[i] + "' is not one of U, D, W");
    }
  }
  const std::size_t valley_count = valleys(p.steps).size();
  if (semi == std::string_view::npos) {
    p.marks.assign(valley_count, 0);
    return p;
  }
  constexpr std::string_view key = "marks=";
  const auto suffix = body.substr(semi + 1);
  const std::size_t suffix_offset = offset + semi + 1;
  if (suffix.substr(0, key.size()) != key) throw ParseError(suffix_offset, "expected 'marks='");
  p.marks = read_int_list(suffix.substr(key.size()), suffix_offset + key.size(), true);
  if (p.marks.size() != valley_count) {
    throw ParseError(suffix_offset, std::to_string(p.marks.size()) + " marks given for " +
                                        std::to_string(valley_count) + " valleys");
  }
  return p;
}

namespace {

struct TreeParser {
  std::string_view text;
  std::size_t base;
  std::size_t pos = 0;
  std::vector<std::pair<int, std::vector<int>>> nodes;  // label, children labels

  int parse_node() {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') throw ParseError(base + pos, "expected a vertex label");
    const int label = read_int(text, pos, base);
    const std::size_t slot = nodes.size();
    nodes.push_back({label, {}});
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<int> kids;
      while (true) {
        kids.push_back(parse_node());
        if (pos >= text.size()) throw ParseError(base + pos, "unterminated '('");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] == ',') ++pos;
      }
      nodes[slot].second = std::move(kids);
    }
    return label;
  }
};

void append_tree(const IncreasingTree& t, int v, std::string& out) {
  out += std::to_string(v);
  const auto& kids = t.children[static_cast<std::size_t>(v)];
  if (kids.empty()) return;
  out += '(';
  bool previous_leaf = false;
  for (int c : kids) {
    if (previous_leaf) out += ',';
    append_tree(t, c, out);
    previous_leaf = t.children[static_cast<std::size_t>(c)].empty();
  }
  out += ')';
}

}  // namespace

IncreasingTree parse_tree(std::string_view text) {
  std::size_t offset = 0;
  auto body = trim(text, offset);
  TreeParser parser{body, offset, 0, {}};
  const int root = parser.parse_node();
  if (parser.pos != body.size()) throw ParseError(offset + parser.pos, "trailing characters after tree");
  if (root != 0) throw ParseError(offset, "root must be labelled 0");
  const int n = static_cast<int>(parser.nodes.size()) - 1;
  IncreasingTree t;
  t.children.assign(static_cast<std::size_t>(n) + 1, {});
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [label, kids] : parser.nodes) {
    if (label < 0 || label > n || seen[static_cast<std::size_t>(label)]) {
      throw ParseError(offset, "labels must be exactly {0, ..., " + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(label)] = true;
    t.children[static_cast<std::size_t>(label)] = kids;
  }
  return t;
}

std::string to_text(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_text(const InversionSequence& e) { return to_text(std::span<const int>(e.entries)); }
std::string to_text(const Permutation& p) { return to_text(std::span<const int>(p.values)); }

std::string step_word(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out += static_cast<char>(s);
  return out;
}

std::string to_text(const Path& p) {
  std::string out = step_word(p.steps);
  if (is_valley_marked(p.kind) && !p.marks.empty()) {
    out += ";marks=";
    out += to_text(std::span<const int>(p.marks));
  }
  return out;
}

std::string to_text(const IncreasingTree& t) {
  std::string out;
  if (!t.children.empty()) append_tree(t, 0, out);
  return out;
}

}  // namespace invtree
