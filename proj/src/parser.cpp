#include "spatialkit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include <fmt/format.h>

namespace spatialkit {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

struct Token {
  std::size_t begin;
  std::size_t end;
  std::string text;
};

std::vector<Token> word_tokens(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_word_char(text[j])) ++j;
    tokens.push_back({i, j, text.substr(i, j - i)});
    i = j;
  }
  return tokens;
}

// True when `gap` holds nothing but list punctuation and joining words.
bool is_separator(std::string_view gap) {
  static const std::set<std::string, std::less<>> kJoiners = {
      "then", "and", "to", "next", "via", "finally"};
  std::string lower = lowercase(gap);
  std::size_t i = 0;
  while (i < lower.size()) {
    const auto u = static_cast<unsigned char>(lower[i]);
    if (std::isspace(u) || std::string_view(",;-><[]{}|:=").find(lower[i]) !=
                               std::string_view::npos) {
      ++i;
    } else if (lower.compare(i, 3, "\xe2\x86\x92") == 0) {  // U+2192 arrow
      i += 3;
    } else if (is_word_char(lower[i])) {
      std::size_t j = i;
      while (j < lower.size() && is_word_char(lower[j])) ++j;
      if (!kJoiners.contains(std::string_view(lower).substr(i, j - i))) return false;
      i = j;
    } else {
      return false;
    }
  }
  return true;
}

struct Tuple {
  std::size_t begin;
  std::size_t end;
  Cell cell;
};

// Reads "(c, r)" or "[c, r]" at `pos`; both numbers may carry a sign.
std::optional<Tuple> read_tuple(std::string_view text, std::size_t pos) {
  const char open = text[pos];
  if (open != '(' && open != '[') return std::nullopt;
  const char close = open == '(' ? ')' : ']';
  std::size_t i = pos + 1;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::optional<int> {
    skip_space();
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    const std::size_t digits_from = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = std::min(value * 10 + (text[i] - '0'), 1000000L);
      ++i;
    }
    if (i == digits_from) return std::nullopt;
    skip_space();
    return static_cast<int>(negative ? -value : value);
  };
  const auto col = read_int();
  if (!col || i >= text.size() || text[i] != ',') return std::nullopt;
  ++i;
  const auto row = read_int();
  if (!row || i >= text.size() || text[i] != close) return std::nullopt;
  return Tuple{pos, i + 1, Cell{*col, *row}};
}

}  // namespace

std::string_view to_string(ResponseKind kind) {
  switch (kind) {
    case ResponseKind::McqChoice: return "mcq_choice";
    case ResponseKind::CellPath: return "cell_path";
    case ResponseKind::VisitOrder: return "visit_order";
    case ResponseKind::Unparseable: return "unparseable";
  }
  return "?";
}

ParsedResponse ParsedResponse::unparseable(std::string why) {
  ParsedResponse r;
  r.kind = ResponseKind::Unparseable;
  r.diagnostics = std::move(why);
  return r;
}

ParsedResponse parse_mcq(std::string_view text,
                         std::span<const std::string> options) {
  const std::string lower = lowercase(text);
  auto chosen = [](char letter, std::string how) {
    ParsedResponse r;
    r.kind = ResponseKind::McqChoice;
    r.choice = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
    r.diagnostics = std::move(how);
    return r;
  };

  static const std::regex kExplicit(
      R"(answer(?:\s+is\s*:?|\s*:)[\s\*]*(?:option\s*)?[\(\[]?\s*([a-d])\s*[\)\]]?(?![a-z0-9]))");
  std::optional<char> last;
  for (auto it = std::sregex_iterator(lower.begin(), lower.end(), kExplicit);
       it != std::sregex_iterator(); ++it) {
    last = (*it)[1].str()[0];
  }
  if (last) return chosen(*last, "explicit answer phrase");

  // Capitals only: a lowercase "a" is usually the article.
  std::set<char> letters;
  for (const auto& tok : word_tokens(std::string(text))) {
    if (tok.text.size() == 1 && tok.text[0] >= 'A' && tok.text[0] <= 'D') {
      letters.insert(tok.text[0]);
    }
  }
  if (letters.size() == 1) return chosen(*letters.begin(), "standalone letter");

  // Option texts; a match nested inside a longer matching option (e.g.
  // "left" inside "top left") does not count.
  struct Hit {
    std::size_t option;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Hit> hits;
  for (std::size_t k = 0; k < options.size() && k < 4; ++k) {
    const std::string needle = lowercase(options[k]);
    if (needle.empty()) continue;
    for (std::size_t pos = lower.find(needle); pos != std::string::npos;
         pos = lower.find(needle, pos + 1)) {
      const std::size_t end = pos + needle.size();
      const bool bounded = (pos == 0 || !is_word_char(lower[pos - 1])) &&
                           (end == lower.size() || !is_word_char(lower[end]));
      if (bounded) hits.push_back({k, pos, end});
    }
  }
  std::set<std::size_t> matched;
  for (const auto& h : hits) {
    const bool nested = std::any_of(hits.begin(), hits.end(), [&](const Hit& o) {
      return o.option != h.option && o.begin <= h.begin && h.end <= o.end &&
             (o.end - o.begin) > (h.end - h.begin);
    });
    if (!nested) matched.insert(h.option);
  }
  if (matched.size() == 1) {
    return chosen(static_cast<char>('a' + *matched.begin()), "option text match");
  }

  if (lower.find_first_not_of(" \t\r\n") == std::string::npos) {
    return ParsedResponse::unparseable("empty response");
  }
  if (letters.size() > 1) {
    return ParsedResponse::unparseable(
        fmt::format("conflicting option letters ({})", letters.size()));
  }
  return ParsedResponse::unparseable("no option letter or option text found");
}

ParsedResponse parse_path(std::string_view text, int grid_n) {
  std::vector<Tuple> tuples;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (auto t = read_tuple(text, pos)) {
      tuples.push_back(*t);
      pos = t->end - 1;
    }
  }
  if (tuples.empty()) return ParsedResponse::unparseable("no (c, r) tuples found");

  std::size_t best_from = 0, best_len = 0;
  for (std::size_t from = 0; from < tuples.size();) {
    std::size_t to = from + 1;
    while (to < tuples.size() &&
           is_separator(text.substr(tuples[to - 1].end,
                                    tuples[to].begin - tuples[to - 1].end))) {
      ++to;
    }
    if (to - from >= best_len) {
      best_from = from;
      best_len = to - from;
    }
    from = to;
  }

  ParsedResponse r;
  r.kind = ResponseKind::CellPath;
  for (std::size_t k = best_from; k < best_from + best_len; ++k) {
    const Cell c = tuples[k].cell;
    if (c.col < 0 || c.row < 0 || c.col >= grid_n || c.row >= grid_n) {
      return ParsedResponse::unparseable(
          fmt::format("cell ({}, {}) outside the {}x{} grid", c.col, c.row,
                      grid_n, grid_n));
    }
    r.cells.push_back(c);
  }
  r.diagnostics = fmt::format("{} cells", r.cells.size());
  return r;
}

ParsedResponse parse_order(std::string_view text,
                           std::span<const std::string> labels) {
  const std::string lower = lowercase(text);
  ParsedResponse r;
  r.kind = ResponseKind::VisitOrder;
  for (const auto& tok : word_tokens(lower)) {
    const auto it = std::find_if(labels.begin(), labels.end(), [&](const std::string& l) {
      return lowercase(l) == tok.text;
    });
    if (it == labels.end()) continue;
    if (!r.order.empty() && r.order.back() == *it) continue;
    r.order.push_back(*it);
  }
  if (r.order.size() > 1 && r.order.back() == r.order.front()) r.order.pop_back();
  if (r.order.empty()) return ParsedResponse::unparseable("no known labels found");
  r.diagnostics = fmt::format("{} labels", r.order.size());
  return r;
}

}  // namespace spatialkit
