#include "mdl/expr.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace mdl {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found,
                       std::string message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)),
      message_(std::move(message)) {}

std::string ParseError::annotate(std::string_view input) const {
  std::ostringstream os;
  os << "error: " << message_ << " (at offset " << offset_ << ")\n";
  os << "  " << input << "\n";
  os << "  " << std::string(std::min(offset_, input.size()), ' ') << '^';
  std::size_t width = found_.size();
  if (width > 1 && offset_ + width <= input.size()) os << std::string(width - 1, '~');
  os << '\n';
  if (!expected_.empty()) {
    os << "  expected one of:";
    for (const auto& e : expected_) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

namespace {

enum class Tok { Word, Semicolon, Colon, Comma, LParen, RParen, Pipe, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t begin;
  std::size_t end;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::optional<Tok> punct(char c) {
  switch (c) {
    case ';': return Tok::Semicolon;
    case ':': return Tok::Colon;
    case ',': return Tok::Comma;
    case '(': return Tok::LParen;
    case ')': return Tok::RParen;
    case '|': return Tok::Pipe;
    default: return std::nullopt;
  }
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    if (auto p = punct(s[i])) {
      out.push_back({*p, s.substr(i, 1), i, i + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i]) && !punct(s[i])) ++i;
    out.push_back({Tok::Word, s.substr(start, i - start), start, i});
  }
  out.push_back({Tok::End, {}, s.size(), s.size()});
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

enum class Clause { Data = 0, Model = 1, Restrictions = 2 };

constexpr std::array<std::string_view, 3> kClauseNames = {"data", "model", "restrictions"};

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input), toks_(lex(input)) {}

  Expression run() {
    parse_version();
    int last_clause = -1;
    while (peek().kind == Tok::Semicolon) {
      const Token& semi = next();
      if (peek().kind == Tok::End)
        fail(semi, {"data", "model", "restrictions"}, "trailing ';' without a clause");
      last_clause = parse_clause(last_clause);
    }
    if (peek().kind != Tok::End) fail(peek(), {"';'", "end of input"}, "unexpected " + describe(peek()));
    return Expression{std::string(input_), std::move(grant_), std::move(spans_)};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) {
      spans_.push_back({std::string(t.text), t.begin, t.end});
      ++pos_;
    }
    return t;
  }

  [[noreturn]] void fail(const Token& at, std::vector<std::string> expected, std::string message) {
    throw ParseError(at.begin, std::move(expected),
                     at.kind == Tok::End ? std::string() : std::string(at.text), std::move(message));
  }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind)
      fail(peek(), {std::string(what)}, "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }

  void parse_version() {
    const Token& t = peek();
    if (t.kind != Tok::Word || lower(t.text) != lower(kTemplateVersion)) {
      std::string msg = t.kind == Tok::Word
                            ? "unsupported version " + describe(t)
                            : "expected version '" + std::string(kTemplateVersion) + "', found " + describe(t);
      fail(t, {std::string(kTemplateVersion)}, msg);
    }
    next();
  }

  int parse_clause(int last_clause) {
    const Token& kw = peek();
    if (kw.kind != Tok::Word)
      fail(kw, {"data", "model", "restrictions"}, "expected a clause, found " + describe(kw));
    std::string name = lower(kw.text);
    auto it = std::find(kClauseNames.begin(), kClauseNames.end(), name);
    if (it == kClauseNames.end())
      fail(kw, {"data", "model", "restrictions"}, "unknown clause " + describe(kw));
    int clause = static_cast<int>(it - kClauseNames.begin());
    if (clause == last_clause) fail(kw, {}, "duplicate clause " + describe(kw));
    if (clause < last_clause)
      fail(kw, {}, "clause " + describe(kw) + " must precede '" +
                       std::string(kClauseNames[static_cast<std::size_t>(last_clause)]) + "'");
    next();
    expect(Tok::Colon, "':'");
    switch (static_cast<Clause>(clause)) {
      case Clause::Data: parse_rights(RightFamily::Data); break;
      case Clause::Model: parse_rights(RightFamily::Model); break;
      case Clause::Restrictions: parse_restrictions(); break;
    }
    return clause;
  }

  static std::vector<std::string> family_tokens(RightFamily f) {
    std::vector<std::string> out;
    for (Right r : kAllRights)
      if (family(r) == f) out.emplace_back(token(r));
    return out;
  }

  // Fails on a comma followed by a clause separator or the end of input.
  void check_trailing_comma(const Token& comma) {
    if (peek().kind == Tok::Semicolon || peek().kind == Tok::End)
      fail(comma, {}, "trailing ','");
  }

  void parse_rights(RightFamily fam) {
    RightSet rights = grant_.rights();
    for (;;) {
      const Token& t = peek();
      if (t.kind != Tok::Word)
        fail(t, family_tokens(fam), "expected a " + std::string(token(fam)) + " right, found " + describe(t));
      auto r = right_from_token(lower(t.text));
      if (!r || family(*r) != fam) {
        std::string msg = "unknown " + std::string(token(fam)) + " right " + describe(t);
        if (r) msg += " ('" + std::string(token(*r)) + "' belongs in the " +
                      std::string(token(family(*r))) + " clause)";
        fail(t, family_tokens(fam), msg);
      }
      if (rights.contains(*r)) fail(t, {}, "duplicate right " + describe(t));
      rights.insert(*r);
      next();
      if (peek().kind != Tok::Comma) break;
      check_trailing_comma(next());
    }
    grant_ = grant_.with_rights(rights);
  }

  void parse_restrictions() {
    static const std::vector<std::string> kExpected = {"attribution", "confidential", "no-sublicense",
                                                       "parties(", "exclude("};
    for (;;) {
      const Token& t = peek();
      if (t.kind != Tok::Word)
        fail(t, kExpected, "expected a restriction, found " + describe(t));
      std::string kw = lower(t.text);
      std::optional<RestrictionKind> kind;
      for (RestrictionKind k : kAllRestrictionKinds)
        if (token(k) == kw) kind = k;
      if (!kind) fail(t, kExpected, "unknown restriction " + describe(t));
      if (grant_.has(*kind)) fail(t, {}, "duplicate restriction " + describe(t));
      if ((*kind == RestrictionKind::Confidential && grant_.has(RestrictionKind::AttributionRequired)) ||
          (*kind == RestrictionKind::AttributionRequired && grant_.has(RestrictionKind::Confidential)))
        fail(t, {}, "'attribution' and 'confidential' are mutually exclusive");
      next();
      Restriction r{*kind, {}};
      if (has_payload(*kind)) {
        expect(Tok::LParen, "'('");
        r.payload = parse_id_list();
      } else if (peek().kind == Tok::LParen) {
        fail(peek(), {"','", "';'", "end of input"}, describe(t) + " takes no arguments");
      }
      grant_.add(std::move(r));
      if (peek().kind != Tok::Comma) break;
      check_trailing_comma(next());
    }
  }

  std::vector<std::string> parse_id_list() {
    std::vector<std::string> ids;
    for (;;) {
      const Token& t = peek();
      if (t.kind != Tok::Word) {
        fail(t, {"identifier"}, ids.empty() && t.kind == Tok::RParen
                                    ? "empty identifier list"
                                    : "expected an identifier, found " + describe(t));
      }
      ids.emplace_back(t.text);
      next();
      if (peek().kind == Tok::Pipe) {
        next();
        continue;
      }
      expect(Tok::RParen, "')'");
      return ids;
    }
  }

  std::string_view input_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  GrantSet grant_;
  std::vector<TokenSpan> spans_;
};

void append_rights(std::string& out, std::string_view clause, RightSet rights) {
  if (rights.empty()) return;
  out += "; ";
  out += clause;
  out += ": ";
  bool first = true;
  for (Right r : rights.members()) {
    if (!first) out += ", ";
    out += token(r);
    first = false;
  }
}

}  // namespace

Expression parse(std::string_view text) { return Parser(text).run(); }

GrantSet parse_grant(std::string_view text) { return parse(text).grant; }

std::string serialize(const GrantSet& g) {
  std::string out(kTemplateVersion);
  append_rights(out, "data", g.data_rights());
  append_rights(out, "model", g.model_rights());
  if (!g.restrictions().empty()) {
    out += "; restrictions: ";
    bool first = true;
    for (const auto& r : g.restrictions()) {
      if (!first) out += ", ";
      out += to_string(r);
      first = false;
    }
  }
  return out;
}

std::string canonical(std::string_view text) { return serialize(parse_grant(text)); }

}  // namespace mdl
