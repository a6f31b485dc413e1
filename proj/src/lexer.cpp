#include "lexer.hpp"

#include <cctype>

#include "gadtmap/syntax.hpp"

namespace gadtmap::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct Alias {
  std::string_view utf8;
  Tok kind;
  std::string_view text;
};

constexpr Alias kAliases[] = {
    {"\xE2\x86\x92", Tok::Arrow, "->"},  // →
    {"\xE2\x88\x80", Tok::Ident, "forall"},  // ∀
    {"\xC3\x97", Tok::Star, "*"},  // ×
    {"\xE2\x84\x95", Tok::Ident, "Nat"},  // ℕ
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }

    const int tl = line;
    const int tc = col;
    auto emit = [&](Tok k, std::string text, std::size_t len) {
      out.push_back(Token{k, std::move(text), tl, tc});
      advance(len);
    };

    bool aliased = false;
    for (const Alias& a : kAliases) {
      if (src.substr(i, a.utf8.size()) == a.utf8) {
        emit(a.kind, std::string(a.text), a.utf8.size());
        aliased = true;
        break;
      }
    }
    if (aliased) continue;

    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      // Function-variable call label: g2^1.1
      if (j + 1 < src.size() && src[j] == '^' && digit(src[j + 1])) {
        ++j;
        while (j < src.size() && digit(src[j])) ++j;
        while (j + 1 < src.size() && src[j] == '.' && digit(src[j + 1])) {
          ++j;
          while (j < src.size() && digit(src[j])) ++j;
        }
      }
      emit(Tok::Ident, std::string(src.substr(i, j - i)), j - i);
      continue;
    }
    if (digit(c) || (c == '-' && i + 1 < src.size() && digit(src[i + 1]))) {
      std::size_t j = i + 1;
      while (j < src.size() && digit(src[j])) ++j;
      emit(Tok::Number, std::string(src.substr(i, j - i)), j - i);
      continue;
    }
    if (src.substr(i, 2) == "->") {
      emit(Tok::Arrow, "->", 2);
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case ':': k = Tok::Colon; break;
      case ';': k = Tok::Semi; break;
      case '.': k = Tok::Dot; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '#': k = Tok::Hash; break;
      case '@': k = Tok::At; break;
      case '<': k = Tok::Lt; break;
      case '>': k = Tok::Gt; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", tl, tc);
    }
    emit(k, std::string(1, c), 1);
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Hash: return "'#'";
    case Tok::At: return "'@'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

}  // namespace gadtmap::detail
