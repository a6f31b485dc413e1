#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gadtmap::detail {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Colon,
  Semi,
  Dot,
  Arrow,
  Star,
  Plus,
  Hash,
  At,
  Lt,
  Gt,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

/// Tokenize the whole input; `--` starts a comment running to end of line.
/// Throws ParseError on an unexpected character.
std::vector<Token> tokenize(std::string_view text);

std::string_view describe(Tok t);

}  // namespace gadtmap::detail
