#include <cctype>
#include <string>
#include <vector>

#include "leavitt/lpa.hpp"

namespace leavitt {

  namespace {

    enum class Tok { ident, integer, slash, dot, star, plus, minus, lparen, rparen, end };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t column;  // 1-based
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        k = 0;
      while (k < text.size()) {
        unsigned char ch = static_cast<unsigned char>(text[k]);
        if (std::isspace(ch)) {
          ++k;
          continue;
        }
        std::size_t col = k + 1;
        if (std::isalpha(ch) || ch == '_') {
          std::size_t start = k;
          while (k < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) {
            ++k;
          }
          out.push_back({Tok::ident, std::string(text.substr(start, k - start)), col});
          continue;
        }
        if (std::isdigit(ch)) {
          std::size_t start = k;
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
            ++k;
          }
          out.push_back({Tok::integer, std::string(text.substr(start, k - start)), col});
          continue;
        }
        Tok kind;
        switch (ch) {
          case '/': kind = Tok::slash; break;
          case '.': kind = Tok::dot; break;
          case '*': kind = Tok::star; break;
          case '+': kind = Tok::plus; break;
          case '-': kind = Tok::minus; break;
          case '(': kind = Tok::lparen; break;
          case ')': kind = Tok::rparen; break;
          default:
            throw ParseError(std::string("unexpected character '")
                                 + static_cast<char>(ch) + "'",
                             1, col);
        }
        out.push_back({kind, std::string(1, static_cast<char>(ch)), col});
        ++k;
      }
      out.push_back({Tok::end, "", text.size() + 1});
      return out;
    }

    class Parser {
     public:
      Parser(LeavittAlgebra const& algebra, std::string_view text)
          : _algebra(algebra), _tokens(tokenize(text)) {}

      AlgebraElement parse() {
        AlgebraElement x = expr();
        if (peek().kind != Tok::end) {
          fail("unexpected '" + peek().text + "'");
        }
        return x;
      }

     private:
      Token const& peek() const { return _tokens[_pos]; }
      Token const& next() { return _tokens[_pos++]; }

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, 1, peek().column);
      }

      Token const& expect(Tok kind, char const* what) {
        if (peek().kind != kind) {
          fail(std::string("expected ") + what
               + (peek().kind == Tok::end ? " at end of input"
                                          : ", found '" + peek().text + "'"));
        }
        return next();
      }

      AlgebraElement expr() {
        Scalar sign = 1;
        if (peek().kind == Tok::minus) {
          next();
          sign = -1;
        }
        AlgebraElement x = sign * term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
          bool minus = next().kind == Tok::minus;
          AlgebraElement t = term();
          x.add(t, minus ? Scalar(-1) : Scalar(1));
        }
        return x;
      }

      AlgebraElement term() {
        if (peek().kind == Tok::integer) {
          Scalar r = rational();
          if (peek().kind != Tok::dot) {
            return r * _algebra.one();
          }
          next();
          return r * factors();
        }
        return factors();
      }

      AlgebraElement factors() {
        AlgebraElement x = factor();
        while (peek().kind == Tok::dot) {
          next();
          x = _algebra.multiply(x, factor());
        }
        return x;
      }

      AlgebraElement factor() {
        if (peek().kind == Tok::lparen) {
          next();
          AlgebraElement x = expr();
          expect(Tok::rparen, "')'");
          return x;
        }
        if (peek().kind != Tok::ident) {
          fail(peek().kind == Tok::end ? "expected a generator at end of input"
                                       : "expected a generator, found '" + peek().text
                                             + "'");
        }
        Token const& id    = next();
        bool         ghost = false;
        if (peek().kind == Tok::star) {
          next();
          ghost = true;
        }
        try {
          return _algebra.generator(id.text, ghost);
        } catch (ParseError const&) {
          throw;
        } catch (Error const& e) {
          throw ParseError(e.what(), 1, id.column);
        }
      }

      Scalar rational() {
        Scalar num(expect(Tok::integer, "an integer").text);
        if (peek().kind == Tok::slash) {
          next();
          Token const& den_tok = expect(Tok::integer, "a denominator");
          Scalar       den(den_tok.text);
          if (den == 0) {
            throw ParseError("zero denominator", 1, den_tok.column);
          }
          num /= den;
        }
        num.canonicalize();
        return num;
      }

      LeavittAlgebra const& _algebra;
      std::vector<Token>    _tokens;
      std::size_t           _pos = 0;
    };

  }  // namespace

  AlgebraElement parse_expr(LeavittAlgebra const& algebra, std::string_view text) {
    return Parser(algebra, text).parse();
  }

}  // namespace leavitt
