#include "latticelab/recipe.hpp"

#include "latticelab/theta_numeric.hpp"

#include <cctype>

namespace latticelab {
namespace {

class RecipeParser {
 public:
  RecipeParser(std::string_view text, RecipeBindings& vars) : text_(text), vars_(vars) {}

  Complex statement_list() {
    Complex last;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const std::size_t save = pos_;
      std::string name = identifier();
      skip_space();
      if (!name.empty() && peek() == '=' ) {
        ++pos_;
        Complex v = expression();
        if (name == "i" || name == "pi") fail("cannot rebind '" + name + "'");
        vars_[name] = v;
        last = v;
      } else {
        pos_ = save;
        last = expression();
      }
      any = true;
      skip_space();
      if (at_end()) break;
      if (peek() != ';') fail("expected ';' or end of recipe");
      ++pos_;
    }
    if (!any) fail("empty recipe");
    return last;
  }

 private:
  Complex expression() {
    skip_space();
    Complex v;
    if (peek() == '-' || peek() == '+') {
      const bool neg = peek() == '-';
      ++pos_;
      v = term();
      if (neg) v = -v;
    } else {
      v = term();
    }
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v = v + term();
      } else if (c == '-') {
        ++pos_;
        v = v - term();
      } else {
        break;
      }
    }
    return v;
  }

  bool starts_factor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.' || c == '_';
  }

  Complex term() {
    Complex v = power();
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * power();
      } else if (c == '/') {
        ++pos_;
        Complex d = power();
        if (norm(d) == 0) fail("division by zero");
        v = v / d;
      } else if (starts_factor(c)) {
        v = v * power();  // implicit multiplication
      } else {
        break;
      }
    }
    return v;
  }

  Complex power() {
    Complex base = primary();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      Complex e;
      if (!at_end() && peek() == '-') {
        ++pos_;
        e = -power();
      } else {
        e = power();  // right associative
      }
      if (norm(base) == 0 && !(e.re > 0)) fail("zero to a nonpositive power");
      return pow(base, e);
    }
    return base;
  }

  Complex primary() {
    skip_space();
    if (at_end()) fail("unexpected end of recipe");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Complex v = expression();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '-') {
      ++pos_;
      return -power();
    }
    const std::string name = identifier();
    if (name.empty()) fail(std::string("unexpected character '") + c + "'");
    skip_space();
    if (!at_end() && peek() == '(' && is_function(name)) {
      ++pos_;
      Complex arg = expression();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')' after function argument");
      ++pos_;
      return apply(name, arg);
    }
    if (name == "i") return Complex::i();
    if (name == "pi") return Complex(pi());
    auto it = vars_.find(name);
    if (it == vars_.end()) fail("unknown name '" + name + "'");
    return it->second;
  }

  static bool is_function(const std::string& n) {
    return n == "sqrt" || n == "cbrt" || n == "exp" || n == "log" || n == "abs" || n == "re" || n == "im" ||
           n == "conj" || n == "alpha";
  }

  Complex apply(const std::string& n, const Complex& x) {
    if (n == "sqrt") return sqrt(x);
    if (n == "cbrt") return cbrt(x);
    if (n == "exp") return exp(x);
    if (n == "log") {
      if (norm(x) == 0) fail("log of zero");
      return log(x);
    }
    if (n == "abs") return Complex(abs(x));
    if (n == "re") return Complex(x.re);
    if (n == "im") return Complex(x.im);
    if (n == "conj") return conj(x);
    // alpha
    if (!x.is_real() || !(x.re > 0)) fail("alpha(x) needs a positive real x");
    return Complex(singular_modulus(x.re));
  }

  Complex number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    const std::string lit(text_.substr(start, pos_ - start));
    try {
      return Complex(to_real(parse_rational(lit)));
    } catch (const ParseError&) {
      fail("bad number '" + lit + "'");
    }
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) return {};
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("recipe: " + what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  std::string_view text_;
  RecipeBindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Complex evaluate_recipe(std::string_view recipe, const RecipeBindings& bindings) {
  RecipeBindings vars = bindings;
  RecipeParser parser(recipe, vars);
  return parser.statement_list();
}

}  // namespace latticelab
