#include <string>
#include <vector>

#include "nodalsplit/errors.hpp"
#include "nodalsplit/form.hpp"

namespace nodalsplit {
namespace {

// Sparse polynomial with unrestricted degrees, used while parsing.
using Poly = TermMap;

void accumulate(Poly& p, const Exponent& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly add(Poly a, const Poly& b, int sign) {
  for (const auto& [e, c] : b) accumulate(a, e, sign > 0 ? c : -c);
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e;
      for (std::size_t i = 0; i < 4; ++i) {
        int v = ea[i] + eb[i];
        if (v > 1000) throw Error(ErrorCode::kInvalidArgument, "exponent too large");
        e[i] = static_cast<std::uint16_t>(v);
      }
      accumulate(out, e, ca * cb);
    }
  return out;
}

Poly constant(const Rat& c) {
  Poly p;
  accumulate(p, Exponent{0, 0, 0, 0}, c);
  return p;
}

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {
    if (vars_.size() > 4) throw Error(ErrorCode::kInvalidArgument, "at most 4 variables");
  }

  Poly parse() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  // '-' or the UTF-8 minus sign U+2212.
  bool take_minus() {
    if (!at_end() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool take(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_space();
    int sign = 1;
    if (take_minus()) sign = -1;
    else take('+');
    Poly acc = add(Poly{}, term(), sign);
    for (;;) {
      skip_space();
      if (take_minus()) {
        acc = add(std::move(acc), term(), -1);
      } else if (take('+')) {
        acc = add(std::move(acc), term(), 1);
      } else {
        return acc;
      }
    }
  }

  bool starts_variable() {
    skip_space();
    return !at_end() && match_variable(nullptr);
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (take('*')) {
        acc = mul(acc, factor());
      } else if (starts_variable()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    skip_space();
    if (take('^')) {
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw SyntaxError(start, "expected a nonnegative integer exponent");
      if (digits.size() > 4) throw SyntaxError(start, "exponent too large");
      int e = std::stoi(digits);
      Poly r = constant(Rat(1));
      for (int i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Longest declared name at the cursor.
  bool match_variable(std::size_t* index) {
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.size() > best_len && text_.compare(pos_, v.size(), v) == 0) {
        best_len = v.size();
        if (index) *index = i;
      }
    }
    if (best_len > 0 && index) pos_ += best_len;
    return best_len > 0;
  }

  Poly primary() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!take(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (c >= '0' && c <= '9') {
      std::size_t start = pos_;
      std::string num = read_digits();
      std::string den = "1";
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        den = read_digits();
        if (den.empty()) throw SyntaxError(pos_, "expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw SyntaxError(start, "zero denominator");
      }
      return constant(Rat(Integer(num), Integer(den)));
    }
    std::size_t idx = 0;
    if (match_variable(&idx)) {
      Exponent e{0, 0, 0, 0};
      e[idx] = 1;
      Poly p;
      p.emplace(e, Rat(1));
      return p;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))
      throw SyntaxError(pos_, std::string("unknown variable '") + c + "'");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string describe(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Form parse_form(const std::string& text, const std::vector<std::string>& vars) {
  Poly p = Parser(text, vars).parse();
  if (p.empty()) return Form(vars, 0);
  int d = total_degree(p.begin()->first);
  for (const auto& [e, c] : p) {
    if (total_degree(e) != d)
      throw Error(ErrorCode::kNotHomogeneous, "not homogeneous: monomials " + describe(p.begin()->first, vars) +
                                                  " (degree " + std::to_string(d) + ") and " + describe(e, vars) +
                                                  " (degree " + std::to_string(total_degree(e)) + ")");
  }
  return Form(vars, d, std::move(p));
}

std::vector<Rat> parse_univariate(const std::string& text, const std::string& var) {
  std::vector<std::string> vars = {var};
  Poly p = Parser(text, vars).parse();
  std::vector<Rat> out;
  for (const auto& [e, c] : p) {
    if (out.size() <= e[0]) out.resize(static_cast<std::size_t>(e[0]) + 1);
    out[e[0]] = c;
  }
  return out;
}

}  // namespace nodalsplit
