#include "mtasep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtasep {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(n));
  return out;
}

BigRational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto check_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto as_int = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return BigInt(part);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den)) throw std::invalid_argument("bad rational: " + text);
    const BigInt d = as_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return BigRational(as_int(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!check_int(whole) || (!frac.empty() && !check_int(frac)) || (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))) {
      throw std::invalid_argument("bad rational: " + text);
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt magnitude = abs(as_int(whole)) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
    return BigRational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  if (!check_int(s)) throw std::invalid_argument("bad rational: " + text);
  return BigRational(as_int(s));
}

std::string to_string(const BigRational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

int total_degree(const LaurentPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded-lex, descending.
bool term_before(const LaurentPoly::Exponents& a, const LaurentPoly::Exponents& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const BigInt& value) {
  LaurentPoly p(nvars);
  if (value != 0) p.terms_.push_back({Exponents(static_cast<std::size_t>(nvars), 0), value});
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
  if (index < 1 || index > nvars) throw std::out_of_range("variable index out of range");
  LaurentPoly p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  p.terms_.push_back({std::move(e), 1});
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, std::span<const int> exps, const BigInt& coef) {
  if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent vector length mismatch");
  LaurentPoly p(nvars);
  if (coef != 0) p.terms_.push_back({Exponents(exps.begin(), exps.end()), coef});
  return p;
}

BigInt LaurentPoly::coefficient(std::span<const int> exps) const {
  for (const auto& t : terms_) {
    if (std::equal(t.exps.begin(), t.exps.end(), exps.begin(), exps.end())) return t.coef;
  }
  return 0;
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw std::invalid_argument("polynomials over different variable counts (" +
                                std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + ")");
  }
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return term_before(a.exps, b.exps); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps) {
      merged.back().coef += t.coef;
    } else {
      if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_compatible(other);
  if (&other == this) return *this *= BigInt(2);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && term_before(a->exps, b->exps))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_before(b->exps, a->exps)) {
      out.push_back(*b++);
    } else {
      BigInt sum = a->coef + b->coef;
      if (sum != 0) out.push_back({std::move(a->exps), std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  check_compatible(other);
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Exponents e(a.exps);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps[i];
      products.push_back({std::move(e), a.coef * b.coef});
    }
  }
  terms_ = std::move(products);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
  check_compatible(divisor);
  if (!divisor.is_monomial()) throw std::invalid_argument("monomial division by a non-monomial");
  const auto& d = divisor.terms_.front();
  LaurentPoly out(nvars_);
  for (const auto& t : terms_) {
    if (t.coef % d.coef != 0) {
      throw std::invalid_argument("monomial division leaves a non-integer coefficient");
    }
    Exponents e(t.exps);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= d.exps[i];
    out.terms_.push_back({std::move(e), t.coef / d.coef});
  }
  return out;  // shifting every exponent by the same vector preserves the order
}

LaurentPoly LaurentPoly::cleared() const {
  if (is_zero()) return *this;
  std::vector<int> lowest(terms_.front().exps.begin(), terms_.front().exps.end());
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < lowest.size(); ++i) lowest[i] = std::min(lowest[i], t.exps[i]);
  }
  return divided_by(monomial(nvars_, lowest));
}

BigRational LaurentPoly::evaluate(std::span<const BigRational> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(nvars_));
  }
  BigRational total = 0;
  for (const auto& t : terms_) {
    BigRational value = BigRational(t.coef);
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      int e = t.exps[i];
      if (e == 0) continue;
      if (e < 0 && point[i] == 0) {
        throw std::domain_error("x" + std::to_string(i + 1) + " = 0 substituted into a negative power");
      }
      const BigRational base = e > 0 ? point[i] : BigRational(1) / point[i];
      for (int k = 0; k < std::abs(e); ++k) value *= base;
    }
    total += value;
  }
  return total;
}

bool LaurentPoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.coef > 0 && std::all_of(t.exps.begin(), t.exps.end(), [](int e) { return e >= 0; });
  });
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coef < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt magnitude = abs(t.coef);
    bool wrote = false;
    const bool constant_term = std::all_of(t.exps.begin(), t.exps.end(), [](int e) { return e == 0; });
    if (magnitude != 1 || constant_term) {
      out << magnitude;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (wrote) out << '*';
      out << name(i);
      if (t.exps[i] != 1) out << '^' << t.exps[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, int nvars, const std::vector<std::string>& names)
      : text_(text), nvars_(nvars), names_(names) {}

  LaurentPoly run() {
    LaurentPoly total(nvars_);
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      total += term(sign);
      skip();
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + text_ + "' at offset " +
                                std::to_string(pos_) + ": " + why);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(text_[pos_++]);
    return out;
  }
  int variable_index(const std::string& ident) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == ident) return static_cast<int>(i);
    }
    if (ident.size() > 1 && ident[0] == 'x' &&
        std::all_of(ident.begin() + 1, ident.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int idx = std::stoi(ident.substr(1)) - 1;
      if (idx >= 0 && idx < nvars_ && (names_.empty() || static_cast<std::size_t>(idx) >= names_.size())) return idx;
    }
    fail("unknown variable '" + ident + "'");
  }
  LaurentPoly term(int sign) {
    BigInt coef = sign;
    std::vector<int> exps(static_cast<std::size_t>(nvars_), 0);
    bool any = false;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= BigInt(digits());
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::string ident;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ident.push_back(text_[pos_++]);
        int e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          int s = 1;
          if (peek() == '-' || peek() == '+') {
            s = peek() == '-' ? -1 : 1;
            ++pos_;
          }
          const auto d = digits();
          if (d.empty()) fail("missing exponent");
          e = s * std::stoi(d);
        }
        exps[static_cast<std::size_t>(variable_index(ident))] += e;
      } else {
        fail("expected a coefficient or variable");
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return LaurentPoly::monomial(nvars_, exps, coef);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int nvars_;
  const std::vector<std::string>& names_;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int nvars, const std::vector<std::string>& names) {
  return PolyParser(text, nvars, names).run();
}

LaurentPoly q_int_derivative(int k, int d) {
  if (k < 1) throw std::invalid_argument("q-integer index must be positive");
  if (d < 0) throw std::invalid_argument("derivative order must be nonnegative");
  LaurentPoly out(1);
  const BigInt scale = factorial(d);
  for (int i = 0; i <= k - d - 1; ++i) {
    const int e[] = {i};
    out += LaurentPoly::monomial(1, e, scale * binomial(i + d, i));
  }
  return out;
}

LaurentPoly complete_homogeneous(int k, std::span<const LaurentPoly> args) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (args.empty()) {
    return LaurentPoly::constant(0, k == 0 ? 1 : 0);
  }
  const int nvars = args.front().nvars();
  // table[j] = h_j of the arguments processed so far
  std::vector<LaurentPoly> table(static_cast<std::size_t>(k + 1), LaurentPoly(nvars));
  table[0] = LaurentPoly::constant(nvars, 1);
  for (const auto& arg : args) {
    // h_j(.., y) = sum_{i<=j} y^i h_{j-i}(..) = h_j(..) + y * h_{j-1}(.., y)
    for (int j = 1; j <= k; ++j) {
      table[static_cast<std::size_t>(j)] += arg * table[static_cast<std::size_t>(j - 1)];
    }
  }
  return table[static_cast<std::size_t>(k)];
}

LaurentPoly complete_homogeneous_one_a(int k, int copies) {
  std::vector<LaurentPoly> args;
  args.push_back(LaurentPoly::constant(1, 1));
  for (int i = 0; i < copies; ++i) args.push_back(LaurentPoly::variable(1, 1));
  return complete_homogeneous(k, args);
}

}  // namespace mtasep
