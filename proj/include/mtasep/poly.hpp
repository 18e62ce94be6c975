#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <span>
#include <string>
#include <vector>

namespace mtasep {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Parses "3", "-5/2" or "0.5" into an exact rational.
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& value);

/// Sparse multivariate Laurent polynomial with big-integer coefficients.
///
/// Terms are kept sorted in graded-lex order (higher total degree first,
/// then lexicographically larger exponent vectors first) with no zero
/// coefficients, so structural equality is polynomial equality and the zero
/// polynomial has no terms.
class LaurentPoly {
 public:
  using Exponents = boost::container::small_vector<int, 6>;
  struct Term {
    Exponents exps;
    BigInt coef;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const BigInt& value);
  static LaurentPoly variable(int nvars, int index);  // 1-based x_index
  static LaurentPoly monomial(int nvars, std::span<const int> exps, const BigInt& coef = 1);

  /// Reads the rendering grammar: signed terms such as "2*x1^2*x2^-1 - x3 + 4".
  /// Variables are x1..x{nvars} unless `names` supplies other spellings.
  static LaurentPoly parse(const std::string& text, int nvars,
                           const std::vector<std::string>& names = {});

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Coefficient of the given exponent vector (zero when absent).
  BigInt coefficient(std::span<const int> exps) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const BigInt& scalar);
  LaurentPoly operator-() const;

  /// Divides every term by a single Laurent monomial; rejects anything else.
  LaurentPoly divided_by(const LaurentPoly& monomial) const;
  /// Multiplies by x^{-min exponents}, giving an ordinary polynomial with
  /// no variable dividing every term.
  LaurentPoly cleared() const;

  BigRational evaluate(std::span<const BigRational> point) const;

  /// Every coefficient positive and every exponent nonnegative.
  bool has_positive_coefficients() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  bool operator==(const LaurentPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const LaurentPoly& other) const;
  void normalize();

  int nvars_ = 0;
  std::vector<Term> terms_;
};

inline LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
inline LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
inline LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
inline LaurentPoly operator*(LaurentPoly a, const BigInt& s) { return a *= s; }
inline LaurentPoly operator*(const BigInt& s, LaurentPoly a) { return a *= s; }

/// Operation-style aliases used by the verification code and CLI.
inline bool positivity_check(const LaurentPoly& p) { return p.has_positive_coefficients(); }
inline BigRational poly_eval(const LaurentPoly& p, std::span<const BigRational> point) {
  return p.evaluate(point);
}

/// d-th derivative of the q-integer [k]_q = 1 + q + ... + q^{k-1}, in closed
/// form d! * sum_{i=0}^{k-d-1} binom(i+d, i) q^i. Zero when d >= k.
LaurentPoly q_int_derivative(int k, int d);

/// Complete homogeneous symmetric polynomial h_k evaluated at the given
/// arguments (each itself a polynomial in a common ring).
LaurentPoly complete_homogeneous(int k, std::span<const LaurentPoly> args);

/// h_k(1, a, ..., a) with `copies` copies of a, as a polynomial in a.
LaurentPoly complete_homogeneous_one_a(int k, int copies);

}  // namespace mtasep
