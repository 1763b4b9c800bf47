// Exact rational scalars and dense rational matrices.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace fbh {

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator. Expression templates are disabled so that `auto`
/// never captures a lazy expression.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p" and "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Basis of the right null space {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space(RationalMatrix m);

}  // namespace fbh
