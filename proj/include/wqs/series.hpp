#pragma once

// Truncated formal power series in one variable u over GF(p^M).
// All operations are exact modulo u^N.

#include <vector>

#include "wqs/gf.hpp"

namespace wqs {
namespace local {

class TruncatedSeries {
 public:
  TruncatedSeries(const gf::FieldSpec& spec, int precision);

  static TruncatedSeries constant(const gf::FieldSpec& spec, int precision,
                                  const gf::FieldElement& c);
  static TruncatedSeries u_power(const gf::FieldSpec& spec, int precision, int k);

  const gf::FieldSpec& spec() const { return *spec_; }
  int precision() const { return precision_; }
  const gf::FieldElement& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  void set_coeff(int i, const gf::FieldElement& v) { c_[static_cast<size_t>(i)] = v; }

  // Least index with nonzero coefficient; precision() when zero mod u^N.
  int valuation() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const gf::FieldElement& k) const;
  TruncatedSeries pow(int e) const;

  // (c_0 + higher)^{-1} by geometric series; requires c_0 != 0.
  TruncatedSeries inverse_unit() const;

  // this(inner(u)) by Horner evaluation; requires valuation(inner) >= 1.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  bool operator==(const TruncatedSeries& o) const;

 private:
  const gf::FieldSpec* spec_;
  int precision_;
  std::vector<gf::FieldElement> c_;
};

}  // namespace local
}  // namespace wqs
