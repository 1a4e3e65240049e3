#include "wqs/series.hpp"

namespace wqs {
namespace local {

TruncatedSeries::TruncatedSeries(const gf::FieldSpec& spec, int precision)
    : spec_(&spec), precision_(precision) {
  if (precision < 1) throw Error("PrecisionTooSmall", "precision must be >= 1");
  c_.assign(static_cast<size_t>(precision), spec.zero());
}

TruncatedSeries TruncatedSeries::constant(const gf::FieldSpec& spec, int precision,
                                          const gf::FieldElement& c) {
  TruncatedSeries s(spec, precision);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::u_power(const gf::FieldSpec& spec, int precision, int k) {
  TruncatedSeries s(spec, precision);
  if (k < precision) s.c_[static_cast<size_t>(k)] = spec.one();
  return s;
}

int TruncatedSeries::valuation() const {
  for (int i = 0; i < precision_; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) return i;
  return precision_;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(*spec_, precision_);
  for (int i = 0; i < precision_; ++i)
    r.c_[static_cast<size_t>(i)] = spec_->add(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(i)]);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r(*spec_, precision_);
  for (int i = 0; i < precision_; ++i)
    r.c_[static_cast<size_t>(i)] = spec_->sub(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(i)]);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(*spec_, precision_);
  for (int i = 0; i < precision_; ++i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j < precision_; ++j) {
      if (o.c_[static_cast<size_t>(j)].is_zero()) continue;
      size_t k = static_cast<size_t>(i + j);
      r.c_[k] = spec_->add(r.c_[k], spec_->mul(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(j)]));
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const gf::FieldElement& k) const {
  TruncatedSeries r(*spec_, precision_);
  for (int i = 0; i < precision_; ++i) r.c_[static_cast<size_t>(i)] = spec_->mul(k, c_[static_cast<size_t>(i)]);
  return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  TruncatedSeries r = constant(*spec_, precision_, spec_->one());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

TruncatedSeries TruncatedSeries::inverse_unit() const {
  if (c_[0].is_zero()) throw Error("DivisionByZero", "series with zero constant term");
  gf::FieldElement c0inv = spec_->inv(c_[0]);
  TruncatedSeries t = scaled(c0inv);  // 1 + s, valuation(s) >= 1
  TruncatedSeries s(*spec_, precision_);
  for (int i = 1; i < precision_; ++i) s.c_[static_cast<size_t>(i)] = t.c_[static_cast<size_t>(i)];
  TruncatedSeries out = constant(*spec_, precision_, spec_->one());
  TruncatedSeries term = constant(*spec_, precision_, spec_->one());
  for (int k = 1; k < precision_; ++k) {
    term = term * s;
    if (term.valuation() >= precision_) break;
    if (k % 2 == 1)
      out = out - term;
    else
      out = out + term;
  }
  return out.scaled(c0inv);
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (inner.valuation() < 1) throw Error("PrecisionTooSmall", "compose needs valuation >= 1");
  TruncatedSeries out(*spec_, precision_);
  for (int i = precision_ - 1; i >= 0; --i) {
    out = out * inner;
    out.c_[0] = spec_->add(out.c_[0], c_[static_cast<size_t>(i)]);
  }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (spec_ != o.spec_ || precision_ != o.precision_) return false;
  for (int i = 0; i < precision_; ++i)
    if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
  return true;
}

}  // namespace local
}  // namespace wqs
