// Copyright 2026 qpekit contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

namespace qpekit {

/// Double-double value hi + lo with |lo| <= ulp(hi)/2, giving roughly 106
/// bits of significand. Only the operations needed for compensated phase
/// bookkeeping are implemented (error-free transforms after Dekker/Knuth).
class DDouble {
 public:
  constexpr DDouble() = default;
  constexpr DDouble(double x) : hi_(x), lo_(0.0) {}
  constexpr DDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  double hi() const { return hi_; }
  double lo() const { return lo_; }
  double to_double() const { return hi_ + lo_; }

  static DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }

  static DDouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
  }

  static DDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  friend DDouble operator+(DDouble a, DDouble b) {
    DDouble s = two_sum(a.hi_, b.hi_);
    double lo = s.lo_ + a.lo_ + b.lo_;
    return quick_two_sum(s.hi_, lo);
  }

  friend DDouble operator-(DDouble a) { return {-a.hi_, -a.lo_}; }
  friend DDouble operator-(DDouble a, DDouble b) { return a + (-b); }

  friend DDouble operator*(DDouble a, DDouble b) {
    DDouble p = two_prod(a.hi_, b.hi_);
    double lo = p.lo_ + a.hi_ * b.lo_ + a.lo_ * b.hi_;
    return quick_two_sum(p.hi_, lo);
  }

  friend DDouble operator/(DDouble a, DDouble b) {
    double q1 = a.hi_ / b.hi_;
    DDouble r = a - b * DDouble(q1);
    double q2 = r.hi_ / b.hi_;
    r = r - b * DDouble(q2);
    double q3 = r.hi_ / b.hi_;
    DDouble q = quick_two_sum(q1, q2);
    return q + DDouble(q3);
  }

  friend bool operator<(DDouble a, DDouble b) {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator>=(DDouble a, DDouble b) { return !(a < b); }

  /// Largest integer not exceeding the value, exact for |x| < 2^52.
  friend DDouble floor(DDouble a) {
    double fh = std::floor(a.hi_);
    if (fh != a.hi_) return {fh, 0.0};
    double fl = std::floor(a.lo_);
    return quick_two_sum(fh, fl);
  }

  /// Fractional part in [0, 1).
  friend DDouble fract(DDouble a) {
    DDouble f = a - floor(a);
    if (f.hi_ >= 1.0) f = f - DDouble(1.0);
    if (f.hi_ < 0.0) f = f + DDouble(1.0);
    return f;
  }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

/// 2*pi to double-double precision.
inline DDouble dd_two_pi() {
  return {6.283185307179586476925286766559, 2.4492935982947063544521318526e-16};
}

}  // namespace qpekit
