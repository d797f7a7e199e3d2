// Copyright 2026 The Strategem Authors.
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

#ifndef STRATEGEM_INTERVAL_H_
#define STRATEGEM_INTERVAL_H_

#include <iosfwd>
#include <limits>

namespace strategem {

// Closed interval over the extended reals. Endpoints may be -inf / +inf;
// the distinguished empty value results from 1/[0,0].
//
// Endpoint arithmetic is plain double precision, no directed rounding.
class Interval {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  // [0, 0]
  constexpr Interval() = default;
  // Throws RangeError when lo > hi, an endpoint is NaN, or the pair is
  // (+inf, +inf) / (-inf, -inf).
  Interval(double lo, double hi);

  static Interval point(double v) { return Interval(v, v); }
  static Interval whole() { return Interval(-kInf, kInf); }
  static constexpr Interval empty() { return Interval(EmptyTag{}); }

  bool is_empty() const noexcept { return empty_; }
  bool is_bounded() const noexcept;
  bool is_point() const noexcept { return !empty_ && lo_ == hi_; }

  // Precondition: !is_empty().
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double midpoint() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }

  bool contains(double v) const noexcept {
    return !empty_ && lo_ <= v && v <= hi_;
  }
  // Set inclusion; the empty interval is a subset of everything.
  bool contains(const Interval& other) const noexcept;

  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  struct EmptyTag {};
  constexpr explicit Interval(EmptyTag) : empty_(true) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
  bool empty_ = false;
};

// [x̲ − ȳ, x̄ − y̲]
Interval sub(const Interval& x, const Interval& y);
// [x̲ + y̲, x̄ + ȳ]
Interval add(const Interval& x, const Interval& y);
// Hull of the four endpoint products, with 0 * inf taken as 0.
Interval mul(const Interval& x, const Interval& y);
// Case analysis on the sign of y:
//   [0,0]          -> empty
//   0 not in y     -> [1/ȳ, 1/y̲]
//   y̲ = 0 < ȳ      -> [1/ȳ, +inf)
//   y̲ < 0 = ȳ      -> (-inf, 1/y̲]
//   y̲ < 0 < ȳ      -> (-inf, +inf)
Interval recip(const Interval& y);
// x * recip(y). Returns empty (not an error) when y is [0,0] or empty.
Interval div(const Interval& x, const Interval& y);

inline Interval operator+(const Interval& x, const Interval& y) { return add(x, y); }
inline Interval operator-(const Interval& x, const Interval& y) { return sub(x, y); }
inline Interval operator*(const Interval& x, const Interval& y) { return mul(x, y); }
inline Interval operator/(const Interval& x, const Interval& y) { return div(x, y); }

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace strategem

#endif  // STRATEGEM_INTERVAL_H_
