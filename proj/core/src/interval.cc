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

#include "strategem/interval.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "strategem/error.h"

namespace strategem {
namespace {

void require_operand(const Interval& x, const char* op) {
  if (x.is_empty()) {
    throw Error(ErrorKind::kEmptyOperand,
                std::string("empty interval passed to ") + op);
  }
}

// Product with the limit convention 0 * inf = 0.
double ext_product(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi ||
      (lo == kInf && hi == kInf) || (lo == -kInf && hi == -kInf)) {
    std::ostringstream msg;
    msg << "invalid interval endpoints [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::kRange, msg.str());
  }
}

bool Interval::is_bounded() const noexcept {
  return !empty_ && std::isfinite(lo_) && std::isfinite(hi_);
}

bool Interval::contains(const Interval& other) const noexcept {
  if (other.empty_) return true;
  if (empty_) return false;
  return lo_ <= other.lo_ && other.hi_ <= hi_;
}

Interval sub(const Interval& x, const Interval& y) {
  require_operand(x, "sub");
  require_operand(y, "sub");
  return Interval(x.lo() - y.hi(), x.hi() - y.lo());
}

Interval add(const Interval& x, const Interval& y) {
  require_operand(x, "add");
  require_operand(y, "add");
  return Interval(x.lo() + y.lo(), x.hi() + y.hi());
}

Interval mul(const Interval& x, const Interval& y) {
  require_operand(x, "mul");
  require_operand(y, "mul");
  const double p[4] = {ext_product(x.lo(), y.lo()), ext_product(x.lo(), y.hi()),
                       ext_product(x.hi(), y.lo()), ext_product(x.hi(), y.hi())};
  auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return Interval(*lo, *hi);
}

Interval recip(const Interval& y) {
  require_operand(y, "recip");
  const double lo = y.lo();
  const double hi = y.hi();
  if (lo == 0.0 && hi == 0.0) return Interval::empty();
  if (lo > 0.0 || hi < 0.0) return Interval(1.0 / hi, 1.0 / lo);
  if (lo == 0.0) return Interval(1.0 / hi, Interval::kInf);
  // The printed bound for this case reads 1/ȳ with ȳ = 0; the mirror of the
  // case above gives 1/y̲.
  if (hi == 0.0) return Interval(-Interval::kInf, 1.0 / lo);
  return Interval::whole();
}

Interval div(const Interval& x, const Interval& y) {
  require_operand(x, "div");
  if (y.is_empty()) return Interval::empty();
  Interval r = recip(y);
  if (r.is_empty()) return r;
  return mul(x, r);
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  if (x.is_empty()) return os << "[empty]";
  return os << '[' << x.lo() << ", " << x.hi() << ']';
}

}  // namespace strategem
