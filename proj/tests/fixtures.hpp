#pragma once

#include <random>

#include "wlift/pipeline.hpp"

namespace wlift::testing {

inline const Pipeline& pipeline_170() {
  static const Pipeline p = [] {
    JobSpec s;
    s.q = 17;
    s.m = 10;
    s.ell = 5;
    return run_pipeline(s);
  }();
  return p;
}

inline const Pipeline& pipeline_174() {
  static const Pipeline p = [] {
    JobSpec s;
    s.q = 3;
    s.m = 58;
    s.ell = 5;
    return run_pipeline(s);
  }();
  return p;
}

inline RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatMatrix rational(const IntMatrix& m) { return to_rational(m); }

}  // namespace wlift::testing
