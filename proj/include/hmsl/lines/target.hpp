#pragma once

#include <string>

#include "hmsl/exact/rational.hpp"
#include "hmsl/lines/line.hpp"
#include "hmsl/surface/model.hpp"

namespace hmsl {

// A local line to approximate: place 0 is the real place, otherwise a prime.
// For p-adic targets `precision` is the congruence depth k (closeness
// p^-k); for the real target it is the separation bound in the chart.
struct LocalTarget {
  long place = 0;
  Line<Rational> line;
  Rational precision{1};

  bool is_real() const { return place == 0; }
  std::string place_name() const { return is_real() ? "real" : std::to_string(place); }
};

// Checks that the line lies on q1 and q2 of the model.
LocalTarget make_local_target(const SurfaceModel& model, long place, Line<Rational> line,
                              Rational precision);

}  // namespace hmsl
