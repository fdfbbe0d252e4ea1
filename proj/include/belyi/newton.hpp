/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_NEWTON_HPP
#define BELYI_NEWTON_HPP

#include <vector>

#include "belyi/polynomial.hpp"

namespace belyi {

// A point (exponent i, v_p(a_i)) contributed by a nonzero coefficient.
// Ordinates are rational so formally scaled conjugates fit too.
struct ValuedPoint {
  long index = 0;
  Rational valuation;

  friend bool operator==(const ValuedPoint& a, const ValuedPoint& b) {
    return a.index == b.index && a.valuation == b.valuation;
  }
};

struct PolygonSegment {
  Rational slope;
  long length = 0;  // horizontal extent = number of roots it certifies
};

// Lower convex hull of valued points, with strictly increasing segment
// slopes left to right. Sign convention: a segment of slope s certifies
// exactly `length` roots of valuation -s.
class NewtonPolygon {
 public:
  // Builds the hull. Duplicate indices keep the smallest valuation.
  static NewtonPolygon from_points(std::vector<ValuedPoint> points);

  const std::vector<ValuedPoint>& vertices() const { return vertices_; }
  const std::vector<PolygonSegment>& segments() const { return segments_; }

 private:
  std::vector<ValuedPoint> vertices_;
  std::vector<PolygonSegment> segments_;
};

// Polygon of f at p from the points {(i, v_p(a_i)) : a_i != 0}.
// Error on the zero polynomial.
NewtonPolygon newton_polygon(const Polynomial& f, const Integer& p);

// One (valuation, multiplicity) pair per segment, in segment order
// (valuations strictly decreasing). Roots at 0 are not reported here;
// strip_zero_root accounts for them.
std::vector<std::pair<Rational, long>> root_valuations(const NewtonPolygon& np);

}  // namespace belyi

#endif  // BELYI_NEWTON_HPP
