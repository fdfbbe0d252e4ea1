/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/newton.hpp"

#include <algorithm>
#include <map>

#include "belyi/numtheory.hpp"

namespace belyi {

NewtonPolygon NewtonPolygon::from_points(std::vector<ValuedPoint> points) {
  if (points.empty())
    throw std::invalid_argument("NewtonPolygon: no points");

  std::map<long, Rational> best;
  for (auto& pt : points) {
    auto it = best.find(pt.index);
    if (it == best.end() || pt.valuation < it->second)
      best[pt.index] = std::move(pt.valuation);
  }

  NewtonPolygon np;
  // Monotone chain over ascending indices. Pop while the previous slope is
  // not strictly below the candidate slope; collinear interior points drop.
  for (auto& [x, y] : best) {
    ValuedPoint pt{x, std::move(y)};
    auto& hull = np.vertices_;
    while (hull.size() >= 2) {
      const ValuedPoint& a = hull[hull.size() - 2];
      const ValuedPoint& b = hull[hull.size() - 1];
      // slope(a,b) >= slope(b,pt)  <=>  (b.v-a.v)(pt.i-b.i) >= (pt.v-b.v)(b.i-a.i)
      if ((b.valuation - a.valuation) * (pt.index - b.index) >=
          (pt.valuation - b.valuation) * (b.index - a.index)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(std::move(pt));
  }

  for (std::size_t i = 1; i < np.vertices_.size(); ++i) {
    const ValuedPoint& a = np.vertices_[i - 1];
    const ValuedPoint& b = np.vertices_[i];
    long len = b.index - a.index;
    Rational slope = (b.valuation - a.valuation) / Rational(len);
    np.segments_.push_back({std::move(slope), len});
  }
  return np;
}

NewtonPolygon newton_polygon(const Polynomial& f, const Integer& p) {
  if (f.is_zero())
    throw std::invalid_argument("newton_polygon: zero polynomial");
  std::vector<ValuedPoint> pts;
  pts.reserve(f.term_count());
  for (const auto& [e, c] : f.terms())
    pts.push_back({e, Rational(vp_rat(c, p))});
  return NewtonPolygon::from_points(std::move(pts));
}

std::vector<std::pair<Rational, long>> root_valuations(const NewtonPolygon& np) {
  std::vector<std::pair<Rational, long>> out;
  out.reserve(np.segments().size());
  for (const auto& seg : np.segments()) out.emplace_back(-seg.slope, seg.length);
  return out;
}

}  // namespace belyi
