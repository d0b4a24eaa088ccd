// Copyright 2026 The dgdensity Authors
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

// Fields on V_n seen through the invariant generators, and the rank test
// for the tangent space at a point.

#include <cstddef>
#include <optional>
#include <vector>

#include "dgd/derivation.hpp"

namespace dgd {

/// Images of y, z, x0..xb under an invariant tangent field, reduced.
struct DescendedField {
  SurfaceParameters params;
  std::vector<QuotientPolynomial> images;

  /// At least one image is nonzero.
  bool nontrivial() const;
};

/// Throws DomainError unless x is tangent and torus invariant.
DescendedField descend(const Derivation& x);

class SurfacePoint {
 public:
  /// Throws DomainError unless a1 a4 - a2^b a3 = 1 exactly.
  SurfacePoint(const Point& coordinates, const SurfaceParameters& params);

  /// (1, s, t, 1 + s^b t).
  static SurfacePoint from_chart(const Rational& s, const Rational& t, const SurfaceParameters& params);

  const Point& coordinates() const { return coordinates_; }
  const SurfaceParameters& params() const { return params_; }
  std::string to_string() const;

 private:
  Point coordinates_;
  SurfaceParameters params_;
};

/// The generator images of the field evaluated at p (b + 3 entries).
std::vector<Rational> evaluate_descended(const DescendedField& field, const SurfacePoint& p);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows);

/// Rank of the rows of evaluate_descended at p, capped at 2 = dim V_n.
unsigned spanning_check(const std::vector<DescendedField>& fields, const SurfacePoint& p);

/// 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, ... : nonzero rationals
/// by increasing height max(|p|, q).
std::vector<Rational> small_rationals(std::size_t count);

/// Points (1, s, t, 1 + s^b t) with (s, t) running over pairs of
/// small_rationals along antidiagonals, skipping points where some
/// generator lift vanishes. Returns the first `count` of them.
std::vector<SurfacePoint> candidate_points(const SurfaceParameters& params, std::size_t count);

struct SpanningSearch {
  std::optional<SurfacePoint> point;
  unsigned rank = 0;
  /// Candidates examined, including the one found.
  std::size_t candidates_examined = 0;
};

SpanningSearch find_spanning_point(const std::vector<DescendedField>& fields, std::size_t max_candidates);

}  // namespace dgd
