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

#include "dgd/lie/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dgd/errors.hpp"
#include "dgd/genring.hpp"
#include "dgd/torus.hpp"

namespace dgd {

bool DescendedField::nontrivial() const {
  return std::any_of(images.begin(), images.end(), [](const QuotientPolynomial& q) { return !q.value().is_zero(); });
}

DescendedField descend(const Derivation& x) {
  if (!is_tangent(x)) throw DomainError("field is not tangent to the surface: " + x.to_string());
  if (!is_invariant_field(x)) throw DomainError("field is not torus invariant: " + x.to_string());
  const SurfaceParameters& params = x.params();
  DescendedField out{params, {}};
  for (std::size_t slot = 0; slot < generator_count(params); ++slot) {
    out.images.push_back(reduce(apply(x, Polynomial::monomial(1, generator_lift(slot, params))), params));
  }
  return out;
}

SurfacePoint::SurfacePoint(const Point& coordinates, const SurfaceParameters& params)
    : coordinates_(coordinates), params_(params) {
  if (!lies_on_surface(coordinates, params)) {
    throw DomainError("point " + to_string() + " is not on the surface");
  }
}

SurfacePoint SurfacePoint::from_chart(const Rational& s, const Rational& t, const SurfaceParameters& params) {
  Rational sb = 1;
  for (int i = 0; i < params.b(); ++i) sb *= s;
  return SurfacePoint(Point{Rational(1), s, t, Rational(1 + sb * t)}, params);
}

std::string SurfacePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (i) os << ", ";
    os << dgd::to_string(coordinates_[i]);
  }
  os << ')';
  return os.str();
}

std::vector<Rational> evaluate_descended(const DescendedField& field, const SurfacePoint& p) {
  std::vector<Rational> row;
  row.reserve(field.images.size());
  for (const auto& image : field.images) row.push_back(evaluate(image.value(), p.coordinates()));
  return row;
}

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  // Clear denominators row by row, then eliminate over the integers.
  std::vector<std::vector<Integer>> m;
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("matrix rows have different lengths");
    Integer l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> r;
    for (const auto& v : row) r.emplace_back(Integer(v.get_num() * (l / v.get_den())));
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev_pivot;
      }
      m[r][c] = 0;
    }
    prev_pivot = m[rank][c];
    ++rank;
  }
  return rank;
}

unsigned spanning_check(const std::vector<DescendedField>& fields, const SurfacePoint& p) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) rows.push_back(evaluate_descended(f, p));
  return static_cast<unsigned>(std::min<std::size_t>(matrix_rank(rows), 2));
}

std::vector<Rational> small_rationals(std::size_t count) {
  std::vector<Rational> out;
  for (long height = 1; out.size() < count; ++height) {
    // p/q in lowest terms with max(p, q) = height: first h/q for q < h, then p/h.
    std::vector<std::pair<long, long>> fractions;
    for (long q = 1; q < height; ++q) fractions.emplace_back(height, q);
    for (long p = 1; p < height; ++p) fractions.emplace_back(p, height);
    if (height == 1) fractions.emplace_back(1, 1);
    for (const auto& [num, den] : fractions) {
      if (std::gcd(num, den) != 1) continue;
      for (long sign : {1L, -1L}) {
        if (out.size() < count) out.emplace_back(Rational(sign * num, den));
      }
    }
  }
  return out;
}

std::vector<SurfacePoint> candidate_points(const SurfaceParameters& params, std::size_t count) {
  std::vector<SurfacePoint> out;
  std::vector<Rational> values = small_rationals(16);
  std::vector<ExponentVector> lifts;
  for (std::size_t slot = 0; slot < generator_count(params); ++slot) lifts.push_back(generator_lift(slot, params));
  for (std::size_t diagonal = 0; out.size() < count; ++diagonal) {
    while (values.size() <= diagonal) values = small_rationals(values.size() * 2);
    for (std::size_t i = 0; i <= diagonal && out.size() < count; ++i) {
      const SurfacePoint p = SurfacePoint::from_chart(values[i], values[diagonal - i], params);
      const bool all_nonzero = std::all_of(lifts.begin(), lifts.end(), [&](const ExponentVector& e) {
        return Polynomial::monomial(1, e).evaluate(p.coordinates()) != 0;
      });
      if (all_nonzero) out.push_back(p);
    }
  }
  return out;
}

SpanningSearch find_spanning_point(const std::vector<DescendedField>& fields, std::size_t max_candidates) {
  SpanningSearch out;
  if (fields.empty()) return out;
  for (const auto& p : candidate_points(fields.front().params, max_candidates)) {
    ++out.candidates_examined;
    const unsigned rank = spanning_check(fields, p);
    out.rank = std::max(out.rank, rank);
    if (rank == 2) {
      out.point = p;
      return out;
    }
  }
  return out;
}

}  // namespace dgd
