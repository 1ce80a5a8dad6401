// Copyright 2026 The Interp Authors.
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

#include "interp/harness.h"

#include <charconv>
#include <stdexcept>

#include "interp/errors.h"
#include "interp/random.h"

namespace interp {

std::string Suite::name() const {
  switch (kind) {
    case SuiteKind::kLine:
      return "line";
    case SuiteKind::kCircle:
      return "circle";
    case SuiteKind::kConic:
      return "conic";
    case SuiteKind::kCubic:
      return "cubic";
    case SuiteKind::kQuadricSurface:
      return "quadric_surface";
    case SuiteKind::kPlane:
      return "plane(" + std::to_string(degree) + ")";
    case SuiteKind::kGraph:
      return "graph(" + std::to_string(degree) + ")";
  }
  return "unknown";
}

BasisSpec Suite::basis(const Field& f) const {
  switch (kind) {
    case SuiteKind::kLine:
      return BasisSpec::line(f);
    case SuiteKind::kCircle:
      return BasisSpec::circle(f);
    case SuiteKind::kConic:
      return BasisSpec::conic(f);
    case SuiteKind::kCubic:
      return BasisSpec::full(f, 2, 3);
    case SuiteKind::kQuadricSurface:
      return BasisSpec::quadric_surface(f, 3);
    case SuiteKind::kPlane:
      return BasisSpec::full(f, 2, degree);
    case SuiteKind::kGraph:
      return BasisSpec::graph(f, degree);
  }
  throw std::logic_error("unhandled suite kind");
}

Suite Suite::parse(std::string_view text, std::optional<uint32_t> degree) {
  std::string_view head = text;
  std::optional<uint32_t> inline_degree;
  if (const size_t open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw ParseError("malformed suite '" + std::string(text) + "'");
    head = text.substr(0, open);
    const std::string_view digits = text.substr(open + 1, text.size() - open - 2);
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad degree in suite '" + std::string(text) + "'");
    }
    inline_degree = v;
  }
  const auto fixed = [&](SuiteKind k) {
    if (inline_degree) throw ParseError("suite '" + std::string(head) + "' takes no degree");
    return Suite{k, 0};
  };
  const auto graded = [&](SuiteKind k) {
    const std::optional<uint32_t> d = inline_degree ? inline_degree : degree;
    if (!d || *d < 1) {
      throw ParseError("suite '" + std::string(head) + "' needs a degree >= 1, e.g. " +
                       std::string(head) + "(3)");
    }
    return Suite{k, *d};
  };
  if (head == "line") return fixed(SuiteKind::kLine);
  if (head == "circle") return fixed(SuiteKind::kCircle);
  if (head == "conic") return fixed(SuiteKind::kConic);
  if (head == "cubic") return fixed(SuiteKind::kCubic);
  if (head == "quadric_surface") return fixed(SuiteKind::kQuadricSurface);
  if (head == "plane") return graded(SuiteKind::kPlane);
  if (head == "graph") return graded(SuiteKind::kGraph);
  throw ParseError("unknown suite '" + std::string(text) +
                   "' (expected line, circle, conic, cubic, quadric_surface, plane(d), "
                   "graph(d))");
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.trials == 0) throw DimensionMismatch("trials must be >= 1");
  const Field field = Field::prime(cfg.prime);
  const BasisSpec basis = cfg.suite.basis(field);
  const size_t count = expected_interpolation_count(basis);
  const SeededRng root(cfg.seed);

  SuiteReport rep{cfg.suite.name(), cfg.prime.value(), cfg.trials, cfg.seed, {}, {}, {}};
  for (size_t t = 0; t < cfg.trials; ++t) {
    SeededRng rng = root.split(t);
    PointSet points(field, basis.num_vars());
    const auto add_random_point = [&] {
      Vector p;
      for (size_t i = 0; i < basis.num_vars(); ++i) p.push_back(sample_uniform(cfg.prime, rng));
      points.add(std::move(p));
    };
    for (size_t i = 0; i < count; ++i) add_random_point();
    const size_t at_dim = fit_curves(points, basis).kernel_dim;
    add_random_point();
    const size_t over_dim = fit_curves(points, basis).kernel_dim;
    if (over_dim > at_dim) {
      throw std::logic_error("kernel grew after adding a row in trial " + std::to_string(t));
    }

    if (at_dim == 1) {
      ++rep.at_count.pass;
    } else {
      ++rep.at_count.fail;
      rep.failures.push_back({t, "at_count", at_dim});
    }
    if (over_dim == 0) {
      ++rep.over_count.pass;
    } else {
      ++rep.over_count.fail;
      rep.failures.push_back({t, "over_count", over_dim});
    }
  }
  return rep;
}

bool check_uniqueness(const PointSet& points, const BasisSpec& basis) {
  return fit_curves(points, basis).kernel_dim == 1;
}

}  // namespace interp
