#include "cusptrees/curve_bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace cusptrees {

RationalBound::RationalBound(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt RationalBound::floor_value() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

std::string RationalBound::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

void CurveTopology::validate() const {
  if (b2 < 1) throw std::invalid_argument("b2 (component count) must be >= 1");
  if (b1 < 0 || g < 0) throw std::invalid_argument("b1 and g must be >= 0");
  if (branch_counts) {
    for (int r : *branch_counts) {
      if (r < 1) throw std::invalid_argument("branch counts must be >= 1");
    }
  }
}

namespace {

const std::vector<int>& require_branches(const CurveTopology& t) {
  if (!t.branch_counts) {
    throw std::logic_error("no singularity data on this curve topology");
  }
  return *t.branch_counts;
}

}  // namespace

long long CurveTopology::singular_points() const {
  return static_cast<long long>(require_branches(*this).size());
}

long long CurveTopology::cusp_count() const {
  long long c = 0;
  for (int r : require_branches(*this)) {
    if (r == 1) ++c;
  }
  return c;
}

long long CurveTopology::extra_branches() const {
  long long d = 0;
  for (int r : require_branches(*this)) d += r - 1;
  return d;
}

long long bridged_b1(long long b0_aff, long long b1_aff, long long p, long long b2) {
  return b2 + 1 - b0_aff + b1_aff - p;
}

void AffineCurveTopology::validate() const {
  projective.validate();
  if (b0_aff < 1) throw std::invalid_argument("b0_aff must be >= 1");
  if (b1_aff < 0) throw std::invalid_argument("b1_aff must be >= 0");
  if (p < 1) throw std::invalid_argument("p (points at infinity) must be >= 1");
  long long expected = bridged_b1(b0_aff, b1_aff, p, projective.b2);
  if (projective.b1 != expected) {
    throw ValidityError("projective b1 = " + std::to_string(projective.b1) +
                        " contradicts b2 + 1 - b0_aff + b1_aff - p = " +
                        std::to_string(expected));
  }
}

long long euler_complement(long long b1, long long b2) { return 2 + b1 - b2; }

long long pa_from_betti(long long b1, long long g) { return b1 - g; }

long long pa_from_dual_graph(long long g, long long b1_gamma) { return g + b1_gamma; }

long long b1_from_dual_graph(long long g, long long b1_gamma) { return 2 * g + b1_gamma; }

RationalBound cusp_bound_inequality1(long long e_complement, long long p_a) {
  return {BigInt(12) * e_complement + 5 - BigInt(3) * p_a, 2};
}

RationalBound cusp_bound_projective(const CurveTopology& t) {
  t.validate();
  return {BigInt(9) * t.b1 + BigInt(3) * t.g - BigInt(12) * t.b2 + 29, 2};
}

RationalBound sing_bound_projective(const CurveTopology& t) {
  t.validate();
  return {BigInt(11) * t.b1 - BigInt(t.g) - BigInt(10) * t.b2 + 27, 2};
}

RationalBound sing_from_cusp(const RationalBound& cusp_bound, const CurveTopology& t) {
  return cusp_bound + BigInt(t.b2 + t.b1 - 2 * t.g - 1);
}

RationalBound tono_reference(long long g) {
  if (g < 0) throw std::invalid_argument("genus must be >= 0");
  return {BigInt(21) * g + 17, 2};
}

const std::string& kodaira_caveat() {
  static const std::string caveat =
      "bounds assume the complement of the curve in the projective plane has "
      "log Kodaira dimension 2 (true e.g. when some irreducible component "
      "carries >= 3 singular points); this hypothesis is not checkable from "
      "topology data";
  return caveat;
}

IrreducibleBounds bounds_irreducible(long long b1, long long g) {
  if (b1 < 0 || g < 0) throw std::invalid_argument("b1 and g must be >= 0");
  return IrreducibleBounds{
      RationalBound(BigInt(9) * b1 + BigInt(3) * g + 17, 2),
      RationalBound(BigInt(21) * b1 + 34, 4),
      RationalBound(BigInt(11) * b1 - BigInt(g) + 17, 2),
      RationalBound(BigInt(11) * b1 + 17, 2),
      kodaira_caveat(),
      "unconditional for irreducible curves: with s >= 3 singular points the "
      "hypothesis holds automatically, and the bounds are >= 3, so smaller s "
      "satisfies them outright",
  };
}

AffineBounds bounds_affine(const AffineCurveTopology& a) {
  a.validate();
  const BigInt x = BigInt(a.b1_aff) - a.b0_aff - a.p;
  const long long g = a.projective.g;
  const long long b2 = a.projective.b2;
  AffineBounds out{
      RationalBound(BigInt(9) * x + BigInt(3) * (BigInt(g) - b2) + 38, 2),
      RationalBound(BigInt(11) * x + (BigInt(b2) - g) + 38, 2),
      std::nullopt,
      kodaira_caveat(),
  };
  if (b2 == 1 && a.b0_aff == 1) {
    const BigInt y = BigInt(a.b1_aff) - a.p;
    out.irreducible = AffineBounds::Irreducible{
        RationalBound(BigInt(9) * y + BigInt(3) * g + 26, 2),
        RationalBound(BigInt(9) * a.b1_aff + BigInt(3) * g + 17, 2),
        RationalBound(BigInt(11) * y - BigInt(g) + 28, 2),
        RationalBound(BigInt(11) * a.b1_aff - BigInt(g) + 17, 2),
    };
  }
  return out;
}

IncidenceGraph::IncidenceGraph(int component_count,
                               std::vector<std::vector<int>> branches_per_point)
    : component_count_(component_count),
      branches_per_point_(std::move(branches_per_point)) {
  if (component_count_ < 1) {
    throw std::invalid_argument("incidence graph needs >= 1 component");
  }
  for (std::size_t i = 0; i < branches_per_point_.size(); ++i) {
    if (branches_per_point_[i].empty()) {
      throw std::invalid_argument("singular point " + std::to_string(i) +
                                  " has an empty branch list");
    }
    for (int component : branches_per_point_[i]) {
      if (component < 0 || component >= component_count_) {
        throw std::invalid_argument("branch at point " + std::to_string(i) +
                                    " names component " + std::to_string(component) +
                                    " out of range");
      }
      branch_edges_.emplace_back(static_cast<int>(i), component);
    }
  }
}

int IncidenceGraph::point_count() const noexcept {
  return static_cast<int>(branches_per_point_.size());
}

int IncidenceGraph::cusp_count() const {
  int c = 0;
  for (const auto& branches : branches_per_point_) {
    if (branches.size() == 1) ++c;
  }
  return c;
}

long long IncidenceGraph::extra_branches() const {
  long long d = 0;
  for (const auto& branches : branches_per_point_) {
    d += static_cast<long long>(branches.size()) - 1;
  }
  return d;
}

int IncidenceGraph::vertex_count() const noexcept {
  return component_count_ + point_count();
}

int IncidenceGraph::edge_count() const noexcept {
  return static_cast<int>(branch_edges_.size());
}

long long IncidenceGraph::euler() const {
  return static_cast<long long>(vertex_count()) - edge_count();
}

int IncidenceGraph::connected_components() const {
  // Vertices 0..s-1 are points, s..s+b2-1 are components.
  const int s = point_count();
  const int total = vertex_count();
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(total));
  for (const auto& [point, component] : branch_edges_) {
    adjacency[static_cast<std::size_t>(point)].push_back(s + component);
    adjacency[static_cast<std::size_t>(s + component)].push_back(point);
  }
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  int components = 0;
  for (int start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++components;
    std::vector<int> stack = {start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adjacency[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

IncidenceGraph build_incidence_graph(
    int component_count, const std::vector<std::vector<int>>& branches_per_point) {
  return IncidenceGraph(component_count, branches_per_point);
}

}  // namespace cusptrees
