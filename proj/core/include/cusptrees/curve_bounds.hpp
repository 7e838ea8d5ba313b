#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cusptrees/bigint.hpp"

namespace cusptrees {

// Inconsistent input data (e.g. a projective b1 that contradicts the
// affine Betti numbers).
class ValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact rational upper bound plus its integer floor. The formulas here
// only ever produce denominators 1, 2 and 4, but the type is general.
class RationalBound {
 public:
  RationalBound(BigInt numerator, BigInt denominator);
  static RationalBound integer(BigInt value) { return {std::move(value), 1}; }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  // Largest integer <= the rational (floor toward -infinity).
  BigInt floor_value() const;
  // "num" when the value is integral, "num/den" otherwise.
  std::string str() const;

  RationalBound operator+(const BigInt& k) const { return {num_ + k * den_, den_}; }
  RationalBound operator+(const RationalBound& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
  }

  bool operator==(const RationalBound&) const = default;
  bool operator<(const RationalBound& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    return lhs < rhs;
  }
  bool operator>(const RationalBound& o) const { return o < *this; }
  bool operator<=(const RationalBound& o) const { return !(o < *this); }
  bool operator>=(const RationalBound& o) const { return !(*this < o); }

 private:
  BigInt num_;
  BigInt den_;
};

// Topology of a projective plane curve: first Betti number b1, number of
// irreducible components b2, total genus g (sum over the normalized
// components), and optionally the branch count r_i at each singular point.
struct CurveTopology {
  long long b1 = 0;
  long long b2 = 1;
  long long g = 0;
  std::optional<std::vector<int>> branch_counts;

  void validate() const;
  bool has_singularities() const { return branch_counts.has_value(); }
  long long singular_points() const;  // s
  long long cusp_count() const;       // c: points with a single branch
  long long extra_branches() const;   // d = sum(r_i - 1)
  // For an irreducible curve b1 = 2g + b1(dual graph) forces g <= b1/2;
  // raw inputs violating it get a warning, not an error.
  bool genus_exceeds_half_b1() const { return b2 == 1 && 2 * g > b1; }
};

// Affine slice of the curve: Betti numbers of the affine part, the number
// of points at infinity, and the projective topology they came from.
struct AffineCurveTopology {
  long long b0_aff = 1;
  long long b1_aff = 0;
  long long p = 1;  // points at infinity
  CurveTopology projective;

  // Throws ValidityError when projective.b1 contradicts the bridge
  // identity b1 = b2 + 1 - b0_aff + b1_aff - p.
  void validate() const;
};

// b1 of the projective curve from the affine data.
long long bridged_b1(long long b0_aff, long long b1_aff, long long p, long long b2);

// Euler characteristic of the complement of the curve in the projective
// plane: 2 + b1 - b2.
long long euler_complement(long long b1, long long b2);

// Arithmetic genus of the resolved boundary divisor: b1 - g.
long long pa_from_betti(long long b1, long long g);
// The two constituent identities behind it.
long long pa_from_dual_graph(long long g, long long b1_gamma);   // g + b1_gamma
long long b1_from_dual_graph(long long g, long long b1_gamma);   // 2g + b1_gamma

// Cusp bound from 2c <= 12 e(complement) + 5 - 3 pa.
RationalBound cusp_bound_inequality1(long long e_complement, long long p_a);

// c <= (9 b1 + 3 g - 12 b2 + 29) / 2.
RationalBound cusp_bound_projective(const CurveTopology& t);
// s <= (11 b1 - g - 10 b2 + 27) / 2.
RationalBound sing_bound_projective(const CurveTopology& t);
// s <= c + d = c + b2 + b1 - 2g - 1.
RationalBound sing_from_cusp(const RationalBound& cusp_bound, const CurveTopology& t);

// (21 g + 17) / 2, the single-component genus-g reference bound.
RationalBound tono_reference(long long g);

// Applicability caveat attached to every bound: the hypothesis is
// geometric and cannot be checked from topology data alone.
const std::string& kodaira_caveat();

struct IrreducibleBounds {
  RationalBound c_tight;    // (9 b1 + 3 g + 17) / 2
  RationalBound c_b1_only;  // (21 b1 + 34) / 4, from g <= b1/2
  RationalBound s_tight;    // (11 b1 - g + 17) / 2
  RationalBound s_b1_only;  // (11 b1 + 17) / 2, from g >= 0
  std::string caveat;
  std::string note;  // why the hypothesis is harmless for irreducible curves
};

IrreducibleBounds bounds_irreducible(long long b1, long long g);

struct AffineBounds {
  // General forms, any number of components.
  RationalBound c_aff;  // (9/2)(b1_aff - b0_aff - p) + (3/2)(g - b2) + 19
  RationalBound s_aff;  // (11/2)(b1_aff - b0_aff - p) + (1/2)(b2 - g) + 19
  // Irreducible forms (b2 = 1, b0_aff = 1), with and without the
  // points-at-infinity term.
  struct Irreducible {
    RationalBound c_with_p;  // (9/2)(b1_aff - p) + (3/2) g + 13
    RationalBound c_p_free;  // (9/2) b1_aff + (3/2) g + 17/2
    RationalBound s_with_p;  // (11/2)(b1_aff - p) - (1/2) g + 14
    RationalBound s_p_free;  // (11/2) b1_aff - (1/2) g + 17/2
  };
  std::optional<Irreducible> irreducible;
  std::string caveat;
};

AffineBounds bounds_affine(const AffineCurveTopology& a);

// Bipartite graph with one vertex per singular point and per irreducible
// component, one edge per local branch.
class IncidenceGraph {
 public:
  IncidenceGraph(int component_count, std::vector<std::vector<int>> branches_per_point);

  int component_count() const noexcept { return component_count_; }  // b2
  int point_count() const noexcept;                                  // s
  int cusp_count() const;                                            // c
  long long extra_branches() const;                                  // d
  int vertex_count() const noexcept;  // b2 + s
  int edge_count() const noexcept;    // d + s
  long long euler() const;            // b2 - d
  int connected_components() const;
  bool connected() const { return connected_components() == 1; }
  // One (point index, component index) pair per branch.
  const std::vector<std::pair<int, int>>& branch_edges() const noexcept {
    return branch_edges_;
  }

 private:
  int component_count_;
  std::vector<std::vector<int>> branches_per_point_;
  std::vector<std::pair<int, int>> branch_edges_;
};

IncidenceGraph build_incidence_graph(int component_count,
                                     const std::vector<std::vector<int>>& branches_per_point);

}  // namespace cusptrees
