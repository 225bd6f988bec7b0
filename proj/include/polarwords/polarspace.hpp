#pragma once

// The binary symplectic polar space of rank n, viewed as a point-line
// geometry: points are the maximal totally isotropic subspaces of F_2^(2n),
// lines the totally isotropic (n-1)-subspaces. Each line lies in exactly
// three points.

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "polarwords/gf2.hpp"

namespace polarwords {

/// omega(u, v) = sum_i u_i v_(n+i) + u_(n+i) v_i over F_2. Both vectors must
/// have dimension 2n.
bool symplectic_form(const Gf2Vector& u, const Gf2Vector& v, int n);

struct SymplecticSpace {
  int n = 1;

  int ambient_dim() const { return 2 * n; }
  bool form(const Gf2Vector& u, const Gf2Vector& v) const { return symplectic_form(u, v, n); }
  bool is_totally_isotropic(const Gf2Subspace& v) const;
};

struct PolarGeometry {
  int n = 0;
  std::vector<Gf2Subspace> points;
  std::vector<Gf2Subspace> lines;
  std::vector<std::array<int, 3>> incidence;    // line -> its three points, ascending
  std::vector<std::vector<int>> lines_on_point;  // point -> lines through it, ascending

  int point_index(const Gf2Subspace& p) const;  // -1 if absent

 private:
  friend PolarGeometry build_geometry(int n, int threads);
  std::unordered_map<Gf2Subspace, int, Gf2SubspaceHash> point_ids_;
};

/// Guard 1 <= n <= 4.
PolarGeometry build_geometry(int n, int threads = 1);

/// |X| - rank of the line/point incidence matrix over F_2.
std::size_t udim(const PolarGeometry& geo);
std::size_t udim(int n, int threads = 1);

struct StrataReport {
  int base_point = 0;
  std::vector<std::vector<int>> strata;                   // k -> points y with dim(y & x0) = n-k
  std::vector<std::vector<std::vector<int>>> components;  // k -> components of the collinearity graph on strata[k]
  bool distance_matches = false;    // graph distance from x0 equals k on strata[k]
  bool line_fact = false;           // each line: two points in some strata[k], one in strata[k-1]
  bool component_bijection = false; // components of strata[k] <-> (n-k)-subspaces of x0 via y & x0

  bool passed() const { return distance_matches && line_fact && component_bijection; }
};

StrataReport strata(const PolarGeometry& geo, int x0);

struct QuotientBasis {
  std::vector<int> points;
  std::size_t certificate_rank = 0;  // rank of sigma rows plus the chosen unit rows
};

/// Greedy choice of udim points completing the sigma image to all of F_2^X.
QuotientBasis quotient_basis(const PolarGeometry& geo);

enum class IncidenceFormat { dot, json, csv };

IncidenceFormat parse_incidence_format(const std::string& name);

/// Deterministic text rendering, ending in a single newline.
std::string export_incidence(const PolarGeometry& geo, IncidenceFormat format);

}  // namespace polarwords
