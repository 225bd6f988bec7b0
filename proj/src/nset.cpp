#include "polarwords/nset.hpp"

#include <algorithm>

#include "polarwords/errors.hpp"

namespace polarwords {

std::string to_string(NCondition c) {
  switch (c) {
    case NCondition::N1: return "N1";
    case NCondition::N2: return "N2";
    case NCondition::N3: return "N3";
    case NCondition::N4: return "N4";
  }
  return "?";
}

std::string to_string(ReductionMove m) {
  switch (m) {
    case ReductionMove::delete_last: return "delete_last";
    case ReductionMove::drop_last_unit: return "drop_last_unit";
    case ReductionMove::delete_second_last: return "delete_second_last";
    case ReductionMove::drop_second_last: return "drop_second_last";
    case ReductionMove::drop_end_pair: return "drop_end_pair";
    case ReductionMove::merge_last_columns: return "merge_last_columns";
    case ReductionMove::pair_lone: return "pair_lone";
    case ReductionMove::pair_unit_top: return "pair_unit_top";
    case ReductionMove::pair_single_end: return "pair_single_end";
    case ReductionMove::pair_double_end: return "pair_double_end";
  }
  return "?";
}

NMembershipReport is_N(const Gf2Subspace& v) {
  NMembershipReport report{v, true, std::nullopt};
  const auto& basis = v.basis();
  auto fail = [&](NCondition c, std::vector<int> w) {
    report.passes = false;
    report.violated = NViolation{c, std::move(w)};
    return report;
  };

  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].weight() > 2) return fail(NCondition::N1, {static_cast<int>(i + 1)});

  std::vector<int> pos;  // basis positions of weight-2 vectors, in order
  std::vector<int> beta;
  std::vector<int> alpha;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].weight() != 2) continue;
    pos.push_back(static_cast<int>(i + 1));
    beta.push_back(basis[i].beta());
    alpha.push_back(basis[i].alpha());
  }
  const std::size_t m = pos.size();

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (beta[i] > beta[j]) return fail(NCondition::N2, {pos[i], pos[j]});

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (beta[i] == beta[j] && beta[j] < beta[k] && alpha[k] <= beta[i])
          return fail(NCondition::N3, {pos[i], pos[j], pos[k]});

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l)
          if (beta[i] == beta[j] && beta[j] == beta[k] && beta[k] < beta[l])
            return fail(NCondition::N4, {pos[i], pos[j], pos[k], pos[l]});

  return report;
}

bool in_N(const Gf2Subspace& v) { return is_N(v).passes; }

std::vector<Gf2Subspace> enumerate_N(int n, int threads) {
  check_guard("enumerate_N", n, 1, 8);
  std::vector<Gf2Subspace> out;
  for (int k = 0; k <= n; ++k) {
    auto part = collect_subspaces_if(n, k, in_N, threads);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::vector<Gf2Vector> without(const std::vector<Gf2Vector>& basis, const Gf2Vector& drop) {
  std::vector<Gf2Vector> out;
  for (const Gf2Vector& v : basis)
    if (v != drop) out.push_back(v);
  return out;
}

// For V whose last basis vector is x_{n-1}+x_n with no other vector touching
// columns n-1 or n: the remaining vectors (still in ambient n).
struct PairShape {
  std::vector<Gf2Vector> rest;
  int top = 0;  // max supp of rest, 0 when rest is empty
};

std::optional<PairShape> pair_shape(const Gf2Subspace& v) {
  const int n = v.ambient_dim();
  if (n < 2 || v.is_zero()) return std::nullopt;
  const Gf2Vector pair = Gf2Vector::unit(n, n - 1) + Gf2Vector::unit(n, n);
  if (v.basis().back() != pair) return std::nullopt;
  PairShape shape;
  shape.rest = without(v.basis(), pair);
  for (const Gf2Vector& r : shape.rest) {
    if (r.coord(n)) return std::nullopt;
    shape.top = std::max(shape.top, r.beta());
  }
  return shape;
}

// Case 7 among pair shapes: rest empty, or its first vector ends at the top
// index and every other vector has weight 1.
bool pair_shape_is_case7(const PairShape& s) {
  if (s.rest.empty()) return true;
  if (s.rest.front().beta() != s.top) return false;
  return std::all_of(s.rest.begin() + 1, s.rest.end(), [](const Gf2Vector& r) { return r.weight() == 1; });
}

CaseLabel classify_member(const Gf2Subspace& v) {
  const int n = v.ambient_dim();
  if (!v.in_support(n)) return {1};
  if (v.contains(Gf2Vector::unit(n, n))) return {2};
  if (!v.in_support(n - 1)) return {3};
  if (v.contains(Gf2Vector::unit(n, n - 1))) return {4};
  const Gf2Vector pair = Gf2Vector::unit(n, n - 1) + Gf2Vector::unit(n, n);
  if (v.basis().back() == pair) {
    if (auto shape = pair_shape(v)) {
      if (!pair_shape_is_case7(*shape)) return {6};
      if (shape->rest.empty()) return {7};
      return {7, shape->rest.front().weight() == 1 ? Subcase::a : Subcase::b};
    }
    return {5};
  }
  return {6};
}

}  // namespace

CaseLabel classify_subspace(const Gf2Subspace& v) {
  if (v.ambient_dim() < 1) throw PreconditionError("classify_subspace: ambient dimension must be >= 1");
  if (auto r = is_N(v); !r.passes)
    throw PreconditionError("classify_subspace: " + v.to_string() + " violates " + to_string(r.violated->condition));
  return classify_member(v);
}

SubspaceReduction subspace_reduce(const Gf2Subspace& v) {
  const int n = v.ambient_dim();
  if (n < 2) throw PreconditionError("subspace_reduce: ambient dimension must be >= 2");
  const CaseLabel label = classify_subspace(v);
  const Gf2Vector xn = Gf2Vector::unit(n, n);
  const Gf2Vector xn1 = Gf2Vector::unit(n, n - 1);
  const auto& basis = v.basis();

  switch (label.number) {
    case 1:
      return {label, ReductionMove::delete_last, delete_coordinate(v, n)};
    case 2:
      return {label, ReductionMove::drop_last_unit, delete_coordinate(canonicalize(without(basis, xn), n), n)};
    case 3:
      return {label, ReductionMove::delete_second_last, delete_coordinate(v, n - 1)};
    case 4:
      return {label, ReductionMove::drop_second_last,
              delete_coordinate(canonicalize(without(basis, xn1), n), n - 1)};
    case 5:
      return {label, ReductionMove::drop_end_pair,
              delete_coordinate(canonicalize(without(basis, xn1 + xn), n), n - 1)};
    default:
      break;
  }

  auto shape = pair_shape(v);
  if (!shape) {
    // Column n-1 += column n, then drop column n: every vector ending at n now ends at n-1.
    std::vector<Gf2Vector> moved;
    for (const Gf2Vector& r : basis) moved.push_back(r.with_coord(n - 1, r.coord(n - 1) != r.coord(n)));
    return {label, ReductionMove::merge_last_columns, delete_coordinate(canonicalize(moved, n), n)};
  }

  std::vector<Gf2Vector> rest = shape->rest;
  ReductionMove move;
  if (rest.empty()) {
    rest.push_back(xn1);
    move = ReductionMove::pair_lone;
  } else {
    const int t = shape->top;
    const Gf2Vector xt = Gf2Vector::unit(n, t);
    if (auto it = std::find(rest.begin(), rest.end(), xt); it != rest.end()) {
      *it = xt + xn1;
      move = ReductionMove::pair_unit_top;
    } else {
      std::vector<std::size_t> ending;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (rest[i].weight() == 2 && rest[i].beta() == t) ending.push_back(i);
      if (ending.empty() || ending.size() > 2)
        throw ConsistencyError("subspace_reduce: unexpected endpoint multiplicity in " + v.to_string());
      // The later (smaller) of the vectors ending at t moves its endpoint to n-1.
      rest[ending.back()] = rest[ending.back()] + xt + xn1;
      if (ending.size() == 1) {
        rest.push_back(xt);
        move = ReductionMove::pair_single_end;
      } else {
        move = ReductionMove::pair_double_end;
      }
    }
  }
  return {label, move, delete_coordinate(canonicalize(rest, n), n)};
}

namespace {

Gf2Vector append_zero(const Gf2Vector& r) { return Gf2Vector(r.dim() + 1, r.bits() << 1); }

// Inverses of the moves that can land a subspace in case 6 or 7.
std::vector<Gf2Subspace> pair_and_merge_preimages(const Gf2Subspace& reduced) {
  const int m = reduced.ambient_dim();
  const int n = m + 1;
  const auto& basis = reduced.basis();
  std::vector<Gf2Subspace> out;
  const Gf2Vector pair = Gf2Vector::unit(n, n - 1) + Gf2Vector::unit(n, n);

  // Undo merge_last_columns: the first vector ending at m keeps its endpoint,
  // the others move theirs to n.
  std::vector<std::size_t> ending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].weight() == 2 && basis[i].beta() == m) ending.push_back(i);
  if (ending.size() >= 2) {
    std::vector<Gf2Vector> lifted;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Gf2Vector r = append_zero(basis[i]);
      if (std::find(ending.begin() + 1, ending.end(), i) != ending.end())
        r = r.with_coord(m, false).with_coord(n, true);
      lifted.push_back(r);
    }
    out.push_back(canonicalize(lifted, n));
  }

  // Undo the pair moves.
  if (reduced == Gf2Subspace::span({Gf2Vector::unit(m, m)}, m)) out.push_back(Gf2Subspace::span({pair}, n));

  std::vector<std::size_t> touching;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].coord(m)) touching.push_back(i);
  if (touching.size() == 1 && basis[touching.front()].weight() == 2) {
    const int p = basis[touching.front()].alpha();
    std::vector<Gf2Vector> rest;
    int top = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == touching.front()) continue;
      rest.push_back(basis[i]);
      top = std::max(top, basis[i].beta());
    }
    const Gf2Vector xp = Gf2Vector::unit(m, p);
    if (rest.empty() || top < p) {
      rest.push_back(xp);
    } else {
      const Gf2Vector xt = Gf2Vector::unit(m, top);
      if (auto it = std::find(rest.begin(), rest.end(), xt); it != rest.end())
        *it = xp + xt;
      else
        rest.push_back(xp + xt);
    }
    std::vector<Gf2Vector> lifted;
    for (const Gf2Vector& r : rest) lifted.push_back(append_zero(r));
    lifted.push_back(pair);
    out.push_back(canonicalize(lifted, n));
  }
  return out;
}

}  // namespace

std::vector<Gf2Subspace> subspace_expand(const Gf2Subspace& reduced, int target_case) {
  if (target_case < 1 || target_case > 7) throw PreconditionError("subspace_expand: case must be 1..7");
  const int m = reduced.ambient_dim();
  if (m < 1 || m + 1 > kMaxDim) throw PreconditionError("subspace_expand: ambient dimension out of range");
  if (auto r = is_N(reduced); !r.passes)
    throw PreconditionError("subspace_expand: " + reduced.to_string() + " violates " +
                            to_string(r.violated->condition));
  const int n = m + 1;
  const Gf2Vector xn = Gf2Vector::unit(n, n);
  const Gf2Vector xn1 = Gf2Vector::unit(n, n - 1);

  std::vector<Gf2Subspace> candidates;
  auto with_extra = [&](const Gf2Subspace& s, const Gf2Vector& extra) {
    std::vector<Gf2Vector> b = s.basis();
    b.push_back(extra);
    return canonicalize(b, n);
  };
  switch (target_case) {
    case 1: candidates.push_back(insert_zero_coordinate(reduced, n)); break;
    case 2: candidates.push_back(with_extra(insert_zero_coordinate(reduced, n), xn)); break;
    case 3: candidates.push_back(insert_zero_coordinate(reduced, n - 1)); break;
    case 4: candidates.push_back(with_extra(insert_zero_coordinate(reduced, n - 1), xn1)); break;
    case 5: candidates.push_back(with_extra(insert_zero_coordinate(reduced, n - 1), xn1 + xn)); break;
    default: candidates = pair_and_merge_preimages(reduced); break;
  }

  std::vector<Gf2Subspace> out;
  for (const Gf2Subspace& c : candidates) {
    if (!in_N(c)) continue;
    if (classify_member(c).number != target_case) continue;
    if (subspace_reduce(c).subspace != reduced) continue;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace polarwords
