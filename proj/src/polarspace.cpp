#include "polarwords/polarspace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polarwords/errors.hpp"
#include "polarwords/gf2_matrix.hpp"

namespace polarwords {

bool symplectic_form(const Gf2Vector& u, const Gf2Vector& v, int n) {
  if (u.dim() != 2 * n || v.dim() != 2 * n)
    throw PreconditionError("symplectic_form: vectors must have dimension 2n = " + std::to_string(2 * n));
  // Coordinate i sits at bit 2n-i, so coordinates 1..n are the high half.
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  const std::uint32_t uh = u.bits() >> n, ul = u.bits() & mask;
  const std::uint32_t vh = v.bits() >> n, vl = v.bits() & mask;
  return std::popcount((uh & vl) ^ (ul & vh)) & 1;
}

bool SymplecticSpace::is_totally_isotropic(const Gf2Subspace& v) const {
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (form(b[i], b[j])) return false;
  return true;
}

int PolarGeometry::point_index(const Gf2Subspace& p) const {
  auto it = point_ids_.find(p);
  return it == point_ids_.end() ? -1 : it->second;
}

namespace {

// The 2^n - 1 hyperplanes of an n-dimensional subspace, one per nonzero
// functional on its basis coordinates.
std::vector<Gf2Subspace> hyperplanes(const Gf2Subspace& p) {
  const auto& b = p.basis();
  const int k = p.dim();
  std::vector<Gf2Subspace> out;
  for (std::uint32_t f = 1; f < (std::uint32_t{1} << k); ++f) {
    const int j = std::countr_zero(f);
    std::vector<Gf2Vector> rows;
    for (int i = 0; i < k; ++i) {
      if (i == j) continue;
      rows.push_back((f >> i) & 1 ? b[i] + b[j] : b[i]);
    }
    out.push_back(canonicalize(rows, p.ambient_dim()));
  }
  return out;
}

std::vector<std::vector<int>> collinearity(const PolarGeometry& geo) {
  std::vector<std::vector<int>> adj(geo.points.size());
  for (const auto& line : geo.incidence)
    for (int a : line)
      for (int b : line)
        if (a != b) adj[a].push_back(b);
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

std::vector<BitRow> sigma_rows(const PolarGeometry& geo) {
  std::vector<BitRow> rows;
  rows.reserve(geo.lines.size());
  for (const auto& line : geo.incidence) {
    BitRow r(geo.points.size());
    for (int p : line) r.set(static_cast<std::size_t>(p));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

PolarGeometry build_geometry(int n, int threads) {
  check_guard("build_geometry", n, 1, 4);
  const SymplecticSpace space{n};
  auto iso = [&space](const Gf2Subspace& v) { return space.is_totally_isotropic(v); };

  PolarGeometry geo;
  geo.n = n;
  geo.points = collect_subspaces_if(2 * n, n, iso, threads);
  geo.lines = collect_subspaces_if(2 * n, n - 1, iso, threads);
  for (std::size_t i = 0; i < geo.points.size(); ++i) geo.point_ids_.emplace(geo.points[i], static_cast<int>(i));

  std::unordered_map<Gf2Subspace, int, Gf2SubspaceHash> line_ids;
  for (std::size_t i = 0; i < geo.lines.size(); ++i) line_ids.emplace(geo.lines[i], static_cast<int>(i));

  std::vector<std::vector<int>> on_line(geo.lines.size());
  geo.lines_on_point.resize(geo.points.size());
  for (std::size_t p = 0; p < geo.points.size(); ++p) {
    for (const Gf2Subspace& h : hyperplanes(geo.points[p])) {
      auto it = line_ids.find(h);
      if (it == line_ids.end())
        throw ConsistencyError("build_geometry: hyperplane " + h.to_string() + " is not an enumerated line");
      on_line[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(p));
      geo.lines_on_point[p].push_back(it->second);
    }
    std::sort(geo.lines_on_point[p].begin(), geo.lines_on_point[p].end());
  }
  geo.incidence.reserve(geo.lines.size());
  for (std::size_t l = 0; l < geo.lines.size(); ++l) {
    if (on_line[l].size() != 3)
      throw ConsistencyError("build_geometry: line " + geo.lines[l].to_string() + " lies in " +
                             std::to_string(on_line[l].size()) + " points");
    // Points are visited in ascending order, so each triple is already sorted.
    geo.incidence.push_back({on_line[l][0], on_line[l][1], on_line[l][2]});
  }
  return geo;
}

std::size_t udim(const PolarGeometry& geo) { return geo.points.size() - gf2_rank(sigma_rows(geo)); }

std::size_t udim(int n, int threads) { return udim(build_geometry(n, threads)); }

StrataReport strata(const PolarGeometry& geo, int x0) {
  const int count = static_cast<int>(geo.points.size());
  check_guard("strata: x0", x0, 0, count - 1);
  const int n = geo.n;
  const Gf2Subspace& base = geo.points[static_cast<std::size_t>(x0)];

  StrataReport rep;
  rep.base_point = x0;
  rep.strata.assign(static_cast<std::size_t>(n + 1), {});
  std::vector<int> level(static_cast<std::size_t>(count));
  std::vector<Gf2Subspace> meet(static_cast<std::size_t>(count));
  for (int y = 0; y < count; ++y) {
    meet[y] = intersect(geo.points[y], base);
    level[y] = n - meet[y].dim();
    rep.strata[level[y]].push_back(y);
  }

  const auto adj = collinearity(geo);

  std::vector<int> dist(static_cast<std::size_t>(count), -1);
  std::queue<int> q;
  dist[x0] = 0;
  q.push(x0);
  while (!q.empty()) {
    const int y = q.front();
    q.pop();
    for (int z : adj[y])
      if (dist[z] < 0) {
        dist[z] = dist[y] + 1;
        q.push(z);
      }
  }
  rep.distance_matches = std::equal(dist.begin(), dist.end(), level.begin());

  rep.line_fact = true;
  for (const auto& line : geo.incidence) {
    std::array<int, 3> ks{level[line[0]], level[line[1]], level[line[2]]};
    std::sort(ks.begin(), ks.end());
    if (!(ks[1] == ks[2] && ks[0] == ks[1] - 1)) rep.line_fact = false;
  }

  rep.components.assign(static_cast<std::size_t>(n + 1), {});
  rep.component_bijection = true;
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  for (int k = 0; k <= n; ++k) {
    std::set<Gf2Subspace> images;
    for (int start : rep.strata[k]) {
      if (seen[start]) continue;
      std::vector<int> comp{start};
      seen[start] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (int z : adj[comp[i]])
          if (!seen[z] && level[z] == k) {
            seen[z] = 1;
            comp.push_back(z);
          }
      std::sort(comp.begin(), comp.end());
      for (int y : comp)
        if (meet[y] != meet[comp.front()]) rep.component_bijection = false;
      if (!images.insert(meet[comp.front()]).second) rep.component_bijection = false;
      rep.components[k].push_back(std::move(comp));
    }
    if (images.size() != gaussian_binomial2(n, n - k)) rep.component_bijection = false;
  }
  return rep;
}

QuotientBasis quotient_basis(const PolarGeometry& geo) {
  Gf2RowSpan span(geo.points.size());
  for (BitRow& r : sigma_rows(geo)) span.add(std::move(r));
  QuotientBasis out;
  for (std::size_t p = 0; p < geo.points.size(); ++p) {
    BitRow unit(geo.points.size());
    unit.set(p);
    if (span.add(std::move(unit))) out.points.push_back(static_cast<int>(p));
  }
  out.certificate_rank = span.rank();
  return out;
}

IncidenceFormat parse_incidence_format(const std::string& name) {
  if (name == "dot") return IncidenceFormat::dot;
  if (name == "json") return IncidenceFormat::json;
  if (name == "csv") return IncidenceFormat::csv;
  throw PreconditionError("unknown incidence format '" + name + "' (expected dot, json or csv)");
}

std::string export_incidence(const PolarGeometry& geo, IncidenceFormat format) {
  std::ostringstream os;
  switch (format) {
    case IncidenceFormat::dot:
      os << "graph levi_n" << geo.n << " {\n";
      for (std::size_t p = 0; p < geo.points.size(); ++p)
        os << "  p" << p << " [shape=circle, label=\"" << geo.points[p].to_string() << "\"];\n";
      for (std::size_t l = 0; l < geo.lines.size(); ++l)
        os << "  l" << l << " [shape=box, label=\"" << geo.lines[l].to_string() << "\"];\n";
      for (std::size_t l = 0; l < geo.incidence.size(); ++l)
        for (int p : geo.incidence[l]) os << "  l" << l << " -- p" << p << ";\n";
      os << "}\n";
      break;
    case IncidenceFormat::json: {
      nlohmann::json doc;
      doc["n"] = geo.n;
      doc["points"] = nlohmann::json::array();
      for (std::size_t p = 0; p < geo.points.size(); ++p) {
        nlohmann::json basis = nlohmann::json::array();
        for (const Gf2Vector& r : geo.points[p].basis()) basis.push_back(r.to_string());
        doc["points"].push_back({{"id", p}, {"basis", basis}});
      }
      doc["lines"] = nlohmann::json::array();
      for (std::size_t l = 0; l < geo.incidence.size(); ++l)
        doc["lines"].push_back({{"id", l}, {"points", geo.incidence[l]}});
      os << doc.dump(2) << "\n";
      break;
    }
    case IncidenceFormat::csv:
      os << "line_id,p1,p2,p3\n";
      for (std::size_t l = 0; l < geo.incidence.size(); ++l) {
        const auto& t = geo.incidence[l];
        os << l << "," << t[0] << "," << t[1] << "," << t[2] << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace polarwords
