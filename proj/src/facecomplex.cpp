#include "k2ws/facecomplex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace k2ws {

namespace {

constexpr std::size_t kMaskLimit = 20;  // table of 2^n faces

void check_names(const std::vector<std::string>& names) {
  if (names.empty()) throw Error("complex has no vertices");
  if (names.size() > kMaskLimit) throw Error("too many vertices");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty vertex name");
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error("repeated vertex name " + names[i]);
  }
}

void check_mask(FaceMask m, std::size_t n) {
  if (m >= (FaceMask(1) << n)) throw Error("face mentions an unknown vertex");
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> names,
                                     std::vector<bool> table)
    : names_(std::move(names)), table_(std::move(table)) {}

SimplicialComplex SimplicialComplex::from_faces(
    std::vector<std::string> vertex_names, const std::vector<FaceMask>& faces) {
  check_names(vertex_names);
  std::size_t n = vertex_names.size();
  std::vector<bool> table(std::size_t(1) << n, false);
  table[0] = true;
  for (FaceMask m : faces) {
    check_mask(m, n);
    table[m] = true;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!table[std::size_t(1) << v])
      throw Error("vertex " + vertex_names[v] + " is not a face");
  for (FaceMask m = 1; m < table.size(); ++m) {
    if (!table[m]) continue;
    for (std::size_t v = 0; v < n; ++v)
      if ((m >> v) & 1u)
        if (!table[m & ~(FaceMask(1) << v)])
          throw Error("face list is not downward closed");
  }
  return SimplicialComplex(std::move(vertex_names), std::move(table));
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> vertex_names,
    const std::vector<FaceMask>& facets) {
  check_names(vertex_names);
  std::size_t n = vertex_names.size();
  std::vector<bool> table(std::size_t(1) << n, false);
  table[0] = true;
  for (std::size_t v = 0; v < n; ++v) table[std::size_t(1) << v] = true;
  for (FaceMask top : facets) {
    check_mask(top, n);
    // all subsets of top
    FaceMask s = top;
    while (true) {
      table[s] = true;
      if (s == 0) break;
      s = (s - 1) & top;
    }
  }
  return SimplicialComplex(std::move(vertex_names), std::move(table));
}

SimplicialComplex SimplicialComplex::from_missing(
    std::vector<std::string> vertex_names,
    const std::vector<FaceMask>& missing) {
  check_names(vertex_names);
  std::size_t n = vertex_names.size();
  for (FaceMask m : missing) {
    check_mask(m, n);
    if (std::popcount(m) < 2)
      throw Error("a missing face needs at least two vertices");
  }
  std::vector<bool> table(std::size_t(1) << n, false);
  for (FaceMask m = 0; m < table.size(); ++m) {
    bool ok = true;
    for (FaceMask bad : missing)
      if ((m & bad) == bad) {
        ok = false;
        break;
      }
    table[m] = ok;
  }
  return SimplicialComplex(std::move(vertex_names), std::move(table));
}

std::vector<FaceMask> SimplicialComplex::faces() const {
  std::vector<FaceMask> out;
  for (FaceMask m = 0; m < table_.size(); ++m)
    if (table_[m]) out.push_back(m);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out(names_.size() + 1, 0);
  for (FaceMask m = 0; m < table_.size(); ++m)
    if (table_[m]) out[std::size_t(std::popcount(m))]++;
  return out;
}

std::vector<FaceMask> minimally_missing_faces(const SimplicialComplex& sc) {
  std::size_t n = sc.nvertices();
  std::vector<FaceMask> out;
  for (FaceMask m = 1; m < (FaceMask(1) << n); ++m) {
    if (sc.has_face(m)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if ((m >> v) & 1u)
        if (!sc.has_face(m & ~(FaceMask(1) << v))) minimal = false;
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
    auto pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

OrderingCheck check_ordering(const SimplicialComplex& sc,
                             const std::vector<int>& order) {
  std::size_t n = sc.nvertices();
  if (order.size() != n) throw Error("ordering has the wrong length");
  std::vector<int> rank(n, -1);
  for (std::size_t k = 0; k < n; ++k) {
    int v = order[k];
    if (v < 0 || std::size_t(v) >= n || rank[std::size_t(v)] != -1)
      throw Error("ordering is not a permutation of the vertices");
    rank[std::size_t(v)] = int(k);
  }
  for (FaceMask y : minimally_missing_faces(sc)) {
    int lo = -1, hi = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!((y >> v) & 1u)) continue;
      if (lo < 0 || rank[v] < rank[std::size_t(lo)]) lo = int(v);
      if (hi < 0 || rank[v] > rank[std::size_t(hi)]) hi = int(v);
    }
    for (std::size_t u = 0; u < n; ++u) {
      if ((y >> u) & 1u) continue;
      if (rank[u] <= rank[std::size_t(lo)] || rank[u] >= rank[std::size_t(hi)])
        continue;
      FaceMask y1 = (y & ~(FaceMask(1) << lo)) | (FaceMask(1) << u);
      FaceMask y2 = (y & ~(FaceMask(1) << hi)) | (FaceMask(1) << u);
      if (sc.has_face(y1) && sc.has_face(y2)) return {false, y, int(u)};
    }
  }
  return {};
}

OrderingSearch find_good_ordering(const SimplicialComplex& sc,
                                  std::size_t max_vertices) {
  std::size_t n = sc.nvertices();
  if (n > max_vertices)
    throw Error("ordering search over more than " +
                std::to_string(max_vertices) + " vertices");
  OrderingSearch res;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    res.checked++;
    if (check_ordering(sc, order).ok) {
      res.ordering = order;
      return res;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return res;
}

}  // namespace k2ws
