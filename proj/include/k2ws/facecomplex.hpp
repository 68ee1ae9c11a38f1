// Simplicial complexes on a small vertex set, their minimally missing faces,
// and the anticommutative face algebra of an ordered complex.  The ordering
// condition checked here rules out, for every minimally missing face Y and
// outside vertex u strictly between the ends of Y, that both exchanges of an
// end of Y for u land back in the complex.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k2ws/groebner.hpp"

namespace k2ws {

using FaceMask = std::uint32_t;

class SimplicialComplex {
 public:
  // Explicit face list; validated to be downward closed with every vertex.
  static SimplicialComplex from_faces(std::vector<std::string> vertex_names,
                                      const std::vector<FaceMask>& faces);
  // Downward closure of the given facets.
  static SimplicialComplex from_facets(std::vector<std::string> vertex_names,
                                       const std::vector<FaceMask>& facets);
  // Everything not containing one of the given sets.
  static SimplicialComplex from_missing(std::vector<std::string> vertex_names,
                                        const std::vector<FaceMask>& missing);

  std::size_t nvertices() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  bool has_face(FaceMask m) const { return table_[m]; }
  std::vector<FaceMask> faces() const;          // ascending mask order
  std::vector<std::size_t> f_vector() const;    // index = cardinality

 private:
  SimplicialComplex(std::vector<std::string> names, std::vector<bool> table);
  std::vector<std::string> names_;
  std::vector<bool> table_;  // indexed by mask
};

// Missing faces all of whose proper subsets are faces; sorted by size, then
// mask.  Always of size at least two.
std::vector<FaceMask> minimally_missing_faces(const SimplicialComplex& sc);

struct OrderingCheck {
  bool ok = true;
  FaceMask face = 0;  // witness when not ok
  int vertex = -1;
};

// order[k] = vertex placed at rank k.
OrderingCheck check_ordering(const SimplicialComplex& sc,
                             const std::vector<int>& order);

struct OrderingSearch {
  std::optional<std::vector<int>> ordering;
  std::uint64_t checked = 0;
};

// Lexicographic scan over all vertex permutations; stops at the first
// ordering that passes.  Refuses more than max_vertices vertices.
OrderingSearch find_good_ordering(const SimplicialComplex& sc,
                                  std::size_t max_vertices = 8);

// Generators follow the ordering: variable k is the vertex of rank k.
// Relations: anticommutators for k < l, all squares, and one monomial per
// minimally missing face with its vertices ascending by rank.
template <ExactField F>
Presentation<F> face_algebra_presentation(const F& f,
                                          const SimplicialComplex& sc,
                                          const std::vector<int>& order,
                                          int bound = -1) {
  std::size_t n = sc.nvertices();
  if (order.size() != n) throw Error("ordering has the wrong length");
  std::vector<std::string> names;
  names.reserve(n);
  for (int v : order) names.push_back(sc.vertex_names()[std::size_t(v)]);
  VariableSet vars(names);

  std::vector<int> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[std::size_t(order[k])] = int(k);

  std::vector<Polynomial<F>> rels;
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      Word lk{{Letter(l), Letter(k)}};
      Word kl{{Letter(k), Letter(l)}};
      rels.push_back(Polynomial<F>::from_terms(
          f, {{lk, f.one()}, {kl, f.one()}}));
    }
  for (std::size_t k = 0; k < n; ++k)
    rels.push_back(
        Polynomial<F>::term(f, Word{{Letter(k), Letter(k)}}, f.one()));

  for (FaceMask m : minimally_missing_faces(sc)) {
    std::vector<Letter> letters;
    for (std::size_t v = 0; v < n; ++v)
      if (m & (FaceMask(1) << v)) letters.push_back(Letter(rank[v]));
    std::sort(letters.begin(), letters.end());
    rels.push_back(Polynomial<F>::term(f, Word{std::move(letters)}, f.one()));
  }
  return Presentation<F>::make(f, vars, std::move(rels), bound);
}

}  // namespace k2ws
