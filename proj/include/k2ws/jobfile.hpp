// Line-oriented job files.  Algebra jobs carry "field", "vars", "rel",
// "bound" and "nmax" lines; complex jobs carry "vertices" plus "facet" or
// "missing" lines.  '#' starts a comment.  Polynomials follow
//   poly   := ["-"] term (("+" | "-") term)*
//   term   := [coeff "*"] factor ("*" factor)*
//   factor := ident ["^" nat]
//   coeff  := nat | nat "/" nat
// with variables resolved against the vars line, which must come first.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k2ws/facecomplex.hpp"
#include "k2ws/groebner.hpp"

namespace k2ws {

struct FieldSpec {
  bool rational = false;
  std::int64_t prime = 32003;

  std::string str() const {
    return rational ? "QQ" : "GF(" + std::to_string(prime) + ")";
  }
  bool operator==(const FieldSpec&) const = default;
};

struct ParsedTerm {
  std::int64_t num = 1;  // sign folded in
  std::int64_t den = 1;
  std::vector<std::pair<std::size_t, std::uint32_t>> powers;  // (var, exp)
};

struct ParsedPoly {
  std::vector<ParsedTerm> terms;
  int line = 0;
};

struct ParsedJob {
  enum class Kind { Algebra, Complex };
  Kind kind = Kind::Algebra;
  std::optional<FieldSpec> field;
  std::optional<int> bound;
  std::optional<int> nmax;
  std::vector<std::string> vars;
  std::vector<ParsedPoly> relations;
  std::vector<std::string> vertices;
  std::vector<FaceMask> facets;
  std::vector<FaceMask> missing;
};

ParsedJob parse_job(std::string_view text);

SimplicialComplex make_complex(const ParsedJob& job);

template <ExactField F>
Presentation<F> to_presentation(const F& f, const ParsedJob& job,
                                int bound_override = -1) {
  if (job.kind != ParsedJob::Kind::Algebra)
    throw Error("job file describes a complex, not an algebra");
  if (job.vars.empty()) throw Error("job file has no vars line");
  VariableSet vars(job.vars);
  std::vector<Polynomial<F>> rels;
  for (const auto& pp : job.relations) {
    std::vector<Term<F>> terms;
    for (const auto& t : pp.terms) {
      Word w;
      for (auto [v, e] : t.powers)
        for (std::uint32_t k = 0; k < e; ++k) w.letters.push_back(Letter(v));
      terms.push_back({std::move(w), f.from_fraction(t.num, t.den)});
    }
    auto p = Polynomial<F>::from_terms(f, std::move(terms));
    if (p.is_zero())
      throw Error("relation on line " + std::to_string(pp.line) +
                  " vanishes");
    rels.push_back(std::move(p));
  }
  int bound = bound_override >= 0 ? bound_override
                                  : job.bound ? *job.bound : -1;
  return Presentation<F>::make(f, vars, std::move(rels), bound);
}

template <ExactField F>
std::string print_presentation(const F& f, const Presentation<F>& P,
                               const FieldSpec& spec) {
  std::string out = "field " + spec.str() + "\nvars";
  for (const auto& n : P.vars.names()) out += " " + n;
  out += "\n";
  for (const auto& r : P.relations)
    out += "rel " + to_string(f, r, P.vars) + "\n";
  out += "bound " + std::to_string(P.bound) + "\n";
  return out;
}

}  // namespace k2ws
