#include "k2ws/run.hpp"

#include <sstream>

#include "json.hpp"
#include "k2ws/facecomplex.hpp"
#include "k2ws/jobfile.hpp"
#include "k2ws/k2.hpp"
#include "k2ws/monomial.hpp"

namespace k2ws {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[std::size_t(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

using nlohmann::json;

struct Report {
  std::string command;
  std::string input_hash;
  std::string verdict;
  std::vector<std::string> caveats;
  json tables = json::object();
  int exit_code = 0;
};

FieldSpec pick_field(const ParsedJob& job, const RunOptions& opts) {
  if (!opts.field) return job.field ? *job.field : FieldSpec{};
  const std::string& s = *opts.field;
  if (s == "QQ") return {true, 0};
  if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    std::int64_t p = 0;
    for (std::size_t i = 3; i + 1 < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw Error("field option must be QQ or GF(p)");
      p = p * 10 + (s[i] - '0');
      if (p > (std::int64_t(1) << 40))
        throw Error("field characteristic out of range");
    }
    return {false, p};
  }
  throw Error("field option must be QQ or GF(p)");
}

int pick_nmax(const ParsedJob& job, const RunOptions& opts) {
  int n = opts.nmax ? *opts.nmax : job.nmax ? *job.nmax : 4;
  if (n < 1 || n > 16) throw Error("nmax out of range");
  return n;
}

// Complex jobs feed the algebra commands through their face algebra.
template <ExactField F>
Presentation<F> job_presentation(const F& f, const ParsedJob& job,
                                 const RunOptions& opts, Report& r) {
  int bound = opts.bound ? *opts.bound : job.bound ? *job.bound : -1;
  if (job.kind == ParsedJob::Kind::Algebra)
    return to_presentation(f, job, bound);
  auto sc = make_complex(job);
  std::vector<int> order(sc.nvertices());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  if (opts.search_orderings) {
    auto found = find_good_ordering(sc);
    if (!found.ordering)
      throw Error("no vertex ordering satisfies the exchange condition");
    order = *found.ordering;
  }
  json names = json::array();
  for (int v : order) names.push_back(sc.vertex_names()[std::size_t(v)]);
  r.tables["ordering"] = names;
  return face_algebra_presentation(f, sc, order, bound);
}

template <ExactField F>
void fill_gb_tables(const F& f, const GroebnerBasis<F>& gb, Report& r) {
  json basis = json::array();
  json lws = json::array();
  for (const auto& e : gb.elements) {
    basis.push_back(to_string(f, e, gb.vars));
    lws.push_back(to_string(e.leading().word, gb.vars));
  }
  r.tables["basis"] = basis;
  r.tables["leading_words"] = lws;
  r.tables["bound"] = gb.bound;
  r.tables["complete_below"] = gb.complete_below;
  r.tables["pending_degrees"] = gb.pending_degrees;
  for (const auto& n : gb.notices) r.caveats.push_back(n);
}

template <ExactField F>
void note_pending(const GroebnerBasis<F>& gb, bool homogeneous, Report& r) {
  if (!gb.has_pending()) return;
  r.caveats.push_back("ambiguities above the bound were not resolved");
  if (!homogeneous)
    r.caveats.push_back(
        "inhomogeneous input: unresolved ambiguities can reach below the "
        "bound");
  r.verdict = "inconclusive at bound";
  r.exit_code = 2;
}

template <ExactField F>
void cmd_gb(const F& f, const Presentation<F>& P, Report& r) {
  auto gb = complete(f, P);
  fill_gb_tables(f, gb, r);
  r.verdict = "complete";
  note_pending(gb, P.homogeneous, r);
}

template <ExactField F>
void cmd_gr(const F& f, const Presentation<F>& P, Report& r) {
  auto gb = complete(f, P);
  auto m = associated_graded(gb);
  json gens = json::array();
  for (const auto& w : m.mingens()) gens.push_back(to_string(w, P.vars));
  r.tables["generators"] = gens;
  r.tables["bound"] = m.bound();
  r.verdict = "certified";
  note_pending(gb, P.homogeneous, r);
}

template <ExactField F>
void cmd_hilbert(const F& f, const Presentation<F>& P, Report& r) {
  auto gb = complete(f, P);
  auto m = associated_graded(gb);
  r.tables["coefficients"] = hilbert_coeffs(m);
  r.tables["bound"] = m.bound();
  r.verdict = "computed";
  note_pending(gb, P.homogeneous, r);
}

template <ExactField F>
void cmd_essential(const F& f, const Presentation<F>& P, Report& r) {
  auto res = essential_groebner_test(f, P);
  json rows = json::array();
  for (const auto& [deg, ess, gens] : res.table)
    rows.push_back(json{{"degree", deg},
                        {"essential", ess},
                        {"minimal_generators", gens}});
  r.tables["rows"] = rows;
  if (res.first_mismatch >= 0) r.tables["witness_degree"] = res.first_mismatch;
  r.verdict = to_string(res.verdict);
  if (res.verdict == Verdict::InconclusiveAtBound) r.exit_code = 2;
  if (res.gb.has_pending())
    r.caveats.push_back("ambiguities above the bound were not resolved");
}

json ext_cells(const ExtTable& t) {
  json cells = json::array();
  for (const auto& [nj, d] : t.nonzero())
    cells.push_back(json{{"level", nj.first},
                         {"degree", nj.second},
                         {"dim", d}});
  return cells;
}

template <ExactField F>
void cmd_ext(const F& f, const Presentation<F>& P, int nmax, Report& r) {
  r.tables["nmax"] = nmax;
  r.tables["bound"] = P.bound;
  r.verdict = "computed";
  if (P.homogeneous) {
    auto t = ext_dims(f, P, nmax, P.bound);
    r.tables["dims"] = t.dims;
    r.tables["nonzero"] = ext_cells(t);
    return;
  }
  auto gb = complete(f, P);
  auto m = associated_graded(gb);
  auto t = ext_dims(f, m, nmax, m.bound());
  r.tables["dims"] = t.dims;
  r.tables["nonzero"] = ext_cells(t);
  r.caveats.push_back(
      "dimensions are for the associated monomial algebra of the input");
  note_pending(gb, P.homogeneous, r);
}

template <ExactField F>
void cmd_k2(const F& f, const Presentation<F>& P, int nmax, Report& r) {
  if (!P.homogeneous)
    throw Error(
        "the K2 span test needs homogeneous relations; run gr for the "
        "associated monomial algebra and lift for the comparison evidence");
  auto v = k2_test(f, P, nmax, P.bound);
  r.tables["nmax"] = v.nmax;
  r.tables["bound"] = v.bound;
  r.tables["nonzero"] = ext_cells(v.table);
  for (const auto& c : v.caveats) r.caveats.push_back(c);
  if (v.certified_not) {
    r.tables["witness"] = json{{"level", v.witness->first},
                               {"degree", v.witness->second},
                               {"expected", v.expected},
                               {"spanned", v.spanned}};
    r.verdict = "certified not K2";
  } else {
    r.verdict = "K2 evidence up to bound";
    r.exit_code = 2;
  }
}

template <ExactField F>
void cmd_lift(const F& f, const Presentation<F>& P, int nmax, Report& r) {
  auto rep = lambda_surjectivity_evidence(f, P, nmax, P.bound);
  json classes = json::array();
  std::size_t lifted = 0;
  for (const auto& c : rep.classes) {
    classes.push_back(json{{"level", c.level},
                           {"word", to_string(c.alpha, P.vars)},
                           {"index", c.class_index},
                           {"lifted", c.lifted}});
    if (c.lifted) ++lifted;
  }
  r.tables["classes"] = classes;
  r.tables["lifted"] = lifted;
  r.tables["total"] = rep.classes.size();
  r.tables["nmax"] = rep.nmax;
  r.tables["bound"] = rep.bound;
  for (const auto& c : rep.caveats) r.caveats.push_back(c);
  r.verdict = rep.all_lifted() ? "all classes lift" : "unlifted class";
  if (!(rep.failures_exact && rep.enumeration_complete)) r.exit_code = 2;
}

template <ExactField F>
void cmd_face(const F& f, const ParsedJob& job, const RunOptions& opts,
              Report& r) {
  auto sc = make_complex(job);
  r.tables["f_vector"] = sc.f_vector();
  json missing = json::array();
  for (FaceMask m : minimally_missing_faces(sc)) {
    json face = json::array();
    for (std::size_t v = 0; v < sc.nvertices(); ++v)
      if ((m >> v) & 1u) face.push_back(sc.vertex_names()[v]);
    missing.push_back(face);
  }
  r.tables["missing"] = missing;

  std::vector<int> order(sc.nvertices());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  bool have_order = true;
  if (opts.search_orderings) {
    auto found = find_good_ordering(sc);
    r.tables["checked"] = found.checked;
    if (found.ordering) {
      order = *found.ordering;
      r.verdict = "ordering found";
    } else {
      have_order = false;
      r.verdict = "no ordering passes";
    }
  } else {
    auto check = check_ordering(sc, order);
    if (check.ok) {
      r.verdict = "ordering passes";
    } else {
      have_order = false;
      r.verdict = "ordering fails";
      json face = json::array();
      for (std::size_t v = 0; v < sc.nvertices(); ++v)
        if ((check.face >> v) & 1u) face.push_back(sc.vertex_names()[v]);
      r.tables["witness"] =
          json{{"face", face},
               {"vertex", sc.vertex_names()[std::size_t(check.vertex)]}};
    }
  }
  if (have_order) {
    json names = json::array();
    for (int v : order) names.push_back(sc.vertex_names()[std::size_t(v)]);
    r.tables["ordering"] = names;
    int bound = opts.bound ? *opts.bound : job.bound ? *job.bound : -1;
    auto P = face_algebra_presentation(f, sc, order, bound);
    json rels = json::array();
    for (const auto& rel : P.relations)
      rels.push_back(to_string(f, rel, P.vars));
    r.tables["relations"] = rels;
    r.tables["bound"] = P.bound;
  }
}

void render_human(std::ostream& os, const Report& r) {
  os << "command: " << r.command << "\n";
  os << "input: " << r.input_hash << "\n";
  os << "verdict: " << r.verdict << "\n";
  for (const auto& c : r.caveats) os << "caveat: " << c << "\n";
  for (const auto& [key, value] : r.tables.items()) {
    if (value.is_array() && !value.empty() && value.front().is_string()) {
      os << key << ":\n";
      for (const auto& item : value)
        os << "  " << item.get<std::string>() << "\n";
    } else if (value.is_array() &&
               (value.empty() || value.front().is_number())) {
      os << key << ":";
      for (const auto& item : value) os << " " << item.dump();
      os << "\n";
    } else if (value.is_array() || value.is_object()) {
      os << key << ":\n";
      if (value.is_object()) {
        os << "  " << value.dump() << "\n";
      } else {
        for (const auto& item : value) os << "  " << item.dump() << "\n";
      }
    } else {
      os << key << ": " << value.dump() << "\n";
    }
  }
}

std::string render(const Report& r, bool as_json) {
  if (!as_json) {
    std::ostringstream os;
    render_human(os, r);
    return os.str();
  }
  json j;
  j["command"] = r.command;
  j["input_hash"] = r.input_hash;
  j["verdict"] = r.verdict;
  j["tables"] = r.tables;
  j["caveats"] = r.caveats;
  return j.dump(2) + "\n";
}

template <ExactField F>
void run_typed(const F& f, const std::string& command, const ParsedJob& job,
               const RunOptions& opts, Report& r) {
  if (command == "face") {
    cmd_face(f, job, opts, r);
    return;
  }
  auto P = job_presentation(f, job, opts, r);
  int nmax = pick_nmax(job, opts);
  if (command == "gb")
    cmd_gb(f, P, r);
  else if (command == "gr")
    cmd_gr(f, P, r);
  else if (command == "hilbert")
    cmd_hilbert(f, P, r);
  else if (command == "essential")
    cmd_essential(f, P, r);
  else if (command == "ext")
    cmd_ext(f, P, nmax, r);
  else if (command == "k2")
    cmd_k2(f, P, nmax, r);
  else if (command == "lift")
    cmd_lift(f, P, nmax, r);
  else
    throw Error("unknown command '" + command + "'");
}

}  // namespace

Outcome run_job(const std::string& command, std::string_view input,
                const RunOptions& opts) {
  try {
    ParsedJob job = parse_job(input);
    FieldSpec spec = pick_field(job, opts);
    Report r;
    r.command = command;
    r.input_hash = fnv1a_hex(input);
    if (spec.rational) {
      Rationals f;
      run_typed(f, command, job, opts, r);
    } else {
      Fp f(spec.prime);
      run_typed(f, command, job, opts, r);
    }
    return {r.exit_code, render(r, opts.json)};
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace k2ws
