#include "k2ws/jobfile.hpp"

#include <cctype>
#include <charconv>

namespace k2ws {

namespace {

bool name_start(char c) { return std::isalpha(unsigned(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(unsigned(c)) || c == '_'; }

struct LineCursor {
  std::string_view s;
  std::size_t pos = 0;
  int line = 0;

  void skip_ws() {
    while (pos < s.size() &&
           (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r'))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int col() {
    skip_ws();
    return int(pos) + 1;
  }
  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, col()); }
  [[noreturn]] void fail_at(const std::string& msg, int at) {
    throw ParseError(msg, line, at);
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !name_start(s[pos])) fail("expected a name");
    std::size_t start = pos;
    while (pos < s.size() && name_char(s[pos])) ++pos;
    return std::string(s.substr(start, pos - start));
  }
  std::int64_t nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(unsigned(s[pos])))
      fail("expected a number");
    std::int64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) fail("number out of range");
    pos = std::size_t(ptr - s.data());
    return v;
  }
};

ParsedTerm parse_term(LineCursor& c, const std::vector<std::string>& vars) {
  ParsedTerm t;
  if (std::isdigit(unsigned(c.peek()))) {
    t.num = c.nat();
    if (c.eat('/')) {
      int at = c.col();
      t.den = c.nat();
      if (t.den == 0) c.fail_at("zero denominator", at);
    }
    if (!c.eat('*')) c.fail("expected '*' after coefficient");
  }
  while (true) {
    int at = c.col();
    std::string name = c.ident();
    std::size_t idx = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) idx = i;
    if (idx == vars.size()) c.fail_at("unknown variable '" + name + "'", at);
    std::int64_t exp = 1;
    if (c.eat('^')) {
      int eat_col = c.col();
      exp = c.nat();
      if (exp == 0) c.fail_at("exponent must be positive", eat_col);
      if (exp > 63) c.fail_at("exponent too large", eat_col);
    }
    t.powers.push_back({idx, std::uint32_t(exp)});
    if (!c.eat('*')) break;
  }
  return t;
}

ParsedPoly parse_poly(LineCursor& c, const std::vector<std::string>& vars) {
  ParsedPoly poly;
  poly.line = c.line;
  bool neg = c.eat('-');
  while (true) {
    ParsedTerm t = parse_term(c, vars);
    if (neg) t.num = -t.num;
    poly.terms.push_back(std::move(t));
    if (c.eat('+'))
      neg = false;
    else if (c.eat('-'))
      neg = true;
    else
      break;
  }
  if (!c.done()) c.fail("unexpected input after polynomial");
  return poly;
}

std::vector<std::string> parse_names(LineCursor& c, const char* what) {
  std::vector<std::string> out;
  while (!c.done()) {
    int at = c.col();
    std::string name = c.ident();
    for (const auto& seen : out)
      if (seen == name) c.fail_at(std::string("repeated ") + what, at);
    out.push_back(std::move(name));
  }
  if (out.empty()) c.fail(std::string("expected at least one ") + what);
  return out;
}

FaceMask parse_face(LineCursor& c, const std::vector<std::string>& vertices) {
  FaceMask m = 0;
  while (!c.done()) {
    int at = c.col();
    std::string name = c.ident();
    std::size_t idx = vertices.size();
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) idx = i;
    if (idx == vertices.size())
      c.fail_at("unknown vertex '" + name + "'", at);
    m |= FaceMask(1) << idx;
  }
  return m;
}

}  // namespace

ParsedJob parse_job(std::string_view text) {
  ParsedJob job;
  bool saw_algebra = false;
  bool saw_complex = false;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++lineno;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    LineCursor c{raw, 0, lineno};
    if (c.done()) {
      if (end == text.size()) break;
      continue;
    }
    int kwcol = c.col();
    std::string kw = c.ident();
    auto claim = [&](bool algebra) {
      (algebra ? saw_algebra : saw_complex) = true;
      if (saw_algebra && saw_complex)
        c.fail_at("job mixes algebra and complex directives", kwcol);
    };
    if (kw == "field") {
      if (job.field) c.fail_at("repeated field line", kwcol);
      int at = c.col();
      std::string name = c.ident();
      if (name == "QQ") {
        job.field = FieldSpec{true, 0};
      } else if (name == "GF") {
        c.expect('(');
        std::int64_t p = c.nat();
        c.expect(')');
        job.field = FieldSpec{false, p};
      } else {
        c.fail_at("unknown field '" + name + "'", at);
      }
    } else if (kw == "vars") {
      claim(true);
      if (!job.vars.empty()) c.fail_at("repeated vars line", kwcol);
      job.vars = parse_names(c, "variable");
    } else if (kw == "rel") {
      claim(true);
      if (job.vars.empty()) c.fail_at("rel line before vars", kwcol);
      job.relations.push_back(parse_poly(c, job.vars));
    } else if (kw == "bound") {
      if (job.bound) c.fail_at("repeated bound line", kwcol);
      int at = c.col();
      std::int64_t v = c.nat();
      if (v < 1 || v > 100) c.fail_at("bound out of range", at);
      job.bound = int(v);
    } else if (kw == "nmax") {
      if (job.nmax) c.fail_at("repeated nmax line", kwcol);
      int at = c.col();
      std::int64_t v = c.nat();
      if (v < 1 || v > 16) c.fail_at("nmax out of range", at);
      job.nmax = int(v);
    } else if (kw == "vertices") {
      claim(false);
      if (!job.vertices.empty()) c.fail_at("repeated vertices line", kwcol);
      job.vertices = parse_names(c, "vertex");
    } else if (kw == "facet") {
      claim(false);
      if (job.vertices.empty()) c.fail_at("facet line before vertices", kwcol);
      job.facets.push_back(parse_face(c, job.vertices));
    } else if (kw == "missing") {
      claim(false);
      if (job.vertices.empty())
        c.fail_at("missing line before vertices", kwcol);
      job.missing.push_back(parse_face(c, job.vertices));
    } else {
      c.fail_at("unknown directive '" + kw + "'", kwcol);
    }
    if (!c.done()) c.fail("unexpected trailing input");
    if (end == text.size()) break;
  }
  job.kind = saw_complex ? ParsedJob::Kind::Complex : ParsedJob::Kind::Algebra;
  return job;
}

SimplicialComplex make_complex(const ParsedJob& job) {
  if (job.kind != ParsedJob::Kind::Complex)
    throw Error("job file describes an algebra, not a complex");
  if (!job.facets.empty() && !job.missing.empty())
    throw Error("give facets or missing faces, not both");
  if (!job.missing.empty())
    return SimplicialComplex::from_missing(job.vertices, job.missing);
  return SimplicialComplex::from_facets(job.vertices, job.facets);
}

}  // namespace k2ws
