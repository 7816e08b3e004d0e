#include "cellcover/cxc.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <regex>
#include <sstream>

#include "cellcover/error.hpp"

namespace cellcover {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (!tokens.empty()) out.push_back({number, std::move(tokens), std::move(line)});
    start = end + 1;
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::SyntaxError, msg, line);
}

void expect_identifier(const std::string& s, std::size_t line) {
  if (!is_identifier(s)) syntax(line, "'" + s + "' is not an identifier");
}

std::size_t parse_index(const std::string& s, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) syntax(line, "'" + s + "' is not a number");
  return value;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

ComplexSpec parse_cxc_spec(std::string_view text) {
  ComplexSpec spec;
  for (const Line& l : split_lines(text)) {
    const auto& t = l.tokens;
    const std::string& kw = t[0];
    if (kw == "vertex") {
      if (t.size() != 2) syntax(l.number, "expected: vertex <id>");
      expect_identifier(t[1], l.number);
      spec.vertices.push_back({t[1], l.number});
    } else if (kw == "edge") {
      if (t.size() != 4) syntax(l.number, "expected: edge <id> <src> <dst>");
      for (std::size_t i = 1; i < 4; ++i) expect_identifier(t[i], l.number);
      spec.edges.push_back({t[1], t[2], t[3], l.number});
    } else if (kw == "face") {
      if (t.size() < 3) syntax(l.number, "expected: face <id> <letter>+");
      expect_identifier(t[1], l.number);
      ComplexSpec::FaceDecl f{t[1], {}, l.number};
      for (std::size_t i = 2; i < t.size(); ++i) {
        const bool minus = t[i][0] == '-';
        std::string name = minus ? t[i].substr(1) : t[i];
        expect_identifier(name, l.number);
        f.boundary.emplace_back(std::move(name), minus ? Sign::minus : Sign::plus);
      }
      spec.faces.push_back(std::move(f));
    } else if (kw == "chart") {
      if (t.size() < 3) syntax(l.number, "expected: chart <id> <cell>+");
      for (std::size_t i = 1; i < t.size(); ++i) expect_identifier(t[i], l.number);
      spec.charts.push_back({t[1], {t.begin() + 2, t.end()}, l.number});
    } else if (kw == "basepoint") {
      if (t.size() != 2) syntax(l.number, "expected: basepoint <vertex>");
      expect_identifier(t[1], l.number);
      if (spec.basepoint) syntax(l.number, "second basepoint declaration");
      spec.basepoint = t[1];
      spec.basepoint_line = l.number;
    } else {
      syntax(l.number, "unknown declaration '" + kw + "'");
    }
  }
  return spec;
}

CellComplex parse_cxc(std::string_view text, const BuildLimits& limits) {
  return build_complex(parse_cxc_spec(text), limits);
}

namespace {

void emit_body(std::ostringstream& out, const CellComplex& c) {
  for (const Vertex& v : c.vertices()) out << "vertex " << v.name << '\n';
  for (const Edge& e : c.edges()) {
    out << "edge " << e.name << ' ' << c.vertex(e.source).name << ' ' << c.vertex(e.target).name
        << '\n';
  }
  for (const Face& f : c.faces()) {
    out << "face " << f.name;
    for (const Letter& l : f.boundary) {
      out << ' ' << (l.sign == Sign::minus ? "-" : "") << c.edge(l.symbol).name;
    }
    out << '\n';
  }
  for (const Chart& ch : c.charts()) {
    out << "chart " << ch.name;
    for (const CellId& id : ch.cells) out << ' ' << c.name(id);
    out << '\n';
  }
  if (c.basepoint()) out << "basepoint " << c.vertex(*c.basepoint()).name << '\n';
}

std::string sanitize(const std::string& label) {
  std::string out;
  for (char ch : label) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      out += ch;
    } else if (ch == '-') {
      out += 'm';
    } else if (ch == ']') {
      continue;
    } else {
      out += '_';
    }
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "_" + out;
  return out;
}

}  // namespace

std::string emit_cxc(const CellComplex& c) {
  std::ostringstream out;
  emit_body(out, c);
  return out.str();
}

std::string emit_cxc(const CoveringComplex& cov) {
  std::ostringstream out;
  emit_body(out, cov.total);
  for (std::size_t v = 0; v < cov.total.vertex_count(); ++v) {
    out << "# projection " << cov.total.vertex(v).name << " -> "
        << cov.base.vertex(cov.vertex_projection[v]).name << '\n';
  }
  for (std::size_t e = 0; e < cov.total.edge_count(); ++e) {
    out << "# projection " << cov.total.edge(e).name << " -> "
        << cov.base.edge(cov.edge_projection[e]).name << '\n';
  }
  for (std::size_t f = 0; f < cov.total.face_count(); ++f) {
    out << "# projection " << cov.total.face(f).name << " -> "
        << cov.base.face(cov.face_projection[f]).name << '\n';
  }
  return out.str();
}

std::string emit_cxc(LazyComplex& c, std::size_t budget) {
  if (!c.exhaust(budget)) {
    throw Error(ErrorCode::InfiniteComplex,
                "complex not exhausted within " + std::to_string(budget) + " cells");
  }
  const CellComplex snap = c.snapshot();
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  for (const Vertex& v : snap.vertices()) vertices.push_back({sanitize(v.name)});
  for (const Edge& e : snap.edges()) edges.push_back({sanitize(e.name), e.source, e.target});
  for (const Face& f : snap.faces()) faces.push_back({sanitize(f.name), f.boundary});
  return emit_cxc(CellComplex::from_cells(std::move(vertices), std::move(edges), std::move(faces),
                                          {}, snap.basepoint()));
}

// ---------------------------------------------------------------------------

NerveSpec parse_nerve(std::string_view text) {
  static const std::regex triple_component(
      R"(\s*([A-Za-z_][A-Za-z0-9_]*)\s*\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*,\s*([A-Za-z_][A-Za-z0-9_]*)\s*,\s*([A-Za-z_][A-Za-z0-9_]*)\s*\)\s*)");
  NerveSpec spec;
  for (const Line& l : split_lines(text)) {
    const auto& t = l.tokens;
    if (t[0] == "patch") {
      if (t.size() != 2) syntax(l.number, "expected: patch <id>");
      expect_identifier(t[1], l.number);
      spec.patches.push_back(t[1]);
      continue;
    }
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) {
      if (t[0] == "overlap" || t[0] == "triple") syntax(l.number, "missing ':'");
      syntax(l.number, "unknown declaration '" + t[0] + "'");
    }
    std::istringstream head(l.text.substr(0, colon));
    std::vector<std::string> h;
    for (std::string s; head >> s;) h.push_back(s);
    const std::string rest = l.text.substr(colon + 1);

    if (h[0] == "overlap") {
      if (h.size() != 3) syntax(l.number, "expected: overlap <patch> <patch> : <component>+");
      NerveSpec::Overlap o{h[1], h[2], {}, l.number};
      std::istringstream in(rest);
      for (std::string s; in >> s;) {
        expect_identifier(s, l.number);
        o.components.push_back(s);
      }
      if (o.components.empty()) syntax(l.number, "overlap without components");
      spec.overlaps.push_back(std::move(o));
    } else if (h[0] == "triple") {
      if (h.size() != 4) syntax(l.number, "expected: triple <patch> <patch> <patch> : <t(a,b,c)>+");
      NerveSpec::Triple tr{{h[1], h[2], h[3]}, {}, l.number};
      // Components are separated by whitespace after their closing parenthesis.
      std::size_t pos = 0;
      while (pos < rest.size()) {
        const std::size_t close = rest.find(')', pos);
        const std::string piece = rest.substr(pos, close == std::string::npos ? std::string::npos
                                                                               : close + 1 - pos);
        if (piece.find_first_not_of(" \t\r") == std::string::npos) break;
        std::smatch m;
        if (!std::regex_match(piece, m, triple_component)) {
          syntax(l.number, "malformed triple component '" + piece + "'");
        }
        tr.components.push_back({m[1], {m[2], m[3], m[4]}});
        if (close == std::string::npos) break;
        pos = close + 1;
      }
      if (tr.components.empty()) syntax(l.number, "triple without components");
      spec.triples.push_back(std::move(tr));
    } else {
      syntax(l.number, "unknown declaration '" + h[0] + "'");
    }
  }
  return spec;
}

Cocycle parse_cocycle(std::string_view text, const CellComplex& nerve, const FiniteGroup& g) {
  Cocycle c;
  c.forward.assign(nerve.edge_count(), std::nullopt);
  c.backward.assign(nerve.edge_count(), std::nullopt);
  for (const Line& l : split_lines(text)) {
    const auto& t = l.tokens;
    if (t[0] != "label" || t.size() != 5 || t[3] != "->" || (t[2] != "+" && t[2] != "-")) {
      syntax(l.number, "expected: label <component> <+|-> -> <element>");
    }
    const auto edge = nerve.find(CellKind::edge, t[1]);
    if (!edge) throw Error(ErrorCode::UnknownCell, "unknown overlap component '" + t[1] + "'", l.number);
    std::string element = t[4];
    std::size_t value = 0;
    if (element != "e") {
      if (element[0] == 'g') element.erase(0, 1);
      value = parse_index(element, l.number);
    }
    if (value >= g.order()) {
      throw Error(ErrorCode::InvalidArgument, "'" + t[4] + "' is not a group element", l.number);
    }
    auto& slot = (t[2] == "+" ? c.forward : c.backward)[edge->index];
    if (slot) syntax(l.number, "label for " + t[1] + " " + t[2] + " given twice");
    slot = value;
  }
  return c;
}

std::string emit_cocycle(const CellComplex& nerve, const Cocycle& c) {
  std::ostringstream out;
  for (std::size_t e = 0; e < nerve.edge_count(); ++e) {
    if (e < c.forward.size() && c.forward[e]) {
      out << "label " << nerve.edge(e).name << " + -> g" << *c.forward[e] << '\n';
    }
    if (e < c.backward.size() && c.backward[e]) {
      out << "label " << nerve.edge(e).name << " - -> g" << *c.backward[e] << '\n';
    }
  }
  return out.str();
}

FiniteGroup parse_group_table(std::string_view text) {
  std::vector<std::vector<std::size_t>> table;
  for (const Line& l : split_lines(text)) {
    std::vector<std::size_t> row;
    for (const std::string& s : l.tokens) row.push_back(parse_index(s, l.number));
    if (!table.empty() && row.size() != table.front().size()) {
      syntax(l.number, "row length differs from the first row");
    }
    table.push_back(std::move(row));
  }
  return FiniteGroup(std::move(table));
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  for (const Line& l : split_lines(text)) {
    std::vector<Integer> row;
    for (const std::string& s : l.tokens) {
      const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) ==
                                        std::string::npos &&
                      s != "-";
      if (!ok) syntax(l.number, "'" + s + "' is not an integer");
      row.emplace_back(s);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      syntax(l.number, "row length differs from the first row");
    }
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace cellcover
