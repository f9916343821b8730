#include "equilib/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace equilib {

namespace {

struct Token {
  std::string text;
  int col;
};

struct Line {
  int no;
  std::vector<Token> tokens;
};

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++no;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{no, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

long as_count(const Line& l, size_t k, const char* what) {
  if (k >= l.tokens.size()) parse_fail(l.no, 1, std::string("missing ") + what);
  const Token& t = l.tokens[k];
  try {
    size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size() || v < 0) throw std::invalid_argument(t.text);
    return v;
  } catch (const std::exception&) {
    parse_fail(l.no, t.col, std::string("expected ") + what + ", got '" + t.text + "'");
  }
}

}  // namespace

Polyhedron parse_off(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) parse_fail(1, 1, "empty input");
  size_t li = 0;
  // optional header, possibly fused with the counts ("OFF 4 4 6")
  Line counts = lines[0];
  if (counts.tokens[0].text == "OFF") {
    counts.tokens.erase(counts.tokens.begin());
    if (counts.tokens.empty()) {
      if (lines.size() < 2) parse_fail(lines[0].no, 4, "missing counts line");
      counts = lines[++li];
    }
  }
  ++li;
  long nv = as_count(counts, 0, "vertex count");
  long nf = as_count(counts, 1, "face count");
  if (counts.tokens.size() > 2) as_count(counts, 2, "edge count");

  Polyhedron p;
  for (long i = 0; i < nv; ++i, ++li) {
    if (li >= lines.size()) parse_fail(lines.back().no + 1, 1, "expected " + std::to_string(nv) + " vertex lines");
    const Line& l = lines[li];
    if (l.tokens.size() != 3) parse_fail(l.no, 1, "vertex line needs 3 coordinates");
    Scalar c[3];
    for (int k = 0; k < 3; ++k) {
      try {
        c[k] = parse_scalar(l.tokens[static_cast<size_t>(k)].text);
      } catch (const std::invalid_argument&) {
        parse_fail(l.no, l.tokens[static_cast<size_t>(k)].col,
                   "bad number '" + l.tokens[static_cast<size_t>(k)].text + "'");
      }
    }
    p.vertices.push_back({c[0], c[1], c[2]});
  }
  for (long i = 0; i < nf; ++i, ++li) {
    if (li >= lines.size()) parse_fail(lines.back().no + 1, 1, "expected " + std::to_string(nf) + " face lines");
    const Line& l = lines[li];
    long k = as_count(l, 0, "face size");
    if (k < 3) parse_fail(l.no, l.tokens[0].col, "face needs at least 3 vertices");
    if (l.tokens.size() < static_cast<size_t>(k) + 1) parse_fail(l.no, 1, "face line has too few indices");
    Cycle c;
    for (long j = 1; j <= k; ++j) {
      long idx = as_count(l, static_cast<size_t>(j), "vertex index");
      if (idx >= nv) parse_fail(l.no, l.tokens[static_cast<size_t>(j)].col, "vertex index out of range");
      c.push_back(static_cast<int>(idx));
    }
    p.faces.push_back(std::move(c));  // trailing color fields are ignored
  }
  if (li < lines.size()) parse_fail(lines[li].no, 1, "unexpected content after the faces");

  // orient outward relative to the vertex average
  Vec3 mid(0, 0, 0);
  for (const Vec3& v : p.vertices) mid += v;
  if (nv > 0) mid /= Scalar(nv);
  for (Cycle& c : p.faces) {
    Plane<Scalar> pl = face_plane(p, static_cast<int>(&c - p.faces.data()));
    if (pl.d - dot(pl.n, mid) < 0) std::reverse(c.begin(), c.end());
  }
  require_valid(p);
  return p;
}

std::string emit_off(const Polyhedron& p, bool decimal) {
  Polyhedron q = canonical(p);
  Topology t = topology(q);
  std::ostringstream os;
  os << "OFF\n";
  if (decimal)
    os << "# lossy: coordinates rounded to 12 significant digits\n";
  else
    os << "# exact rational coordinates (p/q)\n";
  os << q.v() << " " << q.f() << " " << t.e() << "\n";
  auto fmt = [&](const Scalar& x) { return decimal ? to_decimal(x, 12) : to_string(x); };
  for (const Vec3& v : q.vertices) os << fmt(v.x) << " " << fmt(v.y) << " " << fmt(v.z) << "\n";
  for (const Cycle& c : q.faces) {
    os << c.size();
    for (int i : c) os << " " << i;
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string report_json(const Polyhedron& p, const EquilibriumReport& r, const std::string& input_hash) {
  using nlohmann::json;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "analysis";
  j["input_sha256"] = input_hash;
  j["reference"] = {{"exact", {to_string(r.reference.x), to_string(r.reference.y), to_string(r.reference.z)}},
                    {"approx", {to_double(r.reference.x), to_double(r.reference.y), to_double(r.reference.z)}}};
  j["combinatorial"] = {{"f", r.f()}, {"v", r.v()}, {"e", r.e()}, {"n", r.n()}};
  j["equilibrium"] = {{"S", r.S}, {"U", r.U}, {"H", r.H}, {"N", r.N()}};
  j["complexity"] = r.complexity();
  j["degenerate"] = r.degenerate;
  json faces = json::array(), edges = json::array(), verts = json::array();
  for (int f = 0; f < r.f(); ++f) {
    json cyc = p.faces[static_cast<size_t>(f)];
    faces.push_back({{"index", f},
                     {"vertices", cyc},
                     {"status", to_string(r.faces[static_cast<size_t>(f)])},
                     {"margin", r.face_margin[static_cast<size_t>(f)]}});
  }
  for (int e = 0; e < r.e(); ++e) {
    const Edge& ed = r.edges[static_cast<size_t>(e)];
    edges.push_back({{"index", e},
                     {"vertices", {ed.a, ed.b}},
                     {"status", to_string(r.edge_status[static_cast<size_t>(e)])},
                     {"margin", r.edge_margin[static_cast<size_t>(e)]}});
  }
  for (int v = 0; v < r.v(); ++v) {
    verts.push_back({{"index", v},
                     {"status", to_string(r.vertices[static_cast<size_t>(v)])},
                     {"margin", r.vertex_margin[static_cast<size_t>(v)]}});
  }
  j["sites"] = {{"faces", faces}, {"edges", edges}, {"vertices", verts}};
  return j.dump(2) + "\n";
}

std::string survey_json(const SurveyResult& s) {
  using nlohmann::json;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "tetrahedron_survey";
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["degenerate"] = s.degenerate;
  j["few_vertex_equilibria"] = s.few_vertex_equilibria;
  json h = json::array();
  for (const auto& [cls, count] : s.histogram) h.push_back({{"S", cls.first}, {"U", cls.second}, {"count", count}});
  j["histogram"] = h;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& n : notes) out += (out.empty() ? "" : "; ") + n;
  return out;
}

}  // namespace

std::string grid_csv(const std::vector<GridCell>& cells) {
  std::ostringstream os;
  os << "S,U,pair,lower,upper,status,notes\n";
  for (const GridCell& c : cells) {
    os << c.S << "," << c.U << "," << (c.pair ? 1 : 0) << "," << c.bounds.lower << ",";
    if (c.bounds.upper) os << *c.bounds.upper;
    os << "," << to_string(c.bounds.status) << "," << csv_field(join_notes(c.bounds.notes)) << "\n";
  }
  return os.str();
}

std::string grid_svg(const std::vector<GridCell>& cells) {
  long smax = 0, umax = 0;
  for (const GridCell& c : cells) {
    smax = std::max(smax, c.S);
    umax = std::max(umax, c.U);
  }
  const int cell = 44, margin = 40;
  const long width = margin + umax * cell + 10, height = margin + smax * cell + 10;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  os << "<text x=\"" << margin + umax * cell / 2 << "\" y=\"14\" text-anchor=\"middle\">U</text>\n";
  os << "<text x=\"12\" y=\"" << margin + smax * cell / 2 << "\" text-anchor=\"middle\">S</text>\n";
  for (long u = 1; u <= umax; ++u)
    os << "<text x=\"" << margin + (u - 1) * cell + cell / 2 << "\" y=\"32\" text-anchor=\"middle\">" << u
       << "</text>\n";
  for (long s = 1; s <= smax; ++s)
    os << "<text x=\"30\" y=\"" << margin + (s - 1) * cell + cell / 2 + 4 << "\" text-anchor=\"end\">" << s
       << "</text>\n";
  for (const GridCell& c : cells) {
    const char* fill = c.pair                                  ? "#2b8cbe"
                       : c.bounds.status == BoundStatus::Exact ? "#a6bddb"
                       : c.bounds.status == BoundStatus::Bounded ? "#fdd49e"
                                                                 : "#eeeeee";
    long x = margin + (c.U - 1) * cell, y = margin + (c.S - 1) * cell;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell - 2 << "\" height=\"" << cell - 2
       << "\" fill=\"" << fill << "\"><title>(" << c.S << "," << c.U << ") " << to_string(c.bounds.status)
       << "</title></rect>\n";
    std::string label = std::to_string(c.bounds.lower);
    if (c.bounds.upper && *c.bounds.upper != c.bounds.lower) label += "-" + std::to_string(*c.bounds.upper);
    if (!c.bounds.upper) label += "+";
    os << "<text x=\"" << x + (cell - 2) / 2 << "\" y=\"" << y + cell / 2 + 2 << "\" text-anchor=\"middle\">"
       << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace equilib
