#include <sstream>

#include "equilib/constructions.hpp"

namespace equilib {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& xs, F fmt) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += fmt(xs[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "recipe line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string to_text(const Recipe& r) {
  std::ostringstream os;
  os << "RECIPE v1\n";
  os << "TARGET " << r.S << " " << r.U << "\n";
  os << "BASE " << r.base.name;
  for (const Scalar& x : r.base.params) os << " " << to_string(x);
  os << "\n";
  for (const RecipeStep& s : r.steps) {
    os << "STEP " << s.name << " site=" << join(s.site, [](int i) { return std::to_string(i); })
       << " params=" << join(s.params, [](const Scalar& x) { return to_string(x); }) << "\n";
  }
  os << "END\n";
  return os.str();
}

Recipe parse_recipe(std::string_view text) {
  Recipe r;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  bool header = false, target = false, base = false, end = false;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (end) fail(no, "content after END");
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!header) {
      std::string ver;
      ls >> ver;
      if (key != "RECIPE" || ver != "v1") fail(no, "expected 'RECIPE v1'");
      header = true;
    } else if (key == "TARGET") {
      if (!(ls >> r.S >> r.U)) fail(no, "TARGET needs two integers");
      target = true;
    } else if (key == "BASE") {
      if (!(ls >> r.base.name)) fail(no, "BASE needs a name");
      std::string tok;
      while (ls >> tok) {
        try {
          r.base.params.push_back(parse_scalar(tok));
        } catch (const std::invalid_argument&) {
          fail(no, "bad number '" + tok + "'");
        }
      }
      base = true;
    } else if (key == "STEP") {
      RecipeStep s;
      if (!(ls >> s.name)) fail(no, "STEP needs a name");
      std::string tok;
      bool have_site = false, have_params = false;
      while (ls >> tok) {
        if (tok.rfind("site=", 0) == 0) {
          for (const auto& x : split(tok.substr(5), ',')) {
            try {
              s.site.push_back(std::stoi(x));
            } catch (const std::exception&) {
              fail(no, "bad index '" + x + "'");
            }
          }
          have_site = true;
        } else if (tok.rfind("params=", 0) == 0) {
          for (const auto& x : split(tok.substr(7), ',')) {
            try {
              s.params.push_back(parse_scalar(x));
            } catch (const std::invalid_argument&) {
              fail(no, "bad number '" + x + "'");
            }
          }
          have_params = true;
        } else {
          fail(no, "unexpected token '" + tok + "'");
        }
      }
      if (!have_site || !have_params) fail(no, "STEP needs site= and params=");
      r.steps.push_back(std::move(s));
    } else if (key == "END") {
      end = true;
    } else {
      fail(no, "unknown keyword '" + key + "'");
    }
  }
  if (!header) fail(no, "missing header");
  if (!target || !base) fail(no, "missing TARGET or BASE");
  return r;
}

Polyhedron build_base(const BaseSolid& b) {
  auto need = [&](size_t n) {
    if (b.params.size() != n)
      throw Error(ErrorKind::ParseError, "base " + b.name + " takes " + std::to_string(n) + " parameters");
  };
  auto as_int = [](const Scalar& x) {
    if (x.get_den() != 1) throw Error(ErrorKind::ParseError, "expected an integer");
    return static_cast<int>(x.get_num().get_si());
  };
  if (b.name == "catalog") {
    need(2);
    return catalog(as_int(b.params[0]), as_int(b.params[1]));
  }
  if (b.name == "pyramid") {
    need(2);
    return pyramid_exact(as_int(b.params[0]), b.params[1]);
  }
  if (b.name == "conway") {
    need(5);
    ConwayParams cp;
    cp.m = as_int(b.params[0]);
    cp.r0 = b.params[1];
    cp.a = b.params[2];
    cp.b = b.params[3];
    cp.rho = b.params[4];
    return conway_prism(cp);
  }
  if (b.name == "mono_pyramid") {
    need(6);
    ConwayParams cp;
    cp.m = as_int(b.params[0]);
    cp.r0 = b.params[1];
    cp.apex_x = b.params[2];
    cp.apex_y = b.params[3];
    cp.apex_h = b.params[4];
    cp.tilt = b.params[5];
    return mono_pyramid_exact(cp);
  }
  if (b.name == "hull") {
    if (b.params.size() < 12 || b.params.size() % 3)
      throw Error(ErrorKind::ParseError, "base hull takes x,y,z triples for at least 4 points");
    std::vector<Vec3> pts;
    for (size_t i = 0; i < b.params.size(); i += 3) pts.push_back({b.params[i], b.params[i + 1], b.params[i + 2]});
    return hull_from_points(pts);
  }
  throw Error(ErrorKind::ParseError, "unknown base solid " + b.name);
}

Polyhedron replay(const Recipe& r, bool verify) {
  Polyhedron p = build_base(r.base);
  for (const RecipeStep& s : r.steps) p = apply_step(p, s);
  if (verify) {
    EquilibriumReport rep = analyze(p);
    if (rep.degenerate || rep.S != r.S || rep.U != r.U)
      throw Error(ErrorKind::ClassNotAchieved, "replay gives (" + std::to_string(rep.S) + "," +
                                                   std::to_string(rep.U) + "), recipe targets (" +
                                                   std::to_string(r.S) + "," + std::to_string(r.U) + ")");
  }
  return p;
}

}  // namespace equilib
