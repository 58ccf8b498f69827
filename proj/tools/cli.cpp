#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "goodsg/arf.hpp"
#include "goodsg/constructions.hpp"
#include "goodsg/gensys.hpp"
#include "goodsg/ideals.hpp"
#include "goodsg/plot.hpp"

namespace goodsg::cli {

namespace {

using Json = nlohmann::ordered_json;

// Anything wrong with the input document itself.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string format;
  std::string point;
  std::vector<std::string> points;
  std::string box;
  std::string output;
};

// ---------------------------------------------------------------- input --

Json const& field(Json const& doc, char const* name) {
  if (!doc.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

Coord natural(Json const& v) {
  if (!v.is_number_integer()) {
    throw ParseError("expected an integer, got " + v.dump());
  }
  auto const x = v.get<std::int64_t>();
  if (x < 0) {
    throw ParseError("integers must be nonnegative, got " + v.dump());
  }
  return x;
}

std::vector<Coord> naturals(Json const& v) {
  if (!v.is_array()) {
    throw ParseError("expected an array of integers, got " + v.dump());
  }
  std::vector<Coord> out;
  for (auto const& x : v) {
    out.push_back(natural(x));
  }
  return out;
}

Point point_of(Json const& v, std::size_t dim) {
  std::vector<Coord> c = naturals(v);
  if (c.size() != dim) {
    throw ParseError("point " + v.dump() + " does not have " +
                     std::to_string(dim) + " coordinates");
  }
  return Point(std::move(c));
}

std::vector<Point> points_of(Json const& v, std::size_t dim) {
  if (!v.is_array()) {
    throw ParseError("expected an array of points, got " + v.dump());
  }
  std::vector<Point> out;
  for (auto const& p : v) {
    out.push_back(point_of(p, dim));
  }
  return out;
}

NumericalSemigroup numerical_of(Json const& v) {
  return NumericalSemigroup::from_generators(naturals(v));
}

struct Input {
  std::string kind;
  std::size_t dim = 2;
  std::optional<GoodSemigroup> semigroup;
  // Set when the described set was built but failed validation.
  std::optional<ValidationReport> rejected;
  std::vector<Point> candidate;
  std::optional<NumericalSemigroup> left;
  std::optional<NumericalSemigroup> right;
};

Json read_document(Options const& opt, std::istream& in) {
  std::string text;
  if (opt.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(opt.input);
    if (!file) {
      throw ParseError("cannot open " + opt.input);
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    Json doc = Json::parse(text);
    if (!doc.is_object()) {
      throw ParseError("the input must be a JSON object");
    }
    return doc;
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(e.what());
  }
}

// Builds the semigroup; a rejected candidate is kept for `check` instead of
// being thrown.
Input build(Json const& doc) {
  Input r;
  r.kind = field(doc, "kind").is_string()
               ? field(doc, "kind").get<std::string>()
               : throw ParseError("\"kind\" must be a string");
  if (doc.contains("dim")) {
    r.dim = static_cast<std::size_t>(natural(doc.at("dim")));
    if (r.dim == 0) {
      throw ParseError("\"dim\" must be positive");
    }
  }
  try {
    if (r.kind == "generators") {
      r.semigroup = good_semigroup_from_generators(
          points_of(field(doc, "generators"), r.dim),
          point_of(field(doc, "conductor"), r.dim));
    } else if (r.kind == "small") {
      std::vector<Point> pts = points_of(field(doc, "small"), r.dim);
      if (pts.empty()) {
        throw ParseError("\"small\" must not be empty");
      }
      SmallSet x = doc.contains("conductor")
                       ? SmallSet(pts, point_of(doc.at("conductor"), r.dim))
                       : SmallSet(pts);
      r.semigroup = GoodSemigroup::from_small(std::move(x));
    } else if (r.kind == "duplication") {
      r.dim = 2;
      auto const s = numerical_of(field(doc, "semigroup"));
      auto const e =
          NumericalIdeal::from_generators(s, naturals(field(doc, "ideal")));
      r.semigroup = duplication(s, e);
    } else if (r.kind == "amalgamation") {
      r.dim = 2;
      auto const s = numerical_of(field(doc, "semigroup"));
      auto const t = numerical_of(field(doc, "target"));
      auto const e =
          NumericalIdeal::from_generators(t, naturals(field(doc, "ideal")));
      r.semigroup = amalgamation(s, t, e, natural(field(doc, "factor")));
    } else if (r.kind == "cartesian") {
      r.dim = 2;
      r.left = numerical_of(field(doc, "left"));
      r.right = numerical_of(field(doc, "right"));
      r.semigroup = cartesian(*r.left, *r.right);
    } else if (r.kind == "maximal") {
      r.dim = 2;
      r.semigroup = from_maximal_elements(numerical_of(field(doc, "left")),
                                          numerical_of(field(doc, "right")),
                                          points_of(field(doc, "maximal"), 2));
    } else {
      throw ParseError("unknown kind \"" + r.kind + "\"");
    }
  } catch (NotGoodSemigroup const& e) {
    r.rejected = e.report();
    r.candidate = e.candidate();
  } catch (DimensionMismatch const& e) {
    throw ParseError(e.what());
  }
  return r;
}

GoodSemigroup const& require(Input const& in) {
  if (!in.semigroup) {
    throw NotGoodSemigroup(*in.rejected, in.candidate);
  }
  return *in.semigroup;
}

Point parse_point_arg(std::string const& text, std::size_t dim,
                      char const* flag) {
  std::vector<Coord> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long long const v = std::stoll(part, &used);
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
      c.push_back(v);
    } catch (std::exception const&) {
      throw ParseError(std::string(flag) + ": cannot read \"" + text + "\"");
    }
  }
  if (c.size() != dim) {
    throw ParseError(std::string(flag) + ": expected " + std::to_string(dim) +
                     " coordinates, got \"" + text + "\"");
  }
  return Point(std::move(c));
}

// --------------------------------------------------------------- output --

Json to_json(Point const& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i < p.dim(); ++i) {
    a.push_back(p[i]);
  }
  return a;
}

Json to_json(std::vector<Point> const& pts) {
  Json a = Json::array();
  for (auto const& p : pts) {
    a.push_back(to_json(p));
  }
  return a;
}

std::string text_value(Json const& v) {
  if (v.is_array()) {
    bool const nested = !v.empty() && v.front().is_array();
    if (!nested) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + text_value(v[i]);
      }
      return s + ")";
    }
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? " " : "") + text_value(v[i]);
    }
    return s;
  }
  if (v.is_string()) {
    return v.get<std::string>();
  }
  return v.dump();
}

void emit(Json const& result, std::string const& format, std::ostream& out) {
  if (format == "text") {
    std::size_t width = 0;
    for (auto const& [key, value] : result.items()) {
      width = std::max(width, key.size());
    }
    for (auto const& [key, value] : result.items()) {
      out << key << ':' << std::string(width - key.size() + 1, ' ')
          << text_value(value) << '\n';
    }
  } else {
    // One key per line, values kept on one line so point lists stay
    // readable.
    out << "{";
    bool first = true;
    for (auto const& [key, value] : result.items()) {
      out << (first ? "\n  " : ",\n  ") << Json(key).dump() << ": "
          << value.dump();
      first = false;
    }
    out << (first ? "}" : "\n}") << '\n';
  }
}

Json small_document(GoodSemigroup const& s) {
  Json doc;
  doc["dim"] = s.dim();
  doc["kind"] = "small";
  doc["conductor"] = to_json(s.conductor());
  doc["small"] = to_json(s.small_elements());
  return doc;
}

Json report_json(ValidationReport const& r, std::vector<Point> const& cand) {
  Json j;
  j["valid"] = false;
  j["axiom"] = to_string(r.violated);
  j["witness"] = to_json(r.witness);
  j["message"] = r.message;
  j["candidate"] = to_json(cand);
  return j;
}

// Minimal good generating systems of the two numerical factors.
std::vector<Coord> factor_system(NumericalSemigroup const& s) {
  std::vector<Coord> out;
  for (Coord g : s.generators()) {
    if (g < s.conductor()) {
      out.push_back(g);
    }
  }
  if (out.empty()) {
    out.push_back(s.conductor());
  }
  return out;
}

// ------------------------------------------------------------- commands --

struct Outcome {
  Json result;
  int code = kOk;
};

Outcome cmd_check(Input const& in) {
  if (!in.semigroup) {
    return {report_json(*in.rejected, in.candidate), kInvalid};
  }
  Json j;
  j["valid"] = true;
  j["conductor"] = to_json(in.semigroup->conductor());
  return {j};
}

Outcome dispatch(std::string const& cmd, Input const& in, Options const& opt) {
  if (cmd == "check") {
    return cmd_check(in);
  }
  GoodSemigroup const& s = require(in);
  Json j;
  if (cmd == "small") {
    return {small_document(s)};
  }
  if (cmd == "construct") {
    j = small_document(s);
    j["source"] = in.kind;
    j["count"] = s.small_elements().size();
    return {j};
  }
  if (cmd == "member") {
    if (opt.point.empty()) {
      throw ParseError("member needs --point");
    }
    Point const p = parse_point_arg(opt.point, s.dim(), "--point");
    j["point"] = to_json(p);
    j["member"] = s.contains(p);
    return {j};
  }
  if (cmd == "mingens") {
    if (s.dim() == 2 && !is_local(s) && in.left && in.right) {
      Json e;
      e["error"] = "minimal good generating systems of non-local semigroups "
                   "are not unique; use the systems of the two factors";
      e["factor_systems"] = Json::array(
          {Json(factor_system(*in.left)), Json(factor_system(*in.right))});
      return {e, kNonLocal};
    }
    j["minimal_generating_system"] = to_json(minimal_generating_system(s));
    return {j};
  }
  if (cmd == "is-mingens") {
    if (opt.points.empty()) {
      throw ParseError("is-mingens needs at least one --points");
    }
    std::vector<Point> g;
    for (auto const& t : opt.points) {
      g.push_back(parse_point_arg(t, s.dim(), "--points"));
    }
    GenSystem const sys(g, s.conductor());
    j["points"] = to_json(sys.points);
    j["minimal"] = is_minimal_system(sys, s);
    return {j};
  }
  if (cmd == "maximal") {
    j["maximal_elements"] = to_json(maximal_elements(s));
    return {j};
  }
  if (cmd == "canonical") {
    auto const k = canonical_ideal(s);
    j["conductor"] = to_json(k.conductor());
    j["small"] = to_json(k.small_elements());
    j["generators"] = to_json(canonical_generators(s));
    return {j};
  }
  if (cmd == "symmetric") {
    j["symmetric"] = is_symmetric(s);
    return {j};
  }
  if (cmd == "arf") {
    j["arf"] = is_arf(s);
    return {j};
  }
  if (cmd == "arf-closure") {
    auto const chain = arf_closure_chain(s);
    auto const t = build_chain_level(chain.t1, chain.t2, chain.level);
    j["level"] = chain.level;
    j["conductor"] = to_json(t.conductor());
    j["small"] = to_json(t.small_elements());
    return {j};
  }
  if (cmd == "saturate") {
    auto const t = arf_closure(s);
    Point const box = opt.box.empty()
                          ? t.conductor() + Point{2, 2}
                          : parse_point_arg(opt.box, s.dim(), "--box");
    std::vector<Point> on_box;
    for (Coord x = 0; x <= box[0]; ++x) {
      for (Coord y = 0; y <= box[1]; ++y) {
        if (t.contains({x, y})) {
          on_box.push_back({x, y});
        }
      }
    }
    auto const infima = saturation_infima_closure(s, box);
    j["box"] = to_json(box);
    j["saturation"] = to_json(arf_saturation(s, box));
    j["infima_closure"] = to_json(infima);
    j["arf_closure"] = to_json(on_box);
    j["agrees"] = infima == on_box;
    return {j};
  }
  throw ParseError("unknown command " + cmd);
}

int plot(Input const& in, Options const& opt, std::ostream& out) {
  GoodSemigroup const& s = require(in);
  std::string const style = opt.format.empty() ? "svg" : opt.format;
  std::string picture;
  if (style == "svg") {
    picture = render_svg(s.small());
  } else if (style == "ascii") {
    picture = render_ascii(s.small());
  } else {
    throw ParseError("plot --format must be svg or ascii");
  }
  if (opt.output.empty()) {
    out << picture;
  } else {
    std::ofstream file(opt.output);
    if (!file) {
      throw ParseError("cannot write " + opt.output);
    }
    file << picture;
  }
  return kOk;
}

void report_error(std::string const& type, std::string const& message,
                  std::string const& format, std::ostream& err) {
  if (format == "text") {
    err << "error: " << message << '\n';
  } else {
    Json e;
    e["error"] = type;
    e["message"] = message;
    err << e.dump() << '\n';
  }
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Good semigroups of N^n: validation, generators, canonical "
               "ideals and Arf closures."};
  app.name("goodsg");
  app.require_subcommand(1);
  Options opt;

  struct Spec {
    char const* name;
    char const* help;
  };
  Spec const specs[] = {
      {"check", "validate the input"},
      {"small", "small elements and conductor, as a re-readable document"},
      {"member", "membership of --point"},
      {"mingens", "the minimal good generating system (local, n = 2)"},
      {"is-mingens", "is --points a minimal good generating system"},
      {"maximal", "maximal elements (n = 2)"},
      {"canonical", "the canonical ideal (local, n = 2)"},
      {"symmetric", "is the canonical ideal the semigroup itself"},
      {"arf", "the Arf property (n = 2)"},
      {"arf-closure", "the Arf closure (n = 2)"},
      {"saturate", "b + c - a saturation on --box, compared with the closure"},
      {"construct", "build the semigroup described by the input"},
      {"plot", "draw the small elements, --format svg|ascii"},
  };
  for (auto const& sp : specs) {
    CLI::App* sub = app.add_subcommand(sp.name, sp.help);
    sub->add_option("input", opt.input, "JSON input file, - for stdin");
    sub->add_option("--format", opt.format, "json or text (svg or ascii for plot)");
    sub->add_option("--point", opt.point, "a point x,y");
    sub->add_option("--points", opt.points, "generator x,y (repeatable)");
    sub->add_option("--box", opt.box, "box corner x,y");
    sub->add_option("--output", opt.output, "write the plot here");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kParseError;
  }
  std::string const cmd = app.get_subcommands().front()->get_name();
  std::string const format = cmd == "plot" ? "text" : opt.format;
  if (cmd != "plot" && !format.empty() && format != "json" &&
      format != "text") {
    err << "error: --format must be json or text\n";
    return kParseError;
  }

  try {
    Input const input = build(read_document(opt, in));
    if (cmd == "plot") {
      return plot(input, opt, out);
    }
    Outcome const r = dispatch(cmd, input, opt);
    emit(r.result, format, r.code == kOk || r.code == kInvalid ? out : err);
    return r.code;
  } catch (ParseError const& e) {
    report_error("parse", e.what(), format, err);
    return kParseError;
  } catch (NotGoodSemigroup const& e) {
    report_error("invalid", e.what(), format, err);
    return kInvalid;
  } catch (UnsupportedDimension const& e) {
    report_error("unsupported_dimension", e.what(), format, err);
    return kUnsupportedDimension;
  } catch (NonLocal const& e) {
    report_error("non_local", e.what(), format, err);
    return kNonLocal;
  } catch (Error const& e) {
    report_error("invalid", e.what(), format, err);
    return kInvalid;
  }
}

}  // namespace goodsg::cli
