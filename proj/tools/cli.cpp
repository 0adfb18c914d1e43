#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "germ/calculus.hpp"
#include "germ/classify.hpp"
#include "germ/legendrian.hpp"
#include "germ/parser.hpp"
#include "germ/sampling.hpp"

namespace germ::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int order = kDefaultOrder;
  bool json = false;
  std::string out;
  std::string pedal_n, pedal_p, phi1, phi2, map;
  std::string range, res, locus;
  double y0 = 0.0;
};

struct Flags {
  CLI::Option* pedal_n = nullptr;
  CLI::Option* pedal_p = nullptr;
  CLI::Option* phi1 = nullptr;
  CLI::Option* phi2 = nullptr;
  CLI::Option* map = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* range = nullptr;
  CLI::Option* res = nullptr;
};

enum class Input { Pedal, Map, Legendrian };

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<double> parse_numbers(const std::string& s, std::size_t count, const char* flag) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != count)
    throw UsageError(std::string(flag) + " expects " + std::to_string(count) + " comma-separated numbers");
  std::vector<double> v;
  for (const auto& p : parts) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(p, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + p + "' is not a number");
    }
    if (used != p.size()) throw UsageError(std::string(flag) + ": '" + p + "' is not a number");
    v.push_back(d);
  }
  return v;
}

json monomial_json(const Monomial& m) { return to_string(m); }

json diagnostics_json(const Classification& c) {
  json d = json::object();
  for (const auto& diag : c.diagnostics) d[diag.name] = to_string(diag.value);
  return d;
}

json classification_json(const Classification& c) {
  return json{{"tag", to_string(c.tag)}, {"diagnostics", diagnostics_json(c)}};
}

json roundtrip_json(const std::string& direction, const RoundTripReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) {
    json entry{{"name", c.name}, {"equal", c.equal}, {"compared_degree", c.compared_degree}};
    if (c.first_difference)
      entry["first_difference"] = {{"monomial", monomial_json(*c.first_difference)},
                                   {"expected", to_string(c.expected)},
                                   {"actual", to_string(c.actual)}};
    comps.push_back(std::move(entry));
  }
  return json{{"direction", direction}, {"equal", r.equal}, {"components", comps}};
}

json map_json(const MapGerm3& m) {
  return json::array({to_string(m.c1()), to_string(m.c2()), to_string(m.c3())});
}

class Session {
 public:
  Session(const Options& opt, const Flags& flags) : opt_(opt), flags_(flags) {}

  json& echo() { return echo_; }

  Input input_kind() const {
    const bool pedal = flags_.pedal_n->count() > 0 || flags_.pedal_p->count() > 0;
    const bool legendrian = flags_.phi1->count() > 0 || flags_.phi2->count() > 0;
    const bool map = flags_.map->count() > 0;
    if (pedal + legendrian + map != 1)
      throw UsageError("give exactly one input: --pedal-n/--pedal-p, --phi1/--phi2 or --map");
    if (pedal && (flags_.pedal_n->count() == 0 || flags_.pedal_p->count() == 0))
      throw UsageError("--pedal-n and --pedal-p must be given together");
    if (legendrian && (flags_.phi1->count() == 0 || flags_.phi2->count() == 0))
      throw UsageError("--phi1 and --phi2 must be given together");
    return pedal ? Input::Pedal : legendrian ? Input::Legendrian : Input::Map;
  }

  Jet parse(const std::string& label, const std::string& text) {
    Jet j = parse_expr(text, opt_.order);
    echo_[label] = to_string(j);
    return j;
  }

  MapGerm3 map_input() {
    std::vector<std::string> parts = split(opt_.map, ',');
    if (parts.size() != 3) throw UsageError("--map expects three comma-separated expressions");
    Jet c1 = parse_expr(parts[0], opt_.order);
    Jet c2 = parse_expr(parts[1], opt_.order);
    Jet c3 = parse_expr(parts[2], opt_.order);
    echo_["map"] = json::array({to_string(c1), to_string(c2), to_string(c3)});
    return MapGerm3(c1, c2, c3);
  }

  PedalGerm pedal_input() {
    if (input_kind() == Input::Map) return decompose_pedal(map_input());
    if (input_kind() != Input::Pedal) throw UsageError("this command needs a pedal input (--pedal-n/--pedal-p or --map)");
    Jet n = parse("pedal_n", opt_.pedal_n);
    Jet p = parse("pedal_p", opt_.pedal_p);
    return PedalGerm(n, p);
  }

  NormalizedLegendrianGerm legendrian_input() {
    if (input_kind() != Input::Legendrian) return integrate_I(pedal_input());
    Jet phi1 = parse("phi1", opt_.phi1);
    Jet phi2 = parse("phi2", opt_.phi2);
    return validate_normalized(phi1, phi2);
  }

 private:
  const Options& opt_;
  const Flags& flags_;
  json echo_ = json::object();
};

json cmd_classify(Session& s) {
  if (s.input_kind() == Input::Legendrian) {
    NormalizedLegendrianGerm g = s.legendrian_input();
    json r{{"side", "legendrian"}};
    r.update(classification_json(classify_legendrian(g)));
    return r;
  }
  PedalGerm g = s.pedal_input();
  Classification c = classify_pedal(g);
  json r{{"side", "pedal"}};
  r.update(classification_json(c));
  r["local_algebra"] = to_string(local_algebra(g.p()));
  if (c.tag != Tag::NonSingular) r["whitney_criterion"] = whitney_criterion(assemble_pedal(g));
  return r;
}

json cmd_integrate(Session& s) {
  NormalizedLegendrianGerm g = integrate_I(s.pedal_input());
  return json{{"phi1", to_string(g.phi1())},
              {"phi2", to_string(g.phi2())},
              {"phi3", "y"},
              {"pedal_n", to_string(g.pedal_n())}};
}

json cmd_differentiate(Session& s) {
  if (s.input_kind() != Input::Legendrian) throw UsageError("differentiate needs --phi1/--phi2");
  PedalGerm g = differentiate_D(s.legendrian_input());
  return json{{"n", to_string(g.n())}, {"p", to_string(g.p())}, {"map", map_json(assemble_pedal(g))}};
}

json cmd_roundtrip(Session& s) {
  if (s.input_kind() == Input::Legendrian) return roundtrip_json("ID", roundtrip_ID(s.legendrian_input()));
  return roundtrip_json("DI", roundtrip_DI(s.pedal_input()));
}

json cmd_normal(Session& s) {
  NormalizedLegendrianGerm g = s.legendrian_input();
  NormalField f = normal_field(g);
  return json{{"nu1", to_string(f.nu1)},
              {"nu2", to_string(f.nu2)},
              {"nu3", to_string(f.nu3)},
              {"lift_rank_2", lift_rank_check(g, f)}};
}

json cmd_lj(Session& s) {
  NormalizedLegendrianGerm g = s.legendrian_input();
  NormalField f = normal_field(g);
  Jet unit = Jet::constant(Rational(1), g.order()) + f.nu2 * f.nu2 + f.nu3 * f.nu3;
  return json{{"lj_reduced", to_string(lj_reduced(g))},
              {"lj_det", to_string(lj_det(g, f))},
              {"unit_factor", to_string(unit)}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

json cmd_mesh(Session& s, const Options& opt) {
  if (opt.out.empty()) throw UsageError("mesh needs --out PATH");
  std::vector<double> r = parse_numbers(opt.range.empty() ? "-1,1,-1,1" : opt.range, 4, "--range");
  std::vector<double> n = parse_numbers(opt.res.empty() ? "40,40" : opt.res, 2, "--res");
  Box box{r[0], r[1], r[2], r[3]};
  GridResolution res{static_cast<int>(n[0]), static_cast<int>(n[1])};
  if (res.nx < 1 || res.ny < 1) throw UsageError("--res values must be at least 1");

  std::optional<NormalizedLegendrianGerm> legendrian;
  std::optional<MapGerm3> surface;
  switch (s.input_kind()) {
    case Input::Legendrian:
      legendrian = s.legendrian_input();
      surface = legendrian->as_map();
      break;
    case Input::Map: {
      MapGerm3 m = s.map_input();
      decompose_pedal(m);
      surface = m;
      break;
    }
    case Input::Pedal:
      surface = assemble_pedal(s.pedal_input());
      break;
  }
  SurfaceMesh mesh = sample_surface(*surface, box, res);
  std::ostringstream obj;
  write_obj(obj, mesh);
  write_file(opt.out, obj.str());
  json result{{"obj", opt.out},
              {"vertices", mesh.vertices.size()},
              {"faces", mesh.faces.size()}};
  if (!opt.locus.empty()) {
    if (!legendrian) throw UsageError("--locus needs a Legendrian input (--phi1/--phi2)");
    SingularLocus locus = singular_locus(*legendrian, box, res);
    std::ostringstream csv;
    write_csv(csv, locus.image);
    write_file(opt.locus, csv.str());
    result["locus"] = {{"csv", opt.locus},
                       {"status", locus.empty ? "EmptyLocus" : "ok"},
                       {"components", locus.domain.size()}};
  }
  return result;
}

json cmd_slice(Session& s, const Options& opt) {
  std::vector<double> r = parse_numbers(opt.range.empty() ? "-1,1" : opt.range, 2, "--range");
  std::vector<double> n = parse_numbers(opt.res.empty() ? "201" : opt.res, 1, "--res");
  const int samples = static_cast<int>(n[0]);
  if (samples < 2) throw UsageError("--res must be at least 2 for a slice");
  SliceFront front = slice_front(s.legendrian_input(), opt.y0, r[0], r[1], samples);
  json result{{"y0", format_number(opt.y0)}, {"samples", front.points.size()}};
  if (!opt.out.empty()) {
    std::ostringstream csv;
    write_csv(csv, front);
    write_file(opt.out, csv.str());
    result["csv"] = opt.out;
  }
  return result;
}

json cmd_demo(int order, bool& all_match) {
  json steps = json::array();
  all_match = true;
  auto jet = [order](const char* text) { return parse_expr(text, order); };
  auto record = [&](const std::string& name, json value, json expected) {
    const bool match = value == expected;
    all_match = all_match && match;
    steps.push_back(json{{"step", name}, {"value", value}, {"expected", expected}, {"match", match}});
  };
  auto expect_error = [&](const std::string& name, const std::string& expected,
                          const std::function<void()>& action) {
    std::string got = "none";
    try {
      action();
    } catch (const GermError& e) {
      got = std::string(e.name());
    }
    record(name, got, expected);
  };

  const Jet x = Jet::x(order), y = Jet::y(order);
  MapGerm3 f(jet("x*y"), jet("x^2"), y);
  record("Whitney umbrella f = (xy, x^2, y): cross-cap criterion", whitney_criterion(f), true);

  RationalMatrix3 ht;
  ht << 1, 0, 0, 0, 0, -1, 0, -1, 1;
  MapGerm3 g = apply_target(ht, compose_source(f, x, jet("x^2 + y")));
  record("g = h_t o f o h_s", map_json(g), json::array({"x^3 + x*y", "-x^2 - y", "y"}));

  PedalGerm pg = decompose_pedal(g);
  record("g as pedal unfolding (n, p)", json::array({to_string(pg.n()), to_string(pg.p())}),
         json::array({"-x", "-x^2 - y"}));
  record("classify g", to_string(classify_pedal(pg).tag), "WhitneyUmbrella");

  NormalizedLegendrianGerm big_g = integrate_I(pg);
  record("G = I(g)", map_json(big_g.as_map()),
         json::array({"1/4*x^4 + 1/2*x^2*y", "-1/3*x^3 - x*y", "y"}));
  record("classify G", to_string(classify_legendrian(big_g).tag), "Swallowtail");

  RationalMatrix3 scale_t = RationalMatrix3::Zero();
  scale_t(0, 0) = 12;
  scale_t(1, 1) = 12;
  scale_t(2, 2) = 6;
  MapGerm3 swallow = apply_target(scale_t, compose_source(big_g.as_map(), x, jet("1/6*y")));
  record("H_t o G o H_s", map_json(swallow), json::array({"3*x^4 + x^2*y", "-4*x^3 - 2*x*y", "y"}));
  NormalizedLegendrianGerm st = validate_normalized(swallow.c1(), swallow.c2());
  record("classify H_t o G o H_s", to_string(classify_legendrian(st).tag), "Swallowtail");

  PedalGerm back = differentiate_D(big_g);
  record("D(G)", map_json(assemble_pedal(back)), map_json(g));
  record("D(I(g)) = g", roundtrip_DI(pg).equal, true);
  record("I(D(G)) = G", roundtrip_ID(big_g).equal, true);

  record("direct integrals of f", json::array({to_string(int0_x(f.c1())), to_string(int0_x(f.c2())), "y"}),
         json::array({"1/2*x^2*y", "1/3*x^3", "y"}));
  expect_error("direct integral of f is not normalized Legendrian", "NotLegendrianAtJetOrder",
               [&] { validate_normalized(int0_x(f.c1()), int0_x(f.c2())); });
  expect_error("f is not of pedal unfolding type", "NotDivisible", [&] { decompose_pedal(f); });

  MapGerm3 fold(jet("x^2"), x, y);
  PedalGerm fp = decompose_pedal(fold);
  record("classify (x^2, x, y)", to_string(classify_pedal(fp).tag), "NonSingular");
  NormalizedLegendrianGerm cusp = integrate_I(fp);
  record("I(x^2, x, y)", map_json(cusp.as_map()), json::array({"1/3*x^3", "1/2*x^2", "y"}));
  record("classify I(x^2, x, y)", to_string(classify_legendrian(cusp).tag), "CuspidalEdge");

  return json{{"all_match", all_match}, {"steps", steps}};
}

void print_flat(std::ostream& out, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_flat(out, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) print_flat(out, j[i], prefix + "." + std::to_string(i));
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void print_demo(std::ostream& out, const json& result) {
  for (const auto& s : result["steps"]) {
    out << (s["match"].get<bool>() ? "[ok]   " : "[FAIL] ") << s["step"].get<std::string>() << ": "
        << (s["value"].is_string() ? s["value"].get<std::string>() : s["value"].dump()) << '\n';
  }
  out << (result["all_match"].get<bool>() ? "all steps match" : "some steps do not match") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  Flags flags;
  CLI::App app{"Exact calculus and singularity recognition for pedal unfoldings and normalized Legendrian germs",
               "germcalc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--order", opt.order, "Truncation order of all jets")->check(CLI::Range(1, 64));
  app.add_flag("--json", opt.json, "Print the report as JSON");
  flags.out = app.add_option("--out", opt.out, "Output path (report, OBJ mesh or CSV front)");
  flags.pedal_n = app.add_option("--pedal-n", opt.pedal_n, "n of a pedal germ (n p, p, y)");
  flags.pedal_p = app.add_option("--pedal-p", opt.pedal_p, "p of a pedal germ (n p, p, y)");
  flags.phi1 = app.add_option("--phi1", opt.phi1, "First component of (phi1, phi2, y)");
  flags.phi2 = app.add_option("--phi2", opt.phi2, "Second component of (phi1, phi2, y)");
  flags.map = app.add_option("--map", opt.map, "Three comma-separated components of a map-germ");

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands{
      {"classify", "Recognize NonSingular / WhitneyUmbrella / Swallowtail / CuspidalEdge"},
      {"integrate", "Integration (n p, p, y) -> (int n p, int p, y)"},
      {"differentiate", "Differentiation (phi1, phi2, y) -> (phi1_x, phi2_x, y)"},
      {"roundtrip", "Check D(I(g)) = g or I(D(P)) = P"},
      {"normal", "Normal field in the chart nu1 = 1"},
      {"lj", "Legendrian Jacobian (reduced and determinant forms)"},
      {"mesh", "Sample the surface to an OBJ file"},
      {"slice", "Sample the planar front at y = y0 with its normals"},
      {"demo", "Reproduce the worked Whitney umbrella / swallowtail / cuspidal edge chain"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) subs[c.name] = app.add_subcommand(c.name, c.help);
  flags.range = subs["mesh"]->add_option("--range", opt.range, "xmin,xmax,ymin,ymax (default -1,1,-1,1)");
  flags.res = subs["mesh"]->add_option("--res", opt.res, "nx,ny (default 40,40)");
  subs["mesh"]->add_option("--locus", opt.locus, "Also write the image of {LJ = 0} as CSV");
  subs["slice"]->add_option("--y0", opt.y0, "Slice height")->required();
  subs["slice"]->add_option("--range", opt.range, "xmin,xmax (default -1,1)");
  subs["slice"]->add_option("--res", opt.res, "Number of samples (default 201)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  json report;
  report["tool_version"] = kToolVersion;
  report["command"] = command;
  report["truncation_order"] = opt.order;

  Session session(opt, flags);
  auto finish_error = [&](std::string_view name, const std::string& message, int code) {
    report["input_echo"] = session.echo();
    report["status"] = "error";
    report["error"] = std::string(name);
    report["message"] = message;
    if (opt.json)
      out << report.dump(2) << '\n';
    else
      err << "error: " << message << '\n';
    return code;
  };

  json result;
  bool demo_ok = true;
  try {
    if (command == "classify") result = cmd_classify(session);
    else if (command == "integrate") result = cmd_integrate(session);
    else if (command == "differentiate") result = cmd_differentiate(session);
    else if (command == "roundtrip") result = cmd_roundtrip(session);
    else if (command == "normal") result = cmd_normal(session);
    else if (command == "lj") result = cmd_lj(session);
    else if (command == "mesh") result = cmd_mesh(session, opt);
    else if (command == "slice") result = cmd_slice(session, opt);
    else if (command == "demo") result = cmd_demo(opt.order, demo_ok);
  } catch (const ParseError& e) {
    return finish_error(e.name(), e.what(), 1);
  } catch (const GermError& e) {
    return finish_error(e.name(), e.what(), 2);
  } catch (const UsageError& e) {
    return finish_error("UsageError", e.what(), 1);
  } catch (const std::exception& e) {
    return finish_error("InternalError", e.what(), 2);
  }

  report["input_echo"] = session.echo();
  report["result"] = result;
  report["status"] = "ok";

  const bool writes_artifact = command == "mesh" || command == "slice";
  if (!writes_artifact && !opt.out.empty()) {
    try {
      write_file(opt.out, report.dump(2) + "\n");
    } catch (const UsageError& e) {
      return finish_error("UsageError", e.what(), 1);
    }
  }
  if (opt.json) {
    out << report.dump(2) << '\n';
  } else if (command == "demo") {
    print_demo(out, result);
  } else {
    print_flat(out, result, "");
  }
  return demo_ok ? 0 : 2;
}

}  // namespace germ::cli
