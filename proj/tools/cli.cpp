#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cremona/cone.hpp"
#include "cremona/inverse.hpp"
#include "cremona/oracle.hpp"
#include "cremona/plane.hpp"
#include "cremona/serialize.hpp"

namespace cremona::cli {

namespace {

struct Options {
  std::string format = "plain";
  std::vector<std::string> inputs;
  std::vector<std::string> files;
  bool oracle = false;
};

// Thrown for failures that are results rather than library errors.
struct Failure {
  std::string code;
  std::string message;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> gather(const Options& o) {
  std::vector<std::string> all = o.inputs;
  for (const auto& path : o.files) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    all.push_back(ss.str());
  }
  for (auto& s : all) s = trim(s);
  return all;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("json: ") + e.what());
  }
}

// Monomial text, a map object, or a bare log-matrix array.
MonomialMap read_map(const std::string& text) {
  if (text.starts_with('{')) {
    const Json j = parse_json(text);
    if (j.contains("map")) return map_from_json(j.at("map"));
    return map_from_json(j);
  }
  if (text.starts_with('[')) return MonomialMap(matrix_from_json(parse_json(text)));
  return parse_map(text);
}

IntMatrix read_matrix(const std::string& text) {
  if (text.starts_with('[')) return matrix_from_json(parse_json(text));
  return read_map(text).log_matrix();
}

// A solution object, the JSON printed by `invert`, or any form of the inverse map.
InverseSolution read_solution(const MonomialMap& f, const std::string& text) {
  if (text.starts_with('{')) {
    const Json j = parse_json(text);
    if (j.contains("solution")) return solution_from_json(j.at("solution"));
    if (j.contains("B")) return solution_from_json(j);
  }
  return solution_from_inverse_map(f, read_map(text));
}

void need(const std::vector<std::string>& in, std::size_t count, const char* verb) {
  if (in.size() != count) {
    throw Error(ErrorCode::parse_error, std::string(verb) + " expects " + std::to_string(count) +
                                            " input(s), got " + std::to_string(in.size()));
  }
}

std::string check_line(const CheckResult& c) {
  std::string s = c.name + ": " + (c.passed ? "ok" : "FAILED");
  if (!c.passed && !c.offending.empty()) {
    s += " at";
    for (std::size_t i : c.offending) s += " " + std::to_string(i + 1);
  }
  return s;
}

void print_report(std::ostream& out, const VerificationReport& r) {
  for (const auto& c : r.checks) out << "  " << check_line(c) << '\n';
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto in = gather(o);
  need(in, 1, "check");
  const MonomialMap f = read_map(in[0]);
  const Integer det = det_exact(f.log_matrix());
  const bool ok = is_cremona(f);
  if (json_mode(o)) {
    out << Json{{"cremona", ok}, {"n", f.dimension()}, {"degree", integer_to_json(f.degree())},
                {"det", integer_to_json(det)}}
               .dump()
        << '\n';
  } else {
    out << (ok ? "Cremona" : "not Cremona") << " (d=" << f.degree() << ", det=" << det << ")\n";
  }
  return 0;
}

int cmd_invert(const Options& o, std::ostream& out) {
  const auto in = gather(o);
  need(in, 1, "invert");
  const MonomialMap f = read_map(in[0]);
  const InverseSolution sol = invert(f);
  const VerificationReport report = verify_solution(f.log_matrix(), sol);
  if (json_mode(o)) {
    out << Json{{"map", map_to_json(f)},
                {"inverse", map_to_json(sol.as_map())},
                {"solution", solution_to_json(sol)},
                {"report", report_to_json(report)}}
               .dump()
        << '\n';
  } else {
    out << "inverse: " << format_map(sol.as_map()) << '\n'
        << "B: " << to_string(sol.B) << '\n'
        << "gamma: " << to_string(sol.gamma) << '\n'
        << "d': " << sol.inverse_degree << '\n'
        << "checks:\n";
    print_report(out, report);
  }
  return report.passed() ? 0 : 1;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const auto in = gather(o);
  if (in.size() < 2) throw Error(ErrorCode::parse_error, "compose expects at least two maps");
  // Rightmost first, as in generator words.
  MonomialMap acc = read_map(in.back());
  for (auto it = in.rbegin() + 1; it != in.rend(); ++it) acc = compose(read_map(*it), acc);
  if (json_mode(o)) out << map_to_json(acc).dump() << '\n';
  else out << format_map(acc) << '\n';
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto in = gather(o);
  need(in, 1, "decompose");
  const MonomialMap f = read_map(in[0]);
  const plane::GeneratorWord w = plane::decompose(f);
  if (json_mode(o)) out << Json{{"word", word_to_json(w)}, {"text", plane::format_word(w)}}.dump() << '\n';
  else out << plane::format_word(w) << '\n';
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto in = gather(o);
  need(in, 1, "classify");
  const plane::PlaneCase c = plane::classify(read_map(in[0]));
  if (json_mode(o)) {
    out << plane_case_to_json(c).dump() << '\n';
  } else {
    out << "case " << plane::to_string(c.tag) << " via P(" << c.source.to_string() << "|"
        << c.target.to_string() << "), d=" << c.degree << ", a1=" << c.a1 << " a2=" << c.a2
        << " b2=" << c.b2 << " b3=" << c.b3 << " c1=" << c.c1 << " c3=" << c.c3 << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto in = gather(o);
  need(in, 2, "verify");
  const MonomialMap f = read_map(in[0]);
  const InverseSolution sol = read_solution(f, in[1]);
  const VerificationReport report = verify_solution(f.log_matrix(), sol);
  bool ok = report.passed();

  Json oracle_json;
  std::string oracle_line;
  if (o.oracle) {
    Integer top = 0;
    for (std::size_t r = 0; r < sol.B.rows(); ++r)
      for (std::size_t c = 0; c < sol.B.cols(); ++c) top = std::max(top, Integer(sol.B(r, c)));
    if (!top.fits_slong_p()) throw Error(ErrorCode::bound_exhausted, "oracle bound too large");
    const long bound = top.get_si() + 1;
    const auto res = oracle::brute_force_solutions(f.log_matrix(), bound);
    const bool match = res.solutions.size() == 1 && res.solutions.front().B == sol.B &&
                       res.solutions.front().gamma == sol.gamma;
    ok = ok && match;
    oracle_json = Json{{"bound", bound}, {"solutions", res.solutions.size()}, {"matches", match}};
    oracle_line = "oracle (bound " + std::to_string(bound) + "): " +
                  std::to_string(res.solutions.size()) + " solution(s), " +
                  (match ? "unique and equal" : "MISMATCH");
  }

  if (json_mode(o)) {
    Json j{{"passed", ok}, {"report", report_to_json(report)}};
    if (o.oracle) j["oracle"] = oracle_json;
    out << j.dump() << '\n';
  } else {
    out << (ok ? "verified" : "verification FAILED") << '\n';
    print_report(out, report);
    if (o.oracle) out << "  " << oracle_line << '\n';
  }
  if (!ok) throw Failure{"verification_failed", "the candidate inverse does not satisfy every check"};
  return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  const auto in = gather(o);
  need(in, 1, "export-cone");
  const std::string text = export_cone(read_matrix(in[0]));
  if (json_mode(o)) out << Json{{"cone", text}}.dump() << '\n';
  else out << text;
  return 0;
}

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cremona monomial maps: check, invert, compose, decompose, verify"};
  app.require_subcommand(1, 1);
  Options opt;

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    // Inputs are taken from the leftovers: a CLI11 positional would split a
    // JSON array such as [[2,1,0],...] into separate values.
    sub->allow_extras();
    sub->footer("Inputs: monomial text (\"x1^2, x1*x2, x2*x3\"), a JSON map or a JSON log-matrix.");
    sub->add_option("-f,--file", opt.files, "read an input from a file (repeatable)");
    sub->add_option("--format", opt.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    verbs.emplace_back(sub, h);
    return sub;
  };
  verb("check", "Cremona verdict, degree and determinant", cmd_check);
  verb("invert", "normalized monomial inverse with its verification report", cmd_invert);
  verb("compose", "composite of the maps, rightmost applied first", cmd_compose);
  verb("decompose", "word in S, H and relabellings (n = 3)", cmd_decompose);
  verb("classify", "support case of a plane map", cmd_classify);
  verb("verify", "check a (map, inverse) pair", cmd_verify)
      ->add_flag("--oracle", opt.oracle, "also compare against bounded brute force");
  verb("export-cone", "cone system in the Hilbert-basis tool's input format", cmd_export);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return 2;
  }

  try {
    for (const auto& [sub, handler] : verbs) {
      if (!sub->parsed()) continue;
      opt.inputs = sub->remaining();
      for (const auto& a : opt.inputs) {
        if (a.starts_with("-")) {
          print_error(err, "usage", "unknown option " + a);
          return 2;
        }
      }
      return handler(opt, out);
    }
    print_error(err, "usage", "no command given");
    return 2;
  } catch (const Error& e) {
    print_error(err, to_string(e.code()), e.what());
  } catch (const Failure& f) {
    print_error(err, f.code, f.message);
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
  }
  return 1;
}

}  // namespace cremona::cli
