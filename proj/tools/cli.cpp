#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "indpro/harness.hpp"
#include "indpro/io.hpp"
#include "indpro/tate.hpp"

namespace indpro::cli {

namespace {

using indpro::harness::Report;
using json = nlohmann::ordered_json;

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
  f << text;
}

io::Document load(const std::string& path) { return io::parse_document(read_file(path)); }

void emit_report(const Report& rep, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    json j;
    j["trials"] = rep.trials;
    j["failures"] = rep.failures;
    j["lines"] = rep.lines;
    out << j.dump(2) << "\n";
  } else {
    out << rep.text();
  }
  for (const auto& [name, text] : rep.failure_dumps) {
    std::ofstream f(name, std::ios::binary);
    if (f) {
      f << text;
      err << "wrote counterexample to " << name << "\n";
    }
  }
}

void emit_verdict(const std::string& name, bool ok, const std::string& detail, bool as_json,
                  std::ostream& out) {
  if (as_json) {
    json j;
    j["check"] = name;
    j["ok"] = ok;
    if (!detail.empty()) j["detail"] = detail;
    out << j.dump(2) << "\n";
  } else {
    out << name << ": " << (ok ? "ok" : "FAIL") << (detail.empty() ? "" : " " + detail) << "\n";
  }
  if (!ok) throw CheckFailed(name);
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("INDPRO_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return cli_seed;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"countable ind/pro windows and Tate-space checks over GF(p)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable reports");

  // check admissible|kato|ses FILE
  auto* check = app.add_subcommand("check", "run a predicate on a document");
  std::string check_what, check_file;
  check->add_option("predicate", check_what, "admissible, kato, or ses")->required();
  check->add_option("file", check_file, "document path")->required();

  // roof-eq FILE1 FILE2
  auto* roof_eq = app.add_subcommand("roof-eq", "decide equivalence of two roofs");
  std::string roof_a, roof_b;
  roof_eq->add_option("first", roof_a)->required();
  roof_eq->add_option("second", roof_b)->required();

  // strictify FILE [--out FILE]
  auto* strictify_cmd = app.add_subcommand("strictify", "replace a window by its strict model");
  std::string strict_file, strict_out;
  strictify_cmd->add_option("file", strict_file)->required();
  strictify_cmd->add_option("--out", strict_out, "write result here instead of stdout");

  // dualize FILE [--out FILE]
  auto* dualize_cmd = app.add_subcommand("dualize", "dualize a pi window");
  std::string dual_file, dual_out;
  dualize_cmd->add_option("file", dual_file)->required();
  dualize_cmd->add_option("--out", dual_out, "write result here instead of stdout");

  // embed-ind FILE
  auto* embed_cmd = app.add_subcommand("embed-ind", "embed a strict ind window as a pi window");
  std::string embed_file;
  embed_cmd->add_option("file", embed_file)->required();

  // demo laurent --p P --lo L --hi H
  auto* demo = app.add_subcommand("demo", "emit a worked example document");
  std::string demo_what;
  std::uint32_t demo_p = 2;
  int demo_lo = -2, demo_hi = 2;
  demo->add_option("example", demo_what, "laurent")->required();
  demo->add_option("--p", demo_p, "field modulus");
  demo->add_option("--lo", demo_lo);
  demo->add_option("--hi", demo_hi);

  // harness NAME --trials N --seed S [--p P --max-dim D --lo L --hi H]
  auto* harness_cmd = app.add_subcommand("harness", "randomized theorem checks");
  std::string harness_what;
  int trials = 10;
  std::uint64_t seed = 42;
  std::uint32_t hp = 2;
  int max_dim = 4, hlo = -2, hhi = 2;
  harness_cmd
      ->add_option("name", harness_what,
                   "localizing, cartesian, three-squares, middle-3x3, extension, ind-closure")
      ->required();
  harness_cmd->add_option("--trials", trials);
  harness_cmd->add_option("--seed", seed);
  harness_cmd->add_option("--p", hp);
  harness_cmd->add_option("--max-dim", max_dim);
  harness_cmd->add_option("--lo", hlo);
  harness_cmd->add_option("--hi", hhi);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);

  if (check->parsed()) {
    io::Document doc = load(check_file);
    if (check_what == "admissible") {
      const auto* w = std::get_if<PiWindow>(&doc.payload);
      if (!w) throw std::runtime_error("check admissible expects a pi_window document");
      AdmissibleReport r = is_admissible(*w);
      std::string detail;
      if (!r.ok) {
        detail = "triple=(" + std::to_string((*r.failing_triple)[0]) + "," +
                 std::to_string((*r.failing_triple)[1]) + "," +
                 std::to_string((*r.failing_triple)[2]) + ")";
      }
      emit_verdict("admissible", r.ok, detail, as_json, out);
    } else if (check_what == "kato") {
      const auto* w = std::get_if<PiWindow>(&doc.payload);
      if (!w) throw std::runtime_error("check kato expects a pi_window document");
      KatoReport r = is_kato(*w);
      std::string detail;
      if (!r.ok) {
        detail = "square=(" + std::to_string((*r.failing_square)[0]) + "," +
                 std::to_string((*r.failing_square)[1]) + ")";
      }
      emit_verdict("kato", r.ok, detail, as_json, out);
    } else if (check_what == "ses") {
      const auto* t = std::get_if<SesTriple>(&doc.payload);
      if (!t) throw std::runtime_error("check ses expects a ses document");
      emit_verdict("ses", is_ses(*t), "", as_json, out);
    } else {
      throw std::runtime_error("unknown predicate '" + check_what + "'");
    }
    return 0;
  }

  if (roof_eq->parsed()) {
    io::Document a = load(roof_a);
    io::Document b = load(roof_b);
    bool eq = false;
    if (a.kind == io::DocKind::roof && b.kind == io::DocKind::roof) {
      eq = equivalent(std::get<IndRoof>(a.payload), std::get<IndRoof>(b.payload));
    } else if (a.kind == io::DocKind::u_roof && b.kind == io::DocKind::u_roof) {
      eq = equivalent(std::get<PiRoof>(a.payload), std::get<PiRoof>(b.payload));
    } else {
      throw std::runtime_error("roof-eq expects two roof documents of the same kind");
    }
    emit_verdict("roof-eq", eq, eq ? "equivalent" : "not equivalent", as_json, out);
    return 0;
  }

  if (strictify_cmd->parsed()) {
    io::Document doc = load(strict_file);
    if (const auto* y = std::get_if<ProWindow>(&doc.payload)) {
      ProStrictification s = strictify_pro(*y);
      write_output(io::serialize(io::doc_of(s.strict)), strict_out, out);
    } else if (const auto* x = std::get_if<IndWindow>(&doc.payload)) {
      IndStrictification s = strictify_ind(*x);
      write_output(io::serialize(io::doc_of(s.strict)), strict_out, out);
    } else {
      throw std::runtime_error("strictify expects an ind_window or pro_window document");
    }
    return 0;
  }

  if (dualize_cmd->parsed()) {
    io::Document doc = load(dual_file);
    const auto* w = std::get_if<PiWindow>(&doc.payload);
    if (!w) throw std::runtime_error("dualize expects a pi_window document");
    write_output(io::serialize(io::doc_of(dualize(*w))), dual_out, out);
    return 0;
  }

  if (embed_cmd->parsed()) {
    io::Document doc = load(embed_file);
    const auto* x = std::get_if<IndWindow>(&doc.payload);
    if (!x) throw std::runtime_error("embed-ind expects an ind_window document");
    out << io::serialize(io::doc_of(embed_ind_window(*x)));
    return 0;
  }

  if (demo->parsed()) {
    if (demo_what != "laurent") throw std::runtime_error("unknown demo '" + demo_what + "'");
    out << io::serialize(io::doc_of(laurent_window(LaurentSpec{demo_p, demo_lo, demo_hi})));
    return 0;
  }

  if (harness_cmd->parsed()) {
    std::uint64_t s = effective_seed(seed);
    Report rep;
    if (harness_what == "localizing") {
      rep = harness::localizing_axioms_check(trials, s, hp, max_dim);
    } else if (harness_what == "cartesian") {
      rep = harness::cartesian_agreement_check(trials, s, hp, max_dim);
    } else if (harness_what == "three-squares") {
      rep = harness::three_squares_report(trials, s, hp, max_dim);
    } else if (harness_what == "middle-3x3") {
      rep = harness::middle_3x3_report(trials, s, hp, max_dim);
    } else if (harness_what == "extension") {
      rep = harness::extension_closure_report(trials, s, hp, max_dim, hlo, hhi);
    } else if (harness_what == "ind-closure") {
      rep = harness::ind_closure_report(trials, s, hp, max_dim);
    } else {
      throw std::runtime_error("unknown harness '" + harness_what + "'");
    }
    emit_report(rep, as_json, out, err);
    return rep.failures == 0 ? 0 : 1;
  }

  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "commands: check admissible|kato|ses FILE; roof-eq A B; strictify FILE [--out F];\n"
           "          dualize FILE [--out F]; embed-ind FILE; demo laurent --p P --lo L --hi H;\n"
           "          harness localizing|cartesian|three-squares|middle-3x3|extension|ind-closure"
           " --trials N --seed S\n";
    return 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const io::parse_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const io::semantic_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace indpro::cli
