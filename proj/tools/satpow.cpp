#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <satpow/satpow.hpp>

namespace {

// All failures leave one json object on stderr so callers can script us.
int fail(const std::string& kind, const std::string& message, int line,
         int col, int code) {
  nlohmann::json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  if (line > 0) {
    j["error"]["line"] = line;
    j["error"]["col"] = col;
  }
  std::cerr << j.dump() << std::endl;
  return code;
}

struct Flags {
  int K = -1;
  std::string format;
  std::string tol;
  long cap = -1;
  bool oracle = false;
  bool check = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--K", K, "number of powers to compute");
    cmd->add_option("--format", format, "csv, json or plotdata");
    cmd->add_option("--tol", tol, "convergence tolerance, e.g. 0.1 or 1/10");
    cmd->add_option("--cap", cap, "colon iteration budget per power");
    cmd->add_flag("--oracle", oracle, "use the monomial oracle engine");
    cmd->add_flag("--check", check, "run both engines and compare");
  }

  satpow::CliOverrides overrides() const {
    satpow::CliOverrides ov;
    if (K != -1) {
      if (K < 1) throw satpow::ParseError("K must be at least 1", 1, 1);
      ov.K = K;
    }
    if (!format.empty()) {
      auto f = satpow::format_from_name(format);
      if (!f)
        throw satpow::ParseError("unknown format '" + format + "'", 1, 1);
      ov.format = *f;
    }
    if (!tol.empty()) {
      satpow::Rational r;
      try {
        r = satpow::Rational::parse(tol);
      } catch (const std::exception&) {
        throw satpow::ParseError("bad tolerance '" + tol + "'", 1, 1);
      }
      if (r.sign() <= 0)
        throw satpow::ParseError("tol must be positive", 1, 1);
      ov.tol = r;
    }
    if (cap != -1) {
      if (cap < 1) throw satpow::ParseError("cap must be at least 1", 1, 1);
      ov.cap = cap;
    }
    ov.oracle = oracle;
    ov.check = check;
    return ov;
  }
};

int run_text(const std::string& text, const Flags& flags) {
  try {
    satpow::JobSpec job = satpow::parse_job(text);
    std::cout << satpow::execute_job(job, flags.overrides());
    return 0;
  } catch (const satpow::ParseError& ex) {
    return fail("parse", ex.what(), ex.line, ex.col, 2);
  } catch (const satpow::AlgebraError& ex) {
    return fail("algebra", ex.what(), 0, 0, 3);
  } catch (const std::exception& ex) {
    return fail("internal", ex.what(), 0, 0, 3);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saturated powers of ideals and modules over Q[x_1..x_d]"};
  app.require_subcommand(1);

  std::string jobfile, inline_text;
  Flags run_flags, eval_flags;

  CLI::App* run = app.add_subcommand("run", "execute a job file");
  run->add_option("jobfile", jobfile, "path to the job file")->required();
  run_flags.attach(run);

  CLI::App* eval = app.add_subcommand("eval", "execute an inline job string");
  eval->add_option("text", inline_text, "job text, e.g. \"ring Q[x,y]; ...\"")
      ->required();
  eval_flags.attach(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 0, 0, 2);
  }

  if (run->parsed()) {
    std::ifstream in(jobfile);
    if (!in) return fail("io", "cannot read job file: " + jobfile, 0, 0, 2);
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_text(buf.str(), run_flags);
  }
  return run_text(inline_text, eval_flags);
}
