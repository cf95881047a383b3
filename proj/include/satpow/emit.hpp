#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "satpow/asymptotics.hpp"
#include "satpow/jobspec.hpp"

namespace satpow {

namespace emitdetail {

inline nlohmann::json rational_fields(const char* key, const Rational& v) {
  nlohmann::json j;
  j[key] = v.str();
  j[std::string(key) + "_decimal"] = v.decimal();
  return j;
}

}  // namespace emitdetail

// Table emission for the length sequence. The csv header is part of the
// interface; keep it stable.
inline std::string emit_report(const AsymptoticReport& rep, OutFormat format,
                               const EpsilonEstimate* eps = nullptr,
                               const TauCheckResult* tau = nullptr) {
  std::ostringstream out;
  switch (format) {
    case OutFormat::Csv: {
      out << "k,lambda,n_k,ratio,eps_k\n";
      for (const auto& r : rep.rows)
        out << r.k << ',' << r.lambda << ',' << r.n_k << ',' << r.ratio.str()
            << ',' << r.eps.str() << '\n';
      out << "# d=" << rep.d << " e=" << rep.e << " gamma=" << rep.gamma
          << " rank_hypothesis_met=" << (rep.rank_hypothesis_met ? "true" : "false")
          << '\n';
      out << "# tau_hat=" << rep.diag.tau_hat
          << " last_delta=" << rep.diag.last_delta.str()
          << " monotone_tail=" << (rep.diag.monotone_tail ? "true" : "false")
          << '\n';
      if (eps)
        out << "# eps_point=" << eps->point.str() << " eps_lo=" << eps->lo.str()
            << " eps_hi=" << eps->hi.str()
            << " converged=" << (eps->converged ? "true" : "false") << '\n';
      if (tau)
        out << "# tau_hat=" << tau->tau_hat << " tau_head=" << tau->tau_head
            << " stable=" << (tau->stable ? "true" : "false")
            << " linear=" << (tau->linear ? "true" : "false") << '\n';
      break;
    }
    case OutFormat::Json: {
      nlohmann::json j;
      j["d"] = rep.d;
      j["e"] = rep.e;
      j["gamma"] = rep.gamma;
      j["rank_hypothesis_met"] = rep.rank_hypothesis_met;
      j["rows"] = nlohmann::json::array();
      for (const auto& r : rep.rows) {
        nlohmann::json row;
        row["k"] = r.k;
        row["lambda"] = r.lambda;
        row["n_k"] = r.n_k;
        row.update(emitdetail::rational_fields("ratio", r.ratio));
        row.update(emitdetail::rational_fields("eps_k", r.eps));
        j["rows"].push_back(row);
      }
      j["diagnostics"]["tau_hat"] = rep.diag.tau_hat;
      j["diagnostics"]["last_delta"] = rep.diag.last_delta.str();
      j["diagnostics"]["monotone_tail"] = rep.diag.monotone_tail;
      if (eps) {
        nlohmann::json e;
        e.update(emitdetail::rational_fields("point", eps->point));
        e["lo"] = eps->lo.str();
        e["hi"] = eps->hi.str();
        e["converged"] = eps->converged;
        j["epsilon"] = e;
      }
      if (tau) {
        j["tau"]["tau_hat"] = tau->tau_hat;
        j["tau"]["tau_head"] = tau->tau_head;
        j["tau"]["stable"] = tau->stable;
        j["tau"]["linear"] = tau->linear;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutFormat::Plotdata: {
      for (const auto& r : rep.rows) out << r.k << ' ' << r.eps.decimal() << '\n';
      break;
    }
  }
  return out.str();
}

// Inverse of the json emission for the semantic fields. Used to round trip
// reports through files.
inline AsymptoticReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad report json: ") + ex.what(), 1, 1);
  }
  AsymptoticReport rep;
  try {
    rep.d = j.at("d").get<int>();
    rep.e = j.at("e").get<int>();
    rep.gamma = j.at("gamma").get<int>();
    rep.rank_hypothesis_met = j.at("rank_hypothesis_met").get<bool>();
    for (const auto& row : j.at("rows")) {
      ReportRow r;
      r.k = row.at("k").get<int>();
      r.lambda = row.at("lambda").get<long long>();
      r.n_k = row.at("n_k").get<int>();
      r.ratio = Rational::parse(row.at("ratio").get<std::string>());
      r.eps = Rational::parse(row.at("eps_k").get<std::string>());
      rep.rows.push_back(r);
    }
    rep.diag.tau_hat = j.at("diagnostics").at("tau_hat").get<int>();
    rep.diag.last_delta =
        Rational::parse(j.at("diagnostics").at("last_delta").get<std::string>());
    rep.diag.monotone_tail = j.at("diagnostics").at("monotone_tail").get<bool>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad report json: ") + ex.what(), 1, 1);
  }
  return rep;
}

struct SaturationOutput {
  std::vector<std::string> generators;  // canonical basis of the saturation
  int n_stab = 0;
  int d = 0;
  int gamma = 1;
};

inline std::string emit_saturation(const SaturationOutput& s, OutFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutFormat::Csv: {
      out << "index,generator\n";
      for (std::size_t i = 0; i < s.generators.size(); ++i)
        out << (i + 1) << ",\"" << s.generators[i] << "\"\n";
      out << "# n_stab=" << s.n_stab << " d=" << s.d << " gamma=" << s.gamma
          << '\n';
      break;
    }
    case OutFormat::Json: {
      nlohmann::json j;
      j["generators"] = s.generators;
      j["n_stab"] = s.n_stab;
      j["d"] = s.d;
      j["gamma"] = s.gamma;
      out << j.dump(2) << '\n';
      break;
    }
    case OutFormat::Plotdata:
      throw ParseError("plotdata output needs a sequence command", 1, 1);
  }
  return out.str();
}

struct OracleDiffRow {
  int k = 0;
  long long lambda_main = 0;
  long long lambda_oracle = 0;
  int n_main = 0;
  int n_oracle = 0;
  bool sat_equal = false;
  bool agree() const {
    return lambda_main == lambda_oracle && n_main == n_oracle && sat_equal;
  }
};

inline std::string emit_oracle_diff(const std::vector<OracleDiffRow>& rows,
                                    OutFormat format) {
  bool all = true;
  for (const auto& r : rows) all = all && r.agree();
  std::ostringstream out;
  switch (format) {
    case OutFormat::Csv: {
      out << "k,lambda,lambda_oracle,n_k,n_oracle,sat_match,agree\n";
      for (const auto& r : rows)
        out << r.k << ',' << r.lambda_main << ',' << r.lambda_oracle << ','
            << r.n_main << ',' << r.n_oracle << ','
            << (r.sat_equal ? "true" : "false") << ','
            << (r.agree() ? "true" : "false") << '\n';
      out << "# all_agree=" << (all ? "true" : "false") << '\n';
      break;
    }
    case OutFormat::Json: {
      nlohmann::json j;
      j["rows"] = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json row;
        row["k"] = r.k;
        row["lambda"] = r.lambda_main;
        row["lambda_oracle"] = r.lambda_oracle;
        row["n_k"] = r.n_main;
        row["n_oracle"] = r.n_oracle;
        row["sat_match"] = r.sat_equal;
        row["agree"] = r.agree();
        j["rows"].push_back(row);
      }
      j["all_agree"] = all;
      out << j.dump(2) << '\n';
      break;
    }
    case OutFormat::Plotdata:
      throw ParseError("plotdata output needs a sequence command", 1, 1);
  }
  return out.str();
}

}  // namespace satpow
