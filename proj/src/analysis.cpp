#include "minrep/analysis.hpp"

#include "minrep/error.hpp"

#include <sstream>

namespace minrep {

AnalysisRecord analyze(const MinimalModel& model, const ModuleLabel& label) {
  const RepProfile prof = rep_profile(model, label);
  AnalysisRecord rec;
  rec.p = model.p();
  rec.q = model.q();
  rec.m = label.m;
  rec.n = label.n;
  rec.c = prof.c;
  rec.h = prof.h;
  rec.s = prof.s;
  for (std::size_t j = 0; j < prof.partners.partners.size(); ++j) {
    rec.partners.push_back({prof.partners.partners[j], prof.h_partner[j]});
  }
  rec.lambda = prof.lambda;
  rec.r = prof.r;
  rec.level = level(model, label);
  rec.min_congruence_dim = min_congruence_dim(rec.level);

  std::optional<Irreducibility> irr;
  try {
    irr = irreducibility_certificate(prof);
    rec.irreducibility = irreducibility_name(*irr);
  } catch (const error& e) {
    if (e.code() != errc::SubsetBlowup) {
      throw;
    }
    rec.irreducibility = "Skipped";
  }
  if (prof.s <= 3 && irr == Irreducibility::Irreducible) {
    AlphaProfile a = alpha_profile(prof);
    rec.k0 = a.k0;
    rec.alpha = std::move(a.alpha);
  }
  rec.verdict = congruence_verdict(model, label);
  rec.spaces = space_comparison(prof, irr);
  return rec;
}

namespace {

using nlohmann::json;

json fractions(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) {
    out.push_back(x.str());
  }
  return out;
}

std::vector<Rational> parse_fractions(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) {
    out.push_back(Rational::parse(x.get<std::string>()));
  }
  return out;
}

LambdaWindow parse_lambda_window(const std::string& text) {
  for (auto w : {LambdaWindow::Negative, LambdaWindow::UnitInterval, LambdaWindow::AtLeastOne}) {
    if (text == lambda_window_name(w)) {
      return w;
    }
  }
  throw error(errc::ParseError, "unknown lambda window '" + text + "'");
}

std::string join(const std::vector<Rational>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += xs[i].str();
  }
  return out;
}

std::string factorization_string(const Level& lvl) {
  if (lvl.factorization.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& [prime, exp] : lvl.factorization) {
    if (!out.empty()) {
      out += '*';
    }
    out += std::to_string(prime);
    if (exp > 1) {
      out += '^' + std::to_string(exp);
    }
  }
  return out;
}

}  // namespace

void to_json(json& j, const AnalysisRecord& rec) {
  json partners = json::array();
  for (const auto& pr : rec.partners) {
    partners.push_back({{"m", pr.index.m}, {"n", pr.index.n}, {"h", pr.h.str()}});
  }
  json factorization = json::array();
  for (const auto& [prime, exp] : rec.level.factorization) {
    factorization.push_back({prime, exp});
  }
  json windows = json::array();
  for (auto w : rec.spaces.lambda_window) {
    windows.push_back(lambda_window_name(w));
  }
  j = json{
      {"p", rec.p},
      {"q", rec.q},
      {"m", rec.m},
      {"n", rec.n},
      {"c", rec.c.str()},
      {"h", rec.h.str()},
      {"s", rec.s},
      {"partners", partners},
      {"lambda", fractions(rec.lambda)},
      {"r", fractions(rec.r)},
      {"level", {{"N", rec.level.N.get_str()}, {"factorization", factorization}}},
      {"min_congruence_dim", rec.min_congruence_dim.get_str()},
      {"irreducibility", rec.irreducibility},
      {"k0", rec.k0 ? json(rec.k0->str()) : json(nullptr)},
      {"alpha", rec.alpha ? fractions(*rec.alpha) : json(nullptr)},
      {"congruence",
       {{"status", status_name(rec.verdict.status)},
        {"criterion", criterion_name(rec.verdict.criterion)},
        {"details", rec.verdict.details}}},
      {"spaces",
       {{"status", space_status_name(rec.spaces.status)},
        {"lambda_window", windows},
        {"ratio_check", rec.spaces.ratio_check ? json(*rec.spaces.ratio_check) : json(nullptr)}}},
  };
}

void from_json(const json& j, AnalysisRecord& rec) {
  rec.p = j.at("p").get<std::int64_t>();
  rec.q = j.at("q").get<std::int64_t>();
  rec.m = j.at("m").get<std::int64_t>();
  rec.n = j.at("n").get<std::int64_t>();
  rec.c = Rational::parse(j.at("c").get<std::string>());
  rec.h = Rational::parse(j.at("h").get<std::string>());
  rec.s = j.at("s").get<std::int64_t>();
  rec.partners.clear();
  for (const auto& pr : j.at("partners")) {
    rec.partners.push_back({{pr.at("m").get<std::int64_t>(), pr.at("n").get<std::int64_t>()},
                            Rational::parse(pr.at("h").get<std::string>())});
  }
  rec.lambda = parse_fractions(j.at("lambda"));
  rec.r = parse_fractions(j.at("r"));
  rec.level.N = Integer(j.at("level").at("N").get<std::string>());
  rec.level.factorization.clear();
  for (const auto& f : j.at("level").at("factorization")) {
    rec.level.factorization.emplace_back(f.at(0).get<long>(), f.at(1).get<int>());
  }
  rec.min_congruence_dim = Integer(j.at("min_congruence_dim").get<std::string>());
  rec.irreducibility = j.at("irreducibility").get<std::string>();
  const json& k0 = j.at("k0");
  rec.k0 = k0.is_null() ? std::nullopt
                        : std::optional<Rational>(Rational::parse(k0.get<std::string>()));
  const json& alpha = j.at("alpha");
  rec.alpha = alpha.is_null() ? std::nullopt
                              : std::optional<std::vector<Rational>>(parse_fractions(alpha));
  const json& cong = j.at("congruence");
  rec.verdict.status = parse_status(cong.at("status").get<std::string>());
  rec.verdict.criterion = parse_criterion(cong.at("criterion").get<std::string>());
  rec.verdict.details = cong.at("details").get<std::map<std::string, std::string>>();
  const json& sp = j.at("spaces");
  rec.spaces.status = parse_space_status(sp.at("status").get<std::string>());
  rec.spaces.lambda_window.clear();
  for (const auto& w : sp.at("lambda_window")) {
    rec.spaces.lambda_window.push_back(parse_lambda_window(w.get<std::string>()));
  }
  const json& rc = sp.at("ratio_check");
  rec.spaces.ratio_check = rc.is_null() ? std::nullopt : std::optional<bool>(rc.get<bool>());
}

std::string to_json_line(const AnalysisRecord& rec) { return json(rec).dump(); }

std::string to_json_pretty(const AnalysisRecord& rec) { return json(rec).dump(2); }

AnalysisRecord record_from_json(const std::string& text) {
  try {
    return json::parse(text).get<AnalysisRecord>();
  } catch (const json::exception& e) {
    throw error(errc::ParseError, e.what());
  }
}

std::string csv_header() {
  return "p,q,m,n,s,c,h,level,level_factorization,min_congruence_dim,irreducibility,"
         "status,criterion,space_status,lambda,r";
}

std::string to_csv_row(const AnalysisRecord& rec) {
  std::ostringstream os;
  os << rec.p << ',' << rec.q << ',' << rec.m << ',' << rec.n << ',' << rec.s << ',' << rec.c
     << ',' << rec.h << ',' << rec.level.N << ',' << factorization_string(rec.level) << ','
     << rec.min_congruence_dim << ',' << rec.irreducibility << ','
     << status_name(rec.verdict.status) << ',' << criterion_name(rec.verdict.criterion) << ','
     << space_status_name(rec.spaces.status) << ',' << join(rec.lambda, ';') << ','
     << join(rec.r, ';');
  return os.str();
}

std::string to_table(const AnalysisRecord& rec) {
  std::ostringstream os;
  auto row = [&](const char* key, const std::string& value) {
    os << "  " << key << " ";
    for (std::size_t i = std::string_view(key).size(); i < 22; ++i) {
      os << ' ';
    }
    os << value << '\n';
  };
  os << "V(" << rec.p << "," << rec.q << ")  L(" << rec.m << "," << rec.n << ")\n";
  row("c", rec.c.str());
  row("h", rec.h.str());
  row("dimension", std::to_string(rec.s));
  std::string partners;
  for (const auto& pr : rec.partners) {
    if (!partners.empty()) {
      partners += ' ';
    }
    partners += "(" + std::to_string(pr.index.m) + "," + std::to_string(pr.index.n) + ")";
  }
  row("partners", partners);
  row("lambda", join(rec.lambda, ' '));
  row("r", join(rec.r, ' '));
  row("level", rec.level.N.get_str() + " = " + factorization_string(rec.level));
  row("min congruence dim", rec.min_congruence_dim.get_str());
  row("irreducibility", rec.irreducibility);
  if (rec.k0) {
    row("k0", rec.k0->str());
    row("alpha", join(*rec.alpha, ' '));
  }
  row("verdict", std::string(status_name(rec.verdict.status)) + " (" +
                     criterion_name(rec.verdict.criterion) + ")");
  for (const auto& [key, value] : rec.verdict.details) {
    row(("  " + key).c_str(), value);
  }
  std::string spaces = space_status_name(rec.spaces.status);
  if (rec.spaces.ratio_check) {
    spaces += *rec.spaces.ratio_check ? ", ratio in window" : ", ratio outside window";
  }
  row("spaces", spaces);
  return os.str();
}

}  // namespace minrep
