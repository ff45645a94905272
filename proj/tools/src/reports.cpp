#include "hypexp_cli/reports.hpp"

#include <sstream>

#include "hypexp/error.hpp"

namespace hypexp::cli {

Json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

Json sequence_json(const std::vector<Rational>& seq) {
  Json out = Json::array();
  for (const auto& r : seq) out.push_back(rational_json(r));
  return out;
}

namespace {

Json violations_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back({{"r", v.r}, {"k", v.k}});
  return out;
}

Json lemma_violations_json(const std::vector<LemmaViolation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back({{"r", v.r}, {"x", v.x}, {"bound", v.strong ? "strong" : "+2"}});
  return out;
}

}  // namespace

Json criterion_json(const CriterionReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["N"] = rep.N;
  j["D"] = rep.D;
  j["r_max"] = rep.r_max;
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["points_tested"] = rep.points_tested;
  j["violations"] = violations_json(rep.violations);
  if (rep.bracket_form_checked) {
    j["bracket_form"] = {{"points", rep.bracket_points},
                         {"disagreements", violations_json(rep.bracket_disagreements)}};
  }
  return j;
}

Json lemma_json(unsigned r_max, const std::vector<LemmaViolation>& lemma, unsigned corollary_r_max,
                const std::vector<LemmaViolation>& corollary, const std::vector<unsigned>& special) {
  Json j;
  j["lemma"] = {{"r_max", r_max}, {"violations", lemma_violations_json(lemma)}};
  j["corollary"] = {{"r_max", corollary_r_max}, {"violations", lemma_violations_json(corollary)}};
  j["special_points"] = {{"failing_levels", special}};
  j["verdict"] = (lemma.empty() && corollary.empty() && special.empty()) ? "pass" : "fail";
  return j;
}

Json search_json(const SearchReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["N_max"] = rep.N_max;
  j["D_max"] = rep.D_max;
  j["r_max"] = rep.r_max;
  Json cands = Json::array();
  for (const auto& c : rep.candidates) {
    Json e = {{"N", c.N}, {"D", c.D}, {"label", std::string(to_string(c.label))}};
    if (c.q) e["q"] = c.q;
    cands.push_back(std::move(e));
  }
  j["candidates"] = std::move(cands);
  Json excl = Json::array();
  for (const auto& e : rep.excluded) {
    excl.push_back({{"N", e.N}, {"D", e.D}, {"witness", {{"r", e.witness.r}, {"k", e.witness.k}}}});
  }
  j["excluded"] = std::move(excl);
  return j;
}

Json identification_json(const IdentificationReport& rep) {
  Json j;
  j["sequence"] = rep.sequence;
  Json groups = Json::array();
  for (const auto& v : rep.verdicts) {
    Json g = {{"group", v.group}, {"admits", v.admits}};
    if (!v.eliminated.empty()) {
      g["eliminated"] = v.eliminated;
      g["min_value_rule"] = v.min_value_rule;
    }
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  j["admitting"] = rep.admitting_groups();
  return j;
}

std::vector<i64> parse_sequence(const std::string& text) {
  std::vector<i64> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      raise(ErrorKind::InvalidArgument, std::string("sequence is not valid JSON: ") + e.what());
    }
    for (const auto& v : j) {
      if (v.is_number_integer()) {
        out.push_back(v.get<i64>());
      } else if (v.is_string() && v.get<std::string>().find('/') == std::string::npos) {
        out.push_back(std::stoll(v.get<std::string>()));
      } else {
        raise(ErrorKind::InvalidArgument, "sequence entries must be integers, got " + v.dump());
      }
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (item.find_first_not_of(" \t\r\n", pos) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      raise(ErrorKind::InvalidArgument, "bad sequence entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace hypexp::cli
