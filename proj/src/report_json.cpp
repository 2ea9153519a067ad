#include "strongq/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace strongq {

Json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return std::stod(s);
}

namespace {

Json matrix_entries(const ExactMatrix& m) {
  auto arr = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) arr.push_back(m.at(i, j).to_string());
  return arr;
}

Json matrix_entries(const Eigen::MatrixXd& m) {
  auto arr = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) arr.push_back(json_number(m(i, j)));
  return arr;
}

Json graph_edges(const Graph& g) {
  auto arr = Json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u + 1, v + 1});
  return arr;
}

Graph graph_from(const Json& j, int n) {
  Graph g(n);
  for (const auto& e : j) g.add_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  return g;
}

}  // namespace

Json to_json(const StrongPropertyReport& rep) {
  Json j;
  j["schema_version"] = 1;
  j["property"] = to_string(rep.property);
  j["mode"] = rep.mode == VerifyMode::Exact ? "exact" : "float";
  j["path"] = rep.path == VerifyPath::RankCriterion ? "rank-criterion" : "definitional";
  j["verdict"] = rep.verdict;
  j["p"] = rep.p;
  j["rank"] = rep.rank;
  j["margin"] = rep.margin ? json_number(*rep.margin) : Json(nullptr);
  if (rep.q_used >= 0) j["q_used"] = rep.q_used;
  j["ambiguous"] = rep.ambiguous;
  j["witness"] = rep.witness ? matrix_entries(*rep.witness) : Json(nullptr);
  return j;
}

Json verification_report(const StrongPropertyReport& rep, const ExactMatrix& a,
                         const Graph& g) {
  Json j = to_json(rep);
  Json input;
  input["exact"] = true;
  input["n"] = g.order();
  input["edges"] = graph_edges(g);
  input["entries"] = matrix_entries(a);
  j["input"] = input;
  return j;
}

Json verification_report(const StrongPropertyReport& rep, const Eigen::MatrixXd& a,
                         const Graph& g) {
  Json j = to_json(rep);
  Json input;
  input["exact"] = false;
  input["n"] = g.order();
  input["edges"] = graph_edges(g);
  input["entries"] = matrix_entries(a);
  j["input"] = input;
  return j;
}

StrongPropertyReport recheck_report(const Json& report) {
  const Json& input = report.at("input");
  int n = input.at("n").get<int>();
  Graph g = graph_from(input.at("edges"), n);
  StrongProperty prop = property_from_string(report.at("property").get<std::string>());
  bool exact = input.at("exact").get<bool>();

  StrongPropertyReport fresh;
  if (exact) {
    ExactMatrix a(n, n);
    size_t k = 0;
    for (const auto& e : input.at("entries")) {
      a.at(int(k / n), int(k % n)) = ExactScalar::parse(e.get<std::string>());
      ++k;
    }
    fresh = verify_property(prop, a, g);
  } else {
    Eigen::MatrixXd a(n, n);
    size_t k = 0;
    for (const auto& e : input.at("entries")) {
      a(int(k / n), int(k % n)) = number_from_json(e);
      ++k;
    }
    switch (prop) {
      case StrongProperty::SAP: fresh = verify_sap(a, g); break;
      case StrongProperty::SSP: fresh = verify_ssp(a, g); break;
      case StrongProperty::SMP: fresh = verify_smp(a, g); break;
    }
  }
  if (fresh.verdict != report.at("verdict").get<bool>() ||
      fresh.p != report.at("p").get<int>() || fresh.rank != report.at("rank").get<int>())
    throw CorpusIntegrityError("recheck mismatch: stored report disagrees with recomputation");
  return fresh;
}

Json to_json(const SpectralData& sd, bool full) {
  Json j;
  auto evs = Json::array();
  for (double v : sd.eigenvalues) evs.push_back(json_number(v));
  j["eigenvalues"] = evs;
  j["multiplicities"] = sd.multiplicities;
  j["cluster_gap"] = json_number(sd.cluster_gap);
  j["ambiguous"] = sd.ambiguous;
  if (full) {
    auto projs = Json::array();
    for (const auto& p : sd.projectors) projs.push_back(matrix_entries(p));
    j["projectors"] = projs;
  }
  return j;
}

Json to_json(const Bound& b) {
  Json j;
  j["value"] = b.value;
  auto rules = Json::array();
  for (const auto& r : b.rules) {
    Json rj;
    rj["rule"] = r.rule;
    rj["value"] = r.value;
    rj["detail"] = r.detail;
    rules.push_back(rj);
  }
  j["rules"] = rules;
  return j;
}

Json to_json(const BoundReport& rep) {
  Json j;
  j["schema_version"] = 1;
  j["lower"] = to_json(rep.lower);
  j["upper"] = to_json(rep.upper);
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["schema_version"] = 1;
  j["verdict"] = to_string(c.verdict);
  j["family"] = to_string(c.family);
  if (c.witness) {
    Json w;
    w["rule"] = c.witness->rule;
    w["detail"] = c.witness->detail;
    auto verts = Json::array();
    for (int v : c.witness->vertices) verts.push_back(v + 1);
    w["vertices"] = verts;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const GershgorinReport& rep) {
  Json j;
  j["schema_version"] = 1;
  j["verdict"] = rep.verdict == GershgorinVerdict::ProvedSSP ? "proved-ssp" : "inconclusive";
  j["intersection_graph"] = graph_edges(rep.intersection_graph);
  return j;
}

Json to_json(const LiftResult& res) {
  Json j;
  j["schema_version"] = 1;
  j["B"] = matrix_entries(res.B);
  j["n"] = static_cast<int>(res.B.rows());
  j["spectrum_error"] = json_number(res.spectrum_error);
  j["ssp_margin"] = json_number(res.ssp_margin);
  j["min_edge_entry"] = json_number(res.min_edge_entry);
  j["pattern_ok"] = res.pattern_report.in_class;
  auto seed = Json::array();
  for (double v : res.seed_spectrum) seed.push_back(json_number(v));
  j["seed_spectrum"] = seed;
  auto log = Json::array();
  for (const auto& s : res.path_log) {
    Json sj;
    sj["t"] = json_number(s.t);
    sj["residual"] = json_number(s.residual);
    sj["newton_iters"] = s.newton_iters;
    log.push_back(sj);
  }
  j["path_log"] = log;
  return j;
}

}  // namespace strongq
