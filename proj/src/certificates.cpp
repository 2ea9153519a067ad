#include "strongq/certificates.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "strongq/families.hpp"
#include "strongq/pattern.hpp"
#include "strongq/spectra.hpp"
#include "strongq/strong_properties.hpp"

namespace strongq {

namespace {

void fail(const std::string& id, const std::string& claim) {
  throw CorpusIntegrityError("certificate '" + id + "': claim '" + claim + "' failed");
}

void check_property_claim(const Certificate& c, StrongProperty prop, bool expected) {
  StrongPropertyReport rep = verify_property(prop, c.matrix, c.graph);
  if (rep.verdict != expected) fail(c.id, to_string(prop));
}

}  // namespace

void verify_certificate(const Certificate& c) {
  if (!c.matrix.is_symmetric()) fail(c.id, "symmetric");
  if (!matches_pattern(c.matrix, c.graph).in_class) fail(c.id, "pattern");

  if (c.claims.sap) check_property_claim(c, StrongProperty::SAP, *c.claims.sap);
  if (c.claims.ssp) check_property_claim(c, StrongProperty::SSP, *c.claims.ssp);
  if (c.claims.smp) check_property_claim(c, StrongProperty::SMP, *c.claims.smp);
  if (c.claims.q && q_exact(c.matrix) != *c.claims.q) fail(c.id, "q");

  if (c.claims.spectrum) {
    const auto& sp = c.claims.spectrum->values;
    int n = c.matrix.rows();
    int total = 0;
    for (size_t i = 0; i < sp.size(); ++i) {
      if (sp[i].second < 1) fail(c.id, "spectrum");
      if (i > 0 && !(sp[i - 1].first < sp[i].first)) fail(c.id, "spectrum ascending");
      total += sp[i].second;
    }
    if (total != n) fail(c.id, "spectrum multiplicities sum");
    // Geometric = algebraic multiplicity for symmetric matrices, so
    // rank(A - lambda I) pins each multiplicity exactly.
    for (const auto& [lambda, mult] : sp) {
      ExactMatrix shifted = c.matrix - (lambda * ExactMatrix::identity(n));
      if (rank_exact(shifted) != n - mult) fail(c.id, "spectrum eigenvalue " + lambda.to_string());
    }
    if (c.claims.q && static_cast<int>(sp.size()) != *c.claims.q) fail(c.id, "spectrum vs q");
    if (c.claims.multiplicity_list) {
      std::vector<int> mults;
      for (const auto& [lambda, mult] : sp) mults.push_back(mult);
      if (mults != *c.claims.multiplicity_list) fail(c.id, "multiplicity_list");
    }
  } else if (c.claims.multiplicity_list) {
    fail(c.id, "multiplicity_list requires a spectrum claim");
  }

  if (c.witness) {
    StrongProperty prop = StrongProperty::SSP;
    if (c.claims.smp && !*c.claims.smp)
      prop = StrongProperty::SMP;
    else if (c.claims.ssp && !*c.claims.ssp)
      prop = StrongProperty::SSP;
    else if (c.claims.sap && !*c.claims.sap)
      prop = StrongProperty::SAP;
    else
      fail(c.id, "witness without a failed property claim");
    if (!witness_is_valid(c.matrix, c.graph, prop, *c.witness)) fail(c.id, "witness validity");
    if (c.witness_spans_nullspace) {
      StrongPropertyReport rep = verify_by_definition(c.matrix, c.graph, prop);
      if (rep.rank != rep.p - 1 || !rep.witness) fail(c.id, "witness nullspace dimension");
      // Proportionality: recovered witness times alpha equals the stored one.
      const ExactMatrix& found = *rep.witness;
      ExactScalar alpha;
      bool have = false;
      for (int i = 0; i < found.rows() && !have; ++i)
        for (int j = 0; j < found.cols() && !have; ++j)
          if (!found.at(i, j).is_zero()) {
            alpha = c.witness->at(i, j) / found.at(i, j);
            have = true;
          }
      if (!have || !(alpha * found == *c.witness)) fail(c.id, "witness proportionality");
    }
  }
}

Certificate flipped_cycle(int n) {
  if (n < 3) throw DomainError("flipped_cycle needs n >= 3");
  ExactMatrix c(n, n);
  for (int i = 0; i + 1 < n; ++i) c.at(i, i + 1) = ExactScalar(1);
  c.at(n - 1, 0) = ExactScalar(-1);
  ExactMatrix a = c + c.transpose();

  Certificate cert;
  cert.id = "flipped-cycle-" + std::to_string(n);
  cert.graph = cycle_graph(n);
  cert.matrix = a;
  cert.claims.q = (n + 1) / 2;
  cert.claims.smp = true;
  cert.claims.ssp = n <= 4;  // complete graph for n = 3; two eigenvalues for n = 4
  if (n >= 5) {
    ExactMatrix c2 = c * c;
    cert.witness = c2 + c2.transpose();
  }
  cert.provenance = "generator: flipped cycle of order " + std::to_string(n);
  verify_certificate(cert);
  return cert;
}

Certificate diag_distinct(const std::vector<ExactScalar>& lambda) {
  int n = static_cast<int>(lambda.size());
  if (n == 0) throw DomainError("diag_distinct needs at least one value");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lambda[i] == lambda[j])
        throw DistinctnessError("repeated diagonal value " + lambda[i].to_string() +
                                "; a diagonal matrix with a repeated eigenvalue lacks the SSP");
  Certificate cert;
  cert.id = "diag-distinct-" + std::to_string(n);
  cert.graph = Graph(n);
  cert.matrix = ExactMatrix(n, n);
  for (int i = 0; i < n; ++i) cert.matrix.at(i, i) = lambda[i];
  cert.claims.ssp = true;
  cert.claims.smp = true;
  cert.claims.q = n;
  SpectrumClaim sp;
  std::vector<ExactScalar> sorted = lambda;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& v : sorted) sp.values.emplace_back(v, 1);
  cert.claims.spectrum = sp;
  cert.provenance = "generator: distinct diagonal";
  verify_certificate(cert);
  return cert;
}

Certificate certificate_direct_sum(const Certificate& c1, const Certificate& c2) {
  Certificate cert;
  cert.id = c1.id + "+" + c2.id;
  cert.graph = c1.graph.disjoint_union(c2.graph);
  cert.matrix = direct_sum(c1.matrix, c2.matrix);
  cert.provenance = "generator: direct sum of " + c1.id + " and " + c2.id;

  int q1 = c1.claims.q ? *c1.claims.q : q_exact(c1.matrix);
  int q2 = c2.claims.q ? *c2.claims.q : q_exact(c2.matrix);
  int qsum = q_exact(cert.matrix);
  bool disjoint = qsum == q1 + q2;
  cert.claims.q = qsum;
  if (disjoint) {
    if (c1.claims.ssp && *c1.claims.ssp && c2.claims.ssp && *c2.claims.ssp)
      cert.claims.ssp = true;
    if (c1.claims.smp && *c1.claims.smp && c2.claims.smp && *c2.claims.smp)
      cert.claims.smp = true;
    if (c1.claims.spectrum && c2.claims.spectrum) {
      SpectrumClaim sp;
      auto merged = c1.claims.spectrum->values;
      merged.insert(merged.end(), c2.claims.spectrum->values.begin(),
                    c2.claims.spectrum->values.end());
      std::sort(merged.begin(), merged.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      sp.values = merged;
      cert.claims.spectrum = sp;
    }
  }
  verify_certificate(cert);
  return cert;
}

std::string default_corpus_path() {
  if (const char* env = std::getenv("STRONGPROPS_CORPUS")) return env;
#ifdef STRONGQ_DEFAULT_CORPUS
  return STRONGQ_DEFAULT_CORPUS;
#else
  return "data/corpus.json";
#endif
}

namespace {

ExactMatrix matrix_from_entries(int n, const nlohmann::json& entries) {
  if (!entries.is_array() || entries.size() != size_t(n) * n)
    throw ParseError("certificate entries must be a flat array of n*n strings");
  ExactMatrix m(n, n);
  size_t k = 0;
  for (const auto& e : entries) {
    m.at(int(k / n), int(k % n)) = ExactScalar::parse(e.get<std::string>());
    ++k;
  }
  return m;
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.id = j.at("id").get<std::string>();
  int n = j.at("n").get<int>();
  c.graph = Graph(n);
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError("certificate '" + c.id + "': edge label out of range");
    c.graph.add_edge(u - 1, v - 1);
  }
  c.matrix = matrix_from_entries(n, j.at("entries"));
  if (j.contains("d")) {
    auto declared = j.at("d").get<std::uint64_t>();
    if (declared != c.matrix.radicand())
      throw ParseError("certificate '" + c.id + "': declared radicand d=" +
                       std::to_string(declared) + " does not match the entries");
  }
  if (j.contains("claims")) {
    const auto& cl = j.at("claims");
    if (cl.contains("sap")) c.claims.sap = cl.at("sap").get<bool>();
    if (cl.contains("ssp")) c.claims.ssp = cl.at("ssp").get<bool>();
    if (cl.contains("smp")) c.claims.smp = cl.at("smp").get<bool>();
    if (cl.contains("q")) c.claims.q = cl.at("q").get<int>();
    if (cl.contains("spectrum")) {
      SpectrumClaim sp;
      for (const auto& pair : cl.at("spectrum"))
        sp.values.emplace_back(ExactScalar::parse(pair.at(0).get<std::string>()),
                               pair.at(1).get<int>());
      c.claims.spectrum = sp;
    }
    if (cl.contains("multiplicity_list"))
      c.claims.multiplicity_list = cl.at("multiplicity_list").get<std::vector<int>>();
  }
  if (j.contains("witness") && !j.at("witness").is_null())
    c.witness = matrix_from_entries(n, j.at("witness"));
  if (j.contains("witness_spans_nullspace"))
    c.witness_spans_nullspace = j.at("witness_spans_nullspace").get<bool>();
  if (j.contains("provenance")) c.provenance = j.at("provenance").get<std::string>();
  return c;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["n"] = c.graph.order();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : c.graph.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = edges;
  auto entries = nlohmann::ordered_json::array();
  for (int i = 0; i < c.matrix.rows(); ++i)
    for (int k = 0; k < c.matrix.cols(); ++k) entries.push_back(c.matrix.at(i, k).to_string());
  j["entries"] = entries;
  j["d"] = c.matrix.radicand();
  nlohmann::ordered_json claims = nlohmann::ordered_json::object();
  if (c.claims.sap) claims["sap"] = *c.claims.sap;
  if (c.claims.ssp) claims["ssp"] = *c.claims.ssp;
  if (c.claims.smp) claims["smp"] = *c.claims.smp;
  if (c.claims.q) claims["q"] = *c.claims.q;
  if (c.claims.spectrum) {
    auto sp = nlohmann::ordered_json::array();
    for (const auto& [v, m] : c.claims.spectrum->values) sp.push_back({v.to_string(), m});
    claims["spectrum"] = sp;
  }
  if (c.claims.multiplicity_list) claims["multiplicity_list"] = *c.claims.multiplicity_list;
  j["claims"] = claims;
  if (c.witness) {
    auto w = nlohmann::ordered_json::array();
    for (int i = 0; i < c.witness->rows(); ++i)
      for (int k = 0; k < c.witness->cols(); ++k) w.push_back(c.witness->at(i, k).to_string());
    j["witness"] = w;
    j["witness_spans_nullspace"] = c.witness_spans_nullspace;
  }
  j["provenance"] = c.provenance;
  return j;
}

std::vector<Certificate> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("corpus JSON error in '" + path + "': " + e.what());
  }
  std::vector<Certificate> corpus;
  for (const auto& cj : j.at("certificates")) {
    Certificate c = certificate_from_json(cj);
    verify_certificate(c);
    corpus.push_back(std::move(c));
  }
  return corpus;
}

const Certificate& find_certificate(const std::vector<Certificate>& corpus,
                                    const std::string& id) {
  for (const auto& c : corpus)
    if (c.id == id) return c;
  throw DomainError("no certificate with id '" + id + "' in the corpus");
}

}  // namespace strongq
