#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "strongq/graph_io.hpp"
#include "strongq/lifting.hpp"
#include "strongq/qbounds.hpp"
#include "strongq/report_json.hpp"
#include "strongq/spectra.hpp"

using namespace strongq;

namespace {

constexpr int kExitProved = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

struct GlobalOpts {
  std::string corpus_path;  // empty: default resolution (env var, then built-in)
  std::string out_path;
  std::string format = "text";
};

Graph load_graph_with_format(const std::string& path, const std::string& fmt) {
  if (fmt == "auto") return load_graph_file(path);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(),
                     fmt == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList);
}

std::vector<Certificate> open_corpus(const GlobalOpts& opts) {
  return opts.corpus_path.empty() ? load_corpus() : load_corpus(opts.corpus_path);
}

Certificate resolve_certificate(const std::string& ref, const GlobalOpts& opts) {
  if (ref.rfind("corpus:", 0) == 0) {
    auto corpus = open_corpus(opts);
    return find_certificate(corpus, ref.substr(7));
  }
  std::ifstream in(ref);
  if (!in) throw ParseError("cannot open certificate file '" + ref + "'");
  nlohmann::json j;
  in >> j;
  Certificate c = certificate_from_json(j);
  verify_certificate(c);
  return c;
}

void emit(const GlobalOpts& opts, const Json& j, const std::string& text) {
  std::string payload = opts.format == "json" ? j.dump(2) + "\n" : text;
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path);
    out << (opts.format == "json" ? payload : j.dump(2) + "\n");
    std::cout << text;
  } else {
    std::cout << payload;
  }
}

int verdict_exit(const StrongPropertyReport& rep) {
  if (rep.mode == VerifyMode::Exact) return rep.verdict ? kExitProved : kExitRefuted;
  double margin = rep.margin.value_or(0.0);
  if (rep.ambiguous || margin < 100.0) return kExitInconclusive;
  return rep.verdict ? kExitProved : kExitRefuted;
}

std::string describe(const StrongPropertyReport& rep) {
  std::string s = to_string(rep.property) + ": ";
  if (rep.mode == VerifyMode::Exact)
    s += rep.verdict ? "TRUE (proved, exact)" : "FALSE (refuted, exact witness attached)";
  else
    s += std::string(rep.verdict ? "TRUE" : "FALSE") + " (numerically indicated, margin " +
         (rep.margin ? json_number(*rep.margin).dump() : "n/a") + ")";
  s += "  [p=" + std::to_string(rep.p) + ", rank=" + std::to_string(rep.rank) + "]\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongq: strong-property verification, q(G) bounds and supergraph lifting "
               "for symmetric matrices described by graphs"};
  app.require_subcommand(1);

  GlobalOpts opts;
  std::string graph_format = "auto";
  bool full = false;
  app.add_option("--corpus", opts.corpus_path, "corpus file (default: env STRONGPROPS_CORPUS)");
  app.add_option("--out", opts.out_path, "write the JSON report to this path");
  app.add_option("--format", opts.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--graph-format", graph_format, "graph input format: auto|edge-list|graph6")
      ->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
  app.add_flag("--full", full, "include spectral projectors in float-mode reports");

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "decide SAP/SSP/SMP for a certificate");
  std::string property = "ssp", cert_ref, recheck_path, mode = "exact";
  double tol = 1e-9;
  bool definitional = false;
  verify->add_option("--property", property, "sap|ssp|smp")
      ->check(CLI::IsMember({"sap", "ssp", "smp"}));
  verify->add_option("--cert", cert_ref, "corpus:<id> or certificate JSON path");
  verify->add_option("--mode", mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--tol", tol, "float-mode rank tolerance");
  verify->add_flag("--definitional", definitional, "use the definitional nullspace route");
  verify->add_option("--recheck", recheck_path, "re-verify a stored report JSON");

  // gersh -------------------------------------------------------------------
  auto* gersh = app.add_subcommand("gersh", "Gershgorin sufficient test for the SSP");
  std::string gersh_cert;
  gersh->add_option("--cert", gersh_cert, "corpus:<id> or certificate JSON path")->required();

  // bounds ------------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "lower/upper bounds on q(G)");
  std::string graph_path;
  std::optional<int> opt_m, opt_mplus, opt_cc;
  bool brute = false;
  bounds->add_option("--graph", graph_path, "edge list or .g6 file")->required();
  bounds->add_option("--M", opt_m, "maximum nullity (user supplied)");
  bounds->add_option("--Mplus", opt_mplus, "PSD maximum nullity (user supplied)");
  bounds->add_option("--clique-cover", opt_cc, "clique cover number (user supplied)");
  bounds->add_flag("--brute-force-params", brute,
                   "search for M / M+ at desk scale (non-exhaustive)");

  // classify ----------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "high-q classification of a graph");
  std::string classify_path;
  classify->add_option("--graph", classify_path, "edge list or .g6 file")->required();

  // corpus ------------------------------------------------------------------
  auto* corpus_cmd = app.add_subcommand("corpus", "inspect the certificate corpus");
  bool do_list = false, do_check = false;
  std::string export_id;
  corpus_cmd->add_flag("--list", do_list, "list certificate ids");
  corpus_cmd->add_flag("--check", do_check, "reload and re-verify every claim");
  corpus_cmd->add_option("--export", export_id, "print one certificate as JSON");

  // lift --------------------------------------------------------------------
  auto* lift = app.add_subcommand("lift", "lift a certificate to a supergraph");
  std::string seed_ref, supergraph_path, lift_mode = "spectrum";
  double t_target = 0.0, newton_tol = 1e-10;
  int steps = 16;
  std::vector<double> extra;
  lift->add_option("--seed", seed_ref, "corpus:<id> or certificate JSON path")->required();
  lift->add_option("--supergraph", supergraph_path, "target graph file")->required();
  lift->add_option("--mode", lift_mode, "spectrum|multiplicity")
      ->check(CLI::IsMember({"spectrum", "multiplicity"}));
  lift->add_option("--t-target", t_target, "magnitude of the new-edge entries");
  lift->add_option("--steps", steps, "continuation steps");
  lift->add_option("--tol", newton_tol, "Newton tolerance");
  lift->add_option("--extra", extra,
                   "extra eigenvalues when the supergraph has more vertices");

  for (auto* sub : {verify, gersh, bounds, classify, corpus_cmd, lift}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (!recheck_path.empty()) {
        std::ifstream in(recheck_path);
        if (!in) throw ParseError("cannot open report '" + recheck_path + "'");
        Json stored;
        in >> stored;
        StrongPropertyReport rep = recheck_report(stored);
        emit(opts, to_json(rep), "recheck OK: " + describe(rep));
        return verdict_exit(rep);
      }
      if (cert_ref.empty()) {
        std::cerr << "verify needs --cert or --recheck\n";
        return kExitUsage;
      }
      Certificate cert = resolve_certificate(cert_ref, opts);
      StrongProperty prop = property_from_string(property);
      StrongPropertyReport rep;
      Json report;
      if (definitional && mode == "float")
        throw ExactOnlyError("the definitional route needs exact arithmetic; drop --mode float");
      if (mode == "float") {
        Eigen::MatrixXd a = cert.matrix.to_double();
        switch (prop) {
          case StrongProperty::SAP: rep = verify_sap(a, cert.graph, tol); break;
          case StrongProperty::SSP: rep = verify_ssp(a, cert.graph, tol); break;
          case StrongProperty::SMP: rep = verify_smp(a, cert.graph, tol); break;
        }
        report = verification_report(rep, a, cert.graph);
        report["spectral"] = to_json(eig_cluster(a), full);
      } else {
        rep = definitional ? verify_by_definition(cert.matrix, cert.graph, prop)
                           : verify_property(prop, cert.matrix, cert.graph);
        report = verification_report(rep, cert.matrix, cert.graph);
      }
      emit(opts, report, cert.id + " " + describe(rep));
      return verdict_exit(rep);
    }

    if (*gersh) {
      Certificate cert = resolve_certificate(gersh_cert, opts);
      GershgorinReport rep = gershgorin_ssp(cert.matrix);
      bool proved = rep.verdict == GershgorinVerdict::ProvedSSP;
      emit(opts, to_json(rep),
           cert.id + std::string(": ") +
               (proved ? "ProvedSSP (intersection graph sits inside the pattern)\n"
                       : "Inconclusive (this test never refutes the SSP)\n"));
      return proved ? kExitProved : kExitInconclusive;
    }

    if (*bounds) {
      Graph g = load_graph_with_format(graph_path, graph_format);
      GraphParams params;
      if (brute) params = brute_force_params(g);
      if (opt_m) {
        params.M = opt_m;
        params.m_source = Provenance::UserSupplied;
      }
      if (opt_mplus) {
        params.Mplus = opt_mplus;
        params.mplus_source = Provenance::UserSupplied;
      }
      if (opt_cc) {
        params.clique_cover_number = opt_cc;
        params.cc_source = Provenance::UserSupplied;
      }
      BoundReport rep = q_bounds(g, open_corpus(opts), params);
      std::string text = "q(G) in [" + std::to_string(rep.lower.value) + ", " +
                         std::to_string(rep.upper.value) + "]\n";
      for (const auto& r : rep.lower.rules)
        text += "  lower " + std::to_string(r.value) + "  [" + r.rule + "] " + r.detail + "\n";
      for (const auto& r : rep.upper.rules)
        text += "  upper " + std::to_string(r.value) + "  [" + r.rule + "] " + r.detail + "\n";
      emit(opts, to_json(rep), text);
      return kExitProved;
    }

    if (*classify) {
      Graph g = load_graph_with_format(classify_path, graph_format);
      Classification c = classify_high_q(g);
      std::string text = to_string(c.verdict) + " (family: " + to_string(c.family) + ")";
      if (c.verdict == HighQClass::QEqualsN) text += "  q = |G| (path)";
      if (c.witness) text += "  witness: " + c.witness->detail;
      emit(opts, to_json(c), text + "\n");
      return kExitProved;
    }

    if (*corpus_cmd) {
      auto corpus = open_corpus(opts);  // loading re-verifies every claim
      if (!export_id.empty()) {
        const Certificate& c = find_certificate(corpus, export_id);
        emit(opts, certificate_to_json(c), certificate_to_json(c).dump(2) + "\n");
        return kExitProved;
      }
      std::string text;
      if (do_list || !do_check)
        for (const auto& c : corpus)
          text += c.id + "  (n=" + std::to_string(c.graph.order()) + ")  " + c.provenance + "\n";
      if (do_check)
        text += "corpus check passed: " + std::to_string(corpus.size()) +
                " certificates verified\n";
      emit(opts, Json{{"count", corpus.size()}}, text);
      return kExitProved;
    }

    if (*lift) {
      Certificate seed = resolve_certificate(seed_ref, opts);
      Graph target = load_graph_with_format(supergraph_path, graph_format);
      LiftMode lm = lift_mode == "multiplicity" ? LiftMode::PreserveMultiplicityList
                                                : LiftMode::PreserveSpectrum;
      LiftResult res;
      if (target.order() > seed.graph.order() || !extra.empty()) {
        res = augment_and_lift(seed, target, extra, lm, t_target);
      } else {
        LiftProblem p;
        p.A = seed.matrix.to_double();
        p.g = seed.graph;
        p.gtilde = target;
        p.mode = lm;
        p.t_target = t_target;
        p.steps = steps;
        p.newton_tol = newton_tol;
        res = lm == LiftMode::PreserveSpectrum ? lift_ssp(p) : lift_smp(p);
      }
      std::string text = "lift OK: spectrum_error " + json_number(res.spectrum_error).dump() +
                         ", ssp margin " + json_number(res.ssp_margin).dump() + ", " +
                         std::to_string(res.path_log.size()) + " continuation steps\n";
      emit(opts, to_json(res), text);
      return kExitProved;
    }
  } catch (const RejectedSeedError& e) {
    std::cerr << "rejected seed: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const ContinuationError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ExactOnlyError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
