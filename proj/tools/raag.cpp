// Command-line front door: normal forms, conjugacy, centralizers, crossing
// graphs, the girth>3 embedding search and certificate verification.
//
// Exit codes: 0 success / true, 1 false / negative, 2 input error,
// 3 undecided.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "raag/centralizer.hpp"
#include "raag/conjugacy.hpp"
#include "raag/embed.hpp"
#include "raag/qm.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUndecided = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw raag::ParseError(0, "cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

raag::Graph load_graph(const std::string& path) {
  try {
    return raag::parse_graph(read_file(path));
  } catch (const raag::ParseError& e) {
    throw raag::ParseError(e.line, path + ": " + e.what());
  }
}

raag::ExponentDomain domain_of(int ell) {
  if (ell == 0) return raag::ExponentDomain::infinite();
  return raag::ExponentDomain::modular(ell);
}

int default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

std::string describe(const raag::CentralizerDescription& d) {
  if (d.whole_group) return "whole group";
  std::ostringstream out;
  out << raag::to_string(d.conjugator) << " · (";
  bool first = true;
  for (const auto& f : d.factors) {
    out << (first ? " <" : " ⊕ <") << raag::to_string(f) << ">";
    first = false;
  }
  out << (first ? " <link:" : " ⊕ <link:");
  const raag::Graph* graph = nullptr;
  if (!d.factors.empty()) graph = &d.factors[0].group().graph();
  else graph = &d.conjugator.group().graph();
  first = true;
  for (int v : d.link_part) {
    out << (first ? " " : ", ") << graph->name(v);
    first = false;
  }
  out << "> ) · " << raag::to_string(raag::invert(d.conjugator.word()));
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computing in right-angled Artin groups and graph products of cyclic groups"};
  app.require_subcommand(1);

  std::string graph_path, graph_path2, word1, word2, phi_path, psi_path, cert_path, cert_out;
  int ell = 0;
  int radius = 0;
  int threads = default_threads();
  int sample_budget = 1000;
  int max_radius = -1;
  bool dot = false;

  auto* cmd_reduce = app.add_subcommand("reduce", "Canonical normal form of a word");
  cmd_reduce->add_option("-g,--graph", graph_path, "graph file")->required();
  cmd_reduce->add_option("word", word1, "word to reduce")->required();
  cmd_reduce->add_option("--ell", ell, "exponent modulus (0 = integers)");

  auto* cmd_equal = app.add_subcommand("equal", "Word problem: do two words represent the same element?");
  cmd_equal->add_option("-g,--graph", graph_path, "graph file")->required();
  cmd_equal->add_option("word1", word1)->required();
  cmd_equal->add_option("word2", word2)->required();
  cmd_equal->add_option("--ell", ell, "exponent modulus (0 = integers)");

  auto* cmd_conj = app.add_subcommand("conjugate", "Conjugacy test with witness");
  cmd_conj->add_option("-g,--graph", graph_path, "graph file")->required();
  cmd_conj->add_option("word1", word1)->required();
  cmd_conj->add_option("word2", word2)->required();

  auto* cmd_comm = app.add_subcommand("commute", "Commutation test");
  cmd_comm->add_option("-g,--graph", graph_path, "graph file")->required();
  cmd_comm->add_option("word1", word1)->required();
  cmd_comm->add_option("word2", word2)->required();

  auto* cmd_cent = app.add_subcommand("centralizer", "Centralizer description");
  cmd_cent->add_option("-g,--graph", graph_path, "graph file")->required();
  cmd_cent->add_option("word", word1)->required();

  auto* cmd_cross = app.add_subcommand("crossing-graph",
                                       "Crossing graph of the hyperplanes meeting a ball");
  cmd_cross->add_option("-g,--graph", graph_path, "graph file")->required();
  cmd_cross->add_option("--ell", ell, "exponent modulus (required, >= 2)");
  cmd_cross->add_option("--radius", radius, "ball radius")->required();
  cmd_cross->add_flag("--dot", dot, "also emit DOT");
  cmd_cross->add_option("--threads", threads, "worker cap");

  auto* cmd_embed = app.add_subcommand("embed", "Decide A(phi) -> A(psi) for girth>3 graphs");
  cmd_embed->add_option("phi", phi_path, "pattern graph file")->required();
  cmd_embed->add_option("psi", psi_path, "host graph file")->required();
  cmd_embed->add_option("--max-radius", max_radius, "cap on the search radius");
  cmd_embed->add_option("--sample-budget", sample_budget, "certificate sampling budget");
  cmd_embed->add_option("--certificate-out", cert_out, "write the certificate here");
  cmd_embed->add_option("--threads", threads, "worker cap");

  auto* cmd_verify = app.add_subcommand("verify", "Check an embedding certificate");
  cmd_verify->add_option("certificate", cert_path, "certificate file")->required();
  cmd_verify->add_option("--sample-budget", sample_budget, "sampling budget");

  auto* cmd_iso = app.add_subcommand("iso", "Graph isomorphism (= isomorphism of the RAAGs)");
  cmd_iso->add_option("graph1", graph_path)->required();
  cmd_iso->add_option("graph2", graph_path2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*cmd_reduce) {
      raag::Group g(load_graph(graph_path), domain_of(ell));
      std::cout << raag::to_string(raag::reduce(raag::parse_word(word1, g))) << "\n";
      return kExitTrue;
    }

    if (*cmd_equal) {
      raag::Group g(load_graph(graph_path), domain_of(ell));
      bool eq = raag::equal(raag::parse_word(word1, g), raag::parse_word(word2, g));
      std::cout << (eq ? "equal" : "distinct") << "\n";
      return eq ? kExitTrue : kExitFalse;
    }

    if (*cmd_conj) {
      raag::Group g(load_graph(graph_path), raag::ExponentDomain::infinite());
      raag::Word a = raag::parse_word(word1, g);
      raag::Word b = raag::parse_word(word2, g);
      auto witness = raag::conjugate_test(a, b);
      if (!witness) {
        std::cout << "not conjugate\n";
        return kExitFalse;
      }
      std::cout << "conjugate by " << raag::to_string(*witness) << "\n";
      return kExitTrue;
    }

    if (*cmd_comm) {
      raag::Group g(load_graph(graph_path), raag::ExponentDomain::infinite());
      bool c = raag::commutes(raag::parse_word(word1, g), raag::parse_word(word2, g));
      std::cout << (c ? "commute" : "do not commute") << "\n";
      return c ? kExitTrue : kExitFalse;
    }

    if (*cmd_cent) {
      raag::Group g(load_graph(graph_path), raag::ExponentDomain::infinite());
      std::cout << describe(raag::centralizer(raag::parse_word(word1, g))) << "\n";
      return kExitTrue;
    }

    if (*cmd_cross) {
      if (ell < 2)
        throw raag::ParseError(0, "crossing-graph needs --ell >= 2 (infinite balls are unbounded)");
      raag::Group g(load_graph(graph_path), raag::ExponentDomain::modular(ell));
      raag::Ball b = raag::ball(g, radius);
      raag::CrossingGraph cg = raag::crossing_graph(raag::hyperplanes_of_ball(b), threads);
      std::cout << raag::to_graph_file(cg.graph);
      if (dot) std::cout << raag::to_dot(cg.graph, &cg.labels);
      return kExitTrue;
    }

    if (*cmd_embed) {
      raag::Graph phi = load_graph(phi_path);
      raag::Graph psi = load_graph(psi_path);
      std::optional<int> cap;
      if (max_radius >= 0) cap = max_radius;
      raag::EmbeddingAnswer ans = raag::embed_search(phi, psi, cap, threads);
      switch (ans.verdict) {
        case raag::Verdict::Yes: {
          std::cout << "YES at radius " << ans.found_radius << "\n";
          std::string cert = raag::to_string(*ans.certificate);
          if (!cert_out.empty()) {
            std::ofstream out(cert_out);
            out << cert;
          } else {
            std::cout << cert;
          }
          raag::VerificationReport rep = raag::verify_certificate(*ans.certificate, sample_budget);
          std::cout << (rep.all_ok() ? "certificate verified\n" : "certificate FAILED verification\n");
          return rep.all_ok() ? kExitTrue : kExitInputError;
        }
        case raag::Verdict::No:
          std::cout << "NO (exhausted the certified radius bound " << ans.radius_bound << ")\n";
          return kExitFalse;
        case raag::Verdict::Undecided:
          std::cout << "UNDECIDED (searched radius " << ans.searched_radius << " of bound "
                    << ans.radius_bound << ")\n";
          return kExitUndecided;
      }
    }

    if (*cmd_verify) {
      raag::EmbeddingCertificate cert = raag::parse_certificate(read_file(cert_path));
      raag::VerificationReport rep = raag::verify_certificate(cert, sample_budget);
      std::cout << "wellformed: " << (rep.wellformed ? "pass" : "FAIL") << "\n";
      std::cout << "structural: " << (rep.structural ? "pass" : "FAIL") << "\n";
      std::cout << "relations:  " << (rep.relations ? "pass" : "FAIL") << "\n";
      std::cout << "sampling:   " << (rep.sampling ? "pass" : "FAIL") << " (" << rep.samples_run
                << " samples)\n";
      for (const auto& m : rep.messages) std::cout << "  " << m << "\n";
      return rep.structural_ok() ? kExitTrue : kExitFalse;
    }

    if (*cmd_iso) {
      raag::Graph g1 = load_graph(graph_path);
      raag::Graph g2 = load_graph(graph_path2);
      auto iso = raag::graph_isomorphic(g1, g2);
      if (!iso) {
        std::cout << "not isomorphic\n";
        return kExitFalse;
      }
      for (int v = 0; v < g1.vertex_count(); ++v)
        std::cout << g1.name(v) << " -> " << g2.name((*iso)[v]) << "\n";
      return kExitTrue;
    }
  } catch (const raag::UnsupportedInput& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kExitInputError;
  } catch (const raag::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
