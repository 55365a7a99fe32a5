#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/qm.hpp"

namespace raag {

// Input outside the algorithm's hypotheses (a triangle in phi or psi).
struct UnsupportedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkable witness that A(phi) embeds into A(psi): hyperplanes of
// QM_ell(psi) whose crossing graph is phi, plus basis words over
// (psi, infinite exponents). Indexed by phi vertex.
struct EmbeddingCertificate {
  Graph phi;
  Graph psi;
  int ell = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<NormalForm> basis;
};

enum class Verdict { Yes, No, Undecided };

struct EmbeddingAnswer {
  Verdict verdict = Verdict::Undecided;
  std::optional<EmbeddingCertificate> certificate;
  int found_radius = -1;            // radius of the YES hit (0 = subgraph shortcut)
  int searched_radius = 0;          // largest radius fully exhausted
  std::int64_t radius_bound = 0;    // 8 * |V(psi)| * |V(phi)|
};

// Girth>3 embedding search: induced-subgraph shortcut, then iterative
// deepening over crossing graphs of balls in QM_{|phi|}(psi).
EmbeddingAnswer embed_search(const Graph& phi, const Graph& psi,
                             std::optional<int> max_radius = std::nullopt, int threads = 1);

struct VerificationReport {
  bool wellformed = false;   // (a) map well-formed, reps canonical, walls distinct
  bool structural = false;   // (b) transversality matches phi adjacency exactly
  bool relations = false;    // (c) basis words of phi-edges commute
  bool sampling = false;     // (d) random reduced phi-words map to nontrivial elements
  int samples_run = 0;
  std::vector<std::string> messages;
  bool structural_ok() const { return wellformed && structural && relations; }
  bool all_ok() const { return structural_ok() && sampling; }
};

VerificationReport verify_certificate(const EmbeddingCertificate& cert, int sample_budget,
                                      std::uint64_t seed = 0x5eed5eedULL);

// Two copies of gamma glued along star(u), with the kernel basis of
// A(gamma) ->> Z/2 (u^2 for the pivot, v for the first copy, u v u^-1 for the
// second) as an embedding certificate.
std::pair<Graph, EmbeddingCertificate> star_double(const Graph& gamma, int u);

// A(C_p) embeds in A(C_q) iff (q-4) | (p-4); requires p, q >= 5.
bool cycle_embedding_rule(int p, int q);

// A(gamma) embeds in A(P4) iff gamma is a forest.
bool forest_rule(const Graph& gamma);

std::string to_string(const EmbeddingCertificate& cert);
EmbeddingCertificate parse_certificate(const std::string& text);

}  // namespace raag
