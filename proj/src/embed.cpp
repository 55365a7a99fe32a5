#include "raag/embed.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace raag {

namespace {

void require_triangle_free(const Graph& g, const char* which) {
  if (auto t = find_triangle(g)) {
    std::ostringstream out;
    out << which << " has a triangle {" << g.name((*t)[0]) << ", " << g.name((*t)[1]) << ", "
        << g.name((*t)[2]) << "}; only girth>3 inputs are supported";
    throw UnsupportedInput(out.str());
  }
}

// Rebuild a modular-domain normal form over (psi, infinite), exponents read
// verbatim. Reduced words stay reduced and canonical across this lift.
NormalForm lift_to_infinite(const NormalForm& nf, const Group& inf_group) {
  return reduce(Word(inf_group, nf.syllables()));
}

EmbeddingCertificate make_certificate(const Graph& phi, const Graph& psi, int ell,
                                      std::vector<Hyperplane> hyperplanes) {
  Group inf(psi, ExponentDomain::infinite());
  EmbeddingCertificate cert{phi, psi, ell, std::move(hyperplanes), {}};
  cert.basis.reserve(cert.hyperplanes.size());
  for (const auto& h : cert.hyperplanes) {
    NormalForm rep = lift_to_infinite(h.rep, inf);
    std::vector<Syllable> body = rep.syllables();
    body.push_back({h.gen, ell});
    NormalForm inv = invert(rep.word());
    body.insert(body.end(), inv.syllables().begin(), inv.syllables().end());
    cert.basis.push_back(reduce(Word(inf, std::move(body))));
  }
  return cert;
}

}  // namespace

EmbeddingAnswer embed_search(const Graph& phi, const Graph& psi, std::optional<int> max_radius,
                             int threads) {
  require_triangle_free(phi, "phi");
  require_triangle_free(psi, "psi");

  EmbeddingAnswer ans;
  ans.radius_bound = 8LL * psi.vertex_count() * phi.vertex_count();

  // Step 0: induced subgraph of psi itself gives a generator certificate.
  if (auto m = find_induced_subgraph(phi, psi)) {
    Group modular(psi, phi.vertex_count() >= 2
                           ? ExponentDomain::modular(phi.vertex_count())
                           : ExponentDomain::modular(2));
    std::vector<Hyperplane> hs;
    for (int v : *m) hs.push_back({v, identity(modular)});
    ans.verdict = Verdict::Yes;
    ans.certificate = make_certificate(phi, psi, std::max(phi.vertex_count(), 1), std::move(hs));
    ans.found_radius = 0;
    return ans;
  }

  const std::int64_t limit =
      std::min<std::int64_t>(ans.radius_bound, max_radius ? *max_radius : ans.radius_bound);
  const int ell = phi.vertex_count();  // >= 2 here: smaller phi hits step 0 or an empty psi
  for (int r = 1; r <= limit; ++r) {
    Group modular(psi, ExponentDomain::modular(ell));
    Ball b = ball(modular, r);
    std::vector<Hyperplane> hs = hyperplanes_of_ball(b);
    CrossingGraph cg = crossing_graph(hs, threads);
    if (auto m = find_induced_subgraph(phi, cg.graph)) {
      std::vector<Hyperplane> image;
      for (int idx : *m) image.push_back(cg.hyperplanes[idx]);
      ans.verdict = Verdict::Yes;
      ans.certificate = make_certificate(phi, psi, ell, std::move(image));
      ans.found_radius = r;
      ans.searched_radius = r;
      return ans;
    }
    ans.searched_radius = r;
  }
  ans.verdict = ans.searched_radius >= ans.radius_bound ? Verdict::No : Verdict::Undecided;
  return ans;
}

VerificationReport verify_certificate(const EmbeddingCertificate& cert, int sample_budget,
                                      std::uint64_t seed) {
  VerificationReport rep;
  const int n = cert.phi.vertex_count();

  // (a) well-formedness: one wall and one basis word per phi vertex, valid
  // generators, canonical reps, distinct walls.
  rep.wellformed = true;
  if (static_cast<int>(cert.hyperplanes.size()) != n ||
      static_cast<int>(cert.basis.size()) != n) {
    rep.wellformed = false;
    rep.messages.push_back("wall or basis count differs from |V(phi)|");
  }
  if (rep.wellformed && n > 0) {
    Group modular(cert.psi, ExponentDomain::modular(std::max(cert.ell, 2)));
    std::unordered_set<std::string> seen;
    for (int i = 0; i < n && rep.wellformed; ++i) {
      const Hyperplane& h = cert.hyperplanes[i];
      if (h.gen < 0 || h.gen >= cert.psi.vertex_count()) {
        rep.wellformed = false;
        rep.messages.push_back("wall generator out of range");
        break;
      }
      if (cert.ell < 2 && !h.rep.is_identity()) {
        rep.wellformed = false;
        rep.messages.push_back("nontrivial rep with ell < 2");
        break;
      }
      NormalForm rep_in_mod = reduce(Word(modular, h.rep.syllables()));
      Hyperplane canon = canonical_hyperplane(rep_in_mod.word(), h.gen);
      if (canon.rep != rep_in_mod) {
        rep.wellformed = false;
        rep.messages.push_back("rep of " + to_string(h) + " is not the minimal coset representative");
        break;
      }
      if (!seen.insert(to_string(h)).second) {
        rep.wellformed = false;
        rep.messages.push_back("duplicate wall " + to_string(h));
        break;
      }
    }
  }

  // (b) structural certificate: transversality is exactly phi adjacency.
  rep.structural = rep.wellformed;
  if (rep.structural && n > 0) {
    Group modular(cert.psi, ExponentDomain::modular(std::max(cert.ell, 2)));
    std::vector<Hyperplane> walls;
    walls.reserve(n);
    for (const auto& h : cert.hyperplanes)
      walls.push_back({h.gen, reduce(Word(modular, h.rep.syllables()))});
    for (int i = 0; i < n && rep.structural; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool t = transverse(walls[i], walls[j]);
        if (t != cert.phi.adjacent(i, j)) {
          rep.structural = false;
          rep.messages.push_back("walls " + to_string(walls[i]) + " and " + to_string(walls[j]) +
                                 (t ? " are transverse but " : " are not transverse but ") +
                                 cert.phi.name(i) + (cert.phi.adjacent(i, j) ? "-" : " !-") +
                                 cert.phi.name(j) + " in phi");
          break;
        }
      }
  }

  // (c) relation check: basis words of phi-adjacent pairs commute.
  rep.relations = rep.wellformed;
  if (rep.relations && n > 0) {
    for (auto [i, j] : cert.phi.edges()) {
      if (multiply(cert.basis[i].word(), cert.basis[j].word()) !=
          multiply(cert.basis[j].word(), cert.basis[i].word())) {
        rep.relations = false;
        rep.messages.push_back("basis words for edge " + cert.phi.name(i) + "-" +
                               cert.phi.name(j) + " do not commute");
        break;
      }
    }
  }

  // (d) falsification sampler: random nontrivial reduced words over phi must
  // evaluate to nontrivial elements of A(psi).
  rep.sampling = rep.wellformed;
  if (rep.sampling && n > 0 && sample_budget > 0) {
    Group phi_group(cert.phi, ExponentDomain::infinite());
    Group psi_group(cert.psi, ExponentDomain::infinite());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<int> gen_dist(0, n - 1);
    std::uniform_int_distribution<int> exp_dist(-3, 3);
    for (int it = 0; it < sample_budget; ++it) {
      std::vector<Syllable> sylls;
      const int len = len_dist(rng);
      for (int k = 0; k < len; ++k) {
        int e = exp_dist(rng);
        if (e == 0) e = 1;
        sylls.push_back({gen_dist(rng), e});
      }
      NormalForm w_phi = reduce(Word(phi_group, sylls));
      if (w_phi.is_identity()) continue;
      std::vector<Syllable> image;
      for (const auto& s : w_phi.syllables()) {
        NormalForm piece = power(cert.basis[s.gen].word(), s.exp);
        image.insert(image.end(), piece.syllables().begin(), piece.syllables().end());
      }
      ++rep.samples_run;
      if (reduce(Word(psi_group, std::move(image))).is_identity()) {
        rep.sampling = false;
        rep.messages.push_back("nontrivial phi word " + to_string(w_phi) +
                               " evaluates to the identity");
        break;
      }
    }
  }
  return rep;
}

std::pair<Graph, EmbeddingCertificate> star_double(const Graph& gamma, int u) {
  if (u < 0 || u >= gamma.vertex_count()) throw std::out_of_range("star_double: unknown vertex");
  VertexSet st = star(gamma, u);

  std::vector<std::string> names = gamma.names();
  std::vector<int> copy2(gamma.vertex_count(), -1);  // image of v in the second copy
  std::unordered_set<std::string> used(names.begin(), names.end());
  for (int v = 0; v < gamma.vertex_count(); ++v) {
    if (st.contains(v)) {
      copy2[v] = v;
      continue;
    }
    std::string nm = gamma.name(v) + "_2";
    while (!used.insert(nm).second) nm += "_";
    copy2[v] = static_cast<int>(names.size());
    names.push_back(nm);
  }
  std::vector<std::pair<int, int>> edges = gamma.edges();
  {
    std::unordered_set<std::int64_t> seen;
    for (auto [a, b] : edges)
      seen.insert(static_cast<std::int64_t>(std::min(a, b)) * 1000000 + std::max(a, b));
    for (auto [a, b] : gamma.edges()) {
      int x = copy2[a], y = copy2[b];
      auto key = static_cast<std::int64_t>(std::min(x, y)) * 1000000 + std::max(x, y);
      if (seen.insert(key).second) edges.emplace_back(x, y);
    }
  }
  Graph amalgam(names, edges);

  const int ell = amalgam.vertex_count();
  Group modular(gamma, ExponentDomain::modular(std::max(ell, 2)));
  Group inf(gamma, ExponentDomain::infinite());
  EmbeddingCertificate cert{amalgam, gamma, ell, {}, {}};
  cert.hyperplanes.assign(amalgam.vertex_count(), Hyperplane{});
  cert.basis.assign(amalgam.vertex_count(), NormalForm{});
  for (int v = 0; v < gamma.vertex_count(); ++v) {
    // first copy: wall J_v; pivot gets the even generator u^2 of the Z/2 kernel
    cert.hyperplanes[v] = {v, identity(modular)};
    cert.basis[v] = v == u ? power(Word(inf, {{u, 1}}), 2) : reduce(Word(inf, {{v, 1}}));
    if (!st.contains(v)) {
      // second copy: wall u J_v, basis u v u^-1
      cert.hyperplanes[copy2[v]] = {v, reduce(Word(modular, {{u, 1}}))};
      cert.basis[copy2[v]] = conjugate(Word(inf, {{u, 1}}), Word(inf, {{v, 1}}));
    }
  }
  return {amalgam, cert};
}

bool cycle_embedding_rule(int p, int q) {
  if (p < 5 || q < 5) throw std::invalid_argument("cycle_embedding_rule: cycles of girth>3 need p, q >= 5");
  return (p - 4) % (q - 4) == 0;
}

bool forest_rule(const Graph& gamma) {
  // acyclic iff every component has |E| = |V| - 1; DFS cycle check
  std::vector<int> parent(gamma.vertex_count(), -2);
  for (int root = 0; root < gamma.vertex_count(); ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : gamma.neighbors(v)) {
        if (w == parent[v]) continue;
        if (parent[w] != -2) return false;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return true;
}

namespace {
std::string graph_one_line(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& nm : g.names()) out << ' ' << nm;
  for (auto [u, v] : g.edges()) out << " ; edge: " << g.name(u) << ' ' << g.name(v);
  return out.str();
}

Graph parse_graph_one_line(const std::string& body) {
  std::string multiline;
  std::size_t start = 0;
  for (;;) {
    auto pos = body.find(" ; ", start);
    multiline += body.substr(start, pos == std::string::npos ? pos : pos - start);
    multiline += '\n';
    if (pos == std::string::npos) break;
    start = pos + 3;
  }
  return parse_graph(multiline);
}
}  // namespace

std::string to_string(const EmbeddingCertificate& cert) {
  std::ostringstream out;
  out << "phi: " << graph_one_line(cert.phi) << '\n';
  out << "psi: " << graph_one_line(cert.psi) << '\n';
  out << "ell: " << cert.ell << '\n';
  for (int i = 0; i < cert.phi.vertex_count(); ++i) {
    out << "map: " << cert.phi.name(i) << " -> " << to_string(cert.hyperplanes[i]) << " ; basis "
        << to_string(cert.basis[i]) << '\n';
  }
  return out.str();
}

EmbeddingCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Graph> phi, psi;
  std::optional<int> ell;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> maps;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("phi: ", 0) == 0)
      phi = parse_graph_one_line(line.substr(5));
    else if (line.rfind("psi: ", 0) == 0)
      psi = parse_graph_one_line(line.substr(5));
    else if (line.rfind("ell: ", 0) == 0)
      ell = std::stoi(line.substr(5));
    else if (line.rfind("map: ", 0) == 0) {
      std::string body = line.substr(5);
      auto arrow = body.find(" -> ");
      auto semi = body.find(" ; basis ");
      if (arrow == std::string::npos || semi == std::string::npos || semi < arrow)
        throw ParseError(lineno, "malformed map: line");
      maps.push_back({body.substr(0, arrow),
                      {body.substr(arrow + 4, semi - arrow - 4), body.substr(semi + 9)}});
    } else {
      throw ParseError(lineno, "unrecognized certificate line");
    }
  }
  if (!phi || !psi || !ell) throw ParseError(0, "certificate missing phi:, psi: or ell: header");
  if (static_cast<int>(maps.size()) != phi->vertex_count())
    throw ParseError(0, "certificate must carry one map: line per phi vertex");

  Group modular(*psi, ExponentDomain::modular(std::max(*ell, 2)));
  Group inf(*psi, ExponentDomain::infinite());
  EmbeddingCertificate cert{*phi, *psi, *ell, {}, {}};
  cert.hyperplanes.assign(phi->vertex_count(), Hyperplane{});
  cert.basis.assign(phi->vertex_count(), NormalForm{});
  std::vector<char> got(phi->vertex_count(), 0);
  for (auto& [vname, parts] : maps) {
    auto idx = phi->index_of(vname);
    if (!idx) throw ParseError(0, "map: unknown phi vertex '" + vname + "'");
    if (got[*idx]) throw ParseError(0, "map: duplicate phi vertex '" + vname + "'");
    got[*idx] = 1;
    const std::string& hser = parts.first;
    auto bar = hser.rfind('|');
    if (bar == std::string::npos) throw ParseError(0, "malformed hyperplane '" + hser + "'");
    auto gen = psi->index_of(hser.substr(bar + 1));
    if (!gen) throw ParseError(0, "unknown wall generator in '" + hser + "'");
    std::string rep_text = hser.substr(0, bar);
    cert.hyperplanes[*idx] = {*gen, reduce(parse_word(rep_text, modular))};
    cert.basis[*idx] = reduce(parse_word(parts.second, inf));
  }
  return cert;
}

}  // namespace raag
