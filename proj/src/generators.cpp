#include "complab/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>
#include <vector>

#include "complab/error.hpp"
#include "complab/sink_analysis.hpp"

namespace complab {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& s : s_) s = sm.next();
}

std::uint64_t Xoshiro256StarStar::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256StarStar::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "bound must be >= 1");
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x <= limit) return x % bound;
  }
}

double Xoshiro256StarStar::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string_view to_string(GenMode mode) {
  switch (mode) {
    case GenMode::Uniform: return "uniform";
    case GenMode::Acyclic: return "acyclic";
    case GenMode::Sinkless: return "sinkless";
  }
  return "uniform";
}

GenMode parse_gen_mode(std::string_view text) {
  if (text == "uniform") return GenMode::Uniform;
  if (text == "acyclic") return GenMode::Acyclic;
  if (text == "sinkless") return GenMode::Sinkless;
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

namespace {

void require_parts(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw Error(ErrorCode::InvalidArgument, "part sizes must be >= 1");
}

std::vector<std::string> part_labels(std::size_t n1, std::size_t n2) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n1; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= n2; ++j) labels.push_back("y" + std::to_string(j));
  return labels;
}

BipartiteTournament assemble(std::size_t n1, std::size_t n2, const std::vector<Arc>& arcs,
                             std::vector<std::string> labels) {
  const std::size_t n = n1 + n2;
  VertexSet p1(n);
  for (std::size_t i = 0; i < n1; ++i) p1.set(i);
  VertexSet p2 = p1.complement();
  return validate_bipartite_tournament(Digraph(n, arcs, std::move(labels)), p1, p2);
}

// Orientation of cross pair (i, j): true means x_i -> y_j.
template <class Orient>
BipartiteTournament build(std::size_t n1, std::size_t n2, Orient&& orient) {
  std::vector<Arc> arcs;
  arcs.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      if (orient(i, j)) {
        arcs.push_back({i, n1 + j});
      } else {
        arcs.push_back({n1 + j, i});
      }
    }
  }
  return assemble(n1, n2, arcs, part_labels(n1, n2));
}

}  // namespace

BipartiteTournament orientation_from_mask(std::size_t n1, std::size_t n2, std::uint64_t mask) {
  require_parts(n1, n2);
  return build(n1, n2, [&](std::size_t i, std::size_t j) { return (mask >> (i * n2 + j)) & 1U; });
}

BipartiteTournament random_bipartite_tournament(const GenSpec& spec) {
  require_parts(spec.n1, spec.n2);
  Xoshiro256StarStar rng(spec.seed);
  return build(spec.n1, spec.n2, [&](std::size_t, std::size_t) { return rng.coin(); });
}

BipartiteTournament random_acyclic_bipartite_tournament(const GenSpec& spec) {
  require_parts(spec.n1, spec.n2);
  Xoshiro256StarStar rng(spec.seed);
  const std::size_t n = spec.n1 + spec.n2;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t k = n; k > 1; --k) {
    std::swap(order[k - 1], order[rng.below(k)]);
  }
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
  return build(spec.n1, spec.n2, [&](std::size_t i, std::size_t j) {
    return position[i] < position[spec.n1 + j];
  });
}

BipartiteTournament random_sinkless_bipartite_tournament(const GenSpec& spec,
                                                         std::size_t max_retries) {
  require_parts(spec.n1, spec.n2);
  if (spec.n1 < 2 || spec.n2 < 2) {
    throw Error(ErrorCode::InfeasibleParts,
                "a bipartite tournament with a part of size 1 always has a sink");
  }
  Xoshiro256StarStar rng(spec.seed);
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    auto bt = build(spec.n1, spec.n2, [&](std::size_t, std::size_t) { return rng.coin(); });
    if (sinks(bt.digraph()).none()) return bt;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no sinkless orientation after " + std::to_string(max_retries) + " draws");
}

BipartiteTournament generate(const GenSpec& spec) {
  switch (spec.mode) {
    case GenMode::Uniform: return random_bipartite_tournament(spec);
    case GenMode::Acyclic: return random_acyclic_bipartite_tournament(spec);
    case GenMode::Sinkless: return random_sinkless_bipartite_tournament(spec);
  }
  return random_bipartite_tournament(spec);
}

Digraph random_digraph(std::size_t n, std::uint64_t seed, double arc_probability) {
  Xoshiro256StarStar rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.unit() < arc_probability) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

OrientationRange::OrientationRange(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2) {
  require_parts(n1, n2);
  if (n1 * n2 > kMaxEnumerationBits) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(n1) + "x" + std::to_string(n2) + " needs 2^" +
                    std::to_string(n1 * n2) + " orientations; enumeration is capped at 2^" +
                    std::to_string(kMaxEnumerationBits));
  }
}

OrientationRange enumerate_all(std::size_t n1, std::size_t n2) { return {n1, n2}; }

namespace {

BipartiteTournament from_labels(const std::vector<std::string>& part1,
                                const std::vector<std::string>& part2,
                                const std::vector<std::pair<std::string, std::string>>& arcs) {
  std::vector<std::string> labels = part1;
  labels.insert(labels.end(), part2.begin(), part2.end());
  auto index = [&](const std::string& l) {
    return static_cast<Vertex>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Arc> out;
  for (const auto& [from, to] : arcs) out.push_back({index(from), index(to)});
  return assemble(part1.size(), part2.size(), out, labels);
}

}  // namespace

std::map<std::string, BipartiteTournament> fixtures() {
  std::map<std::string, BipartiteTournament> out;
  const std::vector<std::string> xs = {"x1", "x2", "x3"};
  const std::vector<std::string> ys = {"y1", "y2", "y3"};
  out.emplace("fig1_D", from_labels(xs, ys,
                                    {{"x1", "y1"}, {"x1", "y2"}, {"x1", "y3"},
                                     {"y1", "x2"}, {"y2", "x2"}, {"x2", "y3"},
                                     {"y1", "x3"}, {"y2", "x3"}, {"x3", "y3"}}));
  out.emplace("fig1_Dprime", from_labels(xs, ys,
                                         {{"x1", "y1"}, {"y2", "x1"}, {"x1", "y3"},
                                          {"y1", "x2"}, {"x2", "y2"}, {"x2", "y3"},
                                          {"y1", "x3"}, {"y2", "x3"}, {"x3", "y3"}}));
  out.emplace("fig2_D", from_labels({"a", "b", "c"}, {"d", "e", "f"},
                                    {{"a", "d"}, {"e", "a"}, {"a", "f"},
                                     {"d", "b"}, {"b", "e"}, {"b", "f"},
                                     {"c", "d"}, {"e", "c"}, {"f", "c"}}));
  return out;
}

BipartiteTournament fixture(std::string_view name) {
  auto all = fixtures();
  auto it = all.find(std::string(name));
  if (it == all.end()) {
    throw Error(ErrorCode::UnknownFixture,
                "unknown fixture '" + std::string(name) + "' (fig1_D, fig1_Dprime, fig2_D)");
  }
  return it->second;
}

}  // namespace complab
