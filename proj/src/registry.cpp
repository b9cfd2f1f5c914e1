#include "equitile/registry.hpp"

#include <string>

namespace equitile {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ShapeRegistry::Nearest ShapeRegistry::nearest(const CongruenceSignature& s) const {
  Nearest best;
  const auto it = entries_.find(s.n());
  if (it == entries_.end()) return best;
  for (const CongruenceSignature& other : it->second) {
    const double d = signature_distance(s, other);
    if (d < best.distance) {
      best.distance = d;
      best.witness = &other;
    }
  }
  return best;
}

RegisterOutcome ShapeRegistry::probe(const Polygon& p) const {
  const CongruenceSignature sig = congruence_signature(p);
  const Nearest n = nearest(sig);
  if (n.witness != nullptr && n.distance <= delta_) return Conflict{*n.witness, n.distance};
  return Accepted{};
}

RegisterOutcome ShapeRegistry::register_shape(const Polygon& p) {
  CongruenceSignature sig = congruence_signature(p);
  const Nearest n = nearest(sig);
  if (n.witness != nullptr && n.distance <= delta_) return Conflict{*n.witness, n.distance};
  entries_[sig.n()].push_back(std::move(sig));
  ++count_;
  return Accepted{};
}

double ShapeRegistry::nearest_distance(const CongruenceSignature& s) const {
  return nearest(s).distance;
}

double ShapeRegistry::nearest_distance(const Polygon& p) const {
  return nearest_distance(congruence_signature(p));
}

bool ShapeRegistry::register_all(std::span<const Polygon> polygons) {
  std::vector<CongruenceSignature> sigs;
  sigs.reserve(polygons.size());
  for (const Polygon& p : polygons) {
    CongruenceSignature sig = congruence_signature(p);
    if (nearest(sig).distance <= delta_) return false;
    for (const CongruenceSignature& earlier : sigs) {
      if (signature_distance(sig, earlier) <= delta_) return false;
    }
    sigs.push_back(std::move(sig));
  }
  for (CongruenceSignature& sig : sigs) {
    const std::size_t n = sig.n();
    entries_[n].push_back(std::move(sig));
    ++count_;
  }
  return true;
}

Sample Avoider::sample(const CandidateGenerator& generator, std::span<const double> base,
                       std::span<const ParamInterval> box) {
  if (base.size() != box.size()) {
    throw Error(ErrorKind::InvalidParams, "parameter box dimension mismatch");
  }
  std::vector<double> param(base.begin(), base.end());
  for (int attempt = 1; attempt <= cfg_.max_retries; ++attempt) {
    if (attempt > 1) {
      for (std::size_t i = 0; i < param.size(); ++i) param[i] = rng_.uniform(box[i].lo, box[i].hi);
    }
    std::optional<std::vector<Polygon>> polys = generator(param);
    if (polys && registry_.register_all(*polys)) {
      return Sample{param, std::move(*polys), attempt};
    }
  }
  throw Error(ErrorKind::ExhaustedRetries,
              "no admissible parameter after " + std::to_string(cfg_.max_retries) + " tries");
}

Sample sample_avoiding(ShapeRegistry& registry, const AvoidanceConfig& cfg,
                       const CandidateGenerator& generator, std::span<const double> base,
                       std::span<const ParamInterval> box) {
  Avoider avoider(registry, cfg);
  return avoider.sample(generator, base, box);
}

}  // namespace equitile
