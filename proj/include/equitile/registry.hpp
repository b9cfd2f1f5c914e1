#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "equitile/geometry.hpp"
#include "equitile/signature.hpp"

namespace equitile {

/// Seeded stream of uniform doubles. Only the raw mt19937_64 output is used
/// (the standard fixes its sequence), so draws are identical on every
/// platform, unlike std::uniform_real_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives independent sub-seeds from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

struct Accepted {};
struct Conflict {
  CongruenceSignature witness;
  double distance;
};
using RegisterOutcome = std::variant<Accepted, Conflict>;

/// All shapes emitted so far in one generation run. Two shapes whose
/// signatures are within `delta` of each other count as congruent.
class ShapeRegistry {
 public:
  explicit ShapeRegistry(double delta = 1e-6) : delta_(delta) {}

  RegisterOutcome register_shape(const Polygon& p);
  /// Like register_shape but never stores anything.
  RegisterOutcome probe(const Polygon& p) const;
  double nearest_distance(const Polygon& p) const;
  double nearest_distance(const CongruenceSignature& s) const;

  /// Registers every polygon or none of them. Polygons are also checked
  /// against each other.
  bool register_all(std::span<const Polygon> polygons);

  double delta() const { return delta_; }
  std::size_t count() const { return count_; }
  const std::map<std::size_t, std::vector<CongruenceSignature>>& entries() const {
    return entries_;
  }

 private:
  struct Nearest {
    const CongruenceSignature* witness = nullptr;
    double distance = kSignatureInfinity;
  };
  Nearest nearest(const CongruenceSignature& s) const;

  double delta_;
  std::size_t count_ = 0;
  std::map<std::size_t, std::vector<CongruenceSignature>> entries_;
};

struct AvoidanceConfig {
  int max_retries = 100;
  std::uint64_t rng_seed = 0;
  double perturbation_scale = 1e-3;
};

struct ParamInterval {
  double lo;
  double hi;
};

/// Maps a parameter vector to the polygons it would emit, or nullopt when
/// the parameter is geometrically infeasible (counted as a failed try).
using CandidateGenerator =
    std::function<std::optional<std::vector<Polygon>>(std::span<const double>)>;

struct Sample {
  std::vector<double> parameter;
  std::vector<Polygon> polygons;
  int attempts = 0;
};

/// Rejection sampler bound to one registry and one random stream. The first
/// try uses the base parameter; later tries draw uniformly from the box.
class Avoider {
 public:
  Avoider(ShapeRegistry& registry, AvoidanceConfig cfg)
      : registry_(registry), cfg_(cfg), rng_(cfg.rng_seed) {
    if (cfg.max_retries < 1) throw Error(ErrorKind::InvalidParams, "max_retries must be >= 1");
  }

  /// Throws Error(ExhaustedRetries) after cfg.max_retries failed tries; the
  /// registry is left untouched in that case.
  Sample sample(const CandidateGenerator& generator, std::span<const double> base,
                std::span<const ParamInterval> box);

  /// Registers shapes that carry no free parameter; false on conflict.
  bool try_register(std::span<const Polygon> polygons) { return registry_.register_all(polygons); }

  ShapeRegistry& registry() { return registry_; }
  const AvoidanceConfig& config() const { return cfg_; }

 private:
  ShapeRegistry& registry_;
  AvoidanceConfig cfg_;
  Rng rng_;
};

/// One-shot form with a fresh random stream seeded from cfg.rng_seed.
Sample sample_avoiding(ShapeRegistry& registry, const AvoidanceConfig& cfg,
                       const CandidateGenerator& generator, std::span<const double> base,
                       std::span<const ParamInterval> box);

}  // namespace equitile
