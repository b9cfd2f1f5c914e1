#pragma once

#include <vector>

#include "equitile/geometry.hpp"

namespace equitile {

struct SignatureEntry {
  double edge_length;     // edge leaving the vertex
  double interior_angle;  // radians, in (0, 2π)
};

/// Edge/angle sequence of a polygon, canonicalized over all cyclic rotations
/// and both traversal orientations, so that congruent polygons (reflections
/// included) share a signature up to rounding.
struct CongruenceSignature {
  std::vector<SignatureEntry> sequence;
  std::size_t n() const { return sequence.size(); }
};

/// Returned by signature_distance when vertex counts differ.
inline constexpr double kSignatureInfinity = 1e300;

CongruenceSignature congruence_signature(const Polygon& p);

/// Minimum over all cyclic alignments and both orientations of the largest
/// componentwise deviation (lengths and angles weighted equally).
double signature_distance(const CongruenceSignature& a, const CongruenceSignature& b);

}  // namespace equitile
