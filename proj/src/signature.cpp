#include "equitile/signature.hpp"

#include <algorithm>
#include <numbers>

namespace equitile {

namespace {

using Sequence = std::vector<SignatureEntry>;

// Entry i pairs the edge v_i -> v_{i+1} with the interior angle at v_i.
Sequence forward_sequence(const Polygon& p) {
  const std::size_t n = p.size();
  Sequence seq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = p.vertex(i + n - 1);
    const Point cur = p.vertex(i);
    const Point next = p.vertex(i + 1);
    const Point in = cur - prev;
    const Point out = next - cur;
    const double turn = std::atan2(cross(in, out), dot(in, out));
    seq[i] = {norm(out), std::numbers::pi - turn};
  }
  return seq;
}

// Sequence of the mirror image, read counterclockwise: entry j pairs edge
// (-j-1) with the angle at vertex (-j).
Sequence mirrored(const Sequence& s) {
  const std::size_t n = s.size();
  Sequence m(n);
  for (std::size_t j = 0; j < n; ++j) {
    m[j] = {s[(2 * n - j - 1) % n].edge_length, s[(n - j) % n].interior_angle};
  }
  return m;
}

// -1, 0, 1 lexicographic comparison treating components within 1e-9 as tied.
int compare_rotated(const Sequence& a, std::size_t ra, const Sequence& b, std::size_t rb) {
  const std::size_t n = a.size();
  constexpr double tie = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    const SignatureEntry& x = a[(i + ra) % n];
    const SignatureEntry& y = b[(i + rb) % n];
    if (x.edge_length < y.edge_length - tie) return -1;
    if (x.edge_length > y.edge_length + tie) return 1;
    if (x.interior_angle < y.interior_angle - tie) return -1;
    if (x.interior_angle > y.interior_angle + tie) return 1;
  }
  return 0;
}

double aligned_deviation(const Sequence& a, const Sequence& b, std::size_t rb, double cutoff) {
  const std::size_t n = a.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n && worst < cutoff; ++i) {
    const SignatureEntry& x = a[i];
    const SignatureEntry& y = b[(i + rb) % n];
    worst = std::max({worst, std::abs(x.edge_length - y.edge_length),
                      std::abs(x.interior_angle - y.interior_angle)});
  }
  return worst;
}

}  // namespace

CongruenceSignature congruence_signature(const Polygon& p) {
  const Sequence fwd = forward_sequence(p);
  const Sequence mir = mirrored(fwd);
  const std::size_t n = fwd.size();
  const Sequence* best = &fwd;
  std::size_t best_rot = 0;
  for (const Sequence* cand : {&fwd, &mir}) {
    for (std::size_t r = 0; r < n; ++r) {
      if (compare_rotated(*cand, r, *best, best_rot) < 0) {
        best = cand;
        best_rot = r;
      }
    }
  }
  CongruenceSignature sig;
  sig.sequence.resize(n);
  for (std::size_t i = 0; i < n; ++i) sig.sequence[i] = (*best)[(i + best_rot) % n];
  return sig;
}

double signature_distance(const CongruenceSignature& a, const CongruenceSignature& b) {
  if (a.n() != b.n() || a.n() == 0) return kSignatureInfinity;
  const Sequence mir = mirrored(b.sequence);
  double best = kSignatureInfinity;
  for (const Sequence* cand : {&b.sequence, &mir}) {
    for (std::size_t r = 0; r < a.n(); ++r) {
      best = std::min(best, aligned_deviation(a.sequence, *cand, r, best));
    }
  }
  return best;
}

}  // namespace equitile
