#include "lozenge/heights.hpp"

#include <cstdlib>

#include "lozenge/error.hpp"

namespace lozenge {

int HeightFunction::at(Vertex v) const {
  int i = domain->vertex_index(v);
  if (i < 0) fail(Errc::DomainMismatch, to_string(v) + " is not in the domain");
  return values[i];
}

BoundaryHeights boundary_heights(const DomainPtr& domain) {
  BoundaryHeights out;
  out.h.assign(domain->vertices().size(), std::nullopt);

  const auto& cycle = domain->boundary();
  int h = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    out.h[domain->vertex_index(cycle[i])] = h;
    Vertex diff = cycle[(i + 1) % cycle.size()] - cycle[i];
    bool positive = diff == Vertex{1, 0} || diff == Vertex{0, 1} ||
                    diff == Vertex{-1, -1};
    h += positive ? 1 : -1;
  }
  // The walk returns to 0 iff the contour balances each letter; otherwise
  // the triangle colours don't pair up and no tiling exists.
  if (h != 0) {
    out.consistent = false;
    return out;
  }

  // The walk pins every boundary vertex.  Any edge of the domain joining two
  // pinned vertices must still admit a legal difference (+1 tile edge or -2
  // lozenge diagonal in the positive direction); otherwise no tiling exists.
  for (const auto& e : domain->edges()) {
    auto t = out.h[e.tail], hd = out.h[e.head];
    if (!t || !hd) continue;
    int d = *hd - *t;
    bool ok = e.triangles == 1 ? d == 1 : (d == 1 || d == -2);
    if (!ok) out.consistent = false;
  }
  return out;
}

void validate(const HeightFunction& h) {
  if (!h.domain) fail(Errc::DomainMismatch, "height function has no domain");
  if (h.values.size() != h.domain->vertices().size())
    fail(Errc::NotAHeightFunction, "value count does not match vertex count");
  if (h.values[h.domain->vertex_index(h.domain->start())] != 0)
    fail(Errc::NotAHeightFunction, "base vertex height is not 0");
  for (const auto& e : h.domain->edges()) {
    int d = h.values[e.head] - h.values[e.tail];
    if (e.triangles == 1) {
      if (d != 1)
        fail(Errc::NotAHeightFunction,
             "boundary edge at " + to_string(e.edge.from) +
                 " has difference " + std::to_string(d));
    } else if (d != 1 && d != -2) {
      fail(Errc::NotAHeightFunction,
           "edge at " + to_string(e.edge.from) + " has difference " +
               std::to_string(d));
    }
  }
}

namespace {
void check_same_domain(const HeightFunction& a, const HeightFunction& b) {
  if (a.domain != b.domain || a.values.size() != b.values.size())
    fail(Errc::DomainMismatch, "height functions live on different domains");
}
}  // namespace

Cmp compare(const HeightFunction& a, const HeightFunction& b) {
  check_same_domain(a, b);
  bool le = true, ge = true;
  for (size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] > b.values[i]) le = false;
    if (a.values[i] < b.values[i]) ge = false;
  }
  if (le && ge) return Cmp::Equal;
  if (le) return Cmp::Less;
  if (ge) return Cmp::Greater;
  return Cmp::Incomparable;
}

HeightFunction pointwise_min(const HeightFunction& a, const HeightFunction& b) {
  check_same_domain(a, b);
  HeightFunction out{a.domain, a.values};
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = std::min(a.values[i], b.values[i]);
  return out;
}

HeightFunction pointwise_max(const HeightFunction& a, const HeightFunction& b) {
  check_same_domain(a, b);
  HeightFunction out{a.domain, a.values};
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = std::max(a.values[i], b.values[i]);
  return out;
}

int distance(const HeightFunction& a, const HeightFunction& b) {
  check_same_domain(a, b);
  long sum = 0;
  for (size_t i = 0; i < a.values.size(); ++i)
    sum += std::abs(a.values[i] - b.values[i]);
  if (sum % 3 != 0)
    fail(Errc::Internal, "height difference is not a multiple of 3");
  return static_cast<int>(sum / 3);
}

}  // namespace lozenge
