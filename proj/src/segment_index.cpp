#include "curveturn/segment_index.hpp"

#include <algorithm>
#include <limits>

namespace curveturn {

namespace {

constexpr std::size_t kLeafSize = 4;

}  // namespace

SegmentIndex::SegmentIndex(std::span<const Point2> vertices, bool closed) : closed_(closed) {
  const std::size_t n = vertices.size();
  if (n < 2) throw Error(ErrorKind::DegeneratePolygon, "SegmentIndex: need at least two vertices");
  const std::size_t m = closed ? n : n - 1;
  seg_a_.reserve(m);
  seg_b_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    seg_a_.push_back(vertices[i]);
    seg_b_.push_back(vertices[(i + 1) % n]);
  }
  order_.resize(m);
  for (std::size_t i = 0; i < m; ++i) order_[i] = i;
  nodes_.reserve(2 * m / kLeafSize + 2);
  root_ = build(0, m);
}

std::size_t SegmentIndex::build(std::size_t begin, std::size_t end) {
  Box box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t k = begin; k < end; ++k) {
    const Point2& a = seg_a_[order_[k]];
    const Point2& b = seg_b_[order_[k]];
    box.min_x = std::min({box.min_x, a.x, b.x});
    box.min_y = std::min({box.min_y, a.y, b.y});
    box.max_x = std::max({box.max_x, a.x, b.x});
    box.max_y = std::max({box.max_y, a.y, b.y});
  }
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{box});
  if (end - begin <= kLeafSize) {
    nodes_[id].leaf = true;
    nodes_[id].begin = begin;
    nodes_[id].end = end;
    return id;
  }
  const bool split_x = (box.max_x - box.min_x) >= (box.max_y - box.min_y);
  const std::size_t mid = begin + (end - begin) / 2;
  auto key = [&](std::size_t s) {
    return split_x ? seg_a_[s].x + seg_b_[s].x : seg_a_[s].y + seg_b_[s].y;
  };
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                   order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t l, std::size_t r) { return key(l) < key(r) || (key(l) == key(r) && l < r); });
  const std::size_t left = build(begin, mid);
  const std::size_t right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

double SegmentIndex::box_distance2(const Box& b, const Point2& p) {
  const double dx = std::max({b.min_x - p.x, 0.0, p.x - b.max_x});
  const double dy = std::max({b.min_y - p.y, 0.0, p.y - b.max_y});
  return dx * dx + dy * dy;
}

bool SegmentIndex::adjacent(std::size_t i, std::size_t j) const {
  const std::size_t m = seg_a_.size();
  if (i == j) return true;
  if (i + 1 == j || j + 1 == i) return true;
  return closed_ && ((i == 0 && j == m - 1) || (j == 0 && i == m - 1));
}

SegmentIndex::Nearest SegmentIndex::nearest(const Point2& p) const {
  Nearest best;
  double best_d2 = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (box_distance2(node.box, p) > best_d2) continue;
    if (node.leaf) {
      for (std::size_t k = node.begin; k < node.end; ++k) {
        const std::size_t s = order_[k];
        const SegmentFoot foot = closest_point_on_segment(p, seg_a_[s], seg_b_[s]);
        const double d2 = distance2(p, foot.point);
        // Ties resolve to the lowest segment index so results do not depend on tree layout.
        if (d2 < best_d2 || (d2 == best_d2 && s < best.segment)) {
          best_d2 = d2;
          best.segment = s;
          best.t = foot.t;
          best.point = foot.point;
        }
      }
      continue;
    }
    const double dl = box_distance2(nodes_[node.left].box, p);
    const double dr = box_distance2(nodes_[node.right].box, p);
    if (dl < dr) {
      stack.push_back(node.right);
      stack.push_back(node.left);
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  best.distance = std::sqrt(best_d2);
  return best;
}

bool SegmentIndex::any_within(const Point2& p, double d) const {
  if (!(d > 0.0)) return false;
  const double d2 = d * d;
  std::size_t stack[128];
  std::size_t top = 0;
  stack[top++] = root_;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (box_distance2(node.box, p) >= d2) continue;
    if (!node.leaf) {
      stack[top++] = node.left;
      stack[top++] = node.right;
      continue;
    }
    for (std::size_t k = node.begin; k < node.end; ++k) {
      const Point2& a = seg_a_[order_[k]];
      const Point2& b = seg_b_[order_[k]];
      const double ex = b.x - a.x, ey = b.y - a.y;
      const double wx = p.x - a.x, wy = p.y - a.y;
      const double len2 = ex * ex + ey * ey;
      double t = len2 > 0.0 ? (wx * ex + wy * ey) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      const double qx = wx - t * ex, qy = wy - t * ey;
      if (qx * qx + qy * qy < d2) return true;
    }
  }
  return false;
}

Containment SegmentIndex::classify(const Point2& p, double boundary_tol) const {
  if (!closed_) throw Error(ErrorKind::DegeneratePolygon, "classify: open polyline");
  if (nearest(p).distance <= boundary_tol) return Containment::OnBoundary;
  return crossing_inside(p) ? Containment::Inside : Containment::Outside;
}

bool SegmentIndex::crossing_inside(const Point2& p) const {
  if (!closed_) throw Error(ErrorKind::DegeneratePolygon, "classify: open polyline");
  bool inside = false;
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.box.max_x < p.x || node.box.min_y > p.y || node.box.max_y < p.y) continue;
    if (!node.leaf) {
      stack.push_back(node.left);
      stack.push_back(node.right);
      continue;
    }
    for (std::size_t k = node.begin; k < node.end; ++k) {
      const Point2& a = seg_a_[order_[k]];
      const Point2& b = seg_b_[order_[k]];
      if ((a.y > p.y) != (b.y > p.y)) {
        const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (p.x < x_cross) inside = !inside;
      }
    }
  }
  return inside;
}

std::optional<SegmentIndex::RayHit> SegmentIndex::first_ray_hit(const Point2& origin,
                                                                const Vector2& dir,
                                                                double t_min) const {
  std::optional<RayHit> best;
  auto box_hit = [&](const Box& b) {
    double t0 = t_min;
    double t1 = best ? best->t : std::numeric_limits<double>::infinity();
    const double o[2] = {origin.x, origin.y};
    const double d[2] = {dir.dx, dir.dy};
    const double lo[2] = {b.min_x, b.min_y};
    const double hi[2] = {b.max_x, b.max_y};
    for (int ax = 0; ax < 2; ++ax) {
      if (d[ax] == 0.0) {
        if (o[ax] < lo[ax] || o[ax] > hi[ax]) return false;
        continue;
      }
      double ta = (lo[ax] - o[ax]) / d[ax];
      double tb = (hi[ax] - o[ax]) / d[ax];
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (t0 > t1) return false;
    }
    return true;
  };
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (!box_hit(node.box)) continue;
    if (!node.leaf) {
      stack.push_back(node.left);
      stack.push_back(node.right);
      continue;
    }
    for (std::size_t k = node.begin; k < node.end; ++k) {
      const std::size_t s = order_[k];
      const Vector2 e = seg_b_[s] - seg_a_[s];
      const double denom = cross(dir, e);
      if (denom == 0.0) continue;
      const Vector2 w = seg_a_[s] - origin;
      const double t = cross(w, e) / denom;
      const double u = cross(w, dir) / denom;
      if (t <= t_min || u < 0.0 || u > 1.0) continue;
      if (!best || t < best->t || (t == best->t && s < best->segment)) {
        best = RayHit{t, s, u, seg_a_[s] + e * u};
      }
    }
  }
  return best;
}

bool SegmentIndex::has_self_intersection(double tol) const {
  const std::size_t m = seg_a_.size();
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = seg_a_[i];
    const Point2& b = seg_b_[i];
    const Box q{std::min(a.x, b.x) - tol, std::min(a.y, b.y) - tol, std::max(a.x, b.x) + tol,
                std::max(a.y, b.y) + tol};
    stack.assign(1, root_);
    while (!stack.empty()) {
      const Node& node = nodes_[stack.back()];
      stack.pop_back();
      if (node.box.max_x < q.min_x || node.box.min_x > q.max_x || node.box.max_y < q.min_y ||
          node.box.min_y > q.max_y) {
        continue;
      }
      if (!node.leaf) {
        stack.push_back(node.left);
        stack.push_back(node.right);
        continue;
      }
      for (std::size_t k = node.begin; k < node.end; ++k) {
        const std::size_t j = order_[k];
        if (j <= i || adjacent(i, j)) continue;
        if (segments_intersect(a, b, seg_a_[j], seg_b_[j], tol)) return true;
      }
    }
  }
  return false;
}

}  // namespace curveturn
