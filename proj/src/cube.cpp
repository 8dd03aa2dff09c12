#include "khtot/cube.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "khtot/error.hpp"

namespace khtot {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Resolutions of a diagram

Resolution resolve(const PlanarDiagram& d, const Choice& choice) {
  const int n = d.crossing_count();
  if (static_cast<int>(choice.size()) != n) {
    throw Error(ErrorKind::LengthMismatch, "choice has " + std::to_string(choice.size()) +
                                               " bits for " + std::to_string(n) + " crossings");
  }
  const int slots = 4 * n;
  std::vector<int> slot_order(slots);
  std::iota(slot_order.begin(), slot_order.end(), 0);
  auto label = [&](int s) { return d.crossings[s / 4][s % 4]; };
  std::stable_sort(slot_order.begin(), slot_order.end(),
                   [&](int a, int b) { return label(a) < label(b); });
  std::vector<int> partner(slots, -1);
  for (int i = 0; i + 1 < slots; i += 2) {
    partner[slot_order[i]] = slot_order[i + 1];
    partner[slot_order[i + 1]] = slot_order[i];
  }
  auto smooth = [&](int s) {
    const int pos = s % 4;
    const int to = choice[s / 4] == 0 ? (pos ^ 1) : (3 - pos);
    return 4 * (s / 4) + to;
  };

  Resolution r;
  r.choice = choice;
  std::vector<char> used(slots, 0);
  for (int i = 0; i < slots; i += 2) {
    const int start = slot_order[i];
    if (used[start]) continue;
    ResolvedCircle circle;
    int from = start;
    do {
      const int arrive = partner[from];
      used[from] = used[arrive] = 1;
      circle.edges.push_back(label(from));
      const int leave = smooth(arrive);
      circle.junctions.push_back(Junction{arrive / 4, arrive % 4, leave % 4});
      from = leave;
    } while (from != start);
    r.circles.push_back(std::move(circle));
  }
  for (int i = 0; i < d.free_loops; ++i) r.circles.push_back(ResolvedCircle{});
  return r;
}

// ---------------------------------------------------------------------------
// Surgery tracing

std::vector<TracedCircle> trace_surgery(const ResolutionConfiguration& c,
                                        const std::vector<bool>& surger) {
  if (static_cast<int>(surger.size()) != c.arc_count()) {
    throw Error(ErrorKind::LengthMismatch, "surgery mask length differs from arc count");
  }
  std::vector<TracedCircle> out;
  std::vector<char> visited(c.segment_count(), 0);

  for (int circle = 0; circle < c.circle_count(); ++circle) {
    const auto& word = c.circle(circle);
    if (word.empty()) {
      visited[c.segment_id(circle, 0)] = 1;
      out.push_back(TracedCircle{{Piece{Piece::Kind::Segment, circle, 0, false}}});
      continue;
    }
    for (int j = 0; j < static_cast<int>(word.size()); ++j) {
      if (visited[c.segment_id(circle, j)]) continue;
      TracedCircle traced;
      int cur_circle = circle;
      int cur_seg = j;
      bool forward = true;
      do {
        visited[c.segment_id(cur_circle, cur_seg)] = 1;
        traced.pieces.push_back(Piece{Piece::Kind::Segment, cur_circle, cur_seg, !forward});
        const auto& w = c.circle(cur_circle);
        const int m = static_cast<int>(w.size());
        const int idx = forward ? (cur_seg + 1) % m : cur_seg;
        const int e = w[idx];
        if (!surger[arc_of(e)]) {
          traced.pieces.push_back(Piece{Piece::Kind::Slot, e, 0, !forward});
          cur_seg = forward ? idx : mod(idx - 1, m);
          continue;
        }
        // Band along the arc: left(p) joins right(q) and right(p) joins left(q).
        // left(e) is the before-side of the slot when the arc leaves to the left.
        const bool arrived_before = forward;
        const bool at_left = (c.side(e) == Side::L) == arrived_before;
        const int f = opposite(e);
        const bool partner_left = !at_left;
        const bool partner_before = partner_left == (c.side(f) == Side::L);
        const bool from_p = (e % 2 == 0);
        const int copy = from_p ? (at_left ? 0 : 1) : (at_left ? 1 : 0);
        traced.pieces.push_back(Piece{Piece::Kind::Strand, arc_of(e), copy, !from_p});
        const auto pos = c.position(f);
        const int mf = static_cast<int>(c.circle(pos.circle).size());
        cur_circle = pos.circle;
        if (partner_before) {
          cur_seg = mod(pos.index - 1, mf);
          forward = false;
        } else {
          cur_seg = pos.index;
          forward = true;
        }
      } while (!(cur_circle == circle && cur_seg == j && forward));
      out.push_back(std::move(traced));
    }
  }
  return out;
}

EndingCircles ending_circles(const ResolutionConfiguration& c) {
  const auto traced = trace_surgery(c, std::vector<bool>(c.arc_count(), true));
  EndingCircles e;
  e.count = static_cast<int>(traced.size());
  e.of_segment.assign(c.segment_count(), -1);
  for (int i = 0; i < e.count; ++i) {
    for (const auto& p : traced[i].pieces) {
      if (p.kind == Piece::Kind::Segment) e.of_segment[c.segment_id(p.a, p.b)] = i;
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Planarity

bool is_planar(const ResolutionConfiguration& c) {
  const int endpoints = 2 * c.arc_count();
  if (endpoints == 0) return true;
  // Darts per endpoint e: 3e outgoing segment, 3e+1 incoming segment, 3e+2 arc.
  auto out_dart = [](int e) { return 3 * e; };
  auto in_dart = [](int e) { return 3 * e + 1; };
  auto arc_dart = [](int e) { return 3 * e + 2; };
  std::vector<int> rev(3 * endpoints), rot(3 * endpoints);
  for (int circle = 0; circle < c.circle_count(); ++circle) {
    const auto& w = c.circle(circle);
    const int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i) {
      const int e = w[i];
      const int next = w[(i + 1) % m];
      rev[out_dart(e)] = in_dart(next);
      rev[in_dart(next)] = out_dart(e);
    }
  }
  for (int e = 0; e < endpoints; ++e) {
    rev[arc_dart(e)] = arc_dart(opposite(e));
    // Counterclockwise around the slot.
    if (c.side(e) == Side::L) {
      rot[out_dart(e)] = arc_dart(e);
      rot[arc_dart(e)] = in_dart(e);
      rot[in_dart(e)] = out_dart(e);
    } else {
      rot[out_dart(e)] = in_dart(e);
      rot[in_dart(e)] = arc_dart(e);
      rot[arc_dart(e)] = out_dart(e);
    }
  }
  std::vector<int> parent(c.circle_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < c.arc_count(); ++a) {
    const int x = find_root(parent, c.position(endpoint_id(a, 0)).circle);
    const int y = find_root(parent, c.position(endpoint_id(a, 1)).circle);
    parent[x] = y;
  }
  std::vector<int> faces(c.circle_count(), 0), arcs(c.circle_count(), 0);
  for (int a = 0; a < c.arc_count(); ++a) {
    ++arcs[find_root(parent, c.position(endpoint_id(a, 0)).circle)];
  }
  std::vector<char> seen(3 * endpoints, 0);
  for (int d = 0; d < 3 * endpoints; ++d) {
    if (seen[d]) continue;
    ++faces[find_root(parent, c.position(d / 3).circle)];
    int cur = d;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = rot[rev[cur]];
    }
  }
  for (int circle = 0; circle < c.circle_count(); ++circle) {
    if (find_root(parent, circle) != circle || arcs[circle] == 0) continue;
    // V = 2a, E = 3a, so genus 0 means F = a + 2.
    if (faces[circle] != arcs[circle] + 2) return false;
  }
  return true;
}

void require_planar(const ResolutionConfiguration& c) {
  if (!is_planar(c)) throw Error(ErrorKind::NonPlanar, "ribbon structure has positive genus");
}

// ---------------------------------------------------------------------------
// Surgery, mirror, dual

ResolutionConfiguration surgery(const ResolutionConfiguration& c, int arc) {
  if (arc < 0 || arc >= c.arc_count()) {
    throw Error(ErrorKind::BadIndex, "arc " + std::to_string(arc) + " out of range");
  }
  std::vector<bool> mask(c.arc_count(), false);
  mask[arc] = true;
  const auto traced = trace_surgery(c, mask);
  auto renumber = [arc](int e) {
    const int a = arc_of(e);
    return endpoint_id(a > arc ? a - 1 : a, e % 2);
  };
  std::vector<std::vector<int>> words;
  std::vector<Side> sides(2 * (c.arc_count() - 1), Side::L);
  for (const auto& t : traced) {
    std::vector<int> old_word;
    std::vector<int> word;
    for (const auto& p : t.pieces) {
      if (p.kind != Piece::Kind::Slot) continue;
      old_word.push_back(p.a);
      const int e = renumber(p.a);
      word.push_back(e);
      sides[e] = p.reversed ? flip(c.side(p.a)) : c.side(p.a);
    }
    if (!word.empty()) {
      // Start at the slot that came first in the original configuration.
      auto key = [&](int e) {
        const auto pos = c.position(e);
        return std::pair(pos.circle, pos.index);
      };
      const auto first = std::min_element(old_word.begin(), old_word.end(),
                                          [&](int a, int b) { return key(a) < key(b); });
      std::rotate(word.begin(), word.begin() + (first - old_word.begin()), word.end());
    }
    words.push_back(std::move(word));
  }
  return ResolutionConfiguration(std::move(words), std::move(sides));
}

ResolutionConfiguration mirror(const ResolutionConfiguration& c) {
  std::vector<Side> sides = c.sides();
  for (auto& s : sides) s = flip(s);
  return ResolutionConfiguration(c.circles(), std::move(sides));
}

DualMirror dual_mirror(const ResolutionConfiguration& c) {
  require_planar(c);
  const auto traced = trace_surgery(c, std::vector<bool>(c.arc_count(), true));
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> origin;
  std::vector<Side> sides(2 * c.arc_count(), Side::L);
  for (const auto& t : traced) {
    std::vector<int> word;
    std::vector<int> seg_origin;
    const int np = static_cast<int>(t.pieces.size());
    for (int i = 0; i < np; ++i) {
      const auto& p = t.pieces[i];
      if (p.kind != Piece::Kind::Strand) continue;
      // The dual arc runs across the band from the right copy (end 0) to the
      // left copy (end 1); it attaches on the band-interior side of each copy.
      const bool left_copy = p.b == 0;
      const int e = endpoint_id(p.a, left_copy ? 1 : 0);
      const Side dual_side = left_copy ? (p.reversed ? Side::L : Side::R)
                                       : (p.reversed ? Side::R : Side::L);
      sides[e] = flip(dual_side);
      word.push_back(e);
      int circle_after = -1;
      for (int k = 1; k <= np && circle_after < 0; ++k) {
        const auto& q = t.pieces[(i + k) % np];
        if (q.kind == Piece::Kind::Segment) circle_after = q.a;
      }
      seg_origin.push_back(circle_after);
    }
    if (word.empty()) seg_origin.push_back(t.pieces.front().a);
    words.push_back(std::move(word));
    origin.push_back(std::move(seg_origin));
  }
  DualMirror out{ResolutionConfiguration(std::move(words), std::move(sides)), {}};
  const auto ending = ending_circles(out.config);
  out.end_to_start.assign(ending.count, -1);
  for (int d = 0; d < out.config.circle_count(); ++d) {
    for (int j = 0; j < out.config.segments_on(d); ++j) {
      out.end_to_start[ending.of_segment[out.config.segment_id(d, j)]] = origin[d][j];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Faces of the cube

Face face_configuration(const PlanarDiagram& d, const Choice& u, const Choice& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::LengthMismatch, "u and v differ in length");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) throw Error(ErrorKind::NotAFace, "u is not below v");
  }
  return face_configuration(d, resolve(d, u), resolve(d, v));
}

Face face_configuration(const PlanarDiagram& d, const Resolution& ru, const Resolution& rv) {
  const int n = d.crossing_count();
  const auto& u = ru.choice;
  const auto& v = rv.choice;
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n) {
    throw Error(ErrorKind::LengthMismatch, "choice length differs from crossing count");
  }
  std::vector<int> arc_of_crossing(n, -1);
  int arcs = 0;
  for (int i = 0; i < n; ++i) {
    if (u[i] > v[i]) throw Error(ErrorKind::NotAFace, "u is not below v");
    if (u[i] != v[i]) arc_of_crossing[i] = arcs++;
  }

  const int loops_u = d.free_loops;
  const int traced_u = ru.circle_count() - loops_u;
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> tags;  // edge label after each slot; -1-k for free loop k
  std::vector<Side> sides(2 * arcs, Side::L);
  for (int ci = 0; ci < ru.circle_count(); ++ci) {
    const auto& circle = ru.circles[ci];
    std::vector<int> word, tag;
    const int m = static_cast<int>(circle.junctions.size());
    for (int j = 0; j < m; ++j) {
      const auto& jn = circle.junctions[j];
      const int a = arc_of_crossing[jn.crossing];
      if (a < 0) continue;
      const bool ab = jn.from < 2;
      const int e = endpoint_id(a, ab ? 0 : 1);
      const bool left = ab ? (jn.from == 0) : (jn.from == 2);
      sides[e] = left ? Side::L : Side::R;
      word.push_back(e);
      tag.push_back(circle.edges[(j + 1) % m]);
    }
    if (word.empty()) tag.push_back(ci < traced_u ? circle.edges.front() : -1 - (ci - traced_u));
    words.push_back(std::move(word));
    tags.push_back(std::move(tag));
  }
  Face face{ResolutionConfiguration(std::move(words), std::move(sides)), {}};

  std::map<int, int> circle_of_edge;
  const int traced_v = rv.circle_count() - loops_u;
  for (int ci = 0; ci < traced_v; ++ci) {
    for (int e : rv.circles[ci].edges) circle_of_edge[e] = ci;
  }
  const auto ending = ending_circles(face.config);
  face.end_to_vertex_circle.assign(ending.count, -1);
  for (int ci = 0; ci < face.config.circle_count(); ++ci) {
    for (int j = 0; j < face.config.segments_on(ci); ++j) {
      const int tag = tags[ci][j];
      const int target = tag >= 0 ? circle_of_edge.at(tag) : traced_v + (-1 - tag);
      face.end_to_vertex_circle[ending.of_segment[face.config.segment_id(ci, j)]] = target;
    }
  }
  return face;
}

// ---------------------------------------------------------------------------
// Classification

bool Classification::trees_and_dual_trees() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Component& c) { return c.kind != ComponentKind::Neither; });
}

Classification classify(const ResolutionConfiguration& c) {
  Classification out;
  out.ending = ending_circles(c);
  std::vector<int> parent(c.circle_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < c.arc_count(); ++a) {
    const int x = find_root(parent, c.position(endpoint_id(a, 0)).circle);
    const int y = find_root(parent, c.position(endpoint_id(a, 1)).circle);
    parent[std::max(x, y)] = std::min(x, y);
  }
  std::map<int, int> comp_of_root;
  for (int circle = 0; circle < c.circle_count(); ++circle) {
    if (c.is_passive(circle)) {
      out.passive_circles.push_back(circle);
      out.passive_ending.push_back(out.ending.of_segment[c.segment_id(circle, 0)]);
      continue;
    }
    const int root = find_root(parent, circle);
    auto [it, inserted] = comp_of_root.try_emplace(root, static_cast<int>(out.components.size()));
    if (inserted) out.components.push_back(Component{{}, {}, {}, ComponentKind::Neither});
    auto& comp = out.components[it->second];
    comp.circles.push_back(circle);
    for (int j = 0; j < c.segments_on(circle); ++j) {
      comp.ending_circles.push_back(out.ending.of_segment[c.segment_id(circle, j)]);
    }
  }
  for (int a = 0; a < c.arc_count(); ++a) {
    const int root = find_root(parent, c.position(endpoint_id(a, 0)).circle);
    out.components[comp_of_root.at(root)].arcs.push_back(a);
  }
  for (auto& comp : out.components) {
    std::sort(comp.ending_circles.begin(), comp.ending_circles.end());
    comp.ending_circles.erase(std::unique(comp.ending_circles.begin(), comp.ending_circles.end()),
                              comp.ending_circles.end());
    const auto t = comp.circles.size();
    const auto m = comp.arcs.size();
    const auto s = comp.ending_circles.size();
    if (t == m + 1 && s == 1) {
      comp.kind = ComponentKind::Tree;
    } else if (t == 1 && s == m + 1) {
      comp.kind = ComponentKind::DualTree;
    } else {
      comp.kind = ComponentKind::Neither;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries

namespace {

class IsoSearch {
 public:
  IsoSearch(const ResolutionConfiguration& a, const ResolutionConfiguration& b, std::size_t limit,
            bool first_only)
      : a_(a), b_(b), limit_(limit), first_only_(first_only) {}

  std::vector<Symmetry> run() {
    if (a_.circle_count() != b_.circle_count() || a_.arc_count() != b_.arc_count()) return {};
    std::vector<int> la, lb;
    for (const auto& w : a_.circles()) la.push_back(static_cast<int>(w.size()));
    for (const auto& w : b_.circles()) lb.push_back(static_cast<int>(w.size()));
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return {};

    // Anchor one endpoint per connected component of a.
    std::vector<int> parent(a_.circle_count());
    std::iota(parent.begin(), parent.end(), 0);
    for (int arc = 0; arc < a_.arc_count(); ++arc) {
      parent[find_root(parent, a_.position(endpoint_id(arc, 0)).circle)] =
          find_root(parent, a_.position(endpoint_id(arc, 1)).circle);
    }
    std::vector<char> anchored(a_.circle_count(), 0);
    for (int circle = 0; circle < a_.circle_count(); ++circle) {
      if (a_.is_passive(circle)) {
        passive_a_.push_back(circle);
        continue;
      }
      const int root = find_root(parent, circle);
      if (!anchored[root]) {
        anchored[root] = 1;
        anchors_.push_back(a_.circle(circle).front());
      }
    }
    for (int circle = 0; circle < b_.circle_count(); ++circle) {
      if (b_.is_passive(circle)) passive_b_.push_back(circle);
    }

    State s;
    s.sym.circle_map.assign(a_.circle_count(), -1);
    s.sym.arc_map.assign(a_.arc_count(), -1);
    s.sym.arc_swap.assign(a_.arc_count(), 0);
    s.sym.reversed.assign(a_.circle_count(), 0);
    s.sym.rotation.assign(a_.circle_count(), 0);
    s.b_circle_used.assign(b_.circle_count(), 0);
    s.b_arc_used.assign(b_.arc_count(), 0);
    descend(s, 0);
    std::sort(results_.begin(), results_.end());
    return results_;
  }

 private:
  struct State {
    Symmetry sym;
    std::vector<char> b_circle_used;
    std::vector<char> b_arc_used;
  };

  bool done() const { return first_only_ && !results_.empty(); }

  void descend(const State& s, std::size_t comp) {
    if (done()) return;
    if (comp == anchors_.size()) {
      place_passive(s);
      return;
    }
    const int e0 = anchors_[comp];
    const int len = static_cast<int>(a_.circle(a_.position(e0).circle).size());
    for (int f = 0; f < 2 * b_.arc_count(); ++f) {
      const int target = b_.position(f).circle;
      if (s.b_circle_used[target]) continue;
      if (static_cast<int>(b_.circle(target).size()) != len) continue;
      State next = s;
      if (propagate(next, e0, f)) descend(next, comp + 1);
      if (done()) return;
    }
  }

  bool propagate(State& s, int e0, int f0) {
    std::vector<std::pair<int, int>> queue{{e0, f0}};
    while (!queue.empty()) {
      const auto [e, f] = queue.back();
      queue.pop_back();
      const int ca = a_.position(e).circle;
      const int cb = b_.position(f).circle;
      const auto& wa = a_.circle(ca);
      const auto& wb = b_.circle(cb);
      const int m = static_cast<int>(wa.size());
      if (static_cast<int>(wb.size()) != m) return false;
      const bool rev = a_.side(e) != b_.side(f);
      const int step = rev ? -1 : 1;
      const int rotation = mod(b_.position(f).index - step * a_.position(e).index, m);
      if (s.sym.circle_map[ca] != -1) {
        if (s.sym.circle_map[ca] != cb || s.sym.reversed[ca] != rev ||
            s.sym.rotation[ca] != rotation) {
          return false;
        }
        continue;
      }
      if (s.b_circle_used[cb]) return false;
      s.sym.circle_map[ca] = cb;
      s.sym.reversed[ca] = rev;
      s.sym.rotation[ca] = rotation;
      s.b_circle_used[cb] = 1;
      for (int i = 0; i < m; ++i) {
        const int ei = wa[i];
        const int fi = wb[mod(rotation + step * i, m)];
        if ((a_.side(ei) != b_.side(fi)) != rev) return false;
        const int arc_a = arc_of(ei);
        const int arc_b = arc_of(fi);
        const std::uint8_t swap = (ei % 2) != (fi % 2);
        if (s.sym.arc_map[arc_a] != -1) {
          if (s.sym.arc_map[arc_a] != arc_b || s.sym.arc_swap[arc_a] != swap) return false;
          continue;
        }
        if (s.b_arc_used[arc_b]) return false;
        s.sym.arc_map[arc_a] = arc_b;
        s.sym.arc_swap[arc_a] = swap;
        s.b_arc_used[arc_b] = 1;
        queue.emplace_back(opposite(ei), opposite(fi));
      }
    }
    return true;
  }

  void place_passive(const State& s) {
    std::vector<int> perm = passive_b_;
    std::sort(perm.begin(), perm.end());
    do {
      Symmetry sym = s.sym;
      for (std::size_t i = 0; i < passive_a_.size(); ++i) sym.circle_map[passive_a_[i]] = perm[i];
      results_.push_back(std::move(sym));
      if (results_.size() > limit_) {
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(limit_) + " symmetries");
      }
      if (done()) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  const ResolutionConfiguration& a_;
  const ResolutionConfiguration& b_;
  std::size_t limit_;
  bool first_only_;
  std::vector<int> anchors_;
  std::vector<int> passive_a_, passive_b_;
  std::vector<Symmetry> results_;
};

}  // namespace

std::vector<int> segment_map(const ResolutionConfiguration& from, const ResolutionConfiguration& to,
                             const Symmetry& s) {
  std::vector<int> out(from.segment_count(), -1);
  for (int circle = 0; circle < from.circle_count(); ++circle) {
    const int target = s.circle_map[circle];
    const int m = static_cast<int>(from.circle(circle).size());
    if (m == 0) {
      out[from.segment_id(circle, 0)] = to.segment_id(target, 0);
      continue;
    }
    for (int j = 0; j < m; ++j) {
      const int image = s.reversed[circle] ? mod(s.rotation[circle] - j - 1, m)
                                           : mod(s.rotation[circle] + j, m);
      out[from.segment_id(circle, j)] = to.segment_id(target, image);
    }
  }
  return out;
}

std::vector<int> ending_map(const ResolutionConfiguration& from, const ResolutionConfiguration& to,
                            const Symmetry& s) {
  const auto ef = ending_circles(from);
  const auto et = ending_circles(to);
  const auto seg = segment_map(from, to, s);
  std::vector<int> out(ef.count, -1);
  for (int i = 0; i < from.segment_count(); ++i) out[ef.of_segment[i]] = et.of_segment[seg[i]];
  return out;
}

std::vector<Symmetry> isomorphisms(const ResolutionConfiguration& a,
                                   const ResolutionConfiguration& b, std::size_t limit) {
  return IsoSearch(a, b, limit, false).run();
}

std::optional<Symmetry> find_isomorphism(const ResolutionConfiguration& a,
                                         const ResolutionConfiguration& b) {
  auto found = IsoSearch(a, b, 1, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool is_isomorphic(const ResolutionConfiguration& a, const ResolutionConfiguration& b) {
  return find_isomorphism(a, b).has_value();
}

std::vector<Symmetry> automorphisms(const ResolutionConfiguration& c, int max_circles) {
  if (c.circle_count() > max_circles) {
    throw Error(ErrorKind::TooLarge, std::to_string(c.circle_count()) + " circles exceeds bound " +
                                         std::to_string(max_circles));
  }
  return isomorphisms(c, c);
}

Symmetry compose(const ResolutionConfiguration& c, const Symmetry& second, const Symmetry& first) {
  Symmetry out = first;
  for (int circle = 0; circle < c.circle_count(); ++circle) {
    const int mid = first.circle_map[circle];
    const int m = static_cast<int>(c.circle(circle).size());
    out.circle_map[circle] = second.circle_map[mid];
    out.reversed[circle] = first.reversed[circle] ^ second.reversed[mid];
    if (m == 0) {
      out.rotation[circle] = 0;
    } else {
      const int step = second.reversed[mid] ? -1 : 1;
      out.rotation[circle] = mod(second.rotation[mid] + step * first.rotation[circle], m);
    }
  }
  for (int a = 0; a < c.arc_count(); ++a) {
    const int mid = first.arc_map[a];
    out.arc_map[a] = second.arc_map[mid];
    out.arc_swap[a] = first.arc_swap[a] ^ second.arc_swap[mid];
  }
  return out;
}

}  // namespace khtot
