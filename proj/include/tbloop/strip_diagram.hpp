// Planar strip composition engine. A frontier of open strand ends is evolved
// by local moves (join two ends, attach an end to a boundary); every closed
// loop is resolved at the moment it forms, so all weight bookkeeping is local.
//
// Boundary-loop weights follow the shading parity, tracked through the
// vertical order of boundary attachments: attachments are kept bottom-to-top,
// a left loop closing over attachment positions (p, p+1) carries delta_0 iff p
// is even, and a right loop carries delta_L iff p == L (mod 2). Lines from the
// left boundary to the right reduce in pairs with weight b (algebra mode) or
// are retained as path objects (flow mode, used by the marked observables).

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <vector>

#include "tbloop/linkpattern.hpp"

namespace tbloop::tl {

template <class S>
struct LoopWeights {
  S n{1}, delta0{1}, deltaL{1}, b{1};
  static LoopWeights ones() { return LoopWeights{S(1), S(1), S(1), S(1)}; }
};

// Per-strand crossing counters for the marked observables.
struct PathData {
  long seg = 0;  // crossings of the marker segment
  long ray = 0;  // crossings of the upward ray from the first marker
  void merge(const PathData& o) {
    seg += o.seg;
    ray += o.ray;
  }
};

template <class S>
class StripFrontier {
 public:
  enum Kind : int8_t { PARTNER, LEFT, RIGHT };

  struct End {
    Kind kind = PARTNER;
    int other = -1;   // partner end id when kind == PARTNER
    int strand = -1;  // flow-mode payload index
    bool active = false;
  };

  LoopWeights<S> w;
  int right_parity = 0;  // L mod 2
  bool algebra_mode = true;
  bool flow_mode = false;

  S weight{1};
  int nlines = 0;
  std::vector<PathData> completed_paths;  // flow mode: boundary-to-boundary paths

  StripFrontier(const LoopWeights<S>& weights, int L, bool flow = false)
      : w(weights), right_parity(L % 2), flow_mode(flow) {}

  // Frontier initialisation from a link pattern hanging below; returns the end
  // ids of sites 1..L (index 0 unused).
  std::vector<int> seed_pattern(const LinkPattern& alpha) {
    auto partner = alpha.matching();
    int L = alpha.L;
    std::vector<int> site_end(static_cast<size_t>(L) + 1, -1);
    for (int i = 1; i <= L; ++i) site_end[static_cast<size_t>(i)] = new_end();
    if (alpha.throughlines()) {
      if (flow_mode) {
        completed_paths.push_back(PathData{});
      } else {
        int line = new_line_payload();
        left_order_.push_back(~line);
        right_order_.push_back(~line);
        ++nlines;
      }
    }
    // left attachments bottom-to-top: decreasing site order
    for (int i = L; i >= 1; --i) {
      if (partner[static_cast<size_t>(i)] == kLeftBoundary) {
        int e = site_end[static_cast<size_t>(i)];
        ends_[static_cast<size_t>(e)].kind = LEFT;
        left_order_.push_back(e);
      }
    }
    // right attachments bottom-to-top: increasing site order
    for (int i = 1; i <= L; ++i) {
      if (partner[static_cast<size_t>(i)] == L + 1) {
        int e = site_end[static_cast<size_t>(i)];
        ends_[static_cast<size_t>(e)].kind = RIGHT;
        right_order_.push_back(e);
      }
    }
    for (int i = 1; i <= L; ++i) {
      int j = partner[static_cast<size_t>(i)];
      if (j > kLeftBoundary && j <= L && j > i) {
        link_ends(site_end[static_cast<size_t>(i)], site_end[static_cast<size_t>(j)]);
      }
    }
    return site_end;
  }

  int new_end() {
    ends_.push_back(End{PARTNER, -1, flow_mode ? new_strand_payload() : -1, true});
    return static_cast<int>(ends_.size()) - 1;
  }

  std::pair<int, int> fresh_pair() {
    int a = new_end(), b = new_end();
    link_ends(a, b);
    return {a, b};
  }

  // Mark the strand whose frontier end is e as crossing the marker segment /
  // the sign ray (flow mode).
  void add_seg_crossing(int e, long c = 1) {
    if (flow_mode && c) strand_data(e).seg += c;
  }
  void add_ray_crossing(int e, long c = 1) {
    if (flow_mode && c) strand_data(e).ray += c;
  }

  // Glue ends a and b together.
  void join(int a, int b) {
    End& ea = ends_[static_cast<size_t>(a)];
    End& eb = ends_[static_cast<size_t>(b)];
    assert(ea.active && eb.active);
    ea.active = eb.active = false;
    PathData merged;
    if (flow_mode) {
      merged = strands_[static_cast<size_t>(ea.strand)];
      if (eb.strand != ea.strand) merged.merge(strands_[static_cast<size_t>(eb.strand)]);
    }
    if (ea.kind == PARTNER && ea.other == b) {
      weight = weight * w.n;  // contractible loop
      return;
    }
    if (ea.kind == PARTNER && eb.kind == PARTNER) {
      int pa = ea.other, pb = eb.other;
      ends_[static_cast<size_t>(pa)].other = pb;
      ends_[static_cast<size_t>(pb)].other = pa;
      if (flow_mode) set_strand(pa, pb, merged);
      return;
    }
    if (ea.kind == PARTNER || eb.kind == PARTNER) {
      int p = (ea.kind == PARTNER) ? ea.other : eb.other;
      const End& attached = (ea.kind == PARTNER) ? eb : ea;
      int att_end = (ea.kind == PARTNER) ? b : a;
      ends_[static_cast<size_t>(p)].kind = attached.kind;
      replace_in_order(attached.kind == LEFT ? left_order_ : right_order_, att_end, p);
      if (flow_mode) set_strand(p, p, merged);
      return;
    }
    if (ea.kind == LEFT && eb.kind == LEFT) {
      close_boundary_loop(left_order_, a, b, /*left=*/true);
      return;
    }
    if (ea.kind == RIGHT && eb.kind == RIGHT) {
      close_boundary_loop(right_order_, a, b, /*left=*/false);
      return;
    }
    // one LEFT, one RIGHT: a boundary-to-boundary line forms
    int left_end = (ea.kind == LEFT) ? a : b;
    int right_end = (ea.kind == LEFT) ? b : a;
    make_line(left_end, right_end, merged);
  }

  // Glue end a's frontier side directly to a boundary, attaching at the top of
  // the corresponding order list.
  void attach_left(int a) { attach_boundary(a, /*left=*/true); }
  void attach_right(int a) { attach_boundary(a, /*left=*/false); }

  // Flow mode: record a boundary-to-boundary path that exists outside the
  // frontier (the upper pattern's implied line).
  void add_free_path(const PathData& d) { completed_paths.push_back(d); }

  // Algebra mode: an upper pattern's implied line enters above every other
  // attachment; with a line already present the pair reduces with weight b.
  void add_upper_line() {
    int line = new_line_payload();
    left_order_.push_back(~line);
    right_order_.push_back(~line);
    ++nlines;
    reduce_lines();
  }

  // Fresh end whose far side is attached at the top of the boundary.
  int attach_new_left() {
    int e = new_end();
    ends_[static_cast<size_t>(e)].kind = LEFT;
    left_order_.push_back(e);
    return e;
  }
  int attach_new_right() {
    int e = new_end();
    ends_[static_cast<size_t>(e)].kind = RIGHT;
    right_order_.push_back(e);
    return e;
  }

  Kind kind_of(int e) const { return ends_[static_cast<size_t>(e)].kind; }
  int partner_of(int e) const { return ends_[static_cast<size_t>(e)].other; }

  // Read the final pattern off frontier ends site_end[1..L].
  LinkPattern read_pattern(const std::vector<int>& site_end) const {
    int L = static_cast<int>(site_end.size()) - 1;
    unsigned word = 0;
    for (int i = 1; i <= L; ++i) {
      const End& e = ends_[static_cast<size_t>(site_end[static_cast<size_t>(i)])];
      assert(e.active);
      bool close;
      if (e.kind == LEFT)
        close = true;
      else if (e.kind == RIGHT)
        close = false;
      else {
        int j = -1;
        for (int t = 1; t <= L; ++t)
          if (site_end[static_cast<size_t>(t)] == e.other) j = t;
        assert(j > 0);
        close = j < i;
      }
      word = (word << 1) | (close ? 1u : 0u);
    }
    return LinkPattern(L, word);
  }

 private:
  std::vector<End> ends_;
  std::vector<int> left_order_, right_order_;  // end ids; lines stored as ~line_id
  std::vector<PathData> strands_;
  std::vector<PathData> line_data_;
  struct Line {
    PathData data;
    bool open = true;
  };

  int new_strand_payload() {
    strands_.push_back(PathData{});
    return static_cast<int>(strands_.size()) - 1;
  }
  int new_line_payload() {
    line_data_.push_back(PathData{});
    return static_cast<int>(line_data_.size()) - 1;
  }

  PathData& strand_data(int e) { return strands_[static_cast<size_t>(ends_[static_cast<size_t>(e)].strand)]; }

  void link_ends(int a, int b) {
    ends_[static_cast<size_t>(a)].kind = PARTNER;
    ends_[static_cast<size_t>(b)].kind = PARTNER;
    ends_[static_cast<size_t>(a)].other = b;
    ends_[static_cast<size_t>(b)].other = a;
    if (flow_mode) {
      PathData merged = strands_[static_cast<size_t>(ends_[static_cast<size_t>(a)].strand)];
      if (ends_[static_cast<size_t>(b)].strand != ends_[static_cast<size_t>(a)].strand)
        merged.merge(strands_[static_cast<size_t>(ends_[static_cast<size_t>(b)].strand)]);
      set_strand(a, b, merged);
    }
  }

  void set_strand(int a, int b, const PathData& d) {
    int s = new_strand_payload();
    strands_[static_cast<size_t>(s)] = d;
    ends_[static_cast<size_t>(a)].strand = s;
    ends_[static_cast<size_t>(b)].strand = s;
  }

  static int position_in(const std::vector<int>& order, int entry) {
    for (size_t k = 0; k < order.size(); ++k)
      if (order[k] == entry) return static_cast<int>(k) + 1;  // 1-based from bottom
    return -1;
  }
  static void replace_in_order(std::vector<int>& order, int from, int to) {
    for (auto& e : order)
      if (e == from) {
        e = to;
        return;
      }
    assert(false && "attachment entry not found");
  }
  static void erase_entry(std::vector<int>& order, int entry) {
    for (size_t k = 0; k < order.size(); ++k)
      if (order[k] == entry) {
        order.erase(order.begin() + static_cast<long>(k));
        return;
      }
    assert(false && "attachment entry not found");
  }

  void close_boundary_loop(std::vector<int>& order, int a, int b, bool left) {
    int pa = position_in(order, a), pb = position_in(order, b);
    assert(pa > 0 && pb > 0);
    if (pa > pb) std::swap(pa, pb);
    assert(pb == pa + 1 && "boundary loop over non-adjacent attachments (planarity)");
    bool heavy = left ? (pa % 2 == 0) : (pa % 2 == right_parity);
    if (heavy) weight = weight * (left ? w.delta0 : w.deltaL);
    erase_entry(order, a);
    erase_entry(order, b);
  }

  void attach_boundary(int a, bool left) {
    End& ea = ends_[static_cast<size_t>(a)];
    assert(ea.active);
    ea.active = false;
    auto& order = left ? left_order_ : right_order_;
    if (ea.kind == PARTNER) {
      int p = ea.other;
      ends_[static_cast<size_t>(p)].kind = left ? LEFT : RIGHT;
      order.push_back(p);
      return;
    }
    if ((ea.kind == LEFT) == left) {
      // closes a loop against the top attachment of the same boundary
      int pa = position_in(order, a);
      assert(pa == static_cast<int>(order.size()) && "attach over non-top attachment");
      bool heavy = left ? (pa % 2 == 0) : (pa % 2 == right_parity);
      if (heavy) weight = weight * (left ? w.delta0 : w.deltaL);
      erase_entry(order, a);
      return;
    }
    // line: a's far side sits on the opposite boundary
    PathData d = flow_mode ? strands_[static_cast<size_t>(ea.strand)] : PathData{};
    int line = new_line_payload();
    line_data_[static_cast<size_t>(line)] = d;
    auto& opposite = left ? right_order_ : left_order_;
    replace_in_order(opposite, a, ~line);
    order.push_back(~line);
    ++nlines;
    reduce_lines();
  }

  void make_line(int left_end, int right_end, const PathData& d) {
    int line = new_line_payload();
    line_data_[static_cast<size_t>(line)] = d;
    replace_in_order(left_order_, left_end, ~line);
    replace_in_order(right_order_, right_end, ~line);
    ++nlines;
    reduce_lines();
  }

  void reduce_lines() {
    if (flow_mode) {
      // keep every boundary-to-boundary path as its own object
      if (nlines > 0) {
        for (auto& e : left_order_)
          if (e < 0) {
            completed_paths.push_back(line_data_[static_cast<size_t>(~e)]);
            erase_entry(right_order_, e);
            e = kErased;
          }
        left_order_.erase(std::remove(left_order_.begin(), left_order_.end(), kErased),
                          left_order_.end());
        nlines = 0;
      }
      return;
    }
    if (nlines < 2) return;
    // two lines reduce with weight b; they must be adjacent on both edges
    std::vector<int> line_entries;
    for (int e : left_order_)
      if (e < 0) line_entries.push_back(e);
    assert(line_entries.size() == 2);
    int p1 = position_in(left_order_, line_entries[0]);
    int p2 = position_in(left_order_, line_entries[1]);
    assert(std::abs(p1 - p2) == 1 && "line pair not adjacent on the left edge");
    int q1 = position_in(right_order_, line_entries[0]);
    int q2 = position_in(right_order_, line_entries[1]);
    assert(std::abs(q1 - q2) == 1 && "line pair not adjacent on the right edge");
    for (int e : line_entries) {
      erase_entry(left_order_, e);
      erase_entry(right_order_, e);
    }
    weight = weight * w.b;
    nlines = 0;
  }

  static constexpr int kErased = std::numeric_limits<int>::min();
};

}  // namespace tbloop::tl
