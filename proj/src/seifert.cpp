#include "ks/seifert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <cstdio>
#include <cstdlib>

namespace ks {

namespace {

// Crossing sign of the band's half twist as seen by two cores traversing it
// the same way. Fixed by the orientation conventions of the Morse model.
constexpr int band_twist_sign = -1;

struct dsu {
  std::vector<int> p;
  int make() { p.push_back(int(p.size())); return int(p.size()) - 1; }
  int find(int x) {
    while (p[size_t(x)] != x) x = p[size_t(x)] = p[size_t(p[size_t(x)])];
    return x;
  }
  void join(int a, int b) { p[size_t(find(a))] = find(b); }
};

// A foot of a band on a circle, recorded while walking the smoothed diagram.
struct foot_ev {
  int x;    // token index
  int sub;  // -1 junction-first, 0 plain, +1 junction-last
  int band;
  int end;  // 0 = lower/cap side, 1 = upper/cup side
};

struct band_t {
  int tok = -1;
  int eps = 0;
  int circ[2] = {-1, -1};
  int mid_x = 0;      // site position for the interior parity test
  int mid_lvl = 0;    // band midpoint sits between levels mid_lvl, mid_lvl+1
  bool turnback = false;  // antiparallel site: its strands die left of the middle
};

// The smoothed structure: circles, nesting, orientations, bands and the
// cyclic order of band feet along each circle.
struct surface {
  int n_circles = 0;
  std::vector<band_t> bands;
  std::vector<int> tau;  // +1 CCW, -1 CW (long arcs: -1 by the closure rule)
  std::vector<int> depth;
  std::vector<bool> closed;
  std::vector<std::vector<std::pair<int, int>>> feet;  // per circle: (band, end)
  std::vector<std::array<int, 2>> foot_angle;          // [band] -> angle per end
  std::vector<std::array<bool, 2>> band_interior;      // [band][end]
};

surface build_surface(const diagram& d, const trace_info& tr) {
  std::vector<bool> dir_right;
  std::vector<int> birth, death;
  std::vector<std::vector<foot_ev>> feet_of;
  dsu uf;
  std::vector<int> stack;
  std::vector<std::vector<int>> stacks;
  std::vector<std::pair<int, bool>> turns;  // (strand id, ccw)

  auto make_strand = [&](bool dir, int b) {
    uf.make();
    dir_right.push_back(dir);
    birth.push_back(b);
    death.push_back(-1);
    feet_of.push_back({});
    return int(dir_right.size()) - 1;
  };
  for (int i = 0; i < d.left; ++i) stack.push_back(make_strand(true, -1));

  surface out;
  size_t cidx = 0;
  for (size_t ti = 0; ti < d.tokens.size(); ++ti) {
    stacks.push_back(stack);
    const token& t = d.tokens[ti];
    int l = t.level;
    switch (t.kind) {
      case token_kind::cup: {
        int lo = make_strand(!t.flag, int(ti));
        int hi = make_strand(t.flag, int(ti));
        uf.join(lo, hi);
        stack.insert(stack.begin() + l, {lo, hi});
        turns.emplace_back(lo, !t.flag);  // cup is ccw iff its tip points down
        break;
      }
      case token_kind::cap: {
        int lo = stack[size_t(l)], hi = stack[size_t(l) + 1];
        uf.join(lo, hi);
        death[size_t(lo)] = int(ti);
        death[size_t(hi)] = int(ti);
        stack.erase(stack.begin() + l, stack.begin() + l + 2);
        turns.emplace_back(lo, t.flag);  // cap is ccw iff its tip points up
        break;
      }
      case token_kind::cross: {
        const crossing_info& ci = tr.crossings[cidx++];
        int lo = stack[size_t(l)], hi = stack[size_t(l) + 1];
        band_t b;
        b.tok = int(ti);
        b.eps = ci.sign;
        b.mid_x = int(ti);
        b.mid_lvl = l;
        b.turnback = ci.ne_dir_right != ci.se_dir_right;
        int bidx = int(out.bands.size());
        if (ci.ne_dir_right == ci.se_dir_right) {
          feet_of[size_t(lo)].push_back({int(ti), 0, bidx, 0});
          feet_of[size_t(hi)].push_back({int(ti), 0, bidx, 1});
          b.circ[0] = lo;
          b.circ[1] = hi;
        } else {
          // turnback smoothing: a cap-side arc and a cup-side arc
          bool ne_right = ci.ne_dir_right;
          uf.join(lo, hi);
          death[size_t(lo)] = int(ti);
          death[size_t(hi)] = int(ti);
          int in_leg = ne_right ? lo : hi;  // rightward leg carries the foot
          feet_of[size_t(in_leg)].push_back({int(ti), +1, bidx, 0});
          turns.emplace_back(lo, ne_right);
          int nlo = make_strand(!ne_right, int(ti));
          int nhi = make_strand(ne_right, int(ti));
          uf.join(nlo, nhi);
          int out_leg = ne_right ? nhi : nlo;
          feet_of[size_t(out_leg)].push_back({int(ti), -1, bidx, 1});
          turns.emplace_back(nlo, !ne_right);
          stack[size_t(l)] = nlo;
          stack[size_t(l) + 1] = nhi;
          b.circ[0] = lo;
          b.circ[1] = nlo;
        }
        out.bands.push_back(b);
        break;
      }
    }
  }
  stacks.push_back(stack);

  std::map<int, int> root_to_c;
  std::vector<int> reps;
  for (size_t id = 0; id < dir_right.size(); ++id) {
    int r = uf.find(int(id));
    if (!root_to_c.count(r)) {
      root_to_c[r] = int(root_to_c.size());
      reps.push_back(int(id));
    }
  }
  auto circ_of = [&](int id) { return root_to_c.at(uf.find(id)); };
  out.n_circles = int(root_to_c.size());
  for (auto& b : out.bands) {
    b.circ[0] = circ_of(b.circ[0]);
    b.circ[1] = circ_of(b.circ[1]);
    if (b.circ[0] == b.circ[1])
      throw model_error("seifert: band from a circle to itself");
  }

  out.closed.assign(size_t(out.n_circles), true);
  for (int i = 0; i < d.left; ++i) out.closed[size_t(circ_of(i))] = false;

  std::vector<int> half(size_t(out.n_circles), 0);
  for (auto& [id, ccw] : turns) half[size_t(circ_of(id))] += ccw ? 1 : -1;
  out.tau.assign(size_t(out.n_circles), 0);
  for (int c = 0; c < out.n_circles; ++c) {
    if (!out.closed[size_t(c)]) {
      out.tau[size_t(c)] = -1;
    } else {
      int t2 = half[size_t(c)] / 2;
      if (t2 != 1 && t2 != -1)
        throw std::logic_error("seifert: circle turning is not +-1");
      out.tau[size_t(c)] = t2;
    }
  }

  // nesting by parity of same-circle strands above a representative point
  auto strands_above = [&](int slot, double y, int circle) {
    const auto& st = stacks[size_t(slot)];
    int n = 0;
    for (size_t lev = 0; lev < st.size(); ++lev)
      if (double(lev) > y && circ_of(st[lev]) == circle) ++n;
    return n;
  };
  std::vector<std::pair<int, double>> rep(size_t(out.n_circles), {0, -1.0});
  for (int c = 0; c < out.n_circles; ++c) {
    if (!out.closed[size_t(c)]) {
      for (int i = 0; i < d.left; ++i)
        if (circ_of(i) == c) { rep[size_t(c)] = {0, double(i) - 0.25}; break; }
    } else {
      int bt = -1, blvl = -1;
      for (size_t j = 0; j < dir_right.size(); ++j) {
        if (circ_of(int(j)) != c || birth[j] < 0) continue;
        if (bt < 0 || birth[j] < bt) {
          bt = birth[j];
          blvl = d.tokens[size_t(birth[j])].level;
        }
      }
      rep[size_t(c)] = {bt + 1, double(blvl) + 0.5};
    }
  }
  out.depth.assign(size_t(out.n_circles), 0);
  for (int c = 0; c < out.n_circles; ++c)
    for (int o = 0; o < out.n_circles; ++o) {
      if (o == c) continue;
      if (strands_above(rep[size_t(c)].first, rep[size_t(c)].second, o) % 2)
        out.depth[size_t(c)]++;
    }

  out.band_interior.assign(out.bands.size(), {false, false});
  for (size_t bi = 0; bi < out.bands.size(); ++bi) {
    const band_t& b = out.bands[bi];
    // at a turnback site both strands end left of the band middle, so the
    // upward ray from the midpoint only meets levels above the site
    double y = double(b.mid_lvl) + (b.turnback ? 1.5 : 0.5);
    for (int e = 0; e < 2; ++e) {
      int n = strands_above(b.mid_x, y, b.circ[size_t(e)]);
      out.band_interior[bi][size_t(e)] = (n % 2 == 1);
    }
  }

  // cyclic feet order along each circle, following the flow
  out.feet.assign(size_t(out.n_circles), {});
  out.foot_angle.assign(out.bands.size(), {-1, -1});
  std::vector<bool> seen(dir_right.size(), false);
  auto walk_circle = [&](int start) {
    int c = circ_of(start);
    auto& order = out.feet[size_t(c)];
    int cur = start;
    size_t guard = 0;
    for (;;) {
      if (++guard > 4 * dir_right.size() + 8)
        throw std::logic_error("seifert: circle walk stuck");
      seen[size_t(cur)] = true;
      auto evs = feet_of[size_t(cur)];
      std::sort(evs.begin(), evs.end(), [](const foot_ev& a, const foot_ev& b) {
        return std::tie(a.x, a.sub) < std::tie(b.x, b.sub);
      });
      if (!dir_right[size_t(cur)]) std::reverse(evs.begin(), evs.end());
      for (auto& e : evs) {
        out.foot_angle[size_t(e.band)][size_t(e.end)] = int(order.size());
        order.emplace_back(e.band, e.end);
      }
      int jt = dir_right[size_t(cur)] ? death[size_t(cur)] : birth[size_t(cur)];
      if (jt < 0) break;
      int partner = -1;
      for (size_t j = 0; j < dir_right.size(); ++j) {
        if (int(j) == cur) continue;
        int own = dir_right[size_t(cur)] ? death[j] : birth[j];
        if (own == jt && uf.find(int(j)) == uf.find(cur)) { partner = int(j); break; }
      }
      if (partner < 0) throw std::logic_error("seifert: junction partner missing");
      cur = partner;
      if (cur == start) break;
    }
  };
  for (int i = 0; i < d.left; ++i)
    if (!seen[size_t(i)]) walk_circle(i);
  for (size_t id = 0; id < dir_right.size(); ++id) {
    if (seen[id] || !dir_right[id]) continue;
    walk_circle(int(id));
  }
  return out;
}

struct step {
  int band;
  int from;  // traversal from this end to the other
};

constexpr long long STRIDE = 1 << 20;

bool strictly_between(long long a, long long x, long long b, long long modulus) {
  auto norm = [&](long long t) { return ((t % modulus) + modulus) % modulus; };
  long long xa = norm(x - a), ba = norm(b - a);
  if (ba == 0) return xa != 0;  // a full loop around the circle
  return xa > 0 && xa < ba;
}

struct arc_visit {
  int circle;
  long long a, b;  // angular span, traveling in +orientation
  int rho;         // larger = nearer the boundary collar
};

struct curve {
  std::vector<arc_visit> arcs;
  std::map<int, std::vector<std::pair<int, int>>> travs;  // band -> (from, lane)
};

curve realize(const surface& sf, const std::vector<step>& steps, int lane_base,
              int rho_base) {
  curve c;
  int rho = rho_base;
  auto angle_of = [&](int band, int end, int lane) {
    long long base = sf.foot_angle[size_t(band)][size_t(end)];
    long long off = (end == 0) ? lane : (STRIDE - 1 - lane);
    return base * STRIDE + off;
  };
  for (size_t k = 0; k < steps.size(); ++k) {
    const step& in = steps[k];
    const step& nxt = steps[(k + 1) % steps.size()];
    int circle = sf.bands[size_t(in.band)].circ[size_t(1 - in.from)];
    int lane_in = lane_base + int(k);
    int lane_out = lane_base + int((k + 1) % steps.size());
    arc_visit av;
    av.circle = circle;
    av.a = angle_of(in.band, 1 - in.from, lane_in);
    av.b = angle_of(nxt.band, nxt.from, lane_out);
    av.rho = rho++;
    c.arcs.push_back(av);
    c.travs[in.band].push_back({in.from, lane_in});
  }
  return c;
}

long long pair_curves(const surface& sf, const curve& ci, const curve& cj) {
  long long total = 0;

  // (A) shared bands: each pair of cores crosses once inside the twist
  for (const auto& [band, tis] : ci.travs) {
    auto it = cj.travs.find(band);
    if (it == cj.travs.end()) continue;
    int eps = sf.bands[size_t(band)].eps;
    for (const auto& t1 : tis)
      for (const auto& t2 : it->second)
        total += band_twist_sign * eps * (t1.first == t2.first ? 1 : -1);
  }

  // (B) arcs on a shared disk: dives at arc ends crossing shallower runs
  for (const auto& a : ci.arcs) {
    for (const auto& b : cj.arcs) {
      if (a.circle != b.circle) continue;
      long long mod = (long long)sf.feet[size_t(a.circle)].size() * STRIDE;
      if (mod == 0) continue;
      if (b.rho < a.rho) {
        if (strictly_between(a.a, b.a, a.b, mod)) total += -1;
        if (strictly_between(a.a, b.b, a.b, mod)) total += +1;
      } else if (a.rho < b.rho) {
        if (strictly_between(b.a, a.a, b.b, mod)) total += +1;
        if (strictly_between(b.a, a.b, b.b, mod)) total += -1;
      }
    }
  }

  // (D) bands climbing into a disk's interior pass over its collar
  auto band_over = [&](const curve& owner, const curve& other) {
    long long sum = 0;
    for (const auto& [band, tis] : owner.travs) {
      for (int e = 0; e < 2; ++e) {
        if (!sf.band_interior[size_t(band)][size_t(e)]) continue;
        int circle = sf.bands[size_t(band)].circ[size_t(e)];
        long long mod = (long long)sf.feet[size_t(circle)].size() * STRIDE;
        long long fa = (long long)sf.foot_angle[size_t(band)][size_t(e)];
        int tau = sf.tau[size_t(circle)];
        for (const auto& t : tis) {
          bool inward = (t.first == e);
          long long off = (e == 0) ? t.second : (STRIDE - 1 - t.second);
          long long theta = fa * STRIDE + off;
          for (const auto& arc : other.arcs) {
            if (arc.circle != circle) continue;
            if (strictly_between(arc.a, theta, arc.b, mod))
              sum += -tau * (inward ? 1 : -1);
          }
        }
      }
    }
    return sum;
  };
  total += band_over(ci, cj);
  total += band_over(cj, ci);

  if (total % 2 != 0) {
    if (getenv("KS_SEIFERT_DEBUG")) {
      fprintf(stderr, "odd total %lld\n", (long long)total);
      for (auto& [bd, ts] : ci.travs)
        for (auto& t : ts) fprintf(stderr, " ci band %d from %d lane %d\n", bd, t.first, t.second);
      for (auto& a : ci.arcs) fprintf(stderr, " ci arc c%d %lld->%lld rho %d\n", a.circle, a.a, a.b, a.rho);
      for (auto& [bd, ts] : cj.travs)
        for (auto& t : ts) fprintf(stderr, " cj band %d from %d lane %d\n", bd, t.first, t.second);
      for (auto& a : cj.arcs) fprintf(stderr, " cj arc c%d %lld->%lld rho %d\n", a.circle, a.a, a.b, a.rho);
    }
    throw std::logic_error("seifert: odd crossing total");
  }
  // sign convention calibrated so that det(xV - x^{-1}V^T) solves the
  // skein relation with nabla(positive Hopf) = +z
  return -total / 2;
}

}  // namespace

seifert_data seifert_matrix(const diagram& d) {
  trace_info tr = trace(d);
  if (split_parts(d).size() > 1)
    throw std::invalid_argument("seifert_matrix: disconnected diagram");

  seifert_data out;
  if (tr.crossings.empty()) {
    out.circles = tr.n_comps;
    out.rank = 0;
    return out;
  }

  surface sf = build_surface(d, tr);
  out.circles = sf.n_circles;

  std::vector<int> parent_band(size_t(sf.n_circles), -1);
  std::vector<int> parent_circ(size_t(sf.n_circles), -1);
  std::vector<bool> vis(size_t(sf.n_circles), false);
  std::vector<int> queue = {0};
  vis[0] = true;
  while (!queue.empty()) {
    int c = queue.back();
    queue.pop_back();
    for (size_t bi = 0; bi < sf.bands.size(); ++bi) {
      for (int e = 0; e < 2; ++e) {
        if (sf.bands[bi].circ[size_t(e)] != c) continue;
        int o = sf.bands[bi].circ[size_t(1 - e)];
        if (vis[size_t(o)]) continue;
        vis[size_t(o)] = true;
        parent_band[size_t(o)] = int(bi);
        parent_circ[size_t(o)] = c;
        queue.push_back(o);
      }
    }
  }
  for (bool v : vis)
    if (!v) throw std::logic_error("seifert: surface graph disconnected");

  std::vector<bool> in_tree(sf.bands.size(), false);
  for (int c = 0; c < sf.n_circles; ++c)
    if (parent_band[size_t(c)] >= 0) in_tree[size_t(parent_band[size_t(c)])] = true;

  auto path_to_root = [&](int c) {
    std::vector<step> p;
    while (parent_band[size_t(c)] >= 0) {
      int b = parent_band[size_t(c)];
      int from_end = sf.bands[size_t(b)].circ[0] == c ? 0 : 1;
      p.push_back({b, from_end});
      c = parent_circ[size_t(c)];
    }
    return p;
  };

  std::vector<std::vector<step>> cycles;
  for (size_t bi = 0; bi < sf.bands.size(); ++bi) {
    if (in_tree[bi]) continue;
    int u = sf.bands[bi].circ[0], v = sf.bands[bi].circ[1];
    auto pu = path_to_root(u), pv = path_to_root(v);
    while (!pu.empty() && !pv.empty() && pu.back().band == pv.back().band) {
      pu.pop_back();
      pv.pop_back();
    }
    std::vector<step> cyc;
    cyc.push_back({int(bi), 0});
    for (auto& st : pv) cyc.push_back(st);
    for (auto it = pu.rbegin(); it != pu.rend(); ++it)
      cyc.push_back({it->band, 1 - it->from});
    cycles.push_back(cyc);
  }

  int r = int(cycles.size());
  int expected = int(tr.crossings.size()) - sf.n_circles + 1;
  if (r != expected) throw std::logic_error("seifert: rank mismatch");
  out.rank = r;
  out.v.assign(size_t(r), std::vector<std::int64_t>(size_t(r), 0));

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      int n1 = int(cycles[size_t(i)].size());
      curve a = realize(sf, cycles[size_t(i)], 0, 0);
      curve b = realize(sf, cycles[size_t(j)], n1, n1);
      out.v[size_t(i)][size_t(j)] = pair_curves(sf, a, b);
    }
  }
  return out;
}

laurent bareiss_det(std::vector<std::vector<laurent>> m) {
  const size_t n = m.size();
  if (n == 0) return laurent(1);
  laurent prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return laurent();  // zero column below the pivot
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divided_by(prev);
    prev = m[k][k];
  }
  laurent det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

laurent conway_det(const seifert_data& s) {
  const int r = s.rank;
  if (r == 0) return laurent(1);
  std::vector<std::vector<laurent>> m;
  m.assign(size_t(r), std::vector<laurent>(size_t(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[size_t(i)][size_t(j)] =
          laurent::monomial(s.v[size_t(i)][size_t(j)], 1) +
          laurent::monomial(-s.v[size_t(j)][size_t(i)], -1);
  return rewrite_in_z(bareiss_det(std::move(m)));
}

laurent alexander_det(const seifert_data& s) {
  const int r = s.rank;
  if (r == 0) return laurent(1);
  std::vector<std::vector<laurent>> m;
  m.assign(size_t(r), std::vector<laurent>(size_t(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[size_t(i)][size_t(j)] =
          laurent(s.v[size_t(i)][size_t(j)]) +
          laurent::monomial(-s.v[size_t(j)][size_t(i)], 1);
  return bareiss_det(std::move(m)).unit_normalized();
}

}  // namespace ks
