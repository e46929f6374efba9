#include "ks/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ks {

std::string color_name(color c) {
  switch (c) {
    case color::none: return "none";
    case color::green: return "green";
    case color::red: return "red";
    case color::black: return "black";
  }
  return "?";
}

int diagram::right_count() const {
  int w = left;
  for (const auto& t : tokens) {
    if (t.kind == token_kind::cup) w += 2;
    else if (t.kind == token_kind::cap) w -= 2;
  }
  return w;
}

int diagram::max_width() const {
  int w = left, m = left;
  for (const auto& t : tokens) {
    if (t.kind == token_kind::cup) w += 2;
    else if (t.kind == token_kind::cap) w -= 2;
    m = std::max(m, w);
  }
  return m;
}

size_t diagram::crossing_count() const {
  size_t n = 0;
  for (const auto& t : tokens)
    if (t.kind == token_kind::cross) ++n;
  return n;
}

void diagram::check() const {
  if (int(left_colors.size()) != left)
    throw std::logic_error("diagram: left_colors size mismatch");
  int w = left;
  for (const auto& t : tokens) {
    switch (t.kind) {
      case token_kind::cup:
        if (t.level < 0 || t.level > w) throw std::logic_error("diagram: cup level");
        w += 2;
        break;
      case token_kind::cap:
        if (t.level < 0 || t.level + 1 >= w) throw std::logic_error("diagram: cap level");
        w -= 2;
        break;
      case token_kind::cross:
        if (t.level < 0 || t.level + 1 >= w) throw std::logic_error("diagram: cross level");
        break;
    }
  }
  trace(*this);  // validates orientations and colors
}

std::string diagram::canonical_string() const {
  std::string s = "L" + std::to_string(left) + ":";
  for (color c : left_colors) s += color_name(c)[0];
  for (const auto& t : tokens) {
    switch (t.kind) {
      case token_kind::cup: s += "("; break;
      case token_kind::cap: s += ")"; break;
      case token_kind::cross: s += "x"; break;
    }
    s += std::to_string(t.level);
    s += t.flag ? "+" : "-";
    if (t.kind == token_kind::cup) s += color_name(t.col)[0];
  }
  return s;
}

std::uint64_t diagram::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : canonical_string()) {
    h ^= std::uint64_t(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

struct dsu {
  std::vector<int> p;
  int make() {
    p.push_back(int(p.size()));
    return int(p.size()) - 1;
  }
  int find(int x) {
    while (p[size_t(x)] != x) x = p[size_t(x)] = p[size_t(p[size_t(x)])];
    return x;
  }
  void join(int a, int b) { p[size_t(find(a))] = find(b); }
};

// Shared stack simulation: strand ids, directions, lifetimes.
struct sim_result {
  dsu uf;
  std::vector<bool> dir_right;               // by strand id
  std::vector<int> birth_tok, death_tok;     // -1 = boundary
  std::vector<std::vector<int>> cross_toks;  // by strand id, token order
  std::vector<std::array<int, 2>> tok_ids;   // per token
  std::vector<int> right_ids;                // right boundary, bottom up
};

sim_result simulate(const diagram& d) {
  sim_result r;
  std::vector<int> stack;
  auto make_strand = [&](bool dir, int birth) {
    int id = r.uf.make();
    r.dir_right.push_back(dir);
    r.birth_tok.push_back(birth);
    r.death_tok.push_back(-1);
    r.cross_toks.push_back({});
    return id;
  };
  for (int i = 0; i < d.left; ++i) stack.push_back(make_strand(true, -1));
  r.tok_ids.assign(d.tokens.size(), {-1, -1});

  for (size_t ti = 0; ti < d.tokens.size(); ++ti) {
    const token& t = d.tokens[ti];
    int l = t.level;
    switch (t.kind) {
      case token_kind::cup: {
        if (l < 0 || l > int(stack.size())) throw std::logic_error("sim: cup level");
        // tip up: flow enters along the lower leg, leaves along the upper
        int lo = make_strand(!t.flag, int(ti));
        int hi = make_strand(t.flag, int(ti));
        r.uf.join(lo, hi);
        stack.insert(stack.begin() + l, {lo, hi});
        r.tok_ids[ti] = {lo, hi};
        break;
      }
      case token_kind::cap: {
        if (l < 0 || l + 1 >= int(stack.size())) throw std::logic_error("sim: cap level");
        int lo = stack[size_t(l)], hi = stack[size_t(l) + 1];
        bool lo_r = r.dir_right[size_t(lo)], hi_r = r.dir_right[size_t(hi)];
        bool ok = t.flag ? (lo_r && !hi_r) : (!lo_r && hi_r);
        if (!ok) throw std::logic_error("sim: cap orientation mismatch");
        r.uf.join(lo, hi);
        r.death_tok[size_t(lo)] = int(ti);
        r.death_tok[size_t(hi)] = int(ti);
        stack.erase(stack.begin() + l, stack.begin() + l + 2);
        r.tok_ids[ti] = {lo, hi};
        break;
      }
      case token_kind::cross: {
        if (l < 0 || l + 1 >= int(stack.size())) throw std::logic_error("sim: cross level");
        int ne = stack[size_t(l)], se = stack[size_t(l) + 1];
        r.cross_toks[size_t(ne)].push_back(int(ti));
        r.cross_toks[size_t(se)].push_back(int(ti));
        std::swap(stack[size_t(l)], stack[size_t(l) + 1]);
        r.tok_ids[ti] = {ne, se};
        break;
      }
    }
  }
  for (int id : stack) {
    if (!r.dir_right[size_t(id)])
      throw std::logic_error("sim: leftward strand at right boundary");
  }
  r.right_ids = stack;
  return r;
}

}  // namespace

int trace_info::crossing_index(int tok) const {
  for (size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i].tok == tok) return int(i);
  return -1;
}

trace_info trace(const diagram& d) {
  if (int(d.left_colors.size()) != d.left)
    throw std::logic_error("trace: left_colors size mismatch");
  sim_result sim = simulate(d);

  trace_info out;
  out.tok_comps.assign(d.tokens.size(), {-1, -1});

  std::map<int, int> root_to_comp;
  auto comp_of = [&](int id) { return root_to_comp.at(sim.uf.find(id)); };

  for (int i = 0; i < d.left; ++i) {
    int r = sim.uf.find(i);
    if (!root_to_comp.count(r)) {
      root_to_comp[r] = int(root_to_comp.size());
      component_info ci;
      ci.closed = false;
      ci.left_point = i;
      out.comps.push_back(ci);
    }
  }
  for (size_t ti = 0; ti < d.tokens.size(); ++ti) {
    for (int id : sim.tok_ids[ti]) {
      if (id < 0) continue;
      int r = sim.uf.find(id);
      if (!root_to_comp.count(r)) {
        root_to_comp[r] = int(root_to_comp.size());
        component_info ci;
        ci.closed = true;
        ci.first_token = int(ti);
        out.comps.push_back(ci);
      }
      auto& c = out.comps[size_t(root_to_comp[r])];
      if (c.first_token < 0) c.first_token = int(ti);
    }
  }
  out.n_comps = int(root_to_comp.size());

  std::vector<color> cols(size_t(out.n_comps), color::none);
  auto paint = [&](int comp, color c) {
    if (c == color::none) return;
    if (cols[size_t(comp)] == color::none) cols[size_t(comp)] = c;
    else if (cols[size_t(comp)] != c)
      throw std::logic_error("trace: conflicting component colors");
  };
  for (int i = 0; i < d.left; ++i) paint(comp_of(i), d.left_colors[size_t(i)]);
  for (size_t ti = 0; ti < d.tokens.size(); ++ti)
    if (d.tokens[ti].kind == token_kind::cup)
      paint(comp_of(sim.tok_ids[ti][0]), d.tokens[ti].col);
  for (int c = 0; c < out.n_comps; ++c) out.comps[size_t(c)].col = cols[size_t(c)];

  for (int i = 0; i < d.left; ++i) out.comp_of_left.push_back(comp_of(i));
  for (int id : sim.right_ids) out.comp_of_right.push_back(comp_of(id));
  for (size_t ti = 0; ti < d.tokens.size(); ++ti)
    for (size_t s = 0; s < 2; ++s)
      if (sim.tok_ids[ti][s] >= 0) out.tok_comps[ti][s] = comp_of(sim.tok_ids[ti][s]);

  for (size_t ti = 0; ti < d.tokens.size(); ++ti) {
    const token& t = d.tokens[ti];
    if (t.kind != token_kind::cross) continue;
    crossing_info ci;
    ci.tok = int(ti);
    int ne = sim.tok_ids[ti][0], se = sim.tok_ids[ti][1];
    ci.ne_comp = comp_of(ne);
    ci.se_comp = comp_of(se);
    ci.ne_dir_right = sim.dir_right[size_t(ne)];
    ci.se_dir_right = sim.dir_right[size_t(se)];
    int p = ci.ne_dir_right ? 1 : -1, q = ci.se_dir_right ? 1 : -1;
    ci.sign = p * q * (t.flag ? 1 : -1);
    ci.over_comp = t.flag ? ci.se_comp : ci.ne_comp;
    ci.under_comp = t.flag ? ci.ne_comp : ci.se_comp;
    out.crossings.push_back(ci);
  }
  return out;
}

std::vector<passage> trace_info::walk(const diagram& d, int comp) const {
  sim_result sim = simulate(d);

  int start = -1;
  if (!comps[size_t(comp)].closed) {
    start = comps[size_t(comp)].left_point;
  } else {
    int ft = comps[size_t(comp)].first_token;
    start = sim.tok_ids[size_t(ft)][0];
    if (!sim.dir_right[size_t(start)]) start = sim.tok_ids[size_t(ft)][1];
  }

  std::vector<passage> out;
  auto emit = [&](int tok_idx, int strand_id) {
    int ci = crossing_index(tok_idx);
    const crossing_info& c = crossings[size_t(ci)];
    bool is_ne = sim.tok_ids[size_t(tok_idx)][0] == strand_id;
    passage p;
    p.tok = tok_idx;
    p.sign = c.sign;
    bool ne_over = !d.tokens[size_t(tok_idx)].flag;
    p.over = is_ne ? ne_over : !ne_over;
    p.other_comp = is_ne ? c.se_comp : c.ne_comp;
    out.push_back(p);
  };

  int cur = start;
  size_t guard = 0;
  for (;;) {
    if (++guard > 4 * (sim.dir_right.size() + 4))
      throw std::logic_error("walk: no termination");
    if (sim.dir_right[size_t(cur)]) {
      for (int tk : sim.cross_toks[size_t(cur)]) emit(tk, cur);
      int dt = sim.death_tok[size_t(cur)];
      if (dt < 0) break;  // right boundary
      int a = sim.tok_ids[size_t(dt)][0], b = sim.tok_ids[size_t(dt)][1];
      cur = (a == cur) ? b : a;
    } else {
      auto& cts = sim.cross_toks[size_t(cur)];
      for (auto it = cts.rbegin(); it != cts.rend(); ++it) emit(*it, cur);
      int bt = sim.birth_tok[size_t(cur)];
      if (bt < 0) throw std::logic_error("walk: leftward boundary strand");
      int a = sim.tok_ids[size_t(bt)][0], b = sim.tok_ids[size_t(bt)][1];
      cur = (a == cur) ? b : a;
    }
    if (cur == start) break;
  }
  return out;
}

// Constructions -------------------------------------------------------------

diagram from_braid(const braid_word& w, closure_mode mode) {
  const int n = w.strands;
  diagram d;
  if (mode == closure_mode::long_open_top) {
    d.left = 1;
    d.left_colors = {color::none};
    for (int i = 0; i + 1 < n; ++i) d.tokens.push_back(cup(i, true));
    for (int k : w.letters)
      d.tokens.push_back(cross(n - 2 + std::abs(k), k > 0));
    for (int i = n - 2; i >= 0; --i) d.tokens.push_back(cap(i, false));
  } else {
    d.left = 0;
    for (int i = 0; i < n; ++i) d.tokens.push_back(cup(i, true));
    for (int k : w.letters)
      d.tokens.push_back(cross(n - 1 + std::abs(k), k > 0));
    for (int i = n - 1; i >= 0; --i) d.tokens.push_back(cap(i, false));
  }
  d.check();
  return d;
}

diagram product(const diagram& a, const diagram& b) {
  if (a.right_count() != b.left)
    throw std::invalid_argument("product: boundary widths differ");
  diagram d;
  d.left = a.left;
  d.left_colors = a.left_colors;
  d.tokens = a.tokens;
  d.tokens.insert(d.tokens.end(), b.tokens.begin(), b.tokens.end());
  return d;
}

diagram two_cable(const diagram& d) {
  // Each level doubles. On a rightward strand the companion runs above (on
  // the left of the orientation), on a leftward strand below; the cup and
  // cap variants encode this without needing explicit direction tracking.
  diagram out;
  out.left = 2 * d.left;
  for (int i = 0; i < d.left; ++i) {
    out.left_colors.push_back(color::green);
    out.left_colors.push_back(color::red);
  }
  for (const auto& t : d.tokens) {
    int L = 2 * t.level;
    switch (t.kind) {
      case token_kind::cup:
        // outer pair first, then the inner; tip-up turns put red outside
        out.tokens.push_back(cup(L, t.flag, t.flag ? color::red : color::green));
        out.tokens.push_back(cup(L + 1, t.flag, t.flag ? color::green : color::red));
        break;
      case token_kind::cap:
        out.tokens.push_back(cap(L + 1, t.flag));
        out.tokens.push_back(cap(L, t.flag));
        break;
      case token_kind::cross:
        out.tokens.push_back(cross(L + 1, t.flag));
        out.tokens.push_back(cross(L, t.flag));
        out.tokens.push_back(cross(L + 2, t.flag));
        out.tokens.push_back(cross(L + 1, t.flag));
        break;
    }
  }
  out.check();
  return out;
}

diagram add_curl(const diagram& d, int sign, bool at_right_end) {
  if (d.left != 1 || d.right_count() != 1)
    throw std::invalid_argument("add_curl: expected a long 1-1 diagram");
  diagram out = d;
  std::vector<token> curl = {cup(1, false), cross(0, sign > 0), cap(1, true)};
  if (at_right_end)
    out.tokens.insert(out.tokens.end(), curl.begin(), curl.end());
  else
    out.tokens.insert(out.tokens.begin(), curl.begin(), curl.end());
  out.check();
  return out;
}

diagram invert(const diagram& d) {
  trace_info tr = trace(d);
  diagram out;
  out.left = d.right_count();
  for (int c : tr.comp_of_right) out.left_colors.push_back(tr.comps[size_t(c)].col);
  for (size_t i = d.tokens.size(); i-- > 0;) {
    const token& t = d.tokens[i];
    switch (t.kind) {
      case token_kind::cup:
        out.tokens.push_back(cap(t.level, !t.flag));
        break;
      case token_kind::cap: {
        color c = tr.comps[size_t(tr.tok_comps[i][0])].col;
        out.tokens.push_back(cup(t.level, !t.flag, c));
        break;
      }
      case token_kind::cross:
        out.tokens.push_back(cross(t.level, t.flag));
        break;
    }
  }
  out.check();
  return out;
}

diagram standard_closure(const diagram& d) {
  int k = d.left;
  if (k != d.right_count())
    throw std::invalid_argument("standard_closure: boundary widths differ");
  if (k == 0) return d;
  trace_info tr = trace(d);
  for (int i = 0; i < k; ++i)
    if (tr.comp_of_left[size_t(i)] != tr.comp_of_right[size_t(i)])
      throw std::invalid_argument("standard_closure: endpoint order not aligned");
  diagram out;
  out.left = 0;
  // cup(i) becomes the arc feeding left point k-1-i (arcs nest below)
  for (int i = 0; i < k; ++i) {
    color c = tr.comps[size_t(tr.comp_of_left[size_t(k - 1 - i)])].col;
    out.tokens.push_back(cup(i, true, c));
  }
  for (const auto& t : d.tokens) {
    token s = t;
    s.level += k;
    out.tokens.push_back(s);
  }
  for (int i = k - 1; i >= 0; --i) out.tokens.push_back(cap(i, false));
  out.check();
  return out;
}

diagram delete_components(const diagram& d, const std::vector<int>& comps) {
  trace_info tr = trace(d);
  auto dead = [&](int c) {
    return std::find(comps.begin(), comps.end(), c) != comps.end();
  };

  diagram out;
  std::vector<bool> alive;
  out.left = 0;
  for (int i = 0; i < d.left; ++i) {
    bool a = !dead(tr.comp_of_left[size_t(i)]);
    alive.push_back(a);
    if (a) {
      ++out.left;
      out.left_colors.push_back(d.left_colors[size_t(i)]);
    }
  }
  auto live_below = [&](int level) {
    int n = 0;
    for (int i = 0; i < level; ++i) n += alive[size_t(i)] ? 1 : 0;
    return n;
  };
  for (size_t ti = 0; ti < d.tokens.size(); ++ti) {
    const token& t = d.tokens[ti];
    int l = t.level;
    switch (t.kind) {
      case token_kind::cup: {
        bool a = !dead(tr.tok_comps[ti][0]);
        if (a) out.tokens.push_back(cup(live_below(l), t.flag, t.col));
        alive.insert(alive.begin() + l, {a, a});
        break;
      }
      case token_kind::cap: {
        if (alive[size_t(l)]) out.tokens.push_back(cap(live_below(l), t.flag));
        alive.erase(alive.begin() + l, alive.begin() + l + 2);
        break;
      }
      case token_kind::cross: {
        if (alive[size_t(l)] && alive[size_t(l) + 1])
          out.tokens.push_back(cross(live_below(l), t.flag));
        std::swap(alive[size_t(l)], alive[size_t(l) + 1]);
        break;
      }
    }
  }
  out.check();
  return out;
}

diagram keep_components(const diagram& d, const std::vector<int>& comps) {
  trace_info tr = trace(d);
  std::vector<int> del;
  for (int c = 0; c < tr.n_comps; ++c)
    if (std::find(comps.begin(), comps.end(), c) == comps.end()) del.push_back(c);
  return delete_components(d, del);
}

diagram smooth_crossing(const diagram& d, int tok) {
  if (tok < 0 || tok >= int(d.tokens.size()) ||
      d.tokens[size_t(tok)].kind != token_kind::cross)
    throw std::invalid_argument("smooth_crossing: not a crossing id");
  trace_info tr = trace(d);
  int ci = tr.crossing_index(tok);
  const crossing_info& c = tr.crossings[size_t(ci)];
  diagram out = d;
  auto it = out.tokens.begin() + tok;
  int l = it->level;
  if (c.ne_dir_right == c.se_dir_right) {
    out.tokens.erase(it);
  } else {
    color ca = tr.comps[size_t(c.ne_comp)].col;
    color cb = tr.comps[size_t(c.se_comp)].col;
    color birth = ca == cb ? ca : color::none;
    bool ne_right = c.ne_dir_right;
    *it = cup(l, ne_right, birth);
    out.tokens.insert(it, cap(l, ne_right));
  }
  return out;
}

diagram switch_crossing(const diagram& d, int tok) {
  if (tok < 0 || tok >= int(d.tokens.size()) ||
      d.tokens[size_t(tok)].kind != token_kind::cross)
    throw std::invalid_argument("switch_crossing: not a crossing id");
  diagram out = d;
  out.tokens[size_t(tok)].flag = !out.tokens[size_t(tok)].flag;
  return out;
}

int crossing_class(const diagram& d, int tok) {
  if (d.left != 1 || d.right_count() != 1)
    throw std::invalid_argument("crossing_class: expected a long diagram");
  trace_info tr = trace(d);
  int ci = tr.crossing_index(tok);
  if (ci < 0) throw std::invalid_argument("crossing_class: not a crossing id");
  const crossing_info& c = tr.crossings[size_t(ci)];
  int long_comp = tr.comp_of_left[0];
  if (c.ne_comp != long_comp || c.se_comp != long_comp)
    throw std::invalid_argument(
        "crossing_class: not a self-crossing of the long component");

  // The oriented smoothing joins first-pass-in to second-pass-out, so the
  // piece from over-cross to under-cross is the long one exactly when the
  // walk from the left tail meets the under-pass first.
  auto ps = tr.walk(d, long_comp);
  for (const auto& p : ps)
    if (p.tok == tok) return p.over ? 0 : 1;
  throw std::logic_error("crossing_class: passage not found");
}

int writhe(const diagram& d) {
  trace_info tr = trace(d);
  int w = 0;
  for (const auto& c : tr.crossings) w += c.sign;
  return w;
}

int component_writhe(const diagram& d, int comp) {
  trace_info tr = trace(d);
  int w = 0;
  for (const auto& c : tr.crossings)
    if (c.ne_comp == comp && c.se_comp == comp) w += c.sign;
  return w;
}

int whitney_index(const diagram& d, int comp) {
  trace_info tr = trace(d);
  int half_turns = 0;
  for (size_t ti = 0; ti < d.tokens.size(); ++ti) {
    const token& t = d.tokens[ti];
    if (t.kind == token_kind::cross) continue;
    if (tr.tok_comps[ti][0] != comp) continue;
    bool ccw = (t.kind == token_kind::cap) == t.flag;
    half_turns += ccw ? 1 : -1;
  }
  return half_turns / 2;
}

std::vector<std::vector<int>> split_parts(const diagram& d) {
  trace_info tr = trace(d);
  dsu uf;
  for (int i = 0; i < tr.n_comps; ++i) uf.make();
  for (const auto& c : tr.crossings)
    if (c.ne_comp != c.se_comp) uf.join(c.ne_comp, c.se_comp);
  std::map<int, std::vector<int>> parts;
  for (int i = 0; i < tr.n_comps; ++i) parts[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : parts) out.push_back(v);
  return out;
}

std::string dump(const diagram& d) { return d.canonical_string(); }

}  // namespace ks
