#include "ks/simplify.hpp"

#include <random>
#include <stdexcept>

namespace ks {

namespace {

using tokv = std::vector<token>;

// Try to swap tokens at positions j-1, j (acting on disjoint levels),
// adjusting level indices. Returns false when they interact.
bool commute_left(tokv& ts, size_t j) {
  token a = ts[j - 1], b = ts[j];
  auto ka = a.kind, kb = b.kind;
  int la = a.level, lb = b.level;

  auto set = [&](token first, token second) {
    ts[j - 1] = first;
    ts[j] = second;
    return true;
  };

  if (ka == token_kind::cross) {
    if (kb == token_kind::cross) {
      if (lb + 1 < la || lb > la + 1) return set(b, a);
      return false;
    }
    if (kb == token_kind::cup) {
      if (lb <= la) { a.level += 2; return set(b, a); }
      if (lb >= la + 2) return set(b, a);
      return false;
    }
    // cap
    if (lb + 1 < la) { a.level -= 2; return set(b, a); }
    if (lb >= la + 2) return set(b, a);
    return false;
  }
  if (ka == token_kind::cup) {
    if (kb == token_kind::cross) {
      if (lb + 1 < la) return set(b, a);
      if (lb >= la + 2) { b.level -= 2; return set(b, a); }
      return false;
    }
    if (kb == token_kind::cup) {
      if (lb < la) { a.level += 2; return set(b, a); }
      if (lb >= la + 2) { b.level -= 2; return set(b, a); }
      return false;
    }
    if (lb + 1 < la) { a.level -= 2; return set(b, a); }
    if (lb >= la + 2) { b.level -= 2; return set(b, a); }
    return false;
  }
  // ka == cap
  if (kb == token_kind::cross) {
    if (lb + 1 < la) return set(b, a);
    if (lb >= la) { b.level += 2; return set(b, a); }
    return false;
  }
  if (kb == token_kind::cup) {
    if (lb < la) { a.level += 2; return set(b, a); }
    if (lb > la) { b.level += 2; return set(b, a); }
    return false;
  }
  if (lb + 1 < la) { a.level -= 2; return set(b, a); }
  if (lb >= la) { b.level += 2; return set(b, a); }
  return false;
}

// When a colored cup is removed, push its color to another birth point of
// the same component so the component stays painted.
void preserve_cup_color(diagram& d, size_t cup_idx) {
  color c = d.tokens[cup_idx].col;
  if (c == color::none) return;
  trace_info tr = trace(d);
  int comp = tr.tok_comps[cup_idx][0];
  if (!tr.comps[size_t(comp)].closed) return;  // boundary colors cover it
  for (size_t i = 0; i < d.tokens.size(); ++i) {
    if (i == cup_idx) continue;
    if (d.tokens[i].kind != token_kind::cup) continue;
    if (tr.tok_comps[i][0] != comp) continue;
    d.tokens[i].col = c;
    return;
  }
  throw std::logic_error("simplify: removing the last birth of a colored component");
}

// One pass of the local reductions; true if anything fired.
bool reduce_once(diagram& d) {
  tokv& ts = d.tokens;
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    token& a = ts[i];
    token& b = ts[i + 1];
    // R II: opposite crossings on the same pair
    if (a.kind == token_kind::cross && b.kind == token_kind::cross &&
        a.level == b.level && a.flag != b.flag) {
      ts.erase(ts.begin() + long(i), ts.begin() + long(i) + 2);
      return true;
    }
    // R I: kink on a cup / into a cap
    if (a.kind == token_kind::cup && b.kind == token_kind::cross &&
        b.level == a.level) {
      a.flag = !a.flag;
      ts.erase(ts.begin() + long(i) + 1);
      return true;
    }
    if (a.kind == token_kind::cross && b.kind == token_kind::cap &&
        b.level == a.level) {
      b.flag = !b.flag;
      ts.erase(ts.begin() + long(i));
      return true;
    }
    // zig-zags (cup and cap sharing exactly one strand)
    if (a.kind == token_kind::cup && b.kind == token_kind::cap &&
        (b.level == a.level + 1 || b.level + 1 == a.level)) {
      preserve_cup_color(d, i);
      ts.erase(ts.begin() + long(i), ts.begin() + long(i) + 2);
      return true;
    }
    // R I: full curl triples around a through-strand
    if (i + 2 < ts.size()) {
      const token& c = ts[i + 2];
      bool loop_above = a.kind == token_kind::cup && b.kind == token_kind::cross &&
                        c.kind == token_kind::cap && b.level + 1 == a.level &&
                        c.level == a.level;
      bool loop_below = a.kind == token_kind::cup && b.kind == token_kind::cross &&
                        c.kind == token_kind::cap && b.level == a.level + 1 &&
                        c.level == a.level;
      if (loop_above || loop_below) {
        preserve_cup_color(d, i);
        ts.erase(ts.begin() + long(i), ts.begin() + long(i) + 3);
        return true;
      }
    }
  }
  return false;
}

// Slide a crossing across an adjacent turn (an isotopy, applied only in the
// turn-lowering direction so the rewriting terminates).
bool slide_once(diagram& d) {
  tokv& ts = d.tokens;
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    token& a = ts[i];
    token& b = ts[i + 1];
    if (a.kind == token_kind::cup && b.kind == token_kind::cross &&
        b.level + 1 == a.level) {
      int l = b.level;
      token nu = cup(l, a.flag, a.col);
      token nx = cross(l + 1, !b.flag);
      a = nu;
      b = nx;
      return true;
    }
    if (a.kind == token_kind::cross && b.kind == token_kind::cap &&
        b.level == a.level + 1) {
      int l = a.level;
      token nx = cross(l + 1, !a.flag);
      token nc = cap(l, b.flag);
      a = nx;
      b = nc;
      return true;
    }
  }
  return false;
}

void pack_left(diagram& d) {
  tokv& ts = d.tokens;
  for (size_t j = 1; j < ts.size(); ++j) {
    size_t k = j;
    while (k > 0 && commute_left(ts, k)) --k;
  }
}

}  // namespace

diagram simplify(const diagram& d) {
  diagram out = d;
  // Rounds are bounded to keep the pack/slide helpers from ping-ponging;
  // every round that fires a reduction strictly shrinks the word.
  for (int round = 0; round < 64; ++round) {
    bool fired = false;
    while (reduce_once(out)) fired = true;
    pack_left(out);
    while (reduce_once(out)) fired = true;
    while (slide_once(out)) {
      while (reduce_once(out)) fired = true;
    }
    while (reduce_once(out)) fired = true;
    if (!fired) break;
  }
  out.check();
  return out;
}

diagram make_scannable(const diagram& d) {
  trace_info tr = trace(d);
  diagram out;
  out.left = d.left;
  out.left_colors = d.left_colors;
  size_t ci = 0;
  for (size_t ti = 0; ti < d.tokens.size(); ++ti) {
    const token& t = d.tokens[ti];
    if (t.kind != token_kind::cross) {
      out.tokens.push_back(t);
      continue;
    }
    const crossing_info& c = tr.crossings[ci++];
    if (c.ne_dir_right == c.se_dir_right) {
      out.tokens.push_back(t);
      continue;
    }
    int l = t.level;
    if (c.ne_dir_right) {
      // NE rightward, SE leftward: turn the SE strand below
      out.tokens.push_back(cup(l, true));
      out.tokens.push_back(cross(l + 1, !t.flag));
      out.tokens.push_back(cap(l + 2, true));
    } else {
      out.tokens.push_back(cup(l + 2, false));
      out.tokens.push_back(cross(l + 1, !t.flag));
      out.tokens.push_back(cap(l, false));
    }
  }
  out.check();
  return out;
}

diagram perturb(const diagram& d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  diagram cur = d;
  for (int step = 0; step < n; ++step) {
    trace_info tr = trace(cur);
    // enumerate insertion slots: (token position, stack snapshot)
    std::vector<std::vector<bool>> dirs_at;  // strand directions per slot
    {
      std::vector<bool> st;
      for (int i = 0; i < cur.left; ++i) st.push_back(true);
      dirs_at.push_back(st);
      for (const auto& t : cur.tokens) {
        switch (t.kind) {
          case token_kind::cup:
            st.insert(st.begin() + t.level, {!t.flag, t.flag});
            break;
          case token_kind::cap:
            st.erase(st.begin() + t.level, st.begin() + t.level + 2);
            break;
          case token_kind::cross:
            std::swap(st[size_t(t.level)], st[size_t(t.level) + 1]);
            break;
        }
        dirs_at.push_back(st);
      }
    }
    // choose a slot with at least one strand
    std::vector<size_t> slots;
    for (size_t s = 0; s < dirs_at.size(); ++s)
      if (!dirs_at[s].empty()) slots.push_back(s);
    if (slots.empty()) return cur;
    size_t pos = slots[rng() % slots.size()];
    const auto& dirs = dirs_at[pos];

    int kind = int(rng() % 2);
    std::vector<token> ins;
    if (kind == 0) {
      // R I: curl on a random strand
      int l = int(rng() % dirs.size());
      bool right = dirs[size_t(l)];
      bool o = rng() % 2;
      if (right)
        ins = {cup(l + 1, false), cross(l, o), cap(l + 1, true)};
      else
        ins = {cup(l + 1, true), cross(l, o), cap(l + 1, false)};
    } else {
      // R II: poke between co-directed neighbours when available
      std::vector<int> cand;
      for (size_t l = 0; l + 1 < dirs.size(); ++l)
        if (dirs[l] == dirs[l + 1]) cand.push_back(int(l));
      if (cand.empty()) { --step; continue; }
      int l = cand[rng() % cand.size()];
      bool o = rng() % 2;
      ins = {cross(l, o), cross(l, !o)};
    }
    cur.tokens.insert(cur.tokens.begin() + long(pos), ins.begin(), ins.end());
    cur.check();
    (void)tr;
  }
  return cur;
}

}  // namespace ks
