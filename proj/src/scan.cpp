#include "ks/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "ks/simplify.hpp"

namespace ks {

std::string scan_parameter::str() const {
  std::ostringstream os;
  os << "(" << aux.str() << " @" << aux_letter << (under ? " under" : " over")
     << (cabled ? " cabled" : "") << (aux_curls ? " curled" : "") << ")";
  return os.str();
}

int unique_one_crossing_letter(const braid_word& w) {
  diagram d = from_braid(w, closure_mode::long_open_top);
  trace_info tr = trace(d);
  int found = -1;
  for (size_t i = 0; i < tr.crossings.size(); ++i) {
    if (crossing_class(d, tr.crossings[i].tok) == 1) {
      if (found >= 0)
        throw std::invalid_argument("unique_one_crossing_letter: not unique");
      found = int(i);
    }
  }
  if (found < 0)
    throw std::invalid_argument("unique_one_crossing_letter: none found");
  return found;
}

int aux_crossing_class(const braid_word& w, int letter) {
  diagram d = from_braid(w, closure_mode::long_open_top);
  trace_info tr = trace(d);
  if (letter < 0 || letter >= int(tr.crossings.size()))
    throw std::invalid_argument("aux_crossing_class: bad letter index");
  return crossing_class(d, tr.crossings[size_t(letter)].tok);
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  size_t workers = std::min<size_t>(std::max(1u, hw), 8);
  if (n <= 1 || workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers && w < n; ++w)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

namespace {

// ---------------------------------------------------------------------------
// local braid words of a triple crossing in the sweep

struct letter_t {
  int idx;  // 1 or 2
  int sgn;  // +1 / -1
  friend bool operator==(const letter_t&, const letter_t&) = default;
};
using word_t = std::vector<letter_t>;

const word_t& negative_side_word(int type) {
  static const std::map<int, word_t> words = {
      {1, {{1, 1}, {2, 1}, {1, 1}}},   {3, {{1, 1}, {2, -1}, {1, -1}}},
      {4, {{1, -1}, {2, -1}, {1, 1}}}, {5, {{2, 1}, {1, 1}, {2, -1}}},
      {7, {{2, -1}, {1, 1}, {2, 1}}},  {8, {{2, -1}, {1, -1}, {2, -1}}}};
  return words.at(type);
}
const word_t& positive_side_word(int type) {
  static const std::map<int, word_t> words = {
      {1, {{2, 1}, {1, 1}, {2, 1}}},   {3, {{2, -1}, {1, -1}, {2, 1}}},
      {4, {{2, 1}, {1, -1}, {2, -1}}}, {5, {{1, -1}, {2, 1}, {1, 1}}},
      {7, {{1, 1}, {2, 1}, {1, -1}}},  {8, {{1, -1}, {2, -1}, {1, -1}}}};
  return words.at(type);
}

// The signed pair of partial smoothings of each braid-like type.
std::array<std::pair<int, word_t>, 2> smoothing_words(int type) {
  switch (type) {
    case 1: return {{{+1, {{1, 1}, {1, 1}}}, {-1, {{2, 1}, {2, 1}}}}};
    case 3: return {{{+1, {{1, -1}, {2, 1}}}, {-1, {{1, 1}, {2, -1}}}}};
    case 4: return {{{+1, {{2, 1}, {1, -1}}}, {-1, {{2, -1}, {1, 1}}}}};
    case 5: return {{{+1, {{1, 1}, {2, -1}}}, {-1, {{1, -1}, {2, 1}}}}};
    case 7: return {{{+1, {{2, -1}, {1, 1}}}, {-1, {{2, 1}, {1, -1}}}}};
    case 8: return {{{+1, {{1, -1}, {1, -1}}}, {-1, {{2, -1}, {2, -1}}}}};
  }
  throw model_error("smoothing_words: star-like local type");
}

struct v2d {
  double x, y;
};
double dot(v2d a, v2d b) { return a.x * b.x + a.y * b.y; }
v2d perp(v2d u) { return {-u.y, u.x}; }

// Strand roles: 0 = the fixed branch, 1 = the tangle strand entering at the
// lower level, 2 = at the upper level.
struct classified {
  int local_type = 0;
  int move_sign = 0;
  std::array<int, 3> strand_at_pos{};  // braid position 1..3 -> role
  bool time_along_x = true;
};

classified classify_r3(bool under_side, int eps, bool p_right, bool q_right,
                       bool ne_under) {
  const double s2 = std::sqrt(0.5);
  v2d dirs[3];
  double beta = under_side ? -double(eps) : double(eps);
  dirs[0] = {0.0, beta};
  dirs[1] = {p_right ? s2 : -s2, p_right ? s2 : -s2};
  dirs[2] = {q_right ? s2 : -s2, q_right ? -s2 : s2};

  double ang[3];
  for (int i = 0; i < 3; ++i) ang[i] = std::atan2(dirs[i].y, dirs[i].x);
  std::array<double, 3> sorted{ang[0], ang[1], ang[2]};
  std::sort(sorted.begin(), sorted.end());
  double best_gap = -1, mid = 0;
  for (int i = 0; i < 3; ++i) {
    double a = sorted[size_t(i)];
    double b = (i == 2) ? sorted[0] + 2 * M_PI : sorted[size_t(i) + 1];
    if (b - a > best_gap) {
      best_gap = b - a;
      mid = (a + b) / 2 + M_PI;
    }
  }
  if (best_gap <= M_PI + 1e-9)
    throw model_error("scan: star-like triple crossing in the sweep");
  v2d u{std::cos(mid), std::sin(mid)};
  v2d up = perp(u);

  v2d base[3] = {{1, 0}, {0, 0}, {0, 0}};
  auto s_at = [&](int i, double t) {
    double lt = (t - dot(base[i], u)) / dot(dirs[i], u);
    return dot(base[i], up) + lt * dot(dirs[i], up);
  };
  auto sslope = [&](int i) { return dot(dirs[i], up) / dot(dirs[i], u); };

  struct xing {
    double t;
    int a, b, third;
    int over;
    v2d pt;
  };
  int q_over = ne_under ? 2 : 1;
  std::array<xing, 3> xs = {
      xing{0, 1, 2, 0, q_over, {0, 0}},
      xing{0, 0, 1, 2, under_side ? 0 : 1, {1, 1}},
      xing{0, 0, 2, 1, under_side ? 0 : 2, {1, -1}}};
  for (auto& x : xs) x.t = dot(x.pt, u);
  std::sort(xs.begin(), xs.end(),
            [](const xing& a, const xing& b) { return a.t < b.t; });

  word_t word;
  for (const auto& x : xs) {
    double spair = dot(x.pt, up);
    double sthird = s_at(x.third, x.t);
    int idx = spair < sthird ? 1 : 2;
    int lower_before = sslope(x.a) > sslope(x.b) ? x.a : x.b;
    int under_strand = (x.over == x.a) ? x.b : x.a;
    int sgn = (lower_before == under_strand) ? 1 : -1;
    word.push_back({idx, sgn});
  }

  classified out;
  for (int t : {1, 3, 4, 5, 7, 8}) {
    if (word == negative_side_word(t)) {
      out.local_type = t;
      out.move_sign = +1;
    } else if (word == positive_side_word(t)) {
      out.local_type = t;
      out.move_sign = -1;
    }
  }
  if (out.local_type == 0)
    throw model_error("scan: unrecognized triple-crossing word");

  double t0 = xs[0].t - 10.0;
  std::array<std::pair<double, int>, 3> order = {
      std::make_pair(s_at(0, t0), 0), std::make_pair(s_at(1, t0), 1),
      std::make_pair(s_at(2, t0), 2)};
  std::sort(order.begin(), order.end());
  for (int i = 0; i < 3; ++i) out.strand_at_pos[size_t(i)] = order[size_t(i)].second;
  out.time_along_x = u.x > 0;
  return out;
}

// Realize a local word as cross tokens in sweep order, updating the strand
// role -> level map.
std::vector<token> realize_word(const word_t& word, const classified& cls,
                                std::array<int, 3>& level_of) {
  struct rec {
    int a, b, over;
  };
  std::vector<rec> recs;
  std::array<int, 3> pos = cls.strand_at_pos;
  for (const auto& l : word) {
    int a = pos[size_t(l.idx - 1)];
    int b = pos[size_t(l.idx)];
    int over = l.sgn > 0 ? b : a;  // positive letter: lower position under
    recs.push_back({a, b, over});
    std::swap(pos[size_t(l.idx - 1)], pos[size_t(l.idx)]);
  }
  if (!cls.time_along_x) std::reverse(recs.begin(), recs.end());

  std::vector<token> out;
  for (const auto& r : recs) {
    int la = level_of[size_t(r.a)], lb = level_of[size_t(r.b)];
    if (la > lb) std::swap(la, lb);
    if (lb != la + 1) throw std::logic_error("realize_word: strands not adjacent");
    int upper = level_of[size_t(r.a)] > level_of[size_t(r.b)] ? r.a : r.b;
    out.push_back(cross(la, r.over == upper));
    std::swap(level_of[size_t(r.a)], level_of[size_t(r.b)]);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct tangle_info {
  diagram T;
  trace_info tr;
  std::vector<int> width_before;
};

tangle_info prepare_tangle(const diagram& T) {
  tangle_info out{make_scannable(T), {}, {}};
  out.tr = trace(out.T);
  int w = out.T.left;
  for (const auto& t : out.T.tokens) {
    out.width_before.push_back(w);
    if (t.kind == token_kind::cup) w += 2;
    else if (t.kind == token_kind::cap) w -= 2;
  }
  return out;
}

bool scan_climbs(bool under, int eps) { return under == (eps < 0); }

// branch crossings with the corridor keep the scan side's over/under
bool ladder_flag(bool climb, bool under) { return climb != under; }

void emit_ladder(std::vector<token>& out, int from_level, int count, bool climb,
                 bool flag) {
  int lv = from_level;
  for (int c = 0; c < count; ++c) {
    if (climb) {
      out.push_back(cross(lv, flag));
      ++lv;
    } else {
      --lv;
      out.push_back(cross(lv, flag));
    }
  }
}

std::vector<move_event> enumerate_impl(const tangle_info& ti,
                                       const scan_parameter& p) {
  const diagram& S = ti.T;
  const trace_info& tr = ti.tr;
  const int eps = p.letter_sign();
  const bool climb = scan_climbs(p.under, eps);

  std::vector<move_event> out;
  auto events_for_branch = [&](bool red_branch) {
    std::vector<move_event> evs;
    color branch_col = red_branch ? color::red : color::green;
    for (size_t x = S.tokens.size(); x-- > 0;) {
      const token& t = S.tokens[x];
      move_event ev;
      ev.t_token = int(x);
      ev.red_branch = red_branch;
      if (t.kind == token_kind::cross) {
        int ci = tr.crossing_index(int(x));
        const crossing_info& c = tr.crossings[size_t(ci)];
        classified cls =
            classify_r3(p.under, eps, c.ne_dir_right, c.se_dir_right, t.flag);
        ev.kind = move_event::kind_t::r3;
        ev.local_type = cls.local_type;
        ev.sign = cls.move_sign;
        color lo_col = tr.comps[size_t(c.under_comp)].col;
        color hi_col = tr.comps[size_t(c.over_comp)].col;
        if (lo_col == color::none) lo_col = color::green;
        if (hi_col == color::none) hi_col = color::green;
        ev.d_color_a = branch_col;
        ev.d_color_b = p.under ? lo_col : hi_col;
        ev.middle_color = p.under ? hi_col : lo_col;
      } else {
        ev.kind = move_event::kind_t::r2;
        bool tip_up = t.flag;
        ev.identical = (tip_up == climb);
        ev.sign = (t.kind == token_kind::cap) ? +1 : -1;
        color arc_col = tr.comps[size_t(tr.tok_comps[x][0])].col;
        if (arc_col == color::none) arc_col = color::green;
        ev.d_color_a = branch_col;
        ev.d_color_b = arc_col;
      }
      evs.push_back(ev);
    }
    return evs;
  };

  auto greens = events_for_branch(false);
  if (!p.cabled) return greens;
  auto reds = events_for_branch(true);
  // at each column the companion branch passes ahead exactly when the pair
  // climbs; interleave accordingly
  for (size_t i = 0; i < greens.size(); ++i) {
    if (climb) {
      out.push_back(reds[i]);
      out.push_back(greens[i]);
    } else {
      out.push_back(greens[i]);
      out.push_back(reds[i]);
    }
  }
  return out;
}

// Replacement for the marked crossing (or its cable block): the scanned
// tangle threaded through, with the event's partial smoothing spliced in.
std::vector<token> build_funnel(const tangle_info& ti, const scan_parameter& p,
                                const move_event& ev, int side, int base) {
  const diagram& T = ti.T;
  const int eps = p.letter_sign();
  const bool climb = scan_climbs(p.under, eps);
  const bool lflag = ladder_flag(climb, p.under);
  const int k = ev.t_token;
  const int W = ti.width_before[size_t(k)];
  const token& et = T.tokens[size_t(k)];
  const int i = et.level;
  const int grow = et.kind == token_kind::cup ? 2
                   : et.kind == token_kind::cap ? -2
                                                : 0;

  const int part1_base = climb ? base + (p.cabled ? 2 : 1) : base;
  const int part2_base = climb ? base : base + (p.cabled ? 2 : 1);
  const bool companion_first = p.cabled && (climb != ev.red_branch);
  // corridor base at the event column
  const int cb = climb ? part1_base - (companion_first ? 1 : 0)
                       : base + (companion_first ? 1 : 0);

  std::vector<token> out;
  for (int x = 0; x < k; ++x) {
    token t = T.tokens[size_t(x)];
    t.level += part1_base;
    out.push_back(t);
  }

  if (companion_first) {
    if (climb)
      emit_ladder(out, base + (ev.red_branch ? 0 : 1), W, true, lflag);
    else
      emit_ladder(out, base + W + (ev.red_branch ? 0 : 1), W, false, lflag);
  }

  // approach of the event branch
  const int approach =
      climb ? i : (et.kind == token_kind::cup ? W - i : W - i - 2);
  if (climb) {
    emit_ladder(out, cb - 1, approach, true, lflag);
  } else {
    emit_ladder(out, cb + W, approach, false, lflag);
  }
  const int m = climb ? cb - 1 + approach : cb + W - approach;

  // the block
  if (ev.kind == move_event::kind_t::r3) {
    int ci = ti.tr.crossing_index(k);
    const crossing_info& cinfo = ti.tr.crossings[size_t(ci)];
    classified cls = classify_r3(p.under, eps, cinfo.ne_dir_right,
                                 cinfo.se_dir_right, et.flag);
    auto sm = smoothing_words(cls.local_type)[size_t(side)];
    std::array<int, 3> level_of{};
    if (climb) {
      level_of = {m, m + 1, m + 2};
    } else {
      level_of = {m, m - 2, m - 1};
    }
    for (auto& t : realize_word(sm.second, cls, level_of)) out.push_back(t);
  } else {
    const bool term_pos = (side == 0);
    const bool is_cup = et.kind == token_kind::cup;
    bool dflag = (climb && is_cup) ? !term_pos : term_pos;
    if (is_cup) {
      if (climb) {
        out.push_back(cup(m + 1, et.flag, et.col));
        out.push_back(cross(m, dflag));
      } else {
        out.push_back(cup(m + 1, et.flag, et.col));
        out.push_back(cross(m, dflag));
      }
    } else {
      if (climb) {
        out.push_back(cross(m, dflag));
        out.push_back(cap(m + 1, et.flag));
      } else {
        out.push_back(cross(m - 1, dflag));
        out.push_back(cap(m - 2, et.flag));
      }
    }
  }

  // departure of the strand left at the outer edge of the block
  if (ev.kind == move_event::kind_t::r3) {
    if (climb)
      emit_ladder(out, m + 2, W - i - 2, true, lflag);
    else
      emit_ladder(out, m - 2, i, false, lflag);
  } else if (et.kind == token_kind::cup) {
    if (climb)
      emit_ladder(out, m + 2, W - i, true, lflag);
    else
      emit_ladder(out, m, i, false, lflag);
  } else {
    if (climb)
      emit_ladder(out, m, W - i - 2, true, lflag);
    else
      emit_ladder(out, m - 2, i, false, lflag);
  }

  if (p.cabled && !companion_first) {
    int W2 = W + grow;
    if (climb)
      emit_ladder(out, base + (ev.red_branch ? 0 : 1), W2, true, lflag);
    else
      emit_ladder(out, base + W2 + 1, W2, false, lflag);
  }

  for (size_t x = size_t(k) + 1; x < T.tokens.size(); ++x) {
    token t = T.tokens[x];
    t.level += part2_base;
    out.push_back(t);
  }
  return out;
}

// long components take the color of their left boundary point; closed
// components are black
diagram repaint_value(diagram d, bool cabled) {
  for (auto& t : d.tokens)
    if (t.kind == token_kind::cup) t.col = color::none;
  d.left_colors.assign(size_t(d.left), color::green);
  if (cabled && d.left >= 2) d.left_colors[1] = color::red;
  {
    // a smoothing can join the two long strands into one component
    diagram probe = d;
    for (auto& c : probe.left_colors) c = color::none;
    trace_info tr = trace(probe);
    if (d.left >= 2 && tr.comp_of_left[0] == tr.comp_of_left[1])
      d.left_colors[1] = color::green;
    for (int c = 0; c < tr.n_comps; ++c) {
      if (!tr.comps[size_t(c)].closed) continue;
      int ft = tr.comps[size_t(c)].first_token;
      for (size_t x = size_t(ft); x < d.tokens.size(); ++x) {
        if (d.tokens[x].kind == token_kind::cup && tr.tok_comps[x][0] == c) {
          d.tokens[x].col = color::black;
          break;
        }
      }
    }
  }
  d.check();
  return d;
}

diagram aux_diagram(const scan_parameter& p) {
  diagram K = from_braid(p.aux, closure_mode::long_open_top);
  for (int c = 0; c < p.aux_curls; ++c) K = add_curl(K, -1, true);
  return K;
}

}  // namespace

std::vector<move_event> enumerate_moves(const diagram& T, const scan_parameter& p) {
  tangle_info ti = prepare_tangle(T);
  return enumerate_impl(ti, p);
}

cocycle_value evaluate(const diagram& T, const scan_parameter& p,
                       const scan_filters& f) {
  if ((p.cabled && T.left != 2) || (!p.cabled && T.left != 1))
    throw std::invalid_argument("evaluate: tangle does not match the cabling");
  tangle_info ti = prepare_tangle(T);
  cocycle_value val;
  val.moves = enumerate_impl(ti, p);

  int cls = aux_crossing_class(p.aux, p.aux_letter);
  if (f.d_class >= 0 && cls != f.d_class) return val;

  diagram K = aux_diagram(p);
  const int n = p.aux.strands;
  const int c_tok = (n - 1) + p.aux_letter;
  const int j = n - 2 + std::abs(p.aux.letters[size_t(p.aux_letter)]);

  diagram KD = p.cabled ? two_cable(K) : K;
  const int block_start = p.cabled ? 2 * (n - 1) + 4 * p.aux_letter : c_tok;
  const int block_len = p.cabled ? 4 : 1;
  const int base = p.cabled ? 2 * j : j;

  struct job {
    int move_index;
    int side;
  };
  std::vector<job> jobs;
  for (size_t mi = 0; mi < val.moves.size(); ++mi) {
    const move_event& ev = val.moves[mi];
    if (!ev.contributes()) continue;
    if (f.d_green && !ev.d_green()) continue;
    if (f.drop_middle_red_3457 && ev.kind == move_event::kind_t::r3 &&
        ev.middle_color == color::red &&
        (ev.local_type == 3 || ev.local_type == 4 || ev.local_type == 5 ||
         ev.local_type == 7))
      continue;
    jobs.push_back({int(mi), 0});
    jobs.push_back({int(mi), 1});
  }

  std::vector<value_term> terms(jobs.size());
  parallel_for(jobs.size(), [&](size_t ji) {
    const job& jb = jobs[ji];
    const move_event& ev = val.moves[size_t(jb.move_index)];
    auto funnel = build_funnel(ti, p, ev, jb.side, base);

    diagram glued;
    glued.left = KD.left;
    glued.left_colors = KD.left_colors;
    for (int x = 0; x < block_start; ++x) glued.tokens.push_back(KD.tokens[size_t(x)]);
    for (auto& t : funnel) glued.tokens.push_back(t);
    for (size_t x = size_t(block_start + block_len); x < KD.tokens.size(); ++x)
      glued.tokens.push_back(KD.tokens[x]);
    glued.check();

    value_term vt;
    vt.coeff = ev.sign * (jb.side == 0 ? 1 : -1);
    vt.dia = repaint_value(simplify(glued), p.cabled);
    vt.event_index = jb.move_index;
    vt.smoothing_side = jb.side;
    vt.signature = invariant_signature(vt.dia);
    terms[ji] = vt;
  });
  val.terms = std::move(terms);
  return val;
}

cocycle_value cancel_by_vector(const cocycle_value& v) {
  cocycle_value out;
  out.moves = v.moves;
  std::map<std::string, value_term> acc;
  for (const auto& t : v.terms) {
    auto it = acc.find(t.signature);
    if (it == acc.end()) acc.emplace(t.signature, t);
    else it->second.coeff += t.coeff;
  }
  for (auto& [k, t] : acc)
    if (t.coeff != 0) out.terms.push_back(t);
  return out;
}

bool trace_distinguished(const diagram& T, const scan_parameter& p) {
  // The live crossings between the fixed branch and the slice strands form
  // one family glued through the tangencies; the family stays connected as
  // long as no slice is empty, and it is seeded by the marked crossing.
  // Every contributing move's distinguished crossing is a live member.
  tangle_info ti = prepare_tangle(T);
  int live = ti.T.right_count();
  if (live <= 0) return true;
  bool ok = true;
  for (size_t x = ti.T.tokens.size(); x-- > 0;) {
    const token& t = ti.T.tokens[x];
    if (t.kind == token_kind::cap) live += 2;
    else if (t.kind == token_kind::cup) live -= 2;
    if (live < 1) ok = false;
  }
  (void)p;
  return ok && live == ti.T.left;
}

bracket_result bracket_cycle(const braid_word& d1, const braid_word& d2,
                             bool cabled, int d1_curls) {
  bracket_result res;
  int c2 = unique_one_crossing_letter(d2);
  int c1 = unique_one_crossing_letter(d1);

  diagram D1 = from_braid(d1, closure_mode::long_open_top);
  for (int i = 0; i < d1_curls; ++i) D1 = add_curl(D1, -1, true);
  diagram D2 = from_braid(d2, closure_mode::long_open_top);
  diagram T1 = cabled ? two_cable(D1) : D1;
  diagram T2 = cabled ? two_cable(D2) : D2;

  scan_filters none;
  scan_parameter p;
  p.cabled = cabled;

  p.aux = d2;
  p.aux_letter = c2;
  p.under = true;
  res.scans.push_back(evaluate(T1, p, none));
  p.under = false;
  res.scans.push_back(evaluate(T1, p, none));

  p.aux = d1;
  p.aux_letter = c1;
  p.aux_curls = d1_curls;
  p.under = true;
  res.scans.push_back(evaluate(T2, p, none));
  p.under = false;
  res.scans.push_back(evaluate(T2, p, none));

  for (const auto& s : res.scans) {
    for (const auto& t : s.terms) res.combined.terms.push_back(t);
    for (const auto& m : s.moves) res.combined.moves.push_back(m);
  }
  return res;
}

}  // namespace ks
