#include "ks/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ks/simplify.hpp"

namespace ks {

laurent conway(const diagram& d) {
  diagram s = simplify(d);
  if (split_parts(s).size() > 1) return laurent();
  return conway_det(seifert_matrix(s));
}

laurent alexander(const diagram& d) {
  diagram s = simplify(d);
  if (split_parts(s).size() > 1) return laurent();
  return alexander_det(seifert_matrix(s));
}

namespace {

// First crossing along the component walk whose first passage goes under;
// -1 when the diagram is descending.
int first_violation(const diagram& d, const trace_info& tr) {
  std::vector<int> seen(d.tokens.size(), 0);
  for (int c = 0; c < tr.n_comps; ++c) {
    for (const auto& p : tr.walk(d, c)) {
      if (seen[size_t(p.tok)]++) continue;
      if (!p.over) return p.tok;
    }
  }
  return -1;
}

laurent skein_rec(const diagram& d, std::map<std::string, laurent>& memo) {
  diagram cur = d;
  diagram s = simplify(cur);
  if (s.crossing_count() < cur.crossing_count()) cur = s;
  if (split_parts(cur).size() > 1) return laurent();
  std::string key = cur.canonical_string();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  trace_info tr = trace(cur);
  int q = first_violation(cur, tr);
  laurent result;
  if (q < 0) {
    result = laurent(tr.n_comps == 1 ? 1 : 0);
  } else {
    int sign = tr.crossings[size_t(tr.crossing_index(q))].sign;
    laurent sw = skein_rec(switch_crossing(cur, q), memo);
    laurent sm = skein_rec(smooth_crossing(cur, q), memo);
    laurent z = laurent::monomial(1, 1);
    result = sign > 0 ? sw + z * sm : sw - z * sm;
  }
  memo[key] = result;
  return result;
}

}  // namespace

laurent conway_skein_oracle(const diagram& d, size_t max_crossings) {
  diagram s = simplify(d);
  if (s.crossing_count() > max_crossings)
    throw resource_error("conway_skein_oracle: crossing bound exceeded");
  std::map<std::string, laurent> memo;
  return skein_rec(s, memo);
}

int linking_number(const diagram& d, int comp_a, int comp_b) {
  if (comp_a == comp_b)
    throw std::invalid_argument("linking_number: components must differ");
  trace_info tr = trace(d);
  if (comp_a < 0 || comp_a >= tr.n_comps || comp_b < 0 || comp_b >= tr.n_comps)
    throw std::invalid_argument("linking_number: unknown component");
  int s = 0;
  for (const auto& c : tr.crossings) {
    if ((c.ne_comp == comp_a && c.se_comp == comp_b) ||
        (c.ne_comp == comp_b && c.se_comp == comp_a))
      s += c.sign;
  }
  return s / 2;
}

std::int64_t v2(const diagram& d) {
  if (d.left != 1 || d.right_count() != 1)
    throw std::invalid_argument("v2: expected a long knot diagram");
  trace_info tr = trace(d);
  if (tr.n_comps != 1) throw std::invalid_argument("v2: not a knot");
  auto ps = tr.walk(d, 0);
  std::map<int, std::pair<int, int>> pos;  // tok -> passage positions
  std::map<int, bool> first_over;
  std::map<int, int> sgn;
  for (size_t i = 0; i < ps.size(); ++i) {
    auto [it, fresh] = pos.emplace(ps[i].tok, std::pair<int, int>{int(i), -1});
    if (fresh) {
      first_over[ps[i].tok] = ps[i].over;
      sgn[ps[i].tok] = ps[i].sign;
    } else {
      it->second.second = int(i);
    }
  }
  std::int64_t total = 0;
  for (auto& [p, pp] : pos) {
    for (auto& [q, qq] : pos) {
      if (pp.first < qq.first && qq.first < pp.second && pp.second < qq.second) {
        if (!first_over[p] && first_over[q]) total += sgn[p] * sgn[q];
      }
    }
  }
  return total;
}

std::string alex_vector::key() const {
  std::string s;
  for (const auto& [label, poly] : entries) s += label + "=" + poly.str() + ";";
  s += "lk(g,b)=" + std::to_string(lk_green_black);
  s += ";lk(g,r)=" + std::to_string(lk_green_red);
  s += ";lk(r,b)=" + std::to_string(lk_red_black);
  return s;
}

alex_vector alexander_vector(const diagram& d) {
  trace_info tr = trace(d);
  int green = -1, red = -1;
  std::vector<int> blacks;
  for (int c = 0; c < tr.n_comps; ++c) {
    switch (tr.comps[size_t(c)].col) {
      case color::green: green = c; break;
      case color::red: red = c; break;
      case color::black: blacks.push_back(c); break;
      case color::none:
        throw std::invalid_argument("alexander_vector: uncolored component");
    }
  }
  if (green < 0 || blacks.empty())
    throw std::invalid_argument("alexander_vector: need green and black components");

  // canonical black order: by their own polynomial, then linking data
  std::vector<std::pair<std::string, int>> bk;
  for (int b : blacks) {
    std::string k = conway(keep_components(d, {b})).str() + "/" +
                    std::to_string(linking_number(d, green, b));
    bk.emplace_back(k, b);
  }
  std::sort(bk.begin(), bk.end());

  alex_vector out;
  out.entries.emplace_back("whole", conway(d));
  for (size_t i = 0; i < bk.size(); ++i) {
    std::string tag = bk.size() == 1 ? std::string("gb") : "gb" + std::to_string(i);
    out.entries.emplace_back(tag, conway(keep_components(d, {green, bk[i].second})));
  }
  if (red >= 0) out.entries.emplace_back("gr", conway(keep_components(d, {green, red})));
  if (red >= 0)
    for (size_t i = 0; i < bk.size(); ++i) {
      std::string tag = bk.size() == 1 ? std::string("rb") : "rb" + std::to_string(i);
      out.entries.emplace_back(tag, conway(keep_components(d, {red, bk[i].second})));
    }
  out.entries.emplace_back("g", conway(keep_components(d, {green})));
  for (size_t i = 0; i < bk.size(); ++i) {
    std::string tag = bk.size() == 1 ? std::string("b") : "b" + std::to_string(i);
    out.entries.emplace_back(tag, conway(keep_components(d, {bk[i].second})));
  }
  if (red >= 0) out.entries.emplace_back("r", conway(keep_components(d, {red})));

  out.lk_green_black = linking_number(d, green, bk[0].second);
  if (red >= 0) {
    out.lk_green_red = linking_number(d, green, red);
    out.lk_red_black = linking_number(d, red, bk[0].second);
  }
  return out;
}

std::string invariant_signature(const diagram& tangle) {
  diagram closed = tangle.left > 0 ? standard_closure(tangle) : tangle;
  closed = simplify(closed);
  trace_info tr = trace(closed);

  // canonical per-component keys: color then own polynomial
  std::vector<std::pair<std::string, int>> comps;
  for (int c = 0; c < tr.n_comps; ++c) {
    std::string k = color_name(tr.comps[size_t(c)].col) + ":" +
                    conway(keep_components(closed, {c})).str();
    comps.emplace_back(k, c);
  }
  std::sort(comps.begin(), comps.end());

  std::ostringstream os;
  os << "W[" << conway(closed).str() << "]";
  for (auto& [k, c] : comps) os << "C[" << k << "]";
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j) {
      int a = comps[i].second, b = comps[j].second;
      os << "P[" << comps[i].first << "|" << comps[j].first << "|lk="
         << linking_number(closed, a, b) << "|"
         << conway(keep_components(closed, {a, b})).str() << "]";
    }
  return os.str();
}

}  // namespace ks
