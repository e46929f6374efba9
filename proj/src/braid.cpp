#include "ks/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ks {

braid_word::braid_word(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (strands < 1) throw std::invalid_argument("braid_word: strand count < 1");
  for (int k : letters) {
    if (k == 0) throw std::invalid_argument("braid_word: zero letter");
    if (std::abs(k) >= strands)
      throw std::invalid_argument("braid_word: generator index out of range");
  }
}

braid_word braid_word::inverse() const {
  braid_word r;
  r.strands = strands;
  r.letters.assign(letters.rbegin(), letters.rend());
  for (int& k : r.letters) k = -k;
  return r;
}

braid_word braid_word::reversed() const {
  braid_word r;
  r.strands = strands;
  r.letters.assign(letters.rbegin(), letters.rend());
  return r;
}

braid_word operator*(const braid_word& a, const braid_word& b) {
  braid_word r;
  r.strands = std::max(a.strands, b.strands);
  r.letters = a.letters;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

int braid_word::exponent_sum() const {
  int s = 0;
  for (int k : letters) s += k > 0 ? 1 : -1;
  return s;
}

std::string braid_word::str() const {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

braid_word parse_braid(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  int maxi = 0;
  while (in >> tok) {
    size_t pos = 0;
    int k;
    try {
      k = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_braid: non-integer token '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("parse_braid: non-integer token '" + tok + "'");
    if (k == 0) throw std::invalid_argument("parse_braid: zero token");
    maxi = std::max(maxi, std::abs(k));
    letters.push_back(k);
  }
  int n = std::max(strands, maxi + 1);
  if (n < 1) n = 1;
  if (strands > 0 && maxi >= strands)
    throw std::invalid_argument("parse_braid: index >= declared strand count");
  return braid_word(n, std::move(letters));
}

namespace {

using perm = std::vector<int>;

perm identity_perm(int n) {
  perm p(size_t(n), 0);
  for (int i = 0; i < n; ++i) p[size_t(i)] = i;
  return p;
}

perm delta_perm(int n) {
  perm p(size_t(n), 0);
  for (int i = 0; i < n; ++i) p[size_t(i)] = n - 1 - i;
  return p;
}

// Braid composition a·b as position maps: strand at i goes to b[a[i]].
perm compose(const perm& a, const perm& b) {
  perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[size_t(a[i])];
  return r;
}

perm inverse_perm(const perm& a) {
  perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[size_t(a[i])] = int(i);
  return r;
}

// Flip automorphism tau(f) = Delta^{-1} f Delta on permutation tables.
perm flip(const perm& a) {
  int n = int(a.size());
  perm r(a.size());
  for (int i = 0; i < n; ++i) r[size_t(i)] = n - 1 - a[size_t(n - 1 - i)];
  return r;
}

// i in S(f) iff f = sigma_i * g with g simple: descents of f.
bool in_starting_set(const perm& f, int i) { return f[size_t(i - 1)] > f[size_t(i)]; }

// i in F(f) iff f = g * sigma_i: descents of f^{-1}.
bool in_finishing_set(const perm& f, const perm& finv, int i) {
  (void)f;
  return finv[size_t(i - 1)] > finv[size_t(i)];
}

perm sigma_perm(int n, int i) {
  perm p = identity_perm(n);
  std::swap(p[size_t(i - 1)], p[size_t(i)]);
  return p;
}

}  // namespace

std::string normal_form::str() const {
  std::string out = "D^" + std::to_string(inf);
  for (const auto& f : factors) {
    out += " [";
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f[i]);
    }
    out += ']';
  }
  return out;
}

normal_form garside_normal_form(const braid_word& w) {
  const int n = w.strands;
  const perm id = identity_perm(n);
  const perm delta = delta_perm(n);

  int inf = 0;
  std::vector<perm> fs;
  for (int k : w.letters) {
    int i = std::abs(k);
    if (k > 0) {
      fs.push_back(sigma_perm(n, i));
    } else {
      // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); commute Delta^{-1}
      // to the front, twisting the factors accumulated so far.
      --inf;
      for (auto& f : fs) f = flip(f);
      fs.push_back(compose(delta, sigma_perm(n, i)));
    }
  }

  // Left-weight adjacent factors until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < fs.size(); ++j) {
      perm finv = inverse_perm(fs[j]);
      bool local = true;
      while (local) {
        local = false;
        for (int i = 1; i < n; ++i) {
          if (in_starting_set(fs[j + 1], i) && !in_finishing_set(fs[j], finv, i)) {
            fs[j] = compose(fs[j], sigma_perm(n, i));
            fs[j + 1] = compose(sigma_perm(n, i), fs[j + 1]);
            finv = inverse_perm(fs[j]);
            local = true;
            changed = true;
          }
        }
      }
    }
    // Absorb Deltas and drop identities.
    std::vector<perm> out;
    for (auto& f : fs) {
      if (f == id) { changed = true; continue; }
      if (f == delta) {
        // Move this Delta to the front past the factors already kept.
        for (auto& g : out) g = flip(g);
        ++inf;
        changed = true;
        continue;
      }
      out.push_back(std::move(f));
    }
    fs = std::move(out);
  }

  normal_form nf;
  nf.strands = n;
  nf.inf = inf;
  nf.factors = std::move(fs);
  return nf;
}

bool braids_equal(const braid_word& a, const braid_word& b) {
  if (a.strands != b.strands) return false;
  return garside_normal_form(a) == garside_normal_form(b);
}

void formal_braid_sum::add(std::int64_t coeff, const braid_word& w) {
  if (coeff == 0) return;
  normal_form nf = garside_normal_form(w);
  auto it = terms_.find(nf);
  if (it == terms_.end()) {
    terms_.emplace(std::move(nf), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

formal_braid_sum sum_reduce(const std::vector<std::pair<std::int64_t, braid_word>>& ts) {
  int strands = 0;
  formal_braid_sum s;
  for (const auto& [c, w] : ts) {
    if (strands == 0) strands = w.strands;
    else if (strands != w.strands)
      throw std::invalid_argument("sum_reduce: mixed strand counts");
    s.add(c, w);
  }
  return s;
}

namespace {

braid_word b4(std::vector<int> ls) { return braid_word(4, std::move(ls)); }
braid_word b3(std::vector<int> ls) { return braid_word(3, std::move(ls)); }

}  // namespace

std::vector<std::pair<std::int64_t, braid_word>> tetra_contribution(tetra_stratum s) {
  using T = std::vector<std::pair<std::int64_t, braid_word>>;
  switch (s) {
    case tetra_stratum::P1:   // listed as -P1
      return T{{-1, b4({1, 2, 2, 1, 2})}, {+1, b4({1, 3, 3, 1, 2})}};
    case tetra_stratum::P1b:  // +P1bar
      return T{{+1, b4({2, 3, 1, 1, 3})}, {-1, b4({2, 3, 2, 2, 3})}};
    case tetra_stratum::P2:   // -P2: branch 1 passes under, smoothing after
      return T{{+1, b4({1, 2, 3, 2, 2})}, {-1, b4({1, 2, 3, 1, 1})}};
    case tetra_stratum::P2b:  // +P2bar: smoothing first
      return T{{+1, b4({2, 2, 1, 2, 3})}, {-1, b4({3, 3, 1, 2, 3})}};
    case tetra_stratum::P3:   // +P3: branch 4 passes over, smoothing first
      return T{{+1, b4({1, 1, 3, 2, 1})}, {-1, b4({2, 2, 3, 2, 1})}};
    case tetra_stratum::P3b:  // -P3bar
      return T{{-1, b4({3, 2, 1, 2, 2})}, {+1, b4({3, 2, 1, 3, 3})}};
    case tetra_stratum::P4:   // +P4
      return T{{+1, b4({2, 1, 2, 2, 1})}, {-1, b4({2, 1, 3, 3, 1})}};
    case tetra_stratum::P4b:  // -P4bar
      return T{{-1, b4({3, 1, 1, 3, 2})}, {+1, b4({3, 2, 2, 3, 2})}};
  }
  throw std::logic_error("tetra_contribution: bad stratum");
}

formal_braid_sum tetrahedron_sum() {
  std::vector<std::pair<std::int64_t, braid_word>> all;
  for (int s = 0; s < 8; ++s) {
    auto c = tetra_contribution(tetra_stratum(s));
    all.insert(all.end(), c.begin(), c.end());
  }
  return sum_reduce(all);
}

formal_braid_sum tetrahedron_sum_without(tetra_stratum omit) {
  std::vector<std::pair<std::int64_t, braid_word>> all;
  for (int s = 0; s < 8; ++s) {
    if (tetra_stratum(s) == omit) continue;
    auto c = tetra_contribution(tetra_stratum(s));
    all.insert(all.end(), c.begin(), c.end());
  }
  return sum_reduce(all);
}

cube_edge parse_cube_edge(const std::string& name) {
  if (name == "1-7" || name == "7-1") return cube_edge::e17;
  if (name == "7-4" || name == "4-7") return cube_edge::e74;
  if (name == "4-8" || name == "8-4") return cube_edge::e48;
  if (name == "8-3" || name == "3-8") return cube_edge::e83;
  if (name == "3-5" || name == "5-3") return cube_edge::e35;
  if (name == "1-5" || name == "5-1") return cube_edge::e15;
  if (name == "7-2" || name == "2-7" || name == "3-6" || name == "6-3" ||
      name == "1-2" || name == "2-1" || name == "5-2" || name == "2-5" ||
      name == "4-6" || name == "6-4" || name == "8-6" || name == "6-8")
    throw std::domain_error("cube_edge: pole-incident edge " + name +
                            " uses star-like smoothings and is unsupported");
  throw std::invalid_argument("cube_edge: unknown edge " + name);
}

std::vector<std::pair<std::int64_t, braid_word>> cube_edge_terms(cube_edge e) {
  using T = std::vector<std::pair<std::int64_t, braid_word>>;
  switch (e) {
    case cube_edge::e17:
      return T{{+1, b3({1, 1, -1})}, {-1, b3({2, 2, -1})},
               {-1, b3({2, -2, 1})}, {+1, b3({2, 2, -1})}};
    case cube_edge::e74:
      return T{{+1, b3({-2, 1, 2})},  {-1, b3({-2, 1, -2})},
               {+1, b3({-2, 1, -2})}, {-1, b3({2, -1, -2})},
               {-1, b3({1, 2, -1})},  {+1, b3({1, -2, 1})},
               {-1, b3({1, -2, 1})},  {+1, b3({-1, -2, 1})}};
    case cube_edge::e48:
      return T{{+1, b3({2, -1, -1})}, {-1, b3({-2, 1, -1})},
               {-1, b3({2, -1, -1})}, {+1, b3({2, -2, -2})}};
    case cube_edge::e83:
      return T{{+1, b3({1, -1, -1})}, {-1, b3({1, -2, -2})},
               {-1, b3({-1, 2, -2})}, {+1, b3({1, -2, -2})}};
    case cube_edge::e35:
      return T{{+1, b3({2, -1, 2})},  {-1, b3({-2, -1, 2})},
               {-1, b3({2, -1, 2})},  {+1, b3({2, 1, -2})},
               {+1, b3({1, -2, -1})}, {-1, b3({-1, 2, -1})},
               {-1, b3({-1, 2, 1})},  {+1, b3({-1, 2, -1})}};
    case cube_edge::e15:
      return T{{+1, b3({1, 1, -2})}, {-1, b3({2, 2, -2})},
               {-1, b3({1, 1, -2})}, {+1, b3({1, -1, 2})}};
  }
  throw std::logic_error("cube_edge_terms: bad edge");
}

formal_braid_sum cube_edge_sum(cube_edge e) { return sum_reduce(cube_edge_terms(e)); }

}  // namespace ks
