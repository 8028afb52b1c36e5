#pragma once
// Permutations of {0..d-1} stored as image vectors; printed one-indexed.
// Right action throughout: compose(a, b) applies a first, then b.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ambi {

using Perm = std::vector<int>;
using Partition = std::vector<int>;  // sorted non-increasing

inline Perm identity_perm(int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[static_cast<std::size_t>(a[x])];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return r;
}

// s^-1 a s
inline Perm conjugate(const Perm& a, const Perm& s) { return compose(compose(inverse(s), a), s); }

inline Perm product(const std::vector<Perm>& ps, int d) {
  Perm r = identity_perm(d);
  for (const auto& p : ps) r = compose(r, p);
  return r;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return false;
  return true;
}

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = p[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline Partition cycle_type(const Perm& p) {
  Partition t;
  for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

inline int fixed_points(const Perm& p) {
  int n = 0;
  for (std::size_t x = 0; x < p.size(); ++x) n += p[x] == static_cast<int>(x);
  return n;
}

inline int count_parts(const Partition& p, int value) {
  return static_cast<int>(std::count(p.begin(), p.end(), value));
}

inline bool is_transitive(const std::vector<Perm>& gens, int d) {
  if (d == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int y = g[static_cast<std::size_t>(x)];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == d;
}

// Orbits of the group generated by gens, each sorted, ordered by least element.
inline std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int d) {
  std::vector<int> comp(static_cast<std::size_t>(d), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < d; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> orbit{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : gens) {
        int y = g[static_cast<std::size_t>(orbit[i])];
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

// Cycle notation "(1 2 3)(4 5)". Labels inside a cycle are separated by
// blanks or commas; a cycle written without separators is read digit by
// digit, which is how small-degree permutations are usually printed.
inline Perm parse_cycles(std::string_view text, int degree) {
  Perm p = identity_perm(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(') fail("expected '('");
    std::size_t j = text.find(')', i);
    if (j == std::string_view::npos) fail("unbalanced parenthesis");
    std::string_view body = text.substr(i + 1, j - i - 1);
    std::vector<int> labels;
    // compact "(123)" only when every label is a single digit
    bool separated = body.find_first_of(" ,\t") != std::string_view::npos || degree > 9;
    std::string tok;
    auto flush = [&] {
      if (!tok.empty()) { labels.push_back(std::stoi(tok)); tok.clear(); }
    };
    for (char ch : body) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        tok.push_back(ch);
        if (!separated) flush();
      } else if (ch == ' ' || ch == ',' || ch == '\t') {
        flush();
      } else {
        fail("unexpected character");
      }
    }
    flush();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      int x = labels[k] - 1;
      if (x < 0 || x >= degree) fail("label out of range");
      if (used[static_cast<std::size_t>(x)]) fail("label repeated");
      used[static_cast<std::size_t>(x)] = 1;
      p[static_cast<std::size_t>(x)] = labels[(k + 1) % labels.size()] - 1;
    }
    i = j + 1;
  }
  return p;
}

inline std::string format_cycles(const Perm& p, bool show_fixed = true) {
  std::string s;
  for (const auto& c : cycles(p)) {
    if (c.size() == 1 && !show_fixed) continue;
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

inline std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace ambi
