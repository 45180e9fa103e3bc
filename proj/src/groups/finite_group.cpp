#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "ovf/groups.hpp"

namespace ovf {

namespace {

[[noreturn]] void bad_table(const std::string& what) { throw Error(ErrorKind::InvalidCayleyTable, what); }

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::string name)
    : cayley_(std::move(cayley)), name_(std::move(name)) {
  const std::size_t n = cayley_.size();
  if (n == 0) bad_table("empty table");
  for (std::size_t g = 0; g < n; ++g) {
    if (cayley_[g].size() != n) bad_table("row " + std::to_string(g) + " has the wrong length");
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t r = cayley_[g][h];
      const std::size_t c = cayley_[h].size() == n ? cayley_[h][g] : n;
      if (r >= n || seen_row[r]) bad_table("row " + std::to_string(g) + " is not a permutation");
      if (c >= n || seen_col[c]) bad_table("column " + std::to_string(g) + " is not a permutation");
      seen_row[r] = seen_col[c] = true;
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = cayley_[e][g] == g && cayley_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) bad_table("no identity element");

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]]) {
      bad_table("associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                std::to_string(c) + ")");
    }
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0);
    for (int s = 0; s < 20000; ++s) check(rng() % n, rng() % n, rng() % n);
  }

  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (cayley_[g][h] == identity_) inverse_[g] = h;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t g = 0; g < order(); ++g)
    for (std::size_t h = g + 1; h < order(); ++h)
      if (cayley_[g][h] != cayley_[h][g]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> assigned(order(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t g = 0; g < order(); ++g) {
    if (assigned[g]) continue;
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < order(); ++h) cls.insert(mul(mul(h, g), inv(h)));
    for (std::size_t x : cls) assigned[x] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) bad_table("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) t[g][h] = (g + h) % n;
  return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& generators, std::string name) {
  using Perm = std::vector<std::size_t>;
  if (generators.empty()) bad_table("no generating permutations");
  const std::size_t points = generators.front().size();
  Perm id(points);
  for (std::size_t i = 0; i < points; ++i) id[i] = i;
  auto compose = [](const Perm& g, const Perm& h) {
    Perm r(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) r[x] = g[h[x]];
    return r;
  };
  std::vector<Perm> elements{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const Perm& gen : generators) {
      if (gen.size() != points) bad_table("generating permutations act on different sets");
      Perm p = compose(elements[next], gen);
      if (index.emplace(p, elements.size()).second) elements.push_back(std::move(p));
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) t[g][h] = index.at(compose(elements[g], elements[h]));
  return FiniteGroup(std::move(t), std::move(name));
}

FiniteGroup FiniteGroup::symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3"); }

FiniteGroup FiniteGroup::dihedral4() { return from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4"); }

FiniteGroup FiniteGroup::quaternion8() {
  // index 2u + s: unit u in (1, i, j, k), s = 1 for the negative sign
  static constexpr std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr std::size_t sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t u = a / 2, v = b / 2;
      t[a][b] = 2 * unit[u][v] + ((a % 2) ^ (b % 2) ^ sign[u][v]);
    }
  return FiniteGroup(std::move(t), "Q8");
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  if (name.size() > 1 && name[0] == 'Z' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    return cyclic(std::stoul(name.substr(1)));
  }
  throw Error(ErrorKind::FormatError, "unknown built-in group '" + name + "'");
}

}  // namespace ovf
