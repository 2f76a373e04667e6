#include "amalgam/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "amalgam/words.hpp"

namespace amalgam {

namespace {

std::string rot_label(std::string_view gen, unsigned i, bool flip, std::string_view flip_gen) {
  std::string out;
  if (i == 1)
    out = std::string(gen);
  else if (i > 1)
    out = std::string(gen) + "^" + std::to_string(i);
  if (flip) out += std::string(flip_gen);
  if (out.empty()) out = "1";
  return out;
}

using Perm = std::vector<std::uint8_t>;

Perm compose(const Perm& p, const Perm& q) {  // apply p, then q
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

bool is_even(const Perm& p) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

GroupPtr permutation_group(std::string name, std::vector<Perm> perms,
                           std::vector<std::pair<std::string, Perm>> gens,
                           const Limits& limits) {
  std::sort(perms.begin(), perms.end());
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(perms.begin(), perms.end(), p);
    if (it == perms.end() || *it != p) throw internal_error("permutation set is not closed");
    return elem_t(it - perms.begin());
  };

  const std::uint32_t n = std::uint32_t(perms.size());
  std::vector<elem_t> table(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    labels[a] = cycle_label(perms[a]);
    for (std::uint32_t b = 0; b < n; ++b)
      table[std::size_t(a) * n + b] = index_of(compose(perms[a], perms[b]));
  }
  std::vector<std::pair<std::string, elem_t>> gen_list;
  for (auto& [gname, p] : gens) gen_list.emplace_back(gname, index_of(p));
  return Group::create(std::move(name), n, std::move(table), std::move(labels),
                       std::move(gen_list), limits);
}

}  // namespace

GroupPtr trivial_group(const Limits& limits) {
  return Group::create("Triv", 1, {0}, {"1"}, {}, limits);
}

GroupPtr cyclic_group(unsigned n, const Limits& limits) {
  if (n < 1) throw validation_error("C(n) needs n >= 1");
  if (n > limits.max_order)
    throw budget_error("C(" + std::to_string(n) + ") exceeds the order cap of " +
                       std::to_string(limits.max_order));
  std::vector<elem_t> table(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (unsigned a = 0; a < n; ++a) {
    labels[a] = rot_label("x", a, false, "");
    for (unsigned b = 0; b < n; ++b) table[std::size_t(a) * n + b] = elem_t((a + b) % n);
  }
  // x is canonical; y answers as an alias so that both "x^2" and the usual
  // product presentations like "r^2 = y^2" evaluate.
  std::vector<std::pair<std::string, elem_t>> gens;
  gens.emplace_back("x", elem_t(n > 1 ? 1 : 0));
  gens.emplace_back("y", elem_t(n > 1 ? 1 : 0));
  return Group::create("C" + std::to_string(n), n, std::move(table), std::move(labels),
                       std::move(gens), limits);
}

GroupPtr dihedral_group(unsigned order, const Limits& limits) {
  if (order < 4 || order % 2 != 0)
    throw validation_error("D(n) needs an even order n >= 4, got " + std::to_string(order));
  if (order > limits.max_order)
    throw budget_error("D(" + std::to_string(order) + ") exceeds the order cap");
  const unsigned m = order / 2;
  // element (i, j) = r^i s^j at index i + m*j;  s r^k = r^-k s
  auto idx = [m](unsigned i, unsigned j) { return elem_t(i + m * j); };
  std::vector<elem_t> table(std::size_t(order) * order);
  std::vector<std::string> labels(order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < m; ++i) {
      labels[idx(i, j)] = rot_label("r", i, j == 1, "s");
      for (unsigned l = 0; l < 2; ++l)
        for (unsigned k = 0; k < m; ++k) {
          unsigned rot = j == 0 ? (i + k) % m : (i + m - k % m) % m;
          table[std::size_t(idx(i, j)) * order + idx(k, l)] = idx(rot, (j + l) % 2);
        }
    }
  std::vector<std::pair<std::string, elem_t>> gens = {{"r", idx(1, 0)}, {"s", idx(0, 1)}};
  return Group::create("D" + std::to_string(order), order, std::move(table), std::move(labels),
                       std::move(gens), limits);
}

namespace {

GroupPtr dicyclic_impl(std::string name, unsigned n, std::string_view a_name,
                       std::string_view b_name, const Limits& limits) {
  const unsigned order = 4 * n;
  if (order > limits.max_order)
    throw budget_error(name + " exceeds the order cap");
  const unsigned m = 2 * n;
  // element (i, j) = a^i b^j at index i + m*j;  b a^k = a^-k b, b^2 = a^n
  auto idx = [m](unsigned i, unsigned j) { return elem_t(i + m * j); };
  std::vector<elem_t> table(std::size_t(order) * order);
  std::vector<std::string> labels(order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < m; ++i) {
      labels[idx(i, j)] = rot_label(a_name, i, j == 1, b_name);
      for (unsigned l = 0; l < 2; ++l)
        for (unsigned k = 0; k < m; ++k) {
          unsigned rot = j == 0 ? (i + k) % m : (i + m - k % m) % m;
          if (j + l == 2) rot = (rot + n) % m;  // b^2 = a^n
          table[std::size_t(idx(i, j)) * order + idx(k, l)] = idx(rot, (j + l) % 2);
        }
    }
  std::vector<std::pair<std::string, elem_t>> gens = {{std::string(a_name), idx(1, 0)},
                                                      {std::string(b_name), idx(0, 1)}};
  return Group::create(std::move(name), order, std::move(table), std::move(labels),
                       std::move(gens), limits);
}

}  // namespace

GroupPtr dicyclic_group(unsigned n, const Limits& limits) {
  if (n < 1) throw validation_error("Dic(n) needs n >= 1");
  return dicyclic_impl("Dic" + std::to_string(n), n, "a", "b", limits);
}

GroupPtr quaternion_group(const Limits& limits) {
  return dicyclic_impl("Q8", 2, "i", "j", limits);
}

GroupPtr symmetric_group(unsigned n, const Limits& limits) {
  if (n < 1 || n > 6)
    throw validation_error("S(n) is supported for 1 <= n <= 6 (enumeration budget)");
  Perm base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> perms;
  Perm p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::pair<std::string, Perm>> gens;
  for (unsigned k = 0; k + 1 < n; ++k) {
    Perm t = base;
    std::swap(t[k], t[k + 1]);
    gens.emplace_back("s" + std::to_string(k + 1), std::move(t));
  }
  if (gens.empty()) gens.emplace_back("s1", base);
  return permutation_group("S" + std::to_string(n), std::move(perms), std::move(gens), limits);
}

GroupPtr alternating_group(unsigned n, const Limits& limits) {
  if (n < 1 || n > 6)
    throw validation_error("A(n) is supported for 1 <= n <= 6 (enumeration budget)");
  Perm base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> perms;
  Perm p = base;
  do {
    if (is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::pair<std::string, Perm>> gens;
  if (n < 3) {
    gens.emplace_back("t", base);
  } else {
    Perm t = base;  // (1 2 3)
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    gens.emplace_back("t", t);
    if (n == 3) {
      gens.emplace_back("c", t);
    } else if (n % 2 == 1) {
      Perm c = base;  // (1 2 ... n)
      for (unsigned k = 0; k < n; ++k) c[k] = std::uint8_t((k + 1) % n);
      gens.emplace_back("c", std::move(c));
    } else {
      Perm c = base;  // (2 3 ... n)
      for (unsigned k = 1; k < n; ++k) c[k] = std::uint8_t(k % (n - 1) + 1);
      gens.emplace_back("c", std::move(c));
    }
  }
  return permutation_group("A" + std::to_string(n), std::move(perms), std::move(gens), limits);
}

GroupPtr catalog_group(std::string_view family, unsigned param, const Limits& limits) {
  if (family == "C") return cyclic_group(param, limits);
  if (family == "D") return dihedral_group(param, limits);
  if (family == "Dic") return dicyclic_group(param, limits);
  if (family == "S") return symmetric_group(param, limits);
  if (family == "A") return alternating_group(param, limits);
  throw validation_error("unknown catalog family '" + std::string(family) + "'");
}

GroupPtr catalog_group(std::string_view name, const Limits& limits) {
  if (name == "Q8") return quaternion_group(limits);
  if (name == "Triv") return trivial_group(limits);
  auto open = name.find('(');
  auto close = name.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw validation_error("unknown catalog group '" + std::string(name) + "'");
  std::string_view family = name.substr(0, open);
  std::string_view arg = name.substr(open + 1, close - open - 1);
  unsigned param = 0;
  for (char ch : arg) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw validation_error("bad catalog parameter in '" + std::string(name) + "'");
    param = param * 10 + unsigned(ch - '0');
    if (param > 1000000) throw validation_error("catalog parameter out of range");
  }
  return catalog_group(family, param, limits);
}

}  // namespace amalgam
