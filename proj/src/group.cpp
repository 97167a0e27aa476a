#include "commgraph/group.hpp"

#include "commgraph/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace commgraph {

namespace {

std::string triple(Element i, Element j, Element k) {
  std::ostringstream os;
  os << '(' << i << ',' << j << ',' << k << ')';
  return os.str();
}

void check_order(long long order) {
  if (order < 1) throw GroupError("group order must be positive, got " + std::to_string(order));
  if (order > kMaxGroupOrder) {
    throw GroupError("group order " + std::to_string(order) + " exceeds the limit of " +
                     std::to_string(kMaxGroupOrder));
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, int order, std::vector<Element> table,
                                    std::vector<std::string> element_names) {
  return detail::make_group(std::move(name), order, std::move(table), std::move(element_names),
                            true);
}

FiniteGroup detail::make_group(std::string name, int order, std::vector<Element> table,
                       std::vector<std::string> names, bool check_associativity) {
  check_order(order);
  const auto n = static_cast<std::size_t>(order);
  if (table.size() != n * n) {
    throw GroupError("table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(n * n));
  }
  auto at = [&](Element i, Element j) -> Element& { return table[i * n + j]; };

  for (Element i = 0; i < order; ++i) {
    for (Element j = 0; j < order; ++j) {
      const Element v = at(i, j);
      if (v < 0 || v >= order) {
        throw GroupError("entry out of range at (" + std::to_string(i) + "," + std::to_string(j) +
                         "): " + std::to_string(v) + " not in [0," + std::to_string(order) + ")");
      }
    }
  }

  if (check_associativity) {
    for (Element i = 0; i < order; ++i) {
      for (Element j = 0; j < order; ++j) {
        const Element ij = at(i, j);
        for (Element k = 0; k < order; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            throw GroupError("associativity fails at " + triple(i, j, k));
          }
        }
      }
    }
  }

  Element identity = -1;
  for (Element e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (Element j = 0; j < order && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
    if (ok) identity = e;
  }
  if (identity < 0) throw GroupError("no identity element");

  if (identity != kIdentity) {
    auto relabel = [&](Element x) {
      return x == identity ? kIdentity : (x == kIdentity ? identity : x);
    };
    std::vector<Element> swapped(n * n);
    for (Element i = 0; i < order; ++i) {
      for (Element j = 0; j < order; ++j) swapped[relabel(i) * n + relabel(j)] = relabel(at(i, j));
    }
    table = std::move(swapped);
    if (!names.empty()) std::swap(names[0], names[identity]);
  }

  std::vector<Element> inverses(n, -1);
  for (Element i = 0; i < order; ++i) {
    for (Element j = 0; j < order; ++j) {
      if (at(i, j) == kIdentity && at(j, i) == kIdentity) {
        inverses[i] = j;
        break;
      }
    }
    if (inverses[i] < 0) throw GroupError("element " + std::to_string(i) + " has no inverse");
  }

  if (names.empty()) {
    names.resize(n);
    for (Element i = 0; i < order; ++i) names[i] = i == kIdentity ? "e" : std::to_string(i);
  } else if (names.size() != n) {
    throw GroupError("expected " + std::to_string(n) + " element names, got " +
                     std::to_string(names.size()));
  }

  auto data = std::make_shared<FiniteGroup::Data>();
  data->name = std::move(name);
  data->order = order;
  data->table = std::move(table);
  data->inverses = std::move(inverses);
  data->names = std::move(names);
  return FiniteGroup(std::move(data));
}

void FiniteGroup::check_element(Element a) const {
  if (a < 0 || a >= order()) {
    throw GroupError("element index " + std::to_string(a) + " out of range for group " + name() +
                     " of order " + std::to_string(order()));
  }
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return FiniteGroup(std::move(data));
}

ElementSubset::ElementSubset(FiniteGroup parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element m : members_) parent_.check_element(m);
}

bool ElementSubset::contains(Element a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool ElementSubset::is_commutative() const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (!parent_.commute(members_[i], members_[j])) return false;
    }
  }
  return true;
}

bool ElementSubset::is_subgroup() const {
  if (!contains(kIdentity)) return false;
  for (Element a : members_) {
    for (Element b : members_) {
      if (!contains(parent_.multiply(a, b))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

std::string power_name(const std::string& base, int k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup make_cyclic(int n) {
  check_order(n);
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : power_name("a", i);
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  return detail::make_group("Z" + std::to_string(n), n, std::move(table), std::move(names), false);
}

// r^k is index k, s r^k is index n + k. Uses r^a s = s r^{-a}.
FiniteGroup make_dihedral(int n) {
  if (n < 1) throw GroupError("dihedral parameter must be positive, got " + std::to_string(n));
  check_order(2LL * n);
  const int order = 2 * n;
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int k = 0; k < n; ++k) {
    names[k] = k == 0 ? "e" : power_name("r", k);
    names[n + k] = "s" + power_name("r", k);
  }
  for (int x = 0; x < order; ++x) {
    const bool xs = x >= n;
    const int a = x % n;
    for (int y = 0; y < order; ++y) {
      const bool ys = y >= n;
      const int b = y % n;
      int product;
      if (!xs && !ys) product = mod(a + b);
      else if (!xs && ys) product = n + mod(b - a);
      else if (xs && !ys) product = n + mod(a + b);
      else product = mod(b - a);
      table[x * order + y] = product;
    }
  }
  return detail::make_group("D" + std::to_string(n), order, std::move(table), std::move(names), false);
}

// a^k is index k, a^k b is index 2m + k, with b a = a^{-1} b and b^2 = a^m.
FiniteGroup make_dicyclic(int m) {
  if (m < 1) throw GroupError("dicyclic parameter must be positive, got " + std::to_string(m));
  check_order(4LL * m);
  const int half = 2 * m;
  const int order = 4 * m;
  auto mod = [half](int x) { return ((x % half) + half) % half; };
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    const bool xb = x >= half;
    const int i = x % half;
    for (int y = 0; y < order; ++y) {
      const bool yb = y >= half;
      const int j = y % half;
      int product;
      if (!xb && !yb) product = mod(i + j);
      else if (!xb && yb) product = half + mod(i + j);
      else if (xb && !yb) product = half + mod(i - j);
      else product = mod(i - j + m);
      table[x * order + y] = product;
    }
  }
  std::vector<std::string> names(order);
  if (m == 2) {
    names = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  } else {
    for (int k = 0; k < half; ++k) {
      names[k] = k == 0 ? "e" : power_name("a", k);
      names[half + k] = power_name("a", k) + "b";
    }
  }
  std::string name = m == 2 ? "Q8" : "Dic" + std::to_string(m);
  return detail::make_group(std::move(name), order, std::move(table), std::move(names), false);
}

namespace {

using Permutation = std::vector<int>;

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

bool is_even(const Permutation& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

// Permutations of {0..k-1} in lexicographic order (identity first), composed
// as (p*q)(x) = p(q(x)).
FiniteGroup permutation_group(std::string name, int k, bool even_only) {
  if (k < 1 || k > kMaxPermutationDegree) {
    throw GroupError("permutation degree " + std::to_string(k) + " outside [1," +
                     std::to_string(kMaxPermutationDegree) + "]");
  }
  std::vector<Permutation> perms;
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto encode = [k](const Permutation& q) {
    std::size_t code = 0;
    for (int x : q) code = code * k + x;
    return code;
  };
  std::size_t space = 1;
  for (int i = 0; i < k; ++i) space *= k;
  std::vector<Element> index_of(space, -1);
  for (std::size_t i = 0; i < perms.size(); ++i) index_of[encode(perms[i])] = static_cast<Element>(i);

  const int order = static_cast<int>(perms.size());
  check_order(order);
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  Permutation composed(k);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      for (int x = 0; x < k; ++x) composed[x] = perms[i][perms[j][x]];
      table[static_cast<std::size_t>(i) * order + j] = index_of[encode(composed)];
    }
  }
  std::vector<std::string> names;
  names.reserve(order);
  for (const auto& q : perms) names.push_back(cycle_notation(q));
  return detail::make_group(std::move(name), order, std::move(table), std::move(names), false);
}

}  // namespace

FiniteGroup make_symmetric(int k) { return permutation_group("S" + std::to_string(k), k, false); }

FiniteGroup make_alternating(int k) {
  return permutation_group("A" + std::to_string(k), k, true);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long long order = static_cast<long long>(g.order()) * h.order();
  check_order(order);
  const int n = static_cast<int>(order);
  const int hn = h.order();
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    const Element gx = x / hn, hx = x % hn;
    names[x] = x == 0 ? "e" : "(" + g.element_name(gx) + "," + h.element_name(hx) + ")";
    for (int y = 0; y < n; ++y) {
      const Element gy = y / hn, hy = y % hn;
      table[static_cast<std::size_t>(x) * n + y] = g.multiply(gx, gy) * hn + h.multiply(hx, hy);
    }
  }
  return detail::make_group(g.name() + "x" + h.name(), n, std::move(table), std::move(names), false);
}

// ---------------------------------------------------------------------------
// Text format

FiniteGroup from_cayley_table(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::vector<long long> values;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError("line " + std::to_string(line_number) + ": not an integer: '" + token + "'");
      }
      values.push_back(v);
    }
  }
  if (values.empty()) throw ParseError("empty Cayley table");
  const long long order = values.front();
  if (order < 1) throw ParseError("order must be positive, got " + std::to_string(order));
  check_order(order);
  const auto expected = static_cast<std::size_t>(order * order);
  if (values.size() - 1 != expected) {
    throw ParseError("expected " + std::to_string(expected) + " table entries, got " +
                     std::to_string(values.size() - 1));
  }
  std::vector<Element> table(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    const long long v = values[i + 1];
    if (v < 0 || v >= order) {
      throw GroupError("entry out of range at (" + std::to_string(i / order) + "," +
                       std::to_string(i % order) + "): " + std::to_string(v) + " not in [0," +
                       std::to_string(order) + ")");
    }
    table[i] = static_cast<Element>(v);
  }
  return FiniteGroup::from_table(std::move(name), static_cast<int>(order), std::move(table));
}

std::string to_cayley_table(const FiniteGroup& g) {
  std::ostringstream os;
  os << "# " << g.name() << '\n' << g.order() << '\n';
  for (Element i = 0; i < g.order(); ++i) {
    for (Element j = 0; j < g.order(); ++j) os << (j ? " " : "") << g.multiply(i, j);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Queries

bool is_abelian(const FiniteGroup& g) {
  for (Element i = 0; i < g.order(); ++i) {
    for (Element j = i + 1; j < g.order(); ++j) {
      if (!g.commute(i, j)) return false;
    }
  }
  return true;
}

ElementSubset center(const FiniteGroup& g) {
  std::vector<Element> members;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.commute(z, x);
    if (central) members.push_back(z);
  }
  return ElementSubset(g, std::move(members));
}

ElementSubset centralizer(const FiniteGroup& g, Element x) {
  g.check_element(x);
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.commute(x, y)) members.push_back(y);
  }
  return ElementSubset(g, std::move(members));
}

ElementSubset cyclic_subgroup(const FiniteGroup& g, Element x) {
  g.check_element(x);
  std::vector<Element> members{kIdentity};
  for (Element p = x; p != kIdentity; p = g.multiply(p, x)) members.push_back(p);
  return ElementSubset(g, std::move(members));
}

int element_order(const FiniteGroup& g, Element x) {
  g.check_element(x);
  int t = 1;
  for (Element p = x; p != kIdentity; p = g.multiply(p, x)) ++t;
  return t;
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> assigned(g.order(), false);
  ConjugacyPartition partition;
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    std::vector<Element> members;
    for (Element h = 0; h < g.order(); ++h) {
      const Element y = g.multiply(g.multiply(g.inverse(h), x), h);
      if (!assigned[y]) {
        assigned[y] = true;
        members.push_back(y);
      }
    }
    partition.classes.emplace_back(g, std::move(members));
  }
  return partition;
}

Rational commuting_probability(const FiniteGroup& g) {
  return Rational(static_cast<std::int64_t>(conjugacy_classes(g).count()), g.order());
}

Rational commuting_pair_ratio(const FiniteGroup& g) {
  std::int64_t pairs = 0;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) pairs += g.commute(x, y);
  }
  const std::int64_t n = g.order();
  return Rational(pairs, n * n);
}

int involution_count(const FiniteGroup& g) {
  int count = 0;
  for (Element x = 1; x < g.order(); ++x) count += g.multiply(x, x) == kIdentity;
  return count;
}

bool isomorphic_to_named(const FiniteGroup& g, NamedGroup target) {
  if (g.order() != 8 || is_abelian(g)) return false;
  const int involutions = involution_count(g);
  return target == NamedGroup::kD4 ? involutions == 5 : involutions == 1;
}

}  // namespace commgraph
