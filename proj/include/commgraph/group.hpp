#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace commgraph {

using Element = std::int32_t;
constexpr Element kIdentity = 0;  // every FiniteGroup keeps its identity at index 0

using Rational = boost::rational<std::int64_t>;

// Cayley tables are quadratic in the order; constructors refuse anything
// larger. 5040 admits S7.
constexpr int kMaxGroupOrder = 5040;
constexpr int kMaxPermutationDegree = 7;

class FiniteGroup;

namespace detail {
// Closure, identity and inverses are always checked; associativity (O(n^3))
// only when requested. Constructors skip it since their tables are
// associative by construction.
FiniteGroup make_group(std::string name, int order, std::vector<Element> table,
                       std::vector<std::string> names, bool check_associativity);
}  // namespace detail

// A finite group stored as its Cayley table. Immutable; copies share the
// table, so values are cheap to pass around and safe to share across threads.
class FiniteGroup {
 public:
  // Validates `table` (row-major, order*order entries) and relabels so the
  // identity sits at index 0. Throws GroupError naming the first violation.
  static FiniteGroup from_table(std::string name, int order, std::vector<Element> table,
                                std::vector<std::string> element_names = {});

  int order() const { return data_->order; }
  const std::string& name() const { return data_->name; }

  Element multiply(Element a, Element b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inverse(Element a) const { return data_->inverses[a]; }
  bool commute(Element a, Element b) const { return multiply(a, b) == multiply(b, a); }

  const std::string& element_name(Element a) const { return data_->names[a]; }
  std::span<const std::string> element_names() const { return data_->names; }
  std::span<const Element> table() const { return data_->table; }

  // Throws GroupError if `a` is not an element index.
  void check_element(Element a) const;

  // Same group, different display name.
  FiniteGroup renamed(std::string name) const;

 private:
  struct Data {
    std::string name;
    int order = 0;
    std::vector<Element> table;
    std::vector<Element> inverses;
    std::vector<std::string> names;
  };
  friend FiniteGroup detail::make_group(std::string, int, std::vector<Element>,
                                        std::vector<std::string>, bool);
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// A set of elements of a parent group, kept sorted.
class ElementSubset {
 public:
  ElementSubset(FiniteGroup parent, std::vector<Element> members);

  const FiniteGroup& parent() const { return parent_; }
  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element a) const;

  // True when the members pairwise commute.
  bool is_commutative() const;
  // True when the members contain the identity and are closed under the product.
  bool is_subgroup() const;

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
    return a.members_ == b.members_;
  }

 private:
  FiniteGroup parent_;
  std::vector<Element> members_;
};

struct ConjugacyPartition {
  // Classes in order of their least element; the first is always {identity}.
  std::vector<ElementSubset> classes;
  std::size_t count() const { return classes.size(); }
};

// Constructors. All throw GroupError on invalid parameters.
FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);        // order 2n
FiniteGroup make_dicyclic(int m);        // order 4m; m = 2 gives Q8
FiniteGroup make_symmetric(int k);       // order k!
FiniteGroup make_alternating(int k);     // order k!/2
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Parses the plain-text Cayley table format: first line the order, then one
// row per element. Blank lines and '#' comments are skipped.
FiniteGroup from_cayley_table(std::string_view text, std::string name = "G");
std::string to_cayley_table(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
ElementSubset center(const FiniteGroup& g);
ElementSubset centralizer(const FiniteGroup& g, Element x);
ElementSubset cyclic_subgroup(const FiniteGroup& g, Element x);
int element_order(const FiniteGroup& g, Element x);
ConjugacyPartition conjugacy_classes(const FiniteGroup& g);

// k(G)/|G| as an exact fraction.
Rational commuting_probability(const FiniteGroup& g);
// Ordered commuting pairs over n^2, counted directly.
Rational commuting_pair_ratio(const FiniteGroup& g);

enum class NamedGroup { kD4, kQ8 };

// Decides G ≅ D4 or G ≅ Q8 by the involution census (five for D4, one for
// Q8), which separates the two non-abelian groups of order 8.
bool isomorphic_to_named(const FiniteGroup& g, NamedGroup target);
int involution_count(const FiniteGroup& g);

}  // namespace commgraph
