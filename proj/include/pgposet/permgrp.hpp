#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgposet/error.hpp"

namespace pgposet {

using Point = std::uint8_t;
using ElementId = std::uint32_t;

inline constexpr std::size_t kMaxDegree = 256;
inline constexpr std::size_t kDefaultGroupCap = 200000;

/// A bijection of {0, ..., degree-1}. Products apply the left factor first,
/// so x^(g*h) = (x^g)^h, the right-action convention used throughout.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles written with 1-based points,
  /// e.g. fromCycles(4, {{1, 3}, {2, 4}}) is (1 3)(2 4).
  static Permutation fromCycles(std::size_t degree,
                                std::initializer_list<std::initializer_list<int>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool isIdentity() const;

  /// Cycle notation with 1-based points; the identity renders as "()".
  std::string cycleString() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite permutation group with its full element table. Elements are
/// numbered in lexicographic order of their image sequences, so the
/// identity is always element 0.
class Group {
 public:
  Group(std::string name, std::size_t degree, std::vector<Permutation> generators,
        std::size_t cap = kDefaultGroupCap);

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return order_; }

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::span<const ElementId> generatorIds() const noexcept { return generatorIds_; }

  static constexpr ElementId identity() noexcept { return 0; }

  std::span<const Point> images(ElementId id) const {
    return {images_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  Permutation element(ElementId id) const;

  std::optional<ElementId> find(std::span<const Point> images) const;
  ElementId idOf(const Permutation& perm) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const;
  ElementId power(ElementId x, std::uint64_t k) const;
  std::uint32_t elementOrder(ElementId x) const { return elementOrder_[x]; }

 private:
  struct ViewHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view v) const noexcept {
      return std::hash<std::string_view>{}(v);
    }
  };

  ElementId lookup(const Point* buffer) const;

  std::string name_;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generatorIds_;
  std::vector<Point> images_;
  std::unordered_map<std::string_view, ElementId, ViewHash, std::equal_to<>> index_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> elementOrder_;
  std::vector<ElementId> cayley_;  // filled for small groups only
};

GroupPtr makeGroup(std::string name, std::size_t degree, std::vector<Permutation> generators,
                   std::size_t cap = kDefaultGroupCap);

/// Generates the closure of `gens`. An empty list gives the trivial group of
/// the requested degree.
GroupPtr generateGroup(const std::vector<Permutation>& gens, std::size_t degree = 0,
                       std::string name = "", std::size_t cap = kDefaultGroupCap);

/// A subgroup stored as a sorted set of element ids of its parent group.
class Subgroup {
 public:
  /// Empty placeholder with no parent; assign before use.
  Subgroup() = default;
  /// Validates closure (and Lagrange) while extracting a small generating set.
  Subgroup(GroupPtr parent, std::vector<ElementId> members);

  static Subgroup generatedBy(GroupPtr parent, std::span<const ElementId> gens);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const Group& parent() const noexcept { return *parent_; }
  const GroupPtr& parentPtr() const noexcept { return parent_; }

  std::span<const ElementId> members() const noexcept { return members_; }
  std::span<const ElementId> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool isTrivial() const noexcept { return members_.size() == 1; }

  bool contains(ElementId x) const;
  bool isSubgroupOf(const Subgroup& other) const;

  /// Generators in cycle notation, e.g. "<(1 3),(1 2 3 4)>".
  std::string label() const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }
  bool operator<(const Subgroup& other) const;

 private:
  friend Subgroup conjugate(const Subgroup& q, ElementId g);
  Subgroup(GroupPtr parent, std::vector<ElementId> members, std::vector<ElementId> gens);

  GroupPtr parent_;
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept;
};

// --- arithmetic helpers -----------------------------------------------------

bool isPrime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t pPart(std::uint64_t n, std::uint64_t p);
/// log_p(n) when n is a power of p, otherwise nullopt.
std::optional<unsigned> exactLog(std::uint64_t n, std::uint64_t p);

// --- subgroup operators -----------------------------------------------------

Subgroup sylow(const Subgroup& h, unsigned p);
Subgroup sylow(const GroupPtr& g, unsigned p);

/// {g in H : s^g = s for all s in S}
Subgroup centralizer(const Subgroup& h, std::span<const ElementId> s);
Subgroup centralizer(const Subgroup& h, const Subgroup& s);
Subgroup normalizer(const Subgroup& h, const Subgroup& s);
Subgroup conjugate(const Subgroup& q, ElementId g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// <A, B>
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup center(const Subgroup& h);
/// Subgroup generated by the elements of order p of H.
Subgroup omega1(const Subgroup& h, unsigned p);
/// Largest normal p-subgroup of H.
Subgroup pCore(const Subgroup& h, unsigned p);
Subgroup pCore(const GroupPtr& g, unsigned p);

bool isPGroup(const Subgroup& h, unsigned p);
bool isAbelian(const Subgroup& h);
bool isElementaryAbelian(const Subgroup& h, unsigned p);
bool isNormalIn(const Subgroup& q, const Subgroup& t);

/// C_P(Q) is a Sylow p-subgroup of C_G(Q), where G is P's parent.
bool isFullyCentralized(const Subgroup& q, const Subgroup& p, unsigned prime);

/// Q^g <= P with |C_P(Q^g)| maximal; g is the first maximizer in canonical
/// element order, so a fully centralized Q comes back unchanged with g = 1.
std::pair<Subgroup, ElementId> fcRepresentative(const Subgroup& q, const Subgroup& p,
                                                unsigned prime);

// --- builtin groups and catalog files ---------------------------------------

/// Accepts Sym(n), Alt(n), Cyclic(n), Dihedral(2n), Wreath(Sym(m),Cyclic(k)),
/// GL(3,2), and the short aliases Sn, An, Cn, D2n, GL32, S3wrZ2.
GroupPtr builtinGroup(std::string_view spec, std::size_t cap = kDefaultGroupCap);

/// The builtin catalog swept by the batch checks.
const std::vector<std::string>& builtinCatalog();

/// Reads {"name", "degree", "generators": [[0-based images], ...]}.
GroupPtr loadGroupFile(const std::string& path, std::size_t cap = kDefaultGroupCap);
std::string groupFileJson(const Group& g);

}  // namespace pgposet
