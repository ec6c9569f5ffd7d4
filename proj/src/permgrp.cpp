#include "pgposet/permgrp.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace pgposet {

namespace {

constexpr std::size_t kCayleyLimit = 1500;

std::string_view asView(const Point* data, std::size_t n) {
  return {reinterpret_cast<const char*>(data), n};
}

}  // namespace

// --- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree) {
    throw Error(ErrorKind::InvalidInput, "permutation degree must be in 1..256");
  }
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorKind::InvalidInput, "image list is not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::fromCycles(std::size_t degree,
                                    std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& cycle : cycles) {
    std::vector<int> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1;
      int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= degree ||
          static_cast<std::size_t>(to) >= degree) {
        throw Error(ErrorKind::InvalidInput, "cycle point out of range");
      }
      img[from] = static_cast<Point>(to);
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error(ErrorKind::DegreeMismatch, "product of permutations");
  std::vector<Point> img(degree());
  for (std::size_t x = 0; x < degree(); ++x) img[x] = rhs.images_[images_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(degree());
  for (std::size_t x = 0; x < degree(); ++x) img[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(img));
}

bool Permutation::isIdentity() const {
  for (std::size_t x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::string Permutation::cycleString() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// --- Group -------------------------------------------------------------------

Group::Group(std::string name, std::size_t degree, std::vector<Permutation> generators,
             std::size_t cap)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0 && !generators_.empty()) degree_ = generators_.front().degree();
  if (degree_ == 0 || degree_ > kMaxDegree) {
    throw Error(ErrorKind::InvalidInput, "group degree must be in 1..256");
  }
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw Error(ErrorKind::DegreeMismatch, "generator " + g.cycleString() + " has degree " +
                                                 std::to_string(g.degree()) + ", expected " +
                                                 std::to_string(degree_));
    }
  }

  // Breadth-first closure under right multiplication by the generators.
  std::unordered_set<std::string> seen;
  std::deque<std::string> queue;
  std::string id(degree_, '\0');
  for (std::size_t x = 0; x < degree_; ++x) id[x] = static_cast<char>(x);
  seen.insert(id);
  queue.push_back(id);
  std::string next(degree_, '\0');
  while (!queue.empty()) {
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      for (std::size_t x = 0; x < degree_; ++x) {
        next[x] = static_cast<char>(g(static_cast<Point>(static_cast<unsigned char>(cur[x]))));
      }
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorKind::CapExceeded,
                      "group closure exceeds the enumeration cap of " + std::to_string(cap));
        }
        queue.push_back(next);
      }
    }
  }

  std::vector<std::string> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  order_ = sorted.size();
  images_.resize(order_ * degree_);
  for (std::size_t i = 0; i < order_; ++i) {
    std::copy(sorted[i].begin(), sorted[i].end(),
              reinterpret_cast<char*>(images_.data() + i * degree_));
  }
  index_.reserve(order_ * 2);
  for (std::size_t i = 0; i < order_; ++i) {
    index_.emplace(asView(images_.data() + i * degree_, degree_), static_cast<ElementId>(i));
  }

  inverse_.resize(order_);
  std::vector<Point> buf(degree_);
  for (std::size_t i = 0; i < order_; ++i) {
    auto img = images(static_cast<ElementId>(i));
    for (std::size_t x = 0; x < degree_; ++x) buf[img[x]] = static_cast<Point>(x);
    inverse_[i] = lookup(buf.data());
  }

  if (order_ <= kCayleyLimit) {
    cayley_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a) {
      auto ia = images(static_cast<ElementId>(a));
      for (std::size_t b = 0; b < order_; ++b) {
        auto ib = images(static_cast<ElementId>(b));
        for (std::size_t x = 0; x < degree_; ++x) buf[x] = ib[ia[x]];
        cayley_[a * order_ + b] = lookup(buf.data());
      }
    }
  }

  elementOrder_.assign(order_, 0);
  for (std::size_t i = 0; i < order_; ++i) {
    std::uint32_t k = 1;
    ElementId x = static_cast<ElementId>(i);
    while (x != identity()) {
      x = mul(x, static_cast<ElementId>(i));
      ++k;
    }
    elementOrder_[i] = k;
  }

  for (const auto& g : generators_) generatorIds_.push_back(idOf(g));
}

ElementId Group::lookup(const Point* buffer) const {
  auto it = index_.find(asView(buffer, degree_));
  if (it == index_.end()) throw Error(ErrorKind::InvalidInput, "permutation is not in the group");
  return it->second;
}

Permutation Group::element(ElementId id) const {
  auto img = images(id);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

std::optional<ElementId> Group::find(std::span<const Point> img) const {
  if (img.size() != degree_) return std::nullopt;
  auto it = index_.find(asView(img.data(), degree_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Group::idOf(const Permutation& perm) const {
  if (perm.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "element lookup");
  auto found = find(perm.images());
  if (!found) throw Error(ErrorKind::InvalidInput, perm.cycleString() + " is not in " + name_);
  return *found;
}

ElementId Group::mul(ElementId a, ElementId b) const {
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * order_ + b];
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  auto ia = images(a);
  auto ib = images(b);
  for (std::size_t x = 0; x < degree_; ++x) buf[x] = ib[ia[x]];
  return lookup(buf.data());
}

ElementId Group::conj(ElementId x, ElementId g) const {
  if (!cayley_.empty()) return mul(mul(inverse_[g], x), g);
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  auto ig = images(g);
  auto ix = images(x);
  // y -> g(x(g^-1(y))), written on images: ig[y] -> ig[ix[y]]
  for (std::size_t y = 0; y < degree_; ++y) buf[ig[y]] = ig[ix[y]];
  return lookup(buf.data());
}

ElementId Group::power(ElementId x, std::uint64_t k) const {
  k %= elementOrder_[x];
  ElementId result = identity();
  ElementId base = x;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

GroupPtr makeGroup(std::string name, std::size_t degree, std::vector<Permutation> generators,
                   std::size_t cap) {
  return std::make_shared<const Group>(std::move(name), degree, std::move(generators), cap);
}

GroupPtr generateGroup(const std::vector<Permutation>& gens, std::size_t degree, std::string name,
                       std::size_t cap) {
  if (degree == 0) {
    if (gens.empty()) throw Error(ErrorKind::InvalidInput, "empty generator list needs a degree");
    degree = gens.front().degree();
  }
  return makeGroup(std::move(name), degree, gens, cap);
}

// --- Subgroup ----------------------------------------------------------------

namespace {

/// Extends the closed set `in` (a subgroup containing 1) by the new generator
/// `x`; every new element is checked against `allowed` when given.
template <typename Allowed>
void extendClosure(const Group& g, std::unordered_set<ElementId>& in,
                   std::vector<ElementId>& elems, const std::vector<ElementId>& gens,
                   ElementId x, Allowed&& allowed) {
  std::size_t oldCount = elems.size();
  std::deque<ElementId> queue;
  auto push = [&](ElementId y) {
    if (in.insert(y).second) {
      if (!allowed(y)) {
        throw Error(ErrorKind::InvalidInput, "member set is not closed under multiplication");
      }
      elems.push_back(y);
      queue.push_back(y);
    }
  };
  for (std::size_t i = 0; i < oldCount; ++i) push(g.mul(elems[i], x));
  while (!queue.empty()) {
    ElementId cur = queue.front();
    queue.pop_front();
    for (ElementId s : gens) push(g.mul(cur, s));
    push(g.mul(cur, x));
  }
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != Group::identity()) {
    throw Error(ErrorKind::InvalidInput, "subgroup must contain the identity");
  }
  if (members_.back() >= parent_->order()) {
    throw Error(ErrorKind::InvalidInput, "subgroup member id out of range");
  }
  if (parent_->order() % members_.size() != 0) {
    throw Error(ErrorKind::InvalidInput, "subgroup order does not divide the group order");
  }
  std::unordered_set<ElementId> in{Group::identity()};
  std::vector<ElementId> elems{Group::identity()};
  auto allowed = [this](ElementId y) {
    return std::binary_search(members_.begin(), members_.end(), y);
  };
  for (ElementId m : members_) {
    if (in.count(m)) continue;
    extendClosure(*parent_, in, elems, generators_, m, allowed);
    generators_.push_back(m);
  }
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members, std::vector<ElementId> gens)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(gens)) {}

Subgroup Subgroup::generatedBy(GroupPtr parent, std::span<const ElementId> gens) {
  std::unordered_set<ElementId> in{Group::identity()};
  std::vector<ElementId> elems{Group::identity()};
  std::vector<ElementId> used;
  for (ElementId x : gens) {
    if (x >= parent->order()) throw Error(ErrorKind::InvalidInput, "generator id out of range");
    if (in.count(x)) continue;
    extendClosure(*parent, in, elems, used, x, [](ElementId) { return true; });
    used.push_back(x);
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup(std::move(parent), std::move(elems), std::move(used));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), std::vector<ElementId>{Group::identity()},
                  std::vector<ElementId>{});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), ElementId{0});
  auto gens = std::vector<ElementId>(parent->generatorIds().begin(), parent->generatorIds().end());
  return Subgroup(std::move(parent), std::move(all), std::move(gens));
}

bool Subgroup::contains(ElementId x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Subgroup::isSubgroupOf(const Subgroup& other) const {
  if (order() > other.order() || other.order() % order() != 0) return false;
  for (ElementId g : generators_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

std::string Subgroup::label() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += parent_->element(generators_[i]).cycleString();
  }
  return out + ">";
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (order() != other.order()) return order() < other.order();
  return members_ < other.members_;
}

std::size_t SubgroupHash::operator()(const Subgroup& s) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (ElementId x : s.members()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

// --- arithmetic --------------------------------------------------------------

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t pPart(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n > 0 && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::optional<unsigned> exactLog(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n > 1) {
    if (n % p != 0) return std::nullopt;
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

// --- operators -----------------------------------------------------------------

namespace {

void requireSameParent(const Subgroup& a, const Subgroup& b) {
  if (a.parentPtr() != b.parentPtr()) {
    throw Error(ErrorKind::PreconditionViolated, "subgroups of different parent groups");
  }
}

void requirePrime(unsigned p) {
  if (!isPrime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
}

}  // namespace

Subgroup sylow(const Subgroup& h, unsigned p) {
  requirePrime(p);
  const Group& g = h.parent();
  if (h.order() % p != 0) {
    throw Error(ErrorKind::PrimeDoesNotDivide,
                std::to_string(p) + " does not divide " + std::to_string(h.order()));
  }
  const std::uint64_t target = pPart(h.order(), p);
  Subgroup s = Subgroup::trivial(h.parentPtr());
  // Grow S by the smallest p-element of N_H(S) outside S; one exists until S
  // is Sylow.
  while (s.order() < target) {
    Subgroup n = normalizer(h, s);
    std::optional<ElementId> pick;
    for (ElementId x : n.members()) {
      if (s.contains(x)) continue;
      if (exactLog(g.elementOrder(x), p)) {
        pick = x;
        break;
      }
    }
    if (!pick) throw Error(ErrorKind::PreconditionViolated, "Sylow extension failed");
    std::vector<ElementId> gens(s.generators().begin(), s.generators().end());
    gens.push_back(*pick);
    s = Subgroup::generatedBy(h.parentPtr(), gens);
  }
  if (s.order() != target) throw Error(ErrorKind::PreconditionViolated, "Sylow order mismatch");
  return s;
}

Subgroup sylow(const GroupPtr& g, unsigned p) { return sylow(Subgroup::whole(g), p); }

Subgroup centralizer(const Subgroup& h, std::span<const ElementId> s) {
  const Group& g = h.parent();
  for (ElementId x : s) {
    if (x >= g.order()) throw Error(ErrorKind::InvalidInput, "element id out of range");
  }
  std::vector<ElementId> out;
  for (ElementId x : h.members()) {
    bool ok = true;
    for (ElementId y : s) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(h.parentPtr(), std::move(out));
}

Subgroup centralizer(const Subgroup& h, const Subgroup& s) {
  requireSameParent(h, s);
  return centralizer(h, s.generators());
}

Subgroup normalizer(const Subgroup& h, const Subgroup& s) {
  requireSameParent(h, s);
  const Group& g = h.parent();
  std::vector<ElementId> out;
  for (ElementId x : h.members()) {
    bool ok = true;
    for (ElementId y : s.generators()) {
      if (!s.contains(g.conj(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(h.parentPtr(), std::move(out));
}

Subgroup conjugate(const Subgroup& q, ElementId g) {
  const Group& grp = q.parent();
  if (g >= grp.order()) throw Error(ErrorKind::InvalidInput, "element id out of range");
  std::vector<ElementId> members;
  members.reserve(q.order());
  for (ElementId x : q.members()) members.push_back(grp.conj(x, g));
  std::sort(members.begin(), members.end());
  std::vector<ElementId> gens;
  for (ElementId x : q.generators()) gens.push_back(grp.conj(x, g));
  return Subgroup(q.parentPtr(), std::move(members), std::move(gens));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  requireSameParent(a, b);
  std::vector<ElementId> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Subgroup(a.parentPtr(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  requireSameParent(a, b);
  std::vector<ElementId> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generatedBy(a.parentPtr(), gens);
}

Subgroup center(const Subgroup& h) { return centralizer(h, h.generators()); }

Subgroup omega1(const Subgroup& h, unsigned p) {
  requirePrime(p);
  std::vector<ElementId> gens;
  for (ElementId x : h.members()) {
    if (h.parent().elementOrder(x) == p) gens.push_back(x);
  }
  return Subgroup::generatedBy(h.parentPtr(), gens);
}

Subgroup pCore(const Subgroup& h, unsigned p) {
  requirePrime(p);
  if (h.order() % p != 0) return Subgroup::trivial(h.parentPtr());
  const Group& g = h.parent();
  Subgroup s = sylow(h, p);
  // O_p(H) is the intersection of the H-conjugates of one Sylow subgroup.
  std::vector<ElementId> core(s.members().begin(), s.members().end());
  for (ElementId x : h.members()) {
    if (core.size() == 1) break;
    ElementId xi = g.inv(x);
    std::vector<ElementId> kept;
    for (ElementId y : core) {
      if (s.contains(g.conj(y, xi))) kept.push_back(y);
    }
    core.swap(kept);
  }
  Subgroup result(h.parentPtr(), std::move(core));
  if (!isNormalIn(result, h)) throw Error(ErrorKind::PreconditionViolated, "p-core not normal");
  return result;
}

Subgroup pCore(const GroupPtr& g, unsigned p) { return pCore(Subgroup::whole(g), p); }

bool isPGroup(const Subgroup& h, unsigned p) { return exactLog(h.order(), p).has_value(); }

bool isAbelian(const Subgroup& h) {
  const Group& g = h.parent();
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool isElementaryAbelian(const Subgroup& h, unsigned p) {
  if (!isPGroup(h, p) || !isAbelian(h)) return false;
  for (ElementId x : h.generators()) {
    if (h.parent().elementOrder(x) != p) return false;
  }
  return true;
}

bool isNormalIn(const Subgroup& q, const Subgroup& t) {
  requireSameParent(q, t);
  const Group& g = q.parent();
  for (ElementId x : t.generators()) {
    for (ElementId y : q.generators()) {
      if (!q.contains(g.conj(y, x))) return false;
    }
  }
  return true;
}

namespace {

std::size_t centralizerOrderIn(const Subgroup& p, std::span<const ElementId> gens) {
  const Group& g = p.parent();
  std::size_t count = 0;
  for (ElementId x : p.members()) {
    bool ok = true;
    for (ElementId y : gens) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

bool isFullyCentralized(const Subgroup& q, const Subgroup& p, unsigned prime) {
  requireSameParent(q, p);
  if (!q.isSubgroupOf(p)) throw Error(ErrorKind::NotInSylow, q.label() + " is not in " + p.label());
  Subgroup whole = Subgroup::whole(q.parentPtr());
  std::size_t inP = centralizerOrderIn(p, q.generators());
  std::size_t inG = centralizer(whole, q.generators()).order();
  return inP == pPart(inG, prime);
}

std::pair<Subgroup, ElementId> fcRepresentative(const Subgroup& q, const Subgroup& p,
                                                unsigned prime) {
  requireSameParent(q, p);
  requirePrime(prime);
  if (!q.isSubgroupOf(p)) throw Error(ErrorKind::NotInSylow, q.label() + " is not in " + p.label());
  const Group& g = q.parent();
  std::size_t best = 0;
  ElementId bestG = Group::identity();
  std::vector<ElementId> imgs(q.generators().size());
  for (ElementId x = 0; x < g.order(); ++x) {
    bool inside = true;
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      imgs[i] = g.conj(q.generators()[i], x);
      if (!p.contains(imgs[i])) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    std::size_t c = centralizerOrderIn(p, imgs);
    if (c > best) {
      best = c;
      bestG = x;
    }
  }
  return {conjugate(q, bestG), bestG};
}

// --- builtins ------------------------------------------------------------------

namespace {

Permutation cyclePerm(std::size_t degree, const std::vector<std::size_t>& cycle) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    img[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
  }
  return Permutation(std::move(img));
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

std::vector<Permutation> symGens(std::size_t n) {
  if (n < 2) return {};
  if (n == 2) return {cyclePerm(2, {0, 1})};
  return {cyclePerm(n, {0, 1}), cyclePerm(n, range(0, n))};
}

std::vector<Permutation> altGens(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cyclePerm(n, {0, 1, i}));
  return gens;
}

std::vector<Permutation> dihedralGens(std::size_t n) {
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return {cyclePerm(n, range(0, n)), Permutation(std::move(refl))};
}

std::vector<Permutation> wreathSymCyclic(std::size_t m, std::size_t k) {
  const std::size_t n = m * k;
  std::vector<Permutation> gens = {cyclePerm(n, {0, 1})};
  if (m > 2) gens.push_back(cyclePerm(n, range(0, m)));
  if (k > 1) {
    std::vector<Point> top(n);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t i = 0; i < m; ++i) top[b * m + i] = static_cast<Point>(((b + 1) % k) * m + i);
    }
    gens.emplace_back(std::move(top));
  }
  return gens;
}

/// GL(3,2) acting on the nonzero vectors 1..7 of F_2^3 (point v-1), generated
/// by the six elementary transvections v -> v + v_j e_i.
std::vector<Permutation> gl32Gens() {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> img(7);
      for (unsigned v = 1; v <= 7; ++v) {
        unsigned w = v ^ (((v >> j) & 1U) << i);
        img[v - 1] = static_cast<Point>(w - 1);
      }
      gens.emplace_back(std::move(img));
    }
  }
  return gens;
}

std::size_t parseCount(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::UnknownSpec, "bad number '" + s + "'");
  }
  return v;
}

std::string stripSpaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ') out += c;
  }
  return out;
}

}  // namespace

GroupPtr builtinGroup(std::string_view specView, std::size_t cap) {
  const std::string spec = stripSpaces(specView);
  const std::string name(specView);
  std::smatch m;
  static const std::regex sym(R"(^(?:Sym\((\d+)\)|S(\d+))$)");
  static const std::regex alt(R"(^(?:Alt\((\d+)\)|A(\d+))$)");
  static const std::regex cyc(R"(^(?:Cyclic\((\d+)\)|C(\d+)|Z(\d+))$)");
  static const std::regex dih(R"(^(?:Dihedral\((\d+)\)|D(\d+))$)");
  static const std::regex wr(R"(^(?:Wreath\(Sym\((\d+)\),Cyclic\((\d+)\)\)|S(\d+)wrZ(\d+))$)");
  static const std::regex gl(R"(^(?:GL\(3,2\)|GL32|PSL\(3,2\)|PSL32)$)");
  auto num = [&m](int a, int b) { return parseCount(m[a].matched ? m[a].str() : m[b].str()); };

  auto checkDegree = [](std::size_t n) {
    if (n == 0 || n > kMaxDegree) throw Error(ErrorKind::UnknownSpec, "degree out of range");
  };
  if (std::regex_match(spec, m, sym)) {
    std::size_t n = num(1, 2);
    checkDegree(n);
    return makeGroup(name, n, symGens(n), cap);
  }
  if (std::regex_match(spec, m, alt)) {
    std::size_t n = num(1, 2);
    checkDegree(n);
    return makeGroup(name, n, altGens(n), cap);
  }
  if (std::regex_match(spec, m, cyc)) {
    std::size_t n = m[1].matched ? parseCount(m[1].str())
                                 : (m[2].matched ? parseCount(m[2].str()) : parseCount(m[3].str()));
    checkDegree(n);
    if (n == 1) return makeGroup(name, 1, {}, cap);
    return makeGroup(name, n, {cyclePerm(n, range(0, n))}, cap);
  }
  if (std::regex_match(spec, m, dih)) {
    std::size_t order = num(1, 2);
    if (order < 6 || order % 2 != 0) {
      throw Error(ErrorKind::UnknownSpec, "Dihedral(2n) needs an even order of at least 6");
    }
    checkDegree(order / 2);
    return makeGroup(name, order / 2, dihedralGens(order / 2), cap);
  }
  if (std::regex_match(spec, m, wr)) {
    std::size_t a = num(1, 3);
    std::size_t k = num(2, 4);
    if (a < 2 || k < 1) throw Error(ErrorKind::UnknownSpec, "bad wreath parameters");
    checkDegree(a * k);
    return makeGroup(name, a * k, wreathSymCyclic(a, k), cap);
  }
  if (std::regex_match(spec, m, gl)) return makeGroup(name, 7, gl32Gens(), cap);
  throw Error(ErrorKind::UnknownSpec, "unknown builtin group '" + name + "'");
}

const std::vector<std::string>& builtinCatalog() {
  static const std::vector<std::string> catalog = {"S3", "S4",   "S5", "A4",    "A5",
                                                   "A6", "D8",   "GL32", "S3wrZ2"};
  return catalog;
}

GroupPtr loadGroupFile(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open group file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "malformed group file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators")) {
    throw Error(ErrorKind::InvalidInput, "group file needs 'degree' and 'generators'");
  }
  std::string name = j.value("name", path);
  std::size_t degree = j.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& row : j.at("generators")) {
    std::vector<Point> img;
    for (const auto& v : row) {
      int x = v.get<int>();
      if (x < 0 || static_cast<std::size_t>(x) >= degree) {
        throw Error(ErrorKind::InvalidInput, "generator image out of range in " + path);
      }
      img.push_back(static_cast<Point>(x));
    }
    if (img.size() != degree) {
      throw Error(ErrorKind::DegreeMismatch, "generator length differs from degree in " + path);
    }
    gens.emplace_back(std::move(img));
  }
  return makeGroup(std::move(name), degree, std::move(gens), cap);
}

std::string groupFileJson(const Group& g) {
  nlohmann::json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  j["generators"] = nlohmann::json::array();
  for (const auto& gen : g.generators()) {
    std::vector<int> img(gen.images().begin(), gen.images().end());
    j["generators"].push_back(img);
  }
  return j.dump();
}

}  // namespace pgposet
