#include "alia/group_action.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "alia/errors.hpp"

namespace alia {

namespace {

bool elements_equal(const GroupElement& a, const GroupElement& b) {
  return a.lie == b.lie && a.mobius == b.mobius;
}

}  // namespace

GroupAction::GroupAction(StructLieAlgebra lie, std::vector<GroupElement> generators,
                         std::vector<std::string> generator_names, std::vector<SpherePoint> poles,
                         long max_elements)
    : lie_(std::move(lie)), generator_names_(std::move(generator_names)),
      poles_(std::move(poles)) {
  internal_check(generators.size() == generator_names_.size(),
                 "GroupAction: generator/name count mismatch");
  // session field order: everything the closure and the spectral theory of
  // the stabilizers will need
  long order = lie_.order();
  for (const auto& g : generators) order = lcm_long(order, lcm_long(g.lie.order(), g.mobius.order()));
  for (const auto& p : poles_)
    if (!p.is_infinity()) order = lcm_long(order, p.value().order());
  order_ = order;

  close_(std::move(generators), max_elements);

  // element orders may enlarge the field (primitive roots for eigenspaces)
  long exponent = 1;
  for (long i = 0; i < size(); ++i) exponent = lcm_long(exponent, element_order_[i]);
  if (order_ % exponent != 0) {
    long new_order = lcm_long(order_, exponent);
    order_ = new_order;
    lie_ = lie_.embed(new_order);
    for (auto& e : elements_) {
      e.lie = e.lie.embed(new_order);
      e.mobius = e.mobius.embed(new_order);
    }
    for (auto& p : poles_) p = p.embed(new_order);
  }

  validate_();
}

void GroupAction::close_(std::vector<GroupElement> generators, long max_elements) {
  long d = lie_.dim();
  GroupElement id{ExactMatrix::identity(d, order_), ExactMatrix::identity(2, order_), "id"};
  elements_.push_back(id);
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    GroupElement g = generators[gi];
    g.lie = g.lie.embed(order_);
    g.mobius = mobius_normalize(g.mobius.embed(order_));
    g.word = generator_names_[gi];
    bool dup = false;
    for (const auto& e : elements_)
      if (elements_equal(e, g)) dup = true;
    generator_indices_.push_back(dup ? 0 : static_cast<long>(elements_.size()));
    if (!dup) elements_.push_back(std::move(g));
  }
  // BFS closure under right multiplication by generators
  size_t head = 0;
  while (head < elements_.size()) {
    GroupElement cur = elements_[head];
    for (long gi : generator_indices_) {
      const GroupElement& g = elements_[gi];
      GroupElement prod{cur.lie * g.lie, mobius_normalize(cur.mobius * g.mobius),
                        cur.word == "id" ? g.word : cur.word + "*" + g.word};
      bool dup = false;
      for (const auto& e : elements_)
        if (elements_equal(e, prod)) dup = true;
      if (!dup) {
        if (static_cast<long>(elements_.size()) >= max_elements)
          throw PreconditionError(
              "GroupAction: closure exceeded element cap (group may be infinite)");
        elements_.push_back(std::move(prod));
      }
    }
    ++head;
  }

  long n = size();
  mult_table_.assign(n, std::vector<long>(n, -1));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      GroupElement prod{elements_[a].lie * elements_[b].lie,
                        mobius_normalize(elements_[a].mobius * elements_[b].mobius), ""};
      long idx = -1;
      for (long i = 0; i < n; ++i)
        if (elements_equal(elements_[i], prod)) idx = i;
      internal_check(idx >= 0, "GroupAction: product escaped the closure");
      mult_table_[a][b] = idx;
    }
  inverse_.assign(n, -1);
  element_order_.assign(n, 0);
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b)
      if (mult_table_[a][b] == 0) inverse_[a] = b;
    internal_check(inverse_[a] >= 0, "GroupAction: element without inverse");
    long k = 1, cur = a;
    while (cur != 0) {
      cur = mult_table_[cur][a];
      ++k;
      internal_check(k <= n, "GroupAction: element order exceeds group size");
    }
    element_order_[a] = k;
  }
}

void GroupAction::validate_() {
  long d = lie_.dim();
  // automorphism property on generators (products inherit it)
  for (long gi : generator_indices_) {
    const ExactMatrix& m = elements_[gi].lie;
    for (long i = 0; i < d; ++i)
      for (long j = i + 1; j < d; ++j) {
        CycVector lhs = m.apply(lie_.bracket(lie_.basis_vector(i), lie_.basis_vector(j)));
        CycVector rhs = lie_.bracket(m.col(i), m.col(j));
        if (!vec_is_zero(vec_sub(lhs, rhs)))
          throw PreconditionError("GroupAction: generator '" + elements_[gi].word +
                                  "' is not a Lie algebra automorphism");
      }
  }
  // faithfulness of each factor
  long n = size();
  for (long a = 0; a < n; ++a)
    for (long b = a + 1; b < n; ++b) {
      if (elements_[a].lie == elements_[b].lie)
        throw PreconditionError("GroupAction: action on the Lie algebra is not faithful ('" +
                                elements_[a].word + "' and '" + elements_[b].word + "' agree)");
      if (elements_[a].mobius == elements_[b].mobius)
        throw PreconditionError("GroupAction: action on the sphere is not faithful ('" +
                                elements_[a].word + "' and '" + elements_[b].word + "' agree)");
    }
  // pole set invariance
  if (poles_.empty()) throw PreconditionError("GroupAction: pole set must be non-empty");
  for (long a = 0; a < n; ++a)
    for (const auto& p : poles_) {
      SpherePoint q = apply_sphere(a, p);
      bool found = false;
      for (const auto& r : poles_)
        if (q == r) found = true;
      if (!found)
        throw PreconditionError("GroupAction: pole set is not invariant under '" +
                                elements_[a].word + "'");
    }
  // distinct poles
  for (size_t i = 0; i < poles_.size(); ++i)
    for (size_t j = i + 1; j < poles_.size(); ++j)
      if (poles_[i] == poles_[j]) throw PreconditionError("GroupAction: duplicate pole");
}

long GroupAction::element_by_word(const std::string& word) const {
  if (word == "id" || word == "1" || word == "e") return 0;
  // split on '*'
  std::vector<std::string> parts;
  std::string cur;
  for (char c : word) {
    if (c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  long acc = 0;
  for (const auto& p : parts) {
    // name or name^k
    std::string name = p;
    long power = 1;
    auto caret = p.find('^');
    if (caret != std::string::npos) {
      name = p.substr(0, caret);
      power = std::stol(p.substr(caret + 1));
    }
    long gidx = -1;
    for (size_t i = 0; i < generator_names_.size(); ++i)
      if (generator_names_[i] == name) gidx = generator_indices_[i];
    if (gidx < 0) throw ConfigError("unknown generator name in word: '" + name + "'");
    long g = gidx;
    if (power < 0) {
      g = inverse_[g];
      power = -power;
    }
    for (long k = 0; k < power; ++k) acc = mult_table_[acc][g];
  }
  return acc;
}

SpherePoint GroupAction::apply_sphere(long elem, const SpherePoint& x) const {
  return mobius_apply(elements_[elem].mobius, x.embed(order_));
}

CycVector GroupAction::apply_lie(long elem, const CycVector& v) const {
  return elements_[elem].lie.apply(v);
}

RationalFunction GroupAction::apply_function(long elem, const RationalFunction& f) const {
  return mobius_pullback(f.embed(order_), elements_[elem].mobius);
}

GroupAction::StabilizerInfo GroupAction::stabilizer(const SpherePoint& x0) const {
  for (const auto& p : poles_)
    if (p == x0.embed(order_))
      throw PreconditionError("stabilizer: point lies in the pole set");
  StabilizerInfo info;
  for (long a = 0; a < size(); ++a)
    if (apply_sphere(a, x0) == x0.embed(order_)) info.members.push_back(a);
  info.nu0 = static_cast<long>(info.members.size());
  info.generator = -1;
  for (long a : info.members) {
    if (element_order_[a] == info.nu0) {
      info.generator = a;
      break;
    }
  }
  internal_check(info.generator >= 0, "stabilizer: subgroup is not cyclic");
  return info;
}

}  // namespace alia
