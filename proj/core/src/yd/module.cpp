#include "yetter/yd/module.hpp"

#include <algorithm>
#include <deque>

#include "yetter/limits.hpp"

namespace yetter::yd {

std::size_t YDModule::position(Element y) const {
  auto it = std::lower_bound(cls_.members.begin(), cls_.members.end(), y);
  if (it == cls_.members.end() || *it != y) throw PreconditionError("element is not in the class");
  return static_cast<std::size_t>(it - cls_.members.begin());
}

Element YDModule::t(Element h, std::size_t pos) const {
  const auto& g = *cls_.group;
  const std::size_t target = position(g.conj(h, cls_.members[pos]));
  return g.mul(g.inv(transversal_[target]), g.mul(h, transversal_[pos]));
}

std::pair<std::size_t, RootOfUnity> YDModule::act(Element h, std::size_t basis) const {
  const std::size_t d = rep_.dim();
  const std::size_t pos = basis / d;
  const std::size_t k = basis % d;
  const auto& g = *cls_.group;
  const std::size_t target = position(g.conj(h, cls_.members[pos]));
  const auto& m = rep_(t(h, pos));
  return {target * d + m.perm[k], m.scale[k]};
}

namespace {

grp::MonomialRep as_monomial(const Representation& rho) {
  if (const auto* chi = std::get_if<grp::Character>(&rho)) return grp::MonomialRep::from_character(*chi);
  return std::get<grp::MonomialRep>(rho);
}

void check_module(const YDModule& m) {
  const auto& g = *m.group();
  const auto& cls = m.conjugacy_class();
  const auto cx = grp::centralizer(m.group(), m.basepoint());
  if (m.transversal(m.position(m.basepoint())) != g.identity()) {
    throw PreconditionError("transversal element of the basepoint must be the identity");
  }
  for (std::size_t p = 0; p < cls.size(); ++p) {
    if (m.transversal(p) >= g.order() || g.conj(m.transversal(p), m.basepoint()) != cls.members[p]) {
      throw PreconditionError("transversal element does not conjugate the basepoint to its class member");
    }
  }
  for (Element h = 0; h < g.order(); ++h) {
    for (std::size_t p = 0; p < cls.size(); ++p) {
      if (!cx.contains(m.t(h, p))) throw std::logic_error("t_{h,y} left the centralizer");
    }
  }
}

}  // namespace

YDModule build_yd_module_with_transversal(const grp::ConjugacyClass& cls, const Representation& rho,
                                          Element basepoint, std::vector<Element> transversal) {
  if (!cls.contains(basepoint)) throw PreconditionError("basepoint is not in the class");
  auto rep = as_monomial(rho);
  if (!(rep.domain() == grp::centralizer(cls.group, basepoint))) {
    throw PreconditionError("representation is not defined on the centralizer of the basepoint");
  }
  if (transversal.size() != cls.size()) throw PreconditionError("transversal has wrong length");
  YDModule m(cls, basepoint, std::move(rep), std::holds_alternative<grp::Character>(rho));
  m.transversal_ = std::move(transversal);
  check_module(m);
  return m;
}

YDModule build_yd_module(const grp::ConjugacyClass& cls, const Representation& rho, TransversalOrder order,
                         std::optional<Element> basepoint) {
  const auto& gp = cls.group;
  const auto& g = *gp;
  const Element x = basepoint.value_or(cls.representative);
  if (!cls.contains(x)) throw PreconditionError("basepoint is not in the class");
  auto rep = as_monomial(rho);
  if (!(rep.domain() == grp::centralizer(gp, x))) {
    throw PreconditionError("representation is not defined on the centralizer of the basepoint");
  }

  YDModule m(cls, x, std::move(rep), std::holds_alternative<grp::Character>(rho));
  constexpr Element unset = ~Element{0};
  m.transversal_.assign(cls.size(), unset);
  auto gens = g.generators();
  if (order == TransversalOrder::Reversed) std::reverse(gens.begin(), gens.end());
  std::deque<std::size_t> queue;
  const std::size_t start = m.position(x);
  m.transversal_[start] = g.identity();
  queue.push_back(start);
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      const std::size_t q = m.position(g.conj(s, cls.members[p]));
      if (m.transversal_[q] == unset) {
        m.transversal_[q] = g.mul(s, m.transversal_[p]);
        queue.push_back(q);
      }
    }
  }
  for (Element t : m.transversal_) {
    if (t == unset) throw std::logic_error("transversal search did not reach the whole class");
  }
  check_module(m);
  return m;
}

BraidedVectorSpace braiding_of(const YDModule& m) { return braiding_of_sum({&m}); }

BraidedVectorSpace braiding_of_sum(const std::vector<const YDModule*>& ms) {
  if (ms.empty()) throw PreconditionError("empty direct sum");
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto* m : ms) {
    if (m->group() != ms.front()->group()) throw PreconditionError("modules over different groups");
    offset.push_back(total);
    total += m->dim();
  }
  CycloMatrix c(total * total, total * total);
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t i = 0; i < ms[a]->dim(); ++i) {
      const Element z = ms[a]->degree(i);
      for (std::size_t b = 0; b < ms.size(); ++b) {
        for (std::size_t j = 0; j < ms[b]->dim(); ++j) {
          // c(v_i (x) v_j) = (z . v_j) (x) v_i
          const auto [target, coeff] = ms[b]->act(z, j);
          const std::size_t row = (offset[b] + target) * total + offset[a] + i;
          const std::size_t col = (offset[a] + i) * total + offset[b] + j;
          c.set(row, col, CycloNumber::from_root(coeff));
        }
      }
    }
  }
  std::string prov = "yd-module";
  if (ms.size() > 1) prov = "yd-module-sum";
  return BraidedVectorSpace(total, std::move(c), prov);
}

bool c_squared_is_identity(const YDModule& m1, const YDModule& m2) {
  if (m1.group() != m2.group()) throw PreconditionError("modules over different groups");
  for (std::size_t a = 0; a < m1.dim(); ++a) {
    for (std::size_t b = 0; b < m2.dim(); ++b) {
      // c(a (x) b) = (deg a . b) (x) a, then c again.
      const auto [b1, s1] = m2.act(m1.degree(a), b);
      const auto [a1, s2] = m1.act(m2.degree(b1), a);
      if (a1 != a || b1 != b || !(s1 * s2).is_one()) return false;
    }
  }
  return true;
}

CentralFiber central_fiber(const YDModule& m) {
  return CentralFiber{m.rep().scalar_value(m.basepoint()), m.fiber_dim()};
}

}  // namespace yetter::yd
