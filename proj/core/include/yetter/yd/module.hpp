#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "yetter/grp/character.hpp"
#include "yetter/grp/subgroup.hpp"
#include "yetter/yd/braided.hpp"

namespace yetter::yd {

using grp::Element;
using grp::GroupPtr;

using Representation = std::variant<grp::Character, grp::MonomialRep>;

enum class TransversalOrder { Forward, Reversed };

/// M(O, rho) = Ind_{G^x}^G W ≃ kO (x) W. Basis vector g_y (x) w_k has index
/// pos(y) * d + k where pos is the position of y in the sorted class.
class YDModule {
 public:
  const GroupPtr& group() const { return cls_.group; }
  const grp::ConjugacyClass& conjugacy_class() const { return cls_; }
  Element basepoint() const { return basepoint_; }
  const grp::MonomialRep& rep() const { return rep_; }
  bool from_character() const { return from_character_; }
  std::size_t fiber_dim() const { return rep_.dim(); }
  std::size_t dim() const { return cls_.size() * rep_.dim(); }

  std::size_t position(Element y) const;
  Element class_member(std::size_t pos) const { return cls_.members[pos]; }
  /// g_y with g_y ▷ x = y and g_x = e.
  Element transversal(std::size_t pos) const { return transversal_[pos]; }
  /// t_{h,y} = g_{h▷y}^-1 h g_y, an element of G^x.
  Element t(Element h, std::size_t pos) const;
  /// Degree (group grading) of a basis vector.
  Element degree(std::size_t basis) const { return cls_.members[basis / rep_.dim()]; }
  /// h . basis = coefficient * target basis vector.
  std::pair<std::size_t, RootOfUnity> act(Element h, std::size_t basis) const;

 private:
  friend YDModule build_yd_module(const grp::ConjugacyClass&, const Representation&, TransversalOrder,
                                  std::optional<Element>);
  friend YDModule build_yd_module_with_transversal(const grp::ConjugacyClass&, const Representation&, Element,
                                                   std::vector<Element>);
  YDModule(grp::ConjugacyClass cls, Element basepoint, grp::MonomialRep rep, bool from_character)
      : cls_(std::move(cls)), basepoint_(basepoint), rep_(std::move(rep)), from_character_(from_character) {}

  grp::ConjugacyClass cls_;
  Element basepoint_;
  grp::MonomialRep rep_;
  bool from_character_;
  std::vector<Element> transversal_;
};

/// Builds M(O, rho). rho must be defined on the centralizer of the basepoint
/// (default: the class representative). The transversal comes from a
/// breadth-first search from the basepoint over the group generators.
YDModule build_yd_module(const grp::ConjugacyClass& cls, const Representation& rho,
                         TransversalOrder order = TransversalOrder::Forward,
                         std::optional<Element> basepoint = std::nullopt);

/// Same, with an explicit transversal: transversal[pos] ▷ basepoint must be the
/// class member at pos, and the basepoint's entry must be the identity.
YDModule build_yd_module_with_transversal(const grp::ConjugacyClass& cls, const Representation& rho,
                                          Element basepoint, std::vector<Element> transversal);

/// c(g_z u (x) g_y w) = g_{z▷y} (t_{z,y} . w) (x) g_z u.
BraidedVectorSpace braiding_of(const YDModule& m);
/// Braiding of the direct sum of modules over one group, basis in module order.
BraidedVectorSpace braiding_of_sum(const std::vector<const YDModule*>& ms);

/// Whether c_{M2,M1} c_{M1,M2} is the identity on M1 (x) M2.
bool c_squared_is_identity(const YDModule& m1, const YDModule& m2);

/// The action of the basepoint x on its fiber W: a scalar, or nullopt when
/// x does not act by a scalar.
struct CentralFiber {
  std::optional<RootOfUnity> scalar;
  std::size_t dim = 0;
};
CentralFiber central_fiber(const YDModule& m);

}  // namespace yetter::yd
