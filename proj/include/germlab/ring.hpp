#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germlab/field.hpp"
#include "germlab/monomial.hpp"

namespace germlab {

/// Thrown when polynomials from different rings meet.
struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Variable names, coefficient field and the active monomial order.
template <class K>
class Ring {
 public:
  Ring(std::vector<std::string> names, Field<K> field = {}, MonomialOrder order = MonomialOrder::degrevlex())
      : names_(std::move(names)), field_(field), order_(order) {
    if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables (max 16)");
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const Field<K>& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t require_index(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown variable '" + name + "'");
    return *i;
  }

  bool same_as(const Ring& o) const { return names_ == o.names_ && field_ == o.field_ && order_ == o.order_; }
  /// Same variables and field; orders may differ.
  bool compatible(const Ring& o) const { return names_ == o.names_ && field_ == o.field_; }

 private:
  std::vector<std::string> names_;
  Field<K> field_;
  MonomialOrder order_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(std::vector<std::string> names, Field<K> field = {},
                     MonomialOrder order = MonomialOrder::degrevlex()) {
  return std::make_shared<const Ring<K>>(std::move(names), field, order);
}

template <class K>
RingPtr<K> with_order(const RingPtr<K>& r, MonomialOrder order) {
  if (r->order() == order) return r;
  return make_ring<K>(r->names(), r->field(), order);
}

/// Ring with extra variables prepended (used for deformation parameters,
/// Rabinowitsch variables and elimination tags).
template <class K>
RingPtr<K> prepend_vars(const RingPtr<K>& r, const std::vector<std::string>& extra,
                        MonomialOrder order = MonomialOrder::degrevlex()) {
  std::vector<std::string> names = extra;
  names.insert(names.end(), r->names().begin(), r->names().end());
  return make_ring<K>(std::move(names), r->field(), order);
}

}  // namespace germlab
